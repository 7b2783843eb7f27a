//! Command implementations behind the CLI: validation suites, deformation
//! sweeps, group and Grassmannian checks, numeric geometry runs. Reports
//! are deterministic for a fixed (config, seed): checks are sorted by
//! name, every sampled element is recorded, and timing stays out of the
//! serialized form.

use crate::catalog::{semidirect_factor, AssocAlgebra, DeformedGroup};
use crate::chart::{affine_parts, base_symmetry_word, sigma_geometric, symmetry_word, Outcome};
use crate::descriptor::{
    parse_matrix, DeformationSpec, GrassmannSpec, GroupSpec, InstanceSpec, RingSel,
};
use crate::error::{Error, Result};
use crate::geometry::{density_invariance_check, JacobianMode};
use crate::grassmann::GrassmannPoint;
use crate::homotope::{certify, structural_witness, Jts};
use crate::lie::{deformed_bracket, jordan_lie, validate_jordan_pair, validate_jts, ValidatorReport};
use crate::linalg::Mat;
use crate::scalar::{Fp, Ring, F64};
use crate::spaces::{enumerate_fp_elements, DeformedSpace, HomotopeSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ring: Option<RingSel>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ring: None,
            seed: 17,
            samples: 100,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub ring: String,
    pub seed: u64,
    pub samples: usize,
    pub instance: String,
    pub checks: Vec<CheckResult>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl RunReport {
    fn new(command: &str, ring: &str, cfg: &RunConfig, instance: &str) -> Self {
        RunReport {
            command: command.into(),
            ring: ring.into(),
            seed: cfg.seed,
            samples: cfg.samples,
            instance: instance.into(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn push(&mut self, name: &str, pass: bool, details: Vec<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            pass,
            details,
        });
    }

    fn absorb_validator<R: Ring>(&mut self, prefix: &str, rep: &ValidatorReport<R>) {
        for axiom in &rep.axioms {
            let mut details = Vec::new();
            for w in &axiom.witnesses {
                details.push(format!(
                    "witness inputs {:?} lhs {} rhs {}",
                    w.inputs.iter().map(|m| m.render()).collect::<Vec<_>>(),
                    w.lhs.render(),
                    w.rhs.render()
                ));
            }
            self.push(&format!("{prefix}.{}", axiom.name), axiom.pass, details);
        }
    }

    fn finish(mut self) -> RunReport {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// UTF-8, newline-terminated JSON.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

fn fnv64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn child_rng(seed: u64, check: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv64(check))
}

/// Scalar sampling for seeded sweeps.
pub trait SampleRing: Ring {
    fn sample(proto: &Self, rng: &mut ChaCha8Rng) -> Self;
}

impl SampleRing for crate::scalar::Rat {
    fn sample(_proto: &Self, rng: &mut ChaCha8Rng) -> Self {
        crate::scalar::rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))
    }
}

impl SampleRing for Fp {
    fn sample(proto: &Self, rng: &mut ChaCha8Rng) -> Self {
        proto.embed_i64(rng.gen_range(0..proto.modulus()) as i64)
    }
}

impl SampleRing for F64 {
    fn sample(_proto: &Self, rng: &mut ChaCha8Rng) -> Self {
        F64(rng.gen_range(-2.0..2.0))
    }
}

pub fn sample_mat<R: SampleRing>(
    shape: (usize, usize),
    proto: &R,
    rng: &mut ChaCha8Rng,
) -> Mat<R> {
    Mat::from_fn(shape.0, shape.1, |_, _| R::sample(proto, rng))
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

fn validate_generic<R: SampleRing>(
    spec: &InstanceSpec,
    cfg: &RunConfig,
    ring_label: &str,
    proto: &R,
) -> Result<RunReport> {
    let mut report = RunReport::new("validate", ring_label, cfg, &spec.name);
    match spec.kind.as_str() {
        "rectangular" | "tensor" => {
            let pair = spec.build_pair(proto)?;
            report.absorb_validator("pair", &validate_jordan_pair(&pair));
            if spec.kind == "rectangular" {
                let jts = spec.build_jts(proto)?;
                report.absorb_validator("jts", &validate_jts(&jts));
                report.absorb_validator("lts", &crate::lie::validate_lts(&jordan_lie(&jts)));
            }
        }
        "algebra" => {
            let alg = spec.build_algebra(proto)?;
            let mut rng = child_rng(cfg.seed, "validate.J2");
            let samples: Vec<(Mat<R>, Mat<R>)> = (0..cfg.samples)
                .map(|_| {
                    (
                        sample_mat(alg.shape(), proto, &mut rng),
                        sample_mat(alg.shape(), proto, &mut rng),
                    )
                })
                .collect();
            let rep = crate::lie::validate_jordan_algebra(&alg, &samples);
            report.absorb_validator("algebra", &rep);
            let rendered: Vec<String> = samples
                .iter()
                .map(|(x, y)| format!("({}, {})", x.render(), y.render()))
                .collect();
            report.push("algebra.J2.samples", true, rendered);
        }
        other => return Err(Error::UnknownInstance(other.into())),
    }
    Ok(report.finish())
}

pub fn cmd_validate(spec: &InstanceSpec, cfg: &RunConfig) -> Result<RunReport> {
    let ring = effective_ring(spec.ring()?, cfg)?;
    match ring {
        RingSel::Rational => validate_generic(spec, cfg, "q", &ring.proto_rat()?),
        RingSel::Gf(_) => validate_generic(spec, cfg, &ring.label(), &ring.proto_fp()?),
        RingSel::Float => Err(Error::ParseError(
            "validation suites need an exact ring (q or gf:p)".into(),
        )),
    }
}

fn effective_ring(declared: RingSel, cfg: &RunConfig) -> Result<RingSel> {
    match cfg.ring {
        None => Ok(declared),
        Some(r) if r == declared => Ok(declared),
        Some(r) => Err(Error::ParseError(format!(
            "ring flag {} conflicts with instance ring {}",
            r.label(),
            declared.label()
        ))),
    }
}

// ---------------------------------------------------------------------------
// deform
// ---------------------------------------------------------------------------

fn deform_element<R: SampleRing>(
    spec: &InstanceSpec,
    deformation: &Value,
    cfg: &RunConfig,
    ring_label: &str,
    proto: &R,
    exhaustive: Option<Vec<Mat<R>>>,
) -> Result<RunReport> {
    let pair = spec.build_pair(proto)?;
    let a = parse_matrix(deformation, pair.minus_shape(), proto)?;
    let space = DeformedSpace::new(pair.clone(), a.clone())?;
    let mut report = RunReport::new("deform", ring_label, cfg, &spec.name);

    // membership census
    match &exhaustive {
        Some(all) => {
            let count = space.members(all).count();
            report.push(
                "membership.count",
                true,
                vec![format!("{count} of {}", all.len())],
            );
        }
        None => {
            let mut rng = child_rng(cfg.seed, "deform.membership");
            let mut count = 0usize;
            let mut sampled = Vec::new();
            for _ in 0..cfg.samples {
                let x = sample_mat(pair.plus_shape(), proto, &mut rng);
                if space.is_member(&x) {
                    count += 1;
                }
                sampled.push(x.render());
            }
            sampled.insert(0, format!("{count} of {}", cfg.samples));
            report.push("membership.count", true, sampled);
        }
    }

    // Lie triple system of the deformed chart
    let lts = space.lie_triple();
    report.absorb_validator("lts", &crate::lie::validate_lts(&lts));

    // geometric product vs closed form on seeded member pairs
    let mut rng = child_rng(cfg.seed, "deform.word_vs_closed");
    let mut agree = 0usize;
    let mut tried = 0usize;
    let mut mismatch = Vec::new();
    let mut recorded = Vec::new();
    let mut attempts = 0usize;
    while tried < cfg.samples && attempts < cfg.samples * 50 {
        attempts += 1;
        let x = sample_mat(pair.plus_shape(), proto, &mut rng);
        let y = sample_mat(pair.plus_shape(), proto, &mut rng);
        if !space.is_member(&x) || !space.is_member(&y) {
            continue;
        }
        let closed = match space.mu(&x, &y) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let word = match sigma_geometric(&pair, &a, &x, &y) {
            Ok(Outcome::Value(v)) => v,
            _ => continue,
        };
        tried += 1;
        recorded.push(format!("({}, {})", x.render(), y.render()));
        if word == closed {
            agree += 1;
        } else {
            mismatch.push(format!(
                "x={} y={} word={} closed={}",
                x.render(),
                y.render(),
                word.render(),
                closed.render()
            ));
        }
    }
    let mut details = vec![format!("{agree} of {tried} agree")];
    details.extend(mismatch.iter().cloned());
    details.extend(recorded);
    report.push("product.word_vs_closed", agree == tried && tried > 0, details);

    // affine parts of sigma_x sigma_0
    let mut rng = child_rng(cfg.seed, "deform.affine_parts");
    let mut pass = true;
    let mut details = Vec::new();
    let mut done = 0usize;
    let mut attempts = 0usize;
    while done < 5.min(cfg.samples) && attempts < 200 {
        attempts += 1;
        let x = sample_mat(pair.plus_shape(), proto, &mut rng);
        if !space.is_member(&x) {
            continue;
        }
        let w = base_symmetry_word(&a).then(&match symmetry_word(&pair, &a, &x) {
            Ok(w) => w,
            Err(_) => continue,
        });
        let (tr, lin) = match affine_parts(&pair, &w) {
            Ok(v) => v,
            Err(_) => continue,
        };
        done += 1;
        let expect_tr = x
            .scale(&proto.embed_i64(2))
            .add(&pair.q_plus_apply(&x, &a));
        let expect_lin = pair.bergman_plus(&x, &a.neg());
        if tr != expect_tr || lin != expect_lin {
            pass = false;
            details.push(format!("mismatch at x = {}", x.render()));
        } else {
            details.push(format!("x = {}", x.render()));
        }
    }
    report.push("product.affine_parts", pass && done > 0, details);

    Ok(report.finish())
}

fn deform_alpha<R: SampleRing>(
    spec: &InstanceSpec,
    deformation: &Value,
    cfg: &RunConfig,
    ring_label: &str,
    proto: &R,
    exhaustive: Option<Vec<Mat<R>>>,
) -> Result<RunReport> {
    let jts = spec.build_jts(proto)?;
    let n = jts.rank();
    let alpha_mat = parse_matrix(deformation, (n, n), proto)?;
    let mut report = RunReport::new("deform", ring_label, cfg, &spec.name);

    // certification is itself a check; a failure carries the witness
    let alpha = match structural_witness(&jts, &alpha_mat) {
        None => certify(&jts, alpha_mat)?,
        Some((j, k, l, lhs, rhs)) => {
            report.push(
                "structural_certification",
                false,
                vec![format!(
                    "basis triple ({j},{k},{l}): T(ax,y,az) = {} but a T(x,ay,z) = {}",
                    lhs.render(),
                    rhs.render()
                )],
            );
            return Ok(report.finish());
        }
    };
    report.push("structural_certification", true, vec![]);

    let space = HomotopeSpace::new(jts.clone(), alpha.clone())?;
    match &exhaustive {
        Some(all) => {
            let count = all.iter().filter(|x| space.is_member(x)).count();
            report.push(
                "membership.count",
                true,
                vec![format!("{count} of {}", all.len())],
            );
        }
        None => {
            let mut rng = child_rng(cfg.seed, "deform.membership");
            let mut count = 0usize;
            let mut sampled = Vec::new();
            for _ in 0..cfg.samples {
                let x = sample_mat(jts.shape(), proto, &mut rng);
                if space.is_member(&x) {
                    count += 1;
                }
                sampled.push(x.render());
            }
            sampled.insert(0, format!("{count} of {}", cfg.samples));
            report.push("membership.count", true, sampled);
        }
    }

    // bracket tensor: deformed bracket = Jordan-Lie of the homotope
    let direct = deformed_bracket(&jts, &alpha)?;
    let via = jordan_lie(&crate::homotope::alpha_homotope(&jts, &alpha)?);
    report.push(
        "bracket.homotope_functor",
        direct.tensor() == via.tensor(),
        vec![],
    );
    report.absorb_validator("lts", &crate::lie::validate_lts(&direct));

    // c-duality
    let negated = deformed_bracket(&jts, &alpha.neg())?;
    report.push(
        "bracket.c_duality",
        negated.tensor() == direct.c_dual().tensor(),
        vec![],
    );

    Ok(report.finish())
}

pub fn cmd_deform(
    spec: &InstanceSpec,
    deformation: &DeformationSpec,
    cfg: &RunConfig,
) -> Result<RunReport> {
    let ring = effective_ring(spec.ring()?, cfg)?;
    match (ring, deformation.kind.as_str()) {
        (RingSel::Rational, "element") => deform_element(
            spec,
            &deformation.value,
            cfg,
            "q",
            &ring.proto_rat()?,
            None,
        ),
        (RingSel::Gf(_), "element") => {
            let proto = ring.proto_fp()?;
            let pair = spec.build_pair(&proto)?;
            let all = enumerate_fp_elements(pair.plus_shape(), &proto);
            deform_element(spec, &deformation.value, cfg, &ring.label(), &proto, Some(all))
        }
        (RingSel::Rational, "alpha") => {
            deform_alpha(spec, &deformation.value, cfg, "q", &ring.proto_rat()?, None)
        }
        (RingSel::Gf(_), "alpha") => {
            let proto = ring.proto_fp()?;
            let jts = spec.build_jts(&proto)?;
            let all = enumerate_fp_elements(jts.shape(), &proto);
            deform_alpha(spec, &deformation.value, cfg, &ring.label(), &proto, Some(all))
        }
        (RingSel::Float, _) => Err(Error::ParseError(
            "deformation sweeps need an exact ring (q or gf:p)".into(),
        )),
        (_, other) => Err(Error::ParseError(format!(
            "unknown deformation kind {other:?} (expected element | alpha)"
        ))),
    }
}

// ---------------------------------------------------------------------------
// group
// ---------------------------------------------------------------------------

fn group_checks<R: SampleRing>(
    alg: AssocAlgebra<R>,
    a: Mat<R>,
    cfg: &RunConfig,
    ring_label: &str,
    proto: &R,
    exhaustive: Option<Vec<Mat<R>>>,
) -> Result<RunReport> {
    let group = DeformedGroup::new(alg, a)?;
    let mut report = RunReport::new("group", ring_label, cfg, &group.alg.name);

    let members: Vec<Mat<R>> = match &exhaustive {
        Some(all) => all.iter().filter(|x| group.is_member(x)).cloned().collect(),
        None => {
            let mut rng = child_rng(cfg.seed, "group.members");
            let mut out = Vec::new();
            let mut attempts = 0;
            while out.len() < cfg.samples && attempts < cfg.samples * 20 {
                attempts += 1;
                let x = sample_mat(group.alg.shape(), proto, &mut rng);
                if group.is_member(&x) {
                    out.push(x);
                }
            }
            out
        }
    };
    report.push(
        "members.count",
        !members.is_empty(),
        vec![format!("{}", members.len())],
    );

    // unit and inverse laws over the member set
    let mut pass = true;
    let mut details = Vec::new();
    for x in &members {
        let ok = group.product(x, &group.alg.zero()).map(|v| v == *x).unwrap_or(false)
            && group.product(&group.alg.zero(), x).map(|v| v == *x).unwrap_or(false);
        if !ok {
            pass = false;
            details.push(format!("unit law fails at {}", x.render()));
        }
        match group.inverse(x) {
            Ok(inv) => {
                let lhs = group.product(x, &inv);
                let rhs = group.product(&inv, x);
                if !(lhs.map(|v| v.is_zero()).unwrap_or(false)
                    && rhs.map(|v| v.is_zero()).unwrap_or(false))
                {
                    pass = false;
                    details.push(format!("inverse law fails at {}", x.render()));
                }
            }
            Err(_) => {
                pass = false;
                details.push(format!("no inverse at {}", x.render()));
            }
        }
        if details.len() > 5 {
            break;
        }
    }
    report.push("axioms.unit_inverse", pass, details);

    // associativity and closure on seeded member triples
    let mut rng = child_rng(cfg.seed, "group.assoc");
    let mut pass = true;
    let mut details = Vec::new();
    if !members.is_empty() {
        for _ in 0..cfg.samples {
            let x = &members[rng.gen_range(0..members.len())];
            let y = &members[rng.gen_range(0..members.len())];
            let z = &members[rng.gen_range(0..members.len())];
            let lhs = group.product(&group.product(x, y)?, z);
            let rhs = group.product(x, &group.product(y, z)?);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) if l == r => {}
                _ => {
                    pass = false;
                    details.push(format!(
                        "associativity fails at ({}, {}, {})",
                        x.render(),
                        y.render(),
                        z.render()
                    ));
                    if details.len() > 5 {
                        break;
                    }
                }
            }
        }
    }
    report.push("axioms.associativity_sampled", pass, details);

    // modular character on seeded members
    let mut rng = child_rng(cfg.seed, "group.modular");
    let mut values = Vec::new();
    let mut pass = true;
    for _ in 0..cfg.samples.min(20) {
        if members.is_empty() {
            break;
        }
        let g = &members[rng.gen_range(0..members.len())];
        match group.adjoint_and_modular(g) {
            Ok((_, det)) => {
                if !det.is_unit() {
                    pass = false;
                }
                values.push(format!("det Ad({}) = {det}", g.render()));
            }
            Err(e) => {
                pass = false;
                values.push(format!("error at {}: {e}", g.render()));
            }
        }
    }
    report.push("modular_character", pass, values);

    // infinitesimal bracket against the closed form
    let mut rng = child_rng(cfg.seed, "group.bracket");
    let mut pass = true;
    let mut details = Vec::new();
    for _ in 0..cfg.samples.min(20) {
        let u = sample_mat(group.alg.shape(), proto, &mut rng);
        let v = sample_mat(group.alg.shape(), proto, &mut rng);
        if group.dual_bracket(&u, &v) != group.bracket(&u, &v) {
            pass = false;
            details.push(format!("({}, {})", u.render(), v.render()));
        }
    }
    report.push("bracket.dual_number", pass, details);

    // semidirect factorization for idempotent deformations
    if group.alg.product(&group.a, &group.a) == group.a && !group.a.is_zero() {
        let mut pass = true;
        let mut details = Vec::new();
        for x in &members {
            match semidirect_factor(&group, &group.a, x) {
                Ok((g, h)) => {
                    if group.product(&g, &h).map(|v| v == *x).unwrap_or(false) {
                        continue;
                    }
                    pass = false;
                    details.push(format!("reconstruction fails at {}", x.render()));
                }
                Err(e) => {
                    pass = false;
                    details.push(format!("factorization fails at {}: {e}", x.render()));
                }
            }
            if details.len() > 5 {
                break;
            }
        }
        report.push("semidirect.factorization", pass, details);
    }

    Ok(report.finish())
}

pub fn cmd_group(spec: &GroupSpec, cfg: &RunConfig) -> Result<RunReport> {
    let ring = effective_ring(spec.ring()?, cfg)?;
    match ring {
        RingSel::Rational => {
            let proto = ring.proto_rat()?;
            let (alg, a) = spec.build(&proto)?;
            group_checks(alg, a, cfg, "q", &proto, None)
        }
        RingSel::Gf(p) => {
            let proto = ring.proto_fp()?;
            let (alg, a) = spec.build(&proto)?;
            let n = spec.n * spec.n;
            // enumerate only at desk scale
            let exhaustive = if (p as usize).pow(n as u32) <= 100_000 {
                Some(enumerate_fp_elements((spec.n, spec.n), &proto))
            } else {
                None
            };
            group_checks(alg, a, cfg, &ring.label(), &proto, exhaustive)
        }
        RingSel::Float => Err(Error::ParseError(
            "group sweeps need an exact ring (q or gf:p)".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// grassmann
// ---------------------------------------------------------------------------

fn grassmann_checks<R: SampleRing>(
    spec: &GrassmannSpec,
    cfg: &RunConfig,
    ring_label: &str,
    proto: &R,
) -> Result<RunReport> {
    let beta = spec.build(proto)?;
    let mut report = RunReport::new("grassmann", ring_label, cfg, "grassmann");
    let jts = Jts::rectangular(spec.q, spec.p, proto.ring_zero());
    let alpha = beta.chart_structural_map(&jts)?;
    report.push("chart_alpha.certified", true, vec![alpha.matrix().render()]);
    let space = HomotopeSpace::new(jts.clone(), alpha.clone())?;

    // orthocomplement formula on seeded graphs
    let mut rng = child_rng(cfg.seed, "grassmann.complement");
    let b1_inv = beta.b1.inverse()?;
    let mut pass = true;
    let mut details = Vec::new();
    for _ in 0..cfg.samples {
        let x = sample_mat((spec.q, spec.p), proto, &mut rng);
        let graph = GrassmannPoint::graph(&x);
        let comp = match beta.complement(&graph) {
            Ok(c) => c,
            Err(e) => {
                pass = false;
                details.push(format!("complement failed at X = {}: {e}", x.render()));
                continue;
            }
        };
        // expected: the graph over the second factor of -B1^{-1} X^t B2
        let a = b1_inv.matmul(&x.transpose()).matmul(&beta.b2).neg();
        let expect_basis = Mat::from_fn(spec.p + spec.q, spec.q, |r, c| {
            if r < spec.p {
                a.at(r, c).clone()
            } else if r - spec.p == c {
                proto.ring_one()
            } else {
                proto.ring_zero()
            }
        });
        let expect = GrassmannPoint::from_basis(&expect_basis)?;
        if comp != expect {
            pass = false;
            details.push(format!("mismatch at X = {}", x.render()));
        } else {
            details.push(format!("X = {}", x.render()));
        }
        if details.len() > cfg.samples {
            break;
        }
    }
    report.push("complement.graph_formula", pass, details);

    // subspace reflection vs chart product
    let mut rng = child_rng(cfg.seed, "grassmann.chart");
    let mut agree = 0usize;
    let mut tried = 0usize;
    let mut details = Vec::new();
    let mut attempts = 0usize;
    while tried < cfg.samples && attempts < cfg.samples * 50 {
        attempts += 1;
        let x = sample_mat((spec.q, spec.p), proto, &mut rng);
        let y = sample_mat((spec.q, spec.p), proto, &mut rng);
        if !space.is_member(&x) || !space.is_member(&y) {
            continue;
        }
        let chart = match space.sigma(&x, &y) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let ex = GrassmannPoint::graph(&x);
        let fy = GrassmannPoint::graph(&y);
        let reflected = match beta.reflect(&ex, &fy) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let linear = match reflected.chart(spec.p) {
            Some(v) => v,
            None => continue,
        };
        tried += 1;
        if linear == chart {
            agree += 1;
            details.push(format!("X = {}, Y = {}", x.render(), y.render()));
        } else {
            details.push(format!(
                "mismatch X = {} Y = {}: subspace {} chart {}",
                x.render(),
                y.render(),
                linear.render(),
                chart.render()
            ));
        }
    }
    details.insert(0, format!("{agree} of {tried} agree"));
    report.push(
        "reflection.chart_agreement",
        agree == tried && tried > 0,
        details,
    );

    Ok(report.finish())
}

pub fn cmd_grassmann(spec: &GrassmannSpec, cfg: &RunConfig) -> Result<RunReport> {
    let ring = effective_ring(spec.ring()?, cfg)?;
    match ring {
        RingSel::Rational => grassmann_checks(spec, cfg, "q", &ring.proto_rat()?),
        RingSel::Gf(_) => grassmann_checks(spec, cfg, &ring.label(), &ring.proto_fp()?),
        RingSel::Float => Err(Error::ParseError(
            "grassmann sweeps need an exact ring (q or gf:p)".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// geometry
// ---------------------------------------------------------------------------

pub fn cmd_geometry(
    spec: &InstanceSpec,
    deformation: &DeformationSpec,
    cfg: &RunConfig,
) -> Result<RunReport> {
    let ring = effective_ring(spec.ring()?, cfg)?;
    let proto = ring.proto_f64().map_err(|_| {
        Error::ParseError("geometry runs need ring f64".into())
    })?;
    if deformation.kind != "alpha" {
        return Err(Error::ParseError(
            "geometry runs take an alpha deformation".into(),
        ));
    }
    let jts = spec.build_jts(&proto)?;
    let n = jts.rank();
    let alpha_mat = parse_matrix(&deformation.value, (n, n), &proto)?;
    let alpha = certify(&jts, alpha_mat)?;
    let space = HomotopeSpace::new(jts.clone(), alpha)?;
    let mut report = RunReport::new("geometry", "f64", cfg, &spec.name);

    // trace-form Gram rank of the homotope (degeneracy is reported, not assumed)
    let gram_rank = crate::geometry::trace_gram(
        &crate::homotope::alpha_homotope(&jts, space.alpha())?,
    )
    .rank();
    report.push(
        "trace_form.gram_rank",
        true,
        vec![format!("{gram_rank} of {n}")],
    );

    // dual-number differentials vs central differences
    let mut rng = child_rng(cfg.seed, "geometry.differentials");
    let mut max_rel = 0.0f64;
    let mut checked = 0usize;
    let mut details = Vec::new();
    let h = 1e-5;
    while checked < 50 && details.len() < 500 {
        let x = sample_mat(jts.shape(), &proto, &mut rng);
        let z = sample_mat(jts.shape(), &proto, &mut rng);
        let dir = sample_mat(jts.shape(), &proto, &mut rng);
        if !space.is_member(&x) || !space.is_member(&z) {
            details.push("skip".into());
            continue;
        }
        let lifted = space.map_scalars(|c| crate::dual::Dual::constant(*c));
        let xl = x.map(|c| crate::dual::Dual::constant(*c));
        let pert = Mat::from_fn(z.rows, z.cols, |r, c| {
            crate::dual::Dual::new(*z.at(r, c), *dir.at(r, c))
        });
        let ad = match lifted.sigma(&xl, &pert) {
            Ok(v) => v,
            Err(_) => {
                details.push("skip".into());
                continue;
            }
        };
        let step = dir.scale(&F64(h));
        let (plus, minus) = match (space.sigma(&x, &z.add(&step)), space.sigma(&x, &z.sub(&step))) {
            (Ok(p), Ok(m)) => (p, m),
            _ => {
                details.push("skip".into());
                continue;
            }
        };
        checked += 1;
        let mut rel = 0.0f64;
        for i in 0..n {
            let fd = (plus.flatten().at(i, 0).0 - minus.flatten().at(i, 0).0) / (2.0 * h);
            let an = ad.flatten().at(i, 0).eps.0;
            let denom = an.abs().max(1.0);
            rel = rel.max(((an - fd) / denom).abs());
        }
        max_rel = max_rel.max(rel);
        details.push(format!("x = {}, z = {}, rel = {rel:.3e}", x.render(), z.render()));
    }
    details.insert(0, format!("max rel error {max_rel:.3e} over {checked}"));
    report.push(
        "differentials.dual_vs_central",
        checked >= 50 && max_rel < 1e-6,
        details,
    );

    // density invariance under a seeded transvection
    let mut rng = child_rng(cfg.seed, "geometry.invariance");
    let x0 = sample_mat(jts.shape(), &proto, &mut rng);
    let origin = Mat::zero(jts.shape().0, jts.shape().1, &proto);
    let samples: Vec<Mat<F64>> = (0..cfg.samples.max(20))
        .map(|_| sample_mat(jts.shape(), &proto, &mut rng))
        .collect();
    let rendered: Vec<String> = samples.iter().map(|m| m.render()).collect();
    let dual = density_invariance_check(&space, &x0, &origin, &samples, JacobianMode::DualNumber);
    let mut details = vec![format!(
        "max rel error {:.3e} over {} (skipped {})",
        dual.max_rel_error, dual.checked, dual.skipped
    )];
    details.extend(rendered.iter().cloned());
    report.push(
        "invariance.dual_jacobian",
        dual.checked > 0 && dual.max_rel_error < 1e-8,
        details,
    );
    let fd = density_invariance_check(
        &space,
        &x0,
        &origin,
        &samples,
        JacobianMode::CentralDifference { step: 1e-5 },
    );
    report.push(
        "invariance.central_difference_jacobian",
        fd.checked > 0 && fd.max_rel_error < 1e-6,
        vec![format!(
            "max rel error {:.3e} over {} (skipped {})",
            fd.max_rel_error, fd.checked, fd.skipped
        )],
    );

    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect11_spec(ring: &str) -> InstanceSpec {
        InstanceSpec::from_json(&format!(
            r#"{{ "name": "rect(1,1)", "ring": "{ring}",
                 "kind": "rectangular", "parameters": {{"p": 1, "q": 1}} }}"#
        ))
        .unwrap()
    }

    #[test]
    fn validate_rect11_gf5() {
        let spec = rect11_spec("gf:5");
        let cfg = RunConfig::default();
        let rep = cmd_validate(&spec, &cfg).unwrap();
        assert!(rep.all_pass());
    }

    #[test]
    fn validate_rejects_bad_ring_flag() {
        let spec = rect11_spec("gf:5");
        let cfg = RunConfig {
            ring: Some(RingSel::Rational),
            ..Default::default()
        };
        assert!(matches!(cmd_validate(&spec, &cfg), Err(Error::ParseError(_))));
    }

    #[test]
    fn corrupted_tensor_fails_validation() {
        // a tensor instance with T(e,e,e) = e and no symmetry partner
        let text = r#"{ "name": "broken", "ring": "q", "kind": "tensor",
                        "parameters": {"rank": 2},
                        "structure_tensor": {
                          "plus":  [[[["1","0"],["0","0"]],[["0","0"],["0","0"]]],
                                    [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]],
                          "minus": [[[["0","0"],["0","0"]],[["0","0"],["0","0"]]],
                                    [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]]
                        } }"#;
        let spec = InstanceSpec::from_json(text).unwrap();
        let rep = cmd_validate(&spec, &RunConfig::default()).unwrap();
        assert!(!rep.all_pass());
        // the failing axiom carries a witness
        let failing: Vec<_> = rep.checks.iter().filter(|c| !c.pass).collect();
        assert!(!failing.is_empty());
        assert!(failing.iter().any(|c| !c.details.is_empty()));
    }

    #[test]
    fn deform_membership_count_gf7() {
        let spec = rect11_spec("gf:7");
        let deformation = DeformationSpec {
            kind: "element".into(),
            value: serde_json::json!([["1"]]),
        };
        let rep = cmd_deform(&spec, &deformation, &RunConfig::default()).unwrap();
        assert!(rep.all_pass());
        let membership = rep
            .checks
            .iter()
            .find(|c| c.name == "membership.count")
            .unwrap();
        assert_eq!(membership.details[0], "6 of 7");
    }

    #[test]
    fn deform_alpha_flat_report() {
        let spec = rect11_spec("q");
        let deformation = DeformationSpec {
            kind: "alpha".into(),
            value: serde_json::json!([["0"]]),
        };
        let rep = cmd_deform(&spec, &deformation, &RunConfig::default()).unwrap();
        assert!(rep.all_pass());
    }

    #[test]
    fn deform_alpha_non_structural_fails() {
        let spec = InstanceSpec::from_json(
            r#"{ "name": "rect(1,2)", "ring": "gf:5",
                 "kind": "rectangular", "parameters": {"p": 1, "q": 2} }"#,
        )
        .unwrap();
        let deformation = DeformationSpec {
            kind: "alpha".into(),
            value: serde_json::json!([["0", "1"], ["0", "0"]]),
        };
        let rep = cmd_deform(&spec, &deformation, &RunConfig::default()).unwrap();
        assert!(!rep.all_pass());
        let cert = rep
            .checks
            .iter()
            .find(|c| c.name == "structural_certification")
            .unwrap();
        assert!(!cert.pass);
        assert!(!cert.details.is_empty());
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = rect11_spec("q");
        let deformation = DeformationSpec {
            kind: "element".into(),
            value: serde_json::json!([["1"]]),
        };
        let cfg = RunConfig {
            samples: 25,
            ..Default::default()
        };
        let a = cmd_deform(&spec, &deformation, &cfg).unwrap().to_json_string();
        let b = cmd_deform(&spec, &deformation, &cfg).unwrap().to_json_string();
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn group_command_gf5() {
        let spec = GroupSpec::from_json(
            r#"{ "ring": "gf:5", "n": 2, "deformation": [["1","0"],["0","0"]] }"#,
        )
        .unwrap();
        let cfg = RunConfig {
            samples: 50,
            ..Default::default()
        };
        let rep = cmd_group(&spec, &cfg).unwrap();
        assert!(rep.all_pass());
        let members = rep.checks.iter().find(|c| c.name == "members.count").unwrap();
        assert_eq!(members.details[0], "500");
    }

    #[test]
    fn grassmann_command_identity_blocks() {
        let spec = GrassmannSpec::from_json(
            r#"{ "ring": "q", "p": 2, "q": 2,
                 "b1": [["1","0"],["0","1"]], "b2": [["1","0"],["0","1"]] }"#,
        )
        .unwrap();
        let cfg = RunConfig {
            samples: 20,
            ..Default::default()
        };
        let rep = cmd_grassmann(&spec, &cfg).unwrap();
        assert!(rep.all_pass());
    }

    #[test]
    fn geometry_command_scalar_model() {
        let spec = rect11_spec("f64");
        let deformation = DeformationSpec {
            kind: "alpha".into(),
            value: serde_json::json!([[1.0]]),
        };
        let cfg = RunConfig {
            samples: 20,
            ..Default::default()
        };
        let rep = cmd_geometry(&spec, &deformation, &cfg).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_json_string());
    }
}
