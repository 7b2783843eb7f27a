//! Jordan triple systems, structural transformations, the structure
//! variety, alpha-homotopes, and the induced-pair construction for a
//! structural pair of maps between Jordan pairs.

use crate::error::{Error, Result};
use crate::jordan::{apply_op, basis_elem, JordanPair, Tensor3};
use crate::linalg::Mat;
use crate::scalar::Ring;

#[derive(Clone, PartialEq, Debug)]
enum JtsKernel<R> {
    /// M(p,q) with T(x,y,z) = x y^t z + z y^t x.
    Rectangular,
    Tensor(Tensor3<R>),
}

/// A linear Jordan triple system (V, T).
#[derive(Clone, PartialEq, Debug)]
pub struct Jts<R> {
    pub name: String,
    shape: (usize, usize),
    kernel: JtsKernel<R>,
    proto: R,
}

impl<R: Ring> Jts<R> {
    /// Rectangular matrix JTS on M(p,q). For p = q = 1 this is the scalar
    /// triple system T(x,y,z) = 2xyz.
    pub fn rectangular(p: usize, q: usize, proto: R) -> Self {
        Jts {
            name: format!("rect_jts({p},{q})"),
            shape: (p, q),
            kernel: JtsKernel::Rectangular,
            proto,
        }
    }

    pub fn from_tensor(name: &str, shape: (usize, usize), t: Tensor3<R>, proto: R) -> Self {
        assert_eq!(t.out, shape.0 * shape.1);
        Jts {
            name: name.to_string(),
            shape,
            kernel: JtsKernel::Tensor(t),
            proto,
        }
    }

    pub fn proto(&self) -> &R {
        &self.proto
    }

    pub fn shape(&self) -> (usize, usize) {
        self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.0 * self.shape.1
    }

    pub fn zero(&self) -> Mat<R> {
        Mat::zero(self.shape.0, self.shape.1, &self.proto)
    }

    pub fn basis(&self, i: usize) -> Mat<R> {
        basis_elem(self.shape, i, &self.proto)
    }

    pub fn check_shape(&self, x: &Mat<R>) -> Result<()> {
        if x.shape() != self.shape {
            return Err(Error::ShapeMismatch {
                expected: format!("{:?}", self.shape),
                got: format!("{:?}", x.shape()),
            });
        }
        Ok(())
    }

    pub fn t(&self, x: &Mat<R>, y: &Mat<R>, z: &Mat<R>) -> Mat<R> {
        match &self.kernel {
            JtsKernel::Rectangular => {
                let yt = y.transpose();
                x.matmul(&yt).matmul(z).add(&z.matmul(&yt).matmul(x))
            }
            JtsKernel::Tensor(t) => {
                let out = t.eval(
                    x.flatten().entries(),
                    y.flatten().entries(),
                    z.flatten().entries(),
                );
                Mat::from_vec(self.rank(), 1, out).unflatten(self.shape.0, self.shape.1)
            }
        }
    }

    /// Operator z -> T(x, y, z).
    pub fn op_t(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        let n = self.rank();
        let mut op = Mat::zero(n, n, &self.proto);
        for l in 0..n {
            let col = self.t(x, y, &self.basis(l)).flatten();
            for i in 0..n {
                op.set(i, l, col.at(i, 0).clone());
            }
        }
        op
    }

    /// Q(x) y = (1/2) T(x, y, x).
    pub fn q_apply(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        self.t(x, y, x).map(|v| v.halve())
    }

    pub fn q_op(&self, x: &Mat<R>) -> Mat<R> {
        let n = self.rank();
        let mut op = Mat::zero(n, n, &self.proto);
        for k in 0..n {
            let col = self.q_apply(x, &self.basis(k)).flatten();
            for i in 0..n {
                op.set(i, k, col.at(i, 0).clone());
            }
        }
        op
    }

    /// B(x,y) = id - T(x,y) + Q(x)Q(y).
    pub fn bergman(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        let id = Mat::identity(self.rank(), &self.proto);
        id.sub(&self.op_t(x, y))
            .add(&self.q_op(x).matmul(&self.q_op(y)))
    }

    /// Quasi-inverse x^y = B(x,y)^{-1}(x - Q(x)y).
    pub fn quasi_inv(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        let b = self.bergman(x, y);
        let rhs = x.sub(&self.q_apply(x, y)).flatten();
        let sol = b.solve(&rhs).map_err(|_| Error::NotQuasiInvertible {
            x: x.render(),
            y: y.render(),
        })?;
        Ok(sol.unflatten(self.shape.0, self.shape.1))
    }

    /// The underlying Jordan pair (V, V) with T+ = T- = T.
    pub fn underlying_pair(&self) -> JordanPair<R> {
        let t = self.to_tensor();
        JordanPair::from_tensors(
            &format!("pair({})", self.name),
            self.shape,
            self.shape,
            t.clone(),
            t,
            self.proto.clone(),
        )
    }

    pub fn to_tensor(&self) -> Tensor3<R> {
        let n = self.rank();
        let mut t = Tensor3::zero(n, n, n, n, &self.proto);
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = self.t(&self.basis(j), &self.basis(k), &self.basis(l)).flatten();
                    for i in 0..n {
                        t.set_coeff(i, j, k, l, v.at(i, 0).clone());
                    }
                }
            }
        }
        t
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> Jts<S> {
        let kernel = match &self.kernel {
            JtsKernel::Rectangular => JtsKernel::Rectangular,
            JtsKernel::Tensor(t) => JtsKernel::Tensor(t.map(f)),
        };
        Jts {
            name: self.name.clone(),
            shape: self.shape,
            kernel,
            proto: f(&self.proto),
        }
    }
}

// ---------------------------------------------------------------------------
// Structural transformations
// ---------------------------------------------------------------------------

/// An endomorphism alpha of a JTS satisfying
/// `T(alpha x, y, alpha z) = alpha T(x, alpha y, z)`, together with the
/// name of the instance it was certified against. Operations that demand
/// structurality re-verify when handed a different instance.
#[derive(Clone, PartialEq, Debug)]
pub struct StructuralMap<R> {
    mat: Mat<R>,
    certified_for: String,
}

impl<R: Ring> StructuralMap<R> {
    pub fn matrix(&self) -> &Mat<R> {
        &self.mat
    }

    pub fn certified_for(&self) -> &str {
        &self.certified_for
    }

    pub fn apply(&self, x: &Mat<R>) -> Mat<R> {
        apply_op(&self.mat, x, (x.rows, x.cols))
    }

    pub fn neg(&self) -> StructuralMap<R> {
        StructuralMap {
            mat: self.mat.neg(),
            certified_for: self.certified_for.clone(),
        }
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> StructuralMap<S> {
        StructuralMap {
            mat: self.mat.map(f),
            certified_for: self.certified_for.clone(),
        }
    }
}

/// Check the structural identity on all basis triples; sufficient because
/// for fixed alpha both sides are trilinear in (x, y, z).
pub fn is_structural<R: Ring>(jts: &Jts<R>, alpha: &Mat<R>) -> bool {
    structural_witness(jts, alpha).is_none()
}

/// First basis triple violating the structural identity, if any.
pub fn structural_witness<R: Ring>(
    jts: &Jts<R>,
    alpha: &Mat<R>,
) -> Option<(usize, usize, usize, Mat<R>, Mat<R>)> {
    let n = jts.rank();
    assert_eq!(alpha.shape(), (n, n), "alpha must be an endomorphism of V");
    let shape = jts.shape();
    for j in 0..n {
        let x = jts.basis(j);
        let ax = apply_op(alpha, &x, shape);
        for k in 0..n {
            let y = jts.basis(k);
            let ay = apply_op(alpha, &y, shape);
            for l in 0..n {
                let z = jts.basis(l);
                let az = apply_op(alpha, &z, shape);
                let lhs = jts.t(&ax, &y, &az);
                let rhs = apply_op(alpha, &jts.t(&x, &ay, &z), shape);
                if lhs != rhs {
                    return Some((j, k, l, lhs, rhs));
                }
            }
        }
    }
    None
}

/// Certify alpha as a member of the structure variety of `jts`.
pub fn certify<R: Ring>(jts: &Jts<R>, alpha: Mat<R>) -> Result<StructuralMap<R>> {
    match structural_witness(jts, &alpha) {
        None => Ok(StructuralMap {
            mat: alpha,
            certified_for: jts.name.clone(),
        }),
        Some((j, k, l, lhs, rhs)) => Err(Error::NotStructural(format!(
            "basis triple ({j},{k},{l}): T(ax,y,az) = {} but a T(x,ay,z) = {}",
            lhs.render(),
            rhs.render()
        ))),
    }
}

fn require_certified<R: Ring>(jts: &Jts<R>, alpha: &StructuralMap<R>) -> Result<()> {
    if alpha.certified_for == jts.name {
        return Ok(());
    }
    // certified against a different instance: re-verify
    match structural_witness(jts, &alpha.mat) {
        None => Ok(()),
        Some((j, k, l, ..)) => Err(Error::NotStructural(format!(
            "alpha certified for {:?} fails on {:?} at basis triple ({j},{k},{l})",
            alpha.certified_for, jts.name
        ))),
    }
}

/// The alpha-homotope T_alpha(x,y,z) = T(x, alpha y, z), materialized on
/// the standard basis.
pub fn alpha_homotope<R: Ring>(jts: &Jts<R>, alpha: &StructuralMap<R>) -> Result<Jts<R>> {
    require_certified(jts, alpha)?;
    let n = jts.rank();
    let shape = jts.shape();
    let mut t = Tensor3::zero(n, n, n, n, jts.proto());
    for k in 0..n {
        let ay = apply_op(alpha.matrix(), &jts.basis(k), shape);
        for j in 0..n {
            for l in 0..n {
                let v = jts.t(&jts.basis(j), &ay, &jts.basis(l)).flatten();
                for i in 0..n {
                    t.set_coeff(i, j, k, l, v.at(i, 0).clone());
                }
            }
        }
    }
    Ok(Jts::from_tensor(
        &format!("{}_homotope", jts.name),
        shape,
        t,
        jts.proto().clone(),
    ))
}

/// Catalog request for certified structure-variety members.
#[derive(Clone, Debug, Default)]
pub struct VarietyRequest<R> {
    pub scalars: Vec<R>,
    pub quadratic: Vec<Mat<R>>,
    pub bergman_diagonal: Vec<Mat<R>>,
    pub include_identity: bool,
    pub include_neg_identity: bool,
}

/// Emit certified members of the structure variety: scalar multiples of
/// the identity, quadratic operators Q(a), and Bergman operators B(x,x).
pub fn structure_variety_members<R: Ring>(
    jts: &Jts<R>,
    request: &VarietyRequest<R>,
) -> Result<Vec<StructuralMap<R>>> {
    let n = jts.rank();
    let mut out = Vec::new();
    if request.include_identity {
        out.push(certify(jts, Mat::identity(n, jts.proto()))?);
    }
    if request.include_neg_identity {
        out.push(certify(jts, Mat::identity(n, jts.proto()).neg())?);
    }
    for s in &request.scalars {
        out.push(certify(jts, Mat::identity(n, jts.proto()).scale(s))?);
    }
    for a in &request.quadratic {
        out.push(certify(jts, jts.q_op(a))?);
    }
    for x in &request.bergman_diagonal {
        out.push(certify(jts, jts.bergman(x, x))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Structural pairs of maps between Jordan pairs, and the induced pair
// ---------------------------------------------------------------------------

/// A structural transformation between Jordan pairs: maps f: V+ -> W+ and
/// g: W- -> V- with T_W(fx, y, fz) = f T_V(x, gy, z) and
/// T_V(gu, v, gw) = g T_W(u, fv, w).
#[derive(Clone, PartialEq, Debug)]
pub struct PairStructural<R> {
    pub f: Mat<R>,
    pub g: Mat<R>,
}

pub fn certify_pair_structural<R: Ring>(
    pv: &JordanPair<R>,
    pw: &JordanPair<R>,
    f: Mat<R>,
    g: Mat<R>,
) -> Result<PairStructural<R>> {
    assert_eq!(f.shape(), (pw.plus_rank(), pv.plus_rank()));
    assert_eq!(g.shape(), (pv.minus_rank(), pw.minus_rank()));
    let fx = |x: &Mat<R>| apply_op(&f, &x.flatten(), pw.plus_shape());
    let gx = |b: &Mat<R>| apply_op(&g, &b.flatten(), pv.minus_shape());
    // first identity, on basis triples of V+ x W- x V+
    for j in 0..pv.plus_rank() {
        let x = pv.basis_plus(j);
        for k in 0..pw.minus_rank() {
            let y = pw.basis_minus(k);
            for l in 0..pv.plus_rank() {
                let z = pv.basis_plus(l);
                let lhs = pw.t_plus(&fx(&x), &y, &fx(&z));
                let rhs = fx(&pv.t_plus(&x, &gx(&y), &z));
                if lhs != rhs {
                    return Err(Error::NotStructural(format!(
                        "plus identity fails at basis triple ({j},{k},{l})"
                    )));
                }
            }
        }
    }
    // second identity, on basis triples of W- x V+ x W-
    for j in 0..pw.minus_rank() {
        let u = pw.basis_minus(j);
        for k in 0..pv.plus_rank() {
            let v = pv.basis_plus(k);
            for l in 0..pw.minus_rank() {
                let w = pw.basis_minus(l);
                let lhs = pv.t_minus(&gx(&u), &v, &gx(&w));
                let rhs = gx(&pw.t_minus(&u, &fx(&v), &w));
                if lhs != rhs {
                    return Err(Error::NotStructural(format!(
                        "minus identity fails at basis triple ({j},{k},{l})"
                    )));
                }
            }
        }
    }
    Ok(PairStructural { f, g })
}

/// The Jordan pair induced on (V+, W-) by a structural pair (f, g):
/// S+(a,b,c) = T+_V(a, g(b), c) and S-(u,v,w) = T-_W(u, f(v), w), together
/// with the two canonical homomorphisms (f, id) and (id, g), which are
/// verified on basis triples.
pub fn induced_pair<R: Ring>(
    pv: &JordanPair<R>,
    pw: &JordanPair<R>,
    fg: &PairStructural<R>,
) -> Result<JordanPair<R>> {
    let np = pv.plus_rank();
    let nm = pw.minus_rank();
    let gx = |b: &Mat<R>| apply_op(&fg.g, &b.flatten(), pv.minus_shape());
    let fx = |x: &Mat<R>| apply_op(&fg.f, &x.flatten(), pw.plus_shape());

    let mut plus = Tensor3::zero(np, np, nm, np, pv.proto());
    for k in 0..nm {
        let gb = gx(&pw.basis_minus(k));
        for j in 0..np {
            for l in 0..np {
                let v = pv.t_plus(&pv.basis_plus(j), &gb, &pv.basis_plus(l)).flatten();
                for i in 0..np {
                    plus.set_coeff(i, j, k, l, v.at(i, 0).clone());
                }
            }
        }
    }
    let mut minus = Tensor3::zero(nm, nm, np, nm, pv.proto());
    for k in 0..np {
        let fv = fx(&pv.basis_plus(k));
        for j in 0..nm {
            for l in 0..nm {
                let v = pw.t_minus(&pw.basis_minus(j), &fv, &pw.basis_minus(l)).flatten();
                for i in 0..nm {
                    minus.set_coeff(i, j, k, l, v.at(i, 0).clone());
                }
            }
        }
    }
    let induced = JordanPair::from_tensors(
        &format!("induced({},{})", pv.name, pw.name),
        pv.plus_shape(),
        pw.minus_shape(),
        plus,
        minus,
        pv.proto().clone(),
    );

    // (f, id): (V+, W-) -> (W+, W-) must be a homomorphism
    verify_pair_hom(&induced, pw, &fg.f, &Mat::identity(nm, pv.proto()))?;
    // (id, g): (V+, W-) -> (V+, V-) must be a homomorphism
    verify_pair_hom(&induced, pv, &Mat::identity(np, pv.proto()), &fg.g)?;
    Ok(induced)
}

/// Check that (h_plus, h_minus) is a homomorphism of Jordan pairs on all
/// basis triples.
pub fn verify_pair_hom<R: Ring>(
    src: &JordanPair<R>,
    dst: &JordanPair<R>,
    h_plus: &Mat<R>,
    h_minus: &Mat<R>,
) -> Result<()> {
    let hp = |x: &Mat<R>| apply_op(h_plus, &x.flatten(), dst.plus_shape());
    let hm = |b: &Mat<R>| apply_op(h_minus, &b.flatten(), dst.minus_shape());
    for j in 0..src.plus_rank() {
        for k in 0..src.minus_rank() {
            for l in 0..src.plus_rank() {
                let (x, a, y) = (src.basis_plus(j), src.basis_minus(k), src.basis_plus(l));
                let lhs = hp(&src.t_plus(&x, &a, &y));
                let rhs = dst.t_plus(&hp(&x), &hm(&a), &hp(&y));
                if lhs != rhs {
                    return Err(Error::NotStructural(format!(
                        "plus homomorphism identity fails at ({j},{k},{l})"
                    )));
                }
            }
        }
    }
    for j in 0..src.minus_rank() {
        for k in 0..src.plus_rank() {
            for l in 0..src.minus_rank() {
                let (a, x, b) = (src.basis_minus(j), src.basis_plus(k), src.basis_minus(l));
                let lhs = hm(&src.t_minus(&a, &x, &b));
                let rhs = dst.t_minus(&hm(&a), &hp(&x), &hm(&b));
                if lhs != rhs {
                    return Err(Error::NotStructural(format!(
                        "minus homomorphism identity fails at ({j},{k},{l})"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::validate_jts;
    use crate::scalar::{rat_int, Fp, Rat, Ring};

    fn scalar_jts() -> Jts<Rat> {
        Jts::rectangular(1, 1, rat_int(0))
    }

    #[test]
    fn identity_is_structural() {
        let t = Jts::rectangular(1, 2, rat_int(0));
        assert!(is_structural(&t, &Mat::identity(2, &rat_int(0))));
    }

    #[test]
    fn quadratic_maps_are_structural() {
        // Q(a) lies in the structure variety (fundamental formula).
        let t = Jts::rectangular(2, 2, rat_int(0));
        let a = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(2), rat_int(0), rat_int(1)]);
        let qa = t.q_op(&a);
        assert!(is_structural(&t, &qa));
        // Q(Q(x)z) = Q(x) Q(z) Q(x), spot check
        let x = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(1), rat_int(0), rat_int(2)]);
        let z = Mat::from_vec(2, 2, vec![rat_int(0), rat_int(1), rat_int(1), rat_int(1)]);
        let lhs = t.q_op(&t.q_apply(&x, &z));
        let rhs = t.q_op(&x).matmul(&t.q_op(&z)).matmul(&t.q_op(&x));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nilpotent_shift_is_not_structural() {
        // On rect_jts(1,2) the shift (x1,x2) -> (x2,0) fails the identity;
        // exhaustive search over GF(5) supplies an independent witness.
        let w = Fp::field(5).unwrap();
        let t = Jts::rectangular(1, 2, w.ring_zero());
        let shift = Mat::from_vec(
            2,
            2,
            vec![w.ring_zero(), w.ring_one(), w.ring_zero(), w.ring_zero()],
        );
        assert!(!is_structural(&t, &shift));

        // independent oracle: scan all element triples for a violation
        let elems: Vec<Mat<Fp>> = w
            .all()
            .iter()
            .flat_map(|a| {
                w.all()
                    .into_iter()
                    .map(move |b| Mat::from_vec(1, 2, vec![*a, b]))
            })
            .collect();
        let mut found = false;
        'outer: for x in &elems {
            for y in &elems {
                for z in &elems {
                    let ax = apply_op(&shift, x, (1, 2));
                    let az = apply_op(&shift, z, (1, 2));
                    let ay = apply_op(&shift, y, (1, 2));
                    let lhs = t.t(&ax, y, &az);
                    let rhs = apply_op(&shift, &t.t(x, &ay, z), (1, 2));
                    if lhs != rhs {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found, "exhaustive sweep must expose a counterexample");
    }

    #[test]
    fn homotope_is_a_triple_system() {
        let t = Jts::rectangular(2, 2, rat_int(0));
        let e1 = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)]);
        let alpha = certify(&t, t.q_op(&e1)).unwrap();
        let ta = alpha_homotope(&t, &alpha).unwrap();
        assert!(validate_jts(&ta).all_pass());
        // direct substitution agrees with the materialized tensor
        let x = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)]);
        let y = Mat::from_vec(2, 2, vec![rat_int(0), rat_int(1), rat_int(1), rat_int(0)]);
        let z = Mat::from_vec(2, 2, vec![rat_int(2), rat_int(0), rat_int(1), rat_int(1)]);
        let ay = alpha.apply(&y);
        assert_eq!(ta.t(&x, &y, &z), t.t(&x, &ay, &z));
    }

    #[test]
    fn zero_and_scalar_homotopes() {
        let t = scalar_jts();
        let zero = certify(&t, Mat::zero(1, 1, &rat_int(0))).unwrap();
        let tz = alpha_homotope(&t, &zero).unwrap();
        assert!(tz.t(&Mat::from_vec(1, 1, vec![rat_int(2)]), &Mat::from_vec(1, 1, vec![rat_int(3)]), &Mat::from_vec(1, 1, vec![rat_int(4)])).is_zero());

        let two = certify(&t, Mat::identity(1, &rat_int(0)).scale(&rat_int(2))).unwrap();
        let t2 = alpha_homotope(&t, &two).unwrap();
        let x = Mat::from_vec(1, 1, vec![rat_int(1)]);
        assert_eq!(t2.t(&x, &x, &x), t.t(&x, &x, &x).scale(&rat_int(2)));
    }

    #[test]
    fn homotope_operator_identities() {
        // Q_alpha(x) = Q(x) . alpha and B_alpha(x,y) = B(x, alpha y)
        let t = Jts::rectangular(1, 2, rat_int(0));
        let a = Mat::from_vec(1, 2, vec![rat_int(1), rat_int(2)]);
        let alpha = certify(&t, t.q_op(&a)).unwrap();
        let ta = alpha_homotope(&t, &alpha).unwrap();
        let x = Mat::from_vec(1, 2, vec![rat_int(3), rat_int(1)]);
        let y = Mat::from_vec(1, 2, vec![rat_int(-1), rat_int(2)]);
        assert_eq!(ta.q_op(&x), t.q_op(&x).matmul(alpha.matrix()));
        assert_eq!(ta.bergman(&x, &y), t.bergman(&x, &alpha.apply(&y)));
    }

    #[test]
    fn variety_catalog_members_certify() {
        let t = Jts::rectangular(2, 2, rat_int(0));
        let e1 = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)]);
        let x = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(1), rat_int(0), rat_int(1)]);
        let req = VarietyRequest {
            scalars: vec![rat_int(2)],
            quadratic: vec![e1, Mat::zero(2, 2, &rat_int(0))],
            bergman_diagonal: vec![x],
            include_identity: true,
            include_neg_identity: true,
        };
        let members = structure_variety_members(&t, &req).unwrap();
        assert_eq!(members.len(), 6);
        // cone property: scalar multiples of a certified member certify
        for m in &members {
            let scaled = m.matrix().scale(&rat_int(3));
            assert!(is_structural(&t, &scaled));
        }
    }

    #[test]
    fn induced_pair_identity_maps() {
        // f = g = id on the same pair gives back the original pair's tensors.
        let p = JordanPair::rectangular(1, 1, rat_int(0));
        let id = Mat::identity(1, &rat_int(0));
        let fg = certify_pair_structural(&p, &p, id.clone(), id).unwrap();
        let ind = induced_pair(&p, &p, &fg).unwrap();
        let x = Mat::from_vec(1, 1, vec![rat_int(2)]);
        let a = Mat::from_vec(1, 1, vec![rat_int(3)]);
        assert_eq!(ind.t_plus(&x, &a, &x), p.t_plus(&x, &a, &x));
        assert_eq!(ind.t_minus(&a, &x, &a), p.t_minus(&a, &x, &a));
    }

    #[test]
    fn induced_pair_zero_maps() {
        let p = JordanPair::rectangular(1, 2, rat_int(0));
        let f = Mat::zero(2, 2, &rat_int(0));
        let g = Mat::zero(2, 2, &rat_int(0));
        let fg = certify_pair_structural(&p, &p, f, g).unwrap();
        let ind = induced_pair(&p, &p, &fg).unwrap();
        let x = Mat::from_vec(1, 2, vec![rat_int(1), rat_int(2)]);
        let b = Mat::from_vec(2, 1, vec![rat_int(3), rat_int(4)]);
        assert!(ind.t_plus(&x, &b, &x).is_zero());
        assert!(ind.t_minus(&b, &x, &b).is_zero());
    }

    #[test]
    fn jts_case_embeds_as_diagonal_pair() {
        // (alpha, alpha) on the underlying pair of a JTS induces the pair
        // of the alpha-homotope.
        let t = scalar_jts();
        let alpha = certify(&t, Mat::identity(1, &rat_int(0)).scale(&rat_int(3))).unwrap();
        let p = t.underlying_pair();
        let fg = certify_pair_structural(&p, &p, alpha.matrix().clone(), alpha.matrix().clone())
            .unwrap();
        let ind = induced_pair(&p, &p, &fg).unwrap();
        let ta = alpha_homotope(&t, &alpha).unwrap();
        let pa = ta.underlying_pair();
        let x = Mat::from_vec(1, 1, vec![rat_int(2)]);
        let b = Mat::from_vec(1, 1, vec![rat_int(5)]);
        assert_eq!(ind.t_plus(&x, &b, &x), pa.t_plus(&x, &b, &x));
        assert_eq!(ind.t_minus(&b, &x, &b), pa.t_minus(&b, &x, &b));
    }
}
