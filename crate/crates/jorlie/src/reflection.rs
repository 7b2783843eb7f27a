//! Pointed reflection spaces: the (Q, inversion) presentation, base-point
//! changes (isotopy), the space of invertible elements of a unital Jordan
//! algebra, and sampled axiom sweeps for S1-S3 / SB1-SB3.

use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::lie::{AxiomOutcome, ValidatorReport, WitnessData};
use crate::linalg::Mat;
use crate::scalar::Ring;
use crate::spaces::DeformedSpace;

#[derive(Clone, Debug)]
enum PointedKernel<R> {
    /// Flat model: Q(x)y = 2x + y, inversion -id.
    Flat,
    /// Invertible elements of a unital Jordan algebra: Q(x) = U_x,
    /// inversion = Jordan inverse.
    Invertibles(JordanAlgebra<R>),
    /// A deformed chart U_a.
    Deformed(DeformedSpace<R>),
    /// Base point moved to `a`: Q_a(x) = Q(x) Q(a)^{-1} = Q(x) Q(a^{-1}).
    Rebased {
        base: Box<PointedSpace<R>>,
        inv_a: Mat<R>,
    },
}

/// A reflection space with base point, presented by its quadratic map and
/// inversion. The product is recovered as mu(x,y) = Q(x) sigma_o(y).
#[derive(Clone, Debug)]
pub struct PointedSpace<R> {
    pub name: String,
    base_point: Mat<R>,
    kernel: PointedKernel<R>,
}

impl<R: Ring> PointedSpace<R> {
    /// Flat symmetric structure on a module of the given shape.
    pub fn flat(shape: (usize, usize), proto: &R) -> Self {
        PointedSpace {
            name: "flat".into(),
            base_point: Mat::zero(shape.0, shape.1, proto),
            kernel: PointedKernel::Flat,
        }
    }

    /// The invertible set of a unital Jordan algebra, based at the unit.
    pub fn invertibles(j: JordanAlgebra<R>) -> Result<Self> {
        let unit = j
            .unit()
            .ok_or_else(|| Error::InvalidInput(format!("{} has no unit", j.name)))?
            .clone();
        Ok(PointedSpace {
            name: format!("invertibles({})", j.name),
            base_point: unit,
            kernel: PointedKernel::Invertibles(j),
        })
    }

    pub fn deformed(space: DeformedSpace<R>) -> Self {
        let o = space.zero();
        PointedSpace {
            name: format!("chart({}, a)", space.pair().name),
            base_point: o,
            kernel: PointedKernel::Deformed(space),
        }
    }

    pub fn base_point(&self) -> &Mat<R> {
        &self.base_point
    }

    pub fn is_member(&self, x: &Mat<R>) -> bool {
        match &self.kernel {
            PointedKernel::Flat => true,
            PointedKernel::Invertibles(j) => j.is_invertible(x),
            PointedKernel::Deformed(u) => u.is_member(x),
            PointedKernel::Rebased { base, .. } => base.is_member(x),
        }
    }

    /// The quadratic map Q(x) applied to y.
    pub fn q_apply(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        match &self.kernel {
            PointedKernel::Flat => Ok(x.scale(&x.proto().embed_i64(2)).add(y)),
            PointedKernel::Invertibles(j) => {
                if !j.is_invertible(x) {
                    return Err(Error::NotInvertible(x.render()));
                }
                Ok(j.u_apply(x, y))
            }
            PointedKernel::Deformed(u) => u.q_apply(x, y),
            PointedKernel::Rebased { base, inv_a } => {
                base.q_apply(x, &base.q_apply(inv_a, y)?)
            }
        }
    }

    /// The inversion sigma_o.
    pub fn inversion(&self, y: &Mat<R>) -> Result<Mat<R>> {
        match &self.kernel {
            PointedKernel::Flat => Ok(y.neg()),
            PointedKernel::Invertibles(j) => j.inverse(y),
            PointedKernel::Deformed(u) => u.sigma0(y),
            PointedKernel::Rebased { base, .. } => {
                // sigma_a(y) = mu_base(a, y)
                base.mu(&self.base_point, y)
            }
        }
    }

    /// mu(x, y) = sigma_x(y) = Q(x) (y^{-1}).
    pub fn mu(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        let inv = self.inversion(y)?;
        self.q_apply(x, &inv)
    }

    /// Move the base point to `a` via the isotopy Q_a(x) = Q(x) Q(a)^{-1}.
    pub fn rebase(&self, a: &Mat<R>) -> Result<PointedSpace<R>> {
        if !self.is_member(a) {
            return Err(Error::OutOfDomain(a.render()));
        }
        let inv_a = self.inversion(a)?;
        Ok(PointedSpace {
            name: format!("{}@", self.name),
            base_point: a.clone(),
            kernel: PointedKernel::Rebased {
                base: Box::new(self.clone()),
                inv_a,
            },
        })
    }
}

// ---------------------------------------------------------------------------
// Sampled axiom sweeps
// ---------------------------------------------------------------------------

fn collect<R: Ring>(
    name: &str,
    witnesses: Vec<WitnessData<R>>,
) -> AxiomOutcome<R> {
    AxiomOutcome {
        name: name.to_string(),
        pass: witnesses.is_empty(),
        witnesses,
    }
}

/// Check S1-S3 for a (possibly partial) product on the given sample
/// points. Combinations where the product is undefined are skipped; the
/// returned count is the number of evaluated instances.
pub fn check_reflection_axioms<R: Ring>(
    name: &str,
    mu: impl Fn(&Mat<R>, &Mat<R>) -> Result<Mat<R>>,
    points: &[Mat<R>],
) -> (ValidatorReport<R>, usize) {
    let mut checked = 0usize;
    let mut s1 = Vec::new();
    for x in points {
        if let Ok(v) = mu(x, x) {
            checked += 1;
            if &v != x && s1.len() < 5 {
                s1.push(WitnessData {
                    inputs: vec![x.clone()],
                    lhs: v,
                    rhs: x.clone(),
                });
            }
        }
    }
    let mut s2 = Vec::new();
    for x in points {
        for y in points {
            if let Ok(v) = mu(x, y) {
                if let Ok(back) = mu(x, &v) {
                    checked += 1;
                    if &back != y && s2.len() < 5 {
                        s2.push(WitnessData {
                            inputs: vec![x.clone(), y.clone()],
                            lhs: back,
                            rhs: y.clone(),
                        });
                    }
                }
            }
        }
    }
    let mut s3 = Vec::new();
    for x in points {
        for y in points {
            for z in points {
                let lhs = mu(x, z)
                    .and_then(|xz| mu(y, &xz))
                    .and_then(|yxz| mu(x, &yxz));
                let rhs = mu(x, y).and_then(|xy| mu(&xy, z));
                if let (Ok(l), Ok(r)) = (lhs, rhs) {
                    checked += 1;
                    if l != r && s3.len() < 5 {
                        s3.push(WitnessData {
                            inputs: vec![x.clone(), y.clone(), z.clone()],
                            lhs: l,
                            rhs: r,
                        });
                    }
                }
            }
        }
    }
    (
        ValidatorReport {
            instance: name.to_string(),
            axioms: vec![collect("S1", s1), collect("S2", s2), collect("S3", s3)],
        },
        checked,
    )
}

/// Check SB1-SB3 for a pointed presentation on the given sample points.
pub fn check_pointed_axioms<R: Ring>(
    name: &str,
    q: impl Fn(&Mat<R>, &Mat<R>) -> Result<Mat<R>>,
    inv: impl Fn(&Mat<R>) -> Result<Mat<R>>,
    points: &[Mat<R>],
) -> (ValidatorReport<R>, usize) {
    let mut checked = 0usize;
    // SB1: Q(Q(x)y) = Q(x) Q(y) Q(x), compared pointwise on sample z
    let mut sb1 = Vec::new();
    for x in points {
        for y in points {
            for z in points {
                let lhs = q(x, y).and_then(|qxy| q(&qxy, z));
                let rhs = q(x, z).and_then(|qz| q(y, &qz)).and_then(|w| q(x, &w));
                if let (Ok(l), Ok(r)) = (lhs, rhs) {
                    checked += 1;
                    if l != r && sb1.len() < 5 {
                        sb1.push(WitnessData {
                            inputs: vec![x.clone(), y.clone(), z.clone()],
                            lhs: l,
                            rhs: r,
                        });
                    }
                }
            }
        }
    }
    // SB2: Q(x^{-1}) = Q(x)^{-1}
    let mut sb2 = Vec::new();
    for x in points {
        for z in points {
            let lhs = inv(x).and_then(|xi| q(&xi, z)).and_then(|w| q(x, &w));
            if let Ok(l) = lhs {
                checked += 1;
                if &l != z && sb2.len() < 5 {
                    sb2.push(WitnessData {
                        inputs: vec![x.clone(), z.clone()],
                        lhs: l,
                        rhs: z.clone(),
                    });
                }
            }
        }
    }
    // SB3: x^{-1} = Q(x)^{-1} x, i.e. Q(x) x^{-1} = x
    let mut sb3 = Vec::new();
    for x in points {
        if let Ok(xi) = inv(x) {
            if let Ok(v) = q(x, &xi) {
                checked += 1;
                if &v != x && sb3.len() < 5 {
                    sb3.push(WitnessData {
                        inputs: vec![x.clone()],
                        lhs: v,
                        rhs: x.clone(),
                    });
                }
            }
        }
    }
    (
        ValidatorReport {
            instance: name.to_string(),
            axioms: vec![collect("SB1", sb1), collect("SB2", sb2), collect("SB3", sb3)],
        },
        checked,
    )
}
