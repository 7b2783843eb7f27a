//! Geometric structures of the deformed spaces: Christoffel tensor of the
//! canonical connection, trace form, pseudo-metric and cometric, and the
//! invariant density in numeric mode.

use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::homotope::Jts;
use crate::jordan::apply_op;
use crate::linalg::Mat;
use crate::scalar::{Ring, F64};
use crate::spaces::HomotopeSpace;
use serde::Serialize;

/// Christoffel tensor of the canonical connection in the chart:
/// C_x(u,v) = T_alpha(u, 2 x^{-x}, v), the mixed second differential of
/// the symmetry sigma_x at x.
pub fn christoffel<R: Ring>(
    space: &HomotopeSpace<R>,
    x: &Mat<R>,
    u: &Mat<R>,
    v: &Mat<R>,
) -> Result<Mat<R>> {
    let m = space.chart_midpoint(x)?;
    let w = m.scale(&m.proto().embed_i64(2));
    Ok(space.homotope_pair().t_plus(u, &w, v))
}

/// Trace form g_0(u, v) = tr(T(u, v, .)).
pub fn trace_form<R: Ring>(jts: &Jts<R>, u: &Mat<R>, v: &Mat<R>) -> R {
    jts.op_t(u, v).trace()
}

/// Gram matrix of the trace form on the standard basis; its rank reports
/// (non)degeneracy.
pub fn trace_gram<R: Ring>(jts: &Jts<R>) -> Mat<R> {
    let n = jts.rank();
    Mat::from_fn(n, n, |i, j| trace_form(jts, &jts.basis(i), &jts.basis(j)))
}

fn homotope_trace_form<R: Ring>(space: &HomotopeSpace<R>, u: &Mat<R>, v: &Mat<R>) -> R {
    // trace form of T_alpha, evaluated through the homotope pair
    let hp = space.homotope_pair();
    hp.op_t_plus(u, v).trace()
}

/// Pseudo-metric g_x(u,v) = g_0(u, B_alpha(x,-x)^{-1} v), with g_0 the
/// trace form of the homotope.
pub fn metric<R: Ring>(
    space: &HomotopeSpace<R>,
    x: &Mat<R>,
    u: &Mat<R>,
    v: &Mat<R>,
) -> Result<R> {
    let b = space.bergman_at(x);
    let shape = x.shape();
    let w = b
        .solve(&v.flatten())
        .map_err(|_| Error::NotMember(x.render()))?
        .unflatten(shape.0, shape.1);
    Ok(homotope_trace_form(space, u, &w))
}

/// Cometric gamma_x(phi, psi) = g_0(phi, B_alpha(x,-x) psi); defined for
/// every x, member or not.
pub fn cometric<R: Ring>(space: &HomotopeSpace<R>, x: &Mat<R>, phi: &Mat<R>, psi: &Mat<R>) -> R {
    let b = space.bergman_at(x);
    let w = apply_op(&b, psi, psi.shape());
    homotope_trace_form(space, phi, &w)
}

/// Invariant density |det B(x, -alpha x)|^{-1/2} at a chart point.
pub fn density(space: &HomotopeSpace<F64>, x: &Mat<F64>) -> Result<f64> {
    let det = space.bergman_at(x).det().0;
    if det == 0.0 {
        return Err(Error::NotMember(x.render()));
    }
    Ok(det.abs().powf(-0.5))
}

/// How the Jacobian of a transvection is computed for invariance checks.
#[derive(Clone, Copy, Debug)]
pub enum JacobianMode {
    /// Central finite differences with the given step.
    CentralDifference { step: f64 },
    /// Dual-number differentials (exact up to float rounding).
    DualNumber,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariancePoint {
    pub point: Vec<f64>,
    pub rel_error: f64,
}

/// Outcome of a density-invariance run; violations are data, not errors.
#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub max_rel_error: f64,
    pub checked: usize,
    pub skipped: usize,
    pub points: Vec<InvariancePoint>,
}

fn eval_transvection(
    space: &HomotopeSpace<F64>,
    x: &Mat<F64>,
    y: &Mat<F64>,
    z: &Mat<F64>,
) -> Result<Mat<F64>> {
    let inner = space.sigma(y, z)?;
    space.sigma(x, &inner)
}

fn jacobian(
    space: &HomotopeSpace<F64>,
    x: &Mat<F64>,
    y: &Mat<F64>,
    z: &Mat<F64>,
    mode: JacobianMode,
) -> Result<Mat<F64>> {
    let n = z.rows * z.cols;
    let shape = z.shape();
    match mode {
        JacobianMode::CentralDifference { step } => {
            let mut j = Mat::zero(n, n, &F64(0.0));
            for col in 0..n {
                let mut e = Mat::zero(shape.0, shape.1, &F64(0.0));
                e.set(col / shape.1, col % shape.1, F64(step));
                let plus = eval_transvection(space, x, y, &z.add(&e))?.flatten();
                let minus = eval_transvection(space, x, y, &z.sub(&e))?.flatten();
                for row in 0..n {
                    j.set(row, col, F64((plus.at(row, 0).0 - minus.at(row, 0).0) / (2.0 * step)));
                }
            }
            Ok(j)
        }
        JacobianMode::DualNumber => {
            let lifted = space.map_scalars(|c| Dual::constant(*c));
            let xl = x.map(|c| Dual::constant(*c));
            let yl = y.map(|c| Dual::constant(*c));
            let mut j = Mat::zero(n, n, &F64(0.0));
            for col in 0..n {
                let pert = Mat::from_fn(shape.0, shape.1, |r, c| {
                    let base = Dual::constant(*z.at(r, c));
                    if r * shape.1 + c == col {
                        Dual::new(base.re, F64(1.0))
                    } else {
                        base
                    }
                });
                let inner = lifted.sigma(&yl, &pert)?;
                let out = lifted.sigma(&xl, &inner)?.flatten();
                for row in 0..n {
                    j.set(row, col, out.at(row, 0).eps);
                }
            }
            Ok(j)
        }
    }
}

/// Check that the density transforms as an invariant measure under the
/// transvection sigma_x . sigma_y: |det J_g(z)| density(g z) = density(z)
/// at every sample point, within `tol` relative error.
pub fn density_invariance_check(
    space: &HomotopeSpace<F64>,
    x: &Mat<F64>,
    y: &Mat<F64>,
    samples: &[Mat<F64>],
    mode: JacobianMode,
) -> InvarianceReport {
    let mut points = Vec::new();
    let mut max_rel_error = 0.0f64;
    let mut skipped = 0usize;
    for z in samples {
        let gz = match eval_transvection(space, x, y, z) {
            Ok(v) => v,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let (dz, dgz) = match (density(space, z), density(space, &gz)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                skipped += 1;
                continue;
            }
        };
        let jac = match jacobian(space, x, y, z, mode) {
            Ok(j) => j,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let det = jac.det().0.abs();
        let rel_error = (det * dgz / dz - 1.0).abs();
        max_rel_error = max_rel_error.max(rel_error);
        points.push(InvariancePoint {
            point: z.flatten().entries().iter().map(|v| v.0).collect(),
            rel_error,
        });
    }
    InvarianceReport {
        max_rel_error,
        checked: points.len(),
        skipped,
        points,
    }
}
