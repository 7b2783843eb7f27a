//! Grassmannian subspace arithmetic: canonical subspace representations,
//! orthocomplements with respect to a split bilinear form, subspace-level
//! reflections, and the induced structural transformation of the chart
//! triple system.

use crate::error::{Error, Result};
use crate::homotope::{certify, Jts, StructuralMap};
use crate::jordan::basis_elem;
use crate::linalg::Mat;
use crate::scalar::Ring;

/// A linear subspace of K^n, stored as a reduced column echelon basis so
/// that equality of subspaces is equality of representations.
#[derive(Clone, PartialEq, Debug)]
pub struct GrassmannPoint<R> {
    basis: Mat<R>,
}

impl<R: Ring> GrassmannPoint<R> {
    pub fn from_basis(m: &Mat<R>) -> Result<Self> {
        let canonical = m.reduced_column_echelon();
        if canonical.cols != m.cols {
            return Err(Error::InvalidInput(
                "basis columns are linearly dependent".into(),
            ));
        }
        Ok(GrassmannPoint { basis: canonical })
    }

    pub fn basis(&self) -> &Mat<R> {
        &self.basis
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    /// The graph of X: K^p -> K^q as a p-dimensional subspace of K^{p+q}.
    pub fn graph(x: &Mat<R>) -> Self {
        let (q, p) = x.shape();
        let basis = Mat::from_fn(p + q, p, |r, c| {
            if r < p {
                if r == c {
                    x.proto().ring_one()
                } else {
                    x.proto().ring_zero()
                }
            } else {
                x.at(r - p, c).clone()
            }
        });
        GrassmannPoint { basis }
    }

    /// Chart coordinates over the first factor: X with self = graph(X),
    /// defined when the top p x p block is invertible.
    pub fn chart(&self, p: usize) -> Option<Mat<R>> {
        if self.dim() != p {
            return None;
        }
        let q = self.ambient() - p;
        let top = Mat::from_fn(p, p, |r, c| self.basis.at(r, c).clone());
        let bottom = Mat::from_fn(q, p, |r, c| self.basis.at(p + r, c).clone());
        match top.inverse() {
            Ok(ti) => Some(bottom.matmul(&ti)),
            Err(_) => None,
        }
    }
}

/// A block-diagonal bilinear form diag(B1, B2) on K^{p+q} with B1
/// invertible, both blocks symmetric or both skew-symmetric.
#[derive(Clone, PartialEq, Debug)]
pub struct SplitForm<R> {
    pub b1: Mat<R>,
    pub b2: Mat<R>,
    pub skew: bool,
}

impl<R: Ring> SplitForm<R> {
    pub fn new(b1: Mat<R>, b2: Mat<R>, skew: bool) -> Result<Self> {
        if !b1.is_invertible() {
            return Err(Error::NotInvertible("B1 block must be invertible".into()));
        }
        let sym_ok = |m: &Mat<R>| {
            if skew {
                m.transpose() == m.neg()
            } else {
                m.transpose() == *m
            }
        };
        if !sym_ok(&b1) || !sym_ok(&b2) {
            return Err(Error::InvalidInput(
                "blocks must share the declared symmetry".into(),
            ));
        }
        Ok(SplitForm { b1, b2, skew })
    }

    pub fn p(&self) -> usize {
        self.b1.rows
    }

    pub fn q(&self) -> usize {
        self.b2.rows
    }

    /// The full Gram matrix diag(B1, B2).
    pub fn gram(&self) -> Mat<R> {
        let (p, q) = (self.p(), self.q());
        Mat::from_fn(p + q, p + q, |r, c| {
            if r < p && c < p {
                self.b1.at(r, c).clone()
            } else if r >= p && c >= p {
                self.b2.at(r - p, c - p).clone()
            } else {
                self.b1.proto().ring_zero()
            }
        })
    }

    /// Orthocomplement E^beta = { w | beta(w, E) = 0 }. Reports a
    /// dimension drop when the form degenerates on the relevant part.
    pub fn complement(&self, e: &GrassmannPoint<R>) -> Result<GrassmannPoint<R>> {
        let expected = e.ambient() - e.dim();
        // beta(w, v) = w^t G v; the complement is the kernel of E^t G^t,
        // and G^t = +-G leaves the kernel unchanged.
        let m = e.basis().transpose().matmul(&self.gram().transpose());
        let kernel = m.nullspace();
        if kernel.cols != expected {
            return Err(Error::DimensionDrop {
                expected,
                got: kernel.cols,
            });
        }
        GrassmannPoint::from_basis(&kernel)
    }

    /// Subspace-level symmetry sigma_E(F): the linear map that is +1 on E
    /// and -1 on E^beta, applied to F. Requires W = E (+) E^beta.
    pub fn reflect(&self, e: &GrassmannPoint<R>, f: &GrassmannPoint<R>) -> Result<GrassmannPoint<R>> {
        let comp = self.complement(e)?;
        let p_mat = e.basis().hcat(comp.basis());
        if !p_mat.is_invertible() {
            return Err(Error::NotMember(format!(
                "E is degenerate: E + E^beta is not all of K^{}",
                e.ambient()
            )));
        }
        let proto = p_mat.proto();
        let sign = Mat::from_fn(p_mat.rows, p_mat.cols, |r, c| {
            if r == c {
                if c < e.dim() {
                    proto.ring_one()
                } else {
                    proto.ring_one().neg()
                }
            } else {
                proto.ring_zero()
            }
        });
        let s = p_mat.matmul(&sign).matmul(&p_mat.inverse()?);
        GrassmannPoint::from_basis(&s.matmul(f.basis()))
    }

    /// The structural transformation alpha(X) = B2 X B1^{-1} of the chart
    /// JTS T(X,Y,Z) = X Y^t Z + Z Y^t X on M(q,p), certified.
    pub fn chart_structural_map(&self, jts: &Jts<R>) -> Result<StructuralMap<R>> {
        let (p, q) = (self.p(), self.q());
        assert_eq!(jts.shape(), (q, p), "chart JTS lives on M(q,p)");
        let b1_inv = self.b1.inverse()?;
        let n = q * p;
        let proto = self.b1.proto();
        let mut op = Mat::zero(n, n, proto);
        for j in 0..n {
            let x = basis_elem((q, p), j, proto);
            let col = self.b2.matmul(&x).matmul(&b1_inv).flatten();
            for i in 0..n {
                op.set(i, j, col.at(i, 0).clone());
            }
        }
        certify(jts, op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rat};

    fn id2() -> Mat<Rat> {
        Mat::identity(2, &rat_int(0))
    }

    fn identity_form() -> SplitForm<Rat> {
        SplitForm::new(id2(), id2(), false).unwrap()
    }

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Mat<Rat> {
        Mat::from_vec(2, 2, vec![rat_int(a), rat_int(b), rat_int(c), rat_int(d)])
    }

    #[test]
    fn graph_chart_round_trip() {
        let x = m2(1, 2, 3, 4);
        let e = GrassmannPoint::graph(&x);
        assert_eq!(e.dim(), 2);
        assert_eq!(e.chart(2).unwrap(), x);
    }

    #[test]
    fn complement_of_standard_subspaces() {
        let beta = identity_form();
        // o+ = K^2 (+) 0 has complement 0 (+) K^2
        let o_plus = GrassmannPoint::graph(&m2(0, 0, 0, 0));
        let comp = beta.complement(&o_plus).unwrap();
        let expect = GrassmannPoint::from_basis(&Mat::from_fn(4, 2, |r, c| {
            if r == c + 2 {
                rat_int(1)
            } else {
                rat_int(0)
            }
        }))
        .unwrap();
        assert_eq!(comp, expect);
    }

    #[test]
    fn complement_formula_for_graphs() {
        // (Gamma_X)^beta is the graph over the second factor of
        // -B1^{-1} X^t B2; with identity blocks and symmetric X this is
        // the span of columns (-X | I).
        let beta = identity_form();
        let x = m2(1, 0, 0, 0);
        let e = GrassmannPoint::graph(&x);
        let comp = beta.complement(&e).unwrap();
        let a = beta
            .b1
            .inverse()
            .unwrap()
            .matmul(&x.transpose())
            .matmul(&beta.b2)
            .neg();
        let expect_basis = Mat::from_fn(4, 2, |r, c| {
            if r < 2 {
                a.at(r, c).clone()
            } else if r - 2 == c {
                rat_int(1)
            } else {
                rat_int(0)
            }
        });
        assert_eq!(comp, GrassmannPoint::from_basis(&expect_basis).unwrap());
    }

    #[test]
    fn degenerate_block_drops_dimension_off_graphs() {
        // B2 = 0: graphs still have q-dimensional complements, but the
        // second factor itself degenerates.
        let beta = SplitForm::new(id2(), Mat::zero(2, 2, &rat_int(0)), false).unwrap();
        let graph = GrassmannPoint::graph(&m2(1, 2, 0, 1));
        assert!(beta.complement(&graph).is_ok());
        let o_minus = GrassmannPoint::from_basis(&Mat::from_fn(4, 2, |r, c| {
            if r == c + 2 {
                rat_int(1)
            } else {
                rat_int(0)
            }
        }))
        .unwrap();
        assert!(matches!(
            beta.complement(&o_minus),
            Err(Error::DimensionDrop { .. })
        ));
    }

    #[test]
    fn reflection_axioms_on_samples() {
        let beta = identity_form();
        let e = GrassmannPoint::graph(&m2(1, 0, 2, 1));
        let f = GrassmannPoint::graph(&m2(0, 1, 1, 3));
        // S1 and S2
        assert_eq!(beta.reflect(&e, &e).unwrap(), e);
        let r = beta.reflect(&e, &f).unwrap();
        assert_eq!(beta.reflect(&e, &r).unwrap(), f);
    }

    #[test]
    fn base_point_reflection_negates_chart() {
        // sigma_{o+}(Gamma_Y) = Gamma_{-Y} for identity blocks
        let beta = identity_form();
        let o_plus = GrassmannPoint::graph(&m2(0, 0, 0, 0));
        let y = m2(1, 2, 3, 5);
        let gy = GrassmannPoint::graph(&y);
        let r = beta.reflect(&o_plus, &gy).unwrap();
        assert_eq!(r.chart(2).unwrap(), y.neg());
    }

    #[test]
    fn chart_alpha_certifies() {
        let t = Jts::rectangular(2, 2, rat_int(0));
        // identity blocks: alpha = id
        let beta = identity_form();
        let alpha = beta.chart_structural_map(&t).unwrap();
        assert_eq!(alpha.matrix(), &Mat::identity(4, &rat_int(0)));
        // degenerate B2 and symplectic blocks also certify
        let degenerate = SplitForm::new(id2(), m2(1, 0, 0, 0), false).unwrap();
        degenerate.chart_structural_map(&t).unwrap();
        let j2 = m2(0, 1, -1, 0);
        let symplectic = SplitForm::new(j2.clone(), j2, true).unwrap();
        symplectic.chart_structural_map(&t).unwrap();
        // B2 = 0 gives the zero (flat) deformation
        let flat = SplitForm::new(id2(), Mat::zero(2, 2, &rat_int(0)), false).unwrap();
        let a0 = flat.chart_structural_map(&t).unwrap();
        assert!(a0.matrix().is_zero());
    }

    #[test]
    fn mixed_symmetry_rejected() {
        let j2 = m2(0, 1, -1, 0);
        assert!(SplitForm::new(j2, id2(), true).is_err());
        assert!(SplitForm::new(m2(0, 1, 1, 0), m2(0, 1, -1, 0), false).is_err());
    }
}
