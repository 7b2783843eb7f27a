//! Worked families: deformed unit groups of associative algebras, Peirce
//! decompositions of idempotent pairs, the bundle structure of the chart
//! deformed by an idempotent, and the flattening isomorphism of its fiber.

use crate::dual::{Dual, Dual2};
use crate::error::{Error, Result};
use crate::jordan::{apply_op, basis_elem, JordanPair, Tensor2};
use crate::linalg::Mat;
use crate::scalar::Ring;

// ---------------------------------------------------------------------------
// Associative algebras and deformed groups
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
enum AssocKernel<R> {
    /// M(n,n) with the matrix product.
    FullMatrix,
    Structure(Tensor2<R>),
}

/// A finite-rank unital associative algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct AssocAlgebra<R> {
    pub name: String,
    shape: (usize, usize),
    kernel: AssocKernel<R>,
    unit: Mat<R>,
    proto: R,
}

impl<R: Ring> AssocAlgebra<R> {
    pub fn matrix_algebra(n: usize, proto: R) -> Self {
        AssocAlgebra {
            name: format!("M({n},{n})"),
            shape: (n, n),
            kernel: AssocKernel::FullMatrix,
            unit: Mat::identity(n, &proto),
            proto,
        }
    }

    pub fn from_structure(name: &str, t: Tensor2<R>, unit: Mat<R>, proto: R) -> Result<Self> {
        let alg = AssocAlgebra {
            name: name.to_string(),
            shape: (t.out, 1),
            kernel: AssocKernel::Structure(t),
            unit,
            proto,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Associativity and unit laws on basis triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            let x = self.basis(i);
            if self.product(&self.unit, &x) != x || self.product(&x, &self.unit) != x {
                return Err(Error::InvalidInput(format!("unit law fails at basis {i}")));
            }
            for j in 0..n {
                for k in 0..n {
                    let (y, z) = (self.basis(j), self.basis(k));
                    let lhs = self.product(&self.product(&x, &y), &z);
                    let rhs = self.product(&x, &self.product(&y, &z));
                    if lhs != rhs {
                        return Err(Error::InvalidInput(format!(
                            "associativity fails at basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
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

    pub fn unit(&self) -> &Mat<R> {
        &self.unit
    }

    pub fn proto(&self) -> &R {
        &self.proto
    }

    pub fn product(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        match &self.kernel {
            AssocKernel::FullMatrix => x.matmul(y),
            AssocKernel::Structure(t) => {
                let out = t.eval(x.flatten().entries(), y.flatten().entries());
                Mat::from_vec(self.rank(), 1, out)
            }
        }
    }

    /// Left multiplication operator.
    pub fn l_op(&self, x: &Mat<R>) -> Mat<R> {
        let n = self.rank();
        let mut op = Mat::zero(n, n, &self.proto);
        for k in 0..n {
            let col = self.product(x, &self.basis(k)).flatten();
            for i in 0..n {
                op.set(i, k, col.at(i, 0).clone());
            }
        }
        op
    }

    pub fn is_invertible(&self, x: &Mat<R>) -> bool {
        self.l_op(x).is_invertible()
    }

    pub fn inverse(&self, x: &Mat<R>) -> Result<Mat<R>> {
        let sol = self
            .l_op(x)
            .solve(&self.unit.flatten())
            .map_err(|_| Error::NotInvertible(x.render()))?;
        Ok(sol.unflatten(self.shape.0, self.shape.1))
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> AssocAlgebra<S> {
        let kernel = match &self.kernel {
            AssocKernel::FullMatrix => AssocKernel::FullMatrix,
            AssocKernel::Structure(t) => AssocKernel::Structure(t.map(f)),
        };
        AssocAlgebra {
            name: self.name.clone(),
            shape: self.shape,
            kernel,
            unit: self.unit.map(f),
            proto: f(&self.proto),
        }
    }
}

/// The deformed group G_a = { x | 1 + a x invertible } with product
/// x <> y = x a y + x + y, unit 0, inverse -x (1 + a x)^{-1}.
#[derive(Clone, Debug)]
pub struct DeformedGroup<R> {
    pub alg: AssocAlgebra<R>,
    pub a: Mat<R>,
}

impl<R: Ring> DeformedGroup<R> {
    pub fn new(alg: AssocAlgebra<R>, a: Mat<R>) -> Result<Self> {
        if a.shape() != alg.shape() {
            return Err(Error::ShapeMismatch {
                expected: format!("{:?}", alg.shape()),
                got: format!("{:?}", a.shape()),
            });
        }
        Ok(DeformedGroup { alg, a })
    }

    pub fn is_member(&self, x: &Mat<R>) -> bool {
        let ax = self.alg.product(&self.a, x);
        self.alg.is_invertible(&self.alg.unit().add(&ax))
    }

    fn require_member(&self, x: &Mat<R>) -> Result<()> {
        if !self.is_member(x) {
            return Err(Error::NotMember(x.render()));
        }
        Ok(())
    }

    pub fn product(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        self.require_member(x)?;
        self.require_member(y)?;
        let out = self.product_raw(x, y);
        if !self.is_member(&out) {
            return Err(Error::NotMember(out.render()));
        }
        Ok(out)
    }

    /// x a y + x + y without membership checks (used under scalar extension).
    pub fn product_raw(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        let xay = self.alg.product(&self.alg.product(x, &self.a), y);
        xay.add(x).add(y)
    }

    pub fn inverse(&self, x: &Mat<R>) -> Result<Mat<R>> {
        self.require_member(x)?;
        let ax = self.alg.product(&self.a, x);
        let inv = self.alg.inverse(&self.alg.unit().add(&ax))?;
        Ok(self.alg.product(x, &inv).neg())
    }

    /// The deformed commutator [x, y]_a = x a y - y a x.
    pub fn bracket(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        let xay = self.alg.product(&self.alg.product(x, &self.a), y);
        let yax = self.alg.product(&self.alg.product(y, &self.a), x);
        xay.sub(&yax)
    }

    /// Adjoint action at the origin: the dual-number differential of
    /// h -> g <> h <> g^{-1}, together with its determinant (the value of
    /// the modular character at g).
    pub fn adjoint_and_modular(&self, g: &Mat<R>) -> Result<(Mat<R>, R)> {
        self.require_member(g)?;
        let ginv = self.inverse(g)?;
        let lifted = DeformedGroup {
            alg: self.alg.map_scalars(|c| Dual::constant(c.clone())),
            a: self.a.map(|c| Dual::constant(c.clone())),
        };
        let gl = g.map(|c| Dual::constant(c.clone()));
        let gil = ginv.map(|c| Dual::constant(c.clone()));
        let n = self.alg.rank();
        let mut ad = Mat::zero(n, n, self.alg.proto());
        for j in 0..n {
            let v = self
                .alg
                .basis(j)
                .map(|c| Dual::new(c.ring_zero(), c.clone()));
            let out = lifted.product_raw(&lifted.product_raw(&gl, &v), &gil);
            let col = out.map(|d| d.eps.clone()).flatten();
            for i in 0..n {
                ad.set(i, j, col.at(i, 0).clone());
            }
        }
        let det = ad.det();
        Ok((ad, det))
    }

    /// Second-order commutator at the origin: the eps1*eps2 coefficient of
    /// (e1 u) <> (e2 v) <> (e1 u)^{-1} <> (e2 v)^{-1}, which recovers the
    /// deformed bracket.
    pub fn dual_bracket(&self, u: &Mat<R>, v: &Mat<R>) -> Mat<R> {
        let lifted = DeformedGroup {
            alg: self.alg.map_scalars(|c| Dual2::constant(c.clone())),
            a: self.a.map(|c| Dual2::constant(c.clone())),
        };
        let z = self.alg.proto().ring_zero();
        let x = u.map(|c| Dual2::new(z.clone(), c.clone(), z.clone(), z.clone()));
        let y = v.map(|c| Dual2::new(z.clone(), z.clone(), c.clone(), z.clone()));
        // inverses of infinitesimals are their negatives
        let w = lifted.product_raw(
            &lifted.product_raw(&lifted.product_raw(&x, &y), &x.neg()),
            &y.neg(),
        );
        w.map(|d| d.eps12.clone())
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> DeformedGroup<S> {
        DeformedGroup {
            alg: self.alg.map_scalars(f),
            a: self.a.map(f),
        }
    }
}

/// Factor a member of G_e (matrix algebra, idempotent e) as g <> h where g
/// is the invertible-block part and h has vanishing e-x-e block. Fails if
/// x is not a member; the factorization is unique.
pub fn semidirect_factor<R: Ring>(
    group: &DeformedGroup<R>,
    e: &Mat<R>,
    x: &Mat<R>,
) -> Result<(Mat<R>, Mat<R>)> {
    let g = e.matmul(x).matmul(e);
    if !group.is_member(&g) {
        return Err(Error::NotMember(format!(
            "invertible-block factor is not a member: {}",
            g.render()
        )));
    }
    let h = group.product(&group.inverse(&g)?, x)?;
    // the h-factor must carry no block at e..e
    if !e.matmul(&h).matmul(e).is_zero() {
        return Err(Error::InvalidInput(format!(
            "factorization failed for {}",
            x.render()
        )));
    }
    Ok((g, h))
}

// ---------------------------------------------------------------------------
// Idempotents and Peirce decompositions
// ---------------------------------------------------------------------------

/// An idempotent pair (e+, e-): Q(e+)e- = e+ and Q(e-)e+ = e-.
#[derive(Clone, PartialEq, Debug)]
pub struct IdempotentPair<R> {
    pub plus: Mat<R>,
    pub minus: Mat<R>,
}

impl<R: Ring> IdempotentPair<R> {
    pub fn new(pair: &JordanPair<R>, plus: Mat<R>, minus: Mat<R>) -> Result<Self> {
        pair.check_plus(&plus)?;
        pair.check_minus(&minus)?;
        if pair.q_plus_apply(&plus, &minus) != plus {
            return Err(Error::NotIdempotent(format!(
                "Q(e+)e- != e+ for e+ = {}",
                plus.render()
            )));
        }
        if pair.q_minus_apply(&minus, &plus) != minus {
            return Err(Error::NotIdempotent(format!(
                "Q(e-)e+ != e- for e- = {}",
                minus.render()
            )));
        }
        Ok(IdempotentPair { plus, minus })
    }
}

/// Complete a von Neumann regular element of the rectangular pair to an
/// idempotent pair by the transpose recipe e+ = (e-)^t. No general solver
/// is attempted: the recipe either satisfies the idempotent conditions or
/// the completion is refused.
pub fn rectangular_completion<R: Ring>(
    pair: &JordanPair<R>,
    e_minus: &Mat<R>,
) -> Result<IdempotentPair<R>> {
    IdempotentPair::new(pair, e_minus.transpose(), e_minus.clone())
}

/// Peirce projections on V+: the spectral projections of D = T(e+, e-)
/// onto the eigenvalues 2, 1, 0.
#[derive(Clone, PartialEq, Debug)]
pub struct PeirceDecomposition<R> {
    pub p2: Mat<R>,
    pub p1: Mat<R>,
    pub p0: Mat<R>,
    d: Mat<R>,
}

pub fn peirce<R: Ring>(
    pair: &JordanPair<R>,
    idem: &IdempotentPair<R>,
) -> Result<PeirceDecomposition<R>> {
    let n = pair.plus_rank();
    let proto = pair.proto();
    let d = pair.op_t_plus(&idem.plus, &idem.minus);
    let id = Mat::identity(n, proto);
    let two = Mat::identity(n, proto).scale(&proto.embed_i64(2));
    // P0 = (D-1)(D-2)/2, P1 = D(2-D), P2 = D(D-1)/2
    let p0 = d.sub(&id).matmul(&d.sub(&two)).map(|v| v.halve());
    let p1 = d.matmul(&two.sub(&d));
    let p2 = d.matmul(&d.sub(&id)).map(|v| v.halve());

    let dec = PeirceDecomposition { p2, p1, p0, d };
    // verify: partition of the identity into orthogonal idempotents with
    // the right eigenvalue action
    let sum = dec.p0.add(&dec.p1).add(&dec.p2);
    if sum != id {
        return Err(Error::NotIdempotent("projections do not sum to id".into()));
    }
    let parts = [&dec.p0, &dec.p1, &dec.p2];
    for (i, pi) in parts.iter().enumerate() {
        for (j, pj) in parts.iter().enumerate() {
            let prod = pi.matmul(pj);
            let expect = if i == j { (*pi).clone() } else { Mat::zero(n, n, proto) };
            if prod != expect {
                return Err(Error::NotIdempotent(format!(
                    "projection orthogonality fails at ({i},{j})"
                )));
            }
        }
        let scale = Mat::identity(n, proto).scale(&proto.embed_i64(i as i64));
        if dec.d.matmul(pi) != scale.matmul(pi) {
            return Err(Error::NotIdempotent(format!(
                "eigenvalue action fails on component {i}"
            )));
        }
    }
    Ok(dec)
}

impl<R: Ring> PeirceDecomposition<R> {
    pub fn split(&self, pair: &JordanPair<R>, x: &Mat<R>) -> (Mat<R>, Mat<R>, Mat<R>) {
        let shape = pair.plus_shape();
        (
            apply_op(&self.p0, x, shape),
            apply_op(&self.p1, x, shape),
            apply_op(&self.p2, x, shape),
        )
    }
}

/// Membership of x in the chart deformed by e-, decided through the Peirce
/// decomposition: x = x0 + x1 + x2 is a member iff x2 + e+ is invertible
/// in the unital Jordan algebra on the 2-component. Returns the witness
/// decomposition alongside the verdict.
pub fn peirce_membership<R: Ring>(
    pair: &JordanPair<R>,
    idem: &IdempotentPair<R>,
    dec: &PeirceDecomposition<R>,
    x: &Mat<R>,
) -> Result<(bool, (Mat<R>, Mat<R>, Mat<R>))> {
    pair.check_plus(x)?;
    let (x0, x1, x2) = dec.split(pair, x);
    // U_z on the 2-component of the homotope algebra V+_{e-} is
    // Q+(z) Q-(e-) restricted to the image of P2.
    let z = x2.add(&idem.plus);
    let u = pair.q_plus(&z).matmul(&pair.q_minus(&idem.minus));
    // restrict to a basis of im(P2)
    let basis = dec.p2.reduced_column_echelon();
    if basis.cols == 0 {
        return Ok((true, (x0, x1, x2)));
    }
    let image = u.matmul(&basis);
    // solve basis * c = image column-wise; invertibility on the component
    // means the restricted system is uniquely solvable with invertible
    // coefficient matrix
    let gram = basis.transpose().matmul(&basis);
    let coeff = match gram.solve(&basis.transpose().matmul(&image)) {
        Ok(c) => c,
        Err(_) => return Ok((false, (x0, x1, x2))),
    };
    // confirm image stays inside the component
    if basis.matmul(&coeff) != image {
        return Ok((false, (x0, x1, x2)));
    }
    Ok((coeff.is_invertible(), (x0, x1, x2)))
}

/// The flattening isomorphism of the fiber V0 + V1 of the chart deformed
/// by an idempotent: F(z) = z + (1/2) Q(z) e- carries the flat product
/// 2x - y to the deformed fiber product.
pub fn fiber_flat_iso<R: Ring>(
    pair: &JordanPair<R>,
    idem: &IdempotentPair<R>,
    dec: &PeirceDecomposition<R>,
    z: &Mat<R>,
) -> Result<Mat<R>> {
    pair.check_plus(z)?;
    let (_, _, z2) = dec.split(pair, z);
    if !z2.is_zero() {
        return Err(Error::NotInFiber(z.render()));
    }
    Ok(z.add(&pair.q_plus_apply(z, &idem.minus).map(|v| v.halve())))
}

/// Inverse of the flattening isomorphism on the fiber.
pub fn fiber_flat_iso_inv<R: Ring>(
    pair: &JordanPair<R>,
    idem: &IdempotentPair<R>,
    dec: &PeirceDecomposition<R>,
    w: &Mat<R>,
) -> Result<Mat<R>> {
    pair.check_plus(w)?;
    let (_, _, w2) = dec.split(pair, w);
    if !w2.is_zero() {
        return Err(Error::NotInFiber(w.render()));
    }
    // On the fiber Q(F(z))e- = Q(z)e-, so subtracting half the quadratic
    // term inverts F exactly.
    Ok(w.sub(&pair.q_plus_apply(w, &idem.minus).map(|v| v.halve())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Fp, Rat, Ring};
    use crate::spaces::DeformedSpace;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Mat<Rat> {
        Mat::from_vec(2, 2, vec![rat_int(a), rat_int(b), rat_int(c), rat_int(d)])
    }

    fn e1() -> Mat<Rat> {
        m2(1, 0, 0, 0)
    }

    #[test]
    fn group_product_values() {
        let alg = AssocAlgebra::matrix_algebra(2, rat_int(0));
        // a = 0: x <> y = x + y
        let flat = DeformedGroup::new(alg.clone(), Mat::zero(2, 2, &rat_int(0))).unwrap();
        let x = m2(1, 2, 3, 4);
        let y = m2(0, 1, 1, 0);
        assert_eq!(flat.product(&x, &y).unwrap(), x.add(&y));
        // a = e1: frozen example
        let g = DeformedGroup::new(alg, e1()).unwrap();
        assert_eq!(g.product(&x, &y).unwrap(), m2(1, 4, 4, 7));
        // unit law
        assert_eq!(g.product(&x, &g.alg.zero()).unwrap(), x);
    }

    #[test]
    fn group_inverse_values() {
        let w = Fp::field(7).unwrap();
        let alg = AssocAlgebra::matrix_algebra(2, w.ring_zero());
        let e = Mat::from_vec(
            2,
            2,
            vec![w.ring_one(), w.ring_zero(), w.ring_zero(), w.ring_zero()],
        );
        let g = DeformedGroup::new(alg, e).unwrap();
        let x = Mat::from_vec(
            2,
            2,
            vec![w.ring_one(), w.ring_zero(), w.ring_zero(), w.ring_one()],
        );
        let inv = g.inverse(&x).unwrap();
        let expect = Mat::from_vec(
            2,
            2,
            vec![w.embed_i64(3), w.ring_zero(), w.ring_zero(), w.embed_i64(6)],
        );
        assert_eq!(inv, expect);
        // two-sided
        assert!(g.product(&x, &inv).unwrap().is_zero());
        assert!(g.product(&inv, &x).unwrap().is_zero());
        // x = 0 and a = 0 degenerate cases
        assert!(g.inverse(&g.alg.zero()).unwrap().is_zero());
    }

    #[test]
    fn bracket_values() {
        let alg = AssocAlgebra::matrix_algebra(2, rat_int(0));
        let g = DeformedGroup::new(alg, e1()).unwrap();
        let x = m2(1, 2, 3, 4);
        assert!(g.bracket(&x, &x).is_zero());
        let zero_a = DeformedGroup::new(g.alg.clone(), Mat::zero(2, 2, &rat_int(0))).unwrap();
        assert!(zero_a.bracket(&x, &m2(0, 1, 1, 0)).is_zero());
        // block form: both alpha-blocks zero gives the antidiagonal block
        let h1 = m2(0, 2, 3, 1);
        let h2 = m2(0, 1, 5, 2);
        let br = g.bracket(&h1, &h2);
        // gamma beta' - gamma' beta = 3*1 - 5*2 = -7 in the (2,2) entry
        assert_eq!(br, m2(0, 0, 0, -7));
        // Jacobi identity on a sample
        let z = m2(1, 0, 2, 1);
        let jac = g
            .bracket(&g.bracket(&h1, &h2), &z)
            .add(&g.bracket(&g.bracket(&h2, &z), &h1))
            .add(&g.bracket(&g.bracket(&z, &h1), &h2));
        assert!(jac.is_zero());
    }

    #[test]
    fn adjoint_and_modular_values() {
        let alg = AssocAlgebra::matrix_algebra(2, rat_int(0));
        let g0 = DeformedGroup::new(alg.clone(), Mat::zero(2, 2, &rat_int(0))).unwrap();
        let (ad, det) = g0.adjoint_and_modular(&m2(1, 2, 3, 4)).unwrap();
        assert_eq!(ad, Mat::identity(4, &rat_int(0)));
        assert_eq!(det, rat_int(1));
        // g = 0 in any deformation
        let ge = DeformedGroup::new(alg.clone(), e1()).unwrap();
        let (ad0, det0) = ge.adjoint_and_modular(&Mat::zero(2, 2, &rat_int(0))).unwrap();
        assert_eq!(ad0, Mat::identity(4, &rat_int(0)));
        assert_eq!(det0, rat_int(1));
        // a = 1: det Ad = 1 on a sample
        let g1 = DeformedGroup::new(alg, Mat::identity(2, &rat_int(0))).unwrap();
        let (_, det1) = g1.adjoint_and_modular(&m2(1, 2, 0, 3)).unwrap();
        assert_eq!(det1, rat_int(1));
    }

    #[test]
    fn dual_bracket_recovers_deformed_commutator() {
        let alg = AssocAlgebra::matrix_algebra(2, rat_int(0));
        let g = DeformedGroup::new(alg, e1()).unwrap();
        let u = m2(1, 2, 0, 1);
        let v = m2(0, 1, 3, 2);
        assert_eq!(g.dual_bracket(&u, &v), g.bracket(&u, &v));
    }

    #[test]
    fn semidirect_factorization() {
        let alg = AssocAlgebra::matrix_algebra(2, rat_int(0));
        let g = DeformedGroup::new(alg, e1()).unwrap();
        let x = m2(2, 3, 4, 5);
        let (gl, h) = semidirect_factor(&g, &e1(), &x).unwrap();
        assert_eq!(gl, m2(2, 0, 0, 0));
        assert!(e1().matmul(&h).matmul(&e1()).is_zero());
        assert_eq!(g.product(&gl, &h).unwrap(), x);
    }

    #[test]
    fn idempotent_and_peirce_rect22() {
        let pair = JordanPair::rectangular(2, 2, rat_int(0));
        let idem = IdempotentPair::new(&pair, e1(), e1()).unwrap();
        let dec = peirce(&pair, &idem).unwrap();
        // P2 picks the (1,1) block, P1 the off-blocks, P0 the (2,2) block
        let x = m2(5, 6, 7, 8);
        let (x0, x1, x2) = dec.split(&pair, &x);
        assert_eq!(x2, m2(5, 0, 0, 0));
        assert_eq!(x1, m2(0, 6, 7, 0));
        assert_eq!(x0, m2(0, 0, 0, 8));
    }

    #[test]
    fn transpose_completion_recipe() {
        let pair = JordanPair::rectangular(1, 2, rat_int(0));
        // e- = (1; 0): the transpose (1, 0) completes it
        let e = Mat::from_vec(2, 1, vec![rat_int(1), rat_int(0)]);
        let idem = rectangular_completion(&pair, &e).unwrap();
        assert_eq!(idem.plus, e.transpose());
        // a non-regular candidate is refused
        let bad = Mat::from_vec(2, 1, vec![rat_int(2), rat_int(0)]);
        assert!(rectangular_completion(&pair, &bad).is_err());
    }

    #[test]
    fn zero_idempotent_has_full_zero_component() {
        let pair = JordanPair::rectangular(1, 1, rat_int(0));
        let z = Mat::zero(1, 1, &rat_int(0));
        let idem = IdempotentPair::new(&pair, z.clone(), z).unwrap();
        let dec = peirce(&pair, &idem).unwrap();
        assert_eq!(dec.p0, Mat::identity(1, &rat_int(0)));

        // e = 1 on rectangular(1,1): D = 2, P2 = id
        let one = Mat::from_vec(1, 1, vec![rat_int(1)]);
        let idem1 = IdempotentPair::new(&pair, one.clone(), one).unwrap();
        let dec1 = peirce(&pair, &idem1).unwrap();
        assert_eq!(dec1.p2, Mat::identity(1, &rat_int(0)));
    }

    #[test]
    fn membership_through_peirce_agrees_with_bergman() {
        let w = Fp::field(5).unwrap();
        let pair = JordanPair::rectangular(2, 2, w.ring_zero());
        let e = Mat::from_vec(
            2,
            2,
            vec![w.ring_one(), w.ring_zero(), w.ring_zero(), w.ring_zero()],
        );
        let idem = IdempotentPair::new(&pair, e.clone(), e.clone()).unwrap();
        let dec = peirce(&pair, &idem).unwrap();
        let space = DeformedSpace::new(pair.clone(), e.clone()).unwrap();
        // x = -e+: the 2-component shifted by e+ is zero, not invertible
        let me = e.neg();
        let (ok, _) = peirce_membership(&pair, &idem, &dec, &me).unwrap();
        assert!(!ok);
        assert!(!space.is_member(&me));
        // x = 0 is always a member; x in V0 + V1 also
        let (ok0, _) = peirce_membership(&pair, &idem, &dec, &pair.zero_plus()).unwrap();
        assert!(ok0);
        let fiber_x = Mat::from_vec(
            2,
            2,
            vec![w.ring_zero(), w.embed_i64(3), w.embed_i64(2), w.embed_i64(4)],
        );
        let (okf, _) = peirce_membership(&pair, &idem, &dec, &fiber_x).unwrap();
        assert!(okf);
        assert!(space.is_member(&fiber_x));
    }

    #[test]
    fn fiber_flattening_conjugates_products() {
        // On the fiber of rectangular(2,2) with e = e1 the map
        // F(z) = z + Q(z)e/2 turns 2x - y into the deformed product.
        let pair = JordanPair::rectangular(2, 2, rat_int(0));
        let idem = IdempotentPair::new(&pair, e1(), e1()).unwrap();
        let dec = peirce(&pair, &idem).unwrap();
        let space = DeformedSpace::new(pair.clone(), e1()).unwrap();
        let fib = |b: i64, c: i64, d: i64| m2(0, b, c, d);
        for (x, y) in [
            (fib(1, 1, 0), fib(0, 0, 0)),
            (fib(2, 3, 1), fib(1, -1, 2)),
            (fib(0, 5, -2), fib(4, 1, 1)),
        ] {
            let fx = fiber_flat_iso(&pair, &idem, &dec, &x).unwrap();
            let fy = fiber_flat_iso(&pair, &idem, &dec, &y).unwrap();
            let flat = x.scale(&rat_int(2)).sub(&y);
            let lhs = space.mu(&fx, &fy).unwrap();
            let rhs = fiber_flat_iso(&pair, &idem, &dec, &flat).unwrap();
            assert_eq!(lhs, rhs);
            // and the inverse map undoes F
            assert_eq!(fiber_flat_iso_inv(&pair, &idem, &dec, &fx).unwrap(), x);
        }
        // off-fiber input is rejected
        assert!(matches!(
            fiber_flat_iso(&pair, &idem, &dec, &m2(1, 0, 0, 0)),
            Err(Error::NotInFiber(_))
        ));
    }

    #[test]
    fn fiber_sigma0_block_formula() {
        // sigma_0 (0 b; c d) = (0 -b; -c, -d + cb) on the fiber
        let pair = JordanPair::rectangular(2, 2, rat_int(0));
        let space = DeformedSpace::new(pair, e1()).unwrap();
        let z = m2(0, 2, 3, 5);
        let expect = m2(0, -2, -3, -5 + 3 * 2);
        assert_eq!(space.sigma0(&z).unwrap(), expect);
    }

    #[test]
    fn structure_constants_algebra() {
        // K x K with componentwise product, via structure constants
        let proto = rat_int(0);
        let mut t = Tensor2::zero(2, 2, 2, &proto);
        t.set_coeff(0, 0, 0, rat_int(1));
        t.set_coeff(1, 1, 1, rat_int(1));
        let unit = Mat::from_vec(2, 1, vec![rat_int(1), rat_int(1)]);
        let alg = AssocAlgebra::from_structure("KxK", t, unit, proto).unwrap();
        let x = Mat::from_vec(2, 1, vec![rat_int(2), rat_int(3)]);
        assert!(alg.is_invertible(&x));
        assert_eq!(
            alg.inverse(&x).unwrap(),
            Mat::from_vec(2, 1, vec![crate::scalar::rat(1, 2), crate::scalar::rat(1, 3)])
        );
        let y = Mat::from_vec(2, 1, vec![rat_int(0), rat_int(1)]);
        assert!(!alg.is_invertible(&y));
    }
}
