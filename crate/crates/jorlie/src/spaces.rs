//! Deformed symmetric spaces in an affine chart: the space U_a attached to
//! a Jordan pair and a deformation element a, and the space M_alpha
//! attached to a JTS and a structural transformation alpha.
//!
//! Membership, quadratic maps, symmetries, products, squares, Lie triple
//! systems, and algebraic differentials via dual numbers.

use crate::dual::{Dual, Dual2};
use crate::error::{Error, Result};
use crate::homotope::{alpha_homotope, Jts, StructuralMap};
use crate::jordan::{apply_op, JordanAlgebra, JordanPair, Tensor3};
use crate::lie::{deformed_bracket, Lts};
use crate::linalg::Mat;
use crate::scalar::Ring;

// ---------------------------------------------------------------------------
// U_a: deformation of a Jordan pair by an element a of V-
// ---------------------------------------------------------------------------

/// The chart { x in V+ | B(x,-a) invertible } with base point 0, carrying
/// the quadratic map Q(x)y = 2x + Q(x)a + B(x,-a)y and the inversion
/// sigma_0(y) = -(y^{-a}).
#[derive(Clone, PartialEq, Debug)]
pub struct DeformedSpace<R> {
    pair: JordanPair<R>,
    a: Mat<R>,
}

impl<R: Ring> DeformedSpace<R> {
    pub fn new(pair: JordanPair<R>, a: Mat<R>) -> Result<Self> {
        pair.check_minus(&a)?;
        Ok(DeformedSpace { pair, a })
    }

    pub fn pair(&self) -> &JordanPair<R> {
        &self.pair
    }

    pub fn deformation(&self) -> &Mat<R> {
        &self.a
    }

    pub fn zero(&self) -> Mat<R> {
        self.pair.zero_plus()
    }

    pub fn is_member(&self, x: &Mat<R>) -> bool {
        self.pair.check_plus(x).is_ok() && self.pair.bergman_plus(x, &self.a.neg()).is_invertible()
    }

    fn require_member(&self, x: &Mat<R>) -> Result<()> {
        self.pair.check_plus(x)?;
        if !self.is_member(x) {
            return Err(Error::NotMember(format!(
                "B(x,-a) singular at x = {}",
                x.render()
            )));
        }
        Ok(())
    }

    /// The space quadratic map Q(x) y = 2x + Q(x)a + B(x,-a) y.
    pub fn q_apply(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        self.require_member(x)?;
        self.pair.check_plus(y)?;
        let two_x = x.scale(&x.proto().embed_i64(2));
        let qxa = self.pair.q_plus_apply(x, &self.a);
        let b = self.pair.bergman_plus(x, &self.a.neg());
        Ok(two_x.add(&qxa).add(&apply_op(&b, y, self.pair.plus_shape())))
    }

    /// sigma_0(y) = -(y^{-a}).
    pub fn sigma0(&self, y: &Mat<R>) -> Result<Mat<R>> {
        self.require_member(y)?;
        Ok(self.pair.quasi_inv_plus(y, &self.a.neg())?.neg())
    }

    /// Product mu(x, y) = sigma_x(y) = Q(x) sigma_0(y). Membership of the
    /// result is verified; a violation is reported as NotMember.
    pub fn mu(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        let s = self.sigma0(y)?;
        let out = self.q_apply(x, &s)?;
        if !self.is_member(&out) {
            return Err(Error::NotMember(format!(
                "product left the chart at {}",
                out.render()
            )));
        }
        Ok(out)
    }

    /// Enumerate members over a finite scalar ring given all module elements.
    pub fn members<'a>(&'a self, all: &'a [Mat<R>]) -> impl Iterator<Item = &'a Mat<R>> {
        all.iter().filter(|x| self.is_member(x))
    }

    /// Lie triple system at the base point: the antisymmetrization of
    /// S(u,v,w) = T+(u, Q(a)v, w) in the first two slots.
    pub fn lie_triple(&self) -> Lts<R> {
        let n = self.pair.plus_rank();
        let proto = self.pair.proto();
        let mut t = Tensor3::zero(n, n, n, n, proto);
        let s = |u: &Mat<R>, v: &Mat<R>, w: &Mat<R>| {
            let qa_v = self.pair.q_minus_apply(&self.a, v);
            self.pair.t_plus(u, &qa_v, w)
        };
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (x, y, z) = (
                        self.pair.basis_plus(j),
                        self.pair.basis_plus(k),
                        self.pair.basis_plus(l),
                    );
                    let v = s(&x, &y, &z).sub(&s(&y, &x, &z)).flatten();
                    for i in 0..n {
                        t.set_coeff(i, j, k, l, v.at(i, 0).clone());
                    }
                }
            }
        }
        Lts::from_tensor(
            &format!("lts({}, a)", self.pair.name),
            self.pair.plus_shape(),
            t,
            proto.clone(),
        )
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> DeformedSpace<S> {
        DeformedSpace {
            pair: self.pair.map_scalars(f),
            a: self.a.map(f),
        }
    }

    /// Algebraic differential of sigma_x at its fixed point, computed by
    /// dual-number scalar extension; equals -id for every member.
    pub fn symmetry_differential(&self, x: &Mat<R>, v: &Mat<R>) -> Result<Mat<R>> {
        let lifted = self.map_scalars(|c| Dual::constant(c.clone()));
        let xl = x.map(|c| Dual::constant(c.clone()));
        let pert = xl.add(&v.map(|c| Dual::new(c.ring_zero(), c.clone())));
        let out = lifted.mu(&xl, &pert)?;
        Ok(out.map(|d| d.eps.clone()))
    }
}

/// Prop.-2.2-style product on the translated chart of a unital Jordan
/// algebra: 2x + U_x a + B(x,-a) (tilde-tau_a(-y)), for invertible a.
/// Agrees with the U_a product of the pair of J.
pub fn translated_product<R: Ring>(
    j: &JordanAlgebra<R>,
    pair_of_j: &JordanPair<R>,
    a: &Mat<R>,
    x: &Mat<R>,
    y: &Mat<R>,
) -> Result<Mat<R>> {
    if !j.is_invertible(a) {
        return Err(Error::NotInvertible(a.render()));
    }
    let b = pair_of_j.bergman_plus(x, &a.neg());
    if !b.is_invertible() {
        return Err(Error::NotMember(x.render()));
    }
    let tau = pair_of_j.quasi_inv_plus(&y.neg(), a)?;
    let two_x = x.scale(&x.proto().embed_i64(2));
    Ok(two_x.add(&j.u_apply(x, a)).add(&apply_op(&b, &tau, j.shape())))
}

// ---------------------------------------------------------------------------
// M_alpha: deformation of a JTS by a structural transformation
// ---------------------------------------------------------------------------

/// The chart { x in V | B(x, -alpha x) invertible } of the symmetric space
/// attached to the alpha-homotope, with base point 0.
#[derive(Clone, Debug)]
pub struct HomotopeSpace<R> {
    jts: Jts<R>,
    alpha: StructuralMap<R>,
    /// Underlying pair of the homotope T_alpha (both polarities carry T_alpha).
    hpair: JordanPair<R>,
}

impl<R: Ring> HomotopeSpace<R> {
    pub fn new(jts: Jts<R>, alpha: StructuralMap<R>) -> Result<Self> {
        let ta = alpha_homotope(&jts, &alpha)?;
        let hpair = ta.underlying_pair();
        Ok(HomotopeSpace { jts, alpha, hpair })
    }

    pub fn jts(&self) -> &Jts<R> {
        &self.jts
    }

    pub fn alpha(&self) -> &StructuralMap<R> {
        &self.alpha
    }

    /// The underlying pair of the homotope T_alpha.
    pub fn homotope_pair(&self) -> &JordanPair<R> {
        &self.hpair
    }

    pub fn zero(&self) -> Mat<R> {
        self.jts.zero()
    }

    /// B_alpha(x, -x) = B(x, -alpha x) as an operator matrix.
    pub fn bergman_at(&self, x: &Mat<R>) -> Mat<R> {
        self.jts.bergman(x, &self.alpha.apply(x).neg())
    }

    pub fn is_member(&self, x: &Mat<R>) -> bool {
        self.jts.check_shape(x).is_ok() && self.bergman_at(x).is_invertible()
    }

    fn require_member(&self, x: &Mat<R>) -> Result<()> {
        self.jts.check_shape(x)?;
        if !self.is_member(x) {
            return Err(Error::NotMember(format!(
                "B(x,-alpha x) singular at x = {}",
                x.render()
            )));
        }
        Ok(())
    }

    /// Midpoint datum of the symmetry at x: the quasi-inverse x^{-x} taken
    /// in the homotope pair. Defined for every member.
    pub fn chart_midpoint(&self, x: &Mat<R>) -> Result<Mat<R>> {
        self.hpair.quasi_inv_minus(x, &x.neg())
    }

    fn half_square(&self, x: &Mat<R>) -> Result<Mat<R>> {
        self.chart_midpoint(x)
    }

    /// The symmetry sigma_x(y) = x + tilde-tau_{2 x^{-x}} (x - y), all
    /// operations taken in the homotope pair. Products that leave the
    /// chart are reported as OutOfDomain.
    pub fn sigma(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        self.require_member(x)?;
        self.require_member(y)?;
        let m = self.half_square(x)?;
        let w = m.scale(&m.proto().embed_i64(2));
        let u = self
            .hpair
            .quasi_inv_plus(&x.sub(y), &w)
            .map_err(|_| Error::OutOfDomain(format!("sigma_{}({})", x.render(), y.render())))?;
        let out = x.add(&u);
        if !self.is_member(&out) {
            return Err(Error::NotMember(format!(
                "symmetry left the chart at {}",
                out.render()
            )));
        }
        Ok(out)
    }

    pub fn mu(&self, x: &Mat<R>, y: &Mat<R>) -> Result<Mat<R>> {
        self.sigma(x, y)
    }

    /// The square sigma_x(0) = 2 (id - Q_alpha(x))^{-1} x.
    pub fn square(&self, x: &Mat<R>) -> Result<Mat<R>> {
        self.require_member(x)?;
        let q = self.hpair.q_plus(x);
        let id = Mat::identity(self.jts.rank(), self.jts.proto());
        let op = id.sub(&q);
        let sol = op
            .solve(&x.flatten())
            .map_err(|_| Error::SingularSquare(x.render()))?;
        let shape = self.jts.shape();
        Ok(sol.unflatten(shape.0, shape.1).scale(&x.proto().embed_i64(2)))
    }

    /// Lie triple system at the base point: the deformed bracket of T by alpha.
    pub fn lie_triple(&self) -> Result<Lts<R>> {
        deformed_bracket(&self.jts, &self.alpha)
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> HomotopeSpace<S> {
        HomotopeSpace {
            jts: self.jts.map_scalars(f),
            alpha: self.alpha.map_scalars(f),
            hpair: self.hpair.map_scalars(f),
        }
    }

    /// First differential of sigma_x at x in direction v, via dual numbers.
    pub fn symmetry_differential(&self, x: &Mat<R>, v: &Mat<R>) -> Result<Mat<R>> {
        let lifted = self.map_scalars(|c| Dual::constant(c.clone()));
        let xl = x.map(|c| Dual::constant(c.clone()));
        let pert = xl.add(&v.map(|c| Dual::new(c.ring_zero(), c.clone())));
        let out = lifted.sigma(&xl, &pert)?;
        Ok(out.map(|d| d.eps.clone()))
    }

    /// The eps1*eps2 coefficient of sigma_x(x + eps1 v1 + eps2 v2),
    /// computed both by second-order dual evaluation of the full product
    /// and by the closed form T_alpha(v1, 2 x^{-x}, v2); the two routes
    /// are asserted equal.
    pub fn second_differential(&self, x: &Mat<R>, v1: &Mat<R>, v2: &Mat<R>) -> Result<Mat<R>> {
        self.require_member(x)?;
        // closed form
        let m = self.half_square(x)?;
        let w = m.scale(&m.proto().embed_i64(2));
        let closed = self.hpair.t_plus(v1, &w, v2);

        // second-order dual route through the product formula
        let lifted = self.map_scalars(|c| Dual2::constant(c.clone()));
        let xl = x.map(|c| Dual2::constant(c.clone()));
        let z = x.proto().ring_zero();
        let pert = xl
            .add(&v1.map(|c| Dual2::new(z.clone(), c.clone(), z.clone(), z.clone())))
            .add(&v2.map(|c| Dual2::new(z.clone(), z.clone(), c.clone(), z.clone())));
        let out = lifted.sigma(&xl, &pert)?;
        assert_eq!(
            out.map(|d| d.value.clone()),
            *x,
            "value part of the second differential must be sigma_x(x) = x"
        );
        assert_eq!(
            out.map(|d| d.eps1.clone()),
            v1.neg(),
            "first differential must be -id (eps1)"
        );
        assert_eq!(
            out.map(|d| d.eps2.clone()),
            v2.neg(),
            "first differential must be -id (eps2)"
        );
        let extracted = out.map(|d| d.eps12.clone());
        assert_eq!(extracted, closed, "second differential routes disagree");
        Ok(extracted)
    }
}

/// All elements of a module of the given shape over GF(p), enumerated in
/// lexicographic order of coordinates. Test and sweep helper.
pub fn enumerate_fp_elements(
    shape: (usize, usize),
    field: &crate::scalar::Fp,
) -> Vec<Mat<crate::scalar::Fp>> {
    let n = shape.0 * shape.1;
    let p = field.modulus();
    let total = (p as usize).pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for idx in 0..total {
        let mut rem = idx;
        let mut coords = Vec::with_capacity(n);
        for _ in 0..n {
            coords.push(field.embed_i64((rem % p as usize) as i64));
            rem /= p as usize;
        }
        out.push(Mat::from_vec(shape.0, shape.1, coords));
    }
    out
}
