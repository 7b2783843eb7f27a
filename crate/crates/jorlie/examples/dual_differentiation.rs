//! Algebraic differentiation with dual numbers: first differentials of
//! symmetries, second differentials through second-order duals, and the
//! inversion rule (1 + eps v)^{-1} = 1 - eps v.
//!
//! Run: cargo run --example dual_differentiation

use jorlie::dual::{Dual, Dual2};
use jorlie::homotope::{certify, Jts};
use jorlie::jordan::JordanAlgebra;
use jorlie::linalg::Mat;
use jorlie::scalar::{rat, rat_int, Ring};
use jorlie::spaces::HomotopeSpace;

fn main() {
    // the inversion rule in the scalar algebra
    let one_plus = Dual::new(rat_int(1), rat_int(5));
    println!("(1 + 5 eps)^(-1) = {}", one_plus.inv().unwrap());

    // tangent map of the Jordan inverse at the unit is -id
    let j = JordanAlgebra::full_matrix(2, rat_int(0));
    let jd = j.map_scalars(|c| Dual::constant(c.clone()));
    let v = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(2), rat_int(0), rat_int(-1)]);
    let arg = jd
        .unit()
        .unwrap()
        .add(&v.map(|c| Dual::new(c.ring_zero(), c.clone())));
    let inv = jd.inverse(&arg).unwrap();
    println!(
        "eps part of (1 + eps v)^(-1) in M(2,2): {}",
        inv.map(|d| d.eps.clone()).render()
    );

    // first differential of a chart symmetry at its fixed point
    let t = Jts::rectangular(1, 1, rat_int(0));
    let alpha = certify(&t, Mat::identity(1, &rat_int(0))).unwrap();
    let space = HomotopeSpace::new(t, alpha).unwrap();
    let x = Mat::from_vec(1, 1, vec![rat(1, 2)]);
    let dir = Mat::from_vec(1, 1, vec![rat_int(3)]);
    println!(
        "D sigma_x(x) applied to 3: {}",
        space.symmetry_differential(&x, &dir).unwrap()
    );

    // second-order duals: eps1 eps2 extraction
    let e1 = Dual2::new(rat_int(0), rat_int(1), rat_int(0), rat_int(0));
    let e2 = Dual2::new(rat_int(0), rat_int(0), rat_int(1), rat_int(0));
    println!("e1 * e2 = {}", e1.mul(&e2));
    println!("e1 * e1 = {}", e1.mul(&e1));
    let d2 = space
        .second_differential(&x, &Mat::from_vec(1, 1, vec![rat_int(1)]), &Mat::from_vec(1, 1, vec![rat_int(1)]))
        .unwrap();
    println!("mixed second differential of sigma_x at x: {}", d2.render());
}
