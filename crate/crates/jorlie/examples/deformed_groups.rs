//! Deformed unit groups G_a of an associative algebra: products,
//! inverses, the semidirect splitting at an idempotent, the adjoint
//! representation and modular character, and the infinitesimal bracket.
//!
//! Run: cargo run --example deformed_groups

use jorlie::catalog::{semidirect_factor, AssocAlgebra, DeformedGroup};
use jorlie::linalg::Mat;
use jorlie::scalar::{rat_int, Fp, Ring};
use jorlie::spaces::enumerate_fp_elements;

fn main() {
    let alg = AssocAlgebra::matrix_algebra(2, rat_int(0));
    let m2 = |a: i64, b: i64, c: i64, d: i64| {
        Mat::from_vec(2, 2, vec![rat_int(a), rat_int(b), rat_int(c), rat_int(d)])
    };
    let e1 = m2(1, 0, 0, 0);
    let g = DeformedGroup::new(alg, e1.clone()).unwrap();

    let x = m2(1, 2, 3, 4);
    let y = m2(0, 1, 1, 0);
    println!("x <> y = {}", g.product(&x, &y).unwrap());
    let inv = g.inverse(&x).unwrap();
    println!("x^{{-1}} = {inv}");
    println!("x <> inv = {}", g.product(&x, &inv).unwrap());

    // semidirect splitting: invertible block times Heisenberg part
    let (block, heis) = semidirect_factor(&g, &e1, &x).unwrap();
    println!("factors: {block} <> {heis}");

    // adjoint and modular character: matrix deformations stay unimodular
    let (ad, det) = g.adjoint_and_modular(&x).unwrap();
    println!("Ad(x) = {ad}");
    println!("det Ad(x) = {det}");

    // infinitesimal bracket at 0 equals x a y - y a x
    let u = m2(1, 0, 2, 1);
    let v = m2(0, 1, 1, 1);
    println!("dual bracket = {}", g.dual_bracket(&u, &v));
    println!("x a y - y a x = {}", g.bracket(&u, &v));

    // census over GF(5)
    let w = Fp::field(5).unwrap();
    let algf = AssocAlgebra::matrix_algebra(2, w.ring_zero());
    let ef = Mat::from_vec(
        2,
        2,
        vec![w.ring_one(), w.ring_zero(), w.ring_zero(), w.ring_zero()],
    );
    let gf5 = DeformedGroup::new(algf, ef).unwrap();
    let members = enumerate_fp_elements((2, 2), &w)
        .into_iter()
        .filter(|x| gf5.is_member(x))
        .count();
    println!("G_e over GF(5) has {members} members of 625");
}
