//! Operator calculus of a Jordan pair: triple products, quadratic and
//! Bergman operators, quasi-inverses.
//!
//! Run: cargo run --example pair_calculus

use jorlie::jordan::JordanPair;
use jorlie::linalg::Mat;
use jorlie::scalar::{rat_int, Fp, Rat, Ring};

fn main() {
    // scalar pair: T(x,a,y) = 2xay
    let p = JordanPair::rectangular(1, 1, rat_int(0));
    let sc = |n: i64| Mat::from_vec(1, 1, vec![rat_int(n)]);

    println!("T(2,3,4)        = {}", p.t_plus(&sc(2), &sc(3), &sc(4)));
    println!("Q(2) 1          = {}", p.q_plus_apply(&sc(2), &sc(1)));
    println!("B(2,3)          = {}", p.bergman_plus(&sc(2), &sc(3)));
    println!("2^3 (quasi-inv) = {}", p.quasi_inv_plus(&sc(2), &sc(3)).unwrap());
    println!("x ._3 y at 2,4  = {}", p.homotope_product(&sc(2), &sc(3), &sc(4)));

    // quasi-translation group law: (x^y)^{-y} = x
    let x = sc(5);
    let y = sc(2);
    let there = p.quasi_inv_plus(&x, &y).unwrap();
    let back = p.quasi_inv_plus(&there, &y.neg()).unwrap();
    println!("({}^{})^(-{}) = {}", x, y, y, back);

    // rectangular matrices over GF(7)
    let w = Fp::field(7).unwrap();
    let p22 = JordanPair::rectangular(2, 2, w.ring_zero());
    let m = Mat::from_vec(
        2,
        2,
        vec![w.embed_i64(1), w.embed_i64(2), w.embed_i64(3), w.embed_i64(4)],
    );
    let a = Mat::from_vec(
        2,
        2,
        vec![w.embed_i64(1), w.embed_i64(0), w.embed_i64(1), w.embed_i64(1)],
    );
    println!("\nover GF(7):");
    println!("B(m,a) invertible: {}", p22.bergman_plus(&m, &a).is_invertible());
    match p22.quasi_inv_plus(&m, &a) {
        Ok(qi) => println!("m^a = {qi}"),
        Err(e) => println!("m^a undefined: {e}"),
    }

    // the homotope algebra V+_a of the rational 2x2 pair
    let pq = JordanPair::rectangular(2, 2, rat_int(0));
    let e1 = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)]);
    let alg = pq.homotope_algebra(&e1);
    let x: Mat<Rat> = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)]);
    println!("\nhomotope algebra V+_e1:");
    println!("x . x = {}", alg.product(&x, &x));
    println!("U_x invertible: {}", alg.is_invertible(&x));
}
