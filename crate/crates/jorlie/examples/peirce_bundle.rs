//! Peirce decomposition of an idempotent pair and the bundle structure of
//! the deformed chart: membership through the 2-component, the flat
//! structure of the fiber, and the group case on the base.
//!
//! Run: cargo run --example peirce_bundle

use jorlie::catalog::{fiber_flat_iso, peirce, peirce_membership, IdempotentPair};
use jorlie::jordan::JordanPair;
use jorlie::linalg::Mat;
use jorlie::scalar::rat_int;
use jorlie::spaces::DeformedSpace;

fn main() {
    let pair = JordanPair::rectangular(2, 2, rat_int(0));
    let m2 = |a: i64, b: i64, c: i64, d: i64| {
        Mat::from_vec(2, 2, vec![rat_int(a), rat_int(b), rat_int(c), rat_int(d)])
    };
    let e = m2(1, 0, 0, 0);
    let idem = IdempotentPair::new(&pair, e.clone(), e.clone()).unwrap();
    let dec = peirce(&pair, &idem).unwrap();

    let x = m2(5, 6, 7, 8);
    let (x0, x1, x2) = dec.split(&pair, &x);
    println!("x2 = {x2}");
    println!("x1 = {x1}");
    println!("x0 = {x0}");

    // membership through the Peirce criterion vs the Bergman operator
    let space = DeformedSpace::new(pair.clone(), e.clone()).unwrap();
    for cand in [x.clone(), m2(-1, 2, 3, 4), m2(0, 1, 1, 1)] {
        let (ok, _) = peirce_membership(&pair, &idem, &dec, &cand).unwrap();
        println!(
            "member({})? peirce: {ok}, bergman: {}",
            cand.render(),
            space.is_member(&cand)
        );
    }

    // the fiber flattens onto (x, y) -> 2x - y
    let fx = m2(0, 1, 2, 3);
    let fy = m2(0, 2, -1, 1);
    let ix = fiber_flat_iso(&pair, &idem, &dec, &fx).unwrap();
    let iy = fiber_flat_iso(&pair, &idem, &dec, &fy).unwrap();
    let lhs = space.mu(&ix, &iy).unwrap();
    let rhs = fiber_flat_iso(
        &pair,
        &idem,
        &dec,
        &fx.scale(&rat_int(2)).sub(&fy),
    )
    .unwrap();
    println!("fiber conjugation: {} == {}", lhs.render(), rhs.render());

    // base restriction: products of e-block elements stay in the base
    let bx = m2(2, 0, 0, 0);
    let by = m2(1, 0, 0, 0);
    println!("base product: {}", space.mu(&bx, &by).unwrap());
}
