//! The chart U_a of a Jordan pair deformed by an element a: membership,
//! quadratic map, symmetries, products, the Lie triple system, and the
//! dual-number differential of the symmetries.
//!
//! Run: cargo run --example deformed_space

use jorlie::jordan::JordanPair;
use jorlie::lie::validate_lts;
use jorlie::linalg::Mat;
use jorlie::reflection::{check_pointed_axioms, check_reflection_axioms};
use jorlie::scalar::{rat, rat_int, Fp, Ring};
use jorlie::spaces::{enumerate_fp_elements, DeformedSpace};

fn main() {
    // scalar model, a = 1: membership excludes x = -1
    let p = JordanPair::rectangular(1, 1, rat_int(0));
    let sc = |n: i64, d: i64| Mat::from_vec(1, 1, vec![rat(n, d)]);
    let u = DeformedSpace::new(p, sc(1, 1)).unwrap();
    println!("member(-1) = {}", u.is_member(&sc(-1, 1)));
    println!("sigma_0(1) = {}", u.sigma0(&sc(1, 1)).unwrap());
    println!("mu(1/2, 1/4) = {}", u.mu(&sc(1, 2), &sc(1, 4)).unwrap());
    for v in [1i64, -2, 3] {
        let d = u.symmetry_differential(&sc(1, 2), &sc(v, 1)).unwrap();
        println!("D sigma_x(x) applied to {v} = {d}");
    }

    // exhaustive reflection-space axioms over GF(5)
    let w = Fp::field(5).unwrap();
    let pf = JordanPair::rectangular(1, 2, w.ring_zero());
    let e = pf.basis_minus(0);
    let uf = DeformedSpace::new(pf, e).unwrap();
    let all = enumerate_fp_elements((1, 2), &w);
    let members: Vec<_> = uf.members(&all).cloned().collect();
    println!("\nrect(1,2) over GF(5), a = e1: {} members of {}", members.len(), all.len());
    let (s_report, checked) = check_reflection_axioms("U_e", |x, y| uf.mu(x, y), &members);
    println!("S1-S3 pass: {} ({checked} instances)", s_report.all_pass());
    let (sb_report, _) =
        check_pointed_axioms("U_e", |x, y| uf.q_apply(x, y), |y| uf.sigma0(y), &members);
    println!("SB1-SB3 pass: {}", sb_report.all_pass());

    // Lie triple system at the base point
    let lts = uf.lie_triple();
    println!("LTS axioms pass: {}", validate_lts(&lts).all_pass());
}
