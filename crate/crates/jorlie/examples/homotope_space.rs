//! The chart M_alpha of a JTS deformed by a structural transformation:
//! membership through B(x, -alpha x), products, squares, second
//! differentials, and c-duality of the attached Lie triple systems.
//!
//! Run: cargo run --example homotope_space

use jorlie::homotope::{certify, Jts};
use jorlie::linalg::Mat;
use jorlie::scalar::{rat, rat_int};
use jorlie::spaces::HomotopeSpace;

fn main() {
    let t = Jts::rectangular(1, 1, rat_int(0));
    let proto = rat_int(0);
    let sc = |n: i64, d: i64| Mat::from_vec(1, 1, vec![rat(n, d)]);

    // alpha = id: the compact scalar model (members: all of Q)
    let alpha = certify(&t, Mat::identity(1, &proto)).unwrap();
    let m = HomotopeSpace::new(t.clone(), alpha).unwrap();
    println!("alpha = id:");
    println!("  member(1)      = {}", m.is_member(&sc(1, 1)));
    println!("  square(1/2)    = {}", m.square(&sc(1, 2)).unwrap());
    println!("  sigma_{{1/2}}(1/4) = {}", m.sigma(&sc(1, 2), &sc(1, 4)).unwrap());
    let d2 = m.second_differential(&sc(1, 2), &sc(1, 1), &sc(1, 1)).unwrap();
    println!("  eps1*eps2 part of sigma_x at x = {d2}");

    // alpha = -id: the c-dual model (members: x != +-1)
    let alpha_neg = certify(&t, Mat::identity(1, &proto).neg()).unwrap();
    let mc = HomotopeSpace::new(t.clone(), alpha_neg).unwrap();
    println!("alpha = -id:");
    println!("  member(1)  = {}", mc.is_member(&sc(1, 1)));
    println!("  member(2)  = {}", mc.is_member(&sc(2, 1)));
    println!("  square(1/2) = {}", mc.square(&sc(1, 2)).unwrap());

    // the two Lie triple systems are exact negatives of each other
    let l_plus = m.lie_triple().unwrap();
    let l_minus = mc.lie_triple().unwrap();
    println!(
        "c-duality of brackets: {}",
        l_plus.c_dual().tensor() == l_minus.tensor()
    );

    // alpha = 0: the flat degeneration, mu = 2x - y everywhere
    let alpha0 = certify(&t, Mat::zero(1, 1, &proto)).unwrap();
    let flat = HomotopeSpace::new(t, alpha0).unwrap();
    println!(
        "flat product at (3, 1): {}",
        flat.sigma(&sc(3, 1), &sc(1, 1)).unwrap()
    );
}
