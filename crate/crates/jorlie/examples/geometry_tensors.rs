//! Geometric structures of a deformed chart: Christoffel tensor, trace
//! form, metric and cometric, and the invariant density with a numeric
//! invariance sweep.
//!
//! Run: cargo run --example geometry_tensors

use jorlie::geometry::{
    christoffel, cometric, density, density_invariance_check, metric, trace_form, trace_gram,
    JacobianMode,
};
use jorlie::homotope::{certify, Jts};
use jorlie::linalg::Mat;
use jorlie::scalar::{rat, rat_int, F64};
use jorlie::spaces::HomotopeSpace;

fn main() {
    // exact layer: the scalar model with alpha = id
    let t = Jts::rectangular(1, 1, rat_int(0));
    let alpha = certify(&t, Mat::identity(1, &rat_int(0))).unwrap();
    let m = HomotopeSpace::new(t.clone(), alpha).unwrap();
    let sc = |n: i64, d: i64| Mat::from_vec(1, 1, vec![rat(n, d)]);

    println!("g_0(u,v) = tr T(u,v,.) at (3,5): {}", trace_form(&t, &sc(3, 1), &sc(5, 1)));
    println!("trace-form Gram rank of rect(2,2): {}", trace_gram(&Jts::rectangular(2, 2, rat_int(0))).rank());
    println!("metric at x=1: {}", metric(&m, &sc(1, 1), &sc(1, 1), &sc(1, 1)).unwrap());
    println!("cometric at x=1: {}", cometric(&m, &sc(1, 1), &sc(1, 1), &sc(1, 1)));
    println!(
        "Christoffel at x=1/2, u=v=1: {}",
        christoffel(&m, &sc(1, 2), &sc(1, 1), &sc(1, 1)).unwrap()
    );
    println!(
        "second differential agrees: {}",
        m.second_differential(&sc(1, 2), &sc(1, 1), &sc(1, 1)).unwrap()
    );

    // numeric layer: the invariant density 1/(1+x^2)
    let tf = Jts::rectangular(1, 1, F64(0.0));
    let alphaf = certify(&tf, Mat::identity(1, &F64(0.0))).unwrap();
    let mf = HomotopeSpace::new(tf, alphaf).unwrap();
    let at = |v: f64| Mat::from_vec(1, 1, vec![F64(v)]);
    println!("\ndensity(0) = {}", density(&mf, &at(0.0)).unwrap());
    println!("density(1) = {}", density(&mf, &at(1.0)).unwrap());

    let samples: Vec<Mat<F64>> = (0..20)
        .map(|i| at(-2.0 + 0.05 + 0.2 * i as f64))
        .collect();
    let report = density_invariance_check(&mf, &at(0.5), &at(0.0), &samples, JacobianMode::DualNumber);
    println!(
        "invariance under sigma_(1/2) sigma_0: max rel error {:.3e} over {} points",
        report.max_rel_error, report.checked
    );
    let fd = density_invariance_check(
        &mf,
        &at(0.5),
        &at(0.0),
        &samples,
        JacobianMode::CentralDifference { step: 1e-5 },
    );
    println!(
        "finite-difference Jacobians:          max rel error {:.3e}",
        fd.max_rel_error
    );
}
