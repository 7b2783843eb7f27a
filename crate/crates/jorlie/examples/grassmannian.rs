//! Grassmannian deformations: orthocomplements for a split bilinear form,
//! subspace-level reflections, and their agreement with the deformed
//! chart product through graph coordinates.
//!
//! Run: cargo run --example grassmannian

use jorlie::grassmann::{GrassmannPoint, SplitForm};
use jorlie::homotope::Jts;
use jorlie::linalg::Mat;
use jorlie::scalar::rat_int;
use jorlie::spaces::HomotopeSpace;

fn main() {
    let m2 = |a: i64, b: i64, c: i64, d: i64| {
        Mat::from_vec(2, 2, vec![rat_int(a), rat_int(b), rat_int(c), rat_int(d)])
    };
    let id2 = Mat::identity(2, &rat_int(0));

    // three forms: identity blocks, a degenerate B2, symplectic blocks
    let forms = vec![
        ("identity", SplitForm::new(id2.clone(), id2.clone(), false).unwrap()),
        (
            "degenerate",
            SplitForm::new(id2.clone(), m2(1, 0, 0, 0), false).unwrap(),
        ),
        (
            "symplectic",
            SplitForm::new(m2(0, 1, -1, 0), m2(0, 1, -1, 0), true).unwrap(),
        ),
    ];

    let jts = Jts::rectangular(2, 2, rat_int(0));
    let candidates = [
        (m2(1, 0, 2, 1), m2(0, 1, 1, 3)),
        (m2(1, 0, 0, 0), m2(0, 0, 0, 1)),
        (m2(0, 1, 0, 0), m2(1, 0, 0, 1)),
        (m2(1, 1, 0, 0), m2(0, 0, 1, 0)),
    ];

    for (label, beta) in forms {
        println!("--- {label} blocks ---");
        let comp = beta.complement(&GrassmannPoint::graph(&candidates[0].0)).unwrap();
        println!("complement basis of Gamma_X:\n  {}", comp.basis().render());

        // subspace reflection vs chart product, on the first sample whose
        // product stays inside the chart
        let alpha = beta.chart_structural_map(&jts).unwrap();
        println!("chart alpha = {}", alpha.matrix().render());
        let space = HomotopeSpace::new(jts.clone(), alpha).unwrap();
        let mut shown = false;
        for (x, y) in &candidates {
            if !space.is_member(x) || !space.is_member(y) {
                continue;
            }
            let chart = match space.sigma(x, y) {
                Ok(v) => v,
                Err(_) => continue, // product left the chart
            };
            let reflected = match beta.reflect(&GrassmannPoint::graph(x), &GrassmannPoint::graph(y)) {
                Ok(r) => r,
                Err(_) => continue,
            };
            if let Some(linear) = reflected.chart(2) {
                println!("X = {}, Y = {}", x.render(), y.render());
                println!("chart product    {}", chart.render());
                println!("subspace product {}", reflected.chart(2).unwrap().render());
                assert_eq!(linear, chart);
                shown = true;
                break;
            }
        }
        if !shown {
            println!("no in-chart sample among the candidates");
        }
    }
}
