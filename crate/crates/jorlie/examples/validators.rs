//! Axiom validators with counterexample witnesses: a healthy instance, a
//! corrupted one, and the JSON report format.
//!
//! Run: cargo run --example validators

use jorlie::homotope::Jts;
use jorlie::jordan::{JordanPair, Tensor3};
use jorlie::lie::{jordan_lie, validate_jordan_pair, validate_jts, validate_lts, Lts};
use jorlie::scalar::{rat_int, Fp, Ring};

fn main() {
    // a healthy pair over GF(5)
    let w = Fp::field(5).unwrap();
    let pair = JordanPair::rectangular(1, 2, w.ring_zero());
    let report = validate_jordan_pair(&pair);
    println!("rect(1,2)/GF(5) all pass: {}", report.all_pass());

    // the attached triple system and Lie triple system
    let jts = Jts::rectangular(1, 2, w.ring_zero());
    println!("JTS axioms: {}", validate_jts(&jts).all_pass());
    println!("LTS axioms: {}", validate_lts(&jordan_lie(&jts)).all_pass());

    // a deliberately broken bracket: [x,y,z] := x violates LT1, and the
    // report carries a concrete witness that re-evaluates to the violation
    let proto = rat_int(0);
    let mut t = Tensor3::zero(1, 1, 1, 1, &proto);
    t.set_coeff(0, 0, 0, 0, rat_int(1));
    let bad = Lts::from_tensor("broken", (1, 1), t, proto);
    let report = validate_lts(&bad);
    println!("\nbroken bracket all pass: {}", report.all_pass());
    println!("report JSON:\n{}", serde_json::to_string_pretty(&report.to_json()).unwrap());

    for axiom in &report.axioms {
        if axiom.pass {
            continue;
        }
        for w in &axiom.witnesses {
            let replay = bad
                .bracket(&w.inputs[0], &w.inputs[1], &w.inputs[2])
                .add(&bad.bracket(&w.inputs[1], &w.inputs[0], &w.inputs[2]));
            println!(
                "replayed witness for {}: {} (nonzero: {})",
                axiom.name,
                replay.render(),
                !replay.is_zero()
            );
        }
    }
}
