//! Partially-defined conformal maps as generator words: evaluation with
//! undefined outcomes, point reflections, midpoints, and the agreement of
//! the word-level symmetry with the closed-form chart product.
//!
//! Run: cargo run --example conformal_words

use jorlie::chart::{
    affine_parts, base_symmetry_word, midpoint, point_reflection_word, sigma_geometric,
    symmetry_word, Generator, Outcome, Word,
};
use jorlie::jordan::JordanPair;
use jorlie::linalg::Mat;
use jorlie::scalar::{rat, rat_int};
use jorlie::spaces::DeformedSpace;

fn main() {
    let p = JordanPair::rectangular(1, 1, rat_int(0));
    let sc = |n: i64, d: i64| Mat::from_vec(1, 1, vec![rat(n, d)]);

    // a word with a hole in its domain
    let w = Word::new(vec![Generator::QuasiTranslate(sc(1, 1))]);
    match w.eval(&p, &sc(1, 1)).unwrap() {
        Outcome::Undefined { index, point, qt } => {
            println!("undefined at generator {index}: B({point}, {qt}) is singular")
        }
        Outcome::Value(v) => println!("value {v}"),
    }
    println!("at -1 instead: {:?}", w.eval(&p, &sc(-1, 1)).unwrap().value());

    // point reflection fixing z
    let refl = point_reflection_word(&p, &sc(1, 1), &sc(0, 1)).unwrap();
    println!("reflection at 1 sends 5 to {}", refl.eval(&p, &sc(5, 1)).unwrap().expect_value());

    // midpoint datum
    println!("midpoint(a=2, x=1) = {}", midpoint(&p, &sc(2, 1), &sc(1, 1)).unwrap());

    // word-level symmetry vs closed form on the deformed chart
    let a = sc(1, 1);
    let space = DeformedSpace::new(p.clone(), a.clone()).unwrap();
    let (x, y) = (sc(1, 2), sc(1, 4));
    let closed = space.mu(&x, &y).unwrap();
    let word_value = sigma_geometric(&p, &a, &x, &y).unwrap().expect_value();
    println!("closed form: {closed}, word evaluation: {word_value}");

    // sigma_x sigma_0 is affine: translation 2x + Q(x)a, linear part B(x,-a)
    let composed = base_symmetry_word(&a).then(&symmetry_word(&p, &a, &x).unwrap());
    let (tr, lin) = affine_parts(&p, &composed).unwrap();
    println!("translation part {tr}, linear part {lin}");

    // the paired minus action transports midpoints:
    // p(sigma_x(y)) = sigma_x^-(p(y))
    let sw = symmetry_word(&p, &a, &x).unwrap();
    let py = midpoint(&p, &a, &y).unwrap();
    let lhs = midpoint(&p, &a, &sw.eval(&p, &y).unwrap().expect_value()).unwrap();
    let rhs = sw.eval_minus(&p, &py).unwrap().expect_value();
    println!("midpoint transport: {lhs} == {rhs}");
}
