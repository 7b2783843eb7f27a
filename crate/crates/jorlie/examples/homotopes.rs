//! Structural transformations and alpha-homotopes: certification against
//! the structure variety, the homotope triple system, and the operator
//! identities Q_alpha = Q . alpha and B_alpha(x,y) = B(x, alpha y).
//!
//! Run: cargo run --example homotopes

use jorlie::homotope::{
    alpha_homotope, certify, is_structural, structure_variety_members, Jts, VarietyRequest,
};
use jorlie::lie::validate_jts;
use jorlie::linalg::Mat;
use jorlie::scalar::rat_int;

fn main() {
    let t = Jts::rectangular(2, 2, rat_int(0));
    let proto = rat_int(0);

    // catalog of certified structure-variety members
    let e1 = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)]);
    let x = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(1), rat_int(0), rat_int(1)]);
    let request = VarietyRequest {
        scalars: vec![rat_int(2)],
        quadratic: vec![e1.clone()],
        bergman_diagonal: vec![x],
        include_identity: true,
        include_neg_identity: true,
    };
    let members = structure_variety_members(&t, &request).unwrap();
    println!("certified {} structure-variety members", members.len());

    // a non-structural endomorphism is rejected with a witness
    let mut shift = Mat::zero(4, 4, &proto);
    shift.set(0, 1, rat_int(1));
    println!("shift structural: {}", is_structural(&t, &shift));
    match certify(&t, shift) {
        Err(e) => println!("certification error: {e}"),
        Ok(_) => unreachable!(),
    }

    // the Q(e1)-homotope is again a Jordan triple system
    let alpha = certify(&t, t.q_op(&e1)).unwrap();
    let ta = alpha_homotope(&t, &alpha).unwrap();
    println!("homotope axioms pass: {}", validate_jts(&ta).all_pass());

    // operator identities
    let u = Mat::from_vec(2, 2, vec![rat_int(0), rat_int(1), rat_int(2), rat_int(1)]);
    let v = Mat::from_vec(2, 2, vec![rat_int(1), rat_int(0), rat_int(1), rat_int(3)]);
    println!(
        "Q_alpha(u) == Q(u) alpha: {}",
        ta.q_op(&u) == t.q_op(&u).matmul(alpha.matrix())
    );
    println!(
        "B_alpha(u,v) == B(u, alpha v): {}",
        ta.bergman(&u, &v) == t.bergman(&u, &alpha.apply(&v))
    );
}
