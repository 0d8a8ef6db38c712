//! Deciding element orders. Finite orders come from exact power iteration;
//! infinite orders are certified by the trace test: 2cos(angle) of a
//! finite-order rotation must be an algebraic integer with all Galois
//! conjugates in [−2, 2].
//!
//! ```bash
//! cargo run -p so3kit --example order_certificate
//! ```

use so3kit::corpus;
use so3kit::quaternion::Quaternion;
use so3kit::rotation::{admits_finite_order, theta};
use so3kit::scalar::QuadScalar;

fn main() {
    let a = theta(&Quaternion::i(0)).unwrap();
    println!("half turn:        {}", a.element_order(10));

    let sixth = corpus::rot_x_sixth_turn_surd();
    println!("sixth turn (√3):  {}", sixth.element_order(10));
    // with a tiny cap the answer stays honest instead of guessing
    println!("  … with cap 3:   {}", sixth.element_order(3));

    let b_tilde = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    println!("theta(1+2i):      {}", b_tilde.element_order(100));

    let fifth = corpus::rot_icosahedral_fifth_turn();
    println!("fifth turn (√5):  {}", fifth.element_order(10));

    // The certificate itself, on raw trace terms 2cos(angle):
    for (label, t) in [
        ("1 (a sixth turn)", QuadScalar::from_int(1, 0)),
        ("-6/5", QuadScalar::from_ratio(-6, 5, 0)),
        ("(-1-√5)/2 (a fifth turn)", QuadScalar::from_parts(-1, 2, -1, 2, 5)),
        ("-1+√5 (conjugate escapes [-2,2])", QuadScalar::from_parts(-1, 1, 1, 1, 5)),
    ] {
        println!(
            "2cos(angle) = {label}: finite order possible: {}",
            admits_finite_order(&t)
        );
    }
}
