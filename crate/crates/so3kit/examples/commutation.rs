//! Commutation structure of quaternions: the two exact criteria and the
//! commute/anticommute/neither trichotomy that controls whether rotation
//! images commute.
//!
//! ```bash
//! cargo run -p so3kit --example commutation
//! ```

use so3kit::quaternion::{
    anticommute_criterion, anticommutes, commutation_trichotomy, commutes, perp,
    vector_parts_dependent, Quaternion,
};
use so3kit::rotation::theta;

fn main() {
    let i = Quaternion::i(0);
    let j = Quaternion::j(0);
    let one_plus_i = Quaternion::from_ints(1, 1, 0, 0, 0);

    // Anticommutation happens exactly for pure, perpendicular pairs.
    println!("i ⊥ j: {}", perp(&i, &j));
    println!("ij = -ji: {}", anticommutes(&i, &j).unwrap());
    println!(
        "criterion (pure ∧ perpendicular): {}",
        anticommute_criterion(&i, &j)
    );

    // Commutation happens exactly when the vector parts are dependent.
    println!("i(1+i) = (1+i)i: {}", commutes(&i, &one_plus_i));
    println!(
        "vector parts dependent: {}",
        vector_parts_dependent(&i, &one_plus_i)
    );

    // The trichotomy, on the three classifying examples.
    for (label, x, y) in [
        ("(i, 1+i)", i.clone(), one_plus_i.clone()),
        ("(i, j)", i.clone(), j.clone()),
        ("(1+i, j)", one_plus_i.clone(), j.clone()),
    ] {
        let tri = commutation_trichotomy(&x, &y).unwrap();
        let images_commute = theta(&x).unwrap().commutes_with(&theta(&y).unwrap());
        println!("{label}: {tri} — rotation images commute: {images_commute}");
    }
}
