//! Generating finite rotation groups by breadth-first closure and
//! classifying them into the finite SO(3) families.
//!
//! ```bash
//! cargo run -p so3kit --example finite_closure
//! ```

use so3kit::corpus;
use so3kit::group::{FiniteRotGroup, GroupError};
use so3kit::quaternion::Quaternion;
use so3kit::rotation::theta;

fn main() {
    let b = theta(&Quaternion::from_ints(1, 1, 0, 0, 0)).unwrap();
    let c = theta(&Quaternion::j(0)).unwrap();
    let d8 = FiniteRotGroup::generate_closure(&[b, c], 100).unwrap();
    println!(
        "⟨theta(1+i), theta(j)⟩: order {}, {}",
        d8.order(),
        d8.classify_iso_type().unwrap()
    );

    // A full tour of the built-in corpus.
    for entry in corpus::corpus(false) {
        println!(
            "{:>10} (ambient √{}): order {:>2}, {}",
            entry.name,
            entry.ambient,
            entry.group.order(),
            entry.group.classify_iso_type().unwrap()
        );
    }

    // Two infinite-order generators never close: the cap fires instead.
    let g1 = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let g2 = theta(&Quaternion::from_ints(1, 0, 2, 0, 0)).unwrap();
    match FiniteRotGroup::generate_closure(&[g1, g2], 500) {
        Err(GroupError::ClosureExceedsCap { reached }) => {
            println!("free pair: closure exceeds cap after {reached} elements (expected)");
        }
        other => println!("unexpected: {other:?}"),
    }
}
