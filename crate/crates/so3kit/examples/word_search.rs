//! Bounded word searches: evidence that theta(1+2i) and theta(1+2j)
//! generate a free group, and that theta(1+2i) and theta(1+4i) generate a
//! free abelian group.
//!
//! ```bash
//! cargo run -p so3kit --example word_search
//! ```

use so3kit::quaternion::Quaternion;
use so3kit::rotation::theta;
use so3kit::words::word_no_relation_search;

fn main() {
    let g1 = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let g2 = theta(&Quaternion::from_ints(1, 0, 2, 0, 0)).unwrap();
    // 1 + Σ 4·3^(len−1) reduced words; all must evaluate to distinct matrices
    for len in [3, 6, 8] {
        let result = word_no_relation_search(&[g1.clone(), g2.clone()], len).unwrap();
        println!("free pair, reduced words of length ≤ {len}: {result}");
    }

    // Commuting generators switch the search to power products g1^m g2^n.
    let h2 = theta(&Quaternion::from_ints(1, 4, 0, 0, 0)).unwrap();
    let result = word_no_relation_search(&[g1.clone(), h2], 10).unwrap();
    println!("commuting pair, exponent box |m|,|n| ≤ 10: {result}");

    // A finite generator is caught immediately.
    let a = theta(&Quaternion::i(0)).unwrap();
    println!(
        "single half turn: {}",
        word_no_relation_search(&[a], 4).unwrap()
    );
}
