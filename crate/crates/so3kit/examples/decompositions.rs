//! Internal direct-product decompositions: the order-8 dihedral group has
//! none, while the order-12 dihedral group splits off its center against a
//! dihedral complement (in two ways).
//!
//! ```bash
//! cargo run -p so3kit --example decompositions
//! ```

use so3kit::corpus;
use so3kit::group::FiniteRotGroup;

fn survey(name: &str, group: &FiniteRotGroup) {
    let decs = group.decompositions().unwrap();
    if decs.is_empty() {
        println!("{name}: indecomposable");
        return;
    }
    println!("{name}: {} decomposition(s)", decs.len());
    for dec in decs {
        let h = group.subgroup_as_group(&dec.factor_h);
        let k = group.subgroup_as_group(&dec.factor_k);
        println!(
            "  {} x {}  (factors {} and {}; small factor central: {})",
            h.classify_iso_type().unwrap(),
            k.classify_iso_type().unwrap(),
            dec.factor_h,
            dec.factor_k,
            dec.factor_h.is_subset_of(&group.center()),
        );
    }
}

fn main() {
    let entries = corpus::corpus(false);
    for name in ["V4", "C6", "D6", "D8", "D12", "D12_sqrt3", "A4", "S4"] {
        let group = &entries.iter().find(|e| e.name == name).unwrap().group;
        survey(name, group);
    }
}
