//! Subgroup enumeration, centers, centralizers, maximal abelian subgroups
//! and malnormality on a small dihedral group.
//!
//! ```bash
//! cargo run -p so3kit --example subgroup_lattice
//! ```

use so3kit::corpus;

fn main() {
    let entries = corpus::corpus(false);
    let d8 = &entries.iter().find(|e| e.name == "D8").unwrap().group;

    let subs = d8.subgroups().unwrap();
    println!("the order-8 dihedral group has {} subgroups:", subs.len());
    for s in &subs {
        println!(
            "  order {} {} — {}",
            s.order(),
            s,
            d8.subgroup_as_group(s).classify_iso_type().unwrap()
        );
    }

    let center = d8.center();
    println!("center: {center} (order {})", center.order());

    for i in 0..d8.order() {
        if d8.element_order_index(i) == 4 {
            let cent = d8.centralizer(i);
            println!("centralizer of the order-4 element {i}: {cent}");
            break;
        }
    }

    println!("maximal abelian subgroups:");
    for s in d8.maximal_abelian_subgroups().unwrap() {
        let malnormal = d8.is_malnormal(&s).unwrap();
        println!(
            "  {} ({}), malnormal: {malnormal}",
            s,
            d8.subgroup_as_group(&s).classify_iso_type().unwrap()
        );
    }
}
