//! The property taxonomy across the corpus, and the implication-diagram
//! harness that cross-checks every decision procedure against the known
//! implications between the tags.
//!
//! ```bash
//! cargo run -p so3kit --example property_survey
//! ```

use so3kit::corpus;
use so3kit::group::FiniteRotGroup;
use so3kit::properties::{implication_harness, PropertyTag, IMPLICATION_EDGES};

fn main() {
    let entries = corpus::corpus(false);
    let named: Vec<(&str, &FiniteRotGroup)> = entries.iter().map(|e| (e.name, &e.group)).collect();
    let report = implication_harness(&named).unwrap();

    print!("{:>10}", "");
    for tag in PropertyTag::ALL {
        print!("{:>4}", tag.label());
    }
    println!();
    for profile in &report.profiles {
        print!("{:>10}", profile.name);
        for tag in PropertyTag::ALL {
            print!("{:>4}", if profile.holds(tag) { "+" } else { "-" });
        }
        println!();
    }

    println!(
        "\n{} diagram edges checked on {} groups: {} violations",
        IMPLICATION_EDGES.len(),
        report.profiles.len(),
        report.violations.len()
    );

    // Failing tags come with replayable witnesses.
    let d12 = report.profiles.iter().find(|p| p.name == "D12").unwrap();
    let p4 = d12.report(PropertyTag::P4).unwrap();
    println!("\nD12 / P4: {p4}");
    let d8 = report.profiles.iter().find(|p| p.name == "D8").unwrap();
    let p3 = d8.report(PropertyTag::P3).unwrap();
    println!("D8 / P3: {p3}");
    println!("D8 / R3: {}", d8.report(PropertyTag::R3).unwrap());
}
