//! Cross-checks of the subgroup and decomposition machinery against
//! brute-force oracles that enumerate subsets directly. The oracles stay
//! independent of the production search (cyclic seeds + pairwise joins).

use std::collections::BTreeSet;

use so3kit::corpus;
use so3kit::group::FiniteRotGroup;

/// Every subset of divisor cardinality containing the identity and closed
/// under the product. Exponential; callers keep the order small.
fn brute_force_subgroups(g: &FiniteRotGroup) -> Vec<BTreeSet<usize>> {
    let n = g.order();
    assert!(n <= 12, "oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue; // must contain the identity (index 0)
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !n.is_multiple_of(members.len()) {
            continue;
        }
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| mask >> g.product(a, b) & 1 == 1));
        if closed {
            out.push(members.into_iter().collect());
        }
    }
    out
}

/// All unordered pairs of non-trivial oracle subgroups with trivial
/// intersection, elementwise commuting, and orders multiplying to |G|.
fn brute_force_decompositions(
    g: &FiniteRotGroup,
    subs: &[BTreeSet<usize>],
) -> Vec<(BTreeSet<usize>, BTreeSet<usize>)> {
    let n = g.order();
    let mut out = Vec::new();
    for (i, h) in subs.iter().enumerate() {
        for k in &subs[i..] {
            if h.len() < 2 || k.len() < 2 || h.len() * k.len() != n {
                continue;
            }
            if h.intersection(k).count() != 1 {
                continue;
            }
            let commute = h
                .iter()
                .all(|&a| k.iter().all(|&b| g.product(a, b) == g.product(b, a)));
            if commute {
                let (first, second) = if (h.len(), h) <= (k.len(), k) {
                    (h.clone(), k.clone())
                } else {
                    (k.clone(), h.clone())
                };
                out.push((first, second));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn production_subgroups_as_sets(g: &FiniteRotGroup) -> Vec<BTreeSet<usize>> {
    g.subgroups()
        .unwrap()
        .iter()
        .map(|s| s.indices().iter().copied().collect())
        .collect()
}

#[test]
fn subgroup_enumeration_matches_brute_force() {
    let entries = corpus::corpus(false);
    for name in ["C2", "C6", "V4", "D6", "D8", "D12_sqrt3", "A4"] {
        let g = &entries.iter().find(|e| e.name == name).unwrap().group;
        let mut brute = brute_force_subgroups(g);
        let mut fast = production_subgroups_as_sets(g);
        brute.sort();
        fast.sort();
        assert_eq!(brute, fast, "subgroup lists differ for {name}");
    }
}

#[test]
fn decompositions_match_brute_force() {
    let entries = corpus::corpus(false);
    for name in ["C6", "V4", "D6", "D8", "D12", "D12_sqrt3", "A4"] {
        let g = &entries.iter().find(|e| e.name == name).unwrap().group;
        let brute_subs = brute_force_subgroups(g);
        let brute = brute_force_decompositions(g, &brute_subs);
        let fast: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = g
            .decompositions()
            .unwrap()
            .iter()
            .map(|d| {
                (
                    d.factor_h.indices().iter().copied().collect(),
                    d.factor_k.indices().iter().copied().collect(),
                )
            })
            .collect();
        assert_eq!(brute, fast, "decomposition lists differ for {name}");
    }
    // order 24: the subset oracle is out of reach, so the independent piece
    // is the exhaustive pair scan over the subgroup list
    let s4 = &entries.iter().find(|e| e.name == "S4").unwrap().group;
    let subs = production_subgroups_as_sets(s4);
    assert!(brute_force_decompositions(s4, &subs).is_empty());
    assert!(s4.decompositions().unwrap().is_empty());
}

#[test]
fn classical_subgroup_counts() {
    let entries = corpus::corpus(false);
    let count = |name: &str| {
        entries
            .iter()
            .find(|e| e.name == name)
            .unwrap()
            .group
            .subgroups()
            .unwrap()
            .len()
    };
    assert_eq!(count("C2"), 2);
    assert_eq!(count("D8"), 10);
    assert_eq!(count("D12"), 16);
    assert_eq!(count("D12_sqrt3"), 16);
    assert_eq!(count("S4"), 30);
    assert_eq!(count("A5"), 59);
}

#[test]
fn closure_idempotence_across_corpus() {
    for entry in corpus::corpus(false) {
        let g = &entry.group;
        let again = FiniteRotGroup::generate_closure(g.elements(), g.order()).unwrap();
        assert_eq!(again.order(), g.order(), "{}", entry.name);
        for e in again.elements() {
            assert!(g.index_of(e).is_some(), "{}", entry.name);
        }
    }
}

#[test]
fn lagrange_across_corpus() {
    for entry in corpus::corpus(false) {
        if entry.group.order() > 60 {
            continue;
        }
        for s in entry.group.subgroups().unwrap() {
            assert_eq!(
                entry.group.order() % s.order(),
                0,
                "{}: subgroup {s}",
                entry.name
            );
        }
    }
}

#[test]
fn centralizer_examples() {
    let entries = corpus::corpus(false);
    let d12 = &entries.iter().find(|e| e.name == "D12_sqrt3").unwrap().group;
    // the centralizer of an order-6 rotation is the full rotation subgroup
    let r = (0..12).find(|&i| d12.element_order_index(i) == 6).unwrap();
    let cent = d12.centralizer(r);
    assert_eq!(cent.order(), 6);
    assert_eq!(
        d12.subgroup_as_group(&cent).classify_iso_type().unwrap(),
        so3kit::group::IsoType::Cyclic(6)
    );
    // the identity is centralized by everything
    for entry in &entries {
        assert_eq!(entry.group.centralizer(0).order(), entry.group.order());
    }
}
