//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Everything is exact — no tolerance appears anywhere.

use so3kit::corpus;
use so3kit::fuzz::QuatFuzz;
use so3kit::group::{FiniteRotGroup, IsoType};
use so3kit::properties::{
    check_property, implication_harness, verify_witness, PropertyTag, Witness,
};
use so3kit::quaternion::{self, Quaternion, Trichotomy};
use so3kit::rotation::{theta, OrderResult, Rot3};
use so3kit::scalar::QuadScalar;
use so3kit::suite::{run_suite, SuiteConfig, Verdict};
use so3kit::words::{word_no_relation_search, WordSearchResult};

fn rot0(entries: [[(i64, i64); 3]; 3]) -> Rot3 {
    Rot3::from_ratios(entries, 0).expect("rotation")
}

fn pass(n: u32, what: &str) {
    println!("[criterion {n:02}] PASS: {what}");
}

#[test]
fn criterion_01_theta_golden_matrices() {
    let cases: [(Quaternion, Rot3); 5] = [
        (
            Quaternion::i(0),
            rot0([[(1, 1), (0, 1), (0, 1)], [(0, 1), (-1, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)]]),
        ),
        (
            Quaternion::j(0),
            rot0([[(-1, 1), (0, 1), (0, 1)], [(0, 1), (1, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)]]),
        ),
        (
            Quaternion::from_ints(1, 2, 0, 0, 0),
            rot0([[(1, 1), (0, 1), (0, 1)], [(0, 1), (-3, 5), (-4, 5)], [(0, 1), (4, 5), (-3, 5)]]),
        ),
        (
            Quaternion::from_ints(1, 0, 2, 0, 0),
            rot0([[(-3, 5), (0, 1), (4, 5)], [(0, 1), (1, 1), (0, 1)], [(-4, 5), (0, 1), (-3, 5)]]),
        ),
        (
            Quaternion::from_ints(1, 4, 0, 0, 0),
            rot0([
                [(1, 1), (0, 1), (0, 1)],
                [(0, 1), (-15, 17), (-8, 17)],
                [(0, 1), (8, 17), (-15, 17)],
            ]),
        ),
    ];
    for (q, want) in &cases {
        let got = theta(q).expect("nonzero");
        assert_eq!(&got, want, "theta({q}) mismatch");
    }
    pass(1, "all five golden rotation images match exactly");
}

#[test]
fn criterion_02_commutation_biconditionals_fuzz() {
    let mut fz = QuatFuzz::new(0xC2, 0, false);
    let mut anticommute_pairs = 0usize;
    let mut commute_pairs = 0usize;
    let mut checked = 0usize;
    let mut run_pair = |x: &Quaternion, y: &Quaternion| {
        checked += 1;
        // direct multiplication is the oracle on both biconditionals
        let anti = quaternion::anticommutes(x, y).expect("nonzero");
        assert_eq!(
            anti,
            quaternion::anticommute_criterion(x, y),
            "anticommutation biconditional fails for x={x}, y={y}"
        );
        if anti {
            anticommute_pairs += 1;
        }
        let comm = quaternion::commutes(x, y);
        assert_eq!(
            comm,
            quaternion::vector_parts_dependent(x, y),
            "commutation biconditional fails for x={x}, y={y}"
        );
        if comm {
            commute_pairs += 1;
        }
    };
    for _ in 0..300 {
        let x = fz.nonzero_quaternion();
        let y = fz.nonzero_quaternion();
        run_pair(&x, &y);
        let (p, q) = fz.perpendicular_pure_pair();
        run_pair(&p, &q);
        let base = fz.non_real_quaternion();
        let companion = fz.commuting_companion(&base);
        run_pair(&base, &companion);
        let u = fz.pure_quaternion();
        let v = fz.pure_quaternion();
        run_pair(&u, &v);
    }
    assert!(checked >= 1000, "need at least 1000 pairs per lemma");
    assert!(anticommute_pairs >= 100 && commute_pairs >= 100);
    pass(
        2,
        "both commutation biconditionals exact on ≥1000 fuzzed pairs",
    );
}

#[test]
fn criterion_03_commutative_transitivity_fuzz() {
    let mut fz = QuatFuzz::new(0xC3, 0, false);
    for _ in 0..1000 {
        let x = fz.non_real_quaternion();
        let y = fz.commuting_companion(&x);
        let z = fz.commuting_companion(&x);
        assert!(quaternion::commutes(&x, &y) && quaternion::commutes(&x, &z));
        assert!(!y.is_real() && !z.is_real());
        assert!(
            quaternion::commutes(&y, &z),
            "transitivity fails for x={x}, y={y}, z={z}"
        );
    }
    pass(3, "commuting is transitive on 1000 non-real triples");
}

#[test]
fn criterion_04_commutative_transitivity_counterexample() {
    let a = theta(&Quaternion::i(0)).unwrap();
    let b = theta(&Quaternion::from_ints(1, 1, 0, 0, 0)).unwrap();
    let c = theta(&Quaternion::j(0)).unwrap();
    assert_eq!(&a * &b, &b * &a, "AB = BA");
    assert_eq!(&a * &c, &c * &a, "AC = CA");
    assert_ne!(&b * &c, &c * &b, "BC ≠ CB");
    let tri = |x: &Quaternion, y: &Quaternion| quaternion::commutation_trichotomy(x, y).unwrap();
    assert_eq!(
        tri(&Quaternion::i(0), &Quaternion::from_ints(1, 1, 0, 0, 0)),
        Trichotomy::Commute
    );
    assert_eq!(tri(&Quaternion::i(0), &Quaternion::j(0)), Trichotomy::Anticommute);
    assert_eq!(
        tri(&Quaternion::from_ints(1, 1, 0, 0, 0), &Quaternion::j(0)),
        Trichotomy::Neither
    );
    pass(4, "matrix relations and trichotomy values all match");
}

#[test]
fn criterion_05_infinite_direct_product_example() {
    let a = theta(&Quaternion::i(0)).unwrap();
    let b_tilde = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let c = theta(&Quaternion::j(0)).unwrap();
    assert!(a.commutes_with(&b_tilde));
    assert!(a.commutes_with(&c));
    assert_eq!(&c * &b_tilde, &b_tilde.inverse() * &c, "C·B̃ = B̃⁻¹·C");
    match b_tilde.element_order(100) {
        OrderResult::InfiniteCertified { trace_term } => {
            assert_eq!(trace_term, QuadScalar::from_ratio(-6, 5, 0));
        }
        other => panic!("expected certified infinite order, got {other:?}"),
    }
    let mut power = b_tilde.pow(-50);
    for n in -50i64..=50 {
        assert_ne!(power, a, "A = B̃^{n}");
        assert_ne!(&power * &c, a, "A = B̃^{n}·C");
        power = &power * &b_tilde;
    }
    pass(
        5,
        "infinite example: commutation, conjugation, certified infinite order, bounded disjointness",
    );
}

#[test]
fn criterion_06_finite_direct_product_example() {
    let gens = [corpus::rot_x_sixth_turn_surd(), corpus::rot_y_half_turn(3)];
    let d12 = FiniteRotGroup::generate_closure(&gens, 100).expect("closes");
    assert_eq!(d12.order(), 12);
    assert_eq!(d12.classify_iso_type().unwrap(), IsoType::Dihedral(6));
    let decs = d12.decompositions().unwrap();
    let center = d12.center();
    for dec in &decs {
        assert_eq!(dec.factor_h.order(), 2, "small factor has order 2");
        assert!(
            dec.factor_h.is_subset_of(&center),
            "order-2 factor is central"
        );
        assert_eq!(
            d12.subgroup_as_group(&dec.factor_k)
                .classify_iso_type()
                .unwrap(),
            IsoType::Dihedral(3),
            "large factor is the order-6 dihedral group"
        );
    }
    assert_eq!(
        decs.len(),
        1,
        "expected exactly one unordered decomposition pair, found {}: \
         the order-12 dihedral group has two order-6 dihedral complements to \
         its center, and both pairs satisfy every decomposition invariant",
        decs.len()
    );
    pass(6, "finite example: order 12, Dihedral(6), unique central decomposition");
}

#[test]
fn criterion_07_d8_indecomposable() {
    let b = theta(&Quaternion::from_ints(1, 1, 0, 0, 0)).unwrap();
    let c = theta(&Quaternion::j(0)).unwrap();
    let d8 = FiniteRotGroup::generate_closure(&[b, c], 100).unwrap();
    assert_eq!(d8.order(), 8);
    assert!(d8.decompositions().unwrap().is_empty());
    pass(7, "the order-8 dihedral group admits no non-trivial decomposition");
}

#[test]
fn criterion_08_corpus_structure_properties() {
    let entries = corpus::corpus(false);
    assert!(entries.len() >= 13);
    for entry in &entries {
        for tag in [PropertyTag::P5, PropertyTag::P6, PropertyTag::P7, PropertyTag::R6] {
            let report = check_property(&entry.group, tag).expect("within guard");
            assert!(report.holds, "{} should satisfy {}", entry.name, tag);
        }
    }
    pass(8, "P5, P6, P7, R6 hold on every corpus group");
}

#[test]
fn criterion_09_property_negatives_with_witnesses() {
    let entries = corpus::corpus(false);
    let d8 = &entries.iter().find(|e| e.name == "D8").unwrap().group;
    let p3 = check_property(d8, PropertyTag::P3).unwrap();
    assert!(!p3.holds);
    let w3 = p3.witness.expect("witness triple");
    assert!(matches!(w3, Witness::Triple { .. }));
    assert!(verify_witness(d8, PropertyTag::P3, &w3));

    let d12 = &entries.iter().find(|e| e.name == "D12_sqrt3").unwrap().group;
    let p4 = check_property(d12, PropertyTag::P4).unwrap();
    assert!(!p4.holds);
    let w4 = p4.witness.expect("decomposition witness");
    assert!(matches!(w4, Witness::BadDecomposition { .. }));
    assert!(verify_witness(d12, PropertyTag::P4, &w4));
    pass(9, "P3 fails on D8 and P4 fails on D12, both with replayable witnesses");
}

#[test]
fn criterion_10_implication_diagram() {
    let entries = corpus::corpus(false);
    let named: Vec<(&str, &FiniteRotGroup)> = entries.iter().map(|e| (e.name, &e.group)).collect();
    let report = implication_harness(&named).unwrap();
    assert!(report.clean(), "violations: {:?}", report.violations);
    pass(10, "zero implication-diagram violations across the corpus");
}

#[test]
fn criterion_11_centralizer_axis_alignment() {
    let entries = corpus::corpus(false);
    let mut checked = 0;
    for entry in &entries {
        let g = &entry.group;
        for i in 0..g.order() {
            if g.element_order_index(i) < 3 {
                continue;
            }
            checked += 1;
            let axis = g.element(i).axis().unwrap();
            for &h in g.centralizer(i).indices() {
                if h == 0 {
                    continue;
                }
                assert_eq!(
                    g.element(h).axis().unwrap(),
                    axis,
                    "{}: centralizer member {h} of {i} off-axis",
                    entry.name
                );
            }
        }
    }
    assert!(checked > 0);
    pass(11, "all centralizer members share the axis of each order ≥ 3 element");
}

#[test]
fn criterion_12_yz_involutions_commute_iff_axes() {
    let mut fz = QuatFuzz::new(0xCC, 0, false);
    let mut checked = 0;
    let mut run_pair = |x: &Quaternion, y: &Quaternion| {
        checked += 1;
        let mx = theta(x).unwrap();
        let my = theta(y).unwrap();
        let ax = mx.axis().unwrap();
        let ay = my.axis().unwrap();
        assert_eq!(
            mx.commutes_with(&my),
            ax == ay || ax.is_perpendicular_to(&ay),
            "axes {ax}, {ay}"
        );
    };
    for _ in 0..100 {
        let x = fz.yz_involution_quaternion();
        let y = fz.yz_involution_quaternion();
        run_pair(&x, &y);
        let base = fz.yz_involution_quaternion();
        let scaled = base.scale(&fz.nonzero_scalar());
        run_pair(&base, &scaled);
        let p = fz.yz_involution_quaternion();
        let q = Quaternion::new(
            QuadScalar::zero(0),
            QuadScalar::zero(0),
            -p.x3().clone(),
            p.x2().clone(),
        );
        run_pair(&p, &q);
    }
    assert!(checked >= 200);
    pass(
        12,
        "yz-plane half turns commute exactly when axes are identical or perpendicular",
    );
}

#[test]
fn criterion_13_free_word_evidence() {
    let g1 = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let g2 = theta(&Quaternion::from_ints(1, 0, 2, 0, 0)).unwrap();
    // the count is forced by the reduced-word recursion
    let expected: u64 = 1 + (1..=8).map(|l| 4 * 3u64.pow(l - 1)).sum::<u64>();
    assert_eq!(expected, 13121);
    assert_eq!(
        word_no_relation_search(&[g1, g2], 8).unwrap(),
        WordSearchResult::AllDistinct { count: 13121 }
    );
    pass(13, "all 13121 reduced words of length ≤ 8 evaluate to distinct rotations");
}

#[test]
fn criterion_14_free_abelian_evidence() {
    let g1 = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let g2 = theta(&Quaternion::from_ints(1, 4, 0, 0, 0)).unwrap();
    assert!(g1.commutes_with(&g2));
    assert!(matches!(
        g1.element_order(100),
        OrderResult::InfiniteCertified { .. }
    ));
    assert!(matches!(
        g2.element_order(100),
        OrderResult::InfiniteCertified { .. }
    ));
    assert_eq!(
        word_no_relation_search(&[g1, g2], 10).unwrap(),
        WordSearchResult::AllDistinct { count: 441 }
    );
    pass(14, "commuting infinite-order pair has no power relation in the 21×21 box");
}

#[test]
fn criterion_15_rational_only_mode() {
    let report = run_suite(&SuiteConfig {
        seed: 0,
        rational_only: true,
    });
    assert!(report.assertions.len() >= 30);
    assert_eq!(report.failed, 0, "every non-skipped assertion passes at d = 0");
    let skipped: Vec<&str> = report
        .assertions
        .iter()
        .filter(|a| a.verdict == Verdict::Skip)
        .map(|a| a.id.as_str())
        .collect();
    assert_eq!(
        skipped,
        vec![
            "quaternion.commutation_criteria.surd_fuzz",
            "finite_example.closure",
            "finite_example.decomposition",
            "corpus.surd_members",
        ],
        "exactly the √3/√5 material is skipped"
    );
    let finite_example = report.record("finite_example.closure").unwrap();
    assert!(finite_example.detail.contains("√3"));
    pass(
        15,
        "rational-only mode: all checks pass at d = 0, the √3 example is reported skipped",
    );
}
