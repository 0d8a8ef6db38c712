//! The bundled verification suite: every structural statement the crate is
//! built around, re-derived at desk scale with exact arithmetic and emitted
//! as a machine-readable report.
//!
//! Each assertion record carries a stable id, the label of the statement it
//! checks (its anchor), a verdict, and exact values in the detail string.
//! With a fixed seed the whole report is byte-stable; `rational_only`
//! restricts every check to ambient d = 0 and reports the √3/√5 material as
//! skipped.

use serde::Serialize;

use crate::corpus;
use crate::fuzz::QuatFuzz;
use crate::group::{FiniteRotGroup, IsoType};
use crate::properties::{
    self, check_all_properties, implication_harness, verify_witness, PropertyTag,
};
use crate::quaternion::{self, Quaternion, Trichotomy};
use crate::rotation::{theta, OrderResult, Rot3};
use crate::scalar::QuadScalar;
use crate::words::{word_no_relation_search, WordSearchResult};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

/// One checked statement with its exact evidence.
#[derive(Serialize, Clone, Debug)]
pub struct AssertionRecord {
    pub id: String,
    pub anchor: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub seed: u64,
    pub rational_only: bool,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub assertions: Vec<AssertionRecord>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn record(&self, id: &str) -> Option<&AssertionRecord> {
        self.assertions.iter().find(|a| a.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "verification suite (seed {}{})\n",
            self.seed,
            if self.rational_only {
                ", rational-only mode"
            } else {
                ""
            }
        ));
        for a in &self.assertions {
            let mark = match a.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skip => "SKIP",
            };
            out.push_str(&format!("[{mark}] {} ({}): {}\n", a.id, a.anchor, a.detail));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.passed, self.failed, self.skipped
        ));
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub seed: u64,
    pub rational_only: bool,
}

struct Runner {
    assertions: Vec<AssertionRecord>,
}

impl Runner {
    fn check(&mut self, id: &str, anchor: &str, ok: bool, detail: String) {
        self.assertions.push(AssertionRecord {
            id: id.to_string(),
            anchor: anchor.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail,
        });
    }

    fn skip(&mut self, id: &str, anchor: &str, reason: &str) {
        self.assertions.push(AssertionRecord {
            id: id.to_string(),
            anchor: anchor.to_string(),
            verdict: Verdict::Skip,
            detail: format!("skipped ({reason})"),
        });
    }
}

/// Runs the complete suite and assembles the report.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let mut r = Runner {
        assertions: Vec::new(),
    };
    theta_goldens(&mut r);
    quaternion_fuzz(&mut r, config);
    counterexample_matrices(&mut r);
    d8_family(&mut r);
    infinite_example(&mut r);
    finite_example(&mut r, config);
    property_checks(&mut r, config);
    involution_fuzz(&mut r, config);
    word_evidence(&mut r);

    let passed = r
        .assertions
        .iter()
        .filter(|a| a.verdict == Verdict::Pass)
        .count();
    let failed = r
        .assertions
        .iter()
        .filter(|a| a.verdict == Verdict::Fail)
        .count();
    let skipped = r
        .assertions
        .iter()
        .filter(|a| a.verdict == Verdict::Skip)
        .count();
    SuiteReport {
        schema_version: REPORT_SCHEMA_VERSION,
        seed: config.seed,
        rational_only: config.rational_only,
        passed,
        failed,
        skipped,
        assertions: r.assertions,
    }
}

fn rot(entries: [[(i64, i64); 3]; 3]) -> Rot3 {
    Rot3::from_ratios(entries, 0).expect("golden matrix is a rotation")
}

fn check_matrix(r: &mut Runner, id: &str, anchor: &str, label: &str, got: &Rot3, want: &Rot3) {
    let ok = got == want;
    let detail = if ok {
        format!("theta({label}) = {got}")
    } else {
        format!("theta({label}) = {got}, expected {want}")
    };
    r.check(id, anchor, ok, detail);
}

fn theta_goldens(r: &mut Runner) {
    let th = |q: &Quaternion| theta(q).expect("nonzero");
    check_matrix(
        r,
        "theta.golden.unit",
        "introduction",
        "1",
        &th(&Quaternion::one(0)),
        &Rot3::identity(0),
    );
    check_matrix(
        r,
        "theta.golden.i",
        "Observation 11",
        "i",
        &th(&Quaternion::i(0)),
        &rot([[(1, 1), (0, 1), (0, 1)], [(0, 1), (-1, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)]]),
    );
    check_matrix(
        r,
        "theta.golden.j",
        "Observation 11",
        "j",
        &th(&Quaternion::j(0)),
        &rot([[(-1, 1), (0, 1), (0, 1)], [(0, 1), (1, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)]]),
    );
    check_matrix(
        r,
        "theta.golden.one_plus_2i",
        "Observation 13",
        "1+2i",
        &th(&Quaternion::from_ints(1, 2, 0, 0, 0)),
        &rot([[(1, 1), (0, 1), (0, 1)], [(0, 1), (-3, 5), (-4, 5)], [(0, 1), (4, 5), (-3, 5)]]),
    );
    check_matrix(
        r,
        "theta.golden.one_plus_2j",
        "introduction",
        "1+2j",
        &th(&Quaternion::from_ints(1, 0, 2, 0, 0)),
        &rot([[(-3, 5), (0, 1), (4, 5)], [(0, 1), (1, 1), (0, 1)], [(-4, 5), (0, 1), (-3, 5)]]),
    );
    check_matrix(
        r,
        "theta.golden.one_plus_4i",
        "introduction",
        "1+4i",
        &th(&Quaternion::from_ints(1, 4, 0, 0, 0)),
        &rot([[(1, 1), (0, 1), (0, 1)], [(0, 1), (-15, 17), (-8, 17)], [(0, 1), (8, 17), (-15, 17)]]),
    );
}

/// One biconditional pass of the two commutation criteria over a mixed pool
/// of pairs; returns (pairs checked, positives seen, first discrepancy).
fn commutation_biconditionals(
    fz: &mut QuatFuzz,
    rounds: usize,
) -> (usize, usize, usize, Option<String>) {
    let mut checked = 0;
    let mut anticommuting = 0;
    let mut commuting = 0;
    let mut discrepancy = None;
    let mut consider = |x: &Quaternion, y: &Quaternion| -> Option<String> {
        checked += 1;
        let anti_direct = quaternion::anticommutes(x, y).expect("nonzero");
        let anti_structural = quaternion::anticommute_criterion(x, y);
        if anti_direct != anti_structural {
            return Some(format!(
                "anticommutation mismatch for x={x}, y={y}: direct {anti_direct}, structural {anti_structural}"
            ));
        }
        if anti_direct {
            anticommuting += 1;
        }
        let comm_direct = quaternion::commutes(x, y);
        let comm_minors = quaternion::vector_parts_dependent(x, y);
        if comm_direct != comm_minors {
            return Some(format!(
                "commutation mismatch for x={x}, y={y}: direct {comm_direct}, minors {comm_minors}"
            ));
        }
        if comm_direct {
            commuting += 1;
        }
        None
    };
    for _ in 0..rounds {
        // random pair
        let x = fz.nonzero_quaternion();
        let y = fz.nonzero_quaternion();
        if discrepancy.is_none() {
            discrepancy = consider(&x, &y);
        }
        // engineered anticommuting pair
        let (p, q) = fz.perpendicular_pure_pair();
        if discrepancy.is_none() {
            discrepancy = consider(&p, &q);
        }
        // engineered commuting pair
        let base = fz.non_real_quaternion();
        let companion = fz.commuting_companion(&base);
        if discrepancy.is_none() {
            discrepancy = consider(&base, &companion);
        }
        // pure but generally non-perpendicular pair
        let u = fz.pure_quaternion();
        let v = fz.pure_quaternion();
        if discrepancy.is_none() {
            discrepancy = consider(&u, &v);
        }
    }
    (checked, anticommuting, commuting, discrepancy)
}

fn quaternion_fuzz(r: &mut Runner, config: &SuiteConfig) {
    let mut fz = QuatFuzz::new(config.seed ^ 0xA1, 0, false);
    let (checked, anticommuting, commuting, discrepancy) =
        commutation_biconditionals(&mut fz, 300);
    r.check(
        "quaternion.anticommute_criterion.fuzz",
        "Lemma 1",
        discrepancy.is_none(),
        discrepancy.clone().unwrap_or(format!(
            "{checked} pairs: anticommutation by direct multiplication always matched (pure ∧ perpendicular); {anticommuting} anticommuting pairs seen"
        )),
    );
    r.check(
        "quaternion.commute_criterion.fuzz",
        "Lemma 2",
        discrepancy.is_none(),
        discrepancy.unwrap_or(format!(
            "{checked} pairs: commutation by direct multiplication always matched vanishing of the vector-part minors; {commuting} commuting pairs seen"
        )),
    );

    // dedicated surd pass of the same biconditionals
    if config.rational_only {
        r.skip(
            "quaternion.commutation_criteria.surd_fuzz",
            "closing remark",
            "needs √3",
        );
    } else {
        let mut fz3 = QuatFuzz::new(config.seed ^ 0xA3, 3, true);
        let (checked3, anti3, comm3, disc3) = commutation_biconditionals(&mut fz3, 100);
        r.check(
            "quaternion.commutation_criteria.surd_fuzz",
            "Lemma 1",
            disc3.is_none(),
            disc3.unwrap_or(format!(
                "{checked3} pairs over ℚ(√3): both biconditionals exact; {anti3} anticommuting, {comm3} commuting"
            )),
        );
    }

    // commutation transitivity on non-real quaternions
    let mut fz = QuatFuzz::new(config.seed ^ 0xA5, 0, false);
    let mut failures = None;
    let rounds = 1000;
    for _ in 0..rounds {
        let x = fz.non_real_quaternion();
        let y = fz.commuting_companion(&x);
        let z = fz.commuting_companion(&x);
        debug_assert!(quaternion::commutes(&x, &y) && quaternion::commutes(&x, &z));
        if !quaternion::commutes(&y, &z) {
            failures = Some(format!("x={x}, y={y}, z={z}: y and z do not commute"));
            break;
        }
    }
    r.check(
        "quaternion.commute_transitive.fuzz",
        "Lemma 3",
        failures.is_none(),
        failures.unwrap_or(format!(
            "{rounds} triples of non-real quaternions with xy = yx and xz = zx all had yz = zy"
        )),
    );

    // norm multiplicativity
    let mut fz = QuatFuzz::new(config.seed ^ 0xA7, 0, false);
    let mut bad = None;
    for _ in 0..1000 {
        let x = fz.quaternion();
        let y = fz.quaternion();
        if (&x * &y).norm_sq() != &x.norm_sq() * &y.norm_sq() {
            bad = Some(format!("norm not multiplicative for x={x}, y={y}"));
            break;
        }
    }
    r.check(
        "quaternion.norm_multiplicative.fuzz",
        "introduction",
        bad.is_none(),
        bad.unwrap_or("1000 pairs: |xy|² = |x|²·|y|² exactly".to_string()),
    );

    // the rotation map is a homomorphism with kernel the nonzero reals
    let mut fz = QuatFuzz::new(config.seed ^ 0xA9, 0, false);
    let mut bad = None;
    for _ in 0..1000 {
        let x = fz.nonzero_quaternion();
        let y = fz.nonzero_quaternion();
        let lhs = theta(&(&x * &y)).expect("nonzero product");
        let rhs = &theta(&x).unwrap() * &theta(&y).unwrap();
        if lhs != rhs {
            bad = Some(format!("theta(xy) ≠ theta(x)theta(y) for x={x}, y={y}"));
            break;
        }
    }
    r.check(
        "theta.homomorphism.fuzz",
        "introduction",
        bad.is_none(),
        bad.unwrap_or("1000 pairs: theta(xy) = theta(x)·theta(y) exactly".to_string()),
    );

    let mut fz = QuatFuzz::new(config.seed ^ 0xAB, 0, false);
    let mut bad = None;
    for _ in 0..1000 {
        let x = fz.nonzero_quaternion();
        let lambda = fz.nonzero_rational();
        if theta(&x.scale(&lambda)).unwrap() != theta(&x).unwrap() {
            bad = Some(format!("theta(λx) ≠ theta(x) for λ={lambda}, x={x}"));
            break;
        }
    }
    r.check(
        "theta.kernel_scaling.fuzz",
        "introduction",
        bad.is_none(),
        bad.unwrap_or("1000 samples: theta(λx) = theta(x) for rational λ ≠ 0".to_string()),
    );

    // the trichotomy decides commutation of the image rotations
    let mut fz = QuatFuzz::new(config.seed ^ 0xAD, 0, false);
    let mut bad = None;
    let mut neither = 0;
    let mut checked = 0;
    let mut consider = |x: &Quaternion, y: &Quaternion| -> Option<String> {
        checked += 1;
        let tri = quaternion::commutation_trichotomy(x, y).expect("nonzero");
        if tri == Trichotomy::Neither {
            neither += 1;
        }
        let rotations_commute = theta(x).unwrap().commutes_with(&theta(y).unwrap());
        if (tri == Trichotomy::Neither) == rotations_commute {
            Some(format!(
                "trichotomy {tri} disagrees with rotation commutation {rotations_commute} for x={x}, y={y}"
            ))
        } else {
            None
        }
    };
    for _ in 0..250 {
        let x = fz.nonzero_quaternion();
        let y = fz.nonzero_quaternion();
        if bad.is_none() {
            bad = consider(&x, &y);
        }
        let base = fz.non_real_quaternion();
        let companion = fz.commuting_companion(&base);
        if bad.is_none() {
            bad = consider(&base, &companion);
        }
        let (p, q) = fz.perpendicular_pure_pair();
        if bad.is_none() {
            bad = consider(&p, &q);
        }
        let u = fz.pure_quaternion();
        let v = fz.pure_quaternion();
        if bad.is_none() {
            bad = consider(&u, &v);
        }
    }
    r.check(
        "quaternion.trichotomy_rotation.fuzz",
        "Proposition 7",
        bad.is_none(),
        bad.unwrap_or(format!(
            "{checked} pairs: trichotomy = Neither exactly when the image rotations fail to commute ({neither} Neither pairs seen)"
        )),
    );
}

fn counterexample_matrices(r: &mut Runner) {
    let a = theta(&Quaternion::i(0)).unwrap();
    let b = theta(&Quaternion::from_ints(1, 1, 0, 0, 0)).unwrap();
    let c = theta(&Quaternion::j(0)).unwrap();
    let ab_ba = (&a * &b) == (&b * &a);
    let ac_ca = (&a * &c) == (&c * &a);
    let bc_cb = (&b * &c) == (&c * &b);
    r.check(
        "ct_counterexample.matrix_relations",
        "Observation 11",
        ab_ba && ac_ca && !bc_cb,
        format!("AB = BA: {ab_ba}, AC = CA: {ac_ca}, BC = CB: {bc_cb} (wanted true, true, false)"),
    );

    let tri = |x: &Quaternion, y: &Quaternion| {
        quaternion::commutation_trichotomy(x, y).expect("nonzero")
    };
    let t1 = tri(&Quaternion::i(0), &Quaternion::from_ints(1, 1, 0, 0, 0));
    let t2 = tri(&Quaternion::i(0), &Quaternion::j(0));
    let t3 = tri(&Quaternion::from_ints(1, 1, 0, 0, 0), &Quaternion::j(0));
    r.check(
        "ct_counterexample.trichotomy",
        "Observation 11",
        t1 == Trichotomy::Commute && t2 == Trichotomy::Anticommute && t3 == Trichotomy::Neither,
        format!("(i, 1+i) → {t1}, (i, j) → {t2}, (1+i, j) → {t3}"),
    );
}

fn d8_family(r: &mut Runner) {
    let a = theta(&Quaternion::i(0)).unwrap();
    let b = theta(&Quaternion::from_ints(1, 1, 0, 0, 0)).unwrap();
    let c = theta(&Quaternion::j(0)).unwrap();
    let bc = FiniteRotGroup::generate_closure(&[b.clone(), c.clone()], 100).expect("closes");
    let abc =
        FiniteRotGroup::generate_closure(&[a.clone(), b.clone(), c.clone()], 100).expect("closes");
    let same_group = bc.order() == abc.order()
        && abc.elements().iter().all(|e| bc.index_of(e).is_some());
    let a_is_b_squared = a == &b * &b;
    let class = bc.classify_iso_type();
    r.check(
        "d8.closure",
        "Observation 13",
        bc.order() == 8
            && class == Ok(IsoType::Dihedral(4))
            && same_group
            && a_is_b_squared,
        format!(
            "⟨B,C⟩ has order {} and classifies {:?}; ⟨A,B,C⟩ = ⟨B,C⟩: {same_group}; A = B²: {a_is_b_squared}",
            bc.order(),
            class.map(|c| c.to_string())
        ),
    );

    let decs = bc.decompositions().expect("within guard");
    r.check(
        "d8.indecomposable",
        "Observation 13",
        decs.is_empty(),
        format!(
            "the order-8 dihedral group admits {} non-trivial direct-product decompositions (wanted 0)",
            decs.len()
        ),
    );
}

fn infinite_example(r: &mut Runner) {
    let a = theta(&Quaternion::i(0)).unwrap();
    let b_tilde = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let c = theta(&Quaternion::j(0)).unwrap();

    let a_bt = a.commutes_with(&b_tilde);
    let a_c = a.commutes_with(&c);
    r.check(
        "infinite_example.commutation",
        "Observation 13",
        a_bt && a_c,
        format!("A commutes with B̃: {a_bt}; A commutes with C: {a_c}"),
    );

    let conj = (&c * &b_tilde) == (&b_tilde.inverse() * &c);
    r.check(
        "infinite_example.conjugation",
        "Observation 13",
        conj,
        format!("C·B̃ = B̃⁻¹·C: {conj}"),
    );

    let order = b_tilde.element_order(100);
    let expected_trace_term = QuadScalar::from_ratio(-6, 5, 0);
    let ok = matches!(
        &order,
        OrderResult::InfiniteCertified { trace_term } if *trace_term == expected_trace_term
    );
    r.check(
        "infinite_example.order_certificate",
        "Observation 13",
        ok,
        format!("element_order(B̃) = {order}"),
    );

    // A is not B̃ⁿ nor B̃ⁿ·C for |n| ≤ 50 (the normal forms of ⟨B̃, C⟩)
    let mut hit = None;
    let mut power = b_tilde.pow(-50);
    for n in -50i64..=50 {
        if power == a {
            hit = Some(format!("A = B̃^{n}"));
        }
        if &power * &c == a {
            hit = Some(format!("A = B̃^{n}·C"));
        }
        power = &power * &b_tilde;
    }
    r.check(
        "infinite_example.bounded_membership",
        "Observation 13",
        hit.is_none(),
        hit.unwrap_or(
            "A differs from every normal form B̃ⁿ and B̃ⁿ·C with |n| ≤ 50".to_string(),
        ),
    );
}

fn finite_example(r: &mut Runner, config: &SuiteConfig) {
    if config.rational_only {
        r.skip("finite_example.closure", "Observation 13", "needs √3");
        r.skip("finite_example.decomposition", "Observation 13", "needs √3");
        return;
    }
    let gens = [
        corpus::rot_x_sixth_turn_surd(),
        corpus::rot_y_half_turn(3),
    ];
    let d12 = FiniteRotGroup::generate_closure(&gens, 100).expect("closes");
    let class = d12.classify_iso_type();
    r.check(
        "finite_example.closure",
        "Observation 13",
        d12.order() == 12 && class == Ok(IsoType::Dihedral(6)),
        format!(
            "closure of the √3 pair has order {} and classifies {:?}",
            d12.order(),
            class.map(|c| c.to_string())
        ),
    );

    let decs = d12.decompositions().expect("within guard");
    let center = d12.center();
    let all_conform = decs.iter().all(|dec| {
        dec.factor_h.order() == 2
            && dec.factor_h.is_subset_of(&center)
            && d12
                .subgroup_as_group(&dec.factor_k)
                .classify_iso_type()
                == Ok(IsoType::Dihedral(3))
    });
    r.check(
        "finite_example.decomposition",
        "Observation 13",
        !decs.is_empty() && all_conform,
        format!(
            "{} decomposition(s), every one an internal product of the order-2 center with an order-6 dihedral subgroup",
            decs.len()
        ),
    );
}

fn property_checks(r: &mut Runner, config: &SuiteConfig) {
    let entries = corpus::corpus(config.rational_only);

    if config.rational_only {
        let excluded = corpus::nonrational_members()
            .iter()
            .map(|(name, why)| format!("{name} ({why})"))
            .collect::<Vec<_>>()
            .join(", ");
        r.skip("corpus.surd_members", "closing remark", &excluded);
    }

    // negatives with replayable witnesses
    let d8 = &entries.iter().find(|e| e.name == "D8").expect("corpus").group;
    let p3 = properties::check_property(d8, PropertyTag::P3).expect("guarded");
    let p3_ok = !p3.holds
        && p3
            .witness
            .as_ref()
            .is_some_and(|w| verify_witness(d8, PropertyTag::P3, w));
    r.check(
        "d8.p3_fails",
        "Observation 11",
        p3_ok,
        match &p3.witness {
            Some(w) if !p3.holds => format!("P3 fails on the order-8 dihedral group; witness replays: {w}"),
            _ => format!("expected P3 to fail with witness, got {p3:?}"),
        },
    );
    let r3 = properties::check_property(d8, PropertyTag::R3).expect("guarded");
    r.check(
        "d8.r3_separation",
        "property definitions",
        r3.holds && !p3.holds,
        format!(
            "on the order-8 dihedral group R3 holds ({}) while P3 fails ({}) — the two transitivity notions separate",
            r3.holds, !p3.holds
        ),
    );

    let d12 = &entries.iter().find(|e| e.name == "D12").expect("corpus").group;
    let p4 = properties::check_property(d12, PropertyTag::P4).expect("guarded");
    let p4_ok = !p4.holds
        && p4
            .witness
            .as_ref()
            .is_some_and(|w| verify_witness(d12, PropertyTag::P4, w));
    r.check(
        "d12.p4_fails",
        "Observation 13",
        p4_ok,
        match &p4.witness {
            Some(w) if !p4.holds => format!("P4 fails on the order-12 dihedral group; witness replays: {w}"),
            _ => format!("expected P4 to fail with witness, got {p4:?}"),
        },
    );
    let p5 = properties::check_property(d12, PropertyTag::P5).expect("guarded");
    r.check(
        "d12.p5_holds",
        "Theorem 18",
        p5.holds,
        "P5 holds on the order-12 dihedral group: its only decompositions pair the order-2 center with a non-abelian factor containing an involution".to_string(),
    );

    // full profiles once per corpus member
    let mut profiles = Vec::new();
    for entry in &entries {
        let reports = check_all_properties(&entry.group).expect("corpus within guard");
        profiles.push((entry, reports));
    }

    let names: Vec<&str> = entries.iter().map(|e| e.name).collect();
    for (tag, id, anchor) in [
        (PropertyTag::P5, "corpus.p5", "Theorem 18"),
        (PropertyTag::P6, "corpus.p6", "Proposition 16"),
        (PropertyTag::P7, "corpus.p7", "Proposition 7"),
        (PropertyTag::R6, "corpus.r6", "Proposition 14"),
    ] {
        let failing: Vec<&str> = profiles
            .iter()
            .filter(|(_, reports)| reports.iter().any(|rep| rep.tag == tag && !rep.holds))
            .map(|(e, _)| e.name)
            .collect();
        r.check(
            id,
            anchor,
            failing.is_empty(),
            if failing.is_empty() {
                format!("{} holds on all of {}", tag.label(), names.join(", "))
            } else {
                format!("{} fails on {}", tag.label(), failing.join(", "))
            },
        );
    }

    let p8_ok = profiles.iter().all(|(_, reports)| {
        reports
            .iter()
            .any(|rep| rep.tag == PropertyTag::P8 && rep.holds && rep.vacuous)
    });
    r.check(
        "corpus.p8_vacuous",
        "property definitions",
        p8_ok,
        "P8 holds on every corpus group, flagged vacuous: finite groups have no torsion-free non-trivial subgroups".to_string(),
    );

    let misclassified: Vec<String> = entries
        .iter()
        .filter_map(|e| {
            let got = e.group.classify_iso_type();
            if got == Ok(e.expected) {
                None
            } else {
                Some(format!("{}: {:?}", e.name, got.map(|c| c.to_string())))
            }
        })
        .collect();
    r.check(
        "corpus.classification",
        "corpus",
        misclassified.is_empty(),
        if misclassified.is_empty() {
            format!("all {} corpus groups classify as expected", entries.len())
        } else {
            format!("misclassified: {}", misclassified.join("; "))
        },
    );

    // the implication diagram over the whole corpus
    let named: Vec<(&str, &FiniteRotGroup)> =
        entries.iter().map(|e| (e.name, &e.group)).collect();
    let harness = implication_harness(&named).expect("corpus within guard");
    r.check(
        "corpus.implication_diagram",
        "implication diagram",
        harness.clean(),
        if harness.clean() {
            format!(
                "all {} edges hold on all {} corpus groups",
                properties::IMPLICATION_EDGES.len(),
                named.len()
            )
        } else {
            format!("violations: {:?}", harness.violations)
        },
    );

    // centralizers of elements of order ≥ 3 are rotations about one axis
    let mut elements_checked = 0usize;
    let mut axis_failure = None;
    for entry in &entries {
        let g = &entry.group;
        for i in 0..g.order() {
            if g.element_order_index(i) < 3 {
                continue;
            }
            elements_checked += 1;
            let axis = g.element(i).axis().expect("order ≥ 3 is not the identity");
            for &h in g.centralizer(i).indices() {
                if h == 0 {
                    continue;
                }
                let h_axis = g.element(h).axis().expect("non-identity");
                if h_axis != axis {
                    axis_failure = Some(format!(
                        "in {}: centralizer member {h} of element {i} has axis {h_axis}, expected {axis}",
                        entry.name
                    ));
                }
            }
        }
    }
    r.check(
        "corpus.centralizer_axis",
        "Lemma 15",
        axis_failure.is_none(),
        axis_failure.unwrap_or(format!(
            "for all {elements_checked} corpus elements of order ≥ 3, every non-identity centralizer member shares the element's axis"
        )),
    );
}

fn involution_fuzz(r: &mut Runner, config: &SuiteConfig) {
    // half turns about yz-plane axes commute exactly when their axes are
    // identical or perpendicular
    let mut fz = QuatFuzz::new(config.seed ^ 0xB1, 0, false);
    let mut checked = 0;
    let mut commuting = 0;
    let mut bad = None;
    let mut consider = |x: &Quaternion, y: &Quaternion| -> Option<String> {
        checked += 1;
        let mx = theta(x).unwrap();
        let my = theta(y).unwrap();
        let commute = mx.commutes_with(&my);
        if commute {
            commuting += 1;
        }
        let ax = mx.axis().expect("half turn");
        let ay = my.axis().expect("half turn");
        let same_or_perp = ax == ay || ax.is_perpendicular_to(&ay);
        if commute != same_or_perp {
            Some(format!(
                "axes {ax} and {ay}: commute = {commute}, identical-or-perpendicular = {same_or_perp}"
            ))
        } else {
            None
        }
    };
    for _ in 0..100 {
        // random pair
        let x = fz.yz_involution_quaternion();
        let y = fz.yz_involution_quaternion();
        if bad.is_none() {
            bad = consider(&x, &y);
        }
        // same axis, different scale
        let base = fz.yz_involution_quaternion();
        let scaled = base.scale(&fz.nonzero_scalar());
        if bad.is_none() {
            bad = consider(&base, &scaled);
        }
        // perpendicular axis within the yz-plane
        let p = fz.yz_involution_quaternion();
        let q = Quaternion::new(
            QuadScalar::zero(0),
            QuadScalar::zero(0),
            -p.x3().clone(),
            p.x2().clone(),
        );
        if bad.is_none() {
            bad = consider(&p, &q);
        }
    }
    r.check(
        "involutions.commute_iff_axes.fuzz",
        "Lemma 17",
        bad.is_none(),
        bad.unwrap_or(format!(
            "{checked} pairs of yz-plane half turns: commutation ⟺ axes identical or perpendicular ({commuting} commuting pairs seen)"
        )),
    );

    // everything commuting with diag(1,−1,−1) fixes the x-axis line
    let a = corpus::rot_x_half_turn(0);
    let mut fz = QuatFuzz::new(config.seed ^ 0xB3, 0, false);
    let mut commuting_seen = 0;
    let mut bad = None;
    let mut consider = |m: &Rot3| -> Option<String> {
        if !m.commutes_with(&a) {
            return None;
        }
        commuting_seen += 1;
        let zero = QuadScalar::zero(0);
        let corner_ok = (m.entry(0, 0) == &QuadScalar::one(0)
            || m.entry(0, 0) == &QuadScalar::from_int(-1, 0))
            && m.entry(0, 1) == &zero
            && m.entry(0, 2) == &zero
            && m.entry(1, 0) == &zero
            && m.entry(2, 0) == &zero;
        if corner_ok {
            None
        } else {
            Some(format!(
                "matrix {m} commutes with diag(1,-1,-1) but is neither an x-axis rotation nor a yz-plane half turn"
            ))
        }
    };
    for _ in 0..200 {
        // x-axis rotations: images of a + b·i
        let q = Quaternion::new(
            fz.scalar(),
            fz.scalar(),
            QuadScalar::zero(0),
            QuadScalar::zero(0),
        );
        if !q.is_zero() && bad.is_none() {
            bad = consider(&theta(&q).unwrap());
        }
        // yz-plane half turns
        let p = fz.yz_involution_quaternion();
        if bad.is_none() {
            bad = consider(&theta(&p).unwrap());
        }
        // random rotations, mostly not commuting with A
        let x = fz.nonzero_quaternion();
        if bad.is_none() {
            bad = consider(&theta(&x).unwrap());
        }
    }
    r.check(
        "x_centralizer_form.fuzz",
        "Theorem 18",
        bad.is_none(),
        bad.unwrap_or(format!(
            "{commuting_seen} rotations commuting with diag(1,-1,-1) all had first row and column (±1, 0, 0)"
        )),
    );
}

fn word_evidence(r: &mut Runner) {
    let g1 = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let g2 = theta(&Quaternion::from_ints(1, 0, 2, 0, 0)).unwrap();
    let expected: u64 = 1 + (1..=8).map(|l| 4 * 3u64.pow(l - 1)).sum::<u64>();
    let result = word_no_relation_search(&[g1, g2], 8).expect("within depth guard");
    let ok = result == WordSearchResult::AllDistinct { count: expected };
    r.check(
        "free_words.all_distinct",
        "introduction",
        ok,
        format!("{result} (expected all {expected} reduced words of length ≤ 8 distinct)"),
    );

    let h1 = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
    let h2 = theta(&Quaternion::from_ints(1, 4, 0, 0, 0)).unwrap();
    let commute = h1.commutes_with(&h2);
    let o1 = h1.element_order(100);
    let o2 = h2.element_order(100);
    let both_infinite = matches!(o1, OrderResult::InfiniteCertified { .. })
        && matches!(o2, OrderResult::InfiniteCertified { .. });
    let search = word_no_relation_search(&[h1, h2], 10).expect("within depth guard");
    let no_relation = search == WordSearchResult::AllDistinct { count: 21 * 21 };
    r.check(
        "commuting_pair.no_power_relation",
        "introduction",
        commute && both_infinite && no_relation,
        format!(
            "generators commute: {commute}; orders: {o1} / {o2}; power search: {search}"
        ),
    );
}
