//! A taxonomy of direct-product and commutation-transitivity properties as
//! decision procedures on finite rotation groups, with replayable witnesses
//! and an implication-diagram harness.
//!
//! The tags, informally:
//!
//! - `P1` — abelian.
//! - `P2` — every maximal abelian subgroup is malnormal (CSA).
//! - `P3` — commuting is transitive on non-identity elements.
//! - `P4` — every non-trivial internal direct-product subgroup is abelian.
//! - `P5` — … or exactly one factor has order 2 and the other is non-abelian
//!   with an involution.
//! - `P6` — … or exactly one factor is abelian, the non-abelian factor has an
//!   involution, and every non-trivial element of the abelian factor is an
//!   involution.
//! - `P7` — … or both factors contain an involution.
//! - `P8` — every torsion-free non-trivial direct-product subgroup is
//!   abelian; vacuously true for finite groups and reported as such.
//! - `R3` — commuting is transitive on non-central elements.
//! - `R4` — every decomposition is abelian or has one non-abelian factor and
//!   the other factor inside the center of the ambient group.
//! - `R6` — in every decomposition at least one factor is abelian.
//!
//! Two tags that quantify over infinite subgroups are intentionally absent:
//! they cannot be decided by finite search and are covered only through the
//! implication chain ending at `P8`.

use std::fmt;

use crate::group::{Decomposition, FiniteRotGroup, GroupError, Subgroup};

/// The decidable property tags.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PropertyTag {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    R3,
    R4,
    R6,
}

impl PropertyTag {
    pub const ALL: [PropertyTag; 11] = [
        PropertyTag::P1,
        PropertyTag::P2,
        PropertyTag::P3,
        PropertyTag::P4,
        PropertyTag::P5,
        PropertyTag::P6,
        PropertyTag::P7,
        PropertyTag::P8,
        PropertyTag::R3,
        PropertyTag::R4,
        PropertyTag::R6,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PropertyTag::P1 => "P1",
            PropertyTag::P2 => "P2",
            PropertyTag::P3 => "P3",
            PropertyTag::P4 => "P4",
            PropertyTag::P5 => "P5",
            PropertyTag::P6 => "P6",
            PropertyTag::P7 => "P7",
            PropertyTag::P8 => "P8",
            PropertyTag::R3 => "R3",
            PropertyTag::R4 => "R4",
            PropertyTag::R6 => "R6",
        }
    }

    pub fn from_label(s: &str) -> Option<PropertyTag> {
        Self::ALL.iter().copied().find(|t| t.label() == s)
    }

    /// Tags whose decision procedure enumerates subgroups (and therefore
    /// falls under the group-size guard).
    pub fn needs_subgroup_enumeration(self) -> bool {
        matches!(
            self,
            PropertyTag::P2
                | PropertyTag::P4
                | PropertyTag::P5
                | PropertyTag::P6
                | PropertyTag::P7
                | PropertyTag::P8
                | PropertyTag::R4
                | PropertyTag::R6
        )
    }
}

impl fmt::Display for PropertyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Concrete evidence that a property fails; every variant can be replayed
/// against the group with [`verify_witness`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Two elements that do not commute (P1).
    NonCommutingPair { x: usize, y: usize },
    /// A maximal abelian subgroup that is not malnormal: conjugating by
    /// `conjugator` keeps the non-identity element `shared` inside (P2).
    NonMalnormal {
        subgroup: Subgroup,
        conjugator: usize,
        shared: usize,
    },
    /// x commutes with y and with z, but y and z do not commute (P3/R3).
    Triple { x: usize, y: usize, z: usize },
    /// A decomposition of `subgroup` violating the tag's required shape
    /// (P4–P7, R4, R6).
    BadDecomposition {
        subgroup: Subgroup,
        decomposition: Decomposition,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NonCommutingPair { x, y } => write!(f, "elements {x}, {y} do not commute"),
            Witness::NonMalnormal {
                subgroup,
                conjugator,
                shared,
            } => write!(
                f,
                "subgroup {subgroup} conjugated by {conjugator} keeps {shared}"
            ),
            Witness::Triple { x, y, z } => write!(
                f,
                "x={x} commutes with y={y} and z={z}, but y and z do not commute"
            ),
            Witness::BadDecomposition {
                subgroup,
                decomposition,
            } => write!(f, "subgroup {subgroup} decomposes as {decomposition}"),
        }
    }
}

/// Verdict for one tag on one group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PropertyReport {
    pub tag: PropertyTag,
    pub holds: bool,
    /// Set only for P8 on finite groups: the property holds because no
    /// torsion-free non-trivial subgroup exists at all.
    pub vacuous: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn holds(tag: PropertyTag) -> Self {
        PropertyReport {
            tag,
            holds: true,
            vacuous: false,
            witness: None,
        }
    }

    fn fails(tag: PropertyTag, witness: Witness) -> Self {
        PropertyReport {
            tag,
            holds: false,
            vacuous: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            if self.vacuous {
                write!(f, "{}: holds (vacuously for finite groups)", self.tag)
            } else {
                write!(f, "{}: holds", self.tag)
            }
        } else {
            write!(
                f,
                "{}: fails ({})",
                self.tag,
                self.witness.as_ref().expect("failing report has witness")
            )
        }
    }
}

/// Shared per-group data for the subgroup-quantified tags.
struct Analysis {
    center: Subgroup,
    /// (decomposed subgroup, decomposition) over every subgroup of the group.
    pairs: Vec<(Subgroup, Decomposition)>,
    maximal_abelian: Vec<Subgroup>,
}

impl Analysis {
    fn new(group: &FiniteRotGroup) -> Result<Self, GroupError> {
        let subs = group.subgroups()?;
        let mut pairs = Vec::new();
        for s in &subs {
            for dec in group.decompositions_from_subgroup_list(s, &subs) {
                pairs.push((s.clone(), dec));
            }
        }
        let abelian: Vec<Subgroup> = subs
            .iter()
            .filter(|s| group.is_abelian_subgroup(s))
            .cloned()
            .collect();
        let maximal_abelian = abelian
            .iter()
            .filter(|s| {
                !abelian
                    .iter()
                    .any(|t| t.order() > s.order() && s.is_subset_of(t))
            })
            .cloned()
            .collect();
        Ok(Analysis {
            center: group.center(),
            pairs,
            maximal_abelian,
        })
    }
}

/// Whether one decomposition satisfies the shape a tag demands. `center` is
/// the center of the ambient group (only R4 looks at it).
fn decomposition_conforms(
    g: &FiniteRotGroup,
    tag: PropertyTag,
    dec: &Decomposition,
    center: &Subgroup,
) -> bool {
    let h = &dec.factor_h;
    let k = &dec.factor_k;
    let ab_h = g.is_abelian_subgroup(h);
    let ab_k = g.is_abelian_subgroup(k);
    // factors commute elementwise, so the product is abelian iff both are
    let ab_s = ab_h && ab_k;
    match tag {
        PropertyTag::P4 => ab_s,
        PropertyTag::P5 => {
            ab_s || (h.order() == 2 && !ab_k && g.has_involution(k))
                || (k.order() == 2 && !ab_h && g.has_involution(h))
        }
        PropertyTag::P6 => {
            let only_involutions = |s: &Subgroup| {
                s.indices()
                    .iter()
                    .all(|&i| i == 0 || g.element_order_index(i) == 2)
            };
            ab_s || (ab_h && !ab_k && g.has_involution(k) && only_involutions(h))
                || (ab_k && !ab_h && g.has_involution(h) && only_involutions(k))
        }
        PropertyTag::P7 => ab_s || (g.has_involution(h) && g.has_involution(k)),
        PropertyTag::R4 => {
            ab_s || (!ab_h && k.is_subset_of(center)) || (!ab_k && h.is_subset_of(center))
        }
        PropertyTag::R6 => ab_h || ab_k,
        _ => unreachable!("not a decomposition-shaped tag"),
    }
}

/// Searches for x, y, z in the given pool with xy = yx, xz = zx, yz ≠ zy,
/// returning the first triple in deterministic scan order.
fn commutation_transitivity_counterexample(
    g: &FiniteRotGroup,
    pool: &[usize],
) -> Option<(usize, usize, usize)> {
    for &x in pool {
        let commuting: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|&y| y != x && g.product(x, y) == g.product(y, x))
            .collect();
        for (pos, &y) in commuting.iter().enumerate() {
            for &z in &commuting[pos + 1..] {
                if g.product(y, z) != g.product(z, y) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Decides one property tag. Tags quantifying over subgroups require the
/// group order to be within the enumeration guard.
pub fn check_property(g: &FiniteRotGroup, tag: PropertyTag) -> Result<PropertyReport, GroupError> {
    match tag {
        PropertyTag::P1 => {
            let n = g.order();
            for x in 0..n {
                for y in x + 1..n {
                    if g.product(x, y) != g.product(y, x) {
                        return Ok(PropertyReport::fails(
                            tag,
                            Witness::NonCommutingPair { x, y },
                        ));
                    }
                }
            }
            Ok(PropertyReport::holds(tag))
        }
        PropertyTag::P3 => {
            let pool: Vec<usize> = (1..g.order()).collect();
            Ok(
                match commutation_transitivity_counterexample(g, &pool) {
                    Some((x, y, z)) => PropertyReport::fails(tag, Witness::Triple { x, y, z }),
                    None => PropertyReport::holds(tag),
                },
            )
        }
        PropertyTag::R3 => {
            let center = g.center();
            let pool: Vec<usize> = (1..g.order()).filter(|&i| !center.contains(i)).collect();
            Ok(
                match commutation_transitivity_counterexample(g, &pool) {
                    Some((x, y, z)) => PropertyReport::fails(tag, Witness::Triple { x, y, z }),
                    None => PropertyReport::holds(tag),
                },
            )
        }
        PropertyTag::P2 => {
            let analysis = Analysis::new(g)?;
            for h in &analysis.maximal_abelian {
                if let Some((conjugator, shared)) = malnormality_counterexample(g, h) {
                    return Ok(PropertyReport::fails(
                        tag,
                        Witness::NonMalnormal {
                            subgroup: h.clone(),
                            conjugator,
                            shared,
                        },
                    ));
                }
            }
            Ok(PropertyReport::holds(tag))
        }
        PropertyTag::P8 => {
            // A non-trivial finite group always has torsion, so a torsion-free
            // non-trivial direct product subgroup cannot exist. Run the guard
            // anyway so the tag's contract matches its siblings.
            if g.order() > crate::group::SUBGROUP_ENUM_LIMIT {
                return Err(GroupError::GroupTooLarge {
                    order: g.order(),
                    limit: crate::group::SUBGROUP_ENUM_LIMIT,
                });
            }
            Ok(PropertyReport {
                tag,
                holds: true,
                vacuous: true,
                witness: None,
            })
        }
        PropertyTag::P4
        | PropertyTag::P5
        | PropertyTag::P6
        | PropertyTag::P7
        | PropertyTag::R4
        | PropertyTag::R6 => {
            let analysis = Analysis::new(g)?;
            for (s, dec) in &analysis.pairs {
                if !decomposition_conforms(g, tag, dec, &analysis.center) {
                    return Ok(PropertyReport::fails(
                        tag,
                        Witness::BadDecomposition {
                            subgroup: s.clone(),
                            decomposition: dec.clone(),
                        },
                    ));
                }
            }
            Ok(PropertyReport::holds(tag))
        }
    }
}

fn malnormality_counterexample(g: &FiniteRotGroup, h: &Subgroup) -> Option<(usize, usize)> {
    for c in 0..g.order() {
        if h.contains(c) {
            continue;
        }
        for &x in h.indices() {
            if x == 0 {
                continue;
            }
            let conj = g.conjugate(c, x);
            if conj != 0 && h.contains(conj) {
                return Some((c, conj));
            }
        }
    }
    None
}

/// All eleven tags on one group, sharing the subgroup enumeration.
pub fn check_all_properties(g: &FiniteRotGroup) -> Result<Vec<PropertyReport>, GroupError> {
    let analysis = Analysis::new(g)?;
    let mut reports = Vec::with_capacity(PropertyTag::ALL.len());
    for tag in PropertyTag::ALL {
        let report = match tag {
            PropertyTag::P4
            | PropertyTag::P5
            | PropertyTag::P6
            | PropertyTag::P7
            | PropertyTag::R4
            | PropertyTag::R6 => {
                let mut found = None;
                for (s, dec) in &analysis.pairs {
                    if !decomposition_conforms(g, tag, dec, &analysis.center) {
                        found = Some(Witness::BadDecomposition {
                            subgroup: s.clone(),
                            decomposition: dec.clone(),
                        });
                        break;
                    }
                }
                match found {
                    Some(w) => PropertyReport::fails(tag, w),
                    None => PropertyReport::holds(tag),
                }
            }
            PropertyTag::P2 => {
                let mut found = None;
                for h in &analysis.maximal_abelian {
                    if let Some((conjugator, shared)) = malnormality_counterexample(g, h) {
                        found = Some(Witness::NonMalnormal {
                            subgroup: h.clone(),
                            conjugator,
                            shared,
                        });
                        break;
                    }
                }
                match found {
                    Some(w) => PropertyReport::fails(tag, w),
                    None => PropertyReport::holds(tag),
                }
            }
            _ => check_property(g, tag)?,
        };
        reports.push(report);
    }
    Ok(reports)
}

/// Replays a witness against the group, returning true when it really does
/// violate the tag.
pub fn verify_witness(g: &FiniteRotGroup, tag: PropertyTag, witness: &Witness) -> bool {
    match (tag, witness) {
        (PropertyTag::P1, Witness::NonCommutingPair { x, y }) => {
            *x < g.order() && *y < g.order() && g.product(*x, *y) != g.product(*y, *x)
        }
        (PropertyTag::P3, Witness::Triple { x, y, z })
        | (PropertyTag::R3, Witness::Triple { x, y, z }) => {
            let (x, y, z) = (*x, *y, *z);
            let in_pool = |i: usize| {
                i != 0
                    && i < g.order()
                    && (tag == PropertyTag::P3 || !g.center().contains(i))
            };
            in_pool(x)
                && in_pool(y)
                && in_pool(z)
                && g.product(x, y) == g.product(y, x)
                && g.product(x, z) == g.product(z, x)
                && g.product(y, z) != g.product(z, y)
        }
        (PropertyTag::P2, Witness::NonMalnormal {
            subgroup,
            conjugator,
            shared,
        }) => {
            !subgroup.contains(*conjugator)
                && *shared != 0
                && subgroup.contains(*shared)
                && subgroup.contains(g.conjugate(g.inverse_of(*conjugator), *shared))
        }
        (
            PropertyTag::P4
            | PropertyTag::P5
            | PropertyTag::P6
            | PropertyTag::P7
            | PropertyTag::R4
            | PropertyTag::R6,
            Witness::BadDecomposition {
                subgroup,
                decomposition,
            },
        ) => {
            let h = &decomposition.factor_h;
            let k = &decomposition.factor_k;
            let valid = h.order() >= 2
                && k.order() >= 2
                && h.is_subset_of(subgroup)
                && k.is_subset_of(subgroup)
                && h.order() * k.order() == subgroup.order()
                && h.intersects_trivially(k)
                && g.elementwise_commute(h, k);
            valid && !decomposition_conforms(g, tag, decomposition, &g.center())
        }
        _ => false,
    }
}

/// The implication diagram: an edge (a, b) asserts that a group satisfying
/// `a` also satisfies `b`.
pub const IMPLICATION_EDGES: [(PropertyTag, PropertyTag); 12] = [
    (PropertyTag::P2, PropertyTag::P3),
    (PropertyTag::P3, PropertyTag::P4),
    (PropertyTag::P4, PropertyTag::P5),
    (PropertyTag::P5, PropertyTag::P6),
    (PropertyTag::P6, PropertyTag::P7),
    (PropertyTag::P7, PropertyTag::P8),
    (PropertyTag::P1, PropertyTag::P2),
    (PropertyTag::P3, PropertyTag::R3),
    (PropertyTag::R3, PropertyTag::R4),
    (PropertyTag::P4, PropertyTag::R4),
    (PropertyTag::P6, PropertyTag::R6),
    (PropertyTag::R4, PropertyTag::R6),
];

/// Verdicts of all tags for one named group.
#[derive(Clone, Debug)]
pub struct GroupPropertyProfile {
    pub name: String,
    pub reports: Vec<PropertyReport>,
}

impl GroupPropertyProfile {
    pub fn holds(&self, tag: PropertyTag) -> bool {
        self.reports
            .iter()
            .find(|r| r.tag == tag)
            .map(|r| r.holds)
            .unwrap_or(false)
    }

    pub fn report(&self, tag: PropertyTag) -> Option<&PropertyReport> {
        self.reports.iter().find(|r| r.tag == tag)
    }
}

/// An edge of the diagram contradicted by a concrete group — this never
/// happens unless the decision procedures are wrong.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ImplicationViolation {
    pub group: String,
    pub from: PropertyTag,
    pub to: PropertyTag,
}

#[derive(Clone, Debug)]
pub struct ImplicationHarnessReport {
    pub profiles: Vec<GroupPropertyProfile>,
    pub violations: Vec<ImplicationViolation>,
}

impl ImplicationHarnessReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates every tag on every group and checks each diagram edge:
/// no group may satisfy the source of an edge while failing its target.
pub fn implication_harness(
    named_groups: &[(&str, &FiniteRotGroup)],
) -> Result<ImplicationHarnessReport, GroupError> {
    let mut profiles = Vec::new();
    for (name, group) in named_groups {
        profiles.push(GroupPropertyProfile {
            name: (*name).to_string(),
            reports: check_all_properties(group)?,
        });
    }
    let mut violations = Vec::new();
    for profile in &profiles {
        for (from, to) in IMPLICATION_EDGES {
            if profile.holds(from) && !profile.holds(to) {
                violations.push(ImplicationViolation {
                    group: profile.name.clone(),
                    from,
                    to,
                });
            }
        }
    }
    Ok(ImplicationHarnessReport {
        profiles,
        violations,
    })
}
