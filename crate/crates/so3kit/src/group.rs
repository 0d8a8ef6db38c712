//! Finite group machinery on exact rotation matrices: breadth-first closure
//! with a Cayley index, subgroup enumeration, centers and centralizers,
//! maximal abelian subgroups, malnormality, internal direct-product
//! decompositions, and classification into the finite rotation group
//! families.
//!
//! Element identity is exact matrix equality throughout; canonical scalars
//! make hashing sound, so no tolerance policy exists anywhere.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::rotation::Rot3;
use crate::scalar::ScalarError;

/// Guard for every operation that enumerates subgroups.
pub const SUBGROUP_ENUM_LIMIT: usize = 200;

/// Orders up to this bound get an eager Cayley table; larger groups compute
/// products on demand through the element index.
const CAYLEY_EAGER_LIMIT: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The breadth-first closure discovered more elements than the cap
    /// allows. This is the expected outcome when generating an infinite
    /// group, not a failure of the machinery.
    #[error("closure exceeds cap: {reached} elements generated without closing")]
    ClosureExceedsCap { reached: usize },
    #[error("group of order {order} exceeds the limit {limit} for this operation")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("the given element set is not a subgroup")]
    NotASubgroup,
    #[error("no generators given")]
    NoGenerators,
    #[error("word search depth {requested} exceeds the supported maximum {max}")]
    DepthTooLarge { requested: u32, max: u32 },
    #[error("not a recognized finite rotation group family (invariant violation)")]
    UnrecognizedGroup,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A sorted set of element indices that is closed under the group operation
/// and contains the identity (index 0).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    indices: Vec<usize>,
}

impl Subgroup {
    fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(indices.first(), Some(&0));
        Subgroup { indices }
    }

    pub fn order(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    /// True when the only common element is the identity.
    pub fn intersects_trivially(&self, other: &Subgroup) -> bool {
        self.indices
            .iter()
            .filter(|&&i| i != 0)
            .all(|&i| !other.contains(i))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// An internal direct-product decomposition: two non-trivial subgroups with
/// trivial intersection whose elements commute pairwise and whose orders
/// multiply to the order of the decomposed group. Those conditions force the
/// product set to be the whole group and both factors to be normal in it.
/// The smaller factor (by order, then by indices) is stored first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Decomposition {
    pub factor_h: Subgroup,
    pub factor_k: Subgroup,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.factor_h, self.factor_k)
    }
}

/// Isomorphism type of a finite subgroup of the rotation group. The finite
/// subgroups of SO(3) are exactly the cyclic and dihedral families plus the
/// three exceptional polyhedral groups.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IsoType {
    Trivial,
    Cyclic(u64),
    Dihedral(u64),
    TetrahedralA4,
    OctahedralS4,
    IcosahedralA5,
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::Trivial => write!(f, "Trivial"),
            IsoType::Cyclic(n) => write!(f, "Cyclic({n})"),
            IsoType::Dihedral(n) => write!(f, "Dihedral({n})"),
            IsoType::TetrahedralA4 => write!(f, "TetrahedralA4"),
            IsoType::OctahedralS4 => write!(f, "OctahedralS4"),
            IsoType::IcosahedralA5 => write!(f, "IcosahedralA5"),
        }
    }
}

/// A closed finite set of rotations with identity first, a deterministic
/// element order (breadth-first layer, then lexicographic on entries), and a
/// Cayley index.
#[derive(Clone, Debug)]
pub struct FiniteRotGroup {
    elements: Vec<Rot3>,
    index: HashMap<Rot3, usize>,
    cayley: Option<Vec<Vec<usize>>>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteRotGroup {
    /// Breadth-first closure of the generators under multiplication by the
    /// generators and their inverses. Returns the full group when its order
    /// is at most `cap`; otherwise reports [`GroupError::ClosureExceedsCap`],
    /// the expected signal for a (likely) infinite generated group.
    pub fn generate_closure(gens: &[Rot3], cap: usize) -> Result<Self, GroupError> {
        let Some(first) = gens.first() else {
            return Err(GroupError::NoGenerators);
        };
        assert!(cap >= 1, "cap must be positive");
        let d = first.ambient();
        for g in gens {
            if g.ambient() != d {
                return Err(GroupError::Scalar(ScalarError::AmbientMismatch {
                    left: d,
                    right: g.ambient(),
                }));
            }
        }
        let mut multipliers: Vec<Rot3> = Vec::with_capacity(gens.len() * 2);
        for g in gens {
            multipliers.push(g.clone());
            multipliers.push(g.inverse());
        }

        let identity = Rot3::identity(d);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Rot3, usize> = HashMap::from([(identity, 0usize)]);
        let mut layer: Vec<usize> = vec![0];
        while !layer.is_empty() {
            let mut discovered: Vec<Rot3> = Vec::new();
            let mut seen: HashSet<Rot3> = HashSet::new();
            for &i in &layer {
                for m in &multipliers {
                    let p = &elements[i] * m;
                    if !index.contains_key(&p) && seen.insert(p.clone()) {
                        discovered.push(p);
                    }
                }
            }
            discovered.sort();
            layer = Vec::with_capacity(discovered.len());
            for p in discovered {
                if elements.len() >= cap {
                    return Err(GroupError::ClosureExceedsCap {
                        reached: elements.len() + 1,
                    });
                }
                let idx = elements.len();
                index.insert(p.clone(), idx);
                elements.push(p);
                layer.push(idx);
            }
        }

        let n = elements.len();
        let inverse: Vec<usize> = elements.iter().map(|e| index[&e.inverse()]).collect();
        let cayley = (n <= CAYLEY_EAGER_LIMIT).then(|| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| index[&(&elements[i] * &elements[j])])
                        .collect()
                })
                .collect()
        });
        let mut generators = Vec::new();
        for g in gens {
            let i = index[g];
            if !generators.contains(&i) {
                generators.push(i);
            }
        }
        Ok(FiniteRotGroup {
            elements,
            index,
            cayley,
            inverse,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Rot3] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Rot3 {
        &self.elements[i]
    }

    pub fn ambient(&self) -> u64 {
        self.elements[0].ambient()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, r: &Rot3) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of the product `elements[i] · elements[j]`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        match &self.cayley {
            Some(table) => table[i][j],
            None => self.index[&(&self.elements[i] * &self.elements[j])],
        }
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// `g · h · g⁻¹` as indices.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.product(self.product(g, h), self.inverse[g])
    }

    /// Order of an element, read off the Cayley index.
    pub fn element_order_index(&self, i: usize) -> u64 {
        let mut p = i;
        let mut order = 1u64;
        while p != 0 {
            p = self.product(p, i);
            order += 1;
        }
        order
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order()).collect())
    }

    /// Validates and canonicalizes a user-supplied element set.
    pub fn subgroup_from_indices(
        &self,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Subgroup, GroupError> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.iter().any(|&i| i >= self.order()) {
            return Err(GroupError::NotASubgroup);
        }
        if v.first() != Some(&0) {
            return Err(GroupError::NotASubgroup);
        }
        let candidate = Subgroup { indices: v };
        self.validate_subgroup(&candidate)?;
        Ok(candidate)
    }

    fn validate_subgroup(&self, h: &Subgroup) -> Result<(), GroupError> {
        if !h.contains(0) || h.indices().iter().any(|&i| i >= self.order()) {
            return Err(GroupError::NotASubgroup);
        }
        for &a in h.indices() {
            for &b in h.indices() {
                if !h.contains(self.product(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(())
    }

    /// Subgroup generated by the given indices (closure under products; a
    /// finite set closed under products contains inverses).
    pub fn generated_subgroup(&self, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        self.close_indices(seed)
    }

    fn close_indices(&self, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut in_set = vec![false; self.order()];
        in_set[0] = true;
        let mut members: Vec<usize> = vec![0];
        let mut stack: Vec<usize> = Vec::new();
        for s in seed {
            if !in_set[s] {
                in_set[s] = true;
                members.push(s);
                stack.push(s);
            }
        }
        while let Some(x) = stack.pop() {
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                for p in [self.product(x, y), self.product(y, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                        stack.push(p);
                    }
                }
                k += 1;
            }
        }
        members.sort_unstable();
        Subgroup::from_sorted(members)
    }

    /// All subgroups, found by closing every cyclic subgroup and then joining
    /// pairs until no new subgroup appears. Guarded by
    /// [`SUBGROUP_ENUM_LIMIT`].
    pub fn subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        self.check_enum_guard()?;
        Ok(self.subgroups_within(&self.full_subgroup()))
    }

    fn check_enum_guard(&self) -> Result<(), GroupError> {
        if self.order() > SUBGROUP_ENUM_LIMIT {
            return Err(GroupError::GroupTooLarge {
                order: self.order(),
                limit: SUBGROUP_ENUM_LIMIT,
            });
        }
        Ok(())
    }

    fn subgroups_within(&self, ambient: &Subgroup) -> Vec<Subgroup> {
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let mut list: Vec<Subgroup> = Vec::new();
        for &g in ambient.indices() {
            let cyc = self.close_indices([g]);
            if seen.insert(cyc.clone()) {
                list.push(cyc);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..i {
                if list[i].is_subset_of(&list[j]) || list[j].is_subset_of(&list[i]) {
                    continue;
                }
                let seed: Vec<usize> = list[i]
                    .indices()
                    .iter()
                    .chain(list[j].indices())
                    .copied()
                    .collect();
                let joined = self.close_indices(seed);
                if seen.insert(joined.clone()) {
                    list.push(joined);
                }
            }
            i += 1;
        }
        list.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.indices().cmp(b.indices()))
        });
        list
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Subgroup {
        let n = self.order();
        let members: Vec<usize> = (0..n)
            .filter(|&g| (0..n).all(|h| self.product(g, h) == self.product(h, g)))
            .collect();
        Subgroup::from_sorted(members)
    }

    /// Elements commuting with `g`.
    pub fn centralizer(&self, g: usize) -> Subgroup {
        let n = self.order();
        let members: Vec<usize> = (0..n)
            .filter(|&h| self.product(g, h) == self.product(h, g))
            .collect();
        Subgroup::from_sorted(members)
    }

    pub fn is_abelian_subgroup(&self, s: &Subgroup) -> bool {
        let idx = s.indices();
        idx.iter().enumerate().all(|(pos, &a)| {
            idx[pos..]
                .iter()
                .all(|&b| self.product(a, b) == self.product(b, a))
        })
    }

    pub fn has_involution(&self, s: &Subgroup) -> bool {
        s.indices()
            .iter()
            .any(|&i| self.element_order_index(i) == 2)
    }

    /// Abelian subgroups not properly contained in a larger abelian subgroup.
    pub fn maximal_abelian_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        let abelian: Vec<Subgroup> = self
            .subgroups()?
            .into_iter()
            .filter(|s| self.is_abelian_subgroup(s))
            .collect();
        Ok(abelian
            .iter()
            .filter(|s| {
                !abelian
                    .iter()
                    .any(|t| t.order() > s.order() && s.is_subset_of(t))
            })
            .cloned()
            .collect())
    }

    /// A subgroup H is malnormal when `gHg⁻¹ ∩ H = {E}` for every g outside
    /// H. Vacuously true for H = G.
    pub fn is_malnormal(&self, h: &Subgroup) -> Result<bool, GroupError> {
        self.validate_subgroup(h)?;
        for g in 0..self.order() {
            if h.contains(g) {
                continue;
            }
            for &x in h.indices() {
                if x == 0 {
                    continue;
                }
                let conj = self.conjugate(g, x);
                if conj != 0 && h.contains(conj) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All internal direct-product decompositions of the subgroup `s`,
    /// deduplicated as unordered pairs and deterministically ordered.
    pub fn direct_product_decompositions(
        &self,
        s: &Subgroup,
    ) -> Result<Vec<Decomposition>, GroupError> {
        if s.order() > SUBGROUP_ENUM_LIMIT {
            return Err(GroupError::GroupTooLarge {
                order: s.order(),
                limit: SUBGROUP_ENUM_LIMIT,
            });
        }
        self.validate_subgroup(s)?;
        let subs = self.subgroups_within(s);
        Ok(self.decompositions_from_subgroup_list(s, &subs))
    }

    /// Decompositions of `s` given a list that contains every subgroup of
    /// `s` (entries not inside `s` are ignored).
    pub(crate) fn decompositions_from_subgroup_list(
        &self,
        s: &Subgroup,
        subs: &[Subgroup],
    ) -> Vec<Decomposition> {
        let inner: Vec<&Subgroup> = subs.iter().filter(|h| h.is_subset_of(s)).collect();
        let mut out = Vec::new();
        for i in 0..inner.len() {
            for j in i..inner.len() {
                let (h, k) = (inner[i], inner[j]);
                if h.order() < 2 || k.order() < 2 {
                    continue;
                }
                if h.order() * k.order() != s.order() {
                    continue;
                }
                if !h.intersects_trivially(k) {
                    continue;
                }
                if !self.elementwise_commute(h, k) {
                    continue;
                }
                let (first, second) = if (h.order(), h.indices()) <= (k.order(), k.indices()) {
                    (h, k)
                } else {
                    (k, h)
                };
                out.push(Decomposition {
                    factor_h: first.clone(),
                    factor_k: second.clone(),
                });
            }
        }
        out.sort_by(|a, b| {
            (a.factor_h.indices(), a.factor_k.indices())
                .cmp(&(b.factor_h.indices(), b.factor_k.indices()))
        });
        out
    }

    pub fn elementwise_commute(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.indices().iter().all(|&a| {
            k.indices()
                .iter()
                .all(|&b| self.product(a, b) == self.product(b, a))
        })
    }

    /// Decompositions of the whole group.
    pub fn decompositions(&self) -> Result<Vec<Decomposition>, GroupError> {
        self.check_enum_guard()?;
        let full = self.full_subgroup();
        let subs = self.subgroups_within(&full);
        Ok(self.decompositions_from_subgroup_list(&full, &subs))
    }

    /// A subgroup repackaged as a standalone group (element order is
    /// regenerated, the element set is identical).
    pub fn subgroup_as_group(&self, s: &Subgroup) -> FiniteRotGroup {
        let elems: Vec<Rot3> = s
            .indices()
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect();
        FiniteRotGroup::generate_closure(&elems, elems.len().max(1))
            .expect("a subgroup closes within its own order")
    }

    /// Classifies the group among the finite rotation group families by its
    /// order together with the element-order structure. An unknown shape is
    /// an invariant violation, reported as [`GroupError::UnrecognizedGroup`].
    pub fn classify_iso_type(&self) -> Result<IsoType, GroupError> {
        let n = self.order();
        if n == 1 {
            return Ok(IsoType::Trivial);
        }
        let orders: Vec<u64> = (0..n).map(|i| self.element_order_index(i)).collect();
        if orders.contains(&(n as u64)) {
            return Ok(IsoType::Cyclic(n as u64));
        }
        if n.is_multiple_of(2) && n >= 4 {
            let m = (n / 2) as u64;
            for i in 0..n {
                if orders[i] != m {
                    continue;
                }
                let rotation_part = self.close_indices([i]);
                if (0..n).all(|g| rotation_part.contains(g) || orders[g] == 2) {
                    return Ok(IsoType::Dihedral(m));
                }
            }
        }
        let mut multiset: Vec<(u64, usize)> = Vec::new();
        for &o in &orders {
            match multiset.iter_mut().find(|(v, _)| *v == o) {
                Some((_, c)) => *c += 1,
                None => multiset.push((o, 1)),
            }
        }
        multiset.sort_unstable();
        match (n, multiset.as_slice()) {
            (12, [(1, 1), (2, 3), (3, 8)]) => Ok(IsoType::TetrahedralA4),
            (24, [(1, 1), (2, 9), (3, 8), (4, 6)]) => Ok(IsoType::OctahedralS4),
            (60, [(1, 1), (2, 15), (3, 20), (5, 24)]) => Ok(IsoType::IcosahedralA5),
            _ => Err(GroupError::UnrecognizedGroup),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;
    use crate::rotation::theta;
    use crate::scalar::QuadScalar;

    fn d8() -> FiniteRotGroup {
        let b = theta(&Quaternion::from_ints(1, 1, 0, 0, 0)).unwrap();
        let c = theta(&Quaternion::j(0)).unwrap();
        FiniteRotGroup::generate_closure(&[b, c], 100).unwrap()
    }

    fn d12_surd() -> FiniteRotGroup {
        let r = Rot3::new([
            [QuadScalar::one(3), QuadScalar::zero(3), QuadScalar::zero(3)],
            [
                QuadScalar::zero(3),
                QuadScalar::from_ratio(1, 2, 3),
                QuadScalar::from_parts(0, 1, -1, 2, 3),
            ],
            [
                QuadScalar::zero(3),
                QuadScalar::from_parts(0, 1, 1, 2, 3),
                QuadScalar::from_ratio(1, 2, 3),
            ],
        ])
        .unwrap();
        let f = Rot3::from_ratios(
            [
                [(-1, 1), (0, 1), (0, 1)],
                [(0, 1), (1, 1), (0, 1)],
                [(0, 1), (0, 1), (-1, 1)],
            ],
            3,
        )
        .unwrap();
        FiniteRotGroup::generate_closure(&[r, f], 100).unwrap()
    }

    #[test]
    fn closure_d8() {
        let g = d8();
        assert_eq!(g.order(), 8);
        assert_eq!(g.classify_iso_type().unwrap(), IsoType::Dihedral(4));
        // Cayley index consistent with exact multiplication
        for i in 0..8 {
            for j in 0..8 {
                let p = g.element(i) * g.element(j);
                assert_eq!(g.index_of(&p), Some(g.product(i, j)));
            }
        }
        // identity first, inverses correct
        assert!(g.element(0).is_identity());
        for i in 0..8 {
            assert_eq!(g.product(i, g.inverse_of(i)), 0);
        }
    }

    #[test]
    fn closure_cap_exceeded_for_free_pair() {
        let g1 = theta(&Quaternion::from_ints(1, 2, 0, 0, 0)).unwrap();
        let g2 = theta(&Quaternion::from_ints(1, 0, 2, 0, 0)).unwrap();
        match FiniteRotGroup::generate_closure(&[g1, g2], 200) {
            Err(GroupError::ClosureExceedsCap { reached }) => assert_eq!(reached, 201),
            other => panic!(
                "expected cap overflow, got order {:?}",
                other.map(|g| g.order())
            ),
        }
    }

    #[test]
    fn closure_order_is_deterministic() {
        let g1 = d12_surd();
        let g2 = d12_surd();
        assert_eq!(g1.elements(), g2.elements());
        assert_eq!(g1.generator_indices(), g2.generator_indices());
    }

    #[test]
    fn closure_idempotence_and_lagrange() {
        let g = d8();
        let again = FiniteRotGroup::generate_closure(g.elements(), g.order()).unwrap();
        let mut a: Vec<Rot3> = g.elements().to_vec();
        let mut b: Vec<Rot3> = again.elements().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        for s in g.subgroups().unwrap() {
            assert_eq!(g.order() % s.order(), 0, "Lagrange fails for {s}");
        }
    }

    #[test]
    fn subgroup_counts() {
        let c2 = FiniteRotGroup::generate_closure(&[theta(&Quaternion::i(0)).unwrap()], 10).unwrap();
        assert_eq!(c2.subgroups().unwrap().len(), 2);
        assert_eq!(d8().subgroups().unwrap().len(), 10);
        assert_eq!(d12_surd().subgroups().unwrap().len(), 16);
    }

    #[test]
    fn centers_and_centralizers() {
        let g = d8();
        let z = g.center();
        assert_eq!(z.order(), 2);
        // the non-identity central element is B², the half turn about x
        let b = theta(&Quaternion::from_ints(1, 1, 0, 0, 0)).unwrap();
        let b_sq = &b * &b;
        assert!(z.contains(g.index_of(&b_sq).unwrap()));
        assert_eq!(g.centralizer(0).order(), g.order());

        let d12 = d12_surd();
        assert_eq!(d12.center().order(), 2);
        let r = (0..12).find(|&i| d12.element_order_index(i) == 6).unwrap();
        let cent = d12.centralizer(r);
        assert_eq!(cent.order(), 6);
        assert!(d12.is_abelian_subgroup(&cent));
    }

    #[test]
    fn maximal_abelian_and_malnormal() {
        let g = d8();
        let maximal = g.maximal_abelian_subgroups().unwrap();
        // one cyclic of order 4 and two Klein four-groups
        assert_eq!(maximal.len(), 3);
        assert!(maximal.iter().all(|s| s.order() == 4));
        let cyclic_count = maximal
            .iter()
            .filter(|s| s.indices().iter().any(|&i| g.element_order_index(i) == 4))
            .count();
        assert_eq!(cyclic_count, 1);

        // the whole group is vacuously malnormal in itself
        assert!(g.is_malnormal(&g.full_subgroup()).unwrap());
        // the center is normal and non-trivial, hence not malnormal
        assert!(!g.is_malnormal(&g.center()).unwrap());
        // a C3 inside S3 is normal, hence not malnormal
        let z3 = Rot3::from_ratios(
            [
                [(0, 1), (0, 1), (1, 1)],
                [(1, 1), (0, 1), (0, 1)],
                [(0, 1), (1, 1), (0, 1)],
            ],
            0,
        )
        .unwrap();
        let s = Rot3::from_ratios(
            [
                [(0, 1), (-1, 1), (0, 1)],
                [(-1, 1), (0, 1), (0, 1)],
                [(0, 1), (0, 1), (-1, 1)],
            ],
            0,
        )
        .unwrap();
        let s3 = FiniteRotGroup::generate_closure(&[z3.clone(), s], 20).unwrap();
        assert_eq!(s3.order(), 6);
        let c3 = s3.generated_subgroup([s3.index_of(&z3).unwrap()]);
        assert_eq!(c3.order(), 3);
        assert!(!s3.is_malnormal(&c3).unwrap());
        let maximal_s3 = s3.maximal_abelian_subgroups().unwrap();
        let (c3s, c2s): (Vec<_>, Vec<_>) = maximal_s3.iter().partition(|s| s.order() == 3);
        assert_eq!((c3s.len(), c2s.len()), (1, 3));
    }

    #[test]
    fn decompositions_d8_empty_d12_two_kleins_three() {
        assert!(d8().decompositions().unwrap().is_empty());

        let d12 = d12_surd();
        let decs = d12.decompositions().unwrap();
        assert_eq!(decs.len(), 2);
        for dec in &decs {
            assert_eq!(dec.factor_h.order(), 2);
            assert_eq!(dec.factor_k.order(), 6);
            assert!(dec.factor_h.is_subset_of(&d12.center()));
            assert_eq!(
                d12.subgroup_as_group(&dec.factor_k)
                    .classify_iso_type()
                    .unwrap(),
                IsoType::Dihedral(3)
            );
            // invariants of the type
            assert!(dec.factor_h.intersects_trivially(&dec.factor_k));
            assert!(d12.elementwise_commute(&dec.factor_h, &dec.factor_k));
            assert_eq!(dec.factor_h.order() * dec.factor_k.order(), d12.order());
        }

        let v4 = FiniteRotGroup::generate_closure(
            &[
                theta(&Quaternion::i(0)).unwrap(),
                theta(&Quaternion::j(0)).unwrap(),
            ],
            10,
        )
        .unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.decompositions().unwrap().len(), 3);
    }

    #[test]
    fn classification() {
        let d12 = d12_surd();
        assert_eq!(d12.classify_iso_type().unwrap(), IsoType::Dihedral(6));
        let v4 = FiniteRotGroup::generate_closure(
            &[
                theta(&Quaternion::i(0)).unwrap(),
                theta(&Quaternion::j(0)).unwrap(),
            ],
            10,
        )
        .unwrap();
        assert_eq!(v4.classify_iso_type().unwrap(), IsoType::Dihedral(2));
        let c1 = FiniteRotGroup::generate_closure(&[Rot3::identity(0)], 2).unwrap();
        assert_eq!(c1.classify_iso_type().unwrap(), IsoType::Trivial);
    }

    #[test]
    fn subgroup_validation() {
        let g = d8();
        assert!(g.subgroup_from_indices([0]).is_ok());
        assert!(g.subgroup_from_indices(0..8).is_ok());
        assert_eq!(g.subgroup_from_indices([1, 2]), Err(GroupError::NotASubgroup));
        assert_eq!(
            g.subgroup_from_indices([0, 99]),
            Err(GroupError::NotASubgroup)
        );
    }
}
