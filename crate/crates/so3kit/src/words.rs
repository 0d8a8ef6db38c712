//! Bounded word searches over rotation generators: evidence for freeness and
//! free-abelianness of infinite generated groups.
//!
//! Two modes, selected by whether the generators all commute. For
//! non-commuting generators every reduced word up to the given length is
//! evaluated and checked for pairwise distinctness (distinctness of all
//! reduced words is exactly freeness up to that length). For commuting
//! generators the relevant question is whether some power product
//! `g1^m … gk^n` collapses to the identity inside the exponent box.

use std::collections::HashMap;
use std::fmt;

use crate::group::GroupError;
use crate::rotation::Rot3;
use crate::scalar::ScalarError;

/// Hard bound on the word length / exponent box.
pub const MAX_WORD_DEPTH: u32 = 12;

/// Outcome of a bounded relation search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WordSearchResult {
    /// Every checked word evaluates to a distinct rotation; `count` includes
    /// the empty word (resp. the zero exponent vector).
    AllDistinct { count: u64 },
    /// A non-trivial word evaluating to the identity, written
    /// multiplicatively, e.g. `g1^2` or `g1 g2^-1 g1 g2`.
    RelationFound { relation: String },
}

impl fmt::Display for WordSearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordSearchResult::AllDistinct { count } => {
                write!(f, "all {count} words evaluate to distinct rotations")
            }
            WordSearchResult::RelationFound { relation } => {
                write!(f, "relation found: {relation} = identity")
            }
        }
    }
}

/// Searches for relations among the generators up to `max_len`.
///
/// With a single generator, or with generators that all commute pairwise,
/// the search scans exponent boxes `|m_i| ≤ max_len` for a power product
/// equal to the identity. Otherwise it enumerates all reduced words of
/// length at most `max_len` and reports the first collision as a relation.
pub fn word_no_relation_search(
    gens: &[Rot3],
    max_len: u32,
) -> Result<WordSearchResult, GroupError> {
    if gens.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    if max_len > MAX_WORD_DEPTH {
        return Err(GroupError::DepthTooLarge {
            requested: max_len,
            max: MAX_WORD_DEPTH,
        });
    }
    let d = gens[0].ambient();
    for g in gens {
        if g.ambient() != d {
            return Err(GroupError::Scalar(ScalarError::AmbientMismatch {
                left: d,
                right: g.ambient(),
            }));
        }
    }
    let all_commute = (0..gens.len())
        .all(|i| (i + 1..gens.len()).all(|j| gens[i].commutes_with(&gens[j])));
    if all_commute {
        Ok(commuting_power_search(gens, max_len))
    } else {
        Ok(free_word_search(gens, max_len))
    }
}

/// Scans `g1^m1 · … · gk^mk = E` over the exponent box `|m_i| ≤ max_len`,
/// skipping the zero vector. Each coordinate runs through
/// `0, 1, −1, 2, −2, …` so the first relation found uses small exponents.
fn commuting_power_search(gens: &[Rot3], max_len: u32) -> WordSearchResult {
    let l = max_len as i64;
    let d = gens[0].ambient();
    let seq: Vec<i64> = std::iter::once(0)
        .chain((1..=l).flat_map(|m| [m, -m]))
        .collect();
    // power tables per generator, indexed by exponent + l
    let tables: Vec<Vec<Rot3>> = gens
        .iter()
        .map(|g| (-l..=l).map(|m| g.pow(m)).collect())
        .collect();
    let mut pos = vec![0usize; gens.len()];
    let mut count = 0u64;
    loop {
        count += 1;
        let exponents: Vec<i64> = pos.iter().map(|&p| seq[p]).collect();
        if exponents.iter().any(|&m| m != 0) {
            let mut product = Rot3::identity(d);
            for (gi, &m) in exponents.iter().enumerate() {
                product = &product * &tables[gi][(m + l) as usize];
            }
            if product.is_identity() {
                let relation = exponents
                    .iter()
                    .enumerate()
                    .filter(|&(_, &m)| m != 0)
                    .map(|(gi, &m)| format_power(gi, m))
                    .collect::<Vec<_>>()
                    .join(" ");
                return WordSearchResult::RelationFound { relation };
            }
        }
        // advance the odometer, last coordinate fastest
        let mut c = gens.len();
        loop {
            if c == 0 {
                return WordSearchResult::AllDistinct { count };
            }
            c -= 1;
            if pos[c] + 1 < seq.len() {
                pos[c] += 1;
                break;
            }
            pos[c] = 0;
        }
    }
}

fn format_power(gen_index: usize, exp: i64) -> String {
    if exp == 1 {
        format!("g{}", gen_index + 1)
    } else {
        format!("g{}^{}", gen_index + 1, exp)
    }
}

/// A letter is a generator index with a sign; a word is reduced when no
/// letter is followed by its own inverse.
type Letter = i32;

fn letter_matrix(gens: &[Rot3], letter: Letter) -> Rot3 {
    let gi = (letter.abs() - 1) as usize;
    if letter > 0 {
        gens[gi].clone()
    } else {
        gens[gi].inverse()
    }
}

fn format_word(word: &[Letter]) -> String {
    let mut parts: Vec<(Letter, i64)> = Vec::new();
    for &l in word {
        match parts.last_mut() {
            Some((prev, run)) if *prev == l => *run += 1,
            _ => parts.push((l, 1)),
        }
    }
    parts
        .iter()
        .map(|&(l, run)| {
            let gi = (l.abs() - 1) as usize;
            let exp = if l > 0 { run } else { -run };
            format_power(gi, exp)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Breadth-first enumeration of all reduced words of length ≤ `max_len`,
/// in deterministic order (letters g1, g1⁻¹, g2, g2⁻¹, …). On a collision
/// the two words are merged into one reduced relation.
fn free_word_search(gens: &[Rot3], max_len: u32) -> WordSearchResult {
    let d = gens[0].ambient();
    let letters: Vec<Letter> = (1..=gens.len() as i32).flat_map(|g| [g, -g]).collect();
    let mut seen: HashMap<Rot3, Vec<Letter>> = HashMap::new();
    seen.insert(Rot3::identity(d), Vec::new());
    let mut frontier: Vec<(Rot3, Vec<Letter>)> = vec![(Rot3::identity(d), Vec::new())];
    let mut count = 1u64;
    for _ in 0..max_len {
        let mut next: Vec<(Rot3, Vec<Letter>)> = Vec::new();
        for (matrix, word) in &frontier {
            for &l in &letters {
                if word.last() == Some(&-l) {
                    continue; // not reduced
                }
                let extended = matrix * &letter_matrix(gens, l);
                let mut new_word = word.clone();
                new_word.push(l);
                if let Some(earlier) = seen.get(&extended) {
                    // new_word · earlier⁻¹ is a non-trivial reduced relation
                    let mut relation = new_word.clone();
                    for &e in earlier.iter().rev() {
                        if relation.last() == Some(&e) {
                            relation.pop();
                        } else {
                            relation.push(-e);
                        }
                    }
                    return WordSearchResult::RelationFound {
                        relation: format_word(&relation),
                    };
                }
                count += 1;
                seen.insert(extended.clone(), new_word.clone());
                next.push((extended, new_word));
            }
        }
        frontier = next;
    }
    WordSearchResult::AllDistinct { count }
}
