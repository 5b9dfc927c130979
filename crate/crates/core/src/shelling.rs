//! Checks a labeled lattice interval by interval, derives the lexicographic
//! facet order from the labels, and checks a facet order against the
//! definition of a shelling.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::labeling::LabeledHasse;
use crate::par::{self, Exec};
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    NoIncreasingChain,
    MultipleIncreasingChains,
    NotLexFirst,
}

/// A failing interval `[lower, upper]`, read from `upper` down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ELViolation {
    pub lower: usize,
    pub upper: usize,
    pub kind: ViolationKind,
    pub increasing_chains: u64,
    /// Lexicographically least chain, top-down, as node indices.
    pub lex_first_chain: Vec<usize>,
    pub lex_first_word: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ELReport {
    pub ok: bool,
    pub intervals_checked: usize,
    pub violations: Vec<ELViolation>,
}

pub fn verify_coel(lh: &LabeledHasse) -> Result<ELReport> {
    verify_coel_with(lh, Exec::default())
}

/// For every interval `[a, b]` with `a < b`: among maximal chains read
/// from `b` down to `a`, exactly one has strictly increasing labels and its
/// label word is lexicographically least.
pub fn verify_coel_with(lh: &LabeledHasse, exec: Exec) -> Result<ELReport> {
    lh.check_complete()?;
    let poset = lh.lattice();
    let per_top = par::map_range(exec, poset.len(), |b| check_below(lh, poset, b));
    let mut intervals_checked = 0;
    let mut violations = Vec::new();
    for (checked, found) in per_top {
        intervals_checked += checked;
        violations.extend(found);
    }
    Ok(ELReport {
        ok: violations.is_empty(),
        intervals_checked,
        violations,
    })
}

fn label(lh: &LabeledHasse, lower: usize, upper: usize) -> i64 {
    lh.label(lower, upper).expect("labels checked complete")
}

/// All intervals with top `b`.
fn check_below(lh: &LabeledHasse, poset: &Poset, b: usize) -> (usize, Vec<ELViolation>) {
    // increasing[y]: last label -> number of strictly increasing chains b..y
    let mut increasing: BTreeMap<usize, BTreeMap<i64, u64>> = BTreeMap::new();
    increasing.insert(b, BTreeMap::from([(i64::MIN, 1)]));
    let below: Vec<usize> = poset.down_set(b).ones().collect();
    for &y in below.iter().rev() {
        let Some(ways) = increasing.get(&y).cloned() else {
            continue;
        };
        for &z in poset.lower_covers(y) {
            let step = label(lh, z, y);
            let count: u64 = ways.range(..step).map(|(_, &c)| c).fold(0, u64::saturating_add);
            if count > 0 {
                let slot = increasing.entry(z).or_default().entry(step).or_insert(0);
                *slot = slot.saturating_add(count);
            }
        }
    }
    let mut violations = Vec::new();
    let mut checked = 0;
    for &a in below.iter().filter(|&&a| a != b) {
        checked += 1;
        let count = increasing
            .get(&a)
            .map_or(0, |m| m.values().copied().fold(0, u64::saturating_add));
        let (chain, word) = lex_first(lh, poset, a, b);
        let kind = if count == 0 {
            Some(ViolationKind::NoIncreasingChain)
        } else if count > 1 {
            Some(ViolationKind::MultipleIncreasingChains)
        } else if !word.windows(2).all(|w| w[0] < w[1]) {
            Some(ViolationKind::NotLexFirst)
        } else {
            None
        };
        if let Some(kind) = kind {
            violations.push(ELViolation {
                lower: a,
                upper: b,
                kind,
                increasing_chains: count,
                lex_first_chain: chain,
                lex_first_word: word,
            });
        }
    }
    (checked, violations)
}

/// Lexicographically least top-down chain from `b` to `a`. Ties are
/// followed as sets; the reported chain takes the least node at each tie.
fn lex_first(lh: &LabeledHasse, poset: &Poset, a: usize, b: usize) -> (Vec<usize>, Vec<i64>) {
    let mut frontier: BTreeMap<usize, usize> = BTreeMap::from([(b, b)]);
    let mut parents: Vec<BTreeMap<usize, usize>> = Vec::new();
    let mut word = Vec::new();
    while !frontier.contains_key(&a) {
        let mut best: Option<i64> = None;
        let mut next: BTreeMap<usize, usize> = BTreeMap::new();
        for &y in frontier.keys() {
            for &z in poset.lower_covers(y) {
                if !poset.leq(a, z) {
                    continue;
                }
                let step = label(lh, z, y);
                match best {
                    Some(v) if step > v => continue,
                    Some(v) if step == v => {
                        next.entry(z).or_insert(y);
                    }
                    _ => {
                        best = Some(step);
                        next = BTreeMap::from([(z, y)]);
                    }
                }
            }
        }
        word.push(best.expect("a lies below every frontier node"));
        parents.push(next.clone());
        frontier = next;
    }
    let mut chain = vec![a];
    let mut node = a;
    for level in parents.iter().rev() {
        node = level[&node];
        chain.push(node);
    }
    chain.reverse();
    (chain, word)
}

/// Maximal chains of the lattice sorted by top-down label word, ties in
/// canonical chain order, with the bounds stripped. Vertex `v` of a facet
/// is node `v + 1` of the lattice, matching the order complex of its
/// proper part.
pub fn facet_order_from_labels(lh: &LabeledHasse) -> Result<Vec<Vec<usize>>> {
    if !verify_coel(lh)?.ok {
        return Err(Error::ELNotVerified);
    }
    facet_order_unverified(lh)
}

/// [`facet_order_from_labels`] without checking the labeling first.
pub fn facet_order_unverified(lh: &LabeledHasse) -> Result<Vec<Vec<usize>>> {
    let poset = lh.lattice();
    let mut chains: Vec<(Vec<i64>, Vec<usize>)> = poset
        .maximal_chains()
        .into_iter()
        .map(|c| Ok((lh.word(&c)?, c)))
        .collect::<Result<_>>()?;
    chains.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(chains
        .into_iter()
        .map(|(_, c)| c[1..c.len() - 1].iter().map(|v| v - 1).collect())
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingViolation {
    /// 1-based position of the failing facet in the order.
    pub index: usize,
    pub facet: Vec<usize>,
    /// Maximal faces of the facet's intersection with its predecessors.
    pub intersection: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingVerdict {
    pub holds: bool,
    pub violation: Option<ShellingViolation>,
}

/// Each facet after the first meets the union of its predecessors in a
/// nonempty union of its codimension-one faces.
pub fn verify_shelling(k: &SimplicialComplex, order: &[Vec<usize>]) -> Result<ShellingVerdict> {
    let mut given: Vec<Vec<usize>> = order
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect();
    let normalized = given.clone();
    given.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    if given != k.facets() {
        return Err(Error::NotAPermutation);
    }
    for (pos, facet) in normalized.iter().enumerate().skip(1) {
        let meets: Vec<Vec<usize>> = normalized[..pos]
            .iter()
            .map(|prev| facet.iter().copied().filter(|v| prev.binary_search(v).is_ok()).collect())
            .collect();
        let ridges: Vec<&Vec<usize>> = meets.iter().filter(|m| m.len() + 1 == facet.len()).collect();
        let covered = facet.len() >= 2
            && !ridges.is_empty()
            && meets
                .iter()
                .all(|m| ridges.iter().any(|r| m.iter().all(|v| r.binary_search(v).is_ok())));
        if !covered {
            let mut intersection: Vec<Vec<usize>> = Vec::new();
            let mut sorted = meets.clone();
            sorted.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
            sorted.dedup();
            for m in sorted {
                if !m.is_empty() && !intersection.iter().any(|big| m.iter().all(|v| big.binary_search(v).is_ok())) {
                    intersection.push(m);
                }
            }
            return Ok(ShellingVerdict {
                holds: false,
                violation: Some(ShellingViolation {
                    index: pos + 1,
                    facet: facet.clone(),
                    intersection,
                }),
            });
        }
    }
    Ok(ShellingVerdict {
        holds: true,
        violation: None,
    })
}

/// Maximal chains (ascending node indices) whose top-down label words are
/// weakly decreasing.
pub fn falling_chains(lh: &LabeledHasse) -> Result<Vec<Vec<usize>>> {
    lh.check_complete()?;
    let mut out = Vec::new();
    for chain in lh.lattice().maximal_chains() {
        let word = lh.word(&chain)?;
        if word.windows(2).all(|w| w[0] >= w[1]) {
            out.push(chain);
        }
    }
    Ok(out)
}
