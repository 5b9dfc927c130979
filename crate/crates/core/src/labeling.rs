//! Edge labels on the coset lattice of a direct product of square-free
//! groups, read top-down.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::gf::{check_square_free_factors, subgroup_pivots_in, PivotSet};
use crate::group::{is_subset_sorted, Elem, Group, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::poset::{coset_lattice_in, Node, Poset};

/// How the pairs `(p, j)` map to label magnitudes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelConvention {
    /// Rank of `(p, j)` in lexicographic order over all valid pairs, from 1.
    #[default]
    Lex,
    /// `l(p, j) = p`; only valid when each prime divides a single factor.
    Prime,
}

/// Everything needed to label covers: the subgroup lattice, the
/// distinguished subgroups `M_{p,i}` and the level map.
#[derive(Clone, Debug)]
pub struct LabelContext {
    lattice: SubgroupLattice,
    /// (p, factor) -> the chosen index-p subgroup of that factor
    factor_maximals: BTreeMap<(usize, usize), Subgroup>,
    /// (p, factor) -> factor maximal joined with every other factor
    distinguished: BTreeMap<(usize, usize), Subgroup>,
    levels: BTreeMap<(usize, usize), i64>,
    /// pivots[subgroup index][p]
    pivots: Vec<HashMap<usize, PivotSet>>,
}

pub fn build_context(g: &Group, levels: LevelConvention) -> Result<LabelContext> {
    build_context_with(g, levels, &BTreeMap::new())
}

/// Like [`build_context`], with explicit choices of the index-`p` subgroup
/// of factor `i` for some keys `(p, i)`; the rest use the least candidate.
pub fn build_context_with(
    g: &Group,
    levels: LevelConvention,
    choices: &BTreeMap<(usize, usize), Subgroup>,
) -> Result<LabelContext> {
    check_square_free_factors(g)?;
    let lattice = SubgroupLattice::new(g);
    let factors = g.factors();
    let mut factor_maximals = BTreeMap::new();
    let mut distinguished = BTreeMap::new();
    for (i, factor) in factors.iter().enumerate() {
        let fi = lattice.require(factor)?;
        for p in prime_divisors(factor.order()) {
            let target = factor.order() / p;
            let chosen = match choices.get(&(p, i + 1)) {
                Some(m) => {
                    if m.order() != target || !m.is_subgroup_of(factor) {
                        return Err(Error::InvalidParameter(format!(
                            "chosen subgroup for ({p}, {}) is not of index {p} in that factor",
                            i + 1
                        )));
                    }
                    m.clone()
                }
                None => lattice
                    .subgroups_of(fi)
                    .map(|k| lattice.subgroup(k))
                    .find(|s| s.order() == target)
                    .ok_or(Error::NotSolvable)?
                    .clone(),
            };
            let mut parts: Vec<&Subgroup> = factors.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, f)| f).collect();
            parts.push(&chosen);
            distinguished.insert((p, i + 1), g.join(&parts)?);
            factor_maximals.insert((p, i + 1), chosen);
        }
    }
    if let Some(&(p, i)) = choices.keys().find(|k| !factor_maximals.contains_key(k)) {
        return Err(Error::InvalidParameter(format!("({p}, {i}) is not a valid prime/factor pair")));
    }
    let levels = match levels {
        LevelConvention::Lex => factor_maximals
            .keys()
            .enumerate()
            .map(|(rank, &pair)| (pair, rank as i64 + 1))
            .collect(),
        LevelConvention::Prime => {
            let map: BTreeMap<(usize, usize), i64> = factor_maximals.keys().map(|&(p, j)| ((p, j), p as i64)).collect();
            let mut values: Vec<i64> = map.values().copied().collect();
            values.dedup();
            if values.len() != map.len() {
                return Err(Error::InvalidLevels("a prime divides several factor orders, so l(p, j) = p is not injective".into()));
            }
            map
        }
    };
    let primes = prime_divisors(g.order());
    let mut pivots = Vec::with_capacity(lattice.len());
    for h in lattice.subgroups() {
        let mut by_prime = HashMap::new();
        for &p in &primes {
            by_prime.insert(p, subgroup_pivots_in(&lattice, h, p)?);
        }
        pivots.push(by_prime);
    }
    Ok(LabelContext {
        lattice,
        factor_maximals,
        distinguished,
        levels,
        pivots,
    })
}

impl LabelContext {
    pub fn group(&self) -> &Group {
        self.lattice.group()
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    /// `M_{p,i}` for each valid pair, keyed by `(p, i)` with `i` 1-based.
    pub fn distinguished(&self) -> &BTreeMap<(usize, usize), Subgroup> {
        &self.distinguished
    }

    pub fn factor_maximals(&self) -> &BTreeMap<(usize, usize), Subgroup> {
        &self.factor_maximals
    }

    pub fn levels(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.levels
    }

    pub fn pivots(&self, h: &Subgroup, p: usize) -> Result<&PivotSet> {
        let i = self.lattice.require(h)?;
        self.pivots[i].get(&p).ok_or(Error::NotPrime(p as u64))
    }

    /// The coset lattice these labels apply to.
    pub fn coset_lattice(&self) -> Result<Poset> {
        coset_lattice_in(&self.lattice)
    }

    /// Label of the cover `lower < upper` in `lattice`.
    pub fn label_cover(&self, lattice: &Poset, lower: usize, upper: usize) -> Result<i64> {
        if upper >= lattice.len() || lower >= lattice.len() || !lattice.is_cover(lower, upper) {
            return Err(Error::NotACover(lower, upper));
        }
        let g = self.group();
        let bottom_coset = match lattice.node(lower) {
            Node::Bottom => return Ok(0),
            Node::Coset(c) => c,
            Node::Top => return Err(Error::NotACover(lower, upper)),
        };
        let (upper_subgroup, upper_set): (Subgroup, Vec<Elem>) = match lattice.node(upper) {
            Node::Top => (g.full_subgroup(), (0..g.order()).collect()),
            Node::Coset(c) => (c.subgroup().clone(), c.elements().to_vec()),
            Node::Bottom => return Err(Error::NotACover(lower, upper)),
        };
        let lower_subgroup = bottom_coset.subgroup();
        let index = upper_subgroup.order() / lower_subgroup.order();
        if !is_prime(index as u64) {
            return Err(Error::NonPrimeIndex(index));
        }
        let p = index;
        let hi = self.lattice.require(&upper_subgroup)?;
        let lo = self.lattice.require(lower_subgroup)?;
        let fresh = self.pivots[hi][&p].difference(&self.pivots[lo][&p]);
        if fresh.len() != 1 {
            return Err(Error::PivotStep);
        }
        let j = fresh.iter().next().expect("one pivot");
        let level = *self.levels.get(&(p, j)).ok_or(Error::PivotStep)?;
        let m = &self.distinguished[&(p, j)];
        let cut: Vec<Elem> = upper_set.iter().copied().filter(|&x| m.contains(x)).collect();
        Ok(if cut == bottom_coset.elements() { -level } else { level })
    }

    pub fn labeled_hasse(&self) -> Result<LabeledHasse> {
        let lattice = self.coset_lattice()?;
        let mut labels = BTreeMap::new();
        for &(a, b) in lattice.covers() {
            labels.insert((a, b), self.label_cover(&lattice, a, b)?);
        }
        Ok(LabeledHasse { lattice, labels })
    }
}

pub fn label_cover(ctx: &LabelContext, lattice: &Poset, lower: usize, upper: usize) -> Result<i64> {
    ctx.label_cover(lattice, lower, upper)
}

pub fn labeled_hasse(ctx: &LabelContext) -> Result<LabeledHasse> {
    ctx.labeled_hasse()
}

/// A bounded poset with integer labels on (some of) its covers.
#[derive(Clone, Debug)]
pub struct LabeledHasse {
    lattice: Poset,
    labels: BTreeMap<(usize, usize), i64>,
}

impl LabeledHasse {
    pub fn new(lattice: Poset, labels: BTreeMap<(usize, usize), i64>) -> Self {
        LabeledHasse { lattice, labels }
    }

    pub fn lattice(&self) -> &Poset {
        &self.lattice
    }

    pub fn labels(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.labels
    }

    pub fn label(&self, lower: usize, upper: usize) -> Result<i64> {
        self.labels
            .get(&(lower, upper))
            .copied()
            .ok_or(Error::UnlabeledCover(lower, upper))
    }

    pub fn set_label(&mut self, lower: usize, upper: usize, value: i64) {
        self.labels.insert((lower, upper), value);
    }

    pub fn remove_label(&mut self, lower: usize, upper: usize) -> Option<i64> {
        self.labels.remove(&(lower, upper))
    }

    /// Fails on the first unlabelled cover.
    pub fn check_complete(&self) -> Result<()> {
        for &(a, b) in self.lattice.covers() {
            self.label(a, b)?;
        }
        Ok(())
    }

    /// Labels along an ascending chain, read from the top down.
    pub fn word(&self, chain: &[usize]) -> Result<Vec<i64>> {
        chain.windows(2).rev().map(|w| self.label(w[0], w[1])).collect()
    }

    /// Restriction to the interval `[a, b]`, with labels carried over.
    pub fn interval(&self, a: usize, b: usize) -> Result<LabeledHasse> {
        let sub = self.lattice.interval(a, b)?;
        let keep: Vec<usize> = (a..=b).filter(|&x| self.lattice.leq(a, x) && self.lattice.leq(x, b)).collect();
        let mut labels = BTreeMap::new();
        for &(x, y) in sub.covers() {
            if let Some(&v) = self.labels.get(&(keep[x], keep[y])) {
                labels.insert((x, y), v);
            }
        }
        Ok(LabeledHasse { lattice: sub, labels })
    }

    /// One line per cover: `lower TAB upper TAB label`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (&(a, b), v) in &self.labels {
            let _ = writeln!(out, "{}\t{}\t{}", self.lattice.render(a), self.lattice.render(b), v);
        }
        out
    }
}

/// Subgroups of index `p` in `factor`: the valid choices for
/// [`build_context_with`].
pub fn index_p_subgroups(lattice: &SubgroupLattice, factor: &Subgroup, p: usize) -> Vec<Subgroup> {
    lattice
        .subgroups()
        .iter()
        .filter(|s| s.order() * p == factor.order() && is_subset_sorted(s.elements(), factor.elements()))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, direct_product, Builtin, DEFAULT_ORDER_CAP};

    fn z(n: usize) -> Group {
        builtin_group(Builtin::Cyclic(n)).unwrap()
    }

    fn cover_label(h: &LabeledHasse, lower: &[Elem], upper: &[Elem]) -> i64 {
        let l = h.lattice();
        h.label(l.find(lower).unwrap(), l.find(upper).unwrap()).unwrap()
    }

    #[test]
    fn context_examples() {
        let ctx = build_context(&z(6), LevelConvention::Prime).unwrap();
        assert_eq!(ctx.levels().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), vec![((2, 1), 2), ((3, 1), 3)]);
        assert_eq!(ctx.distinguished()[&(2, 1)].elements(), &[0, 2, 4]);
        assert_eq!(ctx.distinguished()[&(3, 1)].elements(), &[0, 3]);

        let v = direct_product(&z(2), &z(2), DEFAULT_ORDER_CAP).unwrap();
        let ctx = build_context(&v, LevelConvention::Lex).unwrap();
        assert_eq!(ctx.levels()[&(2, 1)], 1);
        assert_eq!(ctx.levels()[&(2, 2)], 2);
        // (a,b) has index 2a + b
        assert_eq!(ctx.distinguished()[&(2, 1)].elements(), &[0, 1]);
        assert_eq!(ctx.distinguished()[&(2, 2)].elements(), &[0, 2]);
        assert!(matches!(build_context(&v, LevelConvention::Prime), Err(Error::InvalidLevels(_))));

        assert!(matches!(
            build_context(&z(4), LevelConvention::Lex),
            Err(Error::NonSquareFreeFactor { factor: 1, order: 4, prime: 2 })
        ));
    }

    #[test]
    fn z6_labels() {
        let ctx = build_context(&z(6), LevelConvention::Prime).unwrap();
        let h = ctx.labeled_hasse().unwrap();
        let all: Vec<Elem> = (0..6).collect();
        assert_eq!(cover_label(&h, &[0, 2, 4], &all), -2);
        assert_eq!(cover_label(&h, &[4], &[1, 4]), -2);
        assert_eq!(cover_label(&h, &[1], &[1, 4]), 2);
        let top = h.lattice().len() - 1;
        let mut top_labels: Vec<i64> = h.lattice().lower_covers(top).iter().map(|&a| h.label(a, top).unwrap()).collect();
        top_labels.sort_unstable();
        assert_eq!(top_labels, vec![-3, -2, 2, 3, 3]);
        assert_eq!(h.labels().len(), 5 + 12 + 6);
        assert_eq!(h.labels().values().filter(|&&v| v == 0).count(), 6);
    }

    #[test]
    fn z2_labels() {
        let ctx = build_context(&z(2), LevelConvention::Lex).unwrap();
        let h = ctx.labeled_hasse().unwrap();
        assert_eq!(cover_label(&h, &[], &[0]), 0);
        assert_eq!(cover_label(&h, &[], &[1]), 0);
        assert_eq!(cover_label(&h, &[0], &[0, 1]), -1);
        assert_eq!(cover_label(&h, &[1], &[0, 1]), 1);
    }

    #[test]
    fn klein_labels() {
        let v = direct_product(&z(2), &z(2), DEFAULT_ORDER_CAP).unwrap();
        let h = build_context(&v, LevelConvention::Lex).unwrap().labeled_hasse().unwrap();
        let all = [0, 1, 2, 3];
        // M_{2,1} = {0}xZ2 = {0,1}; M_{2,2} = Z2x{0} = {0,2}; diagonal {0,3}
        assert_eq!(cover_label(&h, &[0, 1], &all), -1);
        assert_eq!(cover_label(&h, &[0, 2], &all), -2);
        assert_eq!(cover_label(&h, &[0, 3], &all), 2);
        // (1,0),(1,1) = {2,3}; (0,1),(1,1) = {1,3}; (0,1),(1,0) = {1,2}
        assert_eq!(cover_label(&h, &[2, 3], &all), 1);
        assert_eq!(cover_label(&h, &[1, 3], &all), 2);
        assert_eq!(cover_label(&h, &[1, 2], &all), 2);
    }

    #[test]
    fn label_cover_rejects_non_covers() {
        let ctx = build_context(&z(6), LevelConvention::Lex).unwrap();
        let l = ctx.coset_lattice().unwrap();
        let top = l.len() - 1;
        assert_eq!(ctx.label_cover(&l, 0, top), Err(Error::NotACover(0, top)));
    }

    #[test]
    fn dump_format() {
        let h = build_context(&z(2), LevelConvention::Lex).unwrap().labeled_hasse().unwrap();
        assert_eq!(h.dump(), "{}\t{0}\t0\n{}\t{1}\t0\n{0}\t{0,1}\t-1\n{1}\t{0,1}\t1\n");
    }
}
