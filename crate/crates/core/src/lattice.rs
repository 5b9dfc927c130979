//! Subgroup enumeration, Sylow and Hall subgroups, chief series and the
//! complemented / supersolvable classification.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::arith::{is_p_power, is_prime, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{is_subset_sorted, Elem, Group, Subgroup};
use crate::par::{self, Exec};

/// All subgroups of `g`, sorted by `(order, element set)`.
pub fn all_subgroups(g: &Group) -> Vec<Subgroup> {
    all_subgroups_with(g, Exec::default())
}

pub fn all_subgroups_with(g: &Group, exec: Exec) -> Vec<Subgroup> {
    enumerate(g, exec).into_iter().map(|(s, _)| s).collect()
}

/// Breadth-first closure: every subgroup is reached as `<S, x>` from a
/// smaller one. Returns subgroups with a generating set for each.
fn enumerate(g: &Group, exec: Exec) -> Vec<(Subgroup, Vec<Elem>)> {
    let trivial = g.trivial_subgroup();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    seen.insert(trivial.elements().to_vec());
    let mut found = vec![(trivial.clone(), Vec::new())];
    let mut frontier = vec![(trivial, Vec::<Elem>::new())];
    while !frontier.is_empty() {
        let expanded = par::map(exec, &frontier, |(s, gens)| {
            // <S, x> depends only on the coset Sx
            let reps = g.coset_reps(s);
            let mut out = Vec::new();
            for x in 0..g.order() {
                if reps[x] != x || s.contains(x) {
                    continue;
                }
                let mut next_gens = gens.clone();
                next_gens.push(x);
                let elements = g.closure(s.elements(), &next_gens);
                out.push((elements, next_gens));
            }
            out
        });
        let mut next = Vec::new();
        for (elements, gens) in expanded.into_iter().flatten() {
            if seen.insert(elements.clone()) {
                let sub = Subgroup::from_sorted(g.id(), elements);
                next.push((sub, gens));
            }
        }
        found.extend(next.iter().cloned());
        frontier = next;
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
}

/// Ascending chief series with complement counts.
#[derive(Clone, Debug, Serialize)]
pub struct ChiefSeries {
    pub terms: Vec<Subgroup>,
    pub factor_orders: Vec<usize>,
    pub complement_counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Last term of the derived series, a nontrivial perfect subgroup.
    NotSolvable { perfect: Subgroup },
    NonPrimeChiefFactor { lower: Subgroup, upper: Subgroup },
    NonElementarySylow { prime: usize, sylow: Subgroup },
    Uncomplemented { subgroup: Subgroup },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub solvable: bool,
    pub supersolvable: bool,
    pub sylows_elementary_abelian: bool,
    pub complemented: bool,
    pub witnesses: Vec<Witness>,
}

impl ClassificationReport {
    /// complemented <=> supersolvable with elementary abelian Sylows.
    pub fn hall_equivalence_holds(&self) -> bool {
        self.complemented == (self.supersolvable && self.sylows_elementary_abelian)
    }
}

/// The lattice of all subgroups of a group, with containment and covers.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: Group,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<Vec<Elem>, usize>,
    below: Vec<Vec<bool>>,
    maximal: Vec<Vec<usize>>,
    normal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn new(g: &Group) -> Self {
        Self::with_exec(g, Exec::default())
    }

    pub fn with_exec(g: &Group, exec: Exec) -> Self {
        let subgroups = all_subgroups_with(g, exec);
        let n = subgroups.len();
        let lookup = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements().to_vec(), i))
            .collect();
        // below[j][i]: subgroup i is contained in subgroup j
        let below: Vec<Vec<bool>> = par::map_range(exec, n, |j| {
            let sj = &subgroups[j];
            (0..n)
                .map(|i| {
                    let si = &subgroups[i];
                    sj.order().is_multiple_of(si.order()) && is_subset_sorted(si.elements(), sj.elements())
                })
                .collect()
        });
        let maximal = par::map_range(exec, n, |j| {
            let mut accepted: Vec<usize> = Vec::new();
            for i in (0..j).rev() {
                if !below[j][i] || subgroups[i].order() == subgroups[j].order() {
                    continue;
                }
                if accepted.iter().all(|&m| !below[m][i]) {
                    accepted.push(i);
                }
            }
            accepted.sort_unstable();
            accepted
        });
        let normal = par::map(exec, &subgroups, |s| g.is_normal(s));
        SubgroupLattice {
            group: g.clone(),
            subgroups,
            lookup,
            below,
            maximal,
            normal,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        if h.parent() != self.group.id() {
            return None;
        }
        self.lookup.get(h.elements()).copied()
    }

    pub(crate) fn require(&self, h: &Subgroup) -> Result<usize> {
        self.group.check_subgroup(h)?;
        self.index_of(h)
            .ok_or_else(|| Error::NotASubgroup("not in the subgroup lattice".into()))
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn full_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Whether subgroup `i` is contained in subgroup `j`.
    pub fn is_contained(&self, i: usize, j: usize) -> bool {
        self.below[j][i]
    }

    /// Maximal subgroups of subgroup `j`, as lattice indices.
    pub fn maximal_subgroups(&self, j: usize) -> &[usize] {
        &self.maximal[j]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    /// Subgroups of `within` (inclusive), as indices in lattice order.
    pub fn subgroups_of(&self, within: usize) -> impl Iterator<Item = usize> + '_ {
        (0..=within).filter(move |&i| self.below[within][i])
    }

    /// Whether every maximal chain of subgroups has the same length.
    pub fn is_graded(&self) -> bool {
        let n = self.len();
        let mut lo = vec![0usize; n];
        let mut hi = vec![0usize; n];
        for j in 1..n {
            let m = &self.maximal[j];
            lo[j] = m.iter().map(|&i| lo[i] + 1).min().unwrap_or(0);
            hi[j] = m.iter().map(|&i| hi[i] + 1).max().unwrap_or(0);
        }
        (0..n).all(|j| lo[j] == hi[j])
    }

    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let g = &self.group;
        let mut commutators = Vec::new();
        for &a in h.elements() {
            for &b in h.elements() {
                let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
                commutators.push(c);
            }
        }
        commutators.sort_unstable();
        commutators.dedup();
        g.generated_subgroup(&commutators).expect("commutators are valid elements")
    }

    /// Last term of the derived series.
    pub fn solvable_residual(&self) -> Subgroup {
        let mut h = self.group.full_subgroup();
        loop {
            let d = self.derived_subgroup(&h);
            if d == h {
                return h;
            }
            h = d;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.solvable_residual().is_trivial()
    }

    /// A Sylow p-subgroup of `within` containing `containing`; the least
    /// element set among candidates.
    pub fn sylow_in(&self, within: &Subgroup, p: usize, containing: Option<&Subgroup>) -> Result<Subgroup> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let w = self.require(within)?;
        let c = match containing {
            Some(c) => {
                let ci = self.require(c)?;
                if !is_p_power(c.order(), p) {
                    return Err(Error::ContainmentImpossible(c.order()));
                }
                if !self.is_contained(ci, w) {
                    return Err(Error::NotContained);
                }
                ci
            }
            None => self.trivial_index(),
        };
        let target = p_part(within.order(), p);
        self.subgroups_of(w)
            .find(|&i| self.subgroups[i].order() == target && self.is_contained(c, i))
            .map(|i| self.subgroups[i].clone())
            .ok_or(Error::ContainmentImpossible(self.subgroups[c].order()))
    }

    /// All Sylow p-subgroups of `within`.
    pub fn sylows_in(&self, within: &Subgroup, p: usize) -> Result<Vec<Subgroup>> {
        let w = self.require(within)?;
        let target = p_part(within.order(), p);
        Ok(self
            .subgroups_of(w)
            .filter(|&i| self.subgroups[i].order() == target)
            .map(|i| self.subgroups[i].clone())
            .collect())
    }

    /// A Hall subgroup of `within` for the prime set `primes`; the least
    /// element set among candidates.
    pub fn hall_in(&self, within: &Subgroup, primes: &[usize]) -> Result<Subgroup> {
        if !self.is_solvable() {
            return Err(Error::NotSolvable);
        }
        let w = self.require(within)?;
        let target: usize = prime_divisors(within.order())
            .into_iter()
            .filter(|p| primes.contains(p))
            .map(|p| p_part(within.order(), p))
            .product();
        self.subgroups_of(w)
            .find(|&i| self.subgroups[i].order() == target)
            .map(|i| self.subgroups[i].clone())
            .ok_or(Error::NotSolvable)
    }

    fn normal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.normal[i]).collect()
    }

    /// Normal subgroups minimal among those properly containing `base`.
    fn minimal_normal_over(&self, base: usize, normals: &[usize]) -> Vec<usize> {
        let above: Vec<usize> = normals
            .iter()
            .copied()
            .filter(|&m| m != base && self.is_contained(base, m))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&m| above.iter().all(|&k| k == m || !self.is_contained(k, m)))
            .collect()
    }

    /// Chief series with prime factors in weakly decreasing order, if any.
    fn zappa_series(&self, normals: &[usize]) -> Option<Vec<usize>> {
        fn dfs(lat: &SubgroupLattice, normals: &[usize], path: &mut Vec<usize>, bound: usize) -> bool {
            let cur = *path.last().unwrap();
            if cur == lat.full_index() {
                return true;
            }
            let mut next: Vec<(usize, usize)> = lat
                .minimal_normal_over(cur, normals)
                .into_iter()
                .map(|m| (lat.subgroups[m].order() / lat.subgroups[cur].order(), m))
                .filter(|&(idx, _)| is_prime(idx as u64) && idx <= bound)
                .collect();
            next.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            for (idx, m) in next {
                path.push(m);
                if dfs(lat, normals, path, idx) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = vec![self.trivial_index()];
        if dfs(self, normals, &mut path, usize::MAX) {
            Some(path)
        } else {
            None
        }
    }

    /// Canonical chief series: Zappa-ordered when the group is
    /// supersolvable, otherwise the first series found greedily.
    pub fn chief_series(&self) -> Result<ChiefSeries> {
        if !self.is_solvable() {
            return Err(Error::NotSolvable);
        }
        let normals = self.normal_indices();
        let path = match self.zappa_series(&normals) {
            Some(p) => p,
            None => {
                let mut path = vec![self.trivial_index()];
                while *path.last().unwrap() != self.full_index() {
                    let next = self.minimal_normal_over(*path.last().unwrap(), &normals);
                    path.push(next[0]);
                }
                path
            }
        };
        let terms: Vec<Subgroup> = path.iter().map(|&i| self.subgroups[i].clone()).collect();
        let factor_orders: Vec<usize> = terms.windows(2).map(|w| w[1].order() / w[0].order()).collect();
        let complement_counts = terms
            .windows(2)
            .map(|w| self.count_complements(&w[0], &w[1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChiefSeries {
            terms,
            factor_orders,
            complement_counts,
        })
    }

    /// Number of complements of `upper/lower` in `G/lower`, counted in the
    /// quotient group.
    pub fn count_complements(&self, lower: &Subgroup, upper: &Subgroup) -> Result<usize> {
        let g = &self.group;
        let (q, proj) = g.quotient(lower)?;
        let mut image: Vec<Elem> = upper.elements().iter().map(|&x| proj[x]).collect();
        image.sort_unstable();
        image.dedup();
        let count = all_subgroups(&q)
            .iter()
            .filter(|k| {
                k.order() * image.len() == q.order()
                    && crate::group::intersect_sorted(k.elements(), &image).len() == 1
            })
            .count();
        Ok(count)
    }

    pub fn is_supersolvable(&self) -> bool {
        self.is_solvable() && self.zappa_series(&self.normal_indices()).is_some()
    }

    pub fn classify(&self) -> ClassificationReport {
        let g = &self.group;
        let mut witnesses = Vec::new();

        let residual = self.solvable_residual();
        let solvable = residual.is_trivial();
        if !solvable {
            witnesses.push(Witness::NotSolvable { perfect: residual });
        }

        let supersolvable = solvable && self.zappa_series(&self.normal_indices()).is_some();
        if solvable && !supersolvable {
            // chief factor orders are independent of the series, so any
            // series exhibits a non-prime factor
            let series = self.chief_series().expect("solvable");
            if let Some(i) = series.factor_orders.iter().position(|&f| !is_prime(f as u64)) {
                witnesses.push(Witness::NonPrimeChiefFactor {
                    lower: series.terms[i].clone(),
                    upper: series.terms[i + 1].clone(),
                });
            }
        }

        let full = g.full_subgroup();
        let mut sylows_elementary_abelian = true;
        for p in prime_divisors(g.order()) {
            let sylow = self.sylow_in(&full, p, None).expect("Sylow subgroups exist");
            let elementary = sylow.elements().iter().all(|&x| {
                g.pow(x, p) == g.identity() && sylow.elements().iter().all(|&y| g.mul(x, y) == g.mul(y, x))
            });
            if !elementary {
                sylows_elementary_abelian = false;
                witnesses.push(Witness::NonElementarySylow { prime: p, sylow });
            }
        }

        let uncomplemented = (0..self.len()).find(|&h| self.complement_of(h).is_none());
        let complemented = uncomplemented.is_none();
        if let Some(h) = uncomplemented {
            witnesses.push(Witness::Uncomplemented {
                subgroup: self.subgroups[h].clone(),
            });
        }

        ClassificationReport {
            solvable,
            supersolvable,
            sylows_elementary_abelian,
            complemented,
            witnesses,
        }
    }

    /// Some `K` with `K ∩ H = 1` and `|H||K| = |G|` (hence `HK = G`).
    pub fn complement_of(&self, h: usize) -> Option<usize> {
        let n = self.group.order();
        let hs = &self.subgroups[h];
        (0..self.len()).find(|&k| {
            let ks = &self.subgroups[k];
            ks.order() * hs.order() == n && crate::group::intersect_sorted(hs.elements(), ks.elements()).len() == 1
        })
    }

    /// The unique `H_1` between `h_n` and `h_0` such that `[h_0 : H_1]` is a
    /// power of the least prime `p` dividing `[h_0 : h_n]` and `p` does not
    /// divide `[H_1 : h_n]`.
    pub fn unique_hall_extension(&self, h_n: &Subgroup, h_0: &Subgroup) -> Result<Subgroup> {
        let a = self.require(h_n)?;
        let b = self.require(h_0)?;
        if a == b {
            return Err(Error::EqualSubgroups);
        }
        if !self.is_contained(a, b) {
            return Err(Error::NotContained);
        }
        if !self.is_supersolvable() {
            return Err(Error::NotSupersolvable);
        }
        let index = h_0.order() / h_n.order();
        let p = prime_divisors(index)[0];
        let complement_primes: Vec<usize> = prime_divisors(h_0.order()).into_iter().filter(|&q| q > p).collect();
        let k = self.hall_in(h_0, &complement_primes)?;
        self.group.join(&[&k, h_n])
    }
}

pub fn sylow_subgroup(g: &Group, p: usize, containing: Option<&Subgroup>) -> Result<Subgroup> {
    SubgroupLattice::new(g).sylow_in(&g.full_subgroup(), p, containing)
}

pub fn hall_subgroup(g: &Group, primes: &[usize]) -> Result<Subgroup> {
    SubgroupLattice::new(g).hall_in(&g.full_subgroup(), primes)
}

pub fn chief_series(g: &Group) -> Result<ChiefSeries> {
    SubgroupLattice::new(g).chief_series()
}

pub fn classify(g: &Group) -> ClassificationReport {
    SubgroupLattice::new(g).classify()
}

pub fn unique_hall_extension(g: &Group, h_n: &Subgroup, h_0: &Subgroup) -> Result<Subgroup> {
    SubgroupLattice::new(g).unique_hall_extension(h_n, h_0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, direct_product, Builtin, DEFAULT_ORDER_CAP};

    fn b(kind: Builtin) -> Group {
        builtin_group(kind).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&b(Builtin::Cyclic(7))).len(), 2);
        let z6 = all_subgroups(&b(Builtin::Cyclic(6)));
        assert_eq!(z6.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
        let a4 = all_subgroups(&b(Builtin::Alternating(4)));
        assert_eq!(a4.len(), 10);
        let by_order = |k| a4.iter().filter(|s| s.order() == k).count();
        assert_eq!((by_order(1), by_order(2), by_order(3), by_order(4), by_order(12)), (1, 3, 4, 1, 1));
        // Z_2^4 has 1 + 15 + 35 + 15 + 1 subgroups
        assert_eq!(all_subgroups(&b(Builtin::Elementary { p: 2, k: 4 })).len(), 67);
        assert_eq!(all_subgroups(&b(Builtin::Symmetric(4))).len(), 30);
    }

    #[test]
    fn sequential_and_parallel_enumeration_agree() {
        let g = b(Builtin::Symmetric(4));
        assert_eq!(all_subgroups_with(&g, Exec::Sequential), all_subgroups_with(&g, Exec::Parallel));
    }

    #[test]
    fn lagrange_holds() {
        for kind in [Builtin::Symmetric(4), Builtin::Dihedral(6), Builtin::Cyclic(12)] {
            let g = b(kind);
            for s in all_subgroups(&g) {
                assert_eq!(g.order() % s.order(), 0);
                g.subgroup(s.elements().iter().copied()).unwrap();
            }
        }
    }

    #[test]
    fn sylow_examples() {
        let z6 = b(Builtin::Cyclic(6));
        assert_eq!(sylow_subgroup(&z6, 3, None).unwrap().elements(), &[0, 2, 4]);
        let s3 = b(Builtin::Symmetric(3));
        let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.generated_subgroup(&[t]).unwrap();
        assert_eq!(sylow_subgroup(&s3, 2, Some(&h)).unwrap(), h);
        let v = b(Builtin::Elementary { p: 2, k: 2 });
        assert_eq!(sylow_subgroup(&v, 2, None).unwrap().order(), 4);
        let z3 = z6.subgroup([0, 2, 4]).unwrap();
        assert!(matches!(sylow_subgroup(&z6, 2, Some(&z3)), Err(Error::ContainmentImpossible(3))));
    }

    #[test]
    fn hall_examples() {
        let z6 = b(Builtin::Cyclic(6));
        assert_eq!(hall_subgroup(&z6, &[3]).unwrap().elements(), &[0, 2, 4]);
        assert!(hall_subgroup(&z6, &[]).unwrap().is_trivial());
        let s3 = b(Builtin::Symmetric(3));
        let a3 = hall_subgroup(&s3, &[3]).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(s3.is_normal(&a3));
        let a5 = b(Builtin::Alternating(5));
        assert_eq!(hall_subgroup(&a5, &[2]).unwrap_err(), Error::NotSolvable);
    }

    #[test]
    fn chief_series_examples() {
        let z6 = chief_series(&b(Builtin::Cyclic(6))).unwrap();
        assert_eq!(z6.factor_orders, vec![3, 2]);
        assert_eq!(z6.complement_counts, vec![1, 1]);
        let s3 = chief_series(&b(Builtin::Symmetric(3))).unwrap();
        assert_eq!(s3.factor_orders, vec![3, 2]);
        assert_eq!(s3.complement_counts, vec![3, 1]);
        let v = chief_series(&b(Builtin::Elementary { p: 2, k: 2 })).unwrap();
        assert_eq!(v.factor_orders, vec![2, 2]);
        assert_eq!(v.complement_counts, vec![2, 1]);
        let a4 = chief_series(&b(Builtin::Alternating(4))).unwrap();
        assert_eq!(a4.factor_orders, vec![4, 3]);
        assert!(chief_series(&b(Builtin::Alternating(5))).is_err());
    }

    #[test]
    fn chief_series_is_normal_and_minimal() {
        for kind in [Builtin::Symmetric(4), Builtin::Dihedral(6), Builtin::Cyclic(30)] {
            let g = b(kind);
            let lat = SubgroupLattice::new(&g);
            let cs = lat.chief_series().unwrap();
            assert_eq!(cs.factor_orders.iter().product::<usize>(), g.order());
            for w in cs.terms.windows(2) {
                assert!(g.is_normal(&w[1]));
                // no normal subgroup strictly between
                let (lo, hi) = (lat.index_of(&w[0]).unwrap(), lat.index_of(&w[1]).unwrap());
                for k in 0..lat.len() {
                    if k != lo && k != hi && lat.is_normal(k) {
                        assert!(!(lat.is_contained(lo, k) && lat.is_contained(k, hi)));
                    }
                }
            }
            if lat.is_supersolvable() {
                assert!(cs.factor_orders.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn classification_examples() {
        let z6 = classify(&b(Builtin::Cyclic(6)));
        assert!(z6.solvable && z6.supersolvable && z6.sylows_elementary_abelian && z6.complemented);
        let z4 = classify(&b(Builtin::Cyclic(4)));
        assert!(!z4.complemented && !z4.sylows_elementary_abelian);
        let a4 = classify(&b(Builtin::Alternating(4)));
        assert!(a4.solvable && !a4.supersolvable && !a4.complemented && a4.sylows_elementary_abelian);
        assert!(a4
            .witnesses
            .iter()
            .any(|w| matches!(w, Witness::NonPrimeChiefFactor { upper, .. } if upper.order() == 4)));
        let a5 = classify(&b(Builtin::Alternating(5)));
        assert!(!a5.solvable && !a5.supersolvable);
        for r in [z6, z4, a4, a5] {
            assert!(r.hall_equivalence_holds());
        }
    }

    #[test]
    fn supersolvability_matches_gradedness() {
        for kind in [
            Builtin::Symmetric(3),
            Builtin::Symmetric(4),
            Builtin::Alternating(4),
            Builtin::Dihedral(4),
            Builtin::Dihedral(6),
            Builtin::Cyclic(12),
        ] {
            let lat = SubgroupLattice::new(&b(kind));
            assert_eq!(lat.is_supersolvable(), lat.is_graded(), "{kind:?}");
        }
    }

    #[test]
    fn unique_hall_extension_examples() {
        let z6 = b(Builtin::Cyclic(6));
        let h1 = unique_hall_extension(&z6, &z6.trivial_subgroup(), &z6.full_subgroup()).unwrap();
        assert_eq!(h1.elements(), &[0, 2, 4]);
        let v = b(Builtin::Elementary { p: 2, k: 2 });
        assert!(unique_hall_extension(&v, &v.trivial_subgroup(), &v.full_subgroup())
            .unwrap()
            .is_trivial());
        let z30 = b(Builtin::Cyclic(30));
        assert_eq!(
            unique_hall_extension(&z30, &z30.trivial_subgroup(), &z30.full_subgroup())
                .unwrap()
                .order(),
            15
        );
        assert_eq!(
            unique_hall_extension(&z6, &z6.full_subgroup(), &z6.full_subgroup()).unwrap_err(),
            Error::EqualSubgroups
        );
        let a4 = b(Builtin::Alternating(4));
        assert_eq!(
            unique_hall_extension(&a4, &a4.trivial_subgroup(), &a4.full_subgroup()).unwrap_err(),
            Error::NotSupersolvable
        );
    }

    #[test]
    fn unique_hall_extension_is_unique_by_brute_force() {
        let s3 = b(Builtin::Symmetric(3));
        let groups = vec![
            b(Builtin::Cyclic(30)),
            direct_product(&b(Builtin::Cyclic(2)), &s3, DEFAULT_ORDER_CAP).unwrap(),
            b(Builtin::Elementary { p: 3, k: 2 }),
            b(Builtin::Dihedral(5)),
        ];
        for g in groups {
            let lat = SubgroupLattice::new(&g);
            for lo in 0..lat.len() {
                for hi in 0..lat.len() {
                    if lo == hi || !lat.is_contained(lo, hi) {
                        continue;
                    }
                    let (hn, h0) = (lat.subgroup(lo), lat.subgroup(hi));
                    let p = prime_divisors(h0.order() / hn.order())[0];
                    let matches: Vec<usize> = (0..lat.len())
                        .filter(|&k| lat.is_contained(lo, k) && lat.is_contained(k, hi))
                        .filter(|&k| {
                            let k = lat.subgroup(k);
                            !(k.order() / hn.order()).is_multiple_of(p) && is_p_power(h0.order() / k.order(), p)
                        })
                        .collect();
                    assert_eq!(matches.len(), 1);
                    assert_eq!(&lat.unique_hall_extension(hn, h0).unwrap(), lat.subgroup(matches[0]));
                }
            }
        }
    }

    /// For supersolvable G, maximal M with HM = G, and any coset Hx:
    /// Hx ∩ M is a coset of a prime-index subgroup of H.
    #[test]
    fn maximal_subgroups_cut_cosets_in_maximal_cosets() {
        let s3 = b(Builtin::Symmetric(3));
        let groups = vec![
            b(Builtin::Cyclic(6)),
            s3.clone(),
            b(Builtin::Elementary { p: 2, k: 3 }),
            direct_product(&b(Builtin::Cyclic(2)), &s3, DEFAULT_ORDER_CAP).unwrap(),
            b(Builtin::Dihedral(4)),
        ];
        for g in groups {
            let lat = SubgroupLattice::new(&g);
            assert!(lat.is_supersolvable());
            for &m in lat.maximal_subgroups(lat.full_index()) {
                let ms = lat.subgroup(m);
                for h in 0..lat.len() {
                    let hs = lat.subgroup(h);
                    if hs.order() * ms.order() / g.intersection(hs, ms).order() != g.order() {
                        continue;
                    }
                    let hm = g.intersection(hs, ms);
                    assert!(is_prime((hs.order() / hm.order()) as u64));
                    let hm = std::sync::Arc::new(hm);
                    let hs = std::sync::Arc::new(hs.clone());
                    for x in 0..g.order() {
                        let coset = g.right_coset(&hs, x);
                        let cut: Vec<Elem> = coset.elements().iter().copied().filter(|&y| ms.contains(y)).collect();
                        assert!(!cut.is_empty());
                        let expected = g.right_coset(&hm, cut[0]);
                        assert_eq!(expected.elements(), cut.as_slice());
                    }
                }
            }
        }
    }
}
