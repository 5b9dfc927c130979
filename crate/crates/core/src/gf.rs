//! Exact linear algebra over prime fields and the pivot-column invariant of
//! subspaces and of subgroups of products of square-free groups.
//!
//! Column indices in the public API are 1-based.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::arith::{is_prime, mod_inverse, prime_divisors, square_divisor};
use crate::error::{Error, Result};
use crate::group::{Elem, Group, Subgroup};
use crate::lattice::SubgroupLattice;

/// Row vectors over `Z_p` with a fixed column count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFMatrix {
    p: u64,
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

/// Sorted set of 1-based pivot columns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PivotSet(BTreeSet<usize>);

impl PivotSet {
    pub fn new(columns: impl IntoIterator<Item = usize>) -> Self {
        PivotSet(columns.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, col: usize) -> bool {
        self.0.contains(&col)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &PivotSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn difference(&self, other: &PivotSet) -> PivotSet {
        PivotSet(self.0.difference(&other.0).copied().collect())
    }
}

impl fmt::Display for PivotSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", cols.join(","))
    }
}

impl GFMatrix {
    pub fn new(p: u64, ncols: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::BadMatrix(format!("row {i} has {} columns, expected {ncols}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= p) {
                return Err(Error::BadMatrix(format!("entry {x} in row {i} is not reduced mod {p}")));
            }
        }
        Ok(GFMatrix { p, ncols, rows })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        GFMatrix::new(p, n, rows)
    }

    pub fn zero(p: u64, n: usize) -> Result<Self> {
        GFMatrix::new(p, n, Vec::new())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        rref(self).rows.len()
    }

    fn compatible(&self, other: &GFMatrix) -> Result<()> {
        if self.p != other.p || self.ncols != other.ncols {
            return Err(Error::BadMatrix("matrices over different spaces".into()));
        }
        Ok(())
    }

    pub fn stacked(&self, other: &GFMatrix) -> Result<GFMatrix> {
        self.compatible(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(GFMatrix {
            p: self.p,
            ncols: self.ncols,
            rows,
        })
    }

    /// Whether the row space of `other` lies in the row space of `self`.
    pub fn spans(&self, other: &GFMatrix) -> Result<bool> {
        Ok(self.stacked(other)?.rank() == self.rank())
    }
}

/// Reduced row echelon form, zero rows dropped.
pub fn rref(m: &GFMatrix) -> GFMatrix {
    let p = m.p;
    let mut rows: Vec<Vec<u64>> = m.rows.clone();
    let mut lead = 0;
    for col in 0..m.ncols {
        let Some(pivot) = (lead..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(lead, pivot);
        let inv = mod_inverse(rows[lead][col], p);
        for x in rows[lead].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[lead].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == lead || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = (*x + p * p - factor * y % p) % p;
            }
        }
        lead += 1;
    }
    rows.truncate(lead);
    GFMatrix {
        p,
        ncols: m.ncols,
        rows,
    }
}

fn leading_column(row: &[u64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

pub fn pivot_set(m: &GFMatrix) -> PivotSet {
    PivotSet::new(
        rref(m)
            .rows
            .iter()
            .filter_map(|r| leading_column(r).map(|c| c + 1)),
    )
}

fn check_nested(p: u64, u1: &GFMatrix, u2: &GFMatrix) -> Result<()> {
    if u1.p != p || u2.p != p {
        return Err(Error::BadMatrix(format!("matrices are not over GF({p})")));
    }
    if !u2.spans(u1)? {
        return Err(Error::NotNested);
    }
    if u1.rank() == u2.rank() {
        return Err(Error::EqualSpaces);
    }
    Ok(())
}

/// The unique `W` with `U_1 ⊆ W ⊆ U_2` whose pivot set is `I(U_1)`
/// plus the largest column of `I(U_2) \ I(U_1)`. Returned in RREF.
pub fn w_up(p: u64, u1: &GFMatrix, u2: &GFMatrix) -> Result<GFMatrix> {
    check_nested(p, u1, u2)?;
    let r2 = rref(u2);
    let fresh = pivot_set(u2).difference(&pivot_set(u1));
    let k = fresh.iter().max().expect("nested spaces differ");
    let row = r2
        .rows
        .iter()
        .find(|r| leading_column(r) == Some(k - 1))
        .expect("pivot row exists")
        .clone();
    let mut w = u1.clone();
    w.rows.push(row);
    Ok(rref(&w))
}

/// The unique `W` with `U_1 ⊆ W ⊆ U_2` whose pivot set is `I(U_2)` minus
/// the smallest column of `I(U_2) \ I(U_1)`. Built from `U_1` and the RREF
/// rows of `U_2` pivoting in the new columns, less the first of them.
pub fn w_down(p: u64, u1: &GFMatrix, u2: &GFMatrix) -> Result<GFMatrix> {
    check_nested(p, u1, u2)?;
    let r2 = rref(u2);
    let fresh = pivot_set(u2).difference(&pivot_set(u1));
    let j = fresh.iter().min().expect("nested spaces differ");
    let mut w = u1.clone();
    for row in &r2.rows {
        let c = leading_column(row).expect("rref rows are nonzero") + 1;
        if c != j && fresh.contains(c) {
            w.rows.push(row.clone());
        }
    }
    Ok(rref(&w))
}

/// Every factor of `g` must have square-free order.
pub fn check_square_free_factors(g: &Group) -> Result<()> {
    for (i, f) in g.factors().iter().enumerate() {
        if let Some(prime) = square_divisor(f.order()) {
            return Err(Error::NonSquareFreeFactor {
                factor: i + 1,
                order: f.order(),
                prime,
            });
        }
    }
    Ok(())
}

/// A coordinatized Sylow p-subgroup `G*` of a product `G_1 x ... x G_r` of
/// square-free groups: one generator per nontrivial `G* ∩ G_i`, with
/// column `i` (1-based) carrying the exponent of the factor-`i` generator.
#[derive(Clone, Debug)]
pub struct SylowFrame {
    p: usize,
    basis: Vec<Option<Elem>>,
    coords: HashMap<Elem, Vec<u64>>,
}

impl SylowFrame {
    /// Frame from an explicit basis choice; `basis[i]` must generate
    /// `G* ∩ G_{i+1}` (or be `None` when that intersection is trivial).
    pub fn new(g: &Group, gstar: &Subgroup, p: usize, basis: Vec<Option<Elem>>) -> Result<Self> {
        check_square_free_factors(g)?;
        let r = g.factors().len();
        if basis.len() != r {
            return Err(Error::InvalidParameter(format!("basis has {} slots for {r} factors", basis.len())));
        }
        for (i, f) in g.factors().iter().enumerate() {
            let slice = g.intersection(gstar, f);
            match basis[i] {
                None if slice.is_trivial() => {}
                Some(e) if slice.order() == p && slice.contains(e) && e != g.identity() => {}
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "basis slot {} does not generate the Sylow slice of factor {}",
                        i + 1,
                        i + 1
                    )))
                }
            }
        }
        let mut coords: HashMap<Elem, Vec<u64>> = HashMap::new();
        coords.insert(g.identity(), vec![0; r]);
        for (i, e) in basis.iter().enumerate() {
            let Some(e) = *e else { continue };
            let current: Vec<(Elem, Vec<u64>)> = coords.iter().map(|(&x, c)| (x, c.clone())).collect();
            for (x, c) in current {
                let mut y = x;
                for k in 1..p {
                    y = g.mul(y, e);
                    let mut cy = c.clone();
                    cy[i] = k as u64;
                    coords.insert(y, cy);
                }
            }
        }
        if coords.len() != gstar.order() {
            return Err(Error::InvalidParameter("basis does not span the Sylow subgroup".into()));
        }
        Ok(SylowFrame { p, basis, coords })
    }

    /// Frame whose generators are the least non-identity element of each
    /// nontrivial slice.
    pub fn canonical(g: &Group, gstar: &Subgroup, p: usize) -> Result<Self> {
        let basis = g
            .factors()
            .iter()
            .map(|f| {
                g.intersection(gstar, f)
                    .elements()
                    .iter()
                    .copied()
                    .find(|&x| x != g.identity())
            })
            .collect();
        SylowFrame::new(g, gstar, p, basis)
    }

    pub fn basis(&self) -> &[Option<Elem>] {
        &self.basis
    }

    pub fn coordinates(&self, x: Elem) -> Option<&[u64]> {
        self.coords.get(&x).map(Vec::as_slice)
    }

    /// Pivot set of a p-subgroup of `G*` in this frame.
    pub fn pivots(&self, hstar: &Subgroup) -> Result<PivotSet> {
        let r = self.basis.len();
        let mut rows = Vec::with_capacity(hstar.order());
        for &x in hstar.elements() {
            let c = self.coordinates(x).ok_or(Error::NotContained)?;
            rows.push(c.to_vec());
        }
        Ok(pivot_set(&GFMatrix::new(self.p as u64, r, rows)?))
    }
}

/// `I^p(H)`: pivot columns of a Sylow p-subgroup of `h` inside a
/// coordinatized Sylow p-subgroup of `g` containing it.
pub fn subgroup_pivots(g: &Group, h: &Subgroup, p: usize) -> Result<PivotSet> {
    subgroup_pivots_in(&SubgroupLattice::new(g), h, p)
}

pub fn subgroup_pivots_in(lat: &SubgroupLattice, h: &Subgroup, p: usize) -> Result<PivotSet> {
    let g = lat.group();
    check_square_free_factors(g)?;
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let hstar = lat.sylow_in(h, p, None)?;
    let gstar = lat.sylow_in(&g.full_subgroup(), p, Some(&hstar))?;
    SylowFrame::canonical(g, &gstar, p)?.pivots(&hstar)
}

/// Every valid `(H*, G*, basis)` choice for `I^p(H)`, as frames paired with
/// the Sylow subgroup of `h` they coordinatize.
pub fn all_pivot_choices(lat: &SubgroupLattice, h: &Subgroup, p: usize) -> Result<Vec<(Subgroup, SylowFrame)>> {
    let g = lat.group();
    check_square_free_factors(g)?;
    let full = g.full_subgroup();
    let mut out = Vec::new();
    for hstar in lat.sylows_in(h, p)? {
        for gstar in lat.sylows_in(&full, p)? {
            if !hstar.is_subgroup_of(&gstar) {
                continue;
            }
            let options: Vec<Vec<Option<Elem>>> = g
                .factors()
                .iter()
                .map(|f| {
                    let slice = g.intersection(&gstar, f);
                    if slice.is_trivial() {
                        vec![None]
                    } else {
                        slice
                            .elements()
                            .iter()
                            .filter(|&&x| x != g.identity())
                            .map(|&x| Some(x))
                            .collect()
                    }
                })
                .collect();
            let mut bases: Vec<Vec<Option<Elem>>> = vec![Vec::new()];
            for opts in &options {
                bases = bases
                    .into_iter()
                    .flat_map(|b| {
                        opts.iter().map(move |o| {
                            let mut b = b.clone();
                            b.push(*o);
                            b
                        })
                    })
                    .collect();
            }
            for basis in bases {
                out.push((hstar.clone(), SylowFrame::new(g, &gstar, p, basis)?));
            }
        }
    }
    Ok(out)
}

/// Primes dividing the order of some factor, ascending.
pub fn factor_primes(g: &Group) -> Vec<usize> {
    let mut primes: Vec<usize> = g
        .factors()
        .iter()
        .flat_map(|f| prime_divisors(f.order()))
        .collect();
    primes.sort_unstable();
    primes.dedup();
    primes
}
