//! Finite groups as validated multiplication tables.
//!
//! Elements are indices `0..order`. The product `a * b` is read "a, then b",
//! so right cosets `Hx = {h * x}` are the natural cosets throughout.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Elem = usize;

pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Above this order associativity is checked on a random sample of triples.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 100_000;

/// Identity token for a group: a fingerprint of its multiplication table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupId(u64);

#[derive(Clone, Debug)]
pub struct Group {
    id: GroupId,
    order: usize,
    table: Vec<u32>,
    identity: Elem,
    inverses: Vec<Elem>,
    names: Vec<String>,
    factors: Vec<Subgroup>,
}

/// A subgroup of a parent group, stored as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subgroup {
    parent: GroupId,
    elements: Vec<Elem>,
}

/// A right coset `H * rep`, with `rep` the least element index of the coset.
#[derive(Clone, Debug)]
pub struct Coset {
    subgroup: Arc<Subgroup>,
    rep: Elem,
    elements: Vec<Elem>,
}

/// On-disk Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Cyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Symmetries of the n-gon, order 2n.
    Dihedral(usize),
    Elementary { p: usize, k: usize },
}

impl Builtin {
    pub fn from_kind(kind: &str, n: usize, p: Option<usize>) -> Result<Self> {
        match kind {
            "cyclic" => Ok(Builtin::Cyclic(n)),
            "symmetric" => Ok(Builtin::Symmetric(n)),
            "alternating" => Ok(Builtin::Alternating(n)),
            "dihedral" => Ok(Builtin::Dihedral(n)),
            "elementary" => {
                let p = p.ok_or_else(|| {
                    Error::InvalidParameter("elementary groups need a prime p".into())
                })?;
                Ok(Builtin::Elementary { p, k: n })
            }
            other => Err(Error::UnsupportedKind(other.to_string())),
        }
    }

    /// Order of the group this builder produces, without building it.
    pub fn order(&self) -> u128 {
        match *self {
            Builtin::Cyclic(n) => n as u128,
            Builtin::Symmetric(n) => factorial(n),
            Builtin::Alternating(n) => {
                if n < 2 {
                    1
                } else {
                    factorial(n) / 2
                }
            }
            Builtin::Dihedral(n) => 2 * n as u128,
            Builtin::Elementary { p, k } => (p as u128).saturating_pow(k as u32),
        }
    }

    pub fn build(&self, cap: usize) -> Result<Group> {
        let n = match *self {
            Builtin::Elementary { k, .. } => k,
            Builtin::Cyclic(n)
            | Builtin::Symmetric(n)
            | Builtin::Alternating(n)
            | Builtin::Dihedral(n) => n,
        };
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        match *self {
            Builtin::Cyclic(n) => cyclic(n),
            Builtin::Symmetric(n) => permutation_group(n, false),
            Builtin::Alternating(n) => permutation_group(n, true),
            Builtin::Dihedral(n) => dihedral(n),
            Builtin::Elementary { p, k } => {
                if !crate::arith::is_prime(p as u64) {
                    return Err(Error::NotPrime(p as u64));
                }
                let zp = cyclic(p)?;
                let mut g = zp.clone();
                for _ in 1..k {
                    g = direct_product(&g, &zp, cap)?;
                }
                Ok(g)
            }
        }
    }
}

pub fn builtin_group(kind: Builtin) -> Result<Group> {
    kind.build(DEFAULT_ORDER_CAP)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

fn cyclic(n: usize) -> Result<Group> {
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    Group::from_table(n, table, Some((0..n).map(|a| a.to_string()).collect()))
}

fn dihedral(n: usize) -> Result<Group> {
    // r^k at index k, s r^k at index n + k; r^a s = s r^-a
    let elem = |refl: bool, k: usize| if refl { n + k % n } else { k % n };
    let split = |x: usize| if x < n { (false, x) } else { (true, x - n) };
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for x in 0..2 * n {
        for y in 0..2 * n {
            let (sx, a) = split(x);
            let (sy, b) = split(y);
            table[x][y] = match (sx, sy) {
                (false, false) => elem(false, a + b),
                (false, true) => elem(true, b + n - a),
                (true, false) => elem(true, a + b),
                (true, true) => elem(false, b + n - a),
            };
        }
    }
    let names = (0..2 * n)
        .map(|x| {
            let (refl, k) = split(x);
            match (refl, k) {
                (false, 0) => "e".to_string(),
                (false, 1) => "r".to_string(),
                (false, k) => format!("r^{k}"),
                (true, 0) => "s".to_string(),
                (true, 1) => "sr".to_string(),
                (true, k) => format!("sr^{k}"),
            }
        })
        .collect();
    Group::from_table(2 * n, table, Some(names))
}

fn permutation_group(n: usize, even_only: bool) -> Result<Group> {
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        if !even_only || is_even(&current) {
            perms.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: HashMap<&[u8], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let m = perms.len();
    let mut table = vec![vec![0; m]; m];
    let mut buf = vec![0u8; n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            // apply a, then b
            for (slot, &ai) in buf.iter_mut().zip(a.iter()) {
                *slot = b[ai as usize];
            }
            table[i][j] = index[buf.as_slice()];
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    Group::from_table(m, table, Some(names))
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

impl Group {
    /// Validate `table` as a group operation and build the group.
    pub fn from_table(order: usize, table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Group> {
        if order == 0 {
            return Err(Error::MalformedTable("order must be positive".into()));
        }
        if table.len() != order {
            return Err(Error::MalformedTable(format!(
                "expected {order} rows, found {}",
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::MalformedTable(format!("entry {x} in row {i} out of range")));
                }
                flat.push(x as u32);
            }
        }
        let names = match names {
            Some(n) if n.len() != order => {
                return Err(Error::MalformedTable(format!(
                    "{} names given for {order} elements",
                    n.len()
                )))
            }
            Some(n) => n,
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        let mul = |a: usize, b: usize| flat[a * order + b] as usize;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let mut inverses = Vec::with_capacity(order);
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or(Error::NoInverse(x))?;
            inverses.push(inv);
        }
        check_associative(order, &mul)?;

        let mut hasher = DefaultHasher::new();
        order.hash(&mut hasher);
        flat.hash(&mut hasher);
        let id = GroupId(hasher.finish());
        let full = Subgroup {
            parent: id,
            elements: (0..order).collect(),
        };
        Ok(Group {
            id,
            order,
            table: flat,
            identity,
            inverses,
            names,
            factors: vec![full],
        })
    }

    pub fn from_cayley(file: &CayleyTable) -> Result<Group> {
        Group::from_table(file.order, file.table.clone(), file.names.clone())
    }

    pub fn to_cayley(&self) -> CayleyTable {
        CayleyTable {
            order: self.order,
            table: self.table_rows(),
            names: Some(self.names.clone()),
        }
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// Direct-product factors `G_1, ..., G_r` as subgroups of this group.
    /// A group not built as a product has the single factor `[self]`.
    pub fn factors(&self) -> &[Subgroup] {
        &self.factors
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_element(&self, x: Elem) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.parent == self.id {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.id,
            elements: vec![self.identity],
        }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.id,
            elements: (0..self.order).collect(),
        }
    }

    /// Validate an element set as a subgroup.
    pub fn subgroup(&self, elements: impl IntoIterator<Item = Elem>) -> Result<Subgroup> {
        let mut elements: Vec<Elem> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        for &x in &elements {
            self.check_element(x)?;
        }
        let mut member = vec![false; self.order];
        for &x in &elements {
            member[x] = true;
        }
        if !member[self.identity] {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for &a in &elements {
            if !member[self.inv(a)] {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &elements {
                if !member[self.mul(a, b)] {
                    return Err(Error::NotASubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        Ok(Subgroup {
            parent: self.id,
            elements,
        })
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated_subgroup(&self, gens: &[Elem]) -> Result<Subgroup> {
        for &g in gens {
            self.check_element(g)?;
        }
        Ok(Subgroup {
            parent: self.id,
            elements: self.closure(&[self.identity], gens),
        })
    }

    /// Closure of `seed` under right multiplication by `gens`; a subgroup
    /// whenever `seed` is one. Returns a sorted element list.
    pub(crate) fn closure(&self, seed: &[Elem], gens: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        let mut out = Vec::with_capacity(seed.len() * 2);
        let mut queue = VecDeque::new();
        for &x in seed {
            if !member[x] {
                member[x] = true;
                out.push(x);
                queue.push_back(x);
            }
        }
        while let Some(y) = queue.pop_front() {
            for &g in gens {
                let z = self.mul(y, g);
                if !member[z] {
                    member[z] = true;
                    out.push(z);
                    queue.push_back(z);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Subgroup generated by the union of several subgroups.
    pub fn join(&self, parts: &[&Subgroup]) -> Result<Subgroup> {
        let mut gens = Vec::new();
        for h in parts {
            self.check_subgroup(h)?;
            gens.extend_from_slice(&h.elements);
        }
        self.generated_subgroup(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup {
            parent: self.id,
            elements: intersect_sorted(&a.elements, &b.elements),
        }
    }

    /// First conjugate `g^-1 x g` escaping `h`, if any.
    pub fn normality_witness(&self, h: &Subgroup) -> Option<(Elem, Elem, Elem)> {
        for g in 0..self.order {
            let gi = self.inv(g);
            for &x in &h.elements {
                let image = self.mul(self.mul(gi, x), g);
                if !h.contains(image) {
                    return Some((g, x, image));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normality_witness(h).is_none()
    }

    pub fn right_coset(&self, h: &Arc<Subgroup>, x: Elem) -> Coset {
        let mut elements: Vec<Elem> = h.elements.iter().map(|&a| self.mul(a, x)).collect();
        elements.sort_unstable();
        Coset {
            subgroup: Arc::clone(h),
            rep: elements[0],
            elements,
        }
    }

    /// For each element, the least element of its right coset `H x`.
    pub fn coset_reps(&self, h: &Subgroup) -> Vec<Elem> {
        let mut rep = vec![usize::MAX; self.order];
        for x in 0..self.order {
            if rep[x] != usize::MAX {
                continue;
            }
            let members: Vec<Elem> = h.elements.iter().map(|&a| self.mul(a, x)).collect();
            let least = *members.iter().min().expect("subgroups are nonempty");
            for m in members {
                rep[m] = least;
            }
        }
        rep
    }

    /// Quotient by a normal subgroup, with the projection onto it.
    /// Quotient elements are ordered by least coset representative.
    pub fn quotient(&self, n: &Subgroup) -> Result<(Group, Vec<Elem>)> {
        self.check_subgroup(n)?;
        if let Some((conjugator, element, image)) = self.normality_witness(n) {
            return Err(Error::NotNormal {
                conjugator,
                element,
                image,
            });
        }
        let reps = self.coset_reps(n);
        let mut distinct: Vec<Elem> = reps.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let slot: HashMap<Elem, usize> = distinct.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let projection: Vec<Elem> = reps.iter().map(|r| slot[r]).collect();
        let table = distinct
            .iter()
            .map(|&a| distinct.iter().map(|&b| projection[self.mul(a, b)]).collect())
            .collect();
        let names = distinct.iter().map(|&r| format!("[{}]", self.names[r])).collect();
        let q = Group::from_table(distinct.len(), table, Some(names))?;
        Ok((q, projection))
    }

    /// The subgroup as a group in its own right, with the embedding of its
    /// elements back into `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<(Group, Vec<Elem>)> {
        self.check_subgroup(h)?;
        let slot: HashMap<Elem, usize> = h.elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let table = h
            .elements
            .iter()
            .map(|&a| h.elements.iter().map(|&b| slot[&self.mul(a, b)]).collect())
            .collect();
        let names = h.elements.iter().map(|&x| self.names[x].clone()).collect();
        let sub = Group::from_table(h.order(), table, Some(names))?;
        Ok((sub, h.elements.clone()))
    }

    /// Check the factor invariants: normal factors, commuting across factors,
    /// and a bijective product map.
    pub fn check_factorization(&self) -> std::result::Result<(), String> {
        for (i, f) in self.factors.iter().enumerate() {
            if !self.is_normal(f) {
                return Err(format!("factor {i} is not normal"));
            }
            for g in self.factors.iter().skip(i + 1) {
                for &a in &f.elements {
                    for &b in &g.elements {
                        if self.mul(a, b) != self.mul(b, a) {
                            return Err(format!("factor {i} does not commute with a later factor"));
                        }
                    }
                }
            }
        }
        let mut hit = vec![false; self.order];
        let mut products = vec![self.identity];
        for f in &self.factors {
            products = products
                .iter()
                .flat_map(|&p| f.elements.iter().map(move |&x| (p, x)))
                .map(|(p, x)| self.mul(p, x))
                .collect();
        }
        if products.len() != self.order {
            return Err("factor orders do not multiply to the group order".into());
        }
        for p in products {
            if hit[p] {
                return Err(format!("element {p} factors in two ways"));
            }
            hit[p] = true;
        }
        Ok(())
    }
}

fn check_associative(order: usize, mul: &impl Fn(usize, usize) -> usize) -> Result<()> {
    let check = |a, b, c| {
        if mul(mul(a, b), c) == mul(a, mul(b, c)) {
            Ok(())
        } else {
            Err(Error::NotAssociative { a, b, c })
        }
    };
    if order <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(order as u64);
        for _ in 0..SAMPLED_TRIPLES {
            let a = rng.random_range(0..order);
            let b = rng.random_range(0..order);
            let c = rng.random_range(0..order);
            check(a, b, c)?;
        }
    }
    Ok(())
}

/// Direct product `a x b`. The element `(x, y)` has index `x * |b| + y`, and
/// the factor list is `a`'s factors followed by `b`'s.
pub fn direct_product(a: &Group, b: &Group, cap: usize) -> Result<Group> {
    let order = (a.order as u128) * (b.order as u128);
    if order > cap as u128 {
        return Err(Error::OrderCapExceeded { order, cap });
    }
    let (na, nb) = (a.order, b.order);
    let order = na * nb;
    let table = (0..order)
        .map(|x| {
            let (xa, xb) = (x / nb, x % nb);
            (0..order)
                .map(|y| a.mul(xa, y / nb) * nb + b.mul(xb, y % nb))
                .collect()
        })
        .collect();
    let inner = |g: &Group, e: Elem| {
        let s = g.name(e);
        if g.factors.len() > 1 && s.starts_with('(') && s.ends_with(')') {
            s[1..s.len() - 1].to_string()
        } else {
            s.to_string()
        }
    };
    let names = (0..order)
        .map(|x| format!("({},{})", inner(a, x / nb), inner(b, x % nb)))
        .collect();
    let mut g = Group::from_table(order, table, Some(names))?;
    let mut factors = Vec::with_capacity(a.factors.len() + b.factors.len());
    for f in &a.factors {
        let mut elements: Vec<Elem> = f.elements.iter().map(|&x| x * nb + b.identity).collect();
        elements.sort_unstable();
        factors.push(Subgroup {
            parent: g.id,
            elements,
        });
    }
    for f in &b.factors {
        let mut elements: Vec<Elem> = f.elements.iter().map(|&y| a.identity * nb + y).collect();
        elements.sort_unstable();
        factors.push(Subgroup {
            parent: g.id,
            elements,
        });
    }
    g.factors = factors;
    Ok(g)
}

pub(crate) fn intersect_sorted(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn is_subset_sorted(a: &[Elem], b: &[Elem]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

impl Subgroup {
    /// Caller guarantees `elements` is a sorted subgroup of `parent`.
    pub(crate) fn from_sorted(parent: GroupId, elements: Vec<Elem>) -> Subgroup {
        Subgroup { parent, elements }
    }

    pub fn parent(&self) -> GroupId {
        self.parent
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && is_subset_sorted(&self.elements, &other.elements)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by `(order, element set)`.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
            .then_with(|| self.parent.cmp(&other.parent))
    }
}

impl Coset {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn subgroup_arc(&self) -> &Arc<Subgroup> {
        &self.subgroup
    }

    pub fn rep(&self) -> Elem {
        self.rep
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Coset) -> bool {
        is_subset_sorted(&self.elements, &other.elements)
    }
}

impl PartialEq for Coset {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.subgroup == other.subgroup
    }
}

impl Eq for Coset {}

impl Hash for Coset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.subgroup.hash(state);
        self.rep.hash(state);
    }
}

/// Render an element set as `{a,b,c}` using element names, in index order.
pub fn render_set(g: &Group, elements: &[Elem]) -> String {
    let parts: Vec<&str> = elements.iter().map(|&x| g.name(x)).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}
