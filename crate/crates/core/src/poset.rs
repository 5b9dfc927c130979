//! The coset poset of a group and its bounded completion, as explicit
//! finite posets with cover relations, intervals and maximal chains.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::group::{render_set, Coset, Elem, Group, Subgroup};
use crate::lattice::SubgroupLattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    /// The empty set adjoined below every coset.
    Bottom,
    Coset(Coset),
    /// The whole group adjoined above every coset.
    Top,
}

impl Node {
    pub fn coset(&self) -> Option<&Coset> {
        match self {
            Node::Coset(c) => Some(c),
            _ => None,
        }
    }

    fn leq(&self, other: &Node) -> bool {
        match (self, other) {
            (Node::Bottom, _) | (_, Node::Top) => true,
            (_, Node::Bottom) | (Node::Top, _) => false,
            (Node::Coset(a), Node::Coset(b)) => a.len() <= b.len() && a.is_subset_of(b),
        }
    }
}

/// A finite poset of cosets, possibly with `Bottom` and `Top` adjoined.
/// Nodes are sorted by `(size, elements)`, so index order is a linear
/// extension: `a <= b` implies `a <= b` as indices.
#[derive(Clone, Debug)]
pub struct Poset {
    group: Arc<Group>,
    nodes: Vec<Node>,
    /// below[b] holds every a with a <= b
    below: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    bounded: bool,
}

/// `C(G)`: cosets of all proper subgroups ordered by inclusion.
pub fn coset_poset(g: &Group) -> Result<Poset> {
    coset_poset_in(&SubgroupLattice::new(g))
}

/// `C(G)` with the empty set and `G` adjoined.
pub fn coset_lattice(g: &Group) -> Result<Poset> {
    coset_lattice_in(&SubgroupLattice::new(g))
}

pub fn coset_poset_in(lat: &SubgroupLattice) -> Result<Poset> {
    Ok(Poset::from_nodes(Arc::new(lat.group().clone()), proper_cosets(lat)?, false))
}

pub fn coset_lattice_in(lat: &SubgroupLattice) -> Result<Poset> {
    let mut nodes = vec![Node::Bottom];
    nodes.extend(proper_cosets(lat)?);
    nodes.push(Node::Top);
    Ok(Poset::from_nodes(Arc::new(lat.group().clone()), nodes, true))
}

fn proper_cosets(lat: &SubgroupLattice) -> Result<Vec<Node>> {
    let g = lat.group();
    if g.order() < 2 {
        return Err(Error::TrivialGroup);
    }
    let mut cosets = Vec::new();
    for h in &lat.subgroups()[..lat.full_index()] {
        let h = Arc::new(h.clone());
        let reps = g.coset_reps(&h);
        for x in 0..g.order() {
            if reps[x] == x {
                cosets.push(g.right_coset(&h, x));
            }
        }
    }
    cosets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements().cmp(b.elements())));
    Ok(cosets.into_iter().map(Node::Coset).collect())
}

/// `C_0(G)`: the cosets `Kx` of `C(G)` with `KN != G`.
pub fn c0_subposet(g: &Group, n: &Subgroup) -> Result<Poset> {
    let lat = SubgroupLattice::new(g);
    c0_subposet_in(&coset_poset_in(&lat)?, n)
}

pub fn c0_subposet_in(poset: &Poset, n: &Subgroup) -> Result<Poset> {
    let g = poset.group();
    g.check_subgroup(n)?;
    if n.is_trivial() {
        return Err(Error::TrivialN);
    }
    if n.order() == g.order() {
        return Err(Error::ImproperN);
    }
    if let Some((conjugator, element, image)) = g.normality_witness(n) {
        return Err(Error::NotNormal {
            conjugator,
            element,
            image,
        });
    }
    let keep: Vec<usize> = (0..poset.len())
        .filter(|&i| match &poset.nodes[i] {
            Node::Coset(c) => {
                let k = c.subgroup();
                let meet = g.intersection(k, n).order();
                k.order() * n.order() / meet != g.order()
            }
            _ => true,
        })
        .collect();
    Ok(poset.induced(&keep, poset.bounded))
}

impl Poset {
    fn from_nodes(group: Arc<Group>, nodes: Vec<Node>, bounded: bool) -> Poset {
        let n = nodes.len();
        let below = (0..n)
            .map(|b| {
                let mut set = FixedBitSet::with_capacity(n);
                for a in 0..=b {
                    if nodes[a].leq(&nodes[b]) {
                        set.insert(a);
                    }
                }
                set
            })
            .collect();
        Poset::from_relation(group, nodes, below, bounded)
    }

    fn from_relation(group: Arc<Group>, nodes: Vec<Node>, below: Vec<FixedBitSet>, bounded: bool) -> Poset {
        let n = nodes.len();
        let mut covers = Vec::new();
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for b in 0..n {
            let mut strict = below[b].clone();
            strict.set(b, false);
            let mut implied = FixedBitSet::with_capacity(n);
            for c in strict.ones() {
                let mut under_c = below[c].clone();
                under_c.set(c, false);
                implied.union_with(&under_c);
            }
            strict.difference_with(&implied);
            for a in strict.ones() {
                covers.push((a, b));
                lower[b].push(a);
                upper[a].push(b);
            }
        }
        covers.sort_unstable();
        Poset {
            group,
            nodes,
            below,
            covers,
            lower,
            upper,
            bounded,
        }
    }

    /// Subposet on `keep` (ascending indices), with covers recomputed.
    pub fn induced(&self, keep: &[usize], bounded: bool) -> Poset {
        let m = keep.len();
        let nodes = keep.iter().map(|&i| self.nodes[i].clone()).collect();
        let below = keep
            .iter()
            .map(|&b| {
                let mut set = FixedBitSet::with_capacity(m);
                for (ia, &a) in keep.iter().enumerate() {
                    if self.below[b].contains(a) {
                        set.insert(ia);
                    }
                }
                set
            })
            .collect();
        Poset::from_relation(Arc::clone(&self.group), nodes, below, bounded)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    /// Covers `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.lower[b].contains(&a)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// Everything `<= b`, as a bitset over node indices.
    pub fn down_set(&self, b: usize) -> &FixedBitSet {
        &self.below[b]
    }

    pub fn element_set(&self, i: usize) -> Vec<Elem> {
        match &self.nodes[i] {
            Node::Bottom => Vec::new(),
            Node::Coset(c) => c.elements().to_vec(),
            Node::Top => (0..self.group.order()).collect(),
        }
    }

    /// Node whose element set is exactly `elements` (sorted).
    pub fn find(&self, elements: &[Elem]) -> Option<usize> {
        (0..self.len()).find(|&i| self.element_set(i) == elements)
    }

    /// Lookup table from element sets to node indices.
    pub fn index(&self) -> HashMap<Vec<Elem>, usize> {
        (0..self.len()).map(|i| (self.element_set(i), i)).collect()
    }

    /// Element names of node `i` as `{a,b}`; the bottom renders as `{}`.
    pub fn render(&self, i: usize) -> String {
        render_set(&self.group, &self.element_set(i))
    }

    /// The closed interval `[a, b]`.
    pub fn interval(&self, a: usize, b: usize) -> Result<Poset> {
        if a >= self.len() || b >= self.len() || !self.leq(a, b) {
            return Err(Error::NotComparable(a, b));
        }
        let keep: Vec<usize> = (a..=b).filter(|&x| self.leq(a, x) && self.leq(x, b)).collect();
        Ok(self.induced(&keep, true))
    }

    /// Drop the least and greatest elements of a bounded poset.
    pub fn proper_part(&self) -> Poset {
        if !self.bounded || self.len() < 2 {
            return self.clone();
        }
        let keep: Vec<usize> = (1..self.len() - 1).collect();
        self.induced(&keep, false)
    }

    /// All maximal chains, ascending, ordered by `(length, indices)`.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut chains = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.len() {
            if self.lower[start].is_empty() {
                stack.push(start);
                self.extend_chains(&mut stack, &mut chains);
                stack.pop();
            }
        }
        chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        chains
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *stack.last().expect("chain is nonempty");
        if self.upper[top].is_empty() {
            out.push(stack.clone());
            return;
        }
        for &next in &self.upper[top] {
            stack.push(next);
            self.extend_chains(stack, out);
            stack.pop();
        }
    }

    pub fn count_maximal_chains(&self) -> u128 {
        let mut ways = vec![0u128; self.len()];
        let mut total = 0;
        for b in 0..self.len() {
            ways[b] = if self.lower[b].is_empty() {
                1
            } else {
                self.lower[b].iter().map(|&a| ways[a]).sum()
            };
            if self.upper[b].is_empty() {
                total += ways[b];
            }
        }
        total
    }

    /// Number of nonempty chains, i.e. faces of the order complex.
    pub fn count_chains(&self) -> u128 {
        let mut ending = vec![0u128; self.len()];
        for b in 0..self.len() {
            ending[b] = 1 + self.below[b].ones().filter(|&a| a != b).map(|a| ending[a]).sum::<u128>();
        }
        ending.iter().sum()
    }

    /// Order complex: vertices are nodes, faces are chains.
    pub fn order_complex(&self) -> Result<SimplicialComplex> {
        if self.bounded {
            return Err(Error::BoundedPoset);
        }
        let labels = (0..self.len()).map(|i| self.render(i)).collect();
        SimplicialComplex::new(labels, self.maximal_chains())
    }
}
