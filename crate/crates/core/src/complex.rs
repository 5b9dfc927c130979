//! Finite abstract simplicial complexes stored by their facets.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

/// A simplicial complex on labelled vertices `0..labels.len()`, stored as
/// its facets: sorted vertex lists, none contained in another, ordered by
/// `(size, vertices)`.
///
/// The facet list `[[]]` is the complex whose only face is the empty face.
/// An empty facet list is the void complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Complex generated by `faces`; non-maximal faces are dropped.
    pub fn new(labels: Vec<String>, faces: Vec<Vec<usize>>) -> Result<Self> {
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        if let Some(&v) = faces.iter().flatten().find(|&&v| v >= labels.len()) {
            return Err(Error::FacetFormat(format!("vertex {v} has no label")));
        }
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for f in faces {
            if !facets.iter().any(|big| is_subset(&f, big)) {
                facets.push(f);
            }
        }
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(SimplicialComplex { labels, facets })
    }

    /// Complex on unnamed vertices `0..n`, labelled by their indices.
    pub fn from_facets(n: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        SimplicialComplex::new((0..n).map(|i| i.to_string()).collect(), faces)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest face dimension; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    /// All nonempty faces grouped by dimension; each group sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<Vec<usize>>> {
        let dim = self.dim();
        if dim < 0 {
            return Vec::new();
        }
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim as usize + 1];
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for f in &self.facets {
            for mask in 1u64..(1u64 << f.len()) {
                let face: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                if seen.insert(face.clone()) {
                    by_dim[face.len() - 1].insert(face);
                }
            }
        }
        by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Face counts `f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// Number of nonempty faces.
    pub fn face_count(&self) -> usize {
        self.f_vector().iter().sum()
    }

    /// Subcomplex generated by all faces of dimension `i`.
    pub fn pure_skeleton(&self, i: usize) -> Result<SimplicialComplex> {
        if i as isize > self.dim() {
            return Err(Error::DimensionTooLarge {
                requested: i,
                dim: self.dim(),
            });
        }
        let faces = self.faces_by_dim().swap_remove(i);
        SimplicialComplex::new(self.labels.clone(), faces)
    }

    /// `lk(F)`: faces `G` disjoint from `F` with `G ∪ F` a face.
    pub fn link(&self, face: &[usize]) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|f| is_subset(face, f))
            .map(|f| f.iter().copied().filter(|v| !face.contains(v)).collect())
            .collect();
        SimplicialComplex::new(self.labels.clone(), facets).expect("link vertices are labelled")
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    /// Vertices in no facet are ignored.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut used = vec![false; n];
        for f in &self.facets {
            for &v in f {
                used[v] = true;
            }
            for w in f.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for v in (0..n).filter(|&v| used[v]) {
            let root = find(&mut parent, v);
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push(v);
        }
        groups
    }

    /// One facet per line, vertex labels separated by commas. Commas and
    /// backslashes inside labels are escaped with a backslash.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let parts: Vec<String> = f.iter().map(|&v| escape(&self.labels[v])).collect();
            out.push_str(&parts.join(","));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`to_text`](Self::to_text). Vertices are numbered in
    /// order of first appearance.
    pub fn from_text(text: &str) -> Result<SimplicialComplex> {
        let mut labels: Vec<String> = Vec::new();
        let mut facets = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let mut facet = Vec::new();
            if !line.is_empty() {
                for label in split_escaped(line).map_err(|m| Error::FacetFormat(format!("line {}: {m}", lineno + 1)))? {
                    let v = match labels.iter().position(|l| *l == label) {
                        Some(v) => v,
                        None => {
                            labels.push(label);
                            labels.len() - 1
                        }
                    };
                    facet.push(v);
                }
            }
            facets.push(facet);
        }
        SimplicialComplex::new(labels, facets)
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace(',', "\\,")
}

fn split_escaped(line: &str) -> std::result::Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => current.push(chars.next().ok_or("trailing backslash")?),
            ',' => out.push(std::mem::take(&mut current)),
            _ => current.push(c),
        }
    }
    out.push(current);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facets_form_an_antichain() {
        let c = SimplicialComplex::from_facets(4, vec![vec![0, 1], vec![1, 0], vec![0], vec![2, 1, 0], vec![3]]).unwrap();
        assert_eq!(c.facets(), &[vec![3], vec![0, 1, 2]]);
        assert_eq!(c.dim(), 2);
        assert!(!c.is_pure());
        assert_eq!(c.f_vector(), vec![4, 3, 1]);
    }

    #[test]
    fn antichain_of_points() {
        let c = SimplicialComplex::from_facets(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(c.components().len(), 3);
    }

    #[test]
    fn skeletons() {
        let triangle = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]]).unwrap();
        let points = triangle.pure_skeleton(0).unwrap();
        assert_eq!(points.facets(), &[vec![0], vec![1], vec![2]]);
        let hollow = triangle.pure_skeleton(1).unwrap();
        assert_eq!(hollow.pure_skeleton(1).unwrap(), hollow);
        assert_eq!(hollow.facets().len(), 3);
        assert!(matches!(hollow.pure_skeleton(2), Err(Error::DimensionTooLarge { requested: 2, dim: 1 })));
    }

    #[test]
    fn links() {
        let c = SimplicialComplex::from_facets(4, vec![vec![0, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(c.link(&[2]).facets(), &[vec![3], vec![0, 1]]);
        assert_eq!(c.link(&[0, 1, 2]).facets(), &[Vec::<usize>::new()]);
        assert_eq!(c.link(&[]), c);
    }

    #[test]
    fn text_round_trip() {
        let labels = vec!["{a,b}".to_string(), "x\\y".into(), "z".into()];
        let c = SimplicialComplex::new(labels, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let text = c.to_text();
        assert_eq!(text, "{a\\,b},x\\\\y\nx\\\\y,z\n");
        assert_eq!(SimplicialComplex::from_text(&text).unwrap(), c);
        assert!(SimplicialComplex::from_text("a\\").is_err());
    }
}
