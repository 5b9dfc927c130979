//! Reduced simplicial homology ranks over Q and GF(p), predicted sphere
//! counts for solvable groups, and Cohen-Macaulay checks via links.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{gcd_i128, is_prime, mod_inverse};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::SubgroupLattice;
use crate::par::{self, Exec};

/// Complexes with more nonempty faces than this are refused by the
/// Cohen-Macaulay checks.
pub const CM_FACE_CAP: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn check(self) -> Result<Self> {
        match self {
            Field::Prime(p) if !is_prime(p) => Err(Error::NonPrimeModulus(p)),
            f => Ok(f),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reduced Betti numbers in dimensions `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub field: Field,
    pub ranks: Vec<usize>,
}

impl BettiVector {
    pub fn reduced_euler(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Whether all homology sits in dimension `d`.
    pub fn concentrated_in(&self, d: usize) -> bool {
        self.ranks.iter().enumerate().all(|(i, &b)| i == d || b == 0)
    }
}

/// Sparse rows: `(column, value)` sorted by column, values nonzero.
type SparseRow<T> = Vec<(usize, T)>;

fn boundary_rows(faces: &[Vec<usize>], lower: &HashMap<&[usize], usize>) -> Vec<SparseRow<i128>> {
    faces
        .iter()
        .map(|f| {
            let mut row: SparseRow<i128> = (0..f.len())
                .map(|omit| {
                    let facet: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, &v)| v).collect();
                    let sign = if omit % 2 == 0 { 1 } else { -1 };
                    (lower[facet.as_slice()], sign)
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

/// Rank over Q by fraction-free elimination with content reduction.
fn rank_rational(rows: Vec<SparseRow<i128>>) -> Result<usize> {
    let mut pivots: BTreeMap<usize, SparseRow<i128>> = BTreeMap::new();
    for mut row in rows {
        while let Some(&(lead, a)) = row.first() {
            let Some(pivot) = pivots.get(&lead) else {
                break;
            };
            let b = pivot[0].1;
            row = combine_rational(&row, b, pivot, a)?;
        }
        if let Some(&(lead, _)) = row.first() {
            pivots.insert(lead, row);
        }
    }
    Ok(pivots.len())
}

/// `b * row - a * pivot`, divided by its content.
fn combine_rational(row: &SparseRow<i128>, b: i128, pivot: &SparseRow<i128>, a: i128) -> Result<SparseRow<i128>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, x, y) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1, 0)
        } else if cj < ci {
            j += 1;
            (cj, 0, pivot[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (ci, row[i - 1].1, pivot[j - 1].1)
        };
        let v = x
            .checked_mul(b)
            .zip(y.checked_mul(a))
            .and_then(|(l, r)| l.checked_sub(r))
            .ok_or(Error::Overflow)?;
        if v != 0 {
            out.push((col, v));
        }
    }
    let content = out.iter().fold(0, |g, e| gcd_i128(g, e.1));
    if content > 1 {
        for e in out.iter_mut() {
            e.1 /= content;
        }
    }
    Ok(out)
}

fn rank_mod(rows: Vec<SparseRow<i128>>, p: u64) -> usize {
    let p_i = p as i128;
    let mut pivots: BTreeMap<usize, SparseRow<u64>> = BTreeMap::new();
    for row in rows {
        let mut row: SparseRow<u64> = row
            .into_iter()
            .map(|(c, v)| (c, v.rem_euclid(p_i) as u64))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(lead, a)) = row.first() {
            let Some(pivot) = pivots.get(&lead) else {
                break;
            };
            // pivots are monic
            let mut out = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                let ci = row.get(i).map_or(usize::MAX, |e| e.0);
                let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
                let (col, x, y) = if ci < cj {
                    i += 1;
                    (ci, row[i - 1].1, 0)
                } else if cj < ci {
                    j += 1;
                    (cj, 0, pivot[j - 1].1)
                } else {
                    i += 1;
                    j += 1;
                    (ci, row[i - 1].1, pivot[j - 1].1)
                };
                let v = (x + p - a * y % p) % p;
                if v != 0 {
                    out.push((col, v));
                }
            }
            row = out;
        }
        if let Some(&(lead, a)) = row.first() {
            let inv = mod_inverse(a, p);
            for e in row.iter_mut() {
                e.1 = e.1 * inv % p;
            }
            pivots.insert(lead, row);
        }
    }
    pivots.len()
}

fn rank(rows: Vec<SparseRow<i128>>, field: Field) -> Result<usize> {
    match field {
        Field::Rational => rank_rational(rows),
        Field::Prime(p) => Ok(rank_mod(rows, p)),
    }
}

/// Reduced Betti numbers of a nonvoid complex.
pub fn betti(k: &SimplicialComplex, field: Field) -> Result<BettiVector> {
    let field = field.check()?;
    if k.is_void() {
        return Err(Error::EmptyComplex);
    }
    let faces = k.faces_by_dim();
    if faces.is_empty() {
        // only the empty face: homology sits in dimension -1
        return Ok(BettiVector { field, ranks: Vec::new() });
    }
    // ranks[d] = rank of the boundary out of dimension d; the augmentation
    // map from vertices has rank 1
    let mut boundary_rank = vec![1usize];
    for d in 1..faces.len() {
        let lower: HashMap<&[usize], usize> = faces[d - 1].iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        boundary_rank.push(rank(boundary_rows(&faces[d], &lower), field)?);
    }
    boundary_rank.push(0);
    let ranks = (0..faces.len())
        .map(|d| faces[d].len() - boundary_rank[d] - boundary_rank[d + 1])
        .collect();
    Ok(BettiVector { field, ranks })
}

/// The reduced Euler characteristic from face counts agrees with the
/// alternating sum of Betti numbers.
pub fn euler_consistent(k: &SimplicialComplex, b: &BettiVector) -> bool {
    let from_faces: i64 = k
        .f_vector()
        .iter()
        .enumerate()
        .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum::<i64>()
        - 1;
    from_faces == b.reduced_euler()
}

/// Dimension and number of spheres in the predicted bouquet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SphereCount {
    pub dimension: isize,
    pub count: u128,
}

/// `d - 1` and `|prod (1 - c_i |N_i / N_{i-1}|)|` over a chief series, where
/// `c_i` counts complements of each chief factor and `d` is the number of
/// complemented factors.
pub fn predicted_spheres(g: &Group) -> Result<SphereCount> {
    predicted_spheres_in(&SubgroupLattice::new(g))
}

pub fn predicted_spheres_in(lat: &SubgroupLattice) -> Result<SphereCount> {
    if lat.group().order() < 2 {
        return Err(Error::TrivialGroup);
    }
    let series = lat.chief_series()?;
    let mut product: i128 = 1;
    for (&c, &f) in series.complement_counts.iter().zip(&series.factor_orders) {
        product = (1 - c as i128 * f as i128).checked_mul(product).ok_or(Error::Overflow)?;
    }
    let d = series.complement_counts.iter().filter(|&&c| c > 0).count();
    Ok(SphereCount {
        dimension: d as isize - 1,
        count: product.unsigned_abs(),
    })
}

/// First link with homology below its top dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmWitness {
    /// Vertex labels of the face; empty for the empty face.
    pub face: Vec<String>,
    pub degree: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub holds: bool,
    pub witness: Option<CmWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeqCmVerdict {
    pub holds: bool,
    /// Dimension of the first failing pure skeleton, with its witness.
    pub skeleton: Option<usize>,
    pub witness: Option<CmWitness>,
}

fn check_size(k: &SimplicialComplex) -> Result<()> {
    let faces = k.face_count();
    if faces > CM_FACE_CAP {
        return Err(Error::ComplexTooLarge { faces, cap: CM_FACE_CAP });
    }
    Ok(())
}

pub fn is_cm(k: &SimplicialComplex, field: Field) -> Result<CmVerdict> {
    is_cm_with(k, field, Exec::default())
}

/// Every link `lk(F)`, including `lk(∅) = k`, has vanishing reduced
/// homology below its dimension.
pub fn is_cm_with(k: &SimplicialComplex, field: Field, exec: Exec) -> Result<CmVerdict> {
    let field = field.check()?;
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    check_size(k)?;
    let mut faces: Vec<Vec<usize>> = vec![Vec::new()];
    faces.extend(k.faces_by_dim().into_iter().flatten());
    let failure = par::find_map_first(exec, &faces, |face| {
        let link = k.link(face);
        let dim = link.dim();
        if dim <= 0 {
            return None;
        }
        let b = betti(&link, field).expect("links of faces are nonvoid and the field is checked");
        b.ranks[..dim as usize]
            .iter()
            .position(|&r| r != 0)
            .map(|degree| CmWitness {
                face: face.iter().map(|&v| k.labels()[v].clone()).collect(),
                degree,
                rank: b.ranks[degree],
            })
    });
    Ok(CmVerdict {
        holds: failure.is_none(),
        witness: failure,
    })
}

pub fn is_seq_cm(k: &SimplicialComplex, field: Field) -> Result<SeqCmVerdict> {
    is_seq_cm_with(k, field, Exec::default())
}

/// Every pure skeleton is Cohen-Macaulay.
pub fn is_seq_cm_with(k: &SimplicialComplex, field: Field, exec: Exec) -> Result<SeqCmVerdict> {
    check_size(k)?;
    for i in 0..=k.dim().max(-1) {
        let i = i as usize;
        let verdict = is_cm_with(&k.pure_skeleton(i)?, field, exec)?;
        if !verdict.holds {
            return Ok(SeqCmVerdict {
                holds: false,
                skeleton: Some(i),
                witness: verdict.witness,
            });
        }
    }
    Ok(SeqCmVerdict {
        holds: true,
        skeleton: None,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, Builtin};
    use crate::poset::coset_poset;

    fn complex(n: usize, facets: Vec<Vec<usize>>) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets).unwrap()
    }

    fn coset_complex(b: Builtin) -> SimplicialComplex {
        coset_poset(&builtin_group(b).unwrap()).unwrap().order_complex().unwrap()
    }

    #[test]
    fn betti_examples() {
        let points = complex(3, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(betti(&points, Field::Rational).unwrap().ranks, vec![2]);
        assert_eq!(betti(&coset_complex(Builtin::Cyclic(4)), Field::Rational).unwrap().ranks, vec![1, 0]);
        assert_eq!(betti(&coset_complex(Builtin::Cyclic(6)), Field::Rational).unwrap().ranks, vec![0, 2]);
        assert_eq!(betti(&complex(0, vec![]), Field::Rational).unwrap_err(), Error::EmptyComplex);
        assert_eq!(betti(&points, Field::Prime(4)).unwrap_err(), Error::NonPrimeModulus(4));
    }

    #[test]
    fn spheres_and_torsion_free_fields_agree() {
        // boundary of a tetrahedron is a 2-sphere
        let sphere = complex(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            let b = betti(&sphere, field).unwrap();
            assert_eq!(b.ranks, vec![0, 0, 1]);
            assert!(euler_consistent(&sphere, &b));
        }
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // six-vertex triangulation of RP^2
        let rp2 = complex(
            6,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 4, 5],
                vec![0, 1, 5],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![1, 3, 4],
                vec![1, 3, 5],
                vec![2, 4, 5],
            ],
        );
        assert_eq!(betti(&rp2, Field::Rational).unwrap().ranks, vec![0, 0, 0]);
        assert_eq!(betti(&rp2, Field::Prime(2)).unwrap().ranks, vec![0, 1, 1]);
        assert_eq!(betti(&rp2, Field::Prime(3)).unwrap().ranks, vec![0, 0, 0]);
    }

    #[test]
    fn predicted_sphere_examples() {
        let z6 = builtin_group(Builtin::Cyclic(6)).unwrap();
        assert_eq!(predicted_spheres(&z6).unwrap(), SphereCount { dimension: 1, count: 2 });
        let s3 = builtin_group(Builtin::Symmetric(3)).unwrap();
        assert_eq!(predicted_spheres(&s3).unwrap(), SphereCount { dimension: 1, count: 8 });
        for p in [2, 3, 5, 7] {
            let zp = builtin_group(Builtin::Cyclic(p)).unwrap();
            assert_eq!(predicted_spheres(&zp).unwrap(), SphereCount { dimension: 0, count: p as u128 - 1 });
        }
        let a5 = builtin_group(Builtin::Alternating(5)).unwrap();
        assert_eq!(predicted_spheres(&a5).unwrap_err(), Error::NotSolvable);
    }

    #[test]
    fn cm_examples() {
        let solid = complex(3, vec![vec![0, 1, 2]]);
        assert!(is_cm(&solid, Field::Rational).unwrap().holds);
        let edges = complex(4, vec![vec![0, 1], vec![2, 3]]);
        let v = is_cm(&edges, Field::Rational).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(w.face.is_empty());
        assert_eq!((w.degree, w.rank), (0, 1));
        let mixed = complex(3, vec![vec![0, 1], vec![2]]);
        assert_eq!(is_cm(&mixed, Field::Rational).unwrap_err(), Error::NotPure);
    }

    #[test]
    fn seq_cm_examples() {
        assert!(is_seq_cm(&coset_complex(Builtin::Cyclic(6)), Field::Rational).unwrap().holds);
        let v = is_seq_cm(&coset_complex(Builtin::Cyclic(4)), Field::Rational).unwrap();
        assert_eq!((v.holds, v.skeleton), (false, Some(1)));
        let v = is_seq_cm(&coset_complex(Builtin::Alternating(4)), Field::Rational).unwrap();
        assert_eq!((v.holds, v.skeleton), (false, Some(2)));
        let w = v.witness.unwrap();
        assert!(w.face.is_empty());
        assert_eq!((w.degree, w.rank), (0, 2));
    }

    #[test]
    fn sequential_and_parallel_verdicts_agree() {
        let k = coset_complex(Builtin::Alternating(4)).pure_skeleton(2).unwrap();
        let a = is_cm_with(&k, Field::Rational, Exec::Sequential).unwrap();
        let b = is_cm_with(&k, Field::Rational, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
