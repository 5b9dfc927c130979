use coset_core::complex::SimplicialComplex;
use coset_core::gf::{pivot_set, rref, w_down, w_up, GFMatrix};
use coset_core::shelling::verify_shelling;
use proptest::prelude::*;

fn matrix(p: u64, n: usize, rows: Vec<Vec<u64>>) -> GFMatrix {
    GFMatrix::new(p, n, rows).unwrap()
}

/// `(p, n, generators, mixing coefficients)` with entries already reduced.
fn subspace() -> impl Strategy<Value = (u64, usize, Vec<Vec<u64>>, Vec<Vec<u64>>)> {
    prop_oneof![Just((2u64, 4usize)), Just((3u64, 3usize))].prop_flat_map(|(p, n)| {
        let row = prop::collection::vec(0..p, n);
        (
            Just(p),
            Just(n),
            prop::collection::vec(row, 0..=n + 1),
            prop::collection::vec(prop::collection::vec(0..p, n + 2), 5),
        )
    })
}

fn combine(p: u64, rows: &[Vec<u64>], coeffs: &[u64], n: usize) -> Vec<u64> {
    let mut out = vec![0; n];
    for (r, &c) in rows.iter().zip(coeffs) {
        for (o, &v) in out.iter_mut().zip(r) {
            *o = (*o + c * v) % p;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pivots_depend_only_on_the_span((p, n, rows, mixes) in subspace()) {
        let base = matrix(p, n, rows.clone());
        let pivots = pivot_set(&base);
        prop_assert_eq!(pivots.len(), base.rank());
        // alternative generating sets: the original rows reversed and scaled,
        // plus extra combinations
        for (k, coeffs) in mixes.iter().enumerate() {
            let scale = 1 + (k as u64 % (p - 1));
            let mut alt: Vec<Vec<u64>> = rows.iter().rev().map(|r| r.iter().map(|v| v * scale % p).collect()).collect();
            alt.push(combine(p, &rows, coeffs, n));
            let other = matrix(p, n, alt);
            prop_assert_eq!(pivot_set(&other), pivots.clone());
            prop_assert_eq!(rref(&other), rref(&base));
        }
    }

    #[test]
    fn pivots_grow_with_the_subspace((p, n, rows, mixes) in subspace()) {
        let small = matrix(p, n, rows.clone());
        let mut more = rows.clone();
        more.push(mixes[0][..n].to_vec());
        more.push(mixes[1][..n].to_vec());
        let big = matrix(p, n, more);
        prop_assert!(pivot_set(&small).is_subset(&pivot_set(&big)));
    }

    #[test]
    fn intermediate_spaces_sit_between((p, n, rows, mixes) in subspace()) {
        let small = matrix(p, n, rows.clone());
        let mut more = rows.clone();
        more.extend(mixes.iter().map(|m| m[..n].to_vec()));
        let big = matrix(p, n, more);
        prop_assume!(big.rank() > small.rank());
        let fresh = pivot_set(&big).difference(&pivot_set(&small));
        for (w, dropped) in [(w_up(p, &small, &big).unwrap(), false), (w_down(p, &small, &big).unwrap(), true)] {
            prop_assert!(w.spans(&small).unwrap());
            prop_assert!(big.spans(&w).unwrap());
            let mut expected = pivot_set(&small);
            let pick = if dropped { fresh.iter().min() } else { fresh.iter().max() };
            if dropped {
                expected = pivot_set(&big).difference(&coset_core::gf::PivotSet::new(pick));
            } else {
                expected = coset_core::gf::PivotSet::new(expected.iter().chain(pick));
            }
            prop_assert_eq!(pivot_set(&w), expected);
        }
    }

    /// Two disjoint paths of at least one edge each cannot be shelled in
    /// any order.
    #[test]
    fn disconnected_graphs_never_shell(left in 1usize..4, right in 1usize..4, seed in any::<u64>()) {
        let mut facets: Vec<Vec<usize>> = (0..left).map(|i| vec![i, i + 1]).collect();
        let offset = left + 1;
        facets.extend((0..right).map(|i| vec![offset + i, offset + i + 1]));
        let k = SimplicialComplex::from_facets(offset + right + 1, facets.clone()).unwrap();
        let mut order = facets;
        let mut state = seed;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert!(!verify_shelling(&k, &order).unwrap().holds);
    }

    #[test]
    fn paths_shell_in_walking_order(len in 1usize..8) {
        let facets: Vec<Vec<usize>> = (0..len).map(|i| vec![i, i + 1]).collect();
        let k = SimplicialComplex::from_facets(len + 1, facets.clone()).unwrap();
        prop_assert!(verify_shelling(&k, &facets).unwrap().holds);
    }
}
