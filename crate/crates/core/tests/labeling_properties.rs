use std::collections::BTreeMap;

use coset_core::arith::is_prime;
use coset_core::expr::parse_group_expr;
use coset_core::group::{Elem, Group, Subgroup};
use coset_core::homology::{betti, Field};
use coset_core::labeling::{build_context, build_context_with, index_p_subgroups, LabelContext, LevelConvention};
use coset_core::poset::Node;
use coset_core::shelling::{facet_order_from_labels, falling_chains, verify_coel, verify_shelling};

const COMPLEMENTED: [&str; 7] = ["Z6", "S3", "Z2 x Z2", "Z3 x Z3", "E2^3", "Z2 x S3", "Z30"];

fn context(expr: &str) -> LabelContext {
    build_context(&parse_group_expr(expr).unwrap(), LevelConvention::Lex).unwrap()
}

fn node_subgroup(g: &Group, node: &Node) -> Subgroup {
    match node {
        Node::Coset(c) => c.subgroup().clone(),
        _ => g.full_subgroup(),
    }
}

#[test]
fn covers_have_prime_index_and_one_new_pivot() {
    for expr in COMPLEMENTED {
        let ctx = context(expr);
        let g = ctx.group();
        let l = ctx.coset_lattice().unwrap();
        for &(a, b) in l.covers() {
            let Node::Coset(lower) = l.node(a) else { continue };
            let upper = node_subgroup(g, l.node(b));
            let index = upper.order() / lower.subgroup().order();
            assert!(is_prime(index as u64), "{expr}: index {index}");
            let fresh = ctx.pivots(&upper, index).unwrap().difference(ctx.pivots(lower.subgroup(), index).unwrap());
            assert_eq!(fresh.len(), 1, "{expr}");
        }
    }
}

#[test]
fn each_distinguished_subgroup_cuts_one_negative_cover() {
    for expr in COMPLEMENTED {
        let ctx = context(expr);
        let g = ctx.group();
        let lh = ctx.labeled_hasse().unwrap();
        let l = lh.lattice();
        for top in 1..l.len() {
            let h0 = node_subgroup(g, l.node(top));
            for (&(p, j), m) in ctx.distinguished() {
                let meet = g.intersection(&h0, m).order();
                let spans = h0.order() * m.order() / meet == g.order();
                if !spans || !h0.order().is_multiple_of(p) || !ctx.pivots(&h0, p).unwrap().contains(j) {
                    continue;
                }
                let level = ctx.levels()[&(p, j)];
                let hits = l.lower_covers(top).iter().filter(|&&a| lh.label(a, top).unwrap() == -level).count();
                assert_eq!(hits, 1, "{expr}: node {} level {level}", l.render(top));
            }
        }
    }
}

#[test]
fn lower_interval_chains_use_each_level_once() {
    for expr in COMPLEMENTED {
        let ctx = context(expr);
        let g = ctx.group();
        let lh = ctx.labeled_hasse().unwrap();
        let l = lh.lattice();
        for top in 1..l.len() {
            let h0 = node_subgroup(g, l.node(top));
            let mut expected: Vec<i64> = vec![0];
            for (&(p, j), &level) in ctx.levels() {
                if h0.order().is_multiple_of(p) && ctx.pivots(&h0, p).unwrap().contains(j) {
                    expected.push(level);
                }
            }
            expected.sort_unstable();
            let interval = lh.interval(0, top).unwrap();
            for chain in interval.lattice().maximal_chains() {
                let mut magnitudes: Vec<i64> = interval.word(&chain).unwrap().iter().map(|v| v.abs()).collect();
                magnitudes.sort_unstable();
                assert_eq!(magnitudes, expected, "{expr}: {}", l.render(top));
            }
        }
    }
}

#[test]
fn complemented_catalog_is_shelled_by_its_labels() {
    for expr in COMPLEMENTED {
        let lh = context(expr).labeled_hasse().unwrap();
        assert!(verify_coel(&lh).unwrap().ok, "{expr}");
        let k = lh.lattice().proper_part().order_complex().unwrap();
        let order = facet_order_from_labels(&lh).unwrap();
        let verdict = verify_shelling(&k, &order).unwrap();
        // |C(Z_p)| is a set of points; none of the catalog groups is cyclic of prime order
        assert!(verdict.holds, "{expr}: {:?}", verdict.violation);
        let top = *betti(&k, Field::Rational).unwrap().ranks.last().unwrap();
        assert_eq!(falling_chains(&lh).unwrap().len(), top, "{expr}");
    }
}

#[test]
fn prime_levels_also_verify() {
    for expr in ["Z6", "S3", "Z30", "Z2 x Z3"] {
        let g = parse_group_expr(expr).unwrap();
        let lh = build_context(&g, LevelConvention::Prime).unwrap().labeled_hasse().unwrap();
        assert!(verify_coel(&lh).unwrap().ok, "{expr}");
    }
}

#[test]
fn every_lower_interval_verifies_on_its_own() {
    for expr in ["Z2 x S3", "Z6", "E2^3"] {
        let lh = context(expr).labeled_hasse().unwrap();
        for top in 1..lh.lattice().len() {
            let sub = lh.interval(0, top).unwrap();
            assert!(verify_coel(&sub).unwrap().ok, "{expr}: {}", lh.lattice().render(top));
        }
    }
}

/// Z6 and E2^3 admit a single choice of each index-p subgroup, so the
/// alternative choices are exercised where S3's three subgroups of index 3
/// give genuinely different labelings.
#[test]
fn alternative_distinguished_subgroups_still_verify() {
    for expr in ["S3", "Z2 x S3", "S3 x Z3"] {
        let g = parse_group_expr(expr).unwrap();
        let ctx = build_context(&g, LevelConvention::Lex).unwrap();
        for &(p, i) in ctx.factor_maximals().keys() {
            let factor = &g.factors()[i - 1];
            let options = index_p_subgroups(ctx.lattice(), factor, p);
            for m in options.iter().take(3) {
                let choices = BTreeMap::from([((p, i), m.clone())]);
                let alt = build_context_with(&g, LevelConvention::Lex, &choices).unwrap();
                let lh = alt.labeled_hasse().unwrap();
                assert!(verify_coel(&lh).unwrap().ok, "{expr}: ({p}, {i}) -> {:?}", m.elements());
            }
        }
    }
}

#[test]
fn singleton_covers_of_the_bottom_are_zero() {
    let lh = context("Z2 x S3").labeled_hasse().unwrap();
    let l = lh.lattice();
    for &a in l.upper_covers(0) {
        assert_eq!(lh.label(0, a).unwrap(), 0);
        assert_eq!(l.element_set(a).len(), 1);
    }
    let singles: Vec<Vec<Elem>> = l.upper_covers(0).iter().map(|&a| l.element_set(a)).collect();
    assert_eq!(singles.len(), 12);
}
