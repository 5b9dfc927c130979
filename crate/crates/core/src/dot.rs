//! Graphviz output for Hasse diagrams.

use std::fmt::Write as _;

use crate::labeling::LabeledHasse;
use crate::poset::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn header(out: &mut String, poset: &Poset) {
    out.push_str("digraph hasse {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for i in 0..poset.len() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(&poset.render(i)));
    }
}

/// Unlabeled Hasse diagram, edges drawn from lower to upper.
pub fn poset_to_dot(poset: &Poset) -> String {
    let mut out = String::new();
    header(&mut out, poset);
    for &(a, b) in poset.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Labeled diagram: negative labels solid, positive dashed, zero dotted.
/// Unlabeled covers are drawn in gray.
pub fn labeled_to_dot(lh: &LabeledHasse) -> String {
    let poset = lh.lattice();
    let mut out = String::new();
    header(&mut out, poset);
    for &(a, b) in poset.covers() {
        match lh.labels().get(&(a, b)) {
            Some(&v) => {
                let style = match v.signum() {
                    -1 => "solid",
                    1 => "dashed",
                    _ => "dotted",
                };
                let _ = writeln!(out, "  n{a} -> n{b} [label=\"{v}\", style={style}];");
            }
            None => {
                let _ = writeln!(out, "  n{a} -> n{b} [color=gray];");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, Builtin};
    use crate::labeling::{build_context, LevelConvention};

    #[test]
    fn z2_dot() {
        let g = builtin_group(Builtin::Cyclic(2)).unwrap();
        let lh = build_context(&g, LevelConvention::Lex).unwrap().labeled_hasse().unwrap();
        let dot = labeled_to_dot(&lh);
        assert!(dot.contains("n0 [label=\"{}\"];"));
        assert!(dot.contains("n1 -> n3 [label=\"-1\", style=solid];"));
        assert!(dot.contains("n2 -> n3 [label=\"1\", style=dashed];"));
        assert!(dot.contains("n0 -> n1 [label=\"0\", style=dotted];"));
        assert_eq!(dot, labeled_to_dot(&lh));
        assert_eq!(poset_to_dot(lh.lattice()).matches("->").count(), 4);
    }
}
