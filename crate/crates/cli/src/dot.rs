//! Graphviz rendering of a relation as a bipartite graph: sources on the
//! left, targets on the right, per-domain classes as dashed clusters, and
//! optionally an index drawn with bold edges.

use std::fmt::Write;

use relindex::domains::{per_ldom, per_rdom};
use relindex::indexcore::per_classes;
use relindex::{Carrier, Relation};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn side(out: &mut String, prefix: &str, carrier: &Carrier, classes: &[Vec<usize>], rank: &str) {
    let _ = writeln!(out, "  subgraph cluster_{prefix} {{");
    let _ = writeln!(out, "    label={};", quote(carrier.name()));
    let _ = writeln!(out, "    rank={rank};");
    let mut placed = vec![false; carrier.size()];
    for (k, class) in classes.iter().enumerate() {
        let _ = writeln!(out, "    subgraph cluster_{prefix}_{k} {{");
        let _ = writeln!(out, "      style=dashed; label=\"\";");
        for &a in class {
            placed[a] = true;
            let _ = writeln!(out, "      {prefix}{a} [label={}];", quote(carrier.label(a)));
        }
        let _ = writeln!(out, "    }}");
    }
    for (a, done) in placed.iter().enumerate() {
        if !done {
            let _ = writeln!(out, "    {prefix}{a} [label={}, style=dotted];", quote(carrier.label(a)));
        }
    }
    let _ = writeln!(out, "  }}");
}

/// Deterministic DOT text for `r`, highlighting the pairs of `index`.
pub fn render(r: &Relation, index: Option<&Relation>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph relation {{");
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle];");
    side(&mut out, "s", r.src(), &per_classes(&per_ldom(r)), "source");
    side(&mut out, "t", r.dst(), &per_classes(&per_rdom(r)), "sink");
    for (a, b) in r.pairs() {
        if index.is_some_and(|j| j.contains(a, b)) {
            let _ = writeln!(out, "  s{a} -> t{b} [color=red, penwidth=2.5];");
        } else {
            let _ = writeln!(out, "  s{a} -> t{b};");
        }
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clusters_and_highlight() {
        let a = Carrier::new("A", vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let b = Carrier::indexed("B", 2);
        let r = Relation::from_pairs(&a, &b, [(0, 0), (1, 0)]).unwrap();
        let j = Relation::from_pairs(&a, &b, [(0, 0)]).unwrap();
        let dot = render(&r, Some(&j));
        assert!(dot.contains("subgraph cluster_s_0"));
        assert!(dot.contains("s2 [label=\"z\", style=dotted]"));
        assert!(dot.contains("s0 -> t0 [color=red"));
        assert!(dot.contains("  s1 -> t0;"));
        assert_eq!(dot, render(&r, Some(&j)));
    }
}
