//! Hasse diagrams in Graphviz DOT, drawn bottom to top.

use std::fmt::Write as _;

use dcpo_core::{ClosedFamily, ElementSet, FinitePoset, IrrPoset};

use crate::format::PosetFile;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn set_label(file: &PosetFile, set: &ElementSet) -> String {
    let parts: Vec<String> = set.iter().map(|x| file.label(x)).collect();
    format!("{{{}}}", parts.join(","))
}

/// One node per element, one edge per cover pair.
pub fn hasse_dot(graph: &str, order: &FinitePoset, labels: &[String]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(graph));
    if order.size() > 0 {
        out.push_str("  rankdir=BT;\n");
    }
    for (x, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{x} [label={}];", quote(label));
    }
    for (a, b) in order.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

pub fn poset_dot(file: &PosetFile) -> String {
    let labels: Vec<String> = (0..file.poset.size()).map(|x| file.label(x)).collect();
    hasse_dot("poset", &file.poset, &labels)
}

/// The lattice of closed sets ordered by inclusion.
pub fn closed_family_dot(file: &PosetFile, family: &ClosedFamily) -> String {
    let members = family.members();
    let order = FinitePoset::from_relation(members.len(), |i, j| members[i].is_subset(&members[j]))
        .expect("inclusion is a partial order");
    let labels: Vec<String> = members.iter().map(|m| set_label(file, m)).collect();
    hasse_dot("csigma", &order, &labels)
}

pub fn irr_dot(file: &PosetFile, irr: &IrrPoset) -> String {
    let labels: Vec<String> = irr.elements.iter().map(|m| set_label(file, m)).collect();
    hasse_dot("irr", &irr.order, &labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        let file = PosetFile::new(FinitePoset::empty());
        assert_eq!(poset_dot(&file), "digraph \"poset\" {\n}\n");
    }

    #[test]
    fn chain_edges() {
        let file = PosetFile::new(FinitePoset::chain(2));
        let dot = poset_dot(&file);
        assert!(dot.contains("n0 -> n1;"));
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn quotes_labels() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
