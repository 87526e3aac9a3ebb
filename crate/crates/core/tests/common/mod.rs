#![allow(dead_code)]

use knotbound::builtins::builtin;
use knotbound::diagram::{parse_diagram_file, PlanarDiagram};
use knotbound::moves::{family_k2n1, whitehead_double, DoubleSpec};

pub fn named(name: &str) -> PlanarDiagram {
    builtin(name).unwrap_or_else(|| panic!("unknown built-in {name}"))
}

/// Diagrams from the corpus file.
pub fn file_corpus() -> Vec<(String, PlanarDiagram)> {
    let text = include_str!("../data/corpus.txt");
    parse_diagram_file(text)
        .expect("corpus parses")
        .into_iter()
        .map(|nd| (nd.name.expect("corpus lines are named"), nd.diagram))
        .collect()
}

/// Built-ins, family members up to 17 crossings, and the file corpus.
pub fn knot_corpus() -> Vec<(String, PlanarDiagram)> {
    let mut out: Vec<(String, PlanarDiagram)> = ["unknot", "trefoil", "trefoil-lh", "figure8"]
        .into_iter()
        .map(|n| (n.to_string(), named(n)))
        .collect();
    for n in 1..=8 {
        out.push((format!("k{}", 2 * n + 1), family_k2n1(n).unwrap()));
    }
    out.extend(file_corpus());
    out
}

/// Constructed doubles with at most 18 crossings.
pub fn double_corpus() -> Vec<(String, PlanarDiagram)> {
    let mut out = Vec::new();
    for k in -3..=3 {
        out.push((
            format!("D+(unknot,{k})"),
            whitehead_double(&DoubleSpec::new(PlanarDiagram::unknot(), k)),
        ));
    }
    for (name, k) in [
        ("trefoil", 3),
        ("trefoil", 2),
        ("trefoil-lh", -3),
        ("trefoil-lh", -2),
        ("figure8", 0),
    ] {
        out.push((
            format!("D+({name},{k})"),
            whitehead_double(&DoubleSpec::new(named(name), k)),
        ));
    }
    out
}

/// The alternating corpus used for the degree and signature checks.
pub fn alternating_corpus() -> Vec<(String, PlanarDiagram)> {
    let mut out: Vec<(String, PlanarDiagram)> = (1..=8)
        .map(|n| (format!("k{}", 2 * n + 1), family_k2n1(n).unwrap()))
        .collect();
    for n in ["figure8", "trefoil", "trefoil-lh"] {
        out.push((n.to_string(), named(n)));
    }
    out
}
