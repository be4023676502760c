//! Library results against independently written reference computations.

use sddlab_core::canon::canonical_form;
use sddlab_core::enumerate::{enumerate_connected, enumerate_connected_range};
use sddlab_core::indices::{
    forgotten, general_zagreb, sum_connectivity_chi, zagreb_m1, ZagrebKind,
};
use sddlab_core::line_graph::{line_graph, preimage_lookup, LineShape};
use sddlab_core::named::NamedGraph;
use sddlab_core::{graph6, ExactRational, Graph, Scalar};

/// graph6 written straight from the format description: size byte `n + 63`,
/// then the bits `x(i,j)` for `i < j` in column order, six per byte, offset 63.
fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bits = Vec::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = vec![(n + 63) as u8];
    for chunk in bits.chunks(6) {
        let value = chunk.iter().fold(0u8, |acc, &b| acc << 1 | u8::from(b));
        out.push(value + 63);
    }
    String::from_utf8(out).unwrap()
}

#[test]
fn graph6_matches_reference_packer() {
    let level = enumerate_connected(5).unwrap();
    assert_eq!(level.len(), 21);
    for g in level.iter() {
        assert_eq!(graph6::encode(g).unwrap(), reference_graph6(g));
    }
    for name in ["K2", "P5", "C7", "K2,3", "S9"] {
        let g = name.parse::<NamedGraph>().unwrap().build().unwrap();
        assert_eq!(graph6::encode(&g).unwrap(), reference_graph6(&g), "{name}");
    }
}

#[test]
fn zagreb_sums_agree() {
    for g in enumerate_connected_range(1..=7).unwrap().iter() {
        let m1 = Scalar::Exact(zagreb_m1(g));
        assert_eq!(sum_connectivity_chi(g, 1.0).unwrap().value, m1);
        assert_eq!(general_zagreb(g, 2.0, ZagrebKind::Vertex).unwrap().value, m1);
        let cubes: usize = (0..g.n()).map(|u| g.neighbors(u).len().pow(3)).sum();
        assert_eq!(forgotten(g), ExactRational::from(cubes));
    }
}

fn form(g: &Graph) -> sddlab_core::canon::CanonicalForm {
    canonical_form(g).unwrap()
}

/// Every connected graph on at most 8 vertices whose line graph is
/// isomorphic to `target`.
fn search_preimages(target: &Graph) -> Vec<Graph> {
    let want = form(target);
    enumerate_connected_range(2..=8)
        .unwrap()
        .into_iter()
        .filter(|g| g.m() == target.n())
        .filter(|g| form(&line_graph(g).unwrap().lg) == want)
        .collect()
}

fn same_classes(found: &[Graph], table: &[NamedGraph]) -> bool {
    let mut a: Vec<_> = found.iter().map(form).collect();
    let mut b: Vec<_> = table.iter().map(|t| form(&t.build().unwrap())).collect();
    a.sort();
    b.sort();
    a == b
}

#[test]
fn preimage_table_matches_exhaustive_search() {
    for n in 2..=7 {
        let star = NamedGraph::Star(n).build().unwrap();
        let table = preimage_lookup(LineShape::Star, n).unwrap();
        assert!(same_classes(&search_preimages(&star), &table), "S{n}");
    }
    for n in 3..=7 {
        let cycle = NamedGraph::Cycle(n).build().unwrap();
        let table = preimage_lookup(LineShape::Cycle, n).unwrap();
        assert!(same_classes(&search_preimages(&cycle), &table), "C{n}");
    }
    for n in 1..=7 {
        let path = NamedGraph::Path(n).build().unwrap();
        let table = preimage_lookup(LineShape::Path, n).unwrap();
        assert!(same_classes(&search_preimages(&path), &table), "P{n}");
    }
}

#[test]
fn line_graph_examples() {
    let build = |s: &str| s.parse::<NamedGraph>().unwrap().build().unwrap();
    assert_eq!(form(&line_graph(&build("P4")).unwrap().lg), form(&build("P3")));
    assert_eq!(form(&line_graph(&build("S4")).unwrap().lg), form(&build("C3")));
    for n in 3..=9 {
        let c = build(&format!("C{n}"));
        assert_eq!(form(&line_graph(&c).unwrap().lg), form(&c));
    }
}
