//! Line graphs and the small structural facts relating `G` and `L(G)`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::NamedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphResult {
    /// The line graph. Vertex `i` stands for `edge_index[i]`.
    pub lg: Graph,
    /// The `G`-edge behind each line-graph vertex, in lexicographic edge order.
    pub edge_index: Vec<(usize, usize)>,
}

pub fn line_graph(g: &Graph) -> Result<LineGraphResult> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let edges = g.edges();
    let id = |a: usize, b: usize| {
        edges
            .binary_search(&(a.min(b), a.max(b)))
            .expect("neighbor pair is an edge")
    };
    let mut lg_edges = Vec::new();
    for u in 0..g.n() {
        let incident: Vec<usize> = g.neighbors(u).iter().map(|&w| id(u, w)).collect();
        for (i, &e) in incident.iter().enumerate() {
            for &f in &incident[i + 1..] {
                lg_edges.push((e, f));
            }
        }
    }
    Ok(LineGraphResult {
        lg: Graph::new(edges.len(), &lg_edges)?,
        edge_index: edges.to_vec(),
    })
}

/// `(max{2δ-2, 1}, 2Δ-2)`, which bracket the minimum and maximum degree of `L(G)`.
pub fn line_degree_bounds(g: &Graph) -> Result<(usize, usize)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() < 2 {
        return Err(Error::TooSmall(
            "line-graph degree bounds need at least two edges".into(),
        ));
    }
    let ext = g.degree_extremes()?;
    Ok(((2 * ext.min).saturating_sub(2).max(1), 2 * ext.max - 2))
}

/// `(predicted, actual)`: whether `G` is regular or biregular, and whether
/// `L(G)` is regular. The two agree on connected nontrivial graphs.
pub fn line_is_regular_iff(g: &Graph) -> Result<(bool, bool)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let predicted = g.is_regular().is_some() || g.is_biregular().is_some();
    let actual = line_graph(g)?.lg.is_regular().is_some();
    Ok((predicted, actual))
}

/// Shapes whose line-graph preimages are tabulated by [`preimage_lookup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineShape {
    Star,
    Cycle,
    Path,
}

/// Connected graphs `G` (up to isomorphism) with `L(G)` isomorphic to the
/// given shape of order `n`.
///
/// For every cycle, `L(C_n) = C_n`, so `C_n` is its own preimage; the triangle
/// additionally has `S_4`. Stars on four or more vertices have none.
pub fn preimage_lookup(shape: LineShape, n: usize) -> Result<Vec<NamedGraph>> {
    let bad = |what: &str| Err(Error::BadParameter(format!("{what} (n = {n})")));
    Ok(match shape {
        LineShape::Star => match n {
            0 | 1 => return bad("S_n needs n >= 2"),
            2 => vec![NamedGraph::Path(3)],
            3 => vec![NamedGraph::Path(4)],
            _ => vec![],
        },
        LineShape::Cycle => match n {
            0..=2 => return bad("C_n needs n >= 3"),
            3 => vec![NamedGraph::Cycle(3), NamedGraph::Star(4)],
            _ => vec![NamedGraph::Cycle(n)],
        },
        LineShape::Path => match n {
            0 => return bad("P_n needs n >= 1"),
            _ => vec![NamedGraph::Path(n + 1)],
        },
    })
}
