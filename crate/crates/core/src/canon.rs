//! Canonical forms for small graphs.
//!
//! The vertex set is refined to an equitable ordered partition (starting from
//! the degree partition), then the search individualizes vertices of the first
//! non-singleton cell, refines again, and recurses. Every discrete partition
//! reached is a relabeling; the canonical form is the largest adjacency code
//! among them. Refinement and cell choice depend only on the partition, never
//! on vertex names, so isomorphic graphs reach the same set of codes.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 10;

/// Upper-triangle adjacency code of a relabeled graph, read in graph6 column
/// order `x(0,1), x(0,2), x(1,2), ...` with the first pair most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// The code as a big-endian byte string, length-prefixed by the order.
    pub fn bytes(&self) -> Vec<u8> {
        let mut out = vec![self.order];
        out.extend_from_slice(&self.code.to_be_bytes());
        out
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = Self::pair_count(n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).expect("code describes a simple graph")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// The canonical form together with the labeling producing it:
/// `labeling[u]` is the canonical label of vertex `u`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: CANON_MAX_ORDER,
        });
    }
    let adj: Vec<u16> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u16, |acc, &v| acc | 1 << v))
        .collect();

    let mut by_degree: Vec<Vec<usize>> = Vec::new();
    let mut degrees: Vec<usize> = g.degrees();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        by_degree.push((0..n).filter(|&u| g.degree(u) == d).collect());
    }

    let mut search = Search {
        adj: &adj,
        n,
        best: None,
    };
    search.descend(by_degree);
    let (code, order) = search.best.unwrap_or((0, Vec::new()));
    let mut labeling = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        labeling[v] = label;
    }
    Ok((
        CanonicalForm {
            order: n as u8,
            code,
        },
        labeling,
    ))
}

struct Search<'a> {
    adj: &'a [u16],
    n: usize,
    /// Best code so far and the vertex order producing it.
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.adj, &mut cells);

        let fixed = cells.iter().take_while(|c| c.len() == 1).count();
        if let Some((best, _)) = &self.best {
            let (prefix, bits) = self.prefix_code(&cells[..fixed]);
            let total = CanonicalForm::pair_count(self.n);
            let best_prefix = if bits == 0 { 0 } else { best >> (total - bits) };
            if prefix < best_prefix {
                return;
            }
        }

        if fixed == cells.len() {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let (code, _) = self.prefix_code(&cells);
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, order));
            }
            return;
        }

        let target = fixed
            + cells[fixed..]
                .iter()
                .position(|c| c.len() > 1)
                .expect("a non-singleton cell exists");
        for &v in &cells[target] {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(next);
        }
    }

    /// Code bits determined by a run of singleton cells at the front.
    fn prefix_code(&self, singletons: &[Vec<usize>]) -> (u64, usize) {
        let mut code = 0u64;
        let mut bits = 0;
        for j in 1..singletons.len() {
            let vj = singletons[j][0];
            for cell in &singletons[..j] {
                code = code << 1 | (self.adj[cell[0]] >> vj & 1) as u64;
                bits += 1;
            }
        }
        (code, bits)
    }
}

/// Splits cells until every vertex in a cell has the same number of neighbors
/// in every cell. Split fragments are ordered by neighbor count.
fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u16, |acc, &v| acc | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: &usize| (adj[*v] & splitter).count_ones();
                let first = count(&cells[c][0]);
                if cells[c].iter().all(|v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|v| (count(v), *v)).collect();
                keyed.sort_unstable();
                let mut fragments: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        fragments.push(Vec::new());
                        last = Some(k);
                    }
                    fragments.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, fragments);
                continue 'restart;
            }
        }
        break;
    }
}
