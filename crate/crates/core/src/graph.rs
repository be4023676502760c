//! Simple undirected graphs and the structural predicates the bounds quantify over.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and double as the degree cache; the edge
/// list holds every edge once as `(u, v)` with `u < v`, in lexicographic order.
/// Isolated vertices are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Minimum and maximum degree of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeExtremes {
    pub min: usize,
    pub max: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated pairs and
    /// out-of-range endpoints. Pair orientation is irrelevant.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for pair in normalized.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateEdge(pair[0].0, pair[0].1));
            }
        }
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges: normalized,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Order.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Size.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// True iff every vertex is reachable from vertex 0; vacuously true for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        components
    }

    pub fn degree_extremes(&self) -> Result<DegreeExtremes> {
        let degrees = self.adjacency.iter().map(Vec::len);
        let min = degrees.clone().min().ok_or(Error::EmptyGraph)?;
        let max = degrees.max().ok_or(Error::EmptyGraph)?;
        Ok(DegreeExtremes { min, max })
    }

    /// The common degree when all vertices share one.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|list| list.len() == first)
            .then_some(first)
    }

    /// `(Delta, delta)` with `Delta > delta` when every edge joins a vertex of
    /// degree `Delta` to one of degree `delta`. Such a graph is bipartite with
    /// the degree classes as parts. Regular graphs are never biregular here.
    pub fn is_biregular(&self) -> Option<(usize, usize)> {
        if self.edges.is_empty() {
            return None;
        }
        let DegreeExtremes { min, max } = self.degree_extremes().ok()?;
        if min == max {
            return None;
        }
        self.edges
            .iter()
            .all(|&(u, v)| {
                let (a, b) = (self.degree(u), self.degree(v));
                (a == max && b == min) || (a == min && b == max)
            })
            .then_some((max, min))
    }

    /// Whether `(u, v)` is a minimal edge: each endpoint's degree is at most the
    /// degree of each of its other neighbors.
    pub fn is_minimal_edge(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let side_ok = |a: usize, b: usize| {
            let da = self.degree(a);
            self.adjacency[a]
                .iter()
                .filter(|&&w| w != b)
                .all(|&w| da <= self.degree(w))
        };
        side_ok(u, v) && side_ok(v, u)
    }

    /// All minimal edges, in lexicographic order.
    pub fn minimal_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| self.is_minimal_edge(u, v))
            .collect()
    }

    /// `m - n + c` where `c` counts components; `m - n + 1` on connected graphs.
    pub fn cyclomatic_number(&self) -> i64 {
        self.m() as i64 - self.n() as i64 + self.component_count() as i64
    }

    /// Copy of the graph with one edge removed. Vertex set is unchanged.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let key = (u.min(v), u.max(v));
        if !self.has_edge(key.0, key.1) {
            return Err(Error::BadParameter(format!(
                "({u}, {v}) is not an edge"
            )));
        }
        let kept: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        Graph::new(self.n(), &kept)
    }

    /// Image of the graph under `perm`, where vertex `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::BadParameter(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.n()
            )));
        }
        let mut hit = vec![false; self.n()];
        for &p in perm {
            if p >= self.n() || std::mem::replace(&mut hit[p], true) {
                return Err(Error::BadParameter("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges)
    }

    /// Tree with maximum degree at most 2 (includes `K_1` and `K_2`).
    pub fn is_path(&self) -> bool {
        self.n() >= 1
            && self.m() + 1 == self.n()
            && self.is_connected()
            && self.adjacency.iter().all(|l| l.len() <= 2)
    }

    /// Connected 2-regular graph.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.is_regular() == Some(2) && self.is_connected()
    }

    /// `S_n`: a tree with a vertex adjacent to all others (`K_2` counts, as `S_2`).
    pub fn is_star(&self) -> bool {
        let n = self.n();
        n >= 2
            && self.m() == n - 1
            && self.adjacency.iter().any(|l| l.len() == n - 1)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n >= 1 && self.m() == n * (n - 1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges)
    }
}
