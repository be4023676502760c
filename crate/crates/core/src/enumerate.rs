//! Connected graphs up to isomorphism: the built-in generator and graph streams.

use std::collections::{BTreeSet, HashSet};
use std::ops::RangeInclusive;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order the built-in generator produces.
pub const BUILTIN_MAX_ORDER: usize = 8;

static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();

/// One canonically labeled representative per isomorphism class of connected
/// graphs on `n` vertices, ordered by size and then by canonical code.
///
/// Level `n` is built from level `n - 1` by attaching a new vertex to every
/// nonempty subset of the old vertices and deduplicating canonical forms.
/// Every connected graph has a non-cut vertex, so nothing is missed. Levels
/// are cached for the life of the process.
pub fn enumerate_connected(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n == 0 {
        return Err(Error::BadParameter("order must be at least 1".into()));
    }
    if n > BUILTIN_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: BUILTIN_MAX_ORDER,
        });
    }
    let cache = LEVELS.get_or_init(|| Mutex::new(vec![Arc::new(vec![Graph::empty(1)])]));
    let mut levels = cache.lock().expect("generator cache poisoned");
    while levels.len() < n {
        let next = extend_level(levels.last().expect("level 1 present"));
        levels.push(Arc::new(next));
    }
    Ok(Arc::clone(&levels[n - 1]))
}

fn extend_level(parents: &[Graph]) -> Vec<Graph> {
    let k = parents[0].n();
    let forms: BTreeSet<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            (1u32..1 << k).map(move |subset| {
                let mut edges = parent.edges().to_vec();
                edges.extend((0..k).filter(|i| subset >> i & 1 == 1).map(|i| (i, k)));
                let child = Graph::new(k + 1, &edges).expect("augmented graph is simple");
                canonical_form(&child).expect("order within canonical limit")
            })
        })
        .collect();
    let mut graphs: Vec<(usize, CanonicalForm, Graph)> = forms
        .into_iter()
        .map(|f| {
            let g = f.to_graph();
            (g.m(), f, g)
        })
        .collect();
    graphs.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    graphs.into_iter().map(|(_, _, g)| g).collect()
}

/// Connected graphs for every order in `orders`, concatenated in order.
pub fn enumerate_connected_range(orders: RangeInclusive<usize>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in orders {
        out.extend(enumerate_connected(n)?.iter().cloned());
    }
    Ok(out)
}

/// Filtering applied by [`GraphStream`].
#[derive(Debug, Clone)]
pub struct StreamFilter {
    pub connected_only: bool,
    pub order: RangeInclusive<usize>,
    pub size: RangeInclusive<usize>,
    /// Drop graphs isomorphic to one already yielded (orders up to the
    /// canonical-form limit).
    pub dedup: bool,
}

impl Default for StreamFilter {
    fn default() -> Self {
        StreamFilter {
            connected_only: true,
            order: 0..=usize::MAX,
            size: 0..=usize::MAX,
            dedup: false,
        }
    }
}

/// Iterator over graphs from the built-in generator or a graph6 source.
pub struct GraphStream {
    source: Box<dyn Iterator<Item = Result<Graph>> + Send>,
    filter: StreamFilter,
    seen: HashSet<CanonicalForm>,
}

impl GraphStream {
    /// Connected graphs of every order in `orders`, each class exactly once.
    pub fn builtin(orders: RangeInclusive<usize>) -> Result<Self> {
        let graphs = enumerate_connected_range(orders)?;
        Ok(Self::from_graphs(graphs))
    }

    pub fn from_graphs(graphs: Vec<Graph>) -> Self {
        GraphStream {
            source: Box::new(graphs.into_iter().map(Ok)),
            filter: StreamFilter::default(),
            seen: HashSet::new(),
        }
    }

    /// One graph6 line per graph; blank lines and a `>>graph6<<` header are skipped.
    pub fn from_graph6_text(text: &str) -> Self {
        let lines: Vec<(usize, String)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim().trim_start_matches(">>graph6<<").to_string()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        GraphStream {
            source: Box::new(lines.into_iter().map(|(lineno, l)| {
                graph6::decode(&l).map_err(|e| match e {
                    Error::MalformedGraph6(msg) => {
                        Error::MalformedGraph6(format!("line {lineno}: {msg}"))
                    }
                    other => other,
                })
            })),
            filter: StreamFilter::default(),
            seen: HashSet::new(),
        }
    }

    pub fn from_graph6_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(Self::from_graph6_text(&text))
    }

    pub fn with_filter(mut self, filter: StreamFilter) -> Self {
        self.filter = filter;
        self
    }

    fn admit(&mut self, g: &Graph) -> Result<bool> {
        let f = &self.filter;
        if !f.order.contains(&g.n()) || !f.size.contains(&g.m()) {
            return Ok(false);
        }
        if f.connected_only && !g.is_connected() {
            return Ok(false);
        }
        if f.dedup {
            return Ok(self.seen.insert(canonical_form(g)?));
        }
        Ok(true)
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            let g = match self.source.next()? {
                Ok(g) => g,
                Err(e) => return Some(Err(e)),
            };
            match self.admit(&g) {
                Ok(true) => return Some(Ok(g)),
                Ok(false) => continue,
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
    }

    #[test]
    fn level_order_is_by_size() {
        let level = enumerate_connected(5).unwrap();
        assert!(level.windows(2).all(|w| w[0].m() <= w[1].m()));
        assert!(level.iter().all(|g| g.is_connected() && g.n() == 5));
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_connected(9), Err(Error::TooLarge { .. })));
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn stream_filters_and_dedups() {
        // P3 twice (different labelings), a disconnected graph, and K3
        let text = "Bg\nBW\nBO\nBw\n";
        let all: Vec<Graph> = GraphStream::from_graph6_text(text)
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(all.len(), 3);
        let dedup: Vec<Graph> = GraphStream::from_graph6_text(text)
            .with_filter(StreamFilter {
                dedup: true,
                ..StreamFilter::default()
            })
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(dedup.len(), 2);
        let big: Vec<Graph> = GraphStream::from_graph6_text(text)
            .with_filter(StreamFilter {
                size: 3..=3,
                ..StreamFilter::default()
            })
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(big.len(), 1);
    }

    #[test]
    fn stream_reports_bad_lines() {
        let mut s = GraphStream::from_graph6_text("A_\nA`\n");
        assert!(s.next().unwrap().is_ok());
        match s.next().unwrap() {
            Err(Error::MalformedGraph6(msg)) => assert!(msg.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
