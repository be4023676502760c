//! Exhaustive searches over the built-in enumeration: SDD classification by
//! interval, the inverse problem, and extremal values for fixed order and size.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::enumerate::{enumerate_connected, BUILTIN_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::sdd;
use crate::line_graph::line_graph;
use crate::named::NamedGraph;
use crate::rational::ExactRational;

/// Whether the SDD index is taken of the graph itself or of its line graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SddTarget {
    #[serde(rename = "G")]
    Graph,
    #[serde(rename = "L")]
    LineGraph,
}

impl FromStr for SddTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "G" | "g" => Ok(SddTarget::Graph),
            "L" | "l" | "L(G)" => Ok(SddTarget::LineGraph),
            other => Err(Error::BadParameter(format!("unknown target `{other}`"))),
        }
    }
}

impl SddTarget {
    /// SDD of `g` or of `L(g)`; `None` for graphs outside the target's scope
    /// (trivial graphs, and `K_2` for line graphs).
    fn value(self, g: &Graph) -> Option<ExactRational> {
        match self {
            SddTarget::Graph => (g.n() >= 2).then(|| sdd(g)),
            SddTarget::LineGraph => {
                (g.m() >= 2).then(|| sdd(&line_graph(g).expect("graph has edges").lg))
            }
        }
    }
}

/// A rational interval with independently open or closed ends, written
/// `(lo,hi]`, `[lo,hi)` and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: ExactRational,
    pub lo_closed: bool,
    pub hi: ExactRational,
    pub hi_closed: bool,
}

impl Interval {
    /// The half-open interval `(lo, hi]`.
    pub fn left_open(lo: ExactRational, hi: ExactRational) -> Self {
        Interval {
            lo,
            lo_closed: false,
            hi,
            hi_closed: true,
        }
    }

    pub fn contains(&self, x: &ExactRational) -> bool {
        let above = match x.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        let below = match x.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("malformed interval `{s}`"));
        let t = s.trim();
        let lo_closed = match t.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let hi_closed = match t.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        let inner = &t[1..t.len() - 1];
        let (lo, hi) = inner.split_once(',').ok_or_else(bad)?;
        let interval = Interval {
            lo: lo.parse().map_err(|_| bad())?,
            lo_closed,
            hi: hi.parse().map_err(|_| bad())?,
            hi_closed,
        };
        if interval.lo > interval.hi {
            return Err(bad());
        }
        Ok(interval)
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A graph found by a search, with the SDD value that selected it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassMember {
    pub graph6: String,
    /// Named families the graph belongs to, e.g. `["C3"]` or `["P2", "S2", "K2"]`.
    pub names: Vec<String>,
    pub sdd: ExactRational,
}

impl ClassMember {
    fn new(g: &Graph, sdd: ExactRational) -> Self {
        ClassMember {
            graph6: graph6::encode(g).expect("enumerated graphs are small"),
            names: identify(g),
            sdd,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub interval: Interval,
    pub members: Vec<ClassMember>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extreme {
    Min,
    Max,
}

impl FromStr for Extreme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "min" => Ok(Extreme::Min),
            "max" => Ok(Extreme::Max),
            other => Err(Error::BadParameter(format!("unknown direction `{other}`"))),
        }
    }
}

/// The extreme SDD value and every graph attaining it, sorted by graph6.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub value: ExactRational,
    pub witnesses: Vec<ClassMember>,
}

fn check_n_max(n_max: usize) -> Result<()> {
    if n_max > BUILTIN_MAX_ORDER {
        return Err(Error::TooLarge {
            n: n_max,
            limit: BUILTIN_MAX_ORDER,
        });
    }
    Ok(())
}

/// `(graph, sdd)` for every connected graph of order `2..=n_max` in the
/// target's scope, in enumeration order.
fn evaluated(n_max: usize, target: SddTarget) -> Result<Vec<(Graph, ExactRational)>> {
    check_n_max(n_max)?;
    let mut out = Vec::new();
    for n in 2..=n_max {
        let level = enumerate_connected(n)?;
        let values: Vec<Option<ExactRational>> =
            level.par_iter().map(|g| target.value(g)).collect();
        out.extend(
            level
                .iter()
                .zip(values)
                .filter_map(|(g, v)| v.map(|v| (g.clone(), v))),
        );
    }
    Ok(out)
}

fn sorted_members(mut members: Vec<ClassMember>) -> Vec<ClassMember> {
    members.sort_by(|a, b| (&a.sdd, &a.graph6).cmp(&(&b.sdd, &b.graph6)));
    members
}

/// Every connected graph on at most `n_max` vertices whose SDD (of `G` or of
/// `L(G)`) lies in each interval. Members are reported by `G` and sorted by
/// SDD, then graph6.
pub fn classify_by_sdd(
    n_max: usize,
    intervals: &[Interval],
    target: SddTarget,
) -> Result<Vec<ClassificationResult>> {
    let all = evaluated(n_max, target)?;
    Ok(intervals
        .iter()
        .map(|interval| ClassificationResult {
            interval: interval.clone(),
            members: sorted_members(
                all.iter()
                    .filter(|(_, v)| interval.contains(v))
                    .map(|(g, v)| ClassMember::new(g, v.clone()))
                    .collect(),
            ),
        })
        .collect())
}

/// All connected graphs on at most `n_max` vertices with SDD exactly `value`.
/// An empty result certifies that none exists in range.
pub fn inverse_solve(
    value: &ExactRational,
    n_max: usize,
    target: SddTarget,
) -> Result<Vec<ClassMember>> {
    let all = evaluated(n_max, target)?;
    Ok(sorted_members(
        all.iter()
            .filter(|(_, v)| v == value)
            .map(|(g, v)| ClassMember::new(g, v.clone()))
            .collect(),
    ))
}

/// Minimum or maximum SDD over connected graphs of order `n` (and size `m`
/// when given), with the full tie set.
pub fn extremal_search(n: usize, m: Option<usize>, extreme: Extreme) -> Result<ExtremalResult> {
    check_n_max(n)?;
    if n < 2 {
        return Err(Error::Infeasible(format!(
            "no nontrivial connected graph on {n} vertices"
        )));
    }
    if let Some(m) = m {
        if m < n - 1 || m > n * (n - 1) / 2 {
            return Err(Error::Infeasible(format!(
                "no connected graph with n = {n} and m = {m}"
            )));
        }
    }
    let level = enumerate_connected(n)?;
    let candidates: Vec<(&Graph, ExactRational)> = level
        .par_iter()
        .filter(|g| m.is_none_or(|m| g.m() == m))
        .map(|g| (g, sdd(g)))
        .collect();
    let best = candidates
        .iter()
        .map(|(_, v)| v)
        .reduce(|a, b| match (extreme, a.cmp(b)) {
            (Extreme::Min, Ordering::Greater) | (Extreme::Max, Ordering::Less) => b,
            _ => a,
        })
        .expect("feasible parameters admit a graph")
        .clone();
    let mut witnesses: Vec<ClassMember> = candidates
        .iter()
        .filter(|(_, v)| *v == best)
        .map(|(g, v)| ClassMember::new(g, v.clone()))
        .collect();
    witnesses.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(ExtremalResult {
        value: best,
        witnesses,
    })
}

/// Names of the fixture families isomorphic to `g`: paths, cycles, stars,
/// complete and complete bipartite graphs, `C3_star` and `P4_star`.
pub fn identify(g: &Graph) -> Vec<String> {
    let n = g.n();
    let Ok(form) = canonical_form(g) else {
        return Vec::new();
    };
    let mut candidates = vec![
        NamedGraph::Path(n),
        NamedGraph::Cycle(n),
        NamedGraph::Star(n),
        NamedGraph::Complete(n),
    ];
    if n == 4 {
        candidates.push(NamedGraph::C3Star);
    }
    if n == 5 {
        candidates.push(NamedGraph::P4Star);
    }
    candidates.extend((1..=n / 2).map(|a| NamedGraph::CompleteBipartite(a, n - a)));
    candidates
        .into_iter()
        .filter(|named| {
            named
                .build()
                .ok()
                .and_then(|h| canonical_form(&h).ok())
                .is_some_and(|f| f == form)
        })
        .map(|named| named.to_string())
        .collect()
}
