//! Named small graphs used as fixtures and as equality witnesses.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted for a named family member.
pub const MAX_NAMED_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedGraph {
    /// `P_n`, vertices `0-1-...-(n-1)`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `S_n`, center `0` joined to `1..n`.
    Star(usize),
    Complete(usize),
    /// Triangle `0,1,2` with a pendant vertex `3` on `0`.
    C3Star,
    /// `P_4` with a pendant vertex `4` on the degree-two vertex `1`.
    P4Star,
    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
}

impl NamedGraph {
    pub fn order(&self) -> usize {
        match *self {
            NamedGraph::Path(n)
            | NamedGraph::Cycle(n)
            | NamedGraph::Star(n)
            | NamedGraph::Complete(n) => n,
            NamedGraph::C3Star => 4,
            NamedGraph::P4Star => 5,
            NamedGraph::CompleteBipartite(a, b) => a + b,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        let n = self.order();
        if n > MAX_NAMED_ORDER {
            return Err(Error::BadParameter(format!(
                "{self} exceeds the order limit {MAX_NAMED_ORDER}"
            )));
        }
        let edges: Vec<(usize, usize)> = match *self {
            NamedGraph::Path(n) => {
                if n == 0 {
                    return Err(Error::BadParameter("P_n needs n >= 1".into()));
                }
                (1..n).map(|v| (v - 1, v)).collect()
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return Err(Error::BadParameter("C_n needs n >= 3".into()));
                }
                (0..n).map(|v| (v, (v + 1) % n)).collect()
            }
            NamedGraph::Star(n) => {
                if n < 2 {
                    return Err(Error::BadParameter("S_n needs n >= 2".into()));
                }
                (1..n).map(|v| (0, v)).collect()
            }
            NamedGraph::Complete(n) => {
                if n == 0 {
                    return Err(Error::BadParameter("K_n needs n >= 1".into()));
                }
                (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect()
            }
            NamedGraph::C3Star => vec![(0, 1), (0, 2), (1, 2), (0, 3)],
            NamedGraph::P4Star => vec![(0, 1), (1, 2), (2, 3), (1, 4)],
            NamedGraph::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(Error::BadParameter("K_{a,b} needs a, b >= 1".into()));
                }
                (0..a)
                    .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                    .collect()
            }
        };
        Graph::new(n, &edges)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::Star(n) => write!(f, "S{n}"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::C3Star => write!(f, "C3_star"),
            NamedGraph::P4Star => write!(f, "P4_star"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `P4`, `P_4`, `C3_star`, `C3*`, `K2,3`, `K_{2,3}` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("unknown graph name `{s}`"));
        let compact: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        match compact.as_str() {
            "C3STAR" | "C3*" => return Ok(NamedGraph::C3Star),
            "P4STAR" | "P4*" => return Ok(NamedGraph::P4Star),
            _ => {}
        }
        let mut chars = compact.chars();
        let family = chars.next().ok_or_else(bad)?;
        let rest: &str = chars.as_str();
        if family == 'K' && rest.contains(',') {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let a = a.parse().map_err(|_| bad())?;
            let b = b.parse().map_err(|_| bad())?;
            return Ok(NamedGraph::CompleteBipartite(a, b));
        }
        let n: usize = rest.parse().map_err(|_| bad())?;
        match family {
            'P' => Ok(NamedGraph::Path(n)),
            'C' => Ok(NamedGraph::Cycle(n)),
            'S' => Ok(NamedGraph::Star(n)),
            'K' => Ok(NamedGraph::Complete(n)),
            _ => Err(bad()),
        }
    }
}
