//! Vertex-degree-based indices.
//!
//! Indices that are rational by construction (SDD, the Zagreb pair, inverse
//! degree, forgotten, and the general families at integer exponents) are
//! computed exactly. Real exponents and GA go through `f64`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::ExactRational;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexId {
    /// Symmetric division deg.
    Sdd,
    M1,
    M2,
    /// First general Zagreb, a vertex sum of `d^alpha`.
    M1a,
    /// Second general Zagreb, an edge sum of `(d_u d_v)^alpha`.
    M2a,
    /// General sum-connectivity.
    Chi,
    /// Geometric-arithmetic.
    Ga,
    /// Inverse degree.
    Id,
    /// Forgotten.
    F,
}

impl IndexId {
    pub const ALL: [IndexId; 9] = [
        IndexId::Sdd,
        IndexId::M1,
        IndexId::M2,
        IndexId::M1a,
        IndexId::M2a,
        IndexId::Chi,
        IndexId::Ga,
        IndexId::Id,
        IndexId::F,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IndexId::Sdd => "sdd",
            IndexId::M1 => "m1",
            IndexId::M2 => "m2",
            IndexId::M1a => "m1a",
            IndexId::M2a => "m2a",
            IndexId::Chi => "chi",
            IndexId::Ga => "ga",
            IndexId::Id => "id",
            IndexId::F => "f",
        }
    }

    pub fn takes_alpha(&self) -> bool {
        matches!(self, IndexId::M1a | IndexId::M2a | IndexId::Chi)
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        IndexId::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| Error::BadParameter(format!("unknown index `{s}`")))
    }
}

/// A computed index together with how it was computed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexValue {
    pub index: IndexId,
    pub alpha: Option<f64>,
    pub value: Scalar,
}

impl IndexValue {
    pub fn is_exact(&self) -> bool {
        self.value.is_exact()
    }
}

/// Which general Zagreb sum to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZagrebKind {
    Vertex,
    Edge,
}

/// `alpha` as an `i32` when it is an exact integer.
pub(crate) fn integral_exponent(alpha: f64) -> Option<i32> {
    (alpha.is_finite() && alpha.fract() == 0.0 && alpha.abs() <= i32::MAX as f64)
        .then_some(alpha as i32)
}

fn q(v: usize) -> ExactRational {
    ExactRational::from(v)
}

pub fn sdd(g: &Graph) -> ExactRational {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.degree(u) as i64, g.degree(v) as i64);
            ExactRational::ratio(a * a + b * b, a * b)
        })
        .sum()
}

pub fn zagreb_m1(g: &Graph) -> ExactRational {
    let vertex_sum: usize = g.degrees().iter().map(|d| d * d).sum();
    debug_assert_eq!(
        vertex_sum,
        g.edges()
            .iter()
            .map(|&(u, v)| g.degree(u) + g.degree(v))
            .sum::<usize>()
    );
    q(vertex_sum)
}

pub fn zagreb_m2(g: &Graph) -> ExactRational {
    q(g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u) * g.degree(v))
        .sum())
}

pub fn general_zagreb(g: &Graph, alpha: f64, which: ZagrebKind) -> Result<IndexValue> {
    let (index, bases): (IndexId, Vec<usize>) = match which {
        ZagrebKind::Vertex => (IndexId::M1a, g.degrees()),
        ZagrebKind::Edge => (
            IndexId::M2a,
            g.edges()
                .iter()
                .map(|&(u, v)| g.degree(u) * g.degree(v))
                .collect(),
        ),
    };
    if alpha <= 0.0 && bases.contains(&0) {
        return Err(Error::ZeroDegreeNegativeExponent(alpha));
    }
    Ok(IndexValue {
        index,
        alpha: Some(alpha),
        value: power_sum(&bases, alpha)?,
    })
}

pub fn sum_connectivity_chi(g: &Graph, alpha: f64) -> Result<IndexValue> {
    let bases: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v))
        .collect();
    Ok(IndexValue {
        index: IndexId::Chi,
        alpha: Some(alpha),
        value: power_sum(&bases, alpha)?,
    })
}

/// `sum b^alpha`, exact when `alpha` is an integer.
fn power_sum(bases: &[usize], alpha: f64) -> Result<Scalar> {
    match integral_exponent(alpha) {
        Some(k) => Ok(Scalar::Exact(
            bases
                .iter()
                .map(|&b| q(b).pow(k))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .sum(),
        )),
        None => Ok(Scalar::Approx(
            bases.iter().map(|&b| (b as f64).powf(alpha)).sum(),
        )),
    }
}

pub fn geometric_arithmetic(g: &Graph) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.degree(u) as f64, g.degree(v) as f64);
            2.0 * (a * b).sqrt() / (a + b)
        })
        .sum()
}

pub fn inverse_degree(g: &Graph) -> Result<ExactRational> {
    g.degrees()
        .into_iter()
        .enumerate()
        .map(|(u, d)| {
            if d == 0 {
                Err(Error::IsolatedVertex(u))
            } else {
                Ok(ExactRational::ratio(1, d as i64))
            }
        })
        .sum::<Result<ExactRational>>()
}

pub fn forgotten(g: &Graph) -> ExactRational {
    let edge_sum: usize = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u).pow(2) + g.degree(v).pow(2))
        .sum();
    debug_assert_eq!(edge_sum, g.degrees().iter().map(|d| d.pow(3)).sum::<usize>());
    q(edge_sum)
}

/// Dispatches on an index identifier. `alpha` is required exactly for the
/// parameterized families.
pub fn compute(g: &Graph, index: IndexId, alpha: Option<f64>) -> Result<IndexValue> {
    let need_alpha = || {
        alpha.ok_or_else(|| Error::BadParameter(format!("index `{index}` needs --alpha")))
    };
    let exact = |value: ExactRational| IndexValue {
        index,
        alpha: None,
        value: Scalar::Exact(value),
    };
    Ok(match index {
        IndexId::Sdd => exact(sdd(g)),
        IndexId::M1 => exact(zagreb_m1(g)),
        IndexId::M2 => exact(zagreb_m2(g)),
        IndexId::Id => exact(inverse_degree(g)?),
        IndexId::F => exact(forgotten(g)),
        IndexId::Ga => IndexValue {
            index,
            alpha: None,
            value: Scalar::Approx(geometric_arithmetic(g)),
        },
        IndexId::M1a => general_zagreb(g, need_alpha()?, ZagrebKind::Vertex)?,
        IndexId::M2a => general_zagreb(g, need_alpha()?, ZagrebKind::Edge)?,
        IndexId::Chi => sum_connectivity_chi(g, need_alpha()?)?,
    })
}
