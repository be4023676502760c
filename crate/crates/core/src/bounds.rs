//! Registry of bounds on the SDD index of a graph and of its line graph.
//!
//! Each entry evaluates a studied quantity (`lhs`) and a bound (`rhs`) on one
//! graph, together with the entry's equality condition. Two entries are kept
//! in their printed form even though they fail on small graphs
//! ([`Theorem::T3_6BLiteral`], [`Theorem::T4_5Literal`]); each has a
//! companion derived from the same chain of inequalities that does hold.
//!
//! Throughout, `a = max{2δ-2, 1}` and `B = (2Δ-2)/a + a/(2Δ-2)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{
    general_zagreb, inverse_degree, sdd, sum_connectivity_chi, zagreb_m1, zagreb_m2, forgotten,
    ZagrebKind,
};
use crate::line_graph::line_graph;
use crate::rational::ExactRational;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(non_camel_case_types)]
pub enum Theorem {
    /// `SDD(G) >= 2m`, equality iff regular.
    T3_1Lower,
    /// `SDD(G) <= m(n-1 + 1/(n-1))`, equality iff a star.
    T3_1Upper,
    /// `SDD(G) >= 2(n-1)`, equality iff `K_2`.
    C3_2,
    /// `SDD(G) >= δ² ID(G)`, equality iff regular.
    T3_3Lower,
    /// `SDD(G) <= Δ² ID(G)`, equality iff regular.
    T3_3Upper,
    /// `SDD(G) <= m(Δ/δ + δ/Δ)`, equality iff regular or biregular.
    T3_4,
    /// `SDD(G) < m(n-2 + 1/(n-2))` when `Δ <= n-2`.
    C3_5,
    /// `SDD(G) >= 2δ² m^((α+1)/α) / (M2^α)^(1/α)`, equality iff regular.
    T3_6A,
    /// `SDD(G) >= δ² (2m)^((α+1)/α) / (Δ (M1^α)^(1/α))`, as printed.
    T3_6BLiteral,
    /// `SDD(G) >= δ² (2m)^((α+1)/α) / (Δ (M1^(α+1))^(1/α))`.
    T3_6BCorrected,
    /// `SDD(G) >= 2m²/M2`, equality iff `K_2`.
    T3_7M2,
    /// `SDD(G) >= 4m²/F`, equality iff `K_2`.
    T3_7F,
    /// `SDD(G - e) > SDD(G) - (d_u² + d_v²)/(d_u d_v)` for a minimal edge `e = uv`.
    T3_9,
    /// `SDD(L) >= 2m` for non-paths, equality iff `S_4` or a cycle.
    T4_1I,
    /// `SDD(L) <= (M1/2 - m)(m-1 + 1/(m-1))`, equality iff `P_3` or `P_4`.
    T4_1II,
    /// `SDD(L) >= max{4(δ-1)², 1} ID(L)`, equality iff regular or `S_3`.
    T4_2Lower,
    /// `SDD(L) <= 4(Δ-1)² ID(L)`, equality iff regular.
    T4_2Upper,
    /// `SDD(L) >= M1 - 2m`, equality iff regular or biregular.
    T4_3Lower,
    /// `SDD(L) <= (M1 - 2m) B / 2`, equality iff regular or `P_4`.
    T4_3Upper,
    /// `SDD(G) + SDD(L) >= M1`, equality iff regular.
    C4_4Lower,
    /// `SDD(G) + SDD(L) <= M1 B / 2`, equality iff regular.
    C4_4Upper,
    /// `SDD(L) >= Δδ² χ_(α+1) / ((Δ-1)² χ_α^(1/α))`, as printed.
    T4_5Literal,
    /// `SDD(L) >= a² (M1-2m)^((α+1)/α) / ((2Δ-2) ((Δ-1)/Δ)^((α+1)/α) χ_(α+1)^(1/α))`.
    T4_5Corrected,
    /// `SDD(L) > Δ³ (M1-2m)² / ((Δ-1)³ χ_3)`.
    T4_6,
    /// `SDD(L)/SDD(G) <= (Δ²-δ)/(4δ) (4(Δ-1)² + a²)/((Δ-1) a)`, equality iff regular.
    T4_8,
}

impl Theorem {
    pub const ALL: [Theorem; 25] = [
        Theorem::T3_1Lower,
        Theorem::T3_1Upper,
        Theorem::C3_2,
        Theorem::T3_3Lower,
        Theorem::T3_3Upper,
        Theorem::T3_4,
        Theorem::C3_5,
        Theorem::T3_6A,
        Theorem::T3_6BLiteral,
        Theorem::T3_6BCorrected,
        Theorem::T3_7M2,
        Theorem::T3_7F,
        Theorem::T3_9,
        Theorem::T4_1I,
        Theorem::T4_1II,
        Theorem::T4_2Lower,
        Theorem::T4_2Upper,
        Theorem::T4_3Lower,
        Theorem::T4_3Upper,
        Theorem::C4_4Lower,
        Theorem::C4_4Upper,
        Theorem::T4_5Literal,
        Theorem::T4_5Corrected,
        Theorem::T4_6,
        Theorem::T4_8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::T3_1Lower => "T3_1_lower",
            Theorem::T3_1Upper => "T3_1_upper",
            Theorem::C3_2 => "C3_2",
            Theorem::T3_3Lower => "T3_3_lower",
            Theorem::T3_3Upper => "T3_3_upper",
            Theorem::T3_4 => "T3_4",
            Theorem::C3_5 => "C3_5",
            Theorem::T3_6A => "T3_6_a",
            Theorem::T3_6BLiteral => "T3_6_b_literal",
            Theorem::T3_6BCorrected => "T3_6_b_corrected",
            Theorem::T3_7M2 => "T3_7_m2",
            Theorem::T3_7F => "T3_7_f",
            Theorem::T3_9 => "T3_9",
            Theorem::T4_1I => "T4_1_i",
            Theorem::T4_1II => "T4_1_ii",
            Theorem::T4_2Lower => "T4_2_lower",
            Theorem::T4_2Upper => "T4_2_upper",
            Theorem::T4_3Lower => "T4_3_lower",
            Theorem::T4_3Upper => "T4_3_upper",
            Theorem::C4_4Lower => "C4_4_lower",
            Theorem::C4_4Upper => "C4_4_upper",
            Theorem::T4_5Literal => "T4_5_literal",
            Theorem::T4_5Corrected => "T4_5_corrected",
            Theorem::T4_6 => "T4_6",
            Theorem::T4_8 => "T4_8",
        }
    }

    pub fn takes_alpha(&self) -> bool {
        matches!(
            self,
            Theorem::T3_6A
                | Theorem::T3_6BLiteral
                | Theorem::T3_6BCorrected
                | Theorem::T4_5Literal
                | Theorem::T4_5Corrected
        )
    }

    /// Entries kept in their printed form, known to fail on small graphs.
    pub fn is_literal(&self) -> bool {
        matches!(self, Theorem::T3_6BLiteral | Theorem::T4_5Literal)
    }

    /// Whether the bound concerns the line graph (and so excludes `K_2`).
    pub fn uses_line_graph(&self) -> bool {
        self.as_str().starts_with("T4") || self.as_str().starts_with("C4")
    }

    pub fn direction(&self) -> Direction {
        use Theorem::*;
        match self {
            T3_1Upper | T3_3Upper | T3_4 | T4_1II | T4_2Upper | T4_3Upper | C4_4Upper | T4_8 => {
                Direction::Le
            }
            C3_5 => Direction::Lt,
            T3_9 | T4_6 => Direction::Gt,
            _ => Direction::Ge,
        }
    }

    /// The equality condition, in words.
    pub fn equality_condition(&self) -> &'static str {
        use Theorem::*;
        match self {
            T3_1Lower | T3_3Lower | T3_3Upper | T3_6A | T3_6BLiteral | T3_6BCorrected
            | T4_2Upper | C4_4Lower | C4_4Upper | T4_5Literal | T4_5Corrected | T4_8 => "regular",
            T3_1Upper => "star",
            C3_2 | T3_7M2 | T3_7F => "K2",
            T3_4 | T4_3Lower => "regular or biregular",
            C3_5 | T3_9 | T4_6 => "never (strict)",
            T4_1I => "S4 or cycle",
            T4_1II => "P3 or P4",
            T4_2Lower => "regular or S3",
            T4_3Upper => "regular or P4",
        }
    }

    /// Registry entries selected by a comma-separated list of ids, id prefixes
    /// (`T3_1` selects both sides) or `all`. Registry order, no repeats.
    pub fn select(list: &str) -> Result<Vec<Theorem>> {
        let mut chosen = [false; Theorem::ALL.len()];
        for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let key = token.to_ascii_lowercase();
            let mut matched = false;
            for (i, t) in Theorem::ALL.iter().enumerate() {
                let id = t.as_str().to_ascii_lowercase();
                if key == "all" || id == key || id.starts_with(&format!("{key}_")) {
                    chosen[i] = true;
                    matched = true;
                }
            }
            if !matched {
                return Err(Error::BadParameter(format!("unknown theorem `{token}`")));
            }
        }
        let out: Vec<Theorem> = Theorem::ALL
            .iter()
            .zip(chosen)
            .filter_map(|(t, c)| c.then_some(*t))
            .collect();
        if out.is_empty() {
            return Err(Error::BadParameter("no theorems selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim();
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(key))
            .ok_or_else(|| Error::BadParameter(format!("unknown theorem `{s}`")))
    }
}

/// A registry entry together with its exponent, when it takes one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremId {
    pub theorem: Theorem,
    pub alpha: Option<f64>,
}

impl TheoremId {
    pub fn new(theorem: Theorem, alpha: Option<f64>) -> Self {
        TheoremId {
            theorem,
            alpha: if theorem.takes_alpha() { alpha } else { None },
        }
    }
}

impl Eq for TheoremId {}

impl Ord for TheoremId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.theorem.cmp(&other.theorem).then_with(|| {
            match (self.alpha, other.alpha) {
                (Some(a), Some(b)) => a.total_cmp(&b),
                (a, b) => a.is_some().cmp(&b.is_some()),
            }
        })
    }
}

impl PartialOrd for TheoremId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha {
            Some(a) => write!(f, "{}[alpha={a}]", self.theorem),
            None => write!(f, "{}", self.theorem),
        }
    }
}

/// How `lhs` relates to `rhs` when the bound holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Le,
    Lt,
    Ge,
    Gt,
}

impl Direction {
    pub fn symbol(&self) -> &'static str {
        match self {
            Direction::Le => "<=",
            Direction::Lt => "<",
            Direction::Ge => ">=",
            Direction::Gt => ">",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.symbol())
    }
}

/// One registry entry evaluated on one graph (and, for `T3_9`, one edge).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub theorem: TheoremId,
    pub graph6: String,
    pub edge: Option<(usize, usize)>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub direction: Direction,
    /// Whether the graph satisfies the entry's equality condition.
    pub predicate: bool,
}

impl BoundCheck {
    pub fn is_exact(&self) -> bool {
        self.lhs.is_exact() && self.rhs.is_exact()
    }

    /// On the approximate path, values within tolerance of the bound count as
    /// meeting it, strict directions included.
    pub fn holds(&self) -> bool {
        let ord = self.lhs.compare(&self.rhs);
        let tied = ord == Ordering::Equal && !self.is_exact();
        match self.direction {
            Direction::Le => ord != Ordering::Greater,
            Direction::Lt => ord == Ordering::Less || tied,
            Direction::Ge => ord != Ordering::Less,
            Direction::Gt => ord == Ordering::Greater || tied,
        }
    }

    /// Exact equality of the two sides; `None` on the approximate path.
    pub fn equality(&self) -> Option<bool> {
        self.is_exact()
            .then(|| self.lhs.compare(&self.rhs) == Ordering::Equal)
    }

    /// Whether equality occurs exactly when the equality condition holds.
    pub fn consistent(&self) -> Option<bool> {
        self.equality().map(|eq| eq == self.predicate)
    }

    fn discrepancies(&self) -> impl Iterator<Item = DiscrepancyRecord> + '_ {
        let violated = (!self.holds()).then_some(DiscrepancyKind::BoundViolated);
        let mismatch = (self.consistent() == Some(false)).then_some(DiscrepancyKind::EqualityMismatch);
        [violated, mismatch].into_iter().flatten().map(|kind| DiscrepancyRecord {
            theorem: self.theorem,
            witness: self.graph6.clone(),
            edge: self.edge,
            lhs: self.lhs.clone(),
            rhs: self.rhs.clone(),
            kind,
        })
    }
}

fn mode(exact: bool) -> &'static str {
    if exact {
        "exact"
    } else {
        "approximate"
    }
}

impl Serialize for BoundCheck {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundCheck", 12)?;
        s.serialize_field("theorem", self.theorem.theorem.as_str())?;
        s.serialize_field("alpha", &self.theorem.alpha)?;
        s.serialize_field("graph6", &self.graph6)?;
        s.serialize_field("edge", &self.edge)?;
        s.serialize_field("lhs", &self.lhs)?;
        s.serialize_field("rhs", &self.rhs)?;
        s.serialize_field("direction", &self.direction)?;
        s.serialize_field("mode", mode(self.is_exact()))?;
        s.serialize_field("holds", &self.holds())?;
        s.serialize_field("equality", &self.equality())?;
        s.serialize_field("predicate", &self.predicate)?;
        s.serialize_field("consistent", &self.consistent())?;
        s.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscrepancyKind {
    BoundViolated,
    EqualityMismatch,
}

/// A graph on which an entry fails, kept so the failure can be replayed.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyRecord {
    pub theorem: TheoremId,
    pub witness: String,
    pub edge: Option<(usize, usize)>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub kind: DiscrepancyKind,
}

impl DiscrepancyRecord {
    /// Re-evaluates the entry on the witness.
    pub fn replay(&self) -> Result<BoundCheck> {
        let g = graph6::decode(&self.witness)?;
        match self.edge {
            Some(e) => check_t3_9(&g, e),
            None => check(self.theorem.theorem, &g, self.theorem.alpha),
        }
    }

    /// Whether replaying gives the same values and the same failure.
    pub fn reproduces(&self) -> bool {
        self.replay().is_ok_and(|c| {
            c.lhs == self.lhs
                && c.rhs == self.rhs
                && match self.kind {
                    DiscrepancyKind::BoundViolated => !c.holds(),
                    DiscrepancyKind::EqualityMismatch => c.consistent() == Some(false),
                }
        })
    }

    fn sort_key(&self) -> (&str, TheoremId, Option<(usize, usize)>, DiscrepancyKind) {
        (&self.witness, self.theorem, self.edge, self.kind)
    }
}

impl Serialize for DiscrepancyRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DiscrepancyRecord", 8)?;
        s.serialize_field("theorem", self.theorem.theorem.as_str())?;
        s.serialize_field("alpha", &self.theorem.alpha)?;
        s.serialize_field("witness", &self.witness)?;
        s.serialize_field("edge", &self.edge)?;
        s.serialize_field("lhs", &self.lhs)?;
        s.serialize_field("rhs", &self.rhs)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("literal", &self.theorem.theorem.is_literal())?;
        s.end()
    }
}

fn exact(x: ExactRational) -> Scalar {
    Scalar::Exact(x)
}

fn int(x: usize) -> Scalar {
    Scalar::Exact(ExactRational::from(x))
}

fn not_met(why: &str) -> Error {
    Error::HypothesisNotMet(why.into())
}

/// Per-graph quantities shared by every entry.
struct Context<'a> {
    g: &'a Graph,
    graph6: String,
    n: usize,
    m: usize,
    delta: usize,
    big_delta: usize,
    sdd: ExactRational,
    m1: ExactRational,
    regular: bool,
    biregular: bool,
    star: bool,
    path: bool,
    line: Option<LineData>,
}

struct LineData {
    sdd: ExactRational,
    id: ExactRational,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph) -> Result<Self> {
        if g.n() < 2 || !g.is_connected() {
            return Err(not_met("graph must be connected and nontrivial"));
        }
        let ext = g.degree_extremes()?;
        let line = if g.m() >= 2 {
            let lg = line_graph(g)?.lg;
            Some(LineData {
                sdd: sdd(&lg),
                id: inverse_degree(&lg)?,
            })
        } else {
            None
        };
        Ok(Context {
            g,
            graph6: graph6::encode(g)?,
            n: g.n(),
            m: g.m(),
            delta: ext.min,
            big_delta: ext.max,
            sdd: sdd(g),
            m1: zagreb_m1(g),
            regular: g.is_regular().is_some(),
            biregular: g.is_biregular().is_some(),
            star: g.is_star(),
            path: g.is_path(),
            line,
        })
    }

    fn line(&self) -> Result<&LineData> {
        self.line.as_ref().ok_or_else(|| not_met("line-graph bounds exclude K2"))
    }

    /// `max{2δ-2, 1}`.
    fn a(&self) -> usize {
        (2 * self.delta).saturating_sub(2).max(1)
    }

    /// `(2Δ-2)/a + a/(2Δ-2)`.
    fn bracket(&self) -> Scalar {
        let (top, a) = (int(2 * self.big_delta - 2), int(self.a()));
        top.clone() / a.clone() + a / top
    }

    /// `M1 - 2m`, which equals `2 m_L`.
    fn m1_minus_2m(&self) -> Scalar {
        exact(self.m1.clone()) - int(2 * self.m)
    }

    /// `(lhs, rhs, predicate)` for an entry other than `T3_9`.
    fn evaluate(&self, theorem: Theorem, alpha: Option<f64>) -> Result<(Scalar, Scalar, bool)> {
        use Theorem::*;
        let g = self.g;
        let (n, m, d, dd) = (self.n, self.m, self.delta, self.big_delta);
        let sdd_g = exact(self.sdd.clone());
        let m1 = exact(self.m1.clone());
        let is_k2 = n == 2;

        let alpha = if theorem.takes_alpha() {
            let a = alpha
                .ok_or_else(|| Error::BadParameter(format!("{theorem} needs an exponent alpha")))?;
            if !(a > 0.0 && a.is_finite()) {
                return Err(not_met("exponent alpha must be positive"));
            }
            a
        } else {
            f64::NAN
        };
        let outer = (alpha + 1.0) / alpha;
        let inv = 1.0 / alpha;

        if theorem.uses_line_graph() {
            self.line()?;
            if dd < 2 {
                return Err(not_met("maximum degree must be at least 2"));
            }
        }

        Ok(match theorem {
            T3_1Lower => (sdd_g, int(2 * m), self.regular),
            T3_1Upper => {
                let k = int(n - 1);
                (sdd_g, int(m) * (k.clone() + int(1) / k), self.star)
            }
            C3_2 => (sdd_g, int(2 * (n - 1)), is_k2),
            T3_3Lower | T3_3Upper => {
                let id = exact(inverse_degree(g)?);
                let k = if theorem == T3_3Lower { d } else { dd };
                (sdd_g, int(k * k) * id, self.regular)
            }
            T3_4 => {
                let (hi, lo) = (int(dd), int(d));
                (
                    sdd_g,
                    int(m) * (hi.clone() / lo.clone() + lo / hi),
                    self.regular || self.biregular,
                )
            }
            C3_5 => {
                if dd + 2 > n {
                    return Err(not_met("needs maximum degree at most n-2"));
                }
                let k = int(n - 2);
                (sdd_g, int(m) * (k.clone() + int(1) / k), false)
            }
            T3_6A => {
                let m2a = general_zagreb(g, alpha, ZagrebKind::Edge)?.value;
                let rhs = int(2 * d * d) * int(m).pow(outer) / m2a.pow(inv);
                (sdd_g, rhs, self.regular)
            }
            T3_6BLiteral | T3_6BCorrected => {
                let exponent = if theorem == T3_6BLiteral { alpha } else { alpha + 1.0 };
                let m1a = general_zagreb(g, exponent, ZagrebKind::Vertex)?.value;
                let rhs = int(d * d) * int(2 * m).pow(outer) / (int(dd) * m1a.pow(inv));
                (sdd_g, rhs, self.regular)
            }
            T3_7M2 => (sdd_g, int(2 * m * m) / exact(zagreb_m2(g)), is_k2),
            T3_7F => (sdd_g, int(4 * m * m) / exact(forgotten(g)), is_k2),
            T3_9 => {
                return Err(Error::BadParameter(
                    "T3_9 is checked per minimal edge".into(),
                ))
            }
            T4_1I => {
                if self.path {
                    return Err(not_met("paths are excluded"));
                }
                let s4_or_cycle = (self.star && n == 4) || g.is_cycle();
                (self.sdd_l(), int(2 * m), s4_or_cycle)
            }
            T4_1II => {
                let k = int(m - 1);
                let rhs = (m1.clone() / int(2) - int(m)) * (k.clone() + int(1) / k);
                (self.sdd_l(), rhs, self.path && (n == 3 || n == 4))
            }
            T4_2Lower => {
                let c = (4 * (d - 1) * (d - 1)).max(1);
                let s3 = self.star && n == 3;
                (self.sdd_l(), int(c) * self.id_l(), self.regular || s3)
            }
            T4_2Upper => (
                self.sdd_l(),
                int(4 * (dd - 1) * (dd - 1)) * self.id_l(),
                self.regular,
            ),
            T4_3Lower => (
                self.sdd_l(),
                self.m1_minus_2m(),
                self.regular || self.biregular,
            ),
            T4_3Upper => {
                let p4 = self.path && n == 4;
                let rhs = self.m1_minus_2m() * self.bracket() / int(2);
                (self.sdd_l(), rhs, self.regular || p4)
            }
            C4_4Lower => (sdd_g + self.sdd_l(), m1, self.regular),
            C4_4Upper => (
                sdd_g + self.sdd_l(),
                m1 * self.bracket() / int(2),
                self.regular,
            ),
            T4_5Literal => {
                let chi_next = sum_connectivity_chi(g, alpha + 1.0)?.value;
                let chi = sum_connectivity_chi(g, alpha)?.value;
                let rhs = int(dd * d * d) * chi_next / (int((dd - 1) * (dd - 1)) * chi.pow(inv));
                (self.sdd_l(), rhs, self.regular)
            }
            T4_5Corrected => {
                let a = self.a();
                let chi_next = sum_connectivity_chi(g, alpha + 1.0)?.value;
                let shrink = (int(dd - 1) / int(dd)).pow(outer);
                let rhs = int(a * a) * self.m1_minus_2m().pow(outer)
                    / (int(2 * dd - 2) * shrink * chi_next.pow(inv));
                (self.sdd_l(), rhs, self.regular)
            }
            T4_6 => {
                let chi3 = sum_connectivity_chi(g, 3.0)?.value;
                let rhs = int(dd.pow(3)) * self.m1_minus_2m().pow(2.0)
                    / (int((dd - 1).pow(3)) * chi3);
                (self.sdd_l(), rhs, false)
            }
            T4_8 => {
                let a = self.a();
                let left = int(dd * dd - d) / int(4 * d);
                let right = int(4 * (dd - 1) * (dd - 1) + a * a) / int((dd - 1) * a);
                (self.sdd_l() / sdd_g, left * right, self.regular)
            }
        })
    }

    fn sdd_l(&self) -> Scalar {
        exact(self.line.as_ref().expect("checked by caller").sdd.clone())
    }

    fn id_l(&self) -> Scalar {
        exact(self.line.as_ref().expect("checked by caller").id.clone())
    }

    fn check(&self, theorem: Theorem, alpha: Option<f64>) -> Result<BoundCheck> {
        let (lhs, rhs, predicate) = self.evaluate(theorem, alpha)?;
        Ok(BoundCheck {
            theorem: TheoremId::new(theorem, alpha),
            graph6: self.graph6.clone(),
            edge: None,
            lhs,
            rhs,
            direction: theorem.direction(),
            predicate,
        })
    }

    fn check_t3_9(&self, (u, v): (usize, usize)) -> Result<BoundCheck> {
        let g = self.g;
        let (u, v) = (u.min(v), u.max(v));
        if !g.has_edge(u, v) || !g.is_minimal_edge(u, v) {
            return Err(Error::NotMinimalEdge(u, v));
        }
        if g.m() < 2 {
            return Err(not_met("deleting the only edge leaves no edges"));
        }
        let (du, dv) = (g.degree(u), g.degree(v));
        let term = int(du * du + dv * dv) / int(du * dv);
        Ok(BoundCheck {
            theorem: TheoremId::new(Theorem::T3_9, None),
            graph6: self.graph6.clone(),
            edge: Some((u, v)),
            lhs: exact(sdd(&g.without_edge(u, v)?)),
            rhs: exact(self.sdd.clone()) - term,
            direction: Direction::Gt,
            predicate: false,
        })
    }
}

/// Evaluates one entry on a connected nontrivial graph. Graphs outside the
/// entry's scope give [`Error::HypothesisNotMet`]. `T3_9` goes through
/// [`check_t3_9`].
pub fn check(theorem: Theorem, g: &Graph, alpha: Option<f64>) -> Result<BoundCheck> {
    Context::new(g)?.check(theorem, alpha)
}

/// The edge-deletion inequality for the minimal edge `edge` of `g`.
pub fn check_t3_9(g: &Graph, edge: (usize, usize)) -> Result<BoundCheck> {
    Context::new(g)?.check_t3_9(edge)
}

/// Counts for one entry over a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub checked: usize,
    pub skipped: usize,
    pub equalities: usize,
    pub violations: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    /// In input-graph order, then registry order, then exponent order.
    pub checks: Vec<BoundCheck>,
    /// Sorted by witness graph6, then entry.
    pub discrepancies: Vec<DiscrepancyRecord>,
    pub summaries: BTreeMap<TheoremId, SweepSummary>,
}

enum Outcome {
    Checked(BoundCheck),
    Skipped(TheoremId),
}

fn outcomes_for(g: &Graph, theorems: &[Theorem], alphas: &[f64]) -> Result<Vec<Outcome>> {
    let ids: Vec<TheoremId> = theorems
        .iter()
        .flat_map(|&t| -> Vec<TheoremId> {
            if t.takes_alpha() {
                alphas.iter().map(|&a| TheoremId::new(t, Some(a))).collect()
            } else {
                vec![TheoremId::new(t, None)]
            }
        })
        .collect();
    let ctx = match Context::new(g) {
        Ok(ctx) => ctx,
        Err(Error::HypothesisNotMet(_)) => {
            return Ok(ids.into_iter().map(Outcome::Skipped).collect());
        }
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    for id in ids {
        if id.theorem == Theorem::T3_9 {
            let edges = g.minimal_edges();
            if edges.is_empty() || g.m() < 2 {
                out.push(Outcome::Skipped(id));
            }
            for e in edges {
                match ctx.check_t3_9(e) {
                    Ok(c) => out.push(Outcome::Checked(c)),
                    Err(Error::HypothesisNotMet(_)) => {
                        out.push(Outcome::Skipped(id));
                        break;
                    }
                    Err(e) => return Err(e),
                }
            }
            continue;
        }
        match ctx.check(id.theorem, id.alpha) {
            Ok(c) => out.push(Outcome::Checked(c)),
            Err(Error::HypothesisNotMet(_)) => out.push(Outcome::Skipped(id)),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Runs every selected entry (at every exponent in `alphas`, for entries that
/// take one) over `graphs`. Work is spread over the current rayon pool; the
/// outcome does not depend on the pool size.
pub fn sweep(theorems: &[Theorem], graphs: &[Graph], alphas: &[f64]) -> Result<SweepOutcome> {
    let per_graph: Vec<Vec<Outcome>> = graphs
        .par_iter()
        .map(|g| outcomes_for(g, theorems, alphas))
        .collect::<Result<_>>()?;

    let mut outcome = SweepOutcome::default();
    for &t in theorems {
        let alpha_list: Vec<Option<f64>> = if t.takes_alpha() {
            alphas.iter().map(|&a| Some(a)).collect()
        } else {
            vec![None]
        };
        for a in alpha_list {
            outcome.summaries.insert(TheoremId::new(t, a), SweepSummary::default());
        }
    }
    for item in per_graph.into_iter().flatten() {
        match item {
            Outcome::Skipped(id) => outcome.summaries.entry(id).or_default().skipped += 1,
            Outcome::Checked(c) => {
                let s = outcome.summaries.entry(c.theorem).or_default();
                s.checked += 1;
                s.equalities += usize::from(c.equality() == Some(true));
                s.violations += usize::from(!c.holds());
                s.mismatches += usize::from(c.consistent() == Some(false));
                outcome.discrepancies.extend(c.discrepancies());
                outcome.checks.push(c);
            }
        }
    }
    outcome
        .discrepancies
        .sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(outcome)
}
