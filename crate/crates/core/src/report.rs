//! Sweep results arranged for output: a JSON document and a per-entry CSV summary.

use serde::Serialize;

use crate::bounds::{BoundCheck, DiscrepancyRecord, SweepOutcome};

/// One line of the per-entry summary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub theorem: &'static str,
    pub alpha: Option<f64>,
    pub literal: bool,
    pub equality_condition: &'static str,
    pub checked: usize,
    pub skipped: usize,
    pub equalities: usize,
    pub violations: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub summary: Vec<SummaryRow>,
    /// Discrepancies on entries kept in printed form.
    pub expected_falsifications: usize,
    /// Discrepancies anywhere else.
    pub unexpected: usize,
    pub discrepancies: Vec<DiscrepancyRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<BoundCheck>>,
}

impl VerificationReport {
    /// `include_checks` keeps every individual check, not just the failures.
    pub fn new(outcome: SweepOutcome, include_checks: bool) -> Self {
        let summary = outcome
            .summaries
            .iter()
            .map(|(id, s)| SummaryRow {
                theorem: id.theorem.as_str(),
                alpha: id.alpha,
                literal: id.theorem.is_literal(),
                equality_condition: id.theorem.equality_condition(),
                checked: s.checked,
                skipped: s.skipped,
                equalities: s.equalities,
                violations: s.violations,
                mismatches: s.mismatches,
            })
            .collect();
        let expected = outcome
            .discrepancies
            .iter()
            .filter(|d| d.theorem.theorem.is_literal())
            .count();
        VerificationReport {
            summary,
            expected_falsifications: expected,
            unexpected: outcome.discrepancies.len() - expected,
            discrepancies: outcome.discrepancies,
            checks: include_checks.then_some(outcome.checks),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.unexpected == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary_csv(&self) -> String {
        let mut out = String::from(
            "theorem,alpha,literal,equality_condition,checked,skipped,equalities,violations,mismatches\n",
        );
        for r in &self.summary {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.theorem,
                r.alpha.map(|a| a.to_string()).unwrap_or_default(),
                r.literal,
                r.equality_condition,
                r.checked,
                r.skipped,
                r.equalities,
                r.violations,
                r.mismatches
            ));
        }
        out
    }
}
