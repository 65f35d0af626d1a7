use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use super::IdentityId;
use crate::rational::Rational;

fn canonical<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn identity_name<S: Serializer>(id: &IdentityId, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(id.as_str())
}

/// A contribution shown when a case fails: one composition's summand, or
/// an extra route's value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub label: String,
    #[serde(serialize_with = "canonical")]
    pub value: Rational,
}

impl Diagnostic {
    pub fn composition(comp: &[usize], value: Rational) -> Self {
        let parts: Vec<String> = comp.iter().map(ToString::to_string).collect();
        Diagnostic {
            label: format!("({})", parts.join(",")),
            value,
        }
    }

    pub fn labelled(label: &str, value: Rational) -> Self {
        Diagnostic {
            label: label.to_string(),
            value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    #[serde(serialize_with = "canonical")]
    pub lhs: Rational,
    #[serde(serialize_with = "canonical")]
    pub rhs: Rational,
    pub equal: bool,
    /// Filled only for failing cases.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Diagnostic>,
}

impl Case {
    pub fn new(
        n: usize,
        m: usize,
        k: usize,
        lhs: Rational,
        rhs: Rational,
        on_mismatch: impl FnOnce() -> Vec<Diagnostic>,
    ) -> Self {
        let equal = lhs == rhs;
        let diagnostics = if equal { Vec::new() } else { on_mismatch() };
        Case {
            n,
            m,
            k,
            lhs,
            rhs,
            equal,
            diagnostics,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub n_max: usize,
    pub m_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interpretation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    #[serde(serialize_with = "identity_name")]
    pub identity: IdentityId,
    pub params: ReportParams,
    pub cases: Vec<Case>,
    pub all_equal: bool,
}

impl IdentityReport {
    pub fn new(identity: IdentityId, params: ReportParams, cases: Vec<Case>) -> Self {
        let all_equal = cases.iter().all(|c| c.equal);
        IdentityReport {
            identity,
            params,
            cases,
            all_equal,
        }
    }

    /// The identity column used in CSV: the id, qualified by the REMARK
    /// interpretation or the XCHECK family when present.
    pub fn label(&self) -> String {
        let qualifier = self
            .params
            .interpretation
            .as_deref()
            .or(self.params.family.as_deref());
        match qualifier {
            Some(q) => format!("{}/{q}", self.identity),
            None => self.identity.to_string(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.equal)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report fields are plain data")
    }

    /// CSV rows without the header.
    pub fn csv_rows(&self) -> String {
        let label = self.label();
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(
                out,
                "{label},{},{},{},{},{},{}",
                c.n, c.m, c.k, c.lhs, c.rhs, c.equal
            );
        }
        out
    }

    pub const CSV_HEADER: &'static str = "identity,n,m,k,lhs,rhs,equal";

    /// Human-readable summary plus every failing case with its diagnostics.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} n_max={} m_max={}{}: {} cases, {} failed -> {}",
            self.label(),
            self.params.n_max,
            self.params.m_max,
            self.params
                .a
                .as_ref()
                .map(|a| format!(" a={a}"))
                .unwrap_or_default(),
            self.cases.len(),
            failed,
            if self.all_equal { "PASS" } else { "FAIL" }
        );
        for c in self.failures() {
            let _ = writeln!(
                out,
                "  n={} m={} k={}: lhs={} rhs={}",
                c.n, c.m, c.k, c.lhs, c.rhs
            );
            for d in &c.diagnostics {
                let _ = writeln!(out, "    {} -> {}", d.label, d.value);
            }
        }
        out
    }
}
