//! Line-oriented truth reports.
//!
//! ```text
//! mode: unpasted
//! state: Z1 = span{(0, 1, 0, 0)}
//! entry: Z1 | unpasted | true | inclusion
//! entry: X1 | unpasted | 0/0 | no-common-block
//! tuple: 1, 0/0
//! context: Sigma_12z | admissible
//! context: Sigma_12x | undetermined
//! contradiction: none
//! ```
//!
//! Diagnostics follow their entry as indented `diagnostic:` lines.

use std::fmt;
use std::str::FromStr;

use qlogic_core::logic::{Admissibility, Mode, Rule, TruthValue};

/// How the entries were valued: by membership of a state vector, or
/// counter-factually from a state subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalKind {
    Factual,
    Counterfactual(Mode),
}

impl fmt::Display for EvalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalKind::Factual => f.write_str("factual"),
            EvalKind::Counterfactual(m) => write!(f, "{m}"),
        }
    }
}

impl FromStr for EvalKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "factual" {
            Ok(EvalKind::Factual)
        } else {
            s.parse().map(EvalKind::Counterfactual)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Admissible,
    Violation(usize),
    /// Some member of the context has no definite value.
    Undetermined,
}

impl From<Option<Admissibility>> for Verdict {
    fn from(a: Option<Admissibility>) -> Self {
        match a {
            Some(Admissibility::Admissible) => Verdict::Admissible,
            Some(Admissibility::Violation(n)) => Verdict::Violation(n),
            None => Verdict::Undetermined,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Admissible => f.write_str("admissible"),
            Verdict::Violation(n) => write!(f, "violation({n})"),
            Verdict::Undetermined => f.write_str("undetermined"),
        }
    }
}

impl FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "admissible" => Ok(Verdict::Admissible),
            "undetermined" => Ok(Verdict::Undetermined),
            _ => s
                .strip_prefix("violation(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|n| n.parse().ok())
                .map(Verdict::Violation)
                .ok_or_else(|| format!("unknown verdict {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportEntry {
    pub label: String,
    pub value: TruthValue,
    pub rule: Rule,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthReport {
    pub kind: EvalKind,
    pub state: String,
    pub entries: Vec<ReportEntry>,
    pub contexts: Vec<(String, Verdict)>,
}

impl TruthReport {
    pub fn tuple(&self) -> String {
        let bits: Vec<&str> = self.entries.iter().map(|e| e.value.as_bit()).collect();
        bits.join(", ")
    }

    pub fn violations(&self) -> Vec<(&str, usize)> {
        self.contexts
            .iter()
            .filter_map(|(c, v)| match v {
                Verdict::Violation(n) => Some((c.as_str(), *n)),
                _ => None,
            })
            .collect()
    }

    fn contradiction_line(&self) -> String {
        let v = self.violations();
        if v.is_empty() {
            return "none".into();
        }
        let parts: Vec<String> = v
            .iter()
            .map(|(c, n)| format!("{c} violation({n})"))
            .collect();
        format!("inadmissible bivaluation on {}", parts.join(", "))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Inverse of [`TruthReport::to_text`]. Derived lines (`tuple`,
    /// `contradiction`) are checked against the parsed content.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut kind = None;
        let mut state = None;
        let mut entries: Vec<ReportEntry> = Vec::new();
        let mut contexts = Vec::new();
        let mut tuple = None;
        let mut contradiction = None;
        for (i, line) in text.lines().enumerate() {
            let err = |m: String| format!("line {}: {m}", i + 1);
            if line.trim().is_empty() {
                continue;
            }
            if let Some(d) = line.strip_prefix("  diagnostic: ") {
                entries
                    .last_mut()
                    .ok_or_else(|| err("diagnostic before any entry".into()))?
                    .diagnostics
                    .push(d.to_string());
                continue;
            }
            let (key, rest) = line
                .split_once(": ")
                .or_else(|| line.strip_suffix(':').map(|k| (k, "")))
                .ok_or_else(|| err(format!("expected `key: value`, got {line:?}")))?;
            match key {
                "mode" => kind = Some(rest.parse::<EvalKind>().map_err(err)?),
                "state" => state = Some(rest.to_string()),
                "entry" => {
                    let f: Vec<&str> = rest.split(" | ").collect();
                    let [label, mode, value, rule] = f[..] else {
                        return Err(err(format!("entry needs 4 fields, got {}", f.len())));
                    };
                    if Some(mode.parse::<EvalKind>().map_err(&err)?) != kind {
                        return Err(err(format!("entry mode {mode:?} differs from report mode")));
                    }
                    entries.push(ReportEntry {
                        label: label.to_string(),
                        value: value.parse().map_err(&err)?,
                        rule: rule.parse().map_err(&err)?,
                        diagnostics: Vec::new(),
                    });
                }
                "tuple" => tuple = Some(rest.to_string()),
                "context" => {
                    let (name, verdict) = rest
                        .split_once(" | ")
                        .ok_or_else(|| err("context needs `name | verdict`".into()))?;
                    contexts.push((name.to_string(), verdict.parse().map_err(&err)?));
                }
                "contradiction" => contradiction = Some(rest.to_string()),
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        let report = TruthReport {
            kind: kind.ok_or("missing `mode` line")?,
            state: state.ok_or("missing `state` line")?,
            entries,
            contexts,
        };
        if tuple.as_deref() != Some(report.tuple().as_str()) {
            return Err(format!("tuple line {tuple:?} does not match the entries"));
        }
        if contradiction.as_deref() != Some(report.contradiction_line().as_str()) {
            return Err(format!(
                "contradiction line {contradiction:?} does not match the context verdicts"
            ));
        }
        Ok(report)
    }
}

impl fmt::Display for TruthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode: {}", self.kind)?;
        writeln!(f, "state: {}", self.state)?;
        for e in &self.entries {
            writeln!(
                f,
                "entry: {} | {} | {} | {}",
                e.label, self.kind, e.value, e.rule
            )?;
            for d in &e.diagnostics {
                writeln!(f, "  diagnostic: {d}")?;
            }
        }
        writeln!(f, "tuple: {}", self.tuple())?;
        for (name, verdict) in &self.contexts {
            writeln!(f, "context: {name} | {verdict}")?;
        }
        writeln!(f, "contradiction: {}", self.contradiction_line())
    }
}
