use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use qlogic_core::epr::{build_epr, derive_chain, parse_axis_pair, truth_population, ProductState};
use qlogic_core::linalg::format_vec;
use qlogic_core::logic::{
    bivaluation_on, build_block, check_admissibility, evaluate_counterfactual, evaluate_factual,
    paste, Admissibility, Mode, Valuation,
};
use qlogic_core::Subspace;

use crate::dot::HasseDiagram;
use crate::error::{CliError, CliResult};
use crate::report::{EvalKind, ReportEntry, TruthReport, Verdict};
use crate::scenario::{Scenario, State};

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn load_scenario(path: &Path) -> CliResult<Scenario> {
    Scenario::parse(&read_file(path)?).map_err(|e| match e {
        CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
        CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
    })
}

/// Values every proposition of the scenario. A vector state is valued
/// factually; a subspace state counter-factually under `mode`, falling back
/// to the file's mode and then to unpasted.
pub fn evaluate(scn: &Scenario, mode: Option<Mode>) -> CliResult<TruthReport> {
    match &scn.state {
        State::Vector { name, vector } => {
            let mut entries = Vec::with_capacity(scn.propositions.len());
            for p in &scn.propositions {
                let e =
                    evaluate_factual(p, vector).map_err(|e| CliError::from_core(&p.label, e))?;
                entries.push(entry(&p.label, e));
            }
            Ok(TruthReport {
                kind: EvalKind::Factual,
                state: format!("vector {name} = {}", format_vec(vector)),
                entries,
                contexts: Vec::new(),
            })
        }
        State::Subspace { name, subspace } => {
            let mode = mode.or(scn.mode).unwrap_or(Mode::Unpasted);
            let coll = scn.context_collection();
            let mut entries = Vec::with_capacity(scn.propositions.len());
            for p in &scn.propositions {
                let e = evaluate_counterfactual(p, subspace, mode, &coll)
                    .map_err(|e| CliError::from_core(&p.label, e))?;
                entries.push(entry(&p.label, e));
            }
            let mut contexts = Vec::with_capacity(coll.blocks().len());
            for ctx in coll.contexts() {
                let val = Valuation::evaluate(ctx.members(), subspace, mode, &coll)
                    .map_err(|e| CliError::from_core(ctx.label(), e))?;
                let verdict = match bivaluation_on(ctx, &val) {
                    Some(a) => Some(
                        check_admissibility(ctx, &a)
                            .map_err(|e| CliError::from_core(ctx.label(), e))?,
                    ),
                    None => None,
                };
                contexts.push((ctx.label().to_string(), Verdict::from(verdict)));
            }
            Ok(TruthReport {
                kind: EvalKind::Counterfactual(mode),
                state: format!("subspace {name} = {subspace}"),
                entries,
                contexts,
            })
        }
    }
}

fn entry(label: &str, e: qlogic_core::logic::Evaluation) -> ReportEntry {
    ReportEntry {
        label: label.to_string(),
        value: e.value,
        rule: e.rule,
        diagnostics: e.diagnostics,
    }
}

pub fn cmd_eval(path: &Path, mode: Option<Mode>) -> CliResult<String> {
    Ok(evaluate(&load_scenario(path)?, mode)?.to_text())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeTarget {
    Context(String),
    Pasted,
}

fn node_label(scn: &Scenario, s: &Subspace) -> String {
    scn.name_of(s)
        .map(str::to_string)
        .unwrap_or_else(|| s.canonical_string())
}

pub fn lattice(scn: &Scenario, target: &LatticeTarget) -> CliResult<HasseDiagram> {
    let elements: Vec<Subspace> = match target {
        LatticeTarget::Context(name) => {
            let ctx = scn.contexts.get(name).ok_or_else(|| {
                CliError::Validation(format!(
                    "--context: unknown context {name:?} (defined: {})",
                    scn.contexts.keys().cloned().collect::<Vec<_>>().join(", ")
                ))
            })?;
            build_block(ctx.clone()).elements().to_vec()
        }
        LatticeTarget::Pasted => paste(scn.context_collection()).elements().to_vec(),
    };
    Ok(HasseDiagram::new(
        elements.into_iter().map(|s| (node_label(scn, &s), s)),
    ))
}

pub fn cmd_lattice(path: &Path, target: &LatticeTarget) -> CliResult<String> {
    let scn = load_scenario(path)?;
    let title = match target {
        LatticeTarget::Context(name) => name.as_str(),
        LatticeTarget::Pasted => "pasted",
    };
    Ok(lattice(&scn, target)?.to_dot(title))
}

/// Parses `name = 0|1` lines; blank lines and `#` comments are skipped.
pub fn parse_assignment(text: &str) -> CliResult<BTreeMap<String, u8>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: String| CliError::Parse(format!("line {}: {m}", i + 1));
        let (name, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected `name = 0|1`, got {line:?}")))?;
        let name = name.trim().to_string();
        let value = match value.trim() {
            "0" => 0,
            "1" => 1,
            v => return Err(err(format!("value of {name:?} must be 0 or 1, got {v:?}"))),
        };
        if out.insert(name.clone(), value).is_some() {
            return Err(err(format!("{name:?} assigned twice")));
        }
    }
    Ok(out)
}

/// Admissibility of `assignment` on one named context, or on every context
/// of the collection.
pub fn admissibility(
    scn: &Scenario,
    assignment: &BTreeMap<String, u8>,
    context: Option<&str>,
) -> CliResult<Vec<(String, Admissibility)>> {
    for name in assignment.keys() {
        if !scn.subspaces.contains_key(name) && !scn.propositions.iter().any(|p| &p.label == name) {
            return Err(CliError::Parse(format!(
                "assignment: unknown proposition {name:?}"
            )));
        }
    }
    let names: Vec<&str> = match context {
        Some(c) if scn.contexts.contains_key(c) => vec![c],
        Some(c) => {
            return Err(CliError::Validation(format!(
                "--context: unknown context {c:?}"
            )));
        }
        None => scn.collection.iter().map(String::as_str).collect(),
    };
    names
        .into_iter()
        .map(|name| {
            let verdict = check_admissibility(&scn.contexts[name], assignment)
                .map_err(|e| CliError::from_core(&format!("context {name}"), e))?;
            Ok((name.to_string(), verdict))
        })
        .collect()
}

pub fn cmd_admissible(
    scenario: &Path,
    assignment: &Path,
    context: Option<&str>,
) -> CliResult<String> {
    let scn = load_scenario(scenario)?;
    let assignment = parse_assignment(&read_file(assignment)?).map_err(|e| match e {
        CliError::Parse(m) => CliError::Parse(format!("{}: {m}", assignment.display())),
        other => other,
    })?;
    let mut out = String::new();
    for (name, verdict) in admissibility(&scn, &assignment, context)? {
        out.push_str(&format!("context: {name} | {verdict}\n"));
    }
    Ok(out)
}

pub fn cmd_epr_demo(mode: Mode, axes: &str) -> CliResult<String> {
    let parse_err = |e: qlogic_core::Error| CliError::Parse(format!("--axes {axes:?}: {e}"));
    let (first, second) = parse_axis_pair(axes).map_err(parse_err)?;
    let s = build_epr(first, second).map_err(parse_err)?;
    let report = derive_chain(&s, mode).map_err(|e| CliError::from_core("epr-demo", e))?;
    let t1 =
        truth_population(&s, ProductState::Z1, mode).map_err(|e| CliError::from_core("T1", e))?;
    let t2 =
        truth_population(&s, ProductState::Z2, mode).map_err(|e| CliError::from_core("T2", e))?;
    Ok(format!("{report}T1 = {t1}\nT2 = {t2}\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignment_lines() {
        let a = parse_assignment("# header\nP = 1\n\nQ=0  # trailing\n").unwrap();
        assert_eq!(a["P"], 1);
        assert_eq!(a["Q"], 0);
        let err = parse_assignment("P = 1\nQ = 2\n").unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(parse_assignment("P = 1\nP = 0\n").is_err());
        assert!(parse_assignment("P 1\n").is_err());
    }

    #[test]
    fn epr_demo_tail() {
        let out = cmd_epr_demo(Mode::Unpasted, "z,x").unwrap();
        assert!(
            out.ends_with("T1 = (1, 0, 0/0, 0/0)\nT2 = (0, 1, 0/0, 0/0)\n"),
            "{out}"
        );
        let err = cmd_epr_demo(Mode::Unpasted, "z,q").unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
