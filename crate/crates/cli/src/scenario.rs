//! Scenario files: a TOML document naming vectors, subspaces, contexts, a
//! state and the propositions to evaluate.
//!
//! ```toml
//! ambient_dim = 2
//! mode = "unpasted"
//! collection = ["Sigma_z", "Sigma_x"]
//! state = { subspace = "H_z+" }
//!
//! [vectors]
//! up = ["1", "0"]
//!
//! [subspaces]
//! "H_z+" = { span = ["up"] }
//! Z1 = { tensor = ["H_z+", "H_z-"] }
//!
//! [contexts]
//! Sigma_z = ["H_z+", "H_z-"]
//!
//! [[propositions]]
//! subspace = "H_x+"
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;

use qlogic_core::logic::{
    build_context, conjunction, ConjunctionMode, Context, ContextCollection, Mode, Proposition,
};
use qlogic_core::{GaussianRational, Subspace, Vector};
use serde::Deserialize;
use toml::Spanned;

use crate::error::{CliError, CliResult};

type Name = Spanned<String>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    ambient_dim: Spanned<usize>,
    mode: Option<Name>,
    collection: Option<Vec<Name>>,
    state: Spanned<RawState>,
    #[serde(default)]
    vectors: BTreeMap<String, Vec<Spanned<String>>>,
    #[serde(default)]
    subspaces: BTreeMap<String, Spanned<RawSubspace>>,
    #[serde(default)]
    contexts: BTreeMap<String, Vec<Name>>,
    #[serde(default)]
    propositions: Vec<Spanned<RawProposition>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawState {
    vector: Option<Name>,
    subspace: Option<Name>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    span: Option<Vec<Name>>,
    tensor: Option<Vec<Name>>,
    /// Required only for an empty span.
    dim: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProposition {
    label: Option<Name>,
    subspace: Option<Name>,
    tensor: Option<Vec<Name>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum State {
    Vector { name: String, vector: Vector },
    Subspace { name: String, subspace: Subspace },
}

/// A fully resolved and validated scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub ambient_dim: usize,
    pub mode: Option<Mode>,
    pub vectors: BTreeMap<String, Vector>,
    pub subspaces: BTreeMap<String, Subspace>,
    pub contexts: BTreeMap<String, Context>,
    /// Context names forming the collection, in file order.
    pub collection: Vec<String>,
    pub state: State,
    pub propositions: Vec<Proposition>,
}

impl Scenario {
    pub fn parse(src: &str) -> CliResult<Self> {
        let raw: RawScenario = toml::from_str(src)
            .map_err(|e| CliError::Parse(e.to_string().trim_end().to_string()))?;
        Resolver::new(src, raw).resolve()
    }

    pub fn context_collection(&self) -> ContextCollection {
        ContextCollection::from_contexts(self.collection.iter().map(|c| self.contexts[c].clone()))
            .expect("collection members were validated against the ambient dimension")
    }

    /// First subspace name (in sorted order) bound to `s`, if any.
    pub fn name_of(&self, s: &Subspace) -> Option<&str> {
        self.subspaces
            .iter()
            .find(|(_, v)| *v == s)
            .map(|(k, _)| k.as_str())
    }
}

struct Resolver<'a> {
    src: &'a str,
    raw: RawScenario,
    n: usize,
    vectors: BTreeMap<String, Vector>,
    subspaces: BTreeMap<String, Subspace>,
}

fn line_of(src: &str, span: Range<usize>) -> usize {
    src[..span.start.min(src.len())].matches('\n').count() + 1
}

impl<'a> Resolver<'a> {
    fn new(src: &'a str, raw: RawScenario) -> Self {
        let n = *raw.ambient_dim.get_ref();
        Self {
            src,
            raw,
            n,
            vectors: BTreeMap::new(),
            subspaces: BTreeMap::new(),
        }
    }

    fn at(&self, span: Range<usize>, field: &str) -> String {
        format!("line {}, {field}", line_of(self.src, span))
    }

    fn resolve(mut self) -> CliResult<Scenario> {
        if self.n == 0 {
            return Err(CliError::Validation(format!(
                "{}: ambient dimension must be positive",
                self.at(self.raw.ambient_dim.span(), "ambient_dim")
            )));
        }
        let mode = match &self.raw.mode {
            Some(m) => Some(
                m.get_ref()
                    .parse::<Mode>()
                    .map_err(|e| CliError::Parse(format!("{}: {e}", self.at(m.span(), "mode"))))?,
            ),
            None => None,
        };
        self.resolve_vectors()?;
        let names: Vec<String> = self.raw.subspaces.keys().cloned().collect();
        for name in &names {
            self.resolve_subspace(name, &mut BTreeSet::new())?;
        }
        let contexts = self.resolve_contexts()?;
        let collection = self.resolve_collection(&contexts)?;
        let state = self.resolve_state()?;
        let propositions = self.resolve_propositions()?;
        Ok(Scenario {
            ambient_dim: self.n,
            mode,
            vectors: self.vectors,
            subspaces: self.subspaces,
            contexts,
            collection,
            state,
            propositions,
        })
    }

    fn resolve_vectors(&mut self) -> CliResult<()> {
        for (name, entries) in &self.raw.vectors {
            check_name(name, "vectors")?;
            let mut v = Vec::with_capacity(entries.len());
            for (i, e) in entries.iter().enumerate() {
                let x: GaussianRational = e.get_ref().parse().map_err(|err| {
                    CliError::from_core(&self.at(e.span(), &format!("vectors.{name}[{i}]")), err)
                })?;
                v.push(x);
            }
            self.vectors.insert(name.clone(), v);
        }
        Ok(())
    }

    fn vector(&self, name: &Name, field: &str) -> CliResult<&Vector> {
        self.vectors.get(name.get_ref()).ok_or_else(|| {
            CliError::Parse(format!(
                "{}: unknown vector {:?}",
                self.at(name.span(), field),
                name.get_ref()
            ))
        })
    }

    fn resolve_subspace(
        &mut self,
        name: &str,
        visiting: &mut BTreeSet<String>,
    ) -> CliResult<Subspace> {
        if let Some(s) = self.subspaces.get(name) {
            return Ok(s.clone());
        }
        check_name(name, "subspaces")?;
        if !visiting.insert(name.to_string()) {
            return Err(CliError::Validation(format!(
                "subspaces.{name}: tensor definition refers back to itself"
            )));
        }
        let (span, by_span, by_tensor, dim) = {
            let raw = &self.raw.subspaces[name];
            let r = raw.get_ref();
            (raw.span(), r.span.clone(), r.tensor.clone(), r.dim)
        };
        let field = format!("subspaces.{name}");
        let subspace = match (by_span, by_tensor) {
            (Some(vectors), None) => {
                let mut rows = Vec::with_capacity(vectors.len());
                for (i, v) in vectors.iter().enumerate() {
                    rows.push(self.vector(v, &format!("{field}.span[{i}]"))?.clone());
                }
                let n = match (rows.first(), dim) {
                    (Some(r), _) => r.len(),
                    (None, Some(d)) => d,
                    (None, None) => self.n,
                };
                Subspace::from_span(n, rows)
                    .map_err(|e| CliError::from_core(&self.at(span.clone(), &field), e))?
            }
            (None, Some(factors)) if factors.len() == 2 => {
                let mut parts = Vec::with_capacity(2);
                for (i, f) in factors.iter().enumerate() {
                    if !self.raw.subspaces.contains_key(f.get_ref()) {
                        return Err(CliError::Parse(format!(
                            "{}: unknown subspace {:?}",
                            self.at(f.span(), &format!("{field}.tensor[{i}]")),
                            f.get_ref()
                        )));
                    }
                    parts.push(self.resolve_subspace(f.get_ref(), visiting)?);
                }
                parts[0].tensor(&parts[1])
            }
            _ => {
                return Err(CliError::Parse(format!(
                    "{}: expected exactly one of `span = [...]` or `tensor = [a, b]`",
                    self.at(span, &field)
                )))
            }
        };
        visiting.remove(name);
        self.subspaces.insert(name.to_string(), subspace.clone());
        Ok(subspace)
    }

    fn subspace(&self, name: &Name, field: &str) -> CliResult<&Subspace> {
        self.subspaces.get(name.get_ref()).ok_or_else(|| {
            CliError::Parse(format!(
                "{}: unknown subspace {:?}",
                self.at(name.span(), field),
                name.get_ref()
            ))
        })
    }

    fn ambient(&self, s: &Subspace, span: Range<usize>, field: &str) -> CliResult<()> {
        if s.ambient_dim() != self.n {
            return Err(CliError::Validation(format!(
                "{}: subspace lives in C^{}, scenario is C^{}",
                self.at(span, field),
                s.ambient_dim(),
                self.n
            )));
        }
        Ok(())
    }

    fn resolve_contexts(&self) -> CliResult<BTreeMap<String, Context>> {
        let mut out = BTreeMap::new();
        for (name, members) in &self.raw.contexts {
            check_name(name, "contexts")?;
            let mut props = Vec::with_capacity(members.len());
            for (i, m) in members.iter().enumerate() {
                let field = format!("contexts.{name}[{i}]");
                let s = self.subspace(m, &field)?;
                self.ambient(s, m.span(), &field)?;
                props.push(Proposition::new(m.get_ref().clone(), s.clone()));
            }
            let line = members
                .first()
                .map(|m| line_of(self.src, m.span()))
                .unwrap_or(0);
            let ctx = build_context(name.clone(), props)
                .map_err(|e| CliError::from_core(&format!("line {line}, contexts.{name}"), e))?;
            out.insert(name.clone(), ctx);
        }
        Ok(out)
    }

    fn resolve_collection(&self, contexts: &BTreeMap<String, Context>) -> CliResult<Vec<String>> {
        let Some(names) = &self.raw.collection else {
            return Ok(contexts.keys().cloned().collect());
        };
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for (i, c) in names.iter().enumerate() {
            let field = format!("collection[{i}]");
            if !contexts.contains_key(c.get_ref()) {
                return Err(CliError::Parse(format!(
                    "{}: unknown context {:?}",
                    self.at(c.span(), &field),
                    c.get_ref()
                )));
            }
            if out.contains(c.get_ref()) {
                return Err(CliError::Validation(format!(
                    "{}: context {:?} listed twice",
                    self.at(c.span(), &field),
                    c.get_ref()
                )));
            }
            out.push(c.get_ref().clone());
        }
        Ok(out)
    }

    fn resolve_state(&self) -> CliResult<State> {
        let state = &self.raw.state;
        match (&state.get_ref().vector, &state.get_ref().subspace) {
            (Some(v), None) => {
                let vector = self.vector(v, "state.vector")?.clone();
                if vector.len() != self.n {
                    return Err(CliError::Validation(format!(
                        "{}: vector has {} entries, scenario is C^{}",
                        self.at(v.span(), "state.vector"),
                        vector.len(),
                        self.n
                    )));
                }
                if vector.iter().all(GaussianRational::is_zero) {
                    return Err(CliError::from_core(
                        &self.at(v.span(), "state.vector"),
                        qlogic_core::Error::ZeroState,
                    ));
                }
                Ok(State::Vector {
                    name: v.get_ref().clone(),
                    vector,
                })
            }
            (None, Some(s)) => {
                let subspace = self.subspace(s, "state.subspace")?.clone();
                self.ambient(&subspace, s.span(), "state.subspace")?;
                if subspace.is_trivial() {
                    return Err(CliError::from_core(
                        &self.at(s.span(), "state.subspace"),
                        qlogic_core::Error::TrivialState,
                    ));
                }
                Ok(State::Subspace {
                    name: s.get_ref().clone(),
                    subspace,
                })
            }
            _ => Err(CliError::Parse(format!(
                "{}: expected exactly one of `vector` or `subspace`",
                self.at(state.span(), "state")
            ))),
        }
    }

    fn resolve_propositions(&self) -> CliResult<Vec<Proposition>> {
        let mut out: Vec<Proposition> = Vec::with_capacity(self.raw.propositions.len());
        for (i, raw) in self.raw.propositions.iter().enumerate() {
            let field = format!("propositions[{i}]");
            let r = raw.get_ref();
            let mut prop = match (&r.subspace, &r.tensor) {
                (Some(s), None) => Proposition::new(
                    s.get_ref().clone(),
                    self.subspace(s, &format!("{field}.subspace"))?.clone(),
                ),
                (None, Some(pair)) if pair.len() == 2 => {
                    let mut parts = Vec::with_capacity(2);
                    for (j, f) in pair.iter().enumerate() {
                        let s = self.subspace(f, &format!("{field}.tensor[{j}]"))?;
                        parts.push(Proposition::new(f.get_ref().clone(), s.clone()));
                    }
                    conjunction(&parts[0], &parts[1], ConjunctionMode::CrossSpace)
                        .map_err(|e| CliError::from_core(&self.at(raw.span(), &field), e))?
                }
                _ => {
                    return Err(CliError::Parse(format!(
                        "{}: expected exactly one of `subspace = name` or `tensor = [a, b]`",
                        self.at(raw.span(), &field)
                    )))
                }
            };
            if let Some(label) = &r.label {
                check_name(label.get_ref(), &format!("{field}.label"))?;
                prop.label = label.get_ref().clone();
            }
            self.ambient(&prop.subspace, raw.span(), &field)?;
            if out.iter().any(|p| p.label == prop.label) {
                return Err(CliError::Validation(format!(
                    "{}: duplicate proposition label {:?}",
                    self.at(raw.span(), &field),
                    prop.label
                )));
            }
            out.push(prop);
        }
        Ok(out)
    }
}

/// Names end up as report fields, so they must stay on one line and avoid
/// the `|` separator.
fn check_name(name: &str, field: &str) -> CliResult<()> {
    if name.trim().is_empty() || name.contains(['|', '\n', '\r']) || name != name.trim() {
        return Err(CliError::Parse(format!(
            "{field}: invalid name {name:?} (non-empty, no '|', no line breaks, no surrounding spaces)"
        )));
    }
    Ok(())
}
