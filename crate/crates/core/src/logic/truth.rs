//! Factual and counter-factual truth values.
//!
//! A factual value asks whether a concrete state vector lies in the
//! proposition's subspace. A counter-factual value is read off the order
//! relation between the subspace the state occupies and the proposition's
//! subspace. When blocks are pasted into one lattice every pair of subspaces
//! is ordered; without pasting only pairs inside one block are, and every
//! other pair is indeterminate.

use std::fmt;
use std::str::FromStr;

use super::block::{locate_pair, ContextCollection, Location};
use super::context::Proposition;
use crate::error::{Error, Result};
use crate::linalg::GaussianRational;
use crate::subspace::{Order, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TruthValue {
    True,
    False,
    /// Printed `0/0`.
    Indeterminate,
}

impl TruthValue {
    pub fn is_definite(self) -> bool {
        self != TruthValue::Indeterminate
    }

    /// Bivaluation digit: `1`, `0`, or `0/0`.
    pub fn as_bit(self) -> &'static str {
        match self {
            TruthValue::True => "1",
            TruthValue::False => "0",
            TruthValue::Indeterminate => "0/0",
        }
    }

    pub fn from_bit(s: &str) -> Option<Self> {
        match s {
            "1" => Some(TruthValue::True),
            "0" => Some(TruthValue::False),
            "0/0" => Some(TruthValue::Indeterminate),
            _ => None,
        }
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> Self {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue::True => "true",
            TruthValue::False => "false",
            TruthValue::Indeterminate => "0/0",
        })
    }
}

impl FromStr for TruthValue {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "true" => Ok(TruthValue::True),
            "false" => Ok(TruthValue::False),
            "0/0" => Ok(TruthValue::Indeterminate),
            _ => Err(format!("unknown truth value {s:?}")),
        }
    }
}

/// The valuation rule that produced a truth value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// The state vector lies in the proposition's subspace.
    Membership,
    /// The state vector lies outside the proposition's subspace.
    NonMembership,
    /// State subspace below or equal to the proposition's subspace.
    Inclusion,
    /// Neither subspace contains the other.
    Incomparable,
    /// State subspace strictly above the proposition's subspace; membership
    /// depends on the particular vector.
    ReverseInclusion,
    /// Unpasted regime, no block holds both subspaces.
    NoCommonBlock,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::Membership,
        Rule::NonMembership,
        Rule::Inclusion,
        Rule::Incomparable,
        Rule::ReverseInclusion,
        Rule::NoCommonBlock,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Rule::Membership => "membership",
            Rule::NonMembership => "non-membership",
            Rule::Inclusion => "inclusion",
            Rule::Incomparable => "incomparable",
            Rule::ReverseInclusion => "reverse-inclusion",
            Rule::NoCommonBlock => "no-common-block",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Rule::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| format!("unknown rule {s:?}"))
    }
}

/// Whether the blocks of a collection are pasted into one lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Pasted,
    Unpasted,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Pasted => "pasted",
            Mode::Unpasted => "unpasted",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pasted" => Ok(Mode::Pasted),
            "unpasted" => Ok(Mode::Unpasted),
            _ => Err(format!("unknown mode {s:?} (expected pasted or unpasted)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: TruthValue,
    pub rule: Rule,
    pub diagnostics: Vec<String>,
}

impl Evaluation {
    fn new(value: TruthValue, rule: Rule) -> Self {
        Self {
            value,
            rule,
            diagnostics: Vec::new(),
        }
    }
}

pub const OVERLAP_WARNING: &str =
    "incomparable subspaces share a nonzero vector; falsity assumes the state is not in their intersection";

pub fn evaluate_factual(p: &Proposition, psi: &[GaussianRational]) -> Result<Evaluation> {
    Ok(if p.subspace.contains_state(psi)? {
        Evaluation::new(TruthValue::True, Rule::Membership)
    } else {
        Evaluation::new(TruthValue::False, Rule::NonMembership)
    })
}

fn check_state(state: &Subspace) -> Result<()> {
    if state.is_trivial() {
        return Err(Error::TrivialState);
    }
    Ok(())
}

fn by_order(p: &Proposition, state: &Subspace) -> Result<Evaluation> {
    Ok(match state.classify_order(&p.subspace)? {
        Order::LeqStrict | Order::Equal => Evaluation::new(TruthValue::True, Rule::Inclusion),
        Order::Incomparable => {
            let mut eval = Evaluation::new(TruthValue::False, Rule::Incomparable);
            if !state.meet(&p.subspace)?.is_zero() {
                eval.diagnostics.push(OVERLAP_WARNING.to_string());
            }
            eval
        }
        Order::GeqStrict => Evaluation::new(TruthValue::Indeterminate, Rule::ReverseInclusion),
    })
}

/// Counter-factual value when all blocks are pasted: every pair is ordered.
pub fn evaluate_counterfactual_pasted(p: &Proposition, state: &Subspace) -> Result<Evaluation> {
    check_state(state)?;
    by_order(p, state)
}

/// Counter-factual value in an unpasted collection: the order relation is
/// only consulted inside a block that holds both subspaces.
pub fn evaluate_counterfactual_unpasted(
    p: &Proposition,
    state: &Subspace,
    collection: &ContextCollection,
) -> Result<Evaluation> {
    check_state(state)?;
    match locate_pair(collection, state, &p.subspace) {
        Location::Cohabiting(_) => by_order(p, state),
        Location::NoCommonBlock => Ok(Evaluation::new(
            TruthValue::Indeterminate,
            Rule::NoCommonBlock,
        )),
    }
}

pub fn evaluate_counterfactual(
    p: &Proposition,
    state: &Subspace,
    mode: Mode,
    collection: &ContextCollection,
) -> Result<Evaluation> {
    match mode {
        Mode::Pasted => evaluate_counterfactual_pasted(p, state),
        Mode::Unpasted => evaluate_counterfactual_unpasted(p, state, collection),
    }
}

/// Counter-factual truth values of a list of propositions at one state subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    pub mode: Mode,
    pub state_subspace: Subspace,
    entries: Vec<(String, Evaluation)>,
}

impl Valuation {
    pub fn evaluate<'a>(
        propositions: impl IntoIterator<Item = &'a Proposition>,
        state: &Subspace,
        mode: Mode,
        collection: &ContextCollection,
    ) -> Result<Self> {
        let entries = propositions
            .into_iter()
            .map(|p| {
                Ok((
                    p.label.clone(),
                    evaluate_counterfactual(p, state, mode, collection)?,
                ))
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            mode,
            state_subspace: state.clone(),
            entries,
        })
    }

    pub fn get(&self, label: &str) -> Option<TruthValue> {
        self.evaluation(label).map(|e| e.value)
    }

    pub fn evaluation(&self, label: &str) -> Option<&Evaluation> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, e)| e)
    }

    pub fn entries(&self) -> &[(String, Evaluation)] {
        &self.entries
    }
}
