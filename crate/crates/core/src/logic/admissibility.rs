use std::collections::BTreeMap;
use std::fmt;

use super::context::Context;
use super::truth::{TruthValue, Valuation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Admissibility {
    Admissible,
    /// The 0/1 values over the context summed to something other than one.
    Violation(usize),
}

impl Admissibility {
    pub fn is_admissible(self) -> bool {
        self == Admissibility::Admissible
    }
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissibility::Admissible => f.write_str("admissible"),
            Admissibility::Violation(sum) => write!(f, "violation({sum})"),
        }
    }
}

/// A bivaluation is admissible on a context when exactly one member is true.
pub fn check_admissibility(
    ctx: &Context,
    assignment: &BTreeMap<String, u8>,
) -> Result<Admissibility> {
    let mut sum = 0usize;
    for member in ctx.members() {
        let value = *assignment
            .get(&member.label)
            .ok_or_else(|| Error::MissingLabel(member.label.clone()))?;
        if value > 1 {
            return Err(Error::NotBivalent {
                label: member.label.clone(),
                value,
            });
        }
        sum += usize::from(value);
    }
    Ok(if sum == 1 {
        Admissibility::Admissible
    } else {
        Admissibility::Violation(sum)
    })
}

/// The 0/1 assignment a valuation induces on a context, or `None` when some
/// member is missing or indeterminate.
pub fn bivaluation_on(ctx: &Context, valuation: &Valuation) -> Option<BTreeMap<String, u8>> {
    ctx.members()
        .iter()
        .map(|m| match valuation.get(&m.label)? {
            TruthValue::True => Some((m.label.clone(), 1)),
            TruthValue::False => Some((m.label.clone(), 0)),
            TruthValue::Indeterminate => None,
        })
        .collect()
}
