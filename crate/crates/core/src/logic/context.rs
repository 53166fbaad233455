use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::subspace::{ProjectionOp, Subspace};

/// An experimentally verifiable proposition, represented by a subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Proposition {
    pub label: String,
    pub subspace: Subspace,
}

impl Proposition {
    pub fn new(label: impl Into<String>, subspace: Subspace) -> Self {
        Self {
            label: label.into(),
            subspace,
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// How the two conjuncts of `P ⊓ Q` are combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjunctionMode {
    /// Both propositions concern one system: intersect the subspaces.
    SameSpace,
    /// Propositions about two subsystems: take the tensor product.
    CrossSpace,
}

pub fn conjunction(p: &Proposition, q: &Proposition, mode: ConjunctionMode) -> Result<Proposition> {
    let subspace = match mode {
        ConjunctionMode::SameSpace => p.subspace.meet(&q.subspace)?,
        ConjunctionMode::CrossSpace => p.subspace.tensor(&q.subspace),
    };
    Ok(Proposition::new(
        format!("({} ⊓ {})", p.label, q.label),
        subspace,
    ))
}

/// Whether `P` maps `S` into itself. Checking the basis suffices by linearity.
pub fn invariant_check(s: &Subspace, p: &ProjectionOp) -> Result<bool> {
    if s.ambient_dim() != p.dim() {
        return Err(Error::Shape(format!(
            "subspace of C^{} against a {}x{} projection",
            s.ambient_dim(),
            p.dim(),
            p.dim()
        )));
    }
    for v in s.basis() {
        if !s.contains(&p.apply(v)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A maximal family of compatible propositions: nontrivial, mutually
/// orthogonal, and resolving the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    label: String,
    members: Vec<Proposition>,
    projections: Vec<ProjectionOp>,
}

impl Context {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn members(&self) -> &[Proposition] {
        &self.members
    }

    pub fn projections(&self) -> &[ProjectionOp] {
        &self.projections
    }

    pub fn ambient_dim(&self) -> usize {
        self.members[0].subspace.ambient_dim()
    }

    pub fn member(&self, label: &str) -> Option<&Proposition> {
        self.members.iter().find(|m| m.label == label)
    }
}

pub fn build_context(label: impl Into<String>, members: Vec<Proposition>) -> Result<Context> {
    let label = label.into();
    if members.len() < 2 {
        return Err(Error::TooFewMembers {
            context: label,
            count: members.len(),
        });
    }
    let mut seen = HashSet::new();
    for m in &members {
        if !seen.insert(m.label.as_str()) {
            return Err(Error::DuplicateLabel(m.label.clone()));
        }
    }
    let n = members[0].subspace.ambient_dim();
    if let Some(m) = members.iter().find(|m| m.subspace.ambient_dim() != n) {
        return Err(Error::Shape(format!(
            "context {label:?}: member {:?} lives in C^{}, expected C^{n}",
            m.label,
            m.subspace.ambient_dim()
        )));
    }
    if let Some(m) = members.iter().find(|m| m.subspace.is_trivial()) {
        return Err(Error::TrivialMember {
            context: label,
            member: m.label.clone(),
        });
    }

    let projections: Vec<ProjectionOp> = members.iter().map(|m| m.subspace.projection()).collect();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let ab = projections[i].matrix().matmul(projections[j].matrix())?;
            let ba = projections[j].matrix().matmul(projections[i].matrix())?;
            if !ab.is_zero() || !ba.is_zero() {
                return Err(Error::NotOrthogonal {
                    context: label,
                    first: members[i].label.clone(),
                    second: members[j].label.clone(),
                });
            }
        }
    }

    let mut sum = ExactMatrix::zeros(n, n);
    for p in &projections {
        sum = sum.add(p.matrix())?;
    }
    if sum != ExactMatrix::identity(n) {
        return Err(Error::Incomplete { context: label });
    }

    Ok(Context {
        label,
        members,
        projections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(v: &[i64]) -> Subspace {
        Subspace::from_int_span(v.len(), &[v]).unwrap()
    }

    fn prop(label: &str, v: &[i64]) -> Proposition {
        Proposition::new(label, line(v))
    }

    #[test]
    fn z_context_is_valid() {
        let ctx = build_context(
            "Sigma_z",
            vec![prop("P_z+", &[1, 0]), prop("P_z-", &[0, 1])],
        )
        .unwrap();
        assert_eq!(ctx.members().len(), 2);
        assert_eq!(ctx.ambient_dim(), 2);
    }

    #[test]
    fn z_and_x_are_not_orthogonal() {
        let err =
            build_context("bad", vec![prop("P_z+", &[1, 0]), prop("P_x+", &[1, 1])]).unwrap_err();
        assert!(matches!(err, Error::NotOrthogonal { .. }));
    }

    #[test]
    fn single_member_rejected() {
        let err = build_context("bad", vec![prop("P_z+", &[1, 0])]).unwrap_err();
        assert_eq!(
            err,
            Error::TooFewMembers {
                context: "bad".into(),
                count: 1
            }
        );
    }

    #[test]
    fn trivial_member_rejected() {
        let err = build_context(
            "bad",
            vec![
                prop("P_z+", &[1, 0]),
                Proposition::new("zero", Subspace::zero(2)),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::TrivialMember { .. }));
        let err = build_context(
            "bad",
            vec![
                prop("P_z+", &[1, 0]),
                Proposition::new("all", Subspace::full(2)),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::TrivialMember { .. }));
    }

    #[test]
    fn incomplete_context_rejected() {
        let err =
            build_context("bad", vec![prop("e1", &[1, 0, 0]), prop("e2", &[0, 1, 0])]).unwrap_err();
        assert_eq!(
            err,
            Error::Incomplete {
                context: "bad".into()
            }
        );
    }

    #[test]
    fn rank_two_member_context() {
        let plane = Subspace::from_int_span(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let ctx = build_context(
            "mixed",
            vec![Proposition::new("plane", plane), prop("e3", &[0, 0, 1])],
        );
        assert!(ctx.is_ok());
    }

    #[test]
    fn invariant_check_examples() {
        let p = line(&[1, 1]).projection();
        assert!(invariant_check(&p.range(), &p).unwrap());
        assert!(invariant_check(&p.kernel(), &p).unwrap());
        let zp = line(&[1, 0]).projection();
        assert!(!invariant_check(&line(&[1, 1]), &zp).unwrap());
        assert!(invariant_check(&Subspace::zero(2), &zp).unwrap());
        assert!(invariant_check(&Subspace::full(2), &zp).unwrap());
        assert!(invariant_check(&Subspace::full(3), &zp).is_err());
    }

    #[test]
    fn conjunction_examples() {
        let z1 = conjunction(
            &prop("P_1z+", &[1, 0]),
            &prop("P_2z-", &[0, 1]),
            ConjunctionMode::CrossSpace,
        )
        .unwrap();
        assert_eq!(z1.subspace, line(&[0, 1, 0, 0]));
        assert_eq!(z1.label, "(P_1z+ ⊓ P_2z-)");

        let p = prop("P", &[1, 1]);
        assert_eq!(
            conjunction(&p, &p, ConjunctionMode::SameSpace)
                .unwrap()
                .subspace,
            p.subspace
        );

        let never = conjunction(
            &prop("P_z+", &[1, 0]),
            &prop("P_z-", &[0, 1]),
            ConjunctionMode::SameSpace,
        )
        .unwrap();
        assert!(never.subspace.is_zero());

        assert!(conjunction(&p, &prop("Q", &[1, 0, 0]), ConjunctionMode::SameSpace).is_err());
    }
}
