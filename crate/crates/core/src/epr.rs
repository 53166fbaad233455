//! The two-particle spin-½ scenario: single-particle spin propositions along
//! two axes, the product-state propositions on `C^2 ⊗ C^2`, the derivation
//! chain that yields simultaneous definite values for incompatible spins, and
//! the truth populations of the four product propositions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{format_vec, inner, is_zero_vec, kron_vec, GaussianRational, Vector};
use crate::logic::{
    bivaluation_on, build_context, check_admissibility, conjunction, evaluate_counterfactual,
    evaluate_factual, Admissibility, ConjunctionMode, Context, ContextCollection, Mode,
    Proposition, Rule, TruthValue, Valuation,
};
use crate::subspace::Subspace;

/// A measurement axis, given by the (unnormalized) spinors of its two outcomes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinAxis {
    label: String,
    plus: Vector,
    minus: Vector,
}

impl SpinAxis {
    pub fn new(label: impl Into<String>, plus: Vector, minus: Vector) -> Result<Self> {
        let label = label.into();
        let invalid = |reason: &str| Error::InvalidAxis {
            label: label.clone(),
            reason: reason.to_string(),
        };
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(invalid("label must be non-empty ASCII alphanumeric"));
        }
        if plus.len() != 2 || minus.len() != 2 {
            return Err(invalid("spinors must have two components"));
        }
        if is_zero_vec(&plus) || is_zero_vec(&minus) {
            return Err(invalid("spinors must be nonzero"));
        }
        if !inner(&plus, &minus).is_zero() {
            return Err(invalid("spinors must be orthogonal"));
        }
        Ok(Self { label, plus, minus })
    }

    /// Builds the axis from its `+` spinor `(a, b)`; the `-` spinor is
    /// `(-conj(b), conj(a))`.
    pub fn from_plus(label: impl Into<String>, plus: Vector) -> Result<Self> {
        let minus = match plus.as_slice() {
            [a, b] => vec![-&b.conj(), a.conj()],
            _ => plus.clone(),
        };
        Self::new(label, plus, minus)
    }

    fn int(label: &str, plus: [i64; 2], minus: [(i64, i64); 2]) -> Self {
        Self {
            label: label.to_string(),
            plus: plus.iter().map(|&x| GaussianRational::from(x)).collect(),
            minus: minus
                .iter()
                .map(|&(re, im)| GaussianRational::from_integers(re, im))
                .collect(),
        }
    }

    pub fn z() -> Self {
        Self::int("z", [1, 0], [(0, 0), (1, 0)])
    }

    pub fn x() -> Self {
        Self::int("x", [1, 1], [(1, 0), (-1, 0)])
    }

    /// `(1, i)` and `(1, -i)`.
    pub fn y() -> Self {
        let mut axis = Self::int("y", [1, 0], [(1, 0), (0, -1)]);
        axis.plus[1] = GaussianRational::i();
        axis
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn plus(&self) -> &[GaussianRational] {
        &self.plus
    }

    pub fn minus(&self) -> &[GaussianRational] {
        &self.minus
    }
}

/// Accepts `z`, `x`, `y`, or `label=(a,b)` with `(a, b)` the `+` spinor in
/// scalar text format.
impl FromStr for SpinAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "z" => return Ok(Self::z()),
            "x" => return Ok(Self::x()),
            "y" => return Ok(Self::y()),
            _ => {}
        }
        let unsupported = || Error::InvalidAxis {
            label: s.to_string(),
            reason: "expected z, x, y or label=(a,b) with Gaussian-rational components".into(),
        };
        let (label, spinor) = s.split_once('=').ok_or_else(unsupported)?;
        let inner = spinor
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(unsupported)?;
        let components = inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vector>>()?;
        Self::from_plus(label.trim(), components)
    }
}

/// Splits `a,b` into two axes; commas inside parentheses do not separate.
pub fn parse_axis_pair(s: &str) -> Result<(SpinAxis, SpinAxis)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if split.is_some() {
                    split = None;
                    break;
                }
                split = Some(i);
            }
            _ => {}
        }
    }
    let Some(i) = split else {
        return Err(Error::InvalidAxis {
            label: s.to_string(),
            reason: "expected exactly two comma-separated axes".into(),
        });
    };
    Ok((s[..i].parse()?, s[i + 1..].parse()?))
}

/// The `+` and `-` outcome subspaces of an axis.
pub fn spin_subspaces(axis: &SpinAxis) -> (Subspace, Subspace) {
    let line = |v: &[GaussianRational]| {
        Subspace::from_span(2, vec![v.to_vec()]).expect("spinors have two components")
    };
    (line(&axis.plus), line(&axis.minus))
}

/// Spin propositions of one particle along one axis, and their context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParticleAxis {
    pub plus: Proposition,
    pub minus: Proposition,
    pub context: Context,
}

impl ParticleAxis {
    fn new(particle: u8, axis: &SpinAxis) -> Result<Self> {
        let (h_plus, h_minus) = spin_subspaces(axis);
        let q = axis.label();
        let plus = Proposition::new(format!("P_{particle}{q}+"), h_plus);
        let minus = Proposition::new(format!("P_{particle}{q}-"), h_minus);
        let context = build_context(
            format!("Sigma_{particle}{q}"),
            vec![plus.clone(), minus.clone()],
        )?;
        Ok(Self {
            plus,
            minus,
            context,
        })
    }
}

/// Which product state the pair occupies after the first measurement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductState {
    /// Particle 1 found `+` along the first axis, particle 2 therefore `-`.
    Z1,
    /// Particle 1 found `-` along the first axis, particle 2 therefore `+`.
    Z2,
}

/// Two spin-½ particles measured along a pair of axes.
///
/// The first axis plays the role of `z` (the axis actually measured), the
/// second the role of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EprScenario {
    axes: [SpinAxis; 2],
    /// Indexed `[particle - 1][axis]`.
    particles: [[ParticleAxis; 2]; 2],
    composite_contexts: [Context; 2],
    sequence: [Proposition; 4],
}

fn cross(p: &Proposition, q: &Proposition) -> Proposition {
    conjunction(p, q, ConjunctionMode::CrossSpace).expect("cross-space conjunction never fails")
}

pub fn build_epr(first: SpinAxis, second: SpinAxis) -> Result<EprScenario> {
    let (a_plus, a_minus) = spin_subspaces(&first);
    let (b_plus, b_minus) = spin_subspaces(&second);
    if [&a_plus, &a_minus]
        .iter()
        .any(|a| **a == b_plus || **a == b_minus)
    {
        return Err(Error::InvalidAxis {
            label: second.label().to_string(),
            reason: format!("axis measures the same observable as {:?}", first.label()),
        });
    }
    if first.label() == second.label() {
        return Err(Error::InvalidAxis {
            label: second.label().to_string(),
            reason: "the two axes need distinct labels".into(),
        });
    }

    let particles = [
        [
            ParticleAxis::new(1, &first)?,
            ParticleAxis::new(1, &second)?,
        ],
        [
            ParticleAxis::new(2, &first)?,
            ParticleAxis::new(2, &second)?,
        ],
    ];
    let composite = |axis: usize| -> Result<(Context, Proposition, Proposition)> {
        let one = &particles[0][axis];
        let two = &particles[1][axis];
        let anti_1 = cross(&one.plus, &two.minus);
        let anti_2 = cross(&one.minus, &two.plus);
        let label = format!("Sigma_12{}", [&first, &second][axis].label());
        let context = build_context(
            label,
            vec![
                anti_1.clone(),
                anti_2.clone(),
                cross(&one.plus, &two.plus),
                cross(&one.minus, &two.minus),
            ],
        )?;
        Ok((context, anti_1, anti_2))
    };
    let (z_context, z1, z2) = composite(0)?;
    let (x_context, x1, x2) = composite(1)?;

    Ok(EprScenario {
        axes: [first, second],
        particles,
        composite_contexts: [z_context, x_context],
        sequence: [z1, z2, x1, x2],
    })
}

/// Unnormalized singlet `(0, 1, -1, 0)`. Kept for reference only: every
/// computation goes through the product-state subspaces `Z1` and `Z2`.
pub fn singlet_direction() -> Vector {
    [0, 1, -1, 0]
        .iter()
        .map(|&x| GaussianRational::from(x))
        .collect()
}

impl EprScenario {
    pub fn axes(&self) -> &[SpinAxis; 2] {
        &self.axes
    }

    /// `particle` is 1 or 2; `axis` is 0 (first) or 1 (second).
    pub fn particle(&self, particle: usize, axis: usize) -> &ParticleAxis {
        &self.particles[particle - 1][axis]
    }

    pub fn particle_contexts(&self) -> impl Iterator<Item = &Context> {
        self.particles.iter().flatten().map(|p| &p.context)
    }

    /// Blocks of one particle's two contexts, unpasted.
    pub fn particle_collection(&self, particle: usize) -> ContextCollection {
        ContextCollection::from_contexts(
            self.particles[particle - 1]
                .iter()
                .map(|p| p.context.clone()),
        )
        .expect("particle contexts share C^2 and have distinct labels")
    }

    pub fn composite_contexts(&self) -> &[Context; 2] {
        &self.composite_contexts
    }

    pub fn composite_collection(&self) -> ContextCollection {
        ContextCollection::from_contexts(self.composite_contexts.iter().cloned())
            .expect("composite contexts share C^4 and have distinct labels")
    }

    /// The sequence `(Z1, Z2, X1, X2)` of anti-correlated product propositions.
    pub fn sequence(&self) -> &[Proposition; 4] {
        &self.sequence
    }

    pub fn z1(&self) -> &Proposition {
        &self.sequence[0]
    }

    pub fn z2(&self) -> &Proposition {
        &self.sequence[1]
    }

    pub fn x1(&self) -> &Proposition {
        &self.sequence[2]
    }

    pub fn x2(&self) -> &Proposition {
        &self.sequence[3]
    }

    pub fn product_subspace(&self, state: ProductState) -> &Subspace {
        match state {
            ProductState::Z1 => &self.z1().subspace,
            ProductState::Z2 => &self.z2().subspace,
        }
    }
}

impl Default for EprScenario {
    fn default() -> Self {
        build_epr(SpinAxis::z(), SpinAxis::x()).expect("z and x are distinct axes")
    }
}

/// Truth values of the four propositions of [`EprScenario::sequence`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruthPopulation(pub [TruthValue; 4]);

impl fmt::Display for TruthPopulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<&str> = self.0.iter().map(|t| t.as_bit()).collect();
        write!(f, "({})", bits.join(", "))
    }
}

pub fn truth_population(
    s: &EprScenario,
    state: ProductState,
    mode: Mode,
) -> Result<TruthPopulation> {
    let collection = s.composite_collection();
    let state = s.product_subspace(state);
    let mut values = [TruthValue::Indeterminate; 4];
    for (slot, p) in values.iter_mut().zip(s.sequence()) {
        *slot = evaluate_counterfactual(p, state, mode, &collection)?.value;
    }
    Ok(TruthPopulation(values))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Measured outcome of particle 1.
    Factual,
    /// Particle-1 spin along the second axis, given the measured outcome.
    SingleCounterfactual,
    /// The pair's product state and the value it implies for particle 2.
    ProductState,
    /// Anti-correlated second-axis product propositions at the product state.
    CompositeCounterfactual,
    /// Simultaneous verification of particle 2's spin along both axes.
    Conclusion,
}

impl StepKind {
    pub fn tag(self) -> &'static str {
        match self {
            StepKind::Factual => "factual",
            StepKind::SingleCounterfactual => "single-counterfactual",
            StepKind::ProductState => "product-state",
            StepKind::CompositeCounterfactual => "composite-counterfactual",
            StepKind::Conclusion => "conclusion",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub kind: StepKind,
    pub inputs: String,
    /// `(proposition, value, rule)`; the rule is `None` for inferred values.
    pub values: Vec<(String, TruthValue, Option<Rule>)>,
    pub commentary: String,
}

impl DerivationStep {
    pub fn truth_values(&self) -> Vec<TruthValue> {
        self.values.iter().map(|(_, v, _)| *v).collect()
    }
}

/// The admissibility failures that make the pasted-mode conclusion contradictory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contradiction {
    pub violations: Vec<(String, Admissibility)>,
}

impl Contradiction {
    pub fn contexts(&self) -> Vec<&str> {
        self.violations.iter().map(|(l, _)| l.as_str()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    pub mode: Mode,
    pub axes: [String; 2],
    pub steps: Vec<DerivationStep>,
    pub contradiction: Option<Contradiction>,
}

pub const LOCALITY_NOTE: &str =
    "giving up locality instead would make the measured outcome together with \
     particle 2's second-axis spin false; no computation is involved";

pub fn derive_pasted_chain(s: &EprScenario) -> Result<DerivationReport> {
    derive_chain(s, Mode::Pasted)
}

/// Replays the inference from particle 1's measured outcome to the claim that
/// particle 2's spin is definite along both axes.
pub fn derive_chain(s: &EprScenario, mode: Mode) -> Result<DerivationReport> {
    let [a, b] = s.axes();
    let p1a = s.particle(1, 0);
    let p1b = s.particle(1, 1);
    let p2a = s.particle(2, 0);
    let p2b = s.particle(2, 1);
    let coll_1 = s.particle_collection(1);
    let coll_2 = s.particle_collection(2);
    let coll_12 = s.composite_collection();
    let h_1a_plus = &p1a.plus.subspace;
    let h_2a_minus = &p2a.minus.subspace;
    let z1 = s.z1();

    let counterfactual = |p: &Proposition, state: &Subspace, coll: &ContextCollection| {
        evaluate_counterfactual(p, state, mode, coll)
            .map(|e| (p.label.clone(), e.value, Some(e.rule)))
    };

    let measured = evaluate_factual(&p1a.plus, a.plus())?;
    let step1 = DerivationStep {
        kind: StepKind::Factual,
        inputs: format!("|psi_1> = {} in H_1{}+", format_vec(a.plus()), a.label()),
        values: vec![(p1a.plus.label.clone(), measured.value, Some(measured.rule))],
        commentary: "observer 1 verifies the outcome".into(),
    };

    let step2 = DerivationStep {
        kind: StepKind::SingleCounterfactual,
        inputs: format!("state subspace H_1{}+", a.label()),
        values: vec![
            counterfactual(&p1b.plus, h_1a_plus, &coll_1)?,
            counterfactual(&p1b.minus, h_1a_plus, &coll_1)?,
        ],
        commentary: match mode {
            Mode::Pasted => format!(
                "H_1{}+ is incomparable with both H_1{}+-",
                a.label(),
                b.label()
            ),
            Mode::Unpasted => format!("H_1{}+ and H_1{}+- share no block", a.label(), b.label()),
        },
    };

    let psi_12 = kron_vec(a.plus(), a.minus());
    let joint = evaluate_factual(z1, &psi_12)?;
    let step3 = DerivationStep {
        kind: StepKind::ProductState,
        inputs: format!("|psi_12> = {} in {}", format_vec(&psi_12), z1.label),
        values: vec![
            (z1.label.clone(), joint.value, Some(joint.rule)),
            counterfactual(&p2a.minus, h_2a_minus, &coll_2)?,
        ],
        commentary: format!(
            "the product state makes {} true; ⊓ combines the factors conjunctively",
            p2a.minus.label
        ),
    };

    let step4 = DerivationStep {
        kind: StepKind::CompositeCounterfactual,
        inputs: format!("state subspace {}", z1.label),
        values: vec![
            counterfactual(s.x1(), &z1.subspace, &coll_12)?,
            counterfactual(s.x2(), &z1.subspace, &coll_12)?,
        ],
        commentary: match mode {
            Mode::Pasted => "Z subspaces are incomparable with X subspaces".into(),
            Mode::Unpasted => "Z and X subspaces share no block".into(),
        },
    };

    // Definite premises let the observer carry particle 1's second-axis values
    // over to particle 2 through the product decomposition.
    let premises_definite = step2
        .values
        .iter()
        .chain(&step4.values)
        .all(|(_, v, _)| v.is_definite());

    let second_axis_2 = Valuation::evaluate([&p2b.plus, &p2b.minus], h_2a_minus, mode, &coll_2)?;
    let conclusion_label = format!("({} ⊓ P_2{}∓)", p2a.minus.label, b.label());
    let conclusion_value = if premises_definite {
        TruthValue::True
    } else {
        TruthValue::Indeterminate
    };
    let mut values: Vec<_> = second_axis_2
        .entries()
        .iter()
        .map(|(l, e)| (l.clone(), e.value, Some(e.rule)))
        .collect();
    values.push((conclusion_label, conclusion_value, None));

    let mut contradiction = None;
    let commentary = if premises_definite {
        let second_axis_1 = Valuation::evaluate([&p1b.plus, &p1b.minus], h_1a_plus, mode, &coll_1)?;
        let mut violations = Vec::new();
        for (ctx, valuation) in [
            (&p1b.context, &second_axis_1),
            (&p2b.context, &second_axis_2),
        ] {
            if let Some(assignment) = bivaluation_on(ctx, valuation) {
                let verdict = check_admissibility(ctx, &assignment)?;
                if !verdict.is_admissible() {
                    violations.push((ctx.label().to_string(), verdict));
                }
            }
        }
        if !violations.is_empty() {
            contradiction = Some(Contradiction { violations });
        }
        format!(
            "particle 2 spin claimed definite along both {} and {}; {LOCALITY_NOTE}",
            a.label(),
            b.label()
        )
    } else {
        "premises carry no truth value, so the conclusion cannot be reached".to_string()
    };
    let step5 = DerivationStep {
        kind: StepKind::Conclusion,
        inputs: format!("state subspace H_2{}-", a.label()),
        values,
        commentary,
    };

    Ok(DerivationReport {
        mode,
        axes: [a.label().to_string(), b.label().to_string()],
        steps: vec![step1, step2, step3, step4, step5],
        contradiction,
    })
}

impl fmt::Display for DerivationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "derivation: mode={} axes={},{}",
            self.mode, self.axes[0], self.axes[1]
        )?;
        for (i, step) in self.steps.iter().enumerate() {
            let values: Vec<String> = step
                .values
                .iter()
                .map(|(label, value, rule)| match rule {
                    Some(rule) => format!("{label} = {value} [{rule}]"),
                    None => format!("{label} = {value} [inferred]"),
                })
                .collect();
            writeln!(
                f,
                "step {} | {} | {} | {} | {}",
                i + 1,
                step.kind.tag(),
                step.inputs,
                values.join("; "),
                step.commentary
            )?;
        }
        match &self.contradiction {
            Some(c) => {
                let parts: Vec<String> = c
                    .violations
                    .iter()
                    .map(|(l, v)| format!("{l} {v}"))
                    .collect();
                writeln!(
                    f,
                    "CONTRADICTION: incompatible spins verified simultaneously; inadmissible bivaluation on {}",
                    parts.join(", ")
                )
            }
            None => writeln!(f, "contradiction: none"),
        }
    }
}

/// Bivaluations per composite context at a product state, for reporting.
pub fn composite_admissibility(
    s: &EprScenario,
    state: ProductState,
    mode: Mode,
) -> Result<BTreeMap<String, Option<Admissibility>>> {
    let collection = s.composite_collection();
    let subspace = s.product_subspace(state);
    let mut out = BTreeMap::new();
    for ctx in collection.contexts() {
        let valuation = Valuation::evaluate(ctx.members(), subspace, mode, &collection)?;
        let verdict = match bivaluation_on(ctx, &valuation) {
            Some(assignment) => Some(check_admissibility(ctx, &assignment)?),
            None => None,
        };
        out.insert(ctx.label().to_string(), verdict);
    }
    Ok(out)
}
