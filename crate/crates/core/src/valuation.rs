//! Truth-value semantics induced by a prepared state.
//!
//! Three readings of "the value of proposition `P` in state `Ψ`" live here:
//!
//! - **partial bivalent** ([`state_induced`]): 1 when `Ψ` lies in the range
//!   of `P`, 0 when it lies in the kernel, and no value at all otherwise.
//!   The gap is represented by absence from the assignment map, not by a
//!   third value.
//! - **many-valued** ([`born`]): the exact rational `⟨Ψ|P|Ψ⟩ / ⟨Ψ|Ψ⟩`
//!   in `[0,1]`, which sums to exactly 1 over each context.
//! - **supervaluation** ([`supervaluate`]): quantification over all
//!   admissible completions of the partial valuation on one context, where
//!   admissible means total, bivalent, consistent with the existing
//!   assignments, and making exactly one member true.
//!
//! All memberships and sums are decided exactly; none of the verdicts
//! involves a tolerance.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{ConstantClass, LatticeElement};
use crate::model::{Context, Label, OperatorSet, PreparedState};
use crate::scalar::Rational;

/// A classical truth value, with arithmetic image 1 or 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TruthValue {
    False,
    True,
}

impl TruthValue {
    pub fn as_rational(self) -> Rational {
        match self {
            TruthValue::True => Rational::one(),
            TruthValue::False => Rational::zero(),
        }
    }

    pub fn as_bool(self) -> bool {
        self == TruthValue::True
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::True => write!(f, "1"),
            TruthValue::False => write!(f, "0"),
        }
    }
}

/// Exact membership evidence backing an assignment (or its absence).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub in_range: bool,
    pub in_kernel: bool,
}

/// A partial `{0,1}` assignment induced by a state, with the membership
/// evidence that justifies each verdict. Projectors appear in the
/// assignment map only when the state settles them.
#[derive(Clone, Debug)]
pub struct PartialBivalentValuation {
    assignments: BTreeMap<Label, TruthValue>,
    memberships: BTreeMap<Label, Membership>,
    state: PreparedState,
}

impl PartialBivalentValuation {
    pub fn value(&self, label: &Label) -> Option<TruthValue> {
        self.assignments.get(label).copied()
    }

    pub fn membership(&self, label: &Label) -> Option<Membership> {
        self.memberships.get(label).copied()
    }

    pub fn assigned_count(&self) -> usize {
        self.assignments.len()
    }

    pub fn state(&self) -> &PreparedState {
        &self.state
    }

    /// Totality over a set: true when no projector of the set is unassigned.
    pub fn totality(&self, set: &OperatorSet) -> TotalityReport {
        let gaps: Vec<Label> = set
            .projectors()
            .filter(|(_, p)| !self.assignments.contains_key(p.label()))
            .map(|(_, p)| p.label().clone())
            .collect();
        TotalityReport { total: gaps.is_empty(), gaps }
    }
}

/// Result of a totality check.
#[derive(Clone, Debug)]
pub struct TotalityReport {
    pub total: bool,
    pub gaps: Vec<Label>,
}

/// The state-induced partial bivalent valuation: for each projector of the
/// set, assign 1 on exact range membership, 0 on exact kernel membership,
/// and leave a gap otherwise.
pub fn state_induced(
    state: &PreparedState,
    set: &OperatorSet,
) -> Result<PartialBivalentValuation> {
    if state.vector().dim() != set.ambient_dim() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "state of dimension {} against a set of dimension {}",
                state.vector().dim(),
                set.ambient_dim()
            ),
        });
    }
    let mut assignments = BTreeMap::new();
    let mut memberships = BTreeMap::new();
    for (_, p) in set.projectors() {
        let in_range = p.matrix().range_basis().contains(state.vector());
        let in_kernel = p.matrix().kernel_basis().contains(state.vector());
        debug_assert!(!(in_range && in_kernel), "nonzero state in range and kernel");
        memberships.insert(p.label().clone(), Membership { in_range, in_kernel });
        if in_range {
            assignments.insert(p.label().clone(), TruthValue::True);
        } else if in_kernel {
            assignments.insert(p.label().clone(), TruthValue::False);
        }
    }
    Ok(PartialBivalentValuation {
        assignments,
        memberships,
        state: state.clone(),
    })
}

/// Verdict of an entailment check on one context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntailmentVerdict {
    /// The summed values equal 1 with exactly one true proposition.
    Holds,
    /// At least one member carries no value.
    FailsByGap,
    /// Every member is valued but more than one is nonzero.
    FailsByExcess,
}

impl fmt::Display for EntailmentVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntailmentVerdict::Holds => write!(f, "holds"),
            EntailmentVerdict::FailsByGap => write!(f, "fails-by-gap"),
            EntailmentVerdict::FailsByExcess => write!(f, "fails-by-excess"),
        }
    }
}

/// Outcome of checking, on one context, whether truth of the summed
/// operator forces value-sum 1 across the members.
#[derive(Clone, Debug)]
pub struct EntailmentReport {
    pub context: String,
    /// Value of the summed operator; 1 for a resolution of the identity.
    pub lhs: Rational,
    /// Sum of the assigned member values.
    pub value_sum: Rational,
    pub assigned: usize,
    pub gaps: Vec<Label>,
    /// Number of assigned values different from 0.
    pub nonzero: usize,
    pub verdict: EntailmentVerdict,
}

/// Entailment under the partial bivalent reading. Expects a context that
/// resolves the identity.
pub fn entailment_bivalent(v: &PartialBivalentValuation, c: &Context) -> EntailmentReport {
    let mut value_sum = Rational::zero();
    let mut gaps = Vec::new();
    let mut assigned = 0usize;
    let mut nonzero = 0usize;
    for p in c.projectors() {
        match v.value(p.label()) {
            Some(t) => {
                assigned += 1;
                if t.as_bool() {
                    nonzero += 1;
                }
                value_sum += t.as_rational();
            }
            None => gaps.push(p.label().clone()),
        }
    }
    let verdict = if !gaps.is_empty() {
        EntailmentVerdict::FailsByGap
    } else if value_sum.is_one() {
        EntailmentVerdict::Holds
    } else {
        EntailmentVerdict::FailsByExcess
    };
    EntailmentReport {
        context: c.name().to_string(),
        lhs: Rational::one(),
        value_sum,
        assigned,
        gaps,
        nonzero,
        verdict,
    }
}

/// A total `[0,1]`-valued assignment induced by the squared projection
/// amplitudes of a state.
#[derive(Clone, Debug)]
pub struct ManyValuedValuation {
    values: BTreeMap<Label, Rational>,
    state: PreparedState,
}

impl ManyValuedValuation {
    pub fn value(&self, label: &Label) -> Option<&Rational> {
        self.values.get(label)
    }

    pub fn state(&self) -> &PreparedState {
        &self.state
    }

    pub fn context_sum(&self, c: &Context) -> Rational {
        c.projectors()
            .iter()
            .filter_map(|p| self.values.get(p.label()))
            .sum()
    }
}

/// The many-valued assignment `v(P) = ⟨Ψ|P|Ψ⟩ / ⟨Ψ|Ψ⟩`, exact for every
/// projector of the set.
pub fn born(state: &PreparedState, set: &OperatorSet) -> Result<ManyValuedValuation> {
    if state.vector().dim() != set.ambient_dim() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "state of dimension {} against a set of dimension {}",
                state.vector().dim(),
                set.ambient_dim()
            ),
        });
    }
    let mut values = BTreeMap::new();
    for (_, p) in set.projectors() {
        let image = p.matrix().apply(state.vector())?;
        let amplitude = state.vector().inner(&image);
        debug_assert!(amplitude.im().is_zero(), "⟨Ψ|P|Ψ⟩ must be real");
        values.insert(p.label().clone(), amplitude.re() / state.norm_sq());
    }
    Ok(ManyValuedValuation { values, state: state.clone() })
}

/// Entailment under the many-valued reading: holds only when exactly one
/// member carries nonzero value, so that the value sum 1 is concentrated
/// in a single proposition.
pub fn entailment_born(v: &ManyValuedValuation, c: &Context) -> EntailmentReport {
    let mut value_sum = Rational::zero();
    let mut assigned = 0usize;
    let mut nonzero = 0usize;
    let mut gaps = Vec::new();
    for p in c.projectors() {
        match v.value(p.label()) {
            Some(x) => {
                assigned += 1;
                if !x.is_zero() {
                    nonzero += 1;
                }
                value_sum += x;
            }
            None => gaps.push(p.label().clone()),
        }
    }
    let verdict = if !gaps.is_empty() {
        EntailmentVerdict::FailsByGap
    } else if value_sum.is_one() && nonzero == 1 {
        EntailmentVerdict::Holds
    } else {
        EntailmentVerdict::FailsByExcess
    };
    EntailmentReport {
        context: c.name().to_string(),
        lhs: Rational::one(),
        value_sum,
        assigned,
        gaps,
        nonzero,
        verdict,
    }
}

/// Conjunction of one within-context pair, evaluated three ways: by the
/// arithmetic product, by `min`, and at the operator level by classifying
/// the lattice meet.
#[derive(Clone, Debug)]
pub struct PairConjunction {
    pub first: Label,
    pub second: Label,
    pub by_product: Rational,
    pub by_min: Rational,
    /// Value forced by the constant class of the meet element; `None` when
    /// the meet is contingent and no constant value applies.
    pub operator_level: Option<Rational>,
}

/// The context disjunction evaluated by sum, by `max`, and at the operator
/// level by classifying the lattice join.
#[derive(Clone, Debug)]
pub struct DisjunctionEvaluation {
    pub by_sum: Rational,
    pub by_max: Rational,
    pub operator_level: Option<Rational>,
}

/// Result of evaluating the connectives on one context.
#[derive(Clone, Debug)]
pub enum ConnectivesReport {
    /// The valuation is not total on the context; nothing is evaluated.
    Abstained { gaps: Vec<Label> },
    Evaluated {
        pairs: Vec<PairConjunction>,
        disjunction: DisjunctionEvaluation,
        /// True when every route to every connective value agrees.
        consistent: bool,
    },
}

fn constant_value(class: ConstantClass) -> Option<Rational> {
    match class {
        ConstantClass::Tautology => Some(Rational::one()),
        ConstantClass::Contradiction => Some(Rational::zero()),
        ConstantClass::Contingent => None,
    }
}

/// Evaluates all pairwise conjunctions and the full disjunction of a
/// context under a valuation that is total on it, cross-checking the
/// value-level formulas against the operator-level constants.
pub fn connectives(v: &PartialBivalentValuation, c: &Context) -> ConnectivesReport {
    let mut values = Vec::with_capacity(c.len());
    let mut gaps = Vec::new();
    for p in c.projectors() {
        match v.value(p.label()) {
            Some(t) => values.push((p, t.as_rational())),
            None => gaps.push(p.label().clone()),
        }
    }
    if !gaps.is_empty() {
        return ConnectivesReport::Abstained { gaps };
    }

    let elements: Vec<LatticeElement> = c
        .projectors()
        .iter()
        .map(LatticeElement::from_projector)
        .collect();

    let mut consistent = true;
    let mut pairs = Vec::new();
    for (i, (p, pv)) in values.iter().enumerate() {
        for (j, (q, qv)) in values.iter().enumerate().skip(i + 1) {
            let by_product = pv * qv;
            let by_min = pv.clone().min(qv.clone());
            let operator_level = constant_value(elements[i].meet(&elements[j]).classify());
            consistent &= by_product == by_min;
            consistent &= operator_level.as_ref() == Some(&by_product);
            pairs.push(PairConjunction {
                first: p.label().clone(),
                second: q.label().clone(),
                by_product,
                by_min,
                operator_level,
            });
        }
    }

    let by_sum: Rational = values.iter().map(|(_, x)| x.clone()).sum();
    let by_max = values
        .iter()
        .map(|(_, x)| x.clone())
        .max()
        .unwrap_or_else(Rational::zero);
    let operator_level = constant_value(LatticeElement::join(&elements).classify());
    consistent &= by_sum == by_max && by_sum.is_one();
    consistent &= operator_level.as_ref() == Some(&by_sum);

    ConnectivesReport::Evaluated {
        pairs,
        disjunction: DisjunctionEvaluation { by_sum, by_max, operator_level },
        consistent,
    }
}

fn check_unit_interval(x: &Rational) -> Result<()> {
    if x < &Rational::zero() || x > &Rational::one() {
        return Err(Error::OutOfRange { value: crate::scalar::format_rational(x) });
    }
    Ok(())
}

/// Łukasiewicz strong conjunction: `max(0, a + b − 1)`.
pub fn lukasiewicz_and(a: &Rational, b: &Rational) -> Result<Rational> {
    check_unit_interval(a)?;
    check_unit_interval(b)?;
    Ok((a + b - Rational::one()).max(Rational::zero()))
}

/// Łukasiewicz strong disjunction: `min(1, a + b)`.
pub fn lukasiewicz_or(a: &Rational, b: &Rational) -> Result<Rational> {
    check_unit_interval(a)?;
    check_unit_interval(b)?;
    Ok((a + b).min(Rational::one()))
}

/// Łukasiewicz negation: `1 − a`.
pub fn lukasiewicz_not(a: &Rational) -> Result<Rational> {
    check_unit_interval(a)?;
    Ok(Rational::one() - a)
}

/// A propositional target over the members of one context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Atom(Label),
    Conjunction(Vec<Label>),
    Disjunction(Vec<Label>),
}

impl Formula {
    /// The disjunction over every member of a context.
    pub fn context_disjunction(c: &Context) -> Formula {
        Formula::Disjunction(c.projectors().iter().map(|p| p.label().clone()).collect())
    }

    fn labels(&self) -> Vec<&Label> {
        match self {
            Formula::Atom(l) => vec![l],
            Formula::Conjunction(ls) | Formula::Disjunction(ls) => ls.iter().collect(),
        }
    }

    fn evaluate(&self, assignment: &BTreeMap<&Label, bool>) -> bool {
        match self {
            Formula::Atom(l) => assignment[l],
            Formula::Conjunction(ls) => ls.iter().all(|l| assignment[l]),
            Formula::Disjunction(ls) => ls.iter().any(|l| assignment[l]),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ls: &[Label]| ls.iter().map(Label::to_string).collect::<Vec<_>>().join(",");
        match self {
            Formula::Atom(l) => write!(f, "{l}"),
            Formula::Conjunction(ls) => write!(f, "and({})", join(ls)),
            Formula::Disjunction(ls) => write!(f, "or({})", join(ls)),
        }
    }
}

/// Verdict of a supervaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperVerdict {
    /// True under every admissible completion.
    Supertrue,
    /// False under every admissible completion.
    Superfalse,
    /// True under some admissible completions and false under others.
    Gap,
    /// No admissible completion exists at all.
    Inconsistent,
}

impl fmt::Display for SuperVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperVerdict::Supertrue => write!(f, "supertrue"),
            SuperVerdict::Superfalse => write!(f, "superfalse"),
            SuperVerdict::Gap => write!(f, "gap"),
            SuperVerdict::Inconsistent => write!(f, "inconsistent"),
        }
    }
}

/// Outcome of [`supervaluate`].
#[derive(Clone, Debug)]
pub struct SupervaluationVerdict {
    pub target: Formula,
    pub verdict: SuperVerdict,
    /// Number of admissible completions that were examined.
    pub completions_examined: usize,
}

/// Quantifies a formula over every admissible completion of the valuation
/// on one context. A completion assigns a value to each member, agrees with
/// the values the state already settled, and makes exactly one member true.
pub fn supervaluate(
    v: &PartialBivalentValuation,
    c: &Context,
    target: &Formula,
) -> Result<SupervaluationVerdict> {
    let members: Vec<&Label> = c.projectors().iter().map(|p| p.label()).collect();
    for label in target.labels() {
        if !members.contains(&label) {
            return Err(Error::FormulaScope {
                label: label.to_string(),
                context: c.name().to_string(),
            });
        }
    }

    let mut seen_true = false;
    let mut seen_false = false;
    let mut admissible = 0usize;
    for chosen in &members {
        let candidate: BTreeMap<&Label, bool> =
            members.iter().map(|l| (*l, l == chosen)).collect();
        let consistent = members.iter().all(|l| match v.value(l) {
            Some(t) => t.as_bool() == candidate[l],
            None => true,
        });
        if !consistent {
            continue;
        }
        admissible += 1;
        if target.evaluate(&candidate) {
            seen_true = true;
        } else {
            seen_false = true;
        }
    }

    let verdict = match (admissible, seen_true, seen_false) {
        (0, _, _) => SuperVerdict::Inconsistent,
        (_, true, false) => SuperVerdict::Supertrue,
        (_, false, true) => SuperVerdict::Superfalse,
        _ => SuperVerdict::Gap,
    };
    Ok(SupervaluationVerdict {
        target: target.clone(),
        verdict,
        completions_examined: admissible,
    })
}
