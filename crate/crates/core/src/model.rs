//! The physical objects under study: spin eigenvectors of the Pauli
//! matrices, the rank-1 product projectors they generate on ℂ⁴, the three
//! maximal measurement contexts, and the 36 two-particle product states.
//!
//! Projectors are built from unnormalized rays as `v·v†/(v†v)`, so no
//! normalization factor like `1/√2` ever needs representing and every entry
//! stays inside ℚ(i). The eigenvector phase convention fixes the first
//! nonzero component to 1; projectors are phase-invariant, but the
//! convention makes vector-level golden data deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{ray_projector, ExactMatrix, ExactVector};
use crate::scalar::{GaussianRational, Rational};

/// Spin measurement axis. Declared in the order the contexts are listed:
/// z first, then x, then y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Z,
    X,
    Y,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Z, Axis::X, Axis::Y];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Z => write!(f, "z"),
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" => Ok(Axis::Z),
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            other => Err(Error::InvalidStateSpec {
                spec: other.to_string(),
                reason: "axis must be one of x, y, z".to_string(),
            }),
        }
    }
}

/// Spin eigenvalue sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Name of a projector: structured for the built-in product projectors
/// (`P_z++` and friends), free-form for operators loaded from files.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Member { axis: Axis, alpha: Sign, beta: Sign },
    Custom(String),
}

impl Label {
    /// Recognizes the structured `P_j±±` spelling; anything else is custom.
    pub fn parse(text: &str) -> Label {
        let bytes = text.as_bytes();
        if bytes.len() == 5 && bytes.starts_with(b"P_") {
            let axis = match bytes[2] {
                b'z' => Some(Axis::Z),
                b'x' => Some(Axis::X),
                b'y' => Some(Axis::Y),
                _ => None,
            };
            let sign = |b: u8| match b {
                b'+' => Some(Sign::Plus),
                b'-' => Some(Sign::Minus),
                _ => None,
            };
            if let (Some(axis), Some(alpha), Some(beta)) = (axis, sign(bytes[3]), sign(bytes[4])) {
                return Label::Member { axis, alpha, beta };
            }
        }
        Label::Custom(text.to_string())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Member { axis, alpha, beta } => write!(f, "P_{axis}{alpha}{beta}"),
            Label::Custom(name) => write!(f, "{name}"),
        }
    }
}

/// An unnormalized nonzero vector standing for a one-dimensional subspace,
/// together with its exact squared norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    vector: ExactVector,
    norm_sq: Rational,
}

impl Ray {
    pub fn new(vector: ExactVector) -> Result<Self> {
        if vector.is_zero() {
            return Err(Error::ZeroVector {
                context: "ray".to_string(),
            });
        }
        let norm_sq = vector.norm_sq();
        Ok(Self { vector, norm_sq })
    }

    pub fn vector(&self) -> &ExactVector {
        &self.vector
    }

    pub fn norm_sq(&self) -> &Rational {
        &self.norm_sq
    }

    /// The projector onto this ray.
    pub fn projector_matrix(&self) -> ExactMatrix {
        ray_projector(&self.vector).expect("ray vectors are nonzero")
    }
}

/// The unnormalized spin eigenvector for one particle:
/// z± → (1,0)/(0,1), x± → (1,±1), y± → (1,±i).
pub fn pauli_eigenvector(axis: Axis, sign: Sign) -> Ray {
    let one = GaussianRational::one();
    let entries = match (axis, sign) {
        (Axis::Z, Sign::Plus) => vec![one, GaussianRational::zero()],
        (Axis::Z, Sign::Minus) => vec![GaussianRational::zero(), one],
        (Axis::X, Sign::Plus) => vec![one.clone(), one],
        (Axis::X, Sign::Minus) => vec![one, -GaussianRational::one()],
        (Axis::Y, Sign::Plus) => vec![one, GaussianRational::i()],
        (Axis::Y, Sign::Minus) => vec![one, -GaussianRational::i()],
    };
    Ray::new(ExactVector::new(entries)).expect("eigenvectors are nonzero")
}

/// A labeled projection operator. Construction verifies idempotence and
/// self-adjointness exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projector {
    label: Label,
    matrix: ExactMatrix,
}

impl Projector {
    pub fn new(label: Label, matrix: ExactMatrix) -> Result<Self> {
        if !matrix.is_projector() {
            return Err(Error::NotAProjector {
                label: label.to_string(),
            });
        }
        Ok(Self { label, matrix })
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// The product projector for axis `j` and outcome pair `(α, β)`:
/// the tensor product of the two single-particle eigenprojectors.
pub fn build_projector(axis: Axis, alpha: Sign, beta: Sign) -> Projector {
    let first = pauli_eigenvector(axis, alpha).projector_matrix();
    let second = pauli_eigenvector(axis, beta).projector_matrix();
    Projector::new(Label::Member { axis, alpha, beta }, first.tensor(&second))
        .expect("product of eigenprojectors is a projector")
}

/// An ordered family of projectors intended to resolve the identity.
///
/// The container itself does not enforce the resolution-of-identity
/// invariants; [`Context::validate`] checks them exactly and reports every
/// failure, so that ill-formed input files can be diagnosed rather than
/// rejected opaquely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    name: String,
    projectors: Vec<Projector>,
}

impl Context {
    pub fn new(name: impl Into<String>, projectors: Vec<Projector>) -> Self {
        Self { name: name.into(), projectors }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn projectors(&self) -> &[Projector] {
        &self.projectors
    }

    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }

    pub fn member(&self, label: &Label) -> Option<&Projector> {
        self.projectors.iter().find(|p| p.label() == label)
    }

    /// Exact structural validation: every member is a projector (true by
    /// construction), the members sum to the identity, and all pairwise
    /// products vanish.
    pub fn validate(&self) -> ContextValidation {
        let dim = self.projectors.first().map_or(0, Projector::dim);
        let mut sum = ExactMatrix::zero(dim.max(1), dim.max(1));
        for p in &self.projectors {
            sum = sum.add(p.matrix());
        }
        let sums_to_identity = !self.projectors.is_empty() && sum.is_identity();

        let mut nonzero_products = Vec::new();
        for (i, p) in self.projectors.iter().enumerate() {
            for q in &self.projectors[i + 1..] {
                if !p.matrix().mul(q.matrix()).unwrap().is_zero() {
                    nonzero_products.push((p.label().clone(), q.label().clone()));
                }
            }
        }

        ContextValidation {
            name: self.name.clone(),
            projector_count: self.projectors.len(),
            all_projectors: true,
            sums_to_identity,
            nonzero_products,
        }
    }
}

/// Result of [`Context::validate`]; failures are content, not errors.
#[derive(Clone, Debug)]
pub struct ContextValidation {
    pub name: String,
    pub projector_count: usize,
    pub all_projectors: bool,
    pub sums_to_identity: bool,
    /// Within-context pairs whose product is not the zero matrix.
    pub nonzero_products: Vec<(Label, Label)>,
}

impl ContextValidation {
    pub fn pairwise_products_zero(&self) -> bool {
        self.nonzero_products.is_empty()
    }

    pub fn valid(&self) -> bool {
        self.all_projectors && self.sums_to_identity && self.pairwise_products_zero()
    }
}

/// A full operator set: an ordered list of contexts over one ambient
/// dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSet {
    contexts: Vec<Context>,
    ambient_dim: usize,
}

impl OperatorSet {
    pub fn new(contexts: Vec<Context>, ambient_dim: usize) -> Result<Self> {
        for c in &contexts {
            for p in c.projectors() {
                if p.dim() != ambient_dim {
                    return Err(Error::DimensionMismatch {
                        context: format!(
                            "projector {} has dimension {}, set has {ambient_dim}",
                            p.label(),
                            p.dim()
                        ),
                    });
                }
            }
        }
        Ok(Self { contexts, ambient_dim })
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn context(&self, name: &str) -> Option<&Context> {
        self.contexts.iter().find(|c| c.name() == name)
    }

    /// All projectors in context order, paired with their context name.
    pub fn projectors(&self) -> impl Iterator<Item = (&str, &Projector)> {
        self.contexts
            .iter()
            .flat_map(|c| c.projectors().iter().map(move |p| (c.name(), p)))
    }

    pub fn projector(&self, label: &Label) -> Option<&Projector> {
        self.projectors().map(|(_, p)| p).find(|p| p.label() == label)
    }

    pub fn projector_count(&self) -> usize {
        self.contexts.iter().map(Context::len).sum()
    }

    /// Validates every context.
    pub fn validate(&self) -> Vec<ContextValidation> {
        self.contexts.iter().map(Context::validate).collect()
    }

    /// Exact commutation status for every unordered pair of members.
    pub fn commutation_report(&self) -> Vec<CommutationEntry> {
        let all: Vec<(usize, &Projector)> = self
            .contexts
            .iter()
            .enumerate()
            .flat_map(|(ci, c)| c.projectors().iter().map(move |p| (ci, p)))
            .collect();
        let mut entries = Vec::new();
        for (i, (ci, p)) in all.iter().enumerate() {
            for (cj, q) in &all[i + 1..] {
                let pq = p.matrix().mul(q.matrix()).unwrap();
                let qp = q.matrix().mul(p.matrix()).unwrap();
                entries.push(CommutationEntry {
                    first: p.label().clone(),
                    second: q.label().clone(),
                    same_context: ci == cj,
                    commutes: pq == qp,
                });
            }
        }
        entries
    }
}

/// One row of [`OperatorSet::commutation_report`].
#[derive(Clone, Debug)]
pub struct CommutationEntry {
    pub first: Label,
    pub second: Label,
    pub same_context: bool,
    pub commutes: bool,
}

/// The full operator set: three contexts `Cz`, `Cx`, `Cy`, each holding the
/// four product projectors in sign order `++, +-, -+, --`.
pub fn pauli_product_set() -> OperatorSet {
    let contexts = Axis::ALL
        .iter()
        .map(|&axis| {
            let projectors = Sign::ALL
                .iter()
                .flat_map(|&alpha| {
                    Sign::ALL.iter().map(move |&beta| build_projector(axis, alpha, beta))
                })
                .collect();
            Context::new(format!("C{axis}"), projectors)
        })
        .collect();
    OperatorSet::new(contexts, 4).expect("built set is 4-dimensional")
}

/// How a prepared state was specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateKind {
    /// Product of two single-particle eigenvectors, e.g. `z+x+`.
    Product { first_axis: Axis, first_sign: Sign, second_axis: Axis, second_sign: Sign },
    /// An explicitly given vector.
    Explicit,
}

/// A pure state of the composite system, as an unnormalized exact vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreparedState {
    kind: StateKind,
    vector: ExactVector,
    norm_sq: Rational,
}

impl PreparedState {
    /// The product state `|Ψ_jα⟩ ⊗ |Ψ_kβ⟩`.
    pub fn product(j: Axis, alpha: Sign, k: Axis, beta: Sign) -> Self {
        let first = pauli_eigenvector(j, alpha);
        let second = pauli_eigenvector(k, beta);
        let vector = first.vector().tensor(second.vector());
        let norm_sq = vector.norm_sq();
        debug_assert_eq!(norm_sq, first.norm_sq() * second.norm_sq());
        Self {
            kind: StateKind::Product {
                first_axis: j,
                first_sign: alpha,
                second_axis: k,
                second_sign: beta,
            },
            vector,
            norm_sq,
        }
    }

    /// A state from an explicit vector; rejects the null vector, which
    /// represents no realizable state.
    pub fn explicit(vector: ExactVector) -> Result<Self> {
        if vector.is_zero() {
            return Err(Error::ZeroVector {
                context: "prepared state".to_string(),
            });
        }
        let norm_sq = vector.norm_sq();
        Ok(Self { kind: StateKind::Explicit, vector, norm_sq })
    }

    pub fn kind(&self) -> &StateKind {
        &self.kind
    }

    pub fn vector(&self) -> &ExactVector {
        &self.vector
    }

    pub fn norm_sq(&self) -> &Rational {
        &self.norm_sq
    }

    /// Whether both factors share one axis; `None` for explicit vectors.
    pub fn correlated(&self) -> Option<bool> {
        match &self.kind {
            StateKind::Product { first_axis, second_axis, .. } => Some(first_axis == second_axis),
            StateKind::Explicit => None,
        }
    }

    /// The shared axis of a correlated product state.
    pub fn correlated_axis(&self) -> Option<Axis> {
        match &self.kind {
            StateKind::Product { first_axis, second_axis, .. } if first_axis == second_axis => {
                Some(*first_axis)
            }
            _ => None,
        }
    }

    /// Compact spec string: `z+x+` for product states, `explicit` otherwise.
    pub fn spec_string(&self) -> String {
        match &self.kind {
            StateKind::Product { first_axis, first_sign, second_axis, second_sign } => {
                format!("{first_axis}{first_sign}{second_axis}{second_sign}")
            }
            StateKind::Explicit => "explicit".to_string(),
        }
    }
}

/// All 36 product states, axes in `z, x, y` order and signs in `+, -` order.
pub fn all_product_states() -> Vec<PreparedState> {
    let mut states = Vec::with_capacity(36);
    for &j in &Axis::ALL {
        for &alpha in &Sign::ALL {
            for &k in &Axis::ALL {
                for &beta in &Sign::ALL {
                    states.push(PreparedState::product(j, alpha, k, beta));
                }
            }
        }
    }
    states
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::integer;

    fn sigma(axis: Axis) -> ExactMatrix {
        let rows: &[&[&str]] = match axis {
            Axis::Z => &[&["1", "0"], &["0", "-1"]],
            Axis::X => &[&["0", "1"], &["1", "0"]],
            Axis::Y => &[&["0", "-1i"], &["1i", "0"]],
        };
        ExactMatrix::parse(rows).unwrap()
    }

    #[test]
    fn eigenvectors_satisfy_their_eigenvalue_equations() {
        for &axis in &Axis::ALL {
            for &sign in &Sign::ALL {
                let ray = pauli_eigenvector(axis, sign);
                let image = sigma(axis).apply(ray.vector()).unwrap();
                let expected = match sign {
                    Sign::Plus => ray.vector().clone(),
                    Sign::Minus => ray.vector().scale(&GaussianRational::from_int(-1)),
                };
                assert_eq!(image, expected, "sigma_{axis} on {axis}{sign}");
            }
        }
    }

    #[test]
    fn eigenvector_norms() {
        assert_eq!(pauli_eigenvector(Axis::Z, Sign::Plus).norm_sq(), &integer(1));
        assert_eq!(
            pauli_eigenvector(Axis::Z, Sign::Plus).vector(),
            &ExactVector::parse(&["1", "0"]).unwrap()
        );
        assert_eq!(pauli_eigenvector(Axis::X, Sign::Plus).norm_sq(), &integer(2));
        assert_eq!(
            pauli_eigenvector(Axis::Y, Sign::Minus).vector(),
            &ExactVector::parse(&["1", "-1i"]).unwrap()
        );
    }

    #[test]
    fn product_projector_examples() {
        let z_pp = build_projector(Axis::Z, Sign::Plus, Sign::Plus);
        let mut expected = ExactMatrix::zero(4, 4);
        assert_ne!(z_pp.matrix(), &expected);
        expected = ExactMatrix::parse(&[
            &["1", "0", "0", "0"],
            &["0", "0", "0", "0"],
            &["0", "0", "0", "0"],
            &["0", "0", "0", "0"],
        ])
        .unwrap();
        assert_eq!(z_pp.matrix(), &expected);

        let x_pm = build_projector(Axis::X, Sign::Plus, Sign::Minus);
        let expected = ExactMatrix::parse(&[
            &["1/4", "-1/4", "1/4", "-1/4"],
            &["-1/4", "1/4", "-1/4", "1/4"],
            &["1/4", "-1/4", "1/4", "-1/4"],
            &["-1/4", "1/4", "-1/4", "1/4"],
        ])
        .unwrap();
        assert_eq!(x_pm.matrix(), &expected);

        let y_pp = build_projector(Axis::Y, Sign::Plus, Sign::Plus);
        let expected = ExactMatrix::parse(&[
            &["1/4", "-1/4i", "-1/4i", "-1/4"],
            &["1/4i", "1/4", "1/4", "-1/4i"],
            &["1/4i", "1/4", "1/4", "-1/4i"],
            &["-1/4", "1/4i", "1/4i", "1/4"],
        ])
        .unwrap();
        assert_eq!(y_pp.matrix(), &expected);
    }

    #[test]
    fn set_has_three_contexts_of_four() {
        let set = pauli_product_set();
        assert_eq!(set.contexts().len(), 3);
        assert_eq!(set.projector_count(), 12);
        assert_eq!(
            set.contexts().iter().map(Context::name).collect::<Vec<_>>(),
            ["Cz", "Cx", "Cy"]
        );
        for validation in set.validate() {
            assert!(validation.valid(), "{validation:?}");
        }
    }

    #[test]
    fn context_member_order_is_sign_lexicographic() {
        let set = pauli_product_set();
        let labels: Vec<String> = set.contexts()[0]
            .projectors()
            .iter()
            .map(|p| p.label().to_string())
            .collect();
        assert_eq!(labels, ["P_z++", "P_z+-", "P_z-+", "P_z--"]);
    }

    #[test]
    fn cross_context_pairs_never_commute() {
        let report = pauli_product_set().commutation_report();
        let cross: Vec<_> = report.iter().filter(|e| !e.same_context).collect();
        assert_eq!(cross.len(), 48);
        assert!(cross.iter().all(|e| !e.commutes));
        let within: Vec<_> = report.iter().filter(|e| e.same_context).collect();
        assert_eq!(within.len(), 18);
        assert!(within.iter().all(|e| e.commutes));
    }

    #[test]
    fn identity_commutes_with_everything() {
        let id = ExactMatrix::identity(4);
        for (_, p) in pauli_product_set().projectors() {
            assert_eq!(
                id.mul(p.matrix()).unwrap(),
                p.matrix().mul(&id).unwrap()
            );
        }
    }

    #[test]
    fn cross_context_products_are_not_projectors() {
        let set = pauli_product_set();
        let all: Vec<_> = set.projectors().collect();
        for (ca, a) in &all {
            for (cb, b) in &all {
                if ca != cb {
                    assert!(!a.matrix().mul(b.matrix()).unwrap().is_projector());
                }
            }
        }
    }

    #[test]
    fn incomplete_family_fails_validation() {
        let set = pauli_product_set();
        let truncated = Context::new("partial", set.contexts()[0].projectors()[..2].to_vec());
        let validation = truncated.validate();
        assert!(!validation.sums_to_identity);
        assert!(validation.pairwise_products_zero());
        assert!(!validation.valid());
    }

    #[test]
    fn ranges_sit_inside_sibling_kernels() {
        let set = pauli_product_set();
        for c in set.contexts() {
            for p in c.projectors() {
                let ran = p.matrix().range_basis();
                for q in c.projectors() {
                    if p.label() != q.label() {
                        assert!(ran.is_subspace_of(&q.matrix().kernel_basis()));
                    }
                }
            }
        }
    }

    #[test]
    fn member_annihilates_sum_of_siblings() {
        let set = pauli_product_set();
        for c in set.contexts() {
            for p in c.projectors() {
                let mut rest = ExactMatrix::zero(4, 4);
                for q in c.projectors() {
                    if p.label() != q.label() {
                        rest = rest.add(q.matrix());
                    }
                }
                assert!(p.matrix().mul(&rest).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn state_examples() {
        let zz = PreparedState::product(Axis::Z, Sign::Plus, Axis::Z, Sign::Plus);
        assert_eq!(zz.vector(), &ExactVector::parse(&["1", "0", "0", "0"]).unwrap());
        assert_eq!(zz.correlated(), Some(true));
        assert_eq!(zz.correlated_axis(), Some(Axis::Z));

        let zx = PreparedState::product(Axis::Z, Sign::Plus, Axis::X, Sign::Plus);
        assert_eq!(zx.vector(), &ExactVector::parse(&["1", "1", "0", "0"]).unwrap());
        assert_eq!(zx.norm_sq(), &integer(2));
        assert_eq!(zx.correlated(), Some(false));
        assert_eq!(zx.spec_string(), "z+x+");

        let yy = PreparedState::product(Axis::Y, Sign::Plus, Axis::Y, Sign::Minus);
        assert_eq!(
            yy.vector(),
            &ExactVector::parse(&["1", "-1i", "1i", "1"]).unwrap()
        );
        assert_eq!(yy.norm_sq(), &integer(4));
    }

    #[test]
    fn explicit_states_reject_the_null_vector() {
        assert!(PreparedState::explicit(ExactVector::zero(4)).is_err());
    }

    #[test]
    fn thirty_six_product_states() {
        let states = all_product_states();
        assert_eq!(states.len(), 36);
        assert_eq!(states.iter().filter(|s| s.correlated() == Some(true)).count(), 12);
        assert_eq!(states[0].spec_string(), "z+z+");
    }

    #[test]
    fn label_round_trip() {
        for text in ["P_z++", "P_x+-", "P_y--"] {
            let label = Label::parse(text);
            assert!(matches!(label, Label::Member { .. }));
            assert_eq!(label.to_string(), text);
        }
        let custom = Label::parse("row3");
        assert_eq!(custom, Label::Custom("row3".to_string()));
        assert_eq!(custom.to_string(), "row3");
    }
}
