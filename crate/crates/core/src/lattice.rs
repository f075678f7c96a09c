//! The bounded lattice of projector ranges.
//!
//! Elements are projectors ordered by inclusion of their ranges. Meet and
//! join are computed subspace-theoretically — exact intersection and span —
//! rather than by the product and sum formulas, which are only valid for
//! commuting members of one context; on those pairs the two routes agree,
//! and the subspace route extends the order to arbitrary pairs. Projectors
//! are recovered from subspaces by exact Gram-matrix inversion, so every
//! element of the lattice is itself a genuine projector.

use std::fmt;

use crate::linalg::{ExactMatrix, SubspaceBasis};
use crate::model::{Label, Projector};

/// Classification of an element as a logical constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantClass {
    /// The full space: true in every state.
    Tautology,
    /// The trivial space: false in every state.
    Contradiction,
    /// A proper nontrivial subspace.
    Contingent,
}

impl fmt::Display for ConstantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstantClass::Tautology => write!(f, "tautology"),
            ConstantClass::Contradiction => write!(f, "contradiction"),
            ConstantClass::Contingent => write!(f, "contingent"),
        }
    }
}

/// A projector together with its cached canonical range.
///
/// Equality ignores labels: two elements are equal when their projectors
/// (equivalently, their ranges) coincide.
#[derive(Clone, Debug)]
pub struct LatticeElement {
    projector: Projector,
    range: SubspaceBasis,
}

impl PartialEq for LatticeElement {
    fn eq(&self, other: &Self) -> bool {
        self.projector.matrix() == other.projector.matrix()
    }
}

impl Eq for LatticeElement {}

impl LatticeElement {
    pub fn from_projector(projector: &Projector) -> Self {
        let range = projector.matrix().range_basis();
        Self { projector: projector.clone(), range }
    }

    fn from_subspace(label: Label, range: SubspaceBasis) -> Self {
        let projector = Projector::new(label, range.projector())
            .expect("orthogonal projection onto a subspace is a projector");
        Self { projector, range }
    }

    /// The top element: the identity projector on the full space.
    pub fn top(dim: usize) -> Self {
        Self::from_subspace(Label::Custom("identity".to_string()), SubspaceBasis::full(dim))
    }

    /// The bottom element: the zero projector on the trivial space.
    pub fn bottom(dim: usize) -> Self {
        Self::from_subspace(Label::Custom("zero".to_string()), SubspaceBasis::empty(dim))
    }

    pub fn label(&self) -> &Label {
        self.projector.label()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        self.projector.matrix()
    }

    pub fn projector(&self) -> &Projector {
        &self.projector
    }

    pub fn range(&self) -> &SubspaceBasis {
        &self.range
    }

    pub fn ambient_dim(&self) -> usize {
        self.range.ambient_dim()
    }

    pub fn rank(&self) -> usize {
        self.range.dimension()
    }

    pub fn is_top(&self) -> bool {
        self.rank() == self.ambient_dim()
    }

    pub fn is_bottom(&self) -> bool {
        self.rank() == 0
    }

    /// Partial order: inclusion of ranges, decided by exact membership of
    /// the basis vectors.
    pub fn leq(&self, other: &Self) -> bool {
        assert_eq!(self.ambient_dim(), other.ambient_dim(), "ambient dimension mismatch");
        self.range.is_subspace_of(&other.range)
    }

    /// Greatest lower bound: the element whose range is the exact
    /// intersection of the two ranges.
    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim(), other.ambient_dim(), "ambient dimension mismatch");
        let range = self.range.intersect(&other.range);
        let label = Label::Custom(format!("meet({},{})", self.label(), other.label()));
        Self::from_subspace(label, range)
    }

    /// Least upper bound of a nonempty family: the span of the union of
    /// their ranges.
    pub fn join(elements: &[Self]) -> Self {
        let first = elements.first().expect("join of an empty family");
        let mut range = first.range.clone();
        for e in &elements[1..] {
            assert_eq!(first.ambient_dim(), e.ambient_dim(), "ambient dimension mismatch");
            range = range.span_with(&e.range);
        }
        let names: Vec<String> = elements.iter().map(|e| e.label().to_string()).collect();
        Self::from_subspace(Label::Custom(format!("join({})", names.join(","))), range)
    }

    /// Orthocomplement: the element with matrix `1 − P`, whose range is the
    /// kernel of `P`.
    pub fn orthocomplement(&self) -> Self {
        let dim = self.ambient_dim();
        let matrix = ExactMatrix::identity(dim).sub(self.matrix());
        let label = Label::Custom(format!("complement({})", self.label()));
        let projector = Projector::new(label, matrix).expect("1 - P is a projector");
        Self::from_projector(&projector)
    }

    /// Tautology iff top, contradiction iff bottom, contingent otherwise.
    pub fn classify(&self) -> ConstantClass {
        if self.is_top() {
            ConstantClass::Tautology
        } else if self.is_bottom() {
            ConstantClass::Contradiction
        } else {
            ConstantClass::Contingent
        }
    }
}
