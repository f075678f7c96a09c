//! On-disk formats for operator sets and states.
//!
//! A set document is line-oriented text. `#` starts a comment, blank lines
//! are ignored, and every scalar uses the canonical encoding from
//! [`crate::scalar`], which forbids whitespace inside a scalar:
//!
//! ```text
//! dim 4
//! meta name my-set
//! context Cz
//! member P_z++ matrix 1,0,0,0;0,0,0,0;0,0,0,0;0,0,0,0
//! member r1 ray 1,0,0,0
//! ```
//!
//! `dim` and any `meta` lines come first; each `context` line opens a
//! context and each `member` line adds either a `ray` (comma-separated
//! entries, converted to the projector onto its span) or a `matrix`
//! (rows separated by `;`, entries by `,`). Labels must be unique across
//! the whole document.
//!
//! A state spec is either the four-character product form `z+x+` (axis,
//! sign, axis, sign) or an explicit vector `vec:1,0,0,0`.

use crate::error::{Error, Result};
use crate::linalg::{ray_projector, ExactMatrix, ExactVector};
use crate::model::{Axis, Context, Label, OperatorSet, PreparedState, Projector, Sign};

/// One member of a context document: a ray or an explicit matrix, both as
/// canonical scalar strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberBody {
    Ray(Vec<String>),
    Matrix(Vec<Vec<String>>),
}

/// A labeled member line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberDoc {
    pub label: String,
    pub body: MemberBody,
}

/// One context block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContextDoc {
    pub name: String,
    pub members: Vec<MemberDoc>,
}

/// A parsed operator-set document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetDocument {
    pub dimension: usize,
    pub metadata: Vec<(String, String)>,
    pub contexts: Vec<ContextDoc>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn check_scalar(line: usize, text: &str) -> Result<()> {
    text.parse::<crate::scalar::GaussianRational>()
        .map(|_| ())
        .map_err(|e| parse_err(line, e.to_string()))
}

/// Parses a set document, reporting the line of the first problem.
pub fn parse_set_document(text: &str) -> Result<SetDocument> {
    let mut dimension: Option<usize> = None;
    let mut metadata = Vec::new();
    let mut contexts: Vec<ContextDoc> = Vec::new();
    let mut labels_seen: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("nonempty line has a token");
        match keyword {
            "dim" => {
                if dimension.is_some() {
                    return Err(parse_err(line_no, "duplicate `dim` line"));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| parse_err(line_no, "`dim` needs a value"))?;
                let value: usize = value
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("invalid dimension `{value}`")))?;
                if value == 0 {
                    return Err(parse_err(line_no, "dimension must be positive"));
                }
                dimension = Some(value);
            }
            "meta" => {
                if !contexts.is_empty() {
                    return Err(parse_err(line_no, "`meta` lines must precede contexts"));
                }
                let key = tokens
                    .next()
                    .ok_or_else(|| parse_err(line_no, "`meta` needs a key"))?;
                let value = tokens.collect::<Vec<_>>().join(" ");
                metadata.push((key.to_string(), value));
            }
            "context" => {
                let name = tokens
                    .next()
                    .ok_or_else(|| parse_err(line_no, "`context` needs a name"))?;
                if tokens.next().is_some() {
                    return Err(parse_err(line_no, "unexpected tokens after context name"));
                }
                if contexts.iter().any(|c| c.name == name) {
                    return Err(parse_err(line_no, format!("duplicate context `{name}`")));
                }
                contexts.push(ContextDoc { name: name.to_string(), members: Vec::new() });
            }
            "member" => {
                let context = contexts
                    .last_mut()
                    .ok_or_else(|| parse_err(line_no, "`member` before any `context`"))?;
                let label = tokens
                    .next()
                    .ok_or_else(|| parse_err(line_no, "`member` needs a label"))?;
                if labels_seen.iter().any(|l| l == label) {
                    return Err(parse_err(line_no, format!("duplicate label `{label}`")));
                }
                let kind = tokens
                    .next()
                    .ok_or_else(|| parse_err(line_no, "member needs `ray` or `matrix`"))?;
                let payload = tokens
                    .next()
                    .ok_or_else(|| parse_err(line_no, "member needs entries"))?;
                if tokens.next().is_some() {
                    return Err(parse_err(line_no, "unexpected tokens after member entries"));
                }
                let body = match kind {
                    "ray" => {
                        let entries: Vec<String> =
                            payload.split(',').map(str::to_string).collect();
                        for e in &entries {
                            check_scalar(line_no, e)?;
                        }
                        MemberBody::Ray(entries)
                    }
                    "matrix" => {
                        let rows: Vec<Vec<String>> = payload
                            .split(';')
                            .map(|row| row.split(',').map(str::to_string).collect())
                            .collect();
                        for row in &rows {
                            for e in row {
                                check_scalar(line_no, e)?;
                            }
                        }
                        MemberBody::Matrix(rows)
                    }
                    other => {
                        return Err(parse_err(
                            line_no,
                            format!("member kind must be `ray` or `matrix`, got `{other}`"),
                        ))
                    }
                };
                labels_seen.push(label.to_string());
                context.members.push(MemberDoc { label: label.to_string(), body });
            }
            other => {
                return Err(parse_err(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    let dimension =
        dimension.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `dim` line"))?;
    Ok(SetDocument { dimension, metadata, contexts })
}

/// Canonical rendering; `parse_set_document` inverts it exactly.
pub fn print_set_document(doc: &SetDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {}\n", doc.dimension));
    for (key, value) in &doc.metadata {
        if value.is_empty() {
            out.push_str(&format!("meta {key}\n"));
        } else {
            out.push_str(&format!("meta {key} {value}\n"));
        }
    }
    for context in &doc.contexts {
        out.push_str(&format!("context {}\n", context.name));
        for member in &context.members {
            match &member.body {
                MemberBody::Ray(entries) => {
                    out.push_str(&format!(
                        "member {} ray {}\n",
                        member.label,
                        entries.join(",")
                    ));
                }
                MemberBody::Matrix(rows) => {
                    let body = rows
                        .iter()
                        .map(|row| row.join(","))
                        .collect::<Vec<_>>()
                        .join(";");
                    out.push_str(&format!("member {} matrix {body}\n", member.label));
                }
            }
        }
    }
    out
}

impl SetDocument {
    /// Builds and checks the operator set: rays must be nonzero, matrices
    /// must be projectors of the declared dimension.
    pub fn to_operator_set(&self) -> Result<OperatorSet> {
        let dim = self.dimension;
        let mut contexts = Vec::with_capacity(self.contexts.len());
        for cdoc in &self.contexts {
            let mut projectors = Vec::with_capacity(cdoc.members.len());
            for member in &cdoc.members {
                let label = Label::parse(&member.label);
                let matrix = match &member.body {
                    MemberBody::Ray(entries) => {
                        let texts: Vec<&str> = entries.iter().map(String::as_str).collect();
                        let vector = ExactVector::parse(&texts)?;
                        if vector.dim() != dim {
                            return Err(Error::DimensionMismatch {
                                context: format!(
                                    "ray `{}` has {} entries, set dimension is {dim}",
                                    member.label,
                                    vector.dim()
                                ),
                            });
                        }
                        if vector.is_zero() {
                            return Err(Error::ZeroVector {
                                context: format!(
                                    "ray `{}` in context `{}`",
                                    member.label, cdoc.name
                                ),
                            });
                        }
                        ray_projector(&vector)?
                    }
                    MemberBody::Matrix(rows) => {
                        let parsed: Vec<&[String]> = rows.iter().map(Vec::as_slice).collect();
                        let mut grid = Vec::with_capacity(parsed.len());
                        for row in parsed {
                            let texts: Vec<&str> = row.iter().map(String::as_str).collect();
                            grid.push(ExactVector::parse(&texts)?.entries().to_vec());
                        }
                        let matrix = ExactMatrix::from_rows(grid)?;
                        if matrix.rows() != dim || matrix.cols() != dim {
                            return Err(Error::DimensionMismatch {
                                context: format!(
                                    "matrix `{}` is {}x{}, set dimension is {dim}",
                                    member.label,
                                    matrix.rows(),
                                    matrix.cols()
                                ),
                            });
                        }
                        matrix
                    }
                };
                projectors.push(Projector::new(label, matrix)?);
            }
            contexts.push(Context::new(cdoc.name.clone(), projectors));
        }
        OperatorSet::new(contexts, dim)
    }
}

/// Serializes an operator set as a matrix-bodied document.
pub fn set_document_from_operator_set(
    set: &OperatorSet,
    metadata: Vec<(String, String)>,
) -> SetDocument {
    let contexts = set
        .contexts()
        .iter()
        .map(|c| ContextDoc {
            name: c.name().to_string(),
            members: c
                .projectors()
                .iter()
                .map(|p| MemberDoc {
                    label: p.label().to_string(),
                    body: MemberBody::Matrix(
                        (0..p.matrix().rows())
                            .map(|r| {
                                (0..p.matrix().cols())
                                    .map(|c| p.matrix().entry(r, c).to_string())
                                    .collect()
                            })
                            .collect(),
                    ),
                })
                .collect(),
        })
        .collect();
    SetDocument { dimension: set.ambient_dim(), metadata, contexts }
}

/// The document form of [`crate::model::pauli_product_set`], with the
/// metadata the bundled data file carries. The file shipped in `data/` is
/// exactly `print_set_document(product_set_document())`, and a test keeps
/// the two from drifting apart.
pub fn product_set_document() -> SetDocument {
    set_document_from_operator_set(
        &crate::model::pauli_product_set(),
        vec![
            ("name".to_string(), "pauli-product-set".to_string()),
            (
                "description".to_string(),
                "three maximal contexts of two-particle spin product projectors".to_string(),
            ),
        ],
    )
}

/// How a state was specified on the command line or in a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateDocument {
    Builtin { j: Axis, alpha: Sign, k: Axis, beta: Sign },
    Explicit { entries: Vec<String> },
}

/// Parses a state spec: `z+x+` or `vec:1,0,0,0`.
pub fn parse_state_spec(spec: &str) -> Result<StateDocument> {
    let invalid = |reason: &str| Error::InvalidStateSpec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    if let Some(rest) = spec.strip_prefix("vec:") {
        let entries: Vec<String> = rest.split(',').map(str::to_string).collect();
        for e in &entries {
            e.parse::<crate::scalar::GaussianRational>()?;
        }
        return Ok(StateDocument::Explicit { entries });
    }
    let bytes = spec.as_bytes();
    if bytes.len() != 4 {
        return Err(invalid("expected axis/sign/axis/sign, e.g. `z+x+`"));
    }
    let axis = |b: u8| match b {
        b'x' => Ok(Axis::X),
        b'y' => Ok(Axis::Y),
        b'z' => Ok(Axis::Z),
        _ => Err(invalid("axis must be one of x, y, z")),
    };
    let sign = |b: u8| match b {
        b'+' => Ok(Sign::Plus),
        b'-' => Ok(Sign::Minus),
        _ => Err(invalid("sign must be `+` or `-`")),
    };
    Ok(StateDocument::Builtin {
        j: axis(bytes[0])?,
        alpha: sign(bytes[1])?,
        k: axis(bytes[2])?,
        beta: sign(bytes[3])?,
    })
}

impl StateDocument {
    /// Realizes the state against an ambient dimension.
    pub fn to_prepared_state(&self, dim: usize) -> Result<PreparedState> {
        match self {
            StateDocument::Builtin { j, alpha, k, beta } => {
                if dim != 4 {
                    return Err(Error::DimensionMismatch {
                        context: format!(
                            "product states have dimension 4, set dimension is {dim}"
                        ),
                    });
                }
                Ok(PreparedState::product(*j, *alpha, *k, *beta))
            }
            StateDocument::Explicit { entries } => {
                let texts: Vec<&str> = entries.iter().map(String::as_str).collect();
                let vector = ExactVector::parse(&texts)?;
                if vector.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        context: format!(
                            "state has {} entries, set dimension is {dim}",
                            vector.dim()
                        ),
                    });
                }
                PreparedState::explicit(vector)
            }
        }
    }
}
