//! Implementations of the `validate`, `valuate`, `color`, and `lattice`
//! commands. The binary is a thin argument parser over these functions;
//! each returns a [`Report`] carrying its exit code.
//!
//! Exit codes across all commands: 0 for success or an affirmative verdict,
//! 1 for a negative verdict (an invalid set under `validate`, an
//! uncolorable set under `color`), 2 for usage, parse, or input errors.

use std::fs;

use crate::coloring::{build_problem, solve, verify_coloring, ColoringStatus, SolveMode};
use crate::error::{Error, Result};
use crate::format::{parse_set_document, parse_state_spec};
use crate::lattice::LatticeElement;
use crate::model::{Label, OperatorSet, PreparedState};
use crate::report::{
    ColorReport, ContextRow, EntailmentRow, LatticeOpRow, LatticeReport, Report, ReportBody,
    SuperContextRow, SuperRow, ValidateReport, ValuateReport, ValuationRow,
};
use crate::scalar::format_rational;
use crate::valuation::{
    born, entailment_bivalent, entailment_born, state_induced, supervaluate, Formula, TruthValue,
};

/// Valuation semantics selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Semantics {
    Bivalent,
    Born,
    Super,
}

impl Semantics {
    fn name(self) -> &'static str {
        match self {
            Semantics::Bivalent => "bivalent",
            Semantics::Born => "born",
            Semantics::Super => "super",
        }
    }
}

/// Search mode selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMode {
    Decide,
    Enumerate,
}

fn load_set(path: &str) -> Result<OperatorSet> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read `{path}`: {e}")))?;
    parse_set_document(&text)?.to_operator_set()
}

fn require_valid(set: &OperatorSet) -> Result<()> {
    for validation in set.validate() {
        if !validation.valid() {
            return Err(Error::InvalidContext {
                name: validation.name.clone(),
                reason: "set must validate before valuation; run `validate` for details"
                    .to_string(),
            });
        }
    }
    Ok(())
}

/// The `validate` command: structural checks plus the commutation census.
pub fn run_validate(set_path: &str) -> Result<Report> {
    let set = load_set(set_path)?;
    let contexts: Vec<ContextRow> = set
        .validate()
        .into_iter()
        .map(|v| ContextRow {
            name: v.name.clone(),
            members: v.projector_count,
            all_projectors: v.all_projectors,
            sums_to_identity: v.sums_to_identity,
            pairwise_products_zero: v.pairwise_products_zero(),
            nonzero_products: v
                .nonzero_products
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            valid: v.valid(),
        })
        .collect();

    let commutation = set.commutation_report();
    let cross: Vec<_> = commutation.iter().filter(|e| !e.same_context).collect();
    let commuting_cross_pairs: Vec<(String, String)> = cross
        .iter()
        .filter(|e| e.commutes)
        .map(|e| (e.first.to_string(), e.second.to_string()))
        .collect();

    let all_valid = contexts.iter().all(|c| c.valid);
    Ok(Report {
        exit_code: i32::from(!all_valid),
        body: ReportBody::Validate(ValidateReport {
            set_path: set_path.to_string(),
            dimension: set.ambient_dim(),
            contexts,
            cross_pairs: cross.len(),
            cross_noncommuting: cross.iter().filter(|e| !e.commutes).count(),
            commuting_cross_pairs,
            all_valid,
        }),
    })
}

fn truth_string(value: Option<TruthValue>) -> String {
    match value {
        Some(t) => t.to_string(),
        None => "gap".to_string(),
    }
}

/// The `valuate` command: the per-operator table plus the sections for the
/// requested semantics.
pub fn run_valuate(set_path: &str, state_spec: &str, semantics: Semantics) -> Result<Report> {
    let set = load_set(set_path)?;
    require_valid(&set)?;
    let state: PreparedState =
        parse_state_spec(state_spec)?.to_prepared_state(set.ambient_dim())?;

    let bivalent = state_induced(&state, &set)?;
    let many_valued = born(&state, &set)?;

    let rows: Vec<ValuationRow> = set
        .projectors()
        .map(|(context, p)| {
            let membership = bivalent.membership(p.label()).expect("all labels covered");
            ValuationRow {
                context: context.to_string(),
                label: p.label().to_string(),
                bivalent: truth_string(bivalent.value(p.label())),
                born: format_rational(
                    many_valued.value(p.label()).expect("all labels covered"),
                ),
                in_range: membership.in_range,
                in_kernel: membership.in_kernel,
            }
        })
        .collect();

    let mut report = ValuateReport {
        set_path: set_path.to_string(),
        state_spec: state_spec.to_string(),
        state_vector: state.vector().entries().iter().map(ToString::to_string).collect(),
        state_norm_sq: format_rational(state.norm_sq()),
        correlated: state.correlated(),
        semantics: semantics.name().to_string(),
        rows,
        entailment: Vec::new(),
        total: None,
        gaps: Vec::new(),
        context_sums: Vec::new(),
        super_contexts: Vec::new(),
        notes: Vec::new(),
    };

    match semantics {
        Semantics::Bivalent => {
            report.entailment = set
                .contexts()
                .iter()
                .map(|c| {
                    let e = entailment_bivalent(&bivalent, c);
                    EntailmentRow {
                        context: e.context,
                        lhs: format_rational(&e.lhs),
                        value_sum: format_rational(&e.value_sum),
                        assigned: e.assigned,
                        nonzero: e.nonzero,
                        gaps: e.gaps.iter().map(ToString::to_string).collect(),
                        verdict: e.verdict.to_string(),
                    }
                })
                .collect();
            let totality = bivalent.totality(&set);
            report.total = Some(totality.total);
            report.gaps = totality.gaps.iter().map(ToString::to_string).collect();

            let ones = report.rows.iter().filter(|r| r.bivalent == "1").count();
            let zeros = report.rows.iter().filter(|r| r.bivalent == "0").count();
            if ones == 0 && zeros > 0 {
                report.notes.push(format!(
                    "the state lies in the range of no operator, yet kernel membership \
                     still assigns 0 to {zeros} operator(s); the assignment stays partial \
                     through its {} gap(s) alone",
                    report.gaps.len()
                ));
            }
        }
        Semantics::Born => {
            report.entailment = set
                .contexts()
                .iter()
                .map(|c| {
                    let e = entailment_born(&many_valued, c);
                    EntailmentRow {
                        context: e.context,
                        lhs: format_rational(&e.lhs),
                        value_sum: format_rational(&e.value_sum),
                        assigned: e.assigned,
                        nonzero: e.nonzero,
                        gaps: e.gaps.iter().map(ToString::to_string).collect(),
                        verdict: e.verdict.to_string(),
                    }
                })
                .collect();
            report.context_sums = set
                .contexts()
                .iter()
                .map(|c| (c.name().to_string(), format_rational(&many_valued.context_sum(c))))
                .collect();
        }
        Semantics::Super => {
            report.super_contexts = set
                .contexts()
                .iter()
                .map(|c| {
                    let atoms = c
                        .projectors()
                        .iter()
                        .map(|p| {
                            let verdict =
                                supervaluate(&bivalent, c, &Formula::Atom(p.label().clone()))?;
                            Ok(SuperRow {
                                target: verdict.target.to_string(),
                                verdict: verdict.verdict.to_string(),
                                completions: verdict.completions_examined,
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let disjunction =
                        supervaluate(&bivalent, c, &Formula::context_disjunction(c))?;
                    Ok(SuperContextRow {
                        context: c.name().to_string(),
                        atoms,
                        disjunction: SuperRow {
                            target: disjunction.target.to_string(),
                            verdict: disjunction.verdict.to_string(),
                            completions: disjunction.completions_examined,
                        },
                    })
                })
                .collect::<Result<Vec<_>>>()?;
        }
    }

    Ok(Report { exit_code: 0, body: ReportBody::Valuate(report) })
}

/// The `color` command: build the instance, search, certify.
pub fn run_color(set_path: &str, mode: ColorMode, limit: Option<u64>) -> Result<Report> {
    let set = load_set(set_path)?;
    let problem = build_problem(&set)?;
    let solve_mode = match (mode, limit) {
        (ColorMode::Decide, _) => SolveMode::Decide,
        (ColorMode::Enumerate, None) => SolveMode::Enumerate,
        (ColorMode::Enumerate, Some(limit)) => SolveMode::EnumerateUpTo(limit),
    };
    let result = solve(&problem, solve_mode);

    let witness_rows: Vec<(String, u8)> = match &result.witness {
        Some(witness) => set
            .projectors()
            .map(|(_, p)| {
                (
                    p.label().to_string(),
                    u8::from(witness[p.label()].as_bool()),
                )
            })
            .collect(),
        None => Vec::new(),
    };
    let witness_verified = result
        .witness
        .as_ref()
        .map(|w| verify_coloring(&problem, w))
        .transpose()?;

    Ok(Report {
        exit_code: i32::from(result.status == ColoringStatus::Uncolorable),
        body: ReportBody::Color(ColorReport {
            set_path: set_path.to_string(),
            mode: match mode {
                ColorMode::Decide => "decide".to_string(),
                ColorMode::Enumerate => "enumerate".to_string(),
            },
            limit,
            variables: problem.variable_count(),
            identified: problem.identified_count(),
            orthogonality_edges: problem.edges().len(),
            status: result.status.to_string(),
            count: result.count,
            witness: witness_rows,
            witness_verified,
            nodes_explored: result.nodes_explored,
        }),
    })
}

/// Resolves one selector: a projector label, or `@name` for every member
/// of the named context.
fn resolve_selector(set: &OperatorSet, selector: &str) -> Result<Vec<LatticeElement>> {
    if let Some(name) = selector.strip_prefix('@') {
        let context = set.context(name).ok_or_else(|| Error::UnknownLabel {
            label: selector.to_string(),
        })?;
        return Ok(context
            .projectors()
            .iter()
            .map(LatticeElement::from_projector)
            .collect());
    }
    let projector = set
        .projector(&Label::parse(selector))
        .ok_or_else(|| Error::UnknownLabel {
            label: selector.to_string(),
        })?;
    Ok(vec![LatticeElement::from_projector(projector)])
}

fn element_row(op: &str, args: Vec<String>, element: &LatticeElement) -> LatticeOpRow {
    let matrix = element.matrix();
    let rows = (0..matrix.rows())
        .map(|r| (0..matrix.cols()).map(|c| matrix.entry(r, c).to_string()).collect())
        .collect();
    LatticeOpRow {
        op: op.to_string(),
        args,
        result_bool: None,
        result_matrix: Some(rows),
        rank: Some(element.rank()),
        classification: Some(element.classify().to_string()),
    }
}

/// The `lattice` command: a semicolon-separated program of `meet`, `join`,
/// `leq`, and `complement` operations over labeled elements.
pub fn run_lattice(set_path: &str, ops: &str) -> Result<Report> {
    let set = load_set(set_path)?;
    let mut operations = Vec::new();
    for chunk in ops.split(';') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let mut tokens = chunk.split_whitespace();
        let op = tokens.next().expect("nonempty chunk");
        let selectors: Vec<&str> = tokens.collect();
        let mut elements = Vec::new();
        for selector in &selectors {
            elements.extend(resolve_selector(&set, selector)?);
        }
        let args: Vec<String> = selectors.iter().map(|s| s.to_string()).collect();
        let arity_error = |needed: &str| Error::Parse {
            line: 0,
            message: format!("`{op}` needs {needed}, got {} element(s)", elements.len()),
        };
        match op {
            "meet" => {
                if elements.len() != 2 {
                    return Err(arity_error("exactly two elements"));
                }
                let result = elements[0].meet(&elements[1]);
                operations.push(element_row("meet", args, &result));
            }
            "join" => {
                if elements.is_empty() {
                    return Err(arity_error("at least one element"));
                }
                let result = LatticeElement::join(&elements);
                operations.push(element_row("join", args, &result));
            }
            "leq" => {
                if elements.len() != 2 {
                    return Err(arity_error("exactly two elements"));
                }
                operations.push(LatticeOpRow {
                    op: "leq".to_string(),
                    args,
                    result_bool: Some(elements[0].leq(&elements[1])),
                    result_matrix: None,
                    rank: None,
                    classification: None,
                });
            }
            "complement" => {
                if elements.len() != 1 {
                    return Err(arity_error("exactly one element"));
                }
                let result = elements[0].orthocomplement();
                operations.push(element_row("complement", args, &result));
            }
            other => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!(
                        "unknown lattice operation `{other}` (expected meet, join, leq, complement)"
                    ),
                });
            }
        }
    }
    Ok(Report {
        exit_code: 0,
        body: ReportBody::Lattice(LatticeReport {
            set_path: set_path.to_string(),
            dimension: set.ambient_dim(),
            operations,
        }),
    })
}
