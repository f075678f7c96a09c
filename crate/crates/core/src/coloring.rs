//! Noncontextual bivalent-assignment search over arbitrary operator sets.
//!
//! Noncontextuality is encoded by identification: projectors with exactly
//! equal matrices share one variable, wherever they occur. A coloring must
//! make exactly one member of every context true and may never make two
//! orthogonal projectors true simultaneously, within or across contexts.
//!
//! The search is plain chronological backtracking in a fixed order —
//! contexts as listed, members as listed, value 1 tried before 0. The
//! target instances are tiny, so determinism is worth more than cleverness;
//! identical inputs reproduce the witness and the node count exactly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{Label, OperatorSet};
use crate::valuation::TruthValue;

/// One search variable: a maximal group of exactly-equal projectors.
#[derive(Clone, Debug)]
pub struct Variable {
    /// Label of the first occurrence; used in reports.
    pub representative: Label,
    /// Labels of every occurrence, in set order.
    pub occurrences: Vec<Label>,
}

/// A coloring instance: the identification grouping, the per-context
/// variable lists, and all exact orthogonality edges.
#[derive(Clone, Debug)]
pub struct ColoringProblem {
    set: OperatorSet,
    variables: Vec<Variable>,
    /// Variable ids per context, one entry per member in listed order.
    context_vars: Vec<Vec<usize>>,
    /// Orthogonal pairs of distinct variables, `u < v`.
    edges: Vec<(usize, usize)>,
    /// Variables whose matrix is zero; never assignable to true.
    self_orthogonal: Vec<bool>,
}

impl ColoringProblem {
    pub fn set(&self) -> &OperatorSet {
        &self.set
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of members absorbed into an earlier variable.
    pub fn identified_count(&self) -> usize {
        self.set.projector_count() - self.variables.len()
    }
}

/// Builds the coloring instance for a set whose contexts all validate.
pub fn build_problem(set: &OperatorSet) -> Result<ColoringProblem> {
    for validation in set.validate() {
        if !validation.valid() {
            return Err(Error::InvalidContext {
                name: validation.name.clone(),
                reason: if !validation.sums_to_identity {
                    "members do not sum to the identity".to_string()
                } else {
                    "within-context products are not all zero".to_string()
                },
            });
        }
    }

    let mut variables: Vec<Variable> = Vec::new();
    let mut matrices = Vec::new();
    let mut context_vars = Vec::new();
    for context in set.contexts() {
        let mut vars = Vec::with_capacity(context.len());
        for p in context.projectors() {
            let id = match matrices.iter().position(|m| m == p.matrix()) {
                Some(id) => {
                    variables[id].occurrences.push(p.label().clone());
                    id
                }
                None => {
                    matrices.push(p.matrix().clone());
                    variables.push(Variable {
                        representative: p.label().clone(),
                        occurrences: vec![p.label().clone()],
                    });
                    variables.len() - 1
                }
            };
            vars.push(id);
        }
        context_vars.push(vars);
    }

    let mut edges = Vec::new();
    for u in 0..matrices.len() {
        for v in u + 1..matrices.len() {
            if matrices[u].mul(&matrices[v]).unwrap().is_zero() {
                edges.push((u, v));
            }
        }
    }
    let self_orthogonal = matrices.iter().map(|m| m.is_zero()).collect();

    Ok(ColoringProblem {
        set: set.clone(),
        variables,
        context_vars,
        edges,
        self_orthogonal,
    })
}

/// How much of the solution space to explore.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Stop at the first witness.
    Decide,
    /// Count every solution.
    Enumerate,
    /// Count solutions up to a cap.
    EnumerateUpTo(u64),
}

/// Whether a bivalent noncontextual assignment exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringStatus {
    Colorable,
    Uncolorable,
}

impl std::fmt::Display for ColoringStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColoringStatus::Colorable => write!(f, "colorable"),
            ColoringStatus::Uncolorable => write!(f, "uncolorable"),
        }
    }
}

/// Search outcome with certificate data.
#[derive(Clone, Debug)]
pub struct ColoringResult {
    pub status: ColoringStatus,
    /// First witness in search order, keyed by every occurrence label.
    pub witness: Option<BTreeMap<Label, TruthValue>>,
    /// Solution count; present unless the mode was `Decide`.
    pub count: Option<u64>,
    /// Number of value assignments attempted.
    pub nodes_explored: u64,
}

struct Search<'p> {
    problem: &'p ColoringProblem,
    mode: SolveMode,
    assignment: Vec<Option<bool>>,
    neighbors: Vec<Vec<usize>>,
    /// Contexts (by index) in which each variable occurs, with multiplicity.
    var_contexts: Vec<Vec<usize>>,
    nodes: u64,
    count: u64,
    witness: Option<Vec<bool>>,
    done: bool,
}

impl<'p> Search<'p> {
    fn new(problem: &'p ColoringProblem, mode: SolveMode) -> Self {
        let n = problem.variables.len();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &problem.edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        let mut var_contexts = vec![Vec::new(); n];
        for (ci, vars) in problem.context_vars.iter().enumerate() {
            for &v in vars {
                if !var_contexts[v].contains(&ci) {
                    var_contexts[v].push(ci);
                }
            }
        }
        Self {
            problem,
            mode,
            assignment: vec![None; n],
            neighbors,
            var_contexts,
            nodes: 0,
            count: 0,
            witness: None,
            done: false,
        }
    }

    /// Checks the constraints that mention `var` against the current
    /// partial assignment.
    fn consistent_after(&self, var: usize) -> bool {
        let value = self.assignment[var].unwrap();
        if value {
            if self.problem.self_orthogonal[var] {
                return false;
            }
            if self.neighbors[var]
                .iter()
                .any(|&u| self.assignment[u] == Some(true))
            {
                return false;
            }
        }
        for &ci in &self.var_contexts[var] {
            let vars = &self.problem.context_vars[ci];
            let trues = vars
                .iter()
                .filter(|&&u| self.assignment[u] == Some(true))
                .count();
            if trues > 1 {
                return false;
            }
            let unassigned = vars.iter().filter(|&&u| self.assignment[u].is_none()).count();
            if unassigned == 0 && trues != 1 {
                return false;
            }
        }
        true
    }

    fn record_solution(&mut self) {
        self.count += 1;
        if self.witness.is_none() {
            self.witness = Some(
                self.assignment
                    .iter()
                    .map(|v| v.expect("solutions are total"))
                    .collect(),
            );
        }
        match self.mode {
            SolveMode::Decide => self.done = true,
            SolveMode::EnumerateUpTo(limit) if self.count >= limit => self.done = true,
            _ => {}
        }
    }

    fn search(&mut self, var: usize) {
        if self.done {
            return;
        }
        if var == self.assignment.len() {
            self.record_solution();
            return;
        }
        for value in [true, false] {
            self.assignment[var] = Some(value);
            self.nodes += 1;
            if self.consistent_after(var) {
                self.search(var + 1);
            }
            self.assignment[var] = None;
            if self.done {
                return;
            }
        }
    }
}

/// Runs the backtracking search.
pub fn solve(problem: &ColoringProblem, mode: SolveMode) -> ColoringResult {
    let mut search = Search::new(problem, mode);
    if problem.variables.is_empty() {
        // An empty set is vacuously colorable by the empty assignment.
        search.count = 1;
        search.witness = Some(Vec::new());
    } else {
        search.search(0);
    }
    let status = if search.count > 0 {
        ColoringStatus::Colorable
    } else {
        ColoringStatus::Uncolorable
    };
    let witness = search.witness.map(|values| {
        let mut map = BTreeMap::new();
        for (var, value) in search.problem.variables.iter().zip(&values) {
            let tv = if *value { TruthValue::True } else { TruthValue::False };
            for label in &var.occurrences {
                map.insert(label.clone(), tv);
            }
        }
        map
    });
    ColoringResult {
        status,
        witness,
        count: match mode {
            SolveMode::Decide => None,
            _ => Some(search.count),
        },
        nodes_explored: search.nodes,
    }
}

/// Independent witness check, straight from the matrices: every member
/// assigned, equal matrices equally valued, exactly one true member per
/// context, and no two orthogonal members both true.
pub fn verify_coloring(
    problem: &ColoringProblem,
    witness: &BTreeMap<Label, TruthValue>,
) -> Result<bool> {
    let set = problem.set();
    for (_, p) in set.projectors() {
        if !witness.contains_key(p.label()) {
            return Err(Error::UnassignedVariable {
                label: p.label().to_string(),
            });
        }
    }
    let all: Vec<_> = set.projectors().collect();
    for (i, (_, p)) in all.iter().enumerate() {
        for (_, q) in &all[i + 1..] {
            let same_value = witness[p.label()] == witness[q.label()];
            if p.matrix() == q.matrix() && !same_value {
                return Ok(false);
            }
            if witness[p.label()].as_bool()
                && witness[q.label()].as_bool()
                && p.matrix().mul(q.matrix()).unwrap().is_zero()
            {
                return Ok(false);
            }
        }
    }
    for context in set.contexts() {
        let trues = context
            .projectors()
            .iter()
            .filter(|p| witness[p.label()].as_bool())
            .count();
        if trues != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
