//! Structured command results with two renderings.
//!
//! Every command produces one [`Report`]; the machine rendering is a JSON
//! document emitted with fixed key order and fixed formatting so that
//! identical inputs produce byte-identical output, and the human rendering
//! presents exactly the same data as text tables.

use std::fmt::Write as _;

/// Output rendering selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Human,
    Machine,
}

/// A deterministic JSON value: object keys keep insertion order.
#[derive(Clone, Debug)]
pub enum MachineValue {
    Bool(bool),
    UInt(u64),
    Str(String),
    Arr(Vec<MachineValue>),
    Obj(Vec<(&'static str, MachineValue)>),
}

impl MachineValue {
    pub fn str(s: impl Into<String>) -> Self {
        MachineValue::Str(s.into())
    }

    pub fn uint(n: usize) -> Self {
        MachineValue::UInt(n as u64)
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            MachineValue::Bool(b) => {
                let _ = write!(out, "{b}");
            }
            MachineValue::UInt(n) => {
                let _ = write!(out, "{n}");
            }
            MachineValue::Str(s) => write_json_string(out, s),
            MachineValue::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    push_indent(out, indent + 1);
                    item.write(out, indent + 1);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                push_indent(out, indent);
                out.push(']');
            }
            MachineValue::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push_str("{\n");
                for (i, (key, value)) in fields.iter().enumerate() {
                    push_indent(out, indent + 1);
                    write_json_string(out, key);
                    out.push_str(": ");
                    value.write(out, indent + 1);
                    if i + 1 < fields.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                push_indent(out, indent);
                out.push('}');
            }
        }
    }

    /// The full document, terminated by a newline.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }
}

fn push_indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn write_json_string(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

/// One row of a per-context validation table.
#[derive(Clone, Debug)]
pub struct ContextRow {
    pub name: String,
    pub members: usize,
    pub all_projectors: bool,
    pub sums_to_identity: bool,
    pub pairwise_products_zero: bool,
    pub nonzero_products: Vec<(String, String)>,
    pub valid: bool,
}

/// Result of `validate`.
#[derive(Clone, Debug)]
pub struct ValidateReport {
    pub set_path: String,
    pub dimension: usize,
    pub contexts: Vec<ContextRow>,
    pub cross_pairs: usize,
    pub cross_noncommuting: usize,
    pub commuting_cross_pairs: Vec<(String, String)>,
    pub all_valid: bool,
}

/// One operator row of a valuation table.
#[derive(Clone, Debug)]
pub struct ValuationRow {
    pub context: String,
    pub label: String,
    /// `"1"`, `"0"`, or `"gap"`.
    pub bivalent: String,
    /// Exact rational string.
    pub born: String,
    pub in_range: bool,
    pub in_kernel: bool,
}

/// One entailment verdict row.
#[derive(Clone, Debug)]
pub struct EntailmentRow {
    pub context: String,
    pub lhs: String,
    pub value_sum: String,
    pub assigned: usize,
    pub nonzero: usize,
    pub gaps: Vec<String>,
    pub verdict: String,
}

/// One supervaluation verdict row.
#[derive(Clone, Debug)]
pub struct SuperRow {
    pub target: String,
    pub verdict: String,
    pub completions: usize,
}

/// Supervaluation verdicts for one context.
#[derive(Clone, Debug)]
pub struct SuperContextRow {
    pub context: String,
    pub atoms: Vec<SuperRow>,
    pub disjunction: SuperRow,
}

/// Result of `valuate`.
#[derive(Clone, Debug)]
pub struct ValuateReport {
    pub set_path: String,
    pub state_spec: String,
    pub state_vector: Vec<String>,
    pub state_norm_sq: String,
    /// `Some` only for product states.
    pub correlated: Option<bool>,
    pub semantics: String,
    pub rows: Vec<ValuationRow>,
    pub entailment: Vec<EntailmentRow>,
    /// Bivalent semantics only.
    pub total: Option<bool>,
    pub gaps: Vec<String>,
    /// Born semantics only: per-context exact sums.
    pub context_sums: Vec<(String, String)>,
    /// Supervaluation semantics only.
    pub super_contexts: Vec<SuperContextRow>,
    pub notes: Vec<String>,
}

/// Result of `color`.
#[derive(Clone, Debug)]
pub struct ColorReport {
    pub set_path: String,
    pub mode: String,
    pub limit: Option<u64>,
    pub variables: usize,
    pub identified: usize,
    pub orthogonality_edges: usize,
    pub status: String,
    pub count: Option<u64>,
    /// Witness values in set order; empty when uncolorable.
    pub witness: Vec<(String, u8)>,
    pub witness_verified: Option<bool>,
    pub nodes_explored: u64,
}

/// One lattice computation row.
#[derive(Clone, Debug)]
pub struct LatticeOpRow {
    pub op: String,
    pub args: Vec<String>,
    pub result_bool: Option<bool>,
    pub result_matrix: Option<Vec<Vec<String>>>,
    pub rank: Option<usize>,
    pub classification: Option<String>,
}

/// Result of `lattice`.
#[derive(Clone, Debug)]
pub struct LatticeReport {
    pub set_path: String,
    pub dimension: usize,
    pub operations: Vec<LatticeOpRow>,
}

/// A rendered command result plus its process exit code.
#[derive(Clone, Debug)]
pub enum ReportBody {
    Validate(ValidateReport),
    Valuate(ValuateReport),
    Color(ColorReport),
    Lattice(LatticeReport),
}

#[derive(Clone, Debug)]
pub struct Report {
    pub body: ReportBody,
    pub exit_code: i32,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Machine => self.machine_value().render(),
            OutputFormat::Human => self.human(),
        }
    }

    fn machine_value(&self) -> MachineValue {
        match &self.body {
            ReportBody::Validate(r) => validate_machine(r),
            ReportBody::Valuate(r) => valuate_machine(r),
            ReportBody::Color(r) => color_machine(r),
            ReportBody::Lattice(r) => lattice_machine(r),
        }
    }

    fn human(&self) -> String {
        match &self.body {
            ReportBody::Validate(r) => validate_human(r),
            ReportBody::Valuate(r) => valuate_human(r),
            ReportBody::Color(r) => color_human(r),
            ReportBody::Lattice(r) => lattice_human(r),
        }
    }
}

fn pair_list(pairs: &[(String, String)]) -> MachineValue {
    MachineValue::Arr(
        pairs
            .iter()
            .map(|(a, b)| {
                MachineValue::Arr(vec![MachineValue::str(a.clone()), MachineValue::str(b.clone())])
            })
            .collect(),
    )
}

fn str_list(items: &[String]) -> MachineValue {
    MachineValue::Arr(items.iter().map(|s| MachineValue::str(s.clone())).collect())
}

fn matrix_value(rows: &[Vec<String>]) -> MachineValue {
    MachineValue::Arr(rows.iter().map(|row| str_list(row)).collect())
}

fn validate_machine(r: &ValidateReport) -> MachineValue {
    MachineValue::Obj(vec![
        ("command", MachineValue::str("validate")),
        ("set", MachineValue::str(r.set_path.clone())),
        ("dimension", MachineValue::uint(r.dimension)),
        (
            "contexts",
            MachineValue::Arr(
                r.contexts
                    .iter()
                    .map(|c| {
                        MachineValue::Obj(vec![
                            ("name", MachineValue::str(c.name.clone())),
                            ("members", MachineValue::uint(c.members)),
                            ("all_projectors", MachineValue::Bool(c.all_projectors)),
                            ("sums_to_identity", MachineValue::Bool(c.sums_to_identity)),
                            (
                                "pairwise_products_zero",
                                MachineValue::Bool(c.pairwise_products_zero),
                            ),
                            ("nonzero_products", pair_list(&c.nonzero_products)),
                            ("valid", MachineValue::Bool(c.valid)),
                        ])
                    })
                    .collect(),
            ),
        ),
        ("cross_context_pairs", MachineValue::uint(r.cross_pairs)),
        ("cross_noncommuting", MachineValue::uint(r.cross_noncommuting)),
        ("commuting_cross_pairs", pair_list(&r.commuting_cross_pairs)),
        ("all_valid", MachineValue::Bool(r.all_valid)),
    ])
}

fn valuate_machine(r: &ValuateReport) -> MachineValue {
    let mut fields = vec![
        ("command", MachineValue::str("valuate")),
        ("set", MachineValue::str(r.set_path.clone())),
        (
            "state",
            MachineValue::Obj(vec![
                ("spec", MachineValue::str(r.state_spec.clone())),
                ("vector", str_list(&r.state_vector)),
                ("norm_sq", MachineValue::str(r.state_norm_sq.clone())),
                (
                    "correlated",
                    match r.correlated {
                        Some(b) => MachineValue::Bool(b),
                        None => MachineValue::str("n/a"),
                    },
                ),
            ]),
        ),
        ("semantics", MachineValue::str(r.semantics.clone())),
        (
            "operators",
            MachineValue::Arr(
                r.rows
                    .iter()
                    .map(|row| {
                        MachineValue::Obj(vec![
                            ("context", MachineValue::str(row.context.clone())),
                            ("label", MachineValue::str(row.label.clone())),
                            ("bivalent", MachineValue::str(row.bivalent.clone())),
                            ("born", MachineValue::str(row.born.clone())),
                            ("in_ran", MachineValue::Bool(row.in_range)),
                            ("in_ker", MachineValue::Bool(row.in_kernel)),
                        ])
                    })
                    .collect(),
            ),
        ),
    ];
    if !r.entailment.is_empty() {
        fields.push((
            "entailment",
            MachineValue::Arr(
                r.entailment
                    .iter()
                    .map(|e| {
                        MachineValue::Obj(vec![
                            ("context", MachineValue::str(e.context.clone())),
                            ("lhs", MachineValue::str(e.lhs.clone())),
                            ("value_sum", MachineValue::str(e.value_sum.clone())),
                            ("assigned", MachineValue::uint(e.assigned)),
                            ("nonzero", MachineValue::uint(e.nonzero)),
                            ("gaps", str_list(&e.gaps)),
                            ("verdict", MachineValue::str(e.verdict.clone())),
                        ])
                    })
                    .collect(),
            ),
        ));
    }
    if let Some(total) = r.total {
        fields.push(("total", MachineValue::Bool(total)));
        fields.push(("gaps", str_list(&r.gaps)));
    }
    if !r.context_sums.is_empty() {
        fields.push((
            "context_sums",
            MachineValue::Arr(
                r.context_sums
                    .iter()
                    .map(|(name, sum)| {
                        MachineValue::Obj(vec![
                            ("context", MachineValue::str(name.clone())),
                            ("sum", MachineValue::str(sum.clone())),
                        ])
                    })
                    .collect(),
            ),
        ));
    }
    if !r.super_contexts.is_empty() {
        let super_row = |row: &SuperRow| {
            MachineValue::Obj(vec![
                ("target", MachineValue::str(row.target.clone())),
                ("verdict", MachineValue::str(row.verdict.clone())),
                ("completions", MachineValue::uint(row.completions)),
            ])
        };
        fields.push((
            "supervaluation",
            MachineValue::Arr(
                r.super_contexts
                    .iter()
                    .map(|sc| {
                        MachineValue::Obj(vec![
                            ("context", MachineValue::str(sc.context.clone())),
                            (
                                "atoms",
                                MachineValue::Arr(sc.atoms.iter().map(super_row).collect()),
                            ),
                            ("disjunction", super_row(&sc.disjunction)),
                        ])
                    })
                    .collect(),
            ),
        ));
    }
    if !r.notes.is_empty() {
        fields.push(("notes", str_list(&r.notes)));
    }
    MachineValue::Obj(fields)
}

fn color_machine(r: &ColorReport) -> MachineValue {
    let mut fields = vec![
        ("command", MachineValue::str("color")),
        ("set", MachineValue::str(r.set_path.clone())),
        ("mode", MachineValue::str(r.mode.clone())),
    ];
    if let Some(limit) = r.limit {
        fields.push(("limit", MachineValue::UInt(limit)));
    }
    fields.push(("variables", MachineValue::uint(r.variables)));
    fields.push(("identified_members", MachineValue::uint(r.identified)));
    fields.push(("orthogonality_edges", MachineValue::uint(r.orthogonality_edges)));
    fields.push(("status", MachineValue::str(r.status.clone())));
    if let Some(count) = r.count {
        fields.push(("count", MachineValue::UInt(count)));
    }
    fields.push((
        "witness",
        MachineValue::Arr(
            r.witness
                .iter()
                .map(|(label, value)| {
                    MachineValue::Obj(vec![
                        ("label", MachineValue::str(label.clone())),
                        ("value", MachineValue::UInt(u64::from(*value))),
                    ])
                })
                .collect(),
        ),
    ));
    if let Some(ok) = r.witness_verified {
        fields.push(("witness_verified", MachineValue::Bool(ok)));
    }
    fields.push(("nodes_explored", MachineValue::UInt(r.nodes_explored)));
    MachineValue::Obj(fields)
}

fn lattice_machine(r: &LatticeReport) -> MachineValue {
    MachineValue::Obj(vec![
        ("command", MachineValue::str("lattice")),
        ("set", MachineValue::str(r.set_path.clone())),
        ("dimension", MachineValue::uint(r.dimension)),
        (
            "operations",
            MachineValue::Arr(
                r.operations
                    .iter()
                    .map(|op| {
                        let mut fields = vec![
                            ("op", MachineValue::str(op.op.clone())),
                            ("args", str_list(&op.args)),
                        ];
                        if let Some(b) = op.result_bool {
                            fields.push(("result", MachineValue::Bool(b)));
                        }
                        if let Some(m) = &op.result_matrix {
                            fields.push(("matrix", matrix_value(m)));
                        }
                        if let Some(rank) = op.rank {
                            fields.push(("rank", MachineValue::uint(rank)));
                        }
                        if let Some(class) = &op.classification {
                            fields.push(("classification", MachineValue::str(class.clone())));
                        }
                        MachineValue::Obj(fields)
                    })
                    .collect(),
            ),
        ),
    ])
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate_human(r: &ValidateReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "operator set: {} (dimension {})", r.set_path, r.dimension);
    out.push('\n');
    for c in &r.contexts {
        let _ = writeln!(
            out,
            "context {}: {} members | projectors: {} | sum = identity: {} | pairwise products zero: {} -> {}",
            c.name,
            c.members,
            yes_no(c.all_projectors),
            yes_no(c.sums_to_identity),
            yes_no(c.pairwise_products_zero),
            if c.valid { "valid" } else { "INVALID" },
        );
        for (a, b) in &c.nonzero_products {
            let _ = writeln!(out, "  nonzero product: {a} * {b}");
        }
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "cross-context pairs: {} of {} noncommuting",
        r.cross_noncommuting, r.cross_pairs
    );
    for (a, b) in &r.commuting_cross_pairs {
        let _ = writeln!(out, "  commuting cross pair: {a} , {b}");
    }
    let _ = writeln!(
        out,
        "verdict: {}",
        if r.all_valid { "all contexts valid" } else { "some contexts invalid" }
    );
    out
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: Vec<String>, widths: &[usize]| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    out.push_str(&fmt_row(header.iter().map(|s| s.to_string()).collect(), &widths));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row.clone(), &widths));
        out.push('\n');
    }
    out
}

fn valuate_human(r: &ValuateReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "operator set: {}", r.set_path);
    let correlated = match r.correlated {
        Some(true) => ", correlated",
        Some(false) => ", uncorrelated",
        None => "",
    };
    let _ = writeln!(
        out,
        "state: {} = ({}), norm_sq {}{}",
        r.state_spec,
        r.state_vector.join(", "),
        r.state_norm_sq,
        correlated
    );
    let _ = writeln!(out, "semantics: {}", r.semantics);
    out.push('\n');

    let rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| {
            vec![
                row.context.clone(),
                row.label.clone(),
                row.bivalent.clone(),
                row.born.clone(),
                yes_no(row.in_range).to_string(),
                yes_no(row.in_kernel).to_string(),
            ]
        })
        .collect();
    out.push_str(&render_table(
        &["context", "operator", "bivalent", "born", "in_ran", "in_ker"],
        &rows,
    ));

    if !r.entailment.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "entailment per context:");
        for e in &r.entailment {
            let gaps = if e.gaps.is_empty() {
                String::new()
            } else {
                format!(", gaps: {}", e.gaps.join(" "))
            };
            let _ = writeln!(
                out,
                "  {}: {} (lhs {}, value sum {}, {} assigned, {} nonzero{})",
                e.context, e.verdict, e.lhs, e.value_sum, e.assigned, e.nonzero, gaps
            );
        }
    }
    if let Some(total) = r.total {
        out.push('\n');
        if total {
            let _ = writeln!(out, "totality: total (no gaps)");
        } else {
            let _ = writeln!(
                out,
                "totality: not total, {} gap(s): {}",
                r.gaps.len(),
                r.gaps.join(" ")
            );
        }
    }
    if !r.context_sums.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "per-context value sums:");
        for (name, sum) in &r.context_sums {
            let _ = writeln!(out, "  {name}: {sum}");
        }
    }
    if !r.super_contexts.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "supervaluation verdicts:");
        for sc in &r.super_contexts {
            let _ = writeln!(out, "  context {}:", sc.context);
            for atom in &sc.atoms {
                let _ = writeln!(
                    out,
                    "    {}: {} (admissible completions: {})",
                    atom.target, atom.verdict, atom.completions
                );
            }
            let _ = writeln!(
                out,
                "    {}: {} (admissible completions: {})",
                sc.disjunction.target, sc.disjunction.verdict, sc.disjunction.completions
            );
        }
    }
    if !r.notes.is_empty() {
        out.push('\n');
        for note in &r.notes {
            let _ = writeln!(out, "note: {note}");
        }
    }
    out
}

fn color_human(r: &ColorReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "operator set: {}", r.set_path);
    let limit = match r.limit {
        Some(l) => format!(" (limit {l})"),
        None => String::new(),
    };
    let _ = writeln!(out, "mode: {}{}", r.mode, limit);
    let _ = writeln!(
        out,
        "problem: {} variables ({} members identified away), {} orthogonality edges",
        r.variables, r.identified, r.orthogonality_edges
    );
    out.push('\n');
    let _ = writeln!(out, "status: {}", r.status);
    if let Some(count) = r.count {
        let _ = writeln!(out, "solutions: {count}");
    }
    if !r.witness.is_empty() {
        let assigned: Vec<String> = r
            .witness
            .iter()
            .map(|(label, value)| format!("{label}={value}"))
            .collect();
        let _ = writeln!(out, "witness: {}", assigned.join(" "));
    }
    if let Some(ok) = r.witness_verified {
        let _ = writeln!(out, "witness verified: {}", yes_no(ok));
    }
    let _ = writeln!(out, "nodes explored: {}", r.nodes_explored);
    out
}

fn lattice_human(r: &LatticeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "operator set: {} (dimension {})", r.set_path, r.dimension);
    for op in &r.operations {
        out.push('\n');
        let _ = writeln!(out, "{} {}:", op.op, op.args.join(" "));
        if let Some(b) = op.result_bool {
            let _ = writeln!(out, "  result: {b}");
        }
        if let Some(m) = &op.result_matrix {
            for row in m {
                let _ = writeln!(out, "  [ {} ]", row.join("  "));
            }
        }
        if let Some(rank) = op.rank {
            let _ = writeln!(out, "  rank: {rank}");
        }
        if let Some(class) = &op.classification {
            let _ = writeln!(out, "  classification: {class}");
        }
    }
    out
}
