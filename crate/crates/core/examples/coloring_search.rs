//! Noncontextual coloring search with certificates.
//!
//! The bundled product set has no shared rays and no cross-context
//! orthogonality, so its 4·4·4 one-true-per-context selections are all
//! admissible: 64 colorings. The bundled 18-ray set shares every ray
//! between two of its nine contexts, and the search exhausts the tree
//! without finding a single coloring.
//!
//! Run with: `cargo run -p kslogic --example coloring_search`

use std::path::Path;

use kslogic::coloring::{build_problem, solve, verify_coloring, SolveMode};
use kslogic::format::parse_set_document;
use kslogic::model::pauli_product_set;

fn main() {
    let problem = build_problem(&pauli_product_set()).unwrap();
    println!(
        "product set: {} variables, {} orthogonality edges, {} members identified away",
        problem.variable_count(),
        problem.edges().len(),
        problem.identified_count(),
    );
    let result = solve(&problem, SolveMode::Enumerate);
    println!(
        "status: {}, solutions: {}, nodes explored: {}",
        result.status,
        result.count.unwrap(),
        result.nodes_explored
    );
    let witness = result.witness.unwrap();
    let trues: Vec<String> = witness
        .iter()
        .filter(|(_, v)| v.as_bool())
        .map(|(l, _)| l.to_string())
        .collect();
    println!("first witness marks true: {}", trues.join(", "));
    println!(
        "witness passes the independent check: {}\n",
        verify_coloring(&problem, &witness).unwrap()
    );

    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/uncolorable_18ray.txt");
    let text = std::fs::read_to_string(data).unwrap();
    let set = parse_set_document(&text).unwrap().to_operator_set().unwrap();
    let problem = build_problem(&set).unwrap();
    println!(
        "18-ray set: {} members collapse to {} variables, {} orthogonality edges",
        set.projector_count(),
        problem.variable_count(),
        problem.edges().len(),
    );
    let result = solve(&problem, SolveMode::Enumerate);
    println!(
        "status: {}, solutions: {}, nodes explored: {}",
        result.status,
        result.count.unwrap(),
        result.nodes_explored
    );
    println!("every ray sits in two contexts, so the nine context-truths would have to pair up;");
    println!("an odd number of contexts rules every assignment out");
}
