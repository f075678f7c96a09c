//! State-induced partial bivalent valuations.
//!
//! A prepared state assigns 1 to every projector whose range contains it
//! and 0 to every projector whose kernel contains it; all other projectors
//! stay unvalued. Correlated product states settle exactly one context and
//! leave eight gaps; uncorrelated ones reach some kernels but no range, so
//! no operator is ever true. Either way the assignment is never total.
//!
//! Run with: `cargo run -p kslogic --example state_valuations`

use kslogic::model::{all_product_states, pauli_product_set, Axis, PreparedState, Sign};
use kslogic::valuation::{entailment_bivalent, state_induced, TruthValue};

fn main() {
    let set = pauli_product_set();

    // The fully-worked example: both spins up along z.
    let state = PreparedState::product(Axis::Z, Sign::Plus, Axis::Z, Sign::Plus);
    let v = state_induced(&state, &set).unwrap();
    println!("state z+z+ = {}:", state.vector());
    for (context, p) in set.projectors() {
        let value = match v.value(p.label()) {
            Some(t) => t.to_string(),
            None => "gap".to_string(),
        };
        println!("  [{context}] {}: {value}", p.label());
    }
    for context in set.contexts() {
        let report = entailment_bivalent(&v, context);
        println!(
            "  entailment on {}: {} ({} gaps)",
            context.name(),
            report.verdict,
            report.gaps.len()
        );
    }

    // Every one of the 36 product states leaves gaps.
    println!("\nstate      ones  zeros  gaps  total?");
    for state in all_product_states() {
        let v = state_induced(&state, &set).unwrap();
        let totality = v.totality(&set);
        let ones = set
            .projectors()
            .filter(|(_, p)| v.value(p.label()) == Some(TruthValue::True))
            .count();
        let zeros = set
            .projectors()
            .filter(|(_, p)| v.value(p.label()) == Some(TruthValue::False))
            .count();
        println!(
            "{:<10} {:>4} {:>6} {:>5}  {}",
            state.spec_string(),
            ones,
            zeros,
            totality.gaps.len(),
            totality.total,
        );
    }
    println!("\nno state induces a total bivalent assignment on the full set");
}
