//! Many-valued semantics: exact squared projection amplitudes.
//!
//! Where the bivalent valuation leaves a gap, the state still fixes the
//! exact rational `⟨Ψ|P|Ψ⟩ / ⟨Ψ|Ψ⟩` in `[0,1]`. Per context those values
//! sum to exactly 1, and wherever the bivalent valuation is defined the
//! two agree, so the entailment failure shifts from "gap" to "more than
//! one proposition with nonzero value".
//!
//! Run with: `cargo run -p kslogic --example born_valuation`

use kslogic::model::{pauli_product_set, Axis, PreparedState, Sign};
use kslogic::scalar::{format_rational, rational};
use kslogic::valuation::{
    born, entailment_born, lukasiewicz_and, lukasiewicz_not, lukasiewicz_or, state_induced,
};

fn main() {
    let set = pauli_product_set();
    let state = PreparedState::product(Axis::Z, Sign::Plus, Axis::Z, Sign::Plus);
    let many = born(&state, &set).unwrap();
    let bivalent = state_induced(&state, &set).unwrap();

    println!("state z+z+:");
    for (context, p) in set.projectors() {
        let value = many.value(p.label()).unwrap();
        let agreement = match bivalent.value(p.label()) {
            Some(t) => format!("bivalent {t}"),
            None => "bivalent gap".to_string(),
        };
        println!(
            "  [{context}] {}: {} ({agreement})",
            p.label(),
            format_rational(value)
        );
    }

    println!("\nper-context sums and entailment:");
    for context in set.contexts() {
        let report = entailment_born(&many, context);
        println!(
            "  {}: sum {}, {} nonzero -> {}",
            context.name(),
            format_rational(&report.value_sum),
            report.nonzero,
            report.verdict
        );
    }

    // The connectives of the infinite-valued logic, on the exact values.
    let quarter = rational(1, 4);
    println!("\ninfinite-valued connectives on 1/4:");
    println!(
        "  and(1/4, 1/4) = {}",
        format_rational(&lukasiewicz_and(&quarter, &quarter).unwrap())
    );
    println!(
        "  or(1/4, 1/4) = {}",
        format_rational(&lukasiewicz_or(&quarter, &quarter).unwrap())
    );
    println!(
        "  not(1/4) = {}",
        format_rational(&lukasiewicz_not(&quarter).unwrap())
    );
    let or_all = set.contexts()[1]
        .projectors()
        .iter()
        .map(|p| many.value(p.label()).unwrap().clone())
        .try_fold(rational(0, 1), |acc, v| lukasiewicz_or(&acc, &v))
        .unwrap();
    println!("  or over all of Cx = {}", format_rational(&or_all));
}
