//! Gap semantics: supervaluation over admissible completions.
//!
//! A formula over one context is supertrue when every admissible
//! completion of the partial valuation makes it true, superfalse when
//! every completion makes it false, and gapped otherwise. Admissible
//! means: total on the context, consistent with the values the state
//! already fixed, and exactly one member true. The context disjunction
//! comes out supertrue even when every single disjunct is gapped.
//!
//! Run with: `cargo run -p kslogic --example supervaluation`

use kslogic::model::{pauli_product_set, Axis, Label, PreparedState, Sign};
use kslogic::valuation::{state_induced, supervaluate, Formula};

fn main() {
    let set = pauli_product_set();
    let state = PreparedState::product(Axis::Z, Sign::Plus, Axis::Z, Sign::Plus);
    let v = state_induced(&state, &set).unwrap();

    for context in set.contexts() {
        println!("context {} under state z+z+:", context.name());
        for p in context.projectors() {
            let verdict = supervaluate(&v, context, &Formula::Atom(p.label().clone())).unwrap();
            println!(
                "  atom {}: {} ({} admissible completions)",
                p.label(),
                verdict.verdict,
                verdict.completions_examined
            );
        }
        let disjunction =
            supervaluate(&v, context, &Formula::context_disjunction(context)).unwrap();
        println!(
            "  {}: {} ({} admissible completions)",
            disjunction.target, disjunction.verdict, disjunction.completions_examined
        );
        let pair = Formula::Conjunction(
            context.projectors()[..2]
                .iter()
                .map(|p| p.label().clone())
                .collect(),
        );
        let conjunction = supervaluate(&v, context, &pair).unwrap();
        println!("  {}: {}", conjunction.target, conjunction.verdict);
        println!();
    }

    // Formulas may only mention members of the context they are checked on.
    let err = supervaluate(
        &v,
        set.context("Cx").unwrap(),
        &Formula::Atom(Label::parse("P_z++")),
    )
    .unwrap_err();
    println!("out-of-scope formula: {err}");
}
