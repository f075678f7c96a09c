//! Build the bundled operator set and check its structure.
//!
//! The set holds twelve rank-1 projectors on ℂ⁴, grouped into three
//! contexts `Cz`, `Cx`, `Cy`. Within a context the members sum to the
//! identity and pairwise annihilate; across contexts no pair commutes.
//!
//! Run with: `cargo run -p kslogic --example build_operator_set`

use kslogic::model::pauli_product_set;

fn main() {
    let set = pauli_product_set();

    for context in set.contexts() {
        println!("context {}", context.name());
        for p in context.projectors() {
            println!("{}:", p.label());
            println!("{}", p.matrix().pretty());
        }
        let validation = context.validate();
        println!(
            "sum = identity: {}, pairwise products zero: {}\n",
            validation.sums_to_identity,
            validation.pairwise_products_zero(),
        );
    }

    let commutation = set.commutation_report();
    let cross_total = commutation.iter().filter(|e| !e.same_context).count();
    let cross_noncommuting = commutation
        .iter()
        .filter(|e| !e.same_context && !e.commutes)
        .count();
    println!("cross-context pairs: {cross_noncommuting} of {cross_total} noncommuting");

    // No product of operators from different contexts is itself a projector.
    let mut non_projector_products = 0;
    for (ci, p) in set.projectors() {
        for (cj, q) in set.projectors() {
            if ci != cj && !p.matrix().mul(q.matrix()).unwrap().is_projector() {
                non_projector_products += 1;
            }
        }
    }
    println!("cross-context products that fail the projector test: {non_projector_products} of 96");
}
