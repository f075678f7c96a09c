//! The bounded lattice of projector ranges.
//!
//! Partial order is range inclusion; meet is exact subspace intersection;
//! join is the span of the union; orthocomplement is `1 − P`. For members
//! of one context the meet agrees with the operator product and the join
//! over the whole context is the identity.
//!
//! Run with: `cargo run -p kslogic --example lattice_operations`

use kslogic::lattice::LatticeElement;
use kslogic::model::{build_projector, pauli_product_set, Axis, Sign};

fn main() {
    let a = LatticeElement::from_projector(&build_projector(Axis::Z, Sign::Plus, Sign::Plus));
    let b = LatticeElement::from_projector(&build_projector(Axis::Z, Sign::Plus, Sign::Minus));
    let x = LatticeElement::from_projector(&build_projector(Axis::X, Sign::Plus, Sign::Plus));

    let meet = a.meet(&b);
    println!("meet of {} and {} (same context):", a.label(), b.label());
    println!("{}", meet.matrix().pretty());
    println!("classification: {}", meet.classify());
    println!(
        "agrees with the operator product: {}\n",
        meet.matrix() == &a.matrix().mul(b.matrix()).unwrap()
    );

    let cross = a.meet(&x);
    println!("meet of {} and {} (different contexts):", a.label(), x.label());
    println!("rank {} -> {}\n", cross.rank(), cross.classify());

    let set = pauli_product_set();
    for context in set.contexts() {
        let elements: Vec<LatticeElement> = context
            .projectors()
            .iter()
            .map(LatticeElement::from_projector)
            .collect();
        let join = LatticeElement::join(&elements);
        println!(
            "join over {}: rank {}, {}",
            context.name(),
            join.rank(),
            join.classify()
        );
    }

    println!();
    let complement = b.orthocomplement();
    println!("complement of {}:", b.label());
    println!("{}", complement.matrix().pretty());
    println!(
        "range of the complement equals the kernel of the original: {}",
        complement.range() == &b.matrix().kernel_basis()
    );

    println!();
    println!("{} <= complement({}): {}", a.label(), b.label(), a.leq(&b.orthocomplement()));
    println!("{} <= {}: {}", a.label(), x.label(), a.leq(&x));
    println!("bottom <= top: {}", LatticeElement::bottom(4).leq(&LatticeElement::top(4)));
}
