//! The operator-set file format, round-tripping, and state specs.
//!
//! Sets are line-oriented text; members are either `ray` vectors (turned
//! into the projector onto their span) or explicit `matrix` grids. Every
//! scalar uses the canonical exact encoding (`1/4-1/4i`, `0`, `1i`), which
//! parses and prints byte-identically.
//!
//! Run with: `cargo run -p kslogic --example custom_set_files`

use kslogic::format::{parse_set_document, parse_state_spec, print_set_document};
use kslogic::valuation::{state_induced, TruthValue};

const DOC: &str = "\
# a two-dimensional toy set with two incompatible contexts
dim 2
meta name toy
context up-down
member up ray 1,0
member down ray 0,1
context side-side
member plus ray 1,1
member minus ray 1,-1
";

fn main() {
    let doc = parse_set_document(DOC).unwrap();
    println!(
        "parsed `{}`: dimension {}, {} contexts",
        doc.metadata[0].1,
        doc.dimension,
        doc.contexts.len()
    );

    let set = doc.to_operator_set().unwrap();
    for validation in set.validate() {
        println!(
            "context {}: valid = {}",
            validation.name,
            validation.valid()
        );
    }

    // Rays become projectors onto their span.
    let plus = set.projector(&kslogic::model::Label::parse("plus")).unwrap();
    println!("\nprojector for ray (1,1):");
    println!("{}", plus.matrix().pretty());

    // Printing and reparsing reproduces the same document.
    let printed = print_set_document(&doc);
    assert_eq!(parse_set_document(&printed).unwrap(), doc);
    println!("round trip: parse(print(doc)) == doc\n");

    // States come either as product specs or explicit vectors.
    let state = parse_state_spec("vec:1,0").unwrap().to_prepared_state(2).unwrap();
    let v = state_induced(&state, &set).unwrap();
    for (context, p) in set.projectors() {
        let value = match v.value(p.label()) {
            Some(TruthValue::True) => "1",
            Some(TruthValue::False) => "0",
            None => "gap",
        };
        println!("[{context}] {}: {value}", p.label());
    }

    // Errors carry the offending line.
    let bad = "dim 2\ncontext a\nmember broken ray 2/4,1\n";
    println!("\nmalformed document: {}", parse_set_document(bad).unwrap_err());
}
