//! Acceptance suite: one test per criterion, every check exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

mod common;

use std::collections::BTreeMap;
use std::process::Command;

use kslogic::coloring::{build_problem, solve, verify_coloring, ColoringStatus, SolveMode};
use kslogic::lattice::{ConstantClass, LatticeElement};
use kslogic::linalg::{ExactMatrix, ExactVector, SubspaceBasis};
use kslogic::model::{
    all_product_states, pauli_product_set, Axis, Label, PreparedState, Sign,
};
use kslogic::valuation::{
    born, entailment_bivalent, entailment_born, state_induced, supervaluate, EntailmentVerdict,
    Formula, SuperVerdict, TruthValue,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(number: u32, name: &str) {
    println!("criterion {number:02} ({name}): PASS");
}

fn quarter_matrix(signs: [[&str; 4]; 4]) -> ExactMatrix {
    // Entries are 1/4 times a sign pattern drawn from {1, -1, i, -i}.
    let rows: Vec<Vec<kslogic::scalar::GaussianRational>> = signs
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| {
                    let text = match *s {
                        "1" => "1/4",
                        "-1" => "-1/4",
                        "i" => "1/4i",
                        "-i" => "-1/4i",
                        other => panic!("unknown sign {other}"),
                    };
                    text.parse().unwrap()
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).unwrap()
}

fn diag(entries: [i64; 4]) -> ExactMatrix {
    let mut m = vec![vec![kslogic::scalar::GaussianRational::zero(); 4]; 4];
    for (i, e) in entries.iter().enumerate() {
        m[i][i] = kslogic::scalar::GaussianRational::from_int(*e);
    }
    ExactMatrix::from_rows(m).unwrap()
}

/// The twelve published matrices, literally transcribed.
fn golden_matrices() -> Vec<(&'static str, ExactMatrix)> {
    vec![
        ("P_z++", diag([1, 0, 0, 0])),
        ("P_z+-", diag([0, 1, 0, 0])),
        ("P_z-+", diag([0, 0, 1, 0])),
        ("P_z--", diag([0, 0, 0, 1])),
        (
            "P_x++",
            quarter_matrix([
                ["1", "1", "1", "1"],
                ["1", "1", "1", "1"],
                ["1", "1", "1", "1"],
                ["1", "1", "1", "1"],
            ]),
        ),
        (
            "P_x+-",
            quarter_matrix([
                ["1", "-1", "1", "-1"],
                ["-1", "1", "-1", "1"],
                ["1", "-1", "1", "-1"],
                ["-1", "1", "-1", "1"],
            ]),
        ),
        (
            "P_x-+",
            quarter_matrix([
                ["1", "1", "-1", "-1"],
                ["1", "1", "-1", "-1"],
                ["-1", "-1", "1", "1"],
                ["-1", "-1", "1", "1"],
            ]),
        ),
        (
            "P_x--",
            quarter_matrix([
                ["1", "-1", "-1", "1"],
                ["-1", "1", "1", "-1"],
                ["-1", "1", "1", "-1"],
                ["1", "-1", "-1", "1"],
            ]),
        ),
        (
            "P_y++",
            quarter_matrix([
                ["1", "-i", "-i", "-1"],
                ["i", "1", "1", "-i"],
                ["i", "1", "1", "-i"],
                ["-1", "i", "i", "1"],
            ]),
        ),
        (
            "P_y+-",
            quarter_matrix([
                ["1", "i", "-i", "1"],
                ["-i", "1", "-1", "-i"],
                ["i", "-1", "1", "i"],
                ["1", "i", "-i", "1"],
            ]),
        ),
        (
            "P_y-+",
            quarter_matrix([
                ["1", "-i", "i", "1"],
                ["i", "1", "-1", "i"],
                ["-i", "-1", "1", "-i"],
                ["1", "-i", "i", "1"],
            ]),
        ),
        (
            "P_y--",
            quarter_matrix([
                ["1", "i", "i", "-1"],
                ["-i", "1", "1", "i"],
                ["-i", "1", "1", "i"],
                ["-1", "-i", "-i", "1"],
            ]),
        ),
    ]
}

fn unit(i: usize) -> ExactVector {
    ExactVector::unit(4, i)
}

fn vec4(entries: [&str; 4]) -> ExactVector {
    ExactVector::parse(&entries).unwrap()
}

#[test]
fn criterion_01_operator_set_structure() {
    let set = pauli_product_set();
    let golden = golden_matrices();
    let built: Vec<_> = set.projectors().collect();
    assert_eq!(built.len(), 12);
    for ((_, p), (label, matrix)) in built.iter().zip(&golden) {
        assert_eq!(&p.label().to_string(), label);
        assert_eq!(p.matrix(), matrix, "{label} differs from the published matrix");
    }
    for context in set.contexts() {
        let mut sum = ExactMatrix::zero(4, 4);
        for p in context.projectors() {
            assert!(p.matrix().is_projector());
            sum = sum.add(p.matrix());
        }
        assert!(sum.is_identity(), "{} does not resolve the identity", context.name());
        for (i, p) in context.projectors().iter().enumerate() {
            for q in &context.projectors()[i + 1..] {
                assert!(p.matrix().mul(q.matrix()).unwrap().is_zero());
                assert!(q.matrix().mul(p.matrix()).unwrap().is_zero());
            }
        }
    }
    pass(1, "operator-set structure");
}

#[test]
fn criterion_02_cross_context_noncommutativity() {
    let set = pauli_product_set();
    let all: Vec<_> = set.contexts().iter().enumerate().flat_map(|(ci, c)| {
        c.projectors().iter().map(move |p| (ci, p))
    }).collect();
    let mut cross_pairs = 0;
    for (i, (ci, p)) in all.iter().enumerate() {
        for (cj, q) in &all[i + 1..] {
            if ci == cj {
                continue;
            }
            cross_pairs += 1;
            let pq = p.matrix().mul(q.matrix()).unwrap();
            let qp = q.matrix().mul(p.matrix()).unwrap();
            assert_ne!(pq, qp, "{} and {} commute", p.label(), q.label());
        }
    }
    assert_eq!(cross_pairs, 48);
    pass(2, "cross-context noncommutativity");
}

#[test]
fn criterion_03_lattice_laws() {
    let set = pauli_product_set();

    // Ranges sit inside sibling kernels.
    for context in set.contexts() {
        for p in context.projectors() {
            for q in context.projectors() {
                if p.label() != q.label() {
                    assert!(p
                        .matrix()
                        .range_basis()
                        .is_subspace_of(&q.matrix().kernel_basis()));
                }
            }
        }
    }

    // Meets of within-context pairs are bottom and equal the product.
    for context in set.contexts() {
        let elements: Vec<_> = context
            .projectors()
            .iter()
            .map(LatticeElement::from_projector)
            .collect();
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                if i != j {
                    let meet = a.meet(b);
                    assert!(meet.is_bottom());
                    assert_eq!(meet.matrix(), &a.matrix().mul(b.matrix()).unwrap());
                }
            }
        }
        let join = LatticeElement::join(&elements);
        assert!(join.matrix().is_identity());
    }

    assert_eq!(LatticeElement::top(4).classify(), ConstantClass::Tautology);
    assert_eq!(LatticeElement::bottom(4).classify(), ConstantClass::Contradiction);

    // Partial order on the 14 elements.
    let mut elems: Vec<LatticeElement> = set
        .projectors()
        .map(|(_, p)| LatticeElement::from_projector(p))
        .collect();
    elems.push(LatticeElement::top(4));
    elems.push(LatticeElement::bottom(4));
    assert_eq!(elems.len(), 14);
    for a in &elems {
        assert!(a.leq(a));
        for b in &elems {
            if a.leq(b) && b.leq(a) {
                assert_eq!(a, b);
            }
            for c in &elems {
                if a.leq(b) && b.leq(c) {
                    assert!(a.leq(c));
                }
            }
        }
    }
    pass(3, "lattice laws");
}

#[test]
fn criterion_04_correlated_state_valuations() {
    let set = pauli_product_set();

    // The worked example: z+z+ settles Cz as (1, 0, 0, 0) in order.
    let v = state_induced(
        &PreparedState::product(Axis::Z, Sign::Plus, Axis::Z, Sign::Plus),
        &set,
    )
    .unwrap();
    let cz_values: Vec<_> = set.context("Cz").unwrap().projectors().iter()
        .map(|p| v.value(p.label()))
        .collect();
    assert_eq!(
        cz_values,
        vec![
            Some(TruthValue::True),
            Some(TruthValue::False),
            Some(TruthValue::False),
            Some(TruthValue::False),
        ]
    );
    assert_eq!(v.totality(&set).gaps.len(), 8);

    // Same pattern for all twelve correlated states.
    for state in all_product_states() {
        if state.correlated() != Some(true) {
            continue;
        }
        let axis = state.correlated_axis().unwrap();
        let v = state_induced(&state, &set).unwrap();
        let mut ones = Vec::new();
        let mut zeros = 0;
        for (context, p) in set.projectors() {
            match v.value(p.label()) {
                Some(TruthValue::True) => ones.push((context.to_string(), p.label().clone())),
                Some(TruthValue::False) => zeros += 1,
                None => {}
            }
        }
        assert_eq!(ones.len(), 1, "{}", state.spec_string());
        assert_eq!(zeros, 3, "{}", state.spec_string());
        assert_eq!(v.totality(&set).gaps.len(), 8, "{}", state.spec_string());
        assert_eq!(ones[0].0, format!("C{axis}"), "{}", state.spec_string());
    }
    pass(4, "correlated-state valuations");
}

#[test]
fn criterion_05_cross_context_gap_and_bases() {
    let set = pauli_product_set();
    let e1 = unit(0);
    let y_pp = set.projector(&Label::parse("P_y++")).unwrap();

    assert!(!y_pp.matrix().range_basis().contains(&e1));
    assert!(!y_pp.matrix().kernel_basis().contains(&e1));

    // Published parameterizations, up to canonical form.
    assert_eq!(
        y_pp.matrix().range_basis(),
        SubspaceBasis::new(4, vec![vec4(["1", "1i", "1i", "-1"])]).unwrap()
    );
    assert_eq!(
        y_pp.matrix().kernel_basis(),
        SubspaceBasis::new(
            4,
            vec![
                vec4(["1i", "1", "0", "0"]),
                vec4(["1i", "0", "1", "0"]),
                vec4(["1", "0", "0", "1"]),
            ]
        )
        .unwrap()
    );

    let z = |label: &str| set.projector(&Label::parse(label)).unwrap();
    assert_eq!(
        z("P_z++").matrix().range_basis(),
        SubspaceBasis::new(4, vec![unit(0)]).unwrap()
    );
    assert_eq!(
        z("P_z+-").matrix().kernel_basis(),
        SubspaceBasis::new(4, vec![unit(0), unit(2), unit(3)]).unwrap()
    );
    assert_eq!(
        z("P_z-+").matrix().kernel_basis(),
        SubspaceBasis::new(4, vec![unit(0), unit(1), unit(3)]).unwrap()
    );
    assert_eq!(
        z("P_z--").matrix().kernel_basis(),
        SubspaceBasis::new(4, vec![unit(0), unit(1), unit(2)]).unwrap()
    );
    pass(5, "cross-context gap and published bases");
}

#[test]
fn criterion_06_non_totality() {
    let set = pauli_product_set();
    for state in all_product_states() {
        let v = state_induced(&state, &set).unwrap();
        let totality = v.totality(&set);
        assert!(!totality.total, "{} is total", state.spec_string());
        assert!(!totality.gaps.is_empty());

        if state.correlated() == Some(false) {
            // Derive the expected counts independently via matrix action.
            let mut expect_ones = 0;
            let mut expect_zeros = 0;
            for (_, p) in set.projectors() {
                let image = p.matrix().apply(state.vector()).unwrap();
                if &image == state.vector() {
                    expect_ones += 1;
                } else if image.is_zero() {
                    expect_zeros += 1;
                }
            }
            assert_eq!(expect_ones, 0);
            assert_eq!(expect_zeros, 4);

            let ones = set
                .projectors()
                .filter(|(_, p)| v.value(p.label()) == Some(TruthValue::True))
                .count();
            let zeros = set
                .projectors()
                .filter(|(_, p)| v.value(p.label()) == Some(TruthValue::False))
                .count();
            assert_eq!(ones, 0, "{}", state.spec_string());
            assert_eq!(zeros, 4, "{}", state.spec_string());
            assert_eq!(totality.gaps.len(), 8, "{}", state.spec_string());
        }
    }

    // The command report flags that uncorrelated states still reach
    // kernels even though they reach no range.
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let set_path = manifest.join("data/pauli_product_set.txt");
    let report = kslogic::cli::run_valuate(
        set_path.to_str().unwrap(),
        "z+x+",
        kslogic::cli::Semantics::Bivalent,
    )
    .unwrap();
    match report.body {
        kslogic::report::ReportBody::Valuate(v) => {
            assert_eq!(v.notes.len(), 1);
            assert!(v.notes[0].contains("kernel membership"));
        }
        other => panic!("unexpected report {other:?}"),
    }
    pass(6, "non-totality over all 36 states");
}

#[test]
fn criterion_07_entailment() {
    let set = pauli_product_set();
    for state in all_product_states() {
        let bivalent = state_induced(&state, &set).unwrap();
        let many = born(&state, &set).unwrap();
        for context in set.contexts() {
            let b = entailment_bivalent(&bivalent, context);
            if state.correlated() == Some(true) {
                let preselected = format!("C{}", state.correlated_axis().unwrap());
                if context.name() == preselected {
                    assert_eq!(b.verdict, EntailmentVerdict::Holds);
                } else {
                    assert_eq!(b.verdict, EntailmentVerdict::FailsByGap);
                }
            }

            let m = entailment_born(&many, context);
            assert!(m.value_sum == kslogic::scalar::integer(1));
            let eigenstate = context
                .projectors()
                .iter()
                .any(|p| bivalent.value(p.label()) == Some(TruthValue::True));
            if eigenstate {
                assert_eq!(m.nonzero, 1);
                assert_eq!(m.verdict, EntailmentVerdict::Holds);
            } else {
                assert!(m.nonzero > 1, "{} on {}", state.spec_string(), context.name());
                assert_eq!(m.verdict, EntailmentVerdict::FailsByExcess);
            }
        }
    }
    pass(7, "entailment verdicts");
}

#[test]
fn criterion_08_born_valuation() {
    let set = pauli_product_set();
    let zero = kslogic::scalar::integer(0);
    let one = kslogic::scalar::integer(1);
    for state in all_product_states() {
        let bivalent = state_induced(&state, &set).unwrap();
        let many = born(&state, &set).unwrap();
        for (_, p) in set.projectors() {
            let value = many.value(p.label()).unwrap();
            assert!(value >= &zero && value <= &one);
            if let Some(t) = bivalent.value(p.label()) {
                assert_eq!(value, &t.as_rational());
            }
        }
        for context in set.contexts() {
            assert_eq!(many.context_sum(context), one);
        }
    }
    let spot = born(
        &PreparedState::product(Axis::Z, Sign::Plus, Axis::Z, Sign::Plus),
        &set,
    )
    .unwrap();
    assert_eq!(
        spot.value(&Label::parse("P_x++")).unwrap(),
        &kslogic::scalar::rational(1, 4)
    );
    pass(8, "many-valued valuation");
}

#[test]
fn criterion_09_supervaluation() {
    let set = pauli_product_set();

    let v = state_induced(
        &PreparedState::product(Axis::Z, Sign::Plus, Axis::Z, Sign::Plus),
        &set,
    )
    .unwrap();
    let cx = set.context("Cx").unwrap();
    let disjunction = supervaluate(&v, cx, &Formula::context_disjunction(cx)).unwrap();
    assert_eq!(disjunction.verdict, SuperVerdict::Supertrue);
    for p in cx.projectors() {
        let atom = supervaluate(&v, cx, &Formula::Atom(p.label().clone())).unwrap();
        assert_eq!(atom.verdict, SuperVerdict::Gap);
    }

    // Oracle agreement across all states, contexts, atoms, disjunctions.
    for state in all_product_states() {
        let v = state_induced(&state, &set).unwrap();
        for context in set.contexts() {
            let members: Vec<&Label> =
                context.projectors().iter().map(|p| p.label()).collect();
            let mut targets = vec![Formula::context_disjunction(context)];
            targets.extend(members.iter().map(|l| Formula::Atom((*l).clone())));
            for target in targets {
                let got = supervaluate(&v, context, &target).unwrap();
                let mut admissible = 0usize;
                let mut trues = 0usize;
                for mask in 0u32..(1 << members.len()) {
                    let assignment: BTreeMap<&Label, bool> = members
                        .iter()
                        .enumerate()
                        .map(|(i, l)| (*l, mask & (1 << i) != 0))
                        .collect();
                    if assignment.values().filter(|b| **b).count() != 1 {
                        continue;
                    }
                    let consistent = members.iter().all(|l| match v.value(l) {
                        Some(t) => t.as_bool() == assignment[l],
                        None => true,
                    });
                    if !consistent {
                        continue;
                    }
                    admissible += 1;
                    let value = match &target {
                        Formula::Atom(l) => assignment[l],
                        Formula::Disjunction(ls) => ls.iter().any(|l| assignment[l]),
                        Formula::Conjunction(ls) => ls.iter().all(|l| assignment[l]),
                    };
                    if value {
                        trues += 1;
                    }
                }
                let expected = if admissible == 0 {
                    SuperVerdict::Inconsistent
                } else if trues == admissible {
                    SuperVerdict::Supertrue
                } else if trues == 0 {
                    SuperVerdict::Superfalse
                } else {
                    SuperVerdict::Gap
                };
                assert_eq!(got.verdict, expected);
                assert_eq!(got.completions_examined, admissible);
            }
        }
    }
    pass(9, "supervaluation verdicts");
}

#[test]
fn criterion_10_coloring() {
    let set = pauli_product_set();
    let problem = build_problem(&set).unwrap();
    let result = solve(&problem, SolveMode::Enumerate);
    assert_eq!(result.status, ColoringStatus::Colorable);
    assert_eq!(result.count, Some(64));
    assert_eq!(common::oracle_coloring_count(&set), 64);
    assert!(verify_coloring(&problem, result.witness.as_ref().unwrap()).unwrap());

    // Oracle equivalence on twenty deterministic random sets.
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b53);
    for case in 0..20 {
        let random_set = common::random_operator_set(&mut rng);
        let problem = build_problem(&random_set).unwrap();
        let enumerated = solve(&problem, SolveMode::Enumerate);
        let expected = common::oracle_coloring_count(&random_set);
        assert_eq!(enumerated.count, Some(expected), "case {case}");
        let decided = solve(&problem, SolveMode::Decide);
        assert_eq!(
            decided.status == ColoringStatus::Colorable,
            expected > 0,
            "case {case}"
        );
        if let Some(witness) = &enumerated.witness {
            assert!(verify_coloring(&problem, witness).unwrap(), "case {case}");
        }
    }

    // Determinism across repeated runs.
    let again = solve(&build_problem(&set).unwrap(), SolveMode::Enumerate);
    assert_eq!(again.nodes_explored, result.nodes_explored);
    assert_eq!(again.witness, result.witness);
    assert_eq!(again.count, result.count);
    pass(10, "coloring search against the oracle");
}

struct CommandRun {
    stdout: Vec<u8>,
    code: i32,
}

fn run_cli(args: &[&str]) -> CommandRun {
    let output = Command::new(env!("CARGO_BIN_EXE_kslogic"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    CommandRun {
        stdout: output.stdout,
        code: output.status.code().expect("no signal"),
    }
}

fn assert_golden(name: &str, args: &[&str], expected_code: i32) {
    let run = run_cli(args);
    assert_eq!(run.code, expected_code, "exit code for {name}");
    let golden_path =
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{name}"));
    let expected = std::fs::read(&golden_path)
        .unwrap_or_else(|_| panic!("missing golden file {}", golden_path.display()));
    assert_eq!(
        run.stdout,
        expected,
        "{name} differs from its golden file\n--- got ---\n{}",
        String::from_utf8_lossy(&run.stdout)
    );
}

#[test]
fn criterion_11_cli_golden_files_and_exit_codes() {
    let set = "data/pauli_product_set.txt";
    assert_golden(
        "validate.json",
        &["validate", "--set", set, "--format", "machine"],
        0,
    );
    assert_golden(
        "valuate_bivalent.json",
        &["valuate", "--set", set, "--state", "z+z+", "--semantics", "bivalent", "--format", "machine"],
        0,
    );
    assert_golden(
        "valuate_born.json",
        &["valuate", "--set", set, "--state", "z+z+", "--semantics", "born", "--format", "machine"],
        0,
    );
    assert_golden(
        "valuate_super.json",
        &["valuate", "--set", set, "--state", "z+z+", "--semantics", "super", "--format", "machine"],
        0,
    );
    assert_golden(
        "lattice.json",
        &[
            "lattice",
            "--set",
            set,
            "--ops",
            "meet P_z++ P_z+-;join @Cz;complement P_z+-;leq P_z++ P_x++",
            "--format",
            "machine",
        ],
        0,
    );
    assert_golden(
        "color_enumerate.json",
        &["color", "--set", set, "--mode", "enumerate", "--format", "machine"],
        0,
    );

    // Byte-stability across runs.
    let first = run_cli(&["validate", "--set", set, "--format", "machine"]);
    let second = run_cli(&["validate", "--set", set, "--format", "machine"]);
    assert_eq!(first.stdout, second.stdout);

    // Exit-code contract: 0 affirmative, 1 negative verdict, 2 errors.
    assert_eq!(run_cli(&["color", "--set", set, "--mode", "decide"]).code, 0);
    assert_eq!(
        run_cli(&["color", "--set", "data/uncolorable_18ray.txt", "--mode", "decide"]).code,
        1
    );
    let corrupt = std::env::temp_dir().join(format!("kslogic-acc-{}.txt", std::process::id()));
    std::fs::write(
        &corrupt,
        "dim 4\ncontext A\nmember a ray 1,0,0,0\nmember b ray 0,1,0,0\nmember c ray 0,0,1,0\n",
    )
    .unwrap();
    assert_eq!(
        run_cli(&["validate", "--set", corrupt.to_str().unwrap()]).code,
        1
    );
    std::fs::remove_file(&corrupt).unwrap();
    assert_eq!(run_cli(&["validate", "--set", "data/missing.txt"]).code, 2);
    assert_eq!(
        run_cli(&["valuate", "--set", set, "--state", "q+q+"]).code,
        2
    );
    assert_eq!(
        run_cli(&["lattice", "--set", set, "--ops", "meet P_z++ P_q++"]).code,
        2
    );
    pass(11, "CLI golden files and exit codes");
}
