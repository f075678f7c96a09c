//! Shared helpers for the integration suites: an independent brute-force
//! coloring oracle and a deterministic random operator-set generator.
//!
//! Each test target uses its own subset of these helpers.
#![allow(dead_code)]

use kslogic::linalg::{ray_projector, ExactMatrix, ExactVector};
use kslogic::model::{Context, Label, OperatorSet, Projector};
use kslogic::scalar::{rational, GaussianRational};
use rand::Rng;

/// Counts noncontextual colorings by enumerating all 2^n assignments to
/// the distinct matrices of the set and filtering by the constraints.
/// Shares nothing with the backtracking solver.
pub fn oracle_coloring_count(set: &OperatorSet) -> u64 {
    let mut matrices: Vec<ExactMatrix> = Vec::new();
    let mut member_vars: Vec<Vec<usize>> = Vec::new();
    for context in set.contexts() {
        let mut vars = Vec::new();
        for p in context.projectors() {
            let id = match matrices.iter().position(|m| m == p.matrix()) {
                Some(id) => id,
                None => {
                    matrices.push(p.matrix().clone());
                    matrices.len() - 1
                }
            };
            vars.push(id);
        }
        member_vars.push(vars);
    }
    let n = matrices.len();
    assert!(n <= 20, "oracle is exponential; keep sets small");

    // Bitmask of partners each variable must not be true alongside;
    // includes the variable itself when its matrix is zero.
    let mut conflict = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if matrices[i].mul(&matrices[j]).unwrap().is_zero() {
                conflict[i] |= 1 << j;
            }
        }
    }
    let context_masks: Vec<u32> = member_vars
        .iter()
        .map(|vars| vars.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    // A variable occurring twice in one context would make the popcount
    // test below unsound; only the zero matrix can repeat and it never
    // helps a coloring, so rule the case out instead of handling it.
    for vars in &member_vars {
        let mut seen = 0u32;
        for &v in vars {
            assert_eq!(seen & (1 << v), 0, "duplicate matrix inside one context");
            seen |= 1 << v;
        }
    }

    let mut count = 0u64;
    'outer: for mask in 0u32..(1u32 << n) {
        for i in 0..n {
            if mask & (1 << i) != 0 && conflict[i] & mask != 0 {
                continue 'outer;
            }
        }
        for ctx in &context_masks {
            if (mask & ctx).count_ones() != 1 {
                continue 'outer;
            }
        }
        count += 1;
    }
    count
}

fn small_scalar(rng: &mut impl Rng) -> GaussianRational {
    GaussianRational::new(
        rational(rng.gen_range(-2i64..=2), 1),
        rational(rng.gen_range(-1i64..=1), 1),
    )
}

fn random_vector(rng: &mut impl Rng, dim: usize) -> ExactVector {
    ExactVector::new((0..dim).map(|_| small_scalar(rng)).collect())
}

/// Exact Gram–Schmidt: returns `dim` pairwise orthogonal nonzero vectors.
fn random_orthogonal_basis(rng: &mut impl Rng, dim: usize) -> Vec<ExactVector> {
    let mut basis: Vec<ExactVector> = Vec::new();
    while basis.len() < dim {
        let mut candidate = random_vector(rng, dim);
        for b in &basis {
            let coeff = b.inner(&candidate).checked_div(&GaussianRational::from_real(b.norm_sq()));
            candidate = candidate.sub(&b.scale(&coeff.unwrap()));
        }
        if !candidate.is_zero() {
            basis.push(candidate);
        }
    }
    basis
}

/// Swaps two orthogonal vectors for a different orthogonal pair spanning
/// the same plane, keeping everything inside the rationals.
fn rotate_pair(basis: &mut [ExactVector], i: usize, j: usize) {
    let u = basis[i].clone();
    let w = basis[j].clone();
    let new_u = u.add(&w);
    let new_w = u
        .scale(&GaussianRational::from_real(w.norm_sq()))
        .sub(&w.scale(&GaussianRational::from_real(u.norm_sq())));
    basis[i] = new_u;
    basis[j] = new_w;
}

/// Groups an orthogonal basis into a context: each group's projector is
/// the sum of its ray projectors.
fn context_from_basis(
    name: String,
    label_prefix: &str,
    rng: &mut impl Rng,
    basis: &[ExactVector],
) -> Context {
    let dim = basis[0].dim();
    let groups = rng.gen_range(2..=basis.len().max(2)).min(basis.len());
    // Deal basis vectors into groups, every group nonempty.
    let mut assignment: Vec<usize> = (0..basis.len()).map(|k| k % groups).collect();
    for k in 0..assignment.len() {
        let swap_with = rng.gen_range(0..assignment.len());
        assignment.swap(k, swap_with);
    }
    let mut projectors = Vec::new();
    for g in 0..groups {
        let mut matrix = ExactMatrix::zero(dim, dim);
        for (k, v) in basis.iter().enumerate() {
            if assignment[k] == g {
                matrix = matrix.add(&ray_projector(v).unwrap());
            }
        }
        projectors.push(
            Projector::new(Label::Custom(format!("{label_prefix}_m{g}")), matrix)
                .expect("orthogonal group sums are projectors"),
        );
    }
    Context::new(name, projectors)
}

/// A random valid operator set: 1–3 contexts over dimension 2–4, with a
/// chance of shared projectors and cross-context orthogonality between
/// contexts derived from a common basis.
pub fn random_operator_set(rng: &mut impl Rng) -> OperatorSet {
    let dim = rng.gen_range(2usize..=4);
    let n_contexts = rng.gen_range(1usize..=3);
    let base = random_orthogonal_basis(rng, dim);
    let mut contexts = Vec::new();
    for ci in 0..n_contexts {
        let basis = if ci == 0 || rng.gen_bool(0.4) {
            if ci == 0 {
                base.clone()
            } else {
                random_orthogonal_basis(rng, dim)
            }
        } else {
            let mut mutated = base.clone();
            if dim >= 2 {
                let i = rng.gen_range(0..dim - 1);
                rotate_pair(&mut mutated, i, i + 1);
            }
            mutated
        };
        contexts.push(context_from_basis(
            format!("C{ci}"),
            &format!("c{ci}"),
            rng,
            &basis,
        ));
    }
    let set = OperatorSet::new(contexts, dim).expect("generated set is well-formed");
    for validation in set.validate() {
        assert!(validation.valid(), "generator must produce valid contexts");
    }
    set
}
