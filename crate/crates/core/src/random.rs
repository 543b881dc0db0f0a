//! Seeded random inputs for the property corpora.

use rand::Rng;

use crate::chevalley::PolySystem;
use crate::field::{PrimeField, Residue};
use crate::graph::Graph;
use crate::monomial::ExponentVector;
use crate::poly::Polynomial;

/// Up to `max_terms` terms with exponents in `0..=max_exp` and random
/// coefficients. May come out as zero if everything cancels.
pub fn random_polynomial<W: Residue, R: Rng>(
    rng: &mut R,
    field: PrimeField<W>,
    arity: usize,
    max_terms: usize,
    max_exp: u32,
) -> Polynomial<W> {
    let p = field.modulus();
    let count = rng.gen_range(1..=max_terms.max(1));
    let mut f = Polynomial::zero(field, arity);
    for _ in 0..count {
        let e: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..=max_exp)).collect();
        let c = rng.gen_range(1..p);
        f.add_term(ExponentVector::new(e), field.from_u64(c));
    }
    f
}

/// A random polynomial of total degree at most `max_degree`.
pub fn random_polynomial_of_degree<W: Residue, R: Rng>(
    rng: &mut R,
    field: PrimeField<W>,
    arity: usize,
    max_terms: usize,
    max_degree: u32,
) -> Polynomial<W> {
    let p = field.modulus();
    let count = rng.gen_range(1..=max_terms.max(1));
    let mut f = Polynomial::zero(field, arity);
    for _ in 0..count {
        let mut budget = rng.gen_range(0..=max_degree);
        let mut e = vec![0u32; arity];
        while budget > 0 && arity > 0 {
            e[rng.gen_range(0..arity)] += 1;
            budget -= 1;
        }
        let c = rng.gen_range(1..p);
        f.add_term(ExponentVector::new(e), field.from_u64(c));
    }
    f
}

/// `m` random members, each of degree at most `max_degree`, forced nonzero.
pub fn random_system<W: Residue, R: Rng>(
    rng: &mut R,
    field: PrimeField<W>,
    arity: usize,
    m: usize,
    max_degree: u32,
) -> PolySystem<W> {
    let polys = (0..m)
        .map(|_| loop {
            let f = random_polynomial_of_degree(rng, field, arity, 4, max_degree);
            if !f.is_zero() {
                break f;
            }
        })
        .collect();
    PolySystem::new(polys).expect("members share field and arity")
}

/// Random system on `n` variables whose degree sum is below `n`.
pub fn random_low_degree_system<W: Residue, R: Rng>(
    rng: &mut R,
    field: PrimeField<W>,
    arity: usize,
) -> PolySystem<W> {
    assert!(arity >= 2);
    let mut remaining = arity as u32 - 1;
    let mut polys = Vec::new();
    while remaining > 0 {
        let d = rng.gen_range(1..=remaining);
        let f = loop {
            let f = random_polynomial_of_degree(rng, field, arity, 5, d);
            if !f.is_zero() {
                break f;
            }
        };
        remaining -= f.total_degree().finite().unwrap_or(0) as u32;
        polys.push(f);
        if rng.gen_bool(0.4) {
            break;
        }
    }
    PolySystem::new(polys).expect("members share field and arity")
}

/// Erdős–Rényi style graph with edge probability `density`.
pub fn random_graph<R: Rng>(rng: &mut R, vertex_count: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..vertex_count {
        for v in u + 1..vertex_count {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertex_count, edges).expect("simple graph")
}
