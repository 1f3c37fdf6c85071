//! Seeded generators for campaigns. Every generator is a pure function of
//! its arguments.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{IrreducibleComponent, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use crate::structure::PureConfiguration;
use crate::vertex_set::VertexSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derive the seed of the `index`-th case of a campaign.
pub fn case_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Between `⌈max_gens / 2⌉` and `max_gens` random nonconstant generators
/// (before minimalization). Each exponent is 0 with a per-ideal probability
/// drawn from `[0.2, 0.7]`, otherwise uniform in `1..=max_exp`.
pub fn random_monomial_ideal(
    n: usize,
    max_exp: u32,
    max_gens: usize,
    seed: u64,
) -> Result<MonomialIdeal> {
    if n == 0 || max_exp == 0 || max_gens == 0 {
        return Err(Error::InvalidConfiguration(
            "n, max_exp and max_gens must be positive".into(),
        ));
    }
    let mut rng = rng(seed);
    let count = rng.gen_range(max_gens.div_ceil(2)..=max_gens);
    let sparsity = rng.gen_range(0.2..=0.7);
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let exps: Vec<u32> = (0..n)
            .map(|_| {
                if rng.gen_bool(sparsity) {
                    0
                } else {
                    rng.gen_range(1..=max_exp)
                }
            })
            .collect();
        if exps.iter().any(|&e| e > 0) {
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(n, gens)
}

/// `r` distinct `c`-subsets of `[n]`.
pub fn random_pure_configuration(
    n: usize,
    c: usize,
    r: usize,
    seed: u64,
) -> Result<PureConfiguration> {
    if c == 0 || c > n || r == 0 || binomial(n, c) < r as u128 {
        return Err(Error::InvalidConfiguration(format!(
            "cannot choose {r} distinct {c}-subsets of {n} vertices"
        )));
    }
    let mut rng = rng(seed);
    let mut faces: Vec<VertexSet> = Vec::with_capacity(r);
    while faces.len() < r {
        let face: VertexSet = sample(&mut rng, n, c).into_iter().collect();
        if !faces.contains(&face) {
            faces.push(face);
        }
    }
    PureConfiguration::new(n, faces)
}

/// An ideal with the same associated primes as `I`: one irreducible
/// component per associated prime with exponents drawn from `1..=max_exp`.
pub fn random_with_ass(ideal: &MonomialIdeal, max_exp: u32, seed: u64) -> Result<MonomialIdeal> {
    let primes = ideal.associated_primes()?;
    for p in &primes {
        if primes.iter().any(|q| q != p && q.is_subset(*p)) {
            return Err(Error::ComparablePrimes);
        }
    }
    let n = ideal.ambient();
    let mut rng = rng(seed);
    let components: Vec<MonomialIdeal> = primes
        .iter()
        .map(|p| {
            let exps = (0..n)
                .map(|i| {
                    if p.contains(i) {
                        rng.gen_range(1..=max_exp.max(1))
                    } else {
                        0
                    }
                })
                .collect();
            IrreducibleComponent::new(exps).to_ideal()
        })
        .collect();
    MonomialIdeal::intersect_all(n, components.iter())
}

/// A complex on `n` vertices spanned by between 2 and `max_facets` random
/// faces, each of a size drawn uniformly from `2..=n/2 + 1` (clamped to
/// `n`).
pub fn random_complex(n: usize, max_facets: usize, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 || n > 16 || max_facets == 0 {
        return Err(Error::InvalidConfiguration(
            "need 1..=16 vertices and a positive facet bound".into(),
        ));
    }
    let mut rng = rng(seed);
    let count = rng.gen_range(2.min(max_facets)..=max_facets);
    let faces: Vec<VertexSet> = (0..count)
        .map(|_| {
            let size = rng.gen_range(2.min(n)..=(n / 2 + 1).min(n));
            sample(&mut rng, n, size).into_iter().collect()
        })
        .collect();
    SimplicialComplex::from_faces(n, faces)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
