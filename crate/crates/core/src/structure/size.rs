use serde::{Deserialize, Serialize};

use crate::algebra::{IrreducibleComponent, MonomialIdeal};
use crate::cohomology;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::vertex_set::VertexSet;

/// `size = v + (n - h) - 1`, where `h` is the height of the sum of all
/// primary components and `v` the fewest components whose sum has the same
/// radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeReport {
    pub v: usize,
    pub h: usize,
    pub size: usize,
}

const MAX_COMPONENTS: usize = 24;

fn primary_components(ideal: &MonomialIdeal) -> Result<Vec<(VertexSet, MonomialIdeal)>> {
    let components = ideal.irreducible_decomposition()?;
    let mut primes: Vec<VertexSet> = components
        .iter()
        .map(IrreducibleComponent::support)
        .collect();
    primes.sort();
    primes.dedup();
    let n = ideal.ambient();
    primes
        .into_iter()
        .map(|p| {
            let group: Vec<MonomialIdeal> = components
                .iter()
                .filter(|q| q.support() == p)
                .map(IrreducibleComponent::to_ideal)
                .collect();
            Ok((p, MonomialIdeal::intersect_all(n, group.iter())?))
        })
        .collect()
}

fn too_many(count: usize) -> Error {
    Error::Unsupported(format!(
        "{count} primary components exceed the size search bound {MAX_COMPONENTS}"
    ))
}

/// Size from the associated primes: `h = |∪ P|` and `v` a minimum cover of
/// that union by associated primes.
pub fn size(ideal: &MonomialIdeal) -> Result<SizeReport> {
    ideal.require_proper_nonzero()?;
    let primes = ideal.associated_primes()?;
    if primes.len() > MAX_COMPONENTS {
        return Err(too_many(primes.len()));
    }
    let union = primes.iter().fold(VertexSet::EMPTY, |u, p| u.union(*p));
    let v = (1u64..1 << primes.len())
        .filter(|mask| {
            let cover = primes
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(VertexSet::EMPTY, |u, (_, p)| u.union(*p));
            cover == union
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the full family covers");
    let h = union.len();
    Ok(SizeReport {
        v,
        h,
        size: v + (ideal.ambient() - h) - 1,
    })
}

/// Size computed literally: primary components grouped by prime, `h` the
/// height of the radical of their sum, `v` the smallest subfamily whose sum
/// has that radical.
pub fn size_by_sums(ideal: &MonomialIdeal) -> Result<SizeReport> {
    ideal.require_proper_nonzero()?;
    let comps = primary_components(ideal)?;
    if comps.len() > MAX_COMPONENTS {
        return Err(too_many(comps.len()));
    }
    let n = ideal.ambient();
    let sum_of = |mask: u64| -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::zero(n);
        for (k, (_, q)) in comps.iter().enumerate() {
            if mask >> k & 1 == 1 {
                acc = acc.sum(q)?;
            }
        }
        Ok(acc.radical())
    };
    let full = sum_of((1u64 << comps.len()) - 1)?;
    let h = full.height()?;
    let mut v = comps.len();
    for mask in 1u64..1 << comps.len() {
        let k = mask.count_ones() as usize;
        if k < v && sum_of(mask)? == full {
            v = k;
        }
    }
    Ok(SizeReport {
        v,
        h,
        size: v + (n - h) - 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyubeznikReport {
    pub depth: usize,
    pub size: SizeReport,
    pub holds: bool,
}

/// Compares `depth S/I` from local cohomology with `size I`.
pub fn check_lyubeznik_bound(ideal: &MonomialIdeal, field: FieldSpec) -> Result<LyubeznikReport> {
    let size = size(ideal)?;
    let depth = cohomology::depth(ideal, field)?;
    Ok(LyubeznikReport {
        depth,
        size,
        holds: depth >= size.size,
    })
}
