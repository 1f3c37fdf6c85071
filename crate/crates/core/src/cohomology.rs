//! Local cohomology of `S/I` with respect to the maximal ideal, computed with
//! the degree-complex formula
//!
//! ```text
//! dim_K H^i_m(S/I)_a = dim_K H̃_{i-|G_a|-1}(Δ_a(I); K)
//! ```
//!
//! for `a_j <= t_j - 1` and `G_a` a face of the Stanley-Reisner complex of
//! `√I`, and zero otherwise. `Δ_a(I)` is unchanged when an entry `a_j <= -1`
//! is moved further down, so the infinitely many degrees collapse to the
//! finitely many clamps with entries in `{-1} ∪ [0, t_j - 1]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::MonomialIdeal;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::simplicial::{delta_a, reduced_homology, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// A representative of the family of degrees `a` with `a_j <= -1` exactly on
/// the negative support and `a_j = entries[j]` elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClampedDegree {
    entries: Vec<i64>,
}

impl ClampedDegree {
    /// Clamps an arbitrary degree into `{-1} ∪ [0, t_j - 1]`; `None` when
    /// some `a_j >= t_j` (then every cohomology module vanishes in degree `a`).
    pub fn clamp(a: &[i64], t: &[u32]) -> Option<ClampedDegree> {
        a.iter()
            .zip(t)
            .map(|(&aj, &tj)| (aj < i64::from(tj)).then_some(aj.max(-1)))
            .collect::<Option<Vec<_>>>()
            .map(|entries| ClampedDegree { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `G_a`.
    pub fn negative_support(&self) -> VertexSet {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < 0)
            .map(|(j, _)| j)
            .collect()
    }

    /// Largest total degree in the family, attained at `a_j = -1` on `G_a`.
    pub fn max_total_degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// True if the family is a single degree.
    pub fn is_finite(&self) -> bool {
        self.negative_support().is_empty()
    }

    /// All clamps for the given `t`, i.e. `∏ (t_j + 1)` of them.
    pub fn all(t: &[u32]) -> Vec<ClampedDegree> {
        let mut out = vec![Vec::with_capacity(t.len())];
        for &tj in t {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (-1..i64::from(tj)).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|entries| ClampedDegree { entries })
            .collect()
    }
}

/// One nonzero cell of a [`LocalCohomologyTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyCell {
    pub clamp: ClampedDegree,
    pub negative_support: VertexSet,
    pub dim: usize,
}

/// Nonzero multigraded pieces of `H^i_m(S/I)` for every `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCohomologyTable {
    pub ambient: usize,
    pub field: FieldSpec,
    pub t: Vec<u32>,
    /// Keyed by the cohomological index `i`; only nonzero cells are stored.
    pub cells: BTreeMap<usize, Vec<CohomologyCell>>,
}

impl LocalCohomologyTable {
    pub fn compute(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Self> {
        let t = ideal.t_vector()?;
        let stanley_reisner = SimplicialComplex::from_stanley_reisner(&ideal.radical())?;
        let mut cells: BTreeMap<usize, Vec<CohomologyCell>> = BTreeMap::new();
        for clamp in ClampedDegree::all(&t) {
            let g = clamp.negative_support();
            if !stanley_reisner.contains_face(g) {
                continue;
            }
            let profile = reduced_homology(&delta_a(ideal, &clamp.entries)?, field);
            for (j, dim) in profile.nonzero() {
                let i = (j + g.len() as isize + 1) as usize;
                cells.entry(i).or_default().push(CohomologyCell {
                    clamp: clamp.clone(),
                    negative_support: g,
                    dim,
                });
            }
        }
        Ok(LocalCohomologyTable {
            ambient: ideal.ambient(),
            field,
            t,
            cells,
        })
    }

    /// `dim_K H^i_m(S/I)_a` read off the table.
    pub fn dim_at(&self, i: usize, a: &[i64]) -> usize {
        let Some(clamp) = ClampedDegree::clamp(a, &self.t) else {
            return 0;
        };
        self.cells
            .get(&i)
            .and_then(|row| row.iter().find(|c| c.clamp == clamp))
            .map_or(0, |c| c.dim)
    }

    /// `min { i : H^i_m(S/I) != 0 }`.
    pub fn depth(&self) -> usize {
        *self
            .cells
            .keys()
            .next()
            .expect("proper nonzero ideal has nonzero cohomology")
    }

    /// `max { i : H^i_m(S/I) != 0 }`, the Krull dimension.
    pub fn dimension(&self) -> usize {
        *self
            .cells
            .keys()
            .next_back()
            .expect("proper nonzero ideal has nonzero cohomology")
    }

    pub fn row(&self, i: usize) -> &[CohomologyCell] {
        self.cells.get(&i).map_or(&[], Vec::as_slice)
    }

    /// Top degree of the top local cohomology module.
    pub fn a_invariant(&self) -> i64 {
        self.row(self.dimension())
            .iter()
            .map(|c| c.clamp.max_total_degree())
            .max()
            .expect("top row is nonempty")
    }

    /// True when every `H^i` with `i < dim` has finite length, i.e. no cell
    /// below the top row has a nonempty negative support.
    pub fn lower_modules_have_finite_length(&self) -> bool {
        let d = self.dimension();
        self.cells
            .range(..d)
            .all(|(_, row)| row.iter().all(|c| c.clamp.is_finite()))
    }

    /// Total degrees `j` with `H^i_j != 0` when there are finitely many,
    /// `None` otherwise.
    pub fn total_degrees(&self, i: usize) -> Option<Vec<i64>> {
        let row = self.row(i);
        if row.iter().any(|c| !c.clamp.is_finite()) {
            return None;
        }
        let mut degrees: Vec<i64> = row.iter().map(|c| c.clamp.max_total_degree()).collect();
        degrees.sort();
        degrees.dedup();
        Some(degrees)
    }
}

/// `dim_K H^i_m(S/I)_a` for a single degree.
pub fn local_cohomology_dim(
    ideal: &MonomialIdeal,
    i: usize,
    a: &[i64],
    field: FieldSpec,
) -> Result<usize> {
    let t = ideal.t_vector()?;
    if a.len() != ideal.ambient() {
        return Err(Error::AmbientMismatch {
            left: ideal.ambient(),
            right: a.len(),
        });
    }
    let Some(clamp) = ClampedDegree::clamp(a, &t) else {
        return Ok(0);
    };
    let g = clamp.negative_support();
    let stanley_reisner = SimplicialComplex::from_stanley_reisner(&ideal.radical())?;
    if !stanley_reisner.contains_face(g) {
        return Ok(0);
    }
    let j = i as isize - g.len() as isize - 1;
    Ok(reduced_homology(&delta_a(ideal, a)?, field).get(j))
}

pub fn depth(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(LocalCohomologyTable::compute(ideal, field)?.depth())
}

/// Krull dimension read off the cohomology table, checked against the
/// dimension from the minimal primes.
pub fn krull_dim_check(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    let from_table = LocalCohomologyTable::compute(ideal, field)?.dimension();
    let from_primes = ideal.krull_dim()?;
    if from_table != from_primes {
        return Err(Error::Inconsistent(format!(
            "cohomological dimension {from_table} differs from Krull dimension {from_primes}"
        )));
    }
    Ok(from_table)
}

pub fn is_cm(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let table = LocalCohomologyTable::compute(ideal, field)?;
    Ok(table.depth() == table.dimension())
}

/// All minimal primes have the same height.
pub fn is_equidimensional(ideal: &MonomialIdeal) -> Result<bool> {
    let primes = ideal.minimal_primes()?;
    Ok(primes.windows(2).all(|w| w[0].len() == w[1].len()))
}

/// Generalized Cohen-Macaulay: equidimensional, and `H^i_m(S/I)` has finite
/// length for every `i < dim S/I`.
pub fn is_gcm(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    if !is_equidimensional(ideal)? {
        return Ok(false);
    }
    Ok(LocalCohomologyTable::compute(ideal, field)?.lower_modules_have_finite_length())
}

/// Buchsbaum, decided only for squarefree ideals, where it coincides with
/// generalized Cohen-Macaulay.
pub fn is_buchsbaum(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    if !ideal.is_squarefree() {
        return Err(Error::Unsupported(
            "Buchsbaum property is only decided for squarefree ideals".into(),
        ));
    }
    is_gcm(ideal, field)
}

pub fn a_invariant(ideal: &MonomialIdeal, field: FieldSpec) -> Result<i64> {
    Ok(LocalCohomologyTable::compute(ideal, field)?.a_invariant())
}

/// `Σ t_i - n`, an upper bound for the a-invariant.
pub fn a_invariant_bound(ideal: &MonomialIdeal) -> Result<i64> {
    let t = ideal.t_vector()?;
    Ok(t.iter().map(|&x| i64::from(x)).sum::<i64>() - ideal.ambient() as i64)
}

pub fn has_maximal_a_invariant(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    Ok(a_invariant(ideal, field)? == a_invariant_bound(ideal)?)
}

/// A degree where the cohomology of `I` and `√I` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementViolation {
    pub i: usize,
    pub degree: Vec<i64>,
    pub ideal_dim: usize,
    pub radical_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub field: FieldSpec,
    pub cells_checked: usize,
    pub violations: Vec<AgreementViolation>,
}

/// Compares `H^i_m(S/I)_a` with `H^i_m(S/√I)_a` at every `a` with all entries
/// `<= 0` (the clamps with entries in `{-1, 0}`) and every `i`.
pub fn radical_cohomology_agreement(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<AgreementReport> {
    let ours = LocalCohomologyTable::compute(ideal, field)?;
    let theirs = LocalCohomologyTable::compute(&ideal.radical(), field)?;
    let n = ideal.ambient();
    let mut violations = Vec::new();
    let mut cells_checked = 0;
    for degree in ClampedDegree::all(&vec![1; n]) {
        for i in 0..=n {
            cells_checked += 1;
            let a = degree.entries();
            let (x, y) = (ours.dim_at(i, a), theirs.dim_at(i, a));
            if x != y {
                violations.push(AgreementViolation {
                    i,
                    degree: a.to_vec(),
                    ideal_dim: x,
                    radical_dim: y,
                });
            }
        }
    }
    Ok(AgreementReport {
        field,
        cells_checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ideal;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ideal(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap()
    }

    #[test]
    fn single_degree_examples() {
        let sq = ideal("1; x1^2");
        assert_eq!(local_cohomology_dim(&sq, 0, &[1], Q).unwrap(), 1);
        // H^0 of K[x]/(x^2) has total dimension 2 = length of the ring
        let h0: usize = (-3..4)
            .map(|a| local_cohomology_dim(&sq, 0, &[a], Q).unwrap())
            .sum();
        assert_eq!(h0, 2);
        let edge = ideal("2; x1*x2");
        assert_eq!(local_cohomology_dim(&edge, 1, &[-3, 0], Q).unwrap(), 1);
        assert_eq!(local_cohomology_dim(&edge, 1, &[0, 1], Q).unwrap(), 0);
        assert_eq!(local_cohomology_dim(&edge, 1, &[5, 0], Q).unwrap(), 0);
        assert!(local_cohomology_dim(&MonomialIdeal::zero(2), 0, &[0, 0], Q).is_err());
    }

    #[test]
    fn table_of_two_lines() {
        let table = LocalCohomologyTable::compute(&ideal("2; x1*x2"), Q).unwrap();
        assert!(table.row(0).is_empty());
        let clamps: Vec<Vec<i64>> = table
            .row(1)
            .iter()
            .map(|c| c.clamp.entries().to_vec())
            .collect();
        assert_eq!(clamps, vec![vec![-1, 0], vec![0, -1], vec![0, 0]]);
        assert!(table.row(1).iter().all(|c| c.dim == 1));
        assert_eq!(table.cells.len(), 1);
    }

    #[test]
    fn prime_table_is_concentrated() {
        let p = MonomialIdeal::prime(4, VertexSet::from_iter([0, 2]));
        let table = LocalCohomologyTable::compute(&p, Q).unwrap();
        assert_eq!(table.cells.keys().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(table.depth(), 2);
        assert_eq!(krull_dim_check(&p, Q).unwrap(), 2);
    }

    #[test]
    fn embedded_prime_gives_h0() {
        let table = LocalCohomologyTable::compute(&ideal("2; x1^2, x1*x2"), Q).unwrap();
        let h0: Vec<_> = table
            .row(0)
            .iter()
            .map(|c| (c.clamp.entries().to_vec(), c.dim))
            .collect();
        assert_eq!(h0, vec![(vec![1, 0], 1)]);
        assert_eq!(depth(&ideal("2; x1^2, x1*x2"), Q).unwrap(), 0);
        assert_eq!(depth(&ideal("2; x1*x2"), Q).unwrap(), 1);
    }

    #[test]
    fn cm_and_equidimensional_examples() {
        assert!(is_cm(&ideal("3; x1*x2, x1*x3, x2*x3"), Q).unwrap());
        let two_planes = ideal("4; x1*x3, x1*x4, x2*x3, x2*x4");
        assert!(!is_cm(&two_planes, Q).unwrap());
        assert_eq!(depth(&two_planes, Q).unwrap(), 1);
        let embedded = ideal("2; x1^2, x1*x2");
        assert!(is_equidimensional(&embedded).unwrap());
        assert!(!is_cm(&embedded, Q).unwrap());
    }

    #[test]
    fn gcm_examples() {
        let two_planes = ideal("4; x1*x3, x1*x4, x2*x3, x2*x4");
        assert!(is_gcm(&two_planes, Q).unwrap());
        assert!(is_buchsbaum(&two_planes, Q).unwrap());
        let table = LocalCohomologyTable::compute(&two_planes, Q).unwrap();
        assert_eq!(table.total_degrees(1), Some(vec![0]));
        assert!(is_gcm(&ideal("3; x1*x2, x2*x3, x1*x3"), Q).unwrap());
        let mixed = ideal("3; x1*x2, x1*x3");
        assert!(!is_equidimensional(&mixed).unwrap());
        assert!(!is_gcm(&mixed, Q).unwrap());
        assert!(matches!(
            is_buchsbaum(&ideal("2; x1^2"), Q),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn a_invariant_examples() {
        let sq = ideal("1; x1^2");
        assert_eq!(a_invariant(&sq, Q).unwrap(), 1);
        assert_eq!(a_invariant_bound(&sq).unwrap(), 1);
        assert!(has_maximal_a_invariant(&sq, Q).unwrap());
        assert_eq!(a_invariant(&ideal("1; x1"), Q).unwrap(), 0);
        assert!(has_maximal_a_invariant(&ideal("1; x1"), Q).unwrap());
        assert_eq!(a_invariant(&ideal("2; x1*x2"), Q).unwrap(), 0);
        assert_eq!(a_invariant_bound(&ideal("2; x1*x2")).unwrap(), 0);
    }

    #[test]
    fn radical_agreement_examples() {
        let r = radical_cohomology_agreement(&ideal("2; x1^2, x1*x2"), Q).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.cells_checked, 4 * 3);
        let sf = ideal("3; x1*x2, x2*x3");
        assert_eq!(
            LocalCohomologyTable::compute(&sf, Q).unwrap(),
            LocalCohomologyTable::compute(&sf.radical(), Q).unwrap()
        );
    }

    #[test]
    fn vanishing_above_the_box() {
        let i = ideal("3; x1^3*x2, x2^2*x3, x1*x3^2");
        let t = i.t_vector().unwrap();
        for k in 0..3 {
            for i_coh in 0..=3 {
                let mut a = vec![0i64; 3];
                a[k] = i64::from(t[k]);
                assert_eq!(local_cohomology_dim(&i, i_coh, &a, Q).unwrap(), 0);
            }
        }
    }

    #[test]
    fn table_agrees_with_pointwise_evaluation() {
        let i = ideal("3; x1^2*x2, x2^2, x1*x3^2");
        let table = LocalCohomologyTable::compute(&i, Q).unwrap();
        for clamp in ClampedDegree::all(&table.t) {
            // push negative entries further down; the answer must not change
            let far: Vec<i64> = clamp
                .entries()
                .iter()
                .map(|&e| if e < 0 { -4 } else { e })
                .collect();
            for k in 0..=3 {
                assert_eq!(
                    table.dim_at(k, &far),
                    local_cohomology_dim(&i, k, &far, Q).unwrap()
                );
            }
        }
    }
}
