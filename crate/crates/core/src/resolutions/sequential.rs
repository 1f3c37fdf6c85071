//! Sequential Cohen–Macaulayness.
//!
//! The dimension filtration `I = J_0 ⊂ J_1 ⊂ ... ⊂ J_r = S` has
//! `J_k = ∩ { Q : dim S/Q > d_k }` over the irreducible components `Q` of
//! `I`, where `d_1 < ... < d_r` are the occurring component dimensions.
//! `S/I` is sequentially CM iff every layer `J_k / J_{k-1}` is CM of
//! dimension `d_k`.

use serde::{Deserialize, Serialize};

use crate::algebra::{polarize, MonomialIdeal};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::simplicial::SimplicialComplex;

use super::betti::quotient_module_betti;
use super::properties::is_componentwise_linear;

/// A strictly increasing chain of monomial ideals ending at `S`, with the
/// dimension of each successive quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealChain {
    ideals: Vec<MonomialIdeal>,
    layer_dims: Vec<usize>,
}

impl IdealChain {
    pub fn new(ideals: Vec<MonomialIdeal>, layer_dims: Vec<usize>) -> Result<Self> {
        if ideals.len() != layer_dims.len() + 1 || ideals.is_empty() {
            return Err(Error::Inconsistent(
                "chain needs one more ideal than layers".into(),
            ));
        }
        for w in ideals.windows(2) {
            if w[0].ambient() != w[1].ambient() {
                return Err(Error::AmbientMismatch {
                    left: w[0].ambient(),
                    right: w[1].ambient(),
                });
            }
            if !w[0].is_subset(&w[1]) || w[0] == w[1] {
                return Err(Error::Inconsistent(
                    "chain is not strictly increasing".into(),
                ));
            }
        }
        Ok(IdealChain { ideals, layer_dims })
    }

    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    pub fn layer_dims(&self) -> &[usize] {
        &self.layer_dims
    }

    /// `(J_{k-1}, J_k, d_k)` for `k = 1..=r`.
    pub fn layers(&self) -> impl Iterator<Item = (&MonomialIdeal, &MonomialIdeal, usize)> {
        self.ideals
            .windows(2)
            .zip(&self.layer_dims)
            .map(|(w, &d)| (&w[0], &w[1], d))
    }
}

pub fn dimension_filtration(ideal: &MonomialIdeal) -> Result<IdealChain> {
    let n = ideal.ambient();
    let components = ideal.irreducible_decomposition()?;
    let mut dims: Vec<usize> = components.iter().map(|q| q.dimension()).collect();
    dims.sort();
    dims.dedup();
    let mut ideals = vec![ideal.clone()];
    for &d in &dims {
        let above: Vec<MonomialIdeal> = components
            .iter()
            .filter(|q| q.dimension() > d)
            .map(|q| q.to_ideal())
            .collect();
        ideals.push(MonomialIdeal::intersect_all(n, above.iter())?);
    }
    IdealChain::new(ideals, dims)
}

/// One quotient `J_k / J_{k-1}` of the dimension filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationLayer {
    pub lower: MonomialIdeal,
    pub upper: MonomialIdeal,
    pub dimension: usize,
    pub depth: usize,
    pub cohen_macaulay: bool,
}

pub fn layer_report(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Vec<FiltrationLayer>> {
    let chain = dimension_filtration(ideal)?;
    let n = ideal.ambient();
    chain
        .layers()
        .map(|(lower, upper, dimension)| {
            let pd = quotient_module_betti(upper, lower, field)?.projective_dimension();
            let depth = n - pd;
            Ok(FiltrationLayer {
                lower: lower.clone(),
                upper: upper.clone(),
                dimension,
                depth,
                cohen_macaulay: depth == dimension,
            })
        })
        .collect()
}

/// Every layer of the dimension filtration is CM, with depths read off
/// the multigraded Betti numbers of the layer modules.
pub fn is_sequentially_cm(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    Ok(layer_report(ideal, field)?.iter().all(|l| l.cohen_macaulay))
}

/// Polarize, pass to the Alexander dual of the Stanley–Reisner complex and
/// test componentwise linearity of its squarefree ideal.
pub fn is_sequentially_cm_dual(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    let (polarized, _) = polarize(ideal)?;
    let dual = SimplicialComplex::from_stanley_reisner(&polarized)?.alexander_dual();
    let dual_ideal = dual.to_stanley_reisner();
    if dual_ideal.is_zero() || dual_ideal.is_unit() {
        return Ok(true);
    }
    is_componentwise_linear(&dual_ideal, field, true)
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
    fn cm_ideal_has_single_layer() {
        let tri = ideal("3; x1*x2, x1*x3, x2*x3");
        let chain = dimension_filtration(&tri).unwrap();
        assert_eq!(chain.ideals().len(), 2);
        assert!(chain.ideals()[1].is_unit());
        assert!(is_sequentially_cm(&tri, Q).unwrap());
        assert!(is_sequentially_cm_dual(&tri, Q).unwrap());
    }

    #[test]
    fn two_planes_meeting_in_a_point() {
        // pure and not CM, so the single layer fails
        let i = ideal("4; x1*x3, x1*x4, x2*x3, x2*x4");
        assert!(!is_sequentially_cm(&i, Q).unwrap());
        assert!(!is_sequentially_cm_dual(&i, Q).unwrap());
        assert_eq!(dimension_filtration(&i).unwrap().layer_dims(), &[2]);
    }

    #[test]
    fn mixed_dimensions() {
        // (x1) ∩ (x2, x3): a plane and a line meeting in a point
        let i = ideal("3; x1*x2, x1*x3");
        let chain = dimension_filtration(&i).unwrap();
        assert_eq!(chain.layer_dims(), &[1, 2]);
        assert_eq!(chain.ideals()[1].to_string(), "3; x1");
        assert!(is_sequentially_cm(&i, Q).unwrap());
        assert!(is_sequentially_cm_dual(&i, Q).unwrap());
        // (x1^2, x1*x2): embedded point
        let e = ideal("2; x1^2, x1*x2");
        assert!(is_sequentially_cm(&e, Q).unwrap());
        assert!(is_sequentially_cm_dual(&e, Q).unwrap());
    }

    #[test]
    fn not_sequentially_cm() {
        // two planes meeting in a point, plus a line
        let i = MonomialIdeal::intersect_all(
            5,
            [
                ideal("5; x1, x2, x5"),
                ideal("5; x3, x4, x5"),
                ideal("5; x1, x2, x3, x4"),
            ]
            .iter(),
        )
        .unwrap();
        let report = layer_report(&i, Q).unwrap();
        assert!(!report.iter().all(|l| l.cohen_macaulay));
        assert!(!is_sequentially_cm(&i, Q).unwrap());
        assert!(!is_sequentially_cm_dual(&i, Q).unwrap());
    }

    #[test]
    fn chain_validation() {
        let a = ideal("2; x1");
        assert!(IdealChain::new(vec![a.clone(), a.clone()], vec![1]).is_err());
        assert!(IdealChain::new(vec![a], vec![]).is_ok());
    }
}
