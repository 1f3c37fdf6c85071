use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::vertex_set::VertexSet;

use super::betti::{betti_koszul, BettiTable};

/// Projective dimension of `S/I`.
pub fn projective_dimension(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_koszul(ideal, field)?.projective_dimension())
}

/// `depth S/I = n - pd(S/I)`.
pub fn depth_ab(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(ideal.ambient() - projective_dimension(ideal, field)?)
}

fn cm_from_table(ideal: &MonomialIdeal, table: &BettiTable) -> Result<bool> {
    Ok(table.projective_dimension() == ideal.height()?)
}

/// Cohen–Macaulay with a one-dimensional last module in the resolution.
pub fn is_gorenstein(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let table = betti_koszul(ideal, field)?;
    Ok(cm_from_table(ideal, &table)? && table.total(table.projective_dimension()) == 1)
}

/// Total degrees of the last free module of the minimal resolution of `S/I`.
pub fn last_shifts(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Vec<u32>> {
    Ok(betti_koszul(ideal, field)?.last_shifts())
}

/// Cohen–Macaulay with all last shifts in a single degree.
pub fn is_level(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let table = betti_koszul(ideal, field)?;
    let shifts = table.last_shifts();
    Ok(cm_from_table(ideal, &table)? && shifts.first() == shifts.last())
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, 0, d, &mut vec![0; n], &mut out);
    } else if d == 0 {
        out.push(Monomial::one(0));
    }
    out
}

/// Ideal generated by all monomials of degree `d` in `I`.
pub fn degree_component(ideal: &MonomialIdeal, d: u32) -> MonomialIdeal {
    let n = ideal.ambient();
    let mut gens = Vec::new();
    for g in ideal.generators() {
        if g.degree() <= d {
            for m in monomials_of_degree(n, d - g.degree()) {
                gens.push(g.mul(&m));
            }
        }
    }
    MonomialIdeal::new(n, gens).expect("same ambient")
}

/// Ideal generated by the squarefree monomials of degree `d` in `I`.
pub fn squarefree_component(ideal: &MonomialIdeal, d: u32) -> MonomialIdeal {
    let n = ideal.ambient();
    let gens = VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() as u32 == d)
        .map(|s| Monomial::from_set(s, n))
        .filter(|m| ideal.contains(m));
    MonomialIdeal::new(n, gens).expect("same ambient")
}

/// `β_{i,j}(I) = 0` unless `j = i + d` for the common generator degree `d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    let d = ideal.generators()[0].degree();
    if ideal.generators().iter().any(|g| g.degree() != d) {
        return Err(Error::MixedDegrees);
    }
    let table = betti_koszul(ideal, field)?;
    Ok(table
        .graded()
        .keys()
        .all(|&(i, j)| i == 0 || j == i as u32 - 1 + d))
}

fn degree_range(ideal: &MonomialIdeal) -> (u32, u32) {
    let degrees = ideal.generators().iter().map(Monomial::degree);
    let lo = degrees.clone().min().unwrap_or(0);
    let hi = degrees.max().unwrap_or(0);
    (lo, hi)
}

/// Every nonzero degree component from the least generator degree up to one
/// past the largest has a linear resolution. With `squarefree` set, the
/// squarefree components are tested instead (the criterion for squarefree
/// ideals).
pub fn is_componentwise_linear(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    squarefree: bool,
) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    if squarefree && !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let (lo, hi) = degree_range(ideal);
    let top = if squarefree {
        (hi + 1).min(ideal.ambient() as u32)
    } else {
        hi + 1
    };
    for d in lo..=top {
        let component = if squarefree {
            squarefree_component(ideal, d)
        } else {
            degree_component(ideal, d)
        };
        if component.is_zero() {
            continue;
        }
        if !has_linear_resolution(&component, field)? {
            return Ok(false);
        }
    }
    Ok(true)
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
    fn projective_dimension_and_depth() {
        let tri = ideal("3; x1*x2, x1*x3, x2*x3");
        assert_eq!(projective_dimension(&tri, Q).unwrap(), 2);
        assert_eq!(depth_ab(&tri, Q).unwrap(), 1);
        let emb = ideal("2; x1^2, x1*x2");
        assert_eq!(projective_dimension(&emb, Q).unwrap(), 2);
        assert_eq!(depth_ab(&emb, Q).unwrap(), 0);
        let p = MonomialIdeal::prime(5, [0, 2, 4].into_iter().collect());
        assert_eq!(projective_dimension(&p, Q).unwrap(), 3);
    }

    #[test]
    fn gorenstein_decisions() {
        assert!(!is_gorenstein(&ideal("3; x1*x2, x2*x3, x1*x3"), Q).unwrap());
        assert!(!is_gorenstein(&ideal("3; x1^2, x1*x2, x2*x3"), Q).unwrap());
        assert!(is_gorenstein(&ideal("3; x1^2, x2^3"), Q).unwrap());
        assert!(is_gorenstein(&ideal("2; x1*x2"), Q).unwrap());
    }

    #[test]
    fn level_decisions() {
        let tri = ideal("3; x1*x2, x1*x3, x2*x3");
        assert_eq!(last_shifts(&tri, Q).unwrap(), vec![3, 3]);
        assert!(is_level(&tri, Q).unwrap());
        // (x1) ∩ (x2, x3) is not equidimensional
        let star = ideal("3; x1*x2, x1*x3");
        assert!(!is_level(&star, Q).unwrap());
        // (x1^2, x1*x2, x2^2) has last shifts {3, 3}
        assert!(is_level(&ideal("2; x1^2, x1*x2, x2^2"), Q).unwrap());
        // (x1^2, x1*x2, x2^3): last shifts {3, 4}
        assert!(!is_level(&ideal("2; x1^2, x1*x2, x2^3"), Q).unwrap());
    }

    #[test]
    fn linear_resolutions() {
        assert!(has_linear_resolution(&ideal("3; x1*x2, x2*x3"), Q).unwrap());
        assert!(!has_linear_resolution(&ideal("4; x1*x2, x3*x4"), Q).unwrap());
        assert_eq!(
            has_linear_resolution(&ideal("2; x1, x2^2"), Q),
            Err(Error::MixedDegrees)
        );
    }

    #[test]
    fn componentwise_linearity() {
        let p = MonomialIdeal::prime(4, [1, 3].into_iter().collect());
        assert!(is_componentwise_linear(&p, Q, false).unwrap());
        assert!(is_componentwise_linear(&p, Q, true).unwrap());
        assert!(is_componentwise_linear(&ideal("2; x1, x2^2"), Q, false).unwrap());
        assert!(!is_componentwise_linear(&ideal("4; x1*x2, x3*x4"), Q, true).unwrap());
        assert!(!is_componentwise_linear(&ideal("4; x1*x2, x3*x4"), Q, false).unwrap());
    }

    #[test]
    fn components() {
        let i = ideal("2; x1, x2^2");
        assert_eq!(degree_component(&i, 2).to_string(), "2; x1^2, x1*x2, x2^2");
        let j = ideal("3; x1, x2*x3");
        assert_eq!(
            squarefree_component(&j, 2).to_string(),
            "3; x1*x2, x1*x3, x2*x3"
        );
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }
}
