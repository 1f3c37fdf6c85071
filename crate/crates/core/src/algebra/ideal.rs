use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VARS};

/// A monomial ideal of `K[x1, .., xn]`, stored as its minimal monomial
/// generating set `G(I)`.
///
/// No generators is the zero ideal and `{1}` is the unit ideal. Generators
/// are kept sorted (see the ordering on [`Monomial`]), so structural equality
/// is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal generators.
    pub fn new(ambient: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if ambient > MAX_VARS {
            return Err(Error::TooManyVariables {
                got: ambient,
                max: MAX_VARS,
            });
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.ambient() != ambient) {
            return Err(Error::AmbientMismatch {
                left: ambient,
                right: bad.ambient(),
            });
        }
        Ok(MonomialIdeal {
            ambient,
            generators: minimalize(gens),
        })
    }

    pub(crate) fn from_minimal_unchecked(ambient: usize, generators: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ambient,
            generators,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            generators: Vec::new(),
        }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            generators: vec![Monomial::one(ambient)],
        }
    }

    /// The monomial prime `P_F = (x_i : i in F)`.
    pub fn prime(ambient: usize, support: VertexSet) -> Self {
        let gens = support.iter().map(|i| Monomial::var(i, ambient)).collect();
        MonomialIdeal::from_minimal_sorted(ambient, gens)
    }

    fn from_minimal_sorted(ambient: usize, mut generators: Vec<Monomial>) -> Self {
        generators.sort();
        MonomialIdeal {
            ambient,
            generators,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// `G(I)`.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Errors unless the ideal is proper and nonzero.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::DegenerateIdeal("zero"))
        } else if self.is_unit() {
            Err(Error::DegenerateIdeal("unit"))
        } else {
            Ok(())
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    /// `I ⊆ J`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient == other {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other,
            })
        }
    }

    /// `t_i = max { nu_i(u) : u in G(I) }`.
    pub fn t_vector(&self) -> Result<Vec<u32>> {
        self.require_proper_nonzero()?;
        let mut t = vec![0; self.ambient];
        for g in &self.generators {
            for (ti, &e) in t.iter_mut().zip(g.exponents()) {
                *ti = (*ti).max(e);
            }
        }
        Ok(t)
    }

    /// `√I = ((u_1)_red, .., (u_m)_red)`.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            ambient: self.ambient,
            generators: minimalize(self.generators.iter().map(Monomial::reduce).collect()),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.ambient)?;
        let gens = self.generators.iter().chain(&other.generators).cloned();
        MonomialIdeal::new(self.ambient, gens)
    }

    /// `(I, u)`.
    pub fn with_generator(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(u.ambient())?;
        let gens = self
            .generators
            .iter()
            .cloned()
            .chain(std::iter::once(u.clone()));
        MonomialIdeal::new(self.ambient, gens)
    }

    /// Generated by the pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.ambient)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|u| other.generators.iter().map(move |v| u.lcm(v)))
            .collect();
        Ok(MonomialIdeal {
            ambient: self.ambient,
            generators: minimalize(gens),
        })
    }

    /// Intersection of a family; the empty family gives the unit ideal.
    pub fn intersect_all<'a>(
        ambient: usize,
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(ambient);
        for ideal in ideals {
            acc = acc.intersect(ideal)?;
        }
        Ok(acc)
    }

    /// `I : v = (u_1 : v, .., u_m : v)`.
    pub fn colon(&self, v: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(v.ambient())?;
        let gens = self
            .generators
            .iter()
            .map(|u| u.colon(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            ambient: self.ambient,
            generators: minimalize(gens),
        })
    }

    /// True if the ideal is the monomial prime `P_F`; returns `F`.
    pub fn as_prime(&self) -> Option<VertexSet> {
        if self.is_unit() {
            return None;
        }
        self.generators.iter().all(|g| g.degree() == 1).then(|| {
            self.generators
                .iter()
                .fold(VertexSet::EMPTY, |s, g| s.union(g.support()))
        })
    }

    /// The same generators viewed in a polynomial ring with `n` variables;
    /// dropped variables are set to 1.
    pub fn resize(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal {
            ambient: n,
            generators: minimalize(self.generators.iter().map(|g| g.resize(n)).collect()),
        }
    }
}

/// Removes every monomial divisible by another one of the list.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl fmt::Display for MonomialIdeal {
    /// Prints in the input grammar, `n; g1, g2, ..`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.ambient)?;
        for (k, g) in self.generators.iter().enumerate() {
            let sep = if k == 0 { " " } else { ", " };
            write!(f, "{sep}{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[2, 0, 1], &[0, 1, 0]]);
        assert_eq!(i, ideal(3, &[&[2, 0, 0], &[0, 1, 0]]));
        assert_eq!(i.generators().len(), 2);
        assert!(ideal(2, &[]).is_zero());
        assert!(ideal(2, &[&[0, 0], &[1, 0]]).is_unit());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 0]]);
        assert!(i.contains(&m(&[2, 0, 1])));
        assert!(!ideal(3, &[&[2, 0, 0]]).contains(&m(&[1, 0, 0])));
        assert!(!MonomialIdeal::zero(3).contains(&m(&[1, 1, 1])));
    }

    #[test]
    fn radical_examples() {
        // reduce each generator, then minimalize
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1]]).radical(),
            ideal(2, &[&[1, 0]])
        );
        let sf = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sf.radical(), sf);
        assert_eq!(ideal(2, &[&[2, 3]]).radical(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn intersect_examples() {
        let a = ideal(3, &[&[2, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(
            a.intersect(&b).unwrap(),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 1]])
        );
        assert_eq!(a.intersect(&MonomialIdeal::unit(3)).unwrap(), a);
        assert_eq!(
            ideal(2, &[&[1, 0]])
                .intersect(&ideal(2, &[&[0, 1]]))
                .unwrap(),
            ideal(2, &[&[1, 1]])
        );
        assert!(a.intersect(&MonomialIdeal::zero(3)).unwrap().is_zero());
        assert!(a.intersect(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn colon_examples() {
        assert_eq!(
            ideal(2, &[&[1, 1]]).colon(&m(&[0, 1])).unwrap(),
            ideal(2, &[&[1, 0]])
        );
        // generator-wise: x1^2 : x1 = x1, x1*x2 : x1 = x2
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1]]).colon(&m(&[1, 0])).unwrap(),
            ideal(2, &[&[1, 0], &[0, 1]])
        );
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
    }

    #[test]
    fn t_vector_examples() {
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1]]).t_vector().unwrap(),
            vec![2, 1]
        );
        assert_eq!(
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]).t_vector().unwrap(),
            vec![1, 1, 1]
        );
        assert_eq!(ideal(3, &[&[3, 1, 0]]).t_vector().unwrap(), vec![3, 1, 0]);
        assert_eq!(
            MonomialIdeal::zero(2).t_vector(),
            Err(Error::DegenerateIdeal("zero"))
        );
        assert_eq!(
            MonomialIdeal::unit(2).t_vector(),
            Err(Error::DegenerateIdeal("unit"))
        );
    }

    #[test]
    fn display_uses_input_grammar() {
        assert_eq!(
            ideal(3, &[&[2, 1, 0], &[0, 1, 1]]).to_string(),
            "3; x2*x3, x1^2*x2"
        );
        assert_eq!(MonomialIdeal::zero(2).to_string(), "2;");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "2; 1");
    }
}
