//! Irredundant irreducible decomposition and the prime data derived from it.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::ideal::MonomialIdeal;
use super::monomial::Monomial;
use crate::error::Result;
use crate::vertex_set::VertexSet;

/// An irreducible monomial ideal `(x_j^{a_j} : j in F)` with `F` nonempty.
///
/// `exponents[j] == 0` means `j` is not in the support `F`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrreducibleComponent {
    exponents: Vec<u32>,
}

impl IrreducibleComponent {
    /// Panics if every exponent is zero.
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(
            exponents.iter().any(|&e| e > 0),
            "irreducible component needs nonempty support"
        );
        IrreducibleComponent { exponents }
    }

    /// The monomial prime `P_F` as a component with all exponents 1.
    pub fn prime(ambient: usize, support: VertexSet) -> Self {
        IrreducibleComponent::new((0..ambient).map(|j| support.contains(j) as u32).collect())
    }

    pub fn ambient(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The support `F`; the radical of the component is `P_F`.
    pub fn support(&self) -> VertexSet {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
            .collect()
    }

    /// Krull dimension of `S / Q`.
    pub fn dimension(&self) -> usize {
        self.ambient() - self.support().len()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ambient();
        let gens = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                let mut v = vec![0; n];
                v[j] = e;
                Monomial::new(v)
            })
            .collect();
        MonomialIdeal::from_minimal_unchecked(n, super::ideal::minimalize(gens))
    }

    /// `self ⊆ other` as ideals.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || (b > 0 && b <= a))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ideal = self.to_ideal();
        write!(f, "(")?;
        for (k, g) in ideal.generators().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl MonomialIdeal {
    /// The unique irredundant decomposition of `I` into irreducible monomial
    /// ideals.
    ///
    /// A generator `u = x_i^{a_i} * u''` that is not a pure power splits the
    /// ideal as `(G \ u, x_i^{a_i}) ∩ (G \ u, u'')`; the leaves of the
    /// recursion are generated by pure powers. Redundant leaves (those
    /// containing another leaf) are discarded afterwards.
    pub fn irreducible_decomposition(&self) -> Result<Vec<IrreducibleComponent>> {
        self.require_proper_nonzero()?;
        let mut leaves = BTreeSet::new();
        let mut seen = HashSet::new();
        split(self.clone(), &mut seen, &mut leaves);
        let leaves: Vec<IrreducibleComponent> = leaves.into_iter().collect();
        let irredundant = leaves
            .iter()
            .filter(|q| {
                !leaves
                    .iter()
                    .any(|other| other != *q && other.is_contained_in(q))
            })
            .cloned()
            .collect();
        Ok(irredundant)
    }

    /// Supports of the irredundant irreducible components, i.e. `Ass(S/I)`.
    pub fn associated_primes(&self) -> Result<Vec<VertexSet>> {
        let supports: BTreeSet<VertexSet> = self
            .irreducible_decomposition()?
            .iter()
            .map(IrreducibleComponent::support)
            .collect();
        Ok(supports.into_iter().collect())
    }

    /// Inclusion-minimal associated primes.
    pub fn minimal_primes(&self) -> Result<Vec<VertexSet>> {
        let ass = self.associated_primes()?;
        Ok(minimal_sets(&ass))
    }

    /// Height of `I`: the smallest size of a minimal prime.
    pub fn height(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(|p| p.len())
            .min()
            .expect("proper nonzero ideal has a minimal prime"))
    }

    /// `dim S/I = n - height(I)`.
    pub fn krull_dim(&self) -> Result<usize> {
        Ok(self.ambient() - self.height()?)
    }
}

/// Inclusion-minimal members of a family of sets.
pub fn minimal_sets(sets: &[VertexSet]) -> Vec<VertexSet> {
    let unique: BTreeSet<VertexSet> = sets.iter().copied().collect();
    unique
        .iter()
        .filter(|s| !unique.iter().any(|t| t != *s && t.is_subset(**s)))
        .copied()
        .collect()
}

fn split(
    ideal: MonomialIdeal,
    seen: &mut HashSet<MonomialIdeal>,
    leaves: &mut BTreeSet<IrreducibleComponent>,
) {
    if !seen.insert(ideal.clone()) {
        return;
    }
    let n = ideal.ambient();
    let Some(pos) = ideal.generators().iter().position(|g| !g.is_pure_power()) else {
        let mut exps = vec![0; n];
        for g in ideal.generators() {
            let j = g.support().iter().next().expect("pure power");
            exps[j] = g.exponent(j);
        }
        leaves.insert(IrreducibleComponent::new(exps));
        return;
    };
    let u = &ideal.generators()[pos];
    let i = u.support().iter().next().expect("non-unit generator");
    let mut power = vec![0; n];
    power[i] = u.exponent(i);
    let power = Monomial::new(power);
    let rest = u.div(&power).expect("power divides u");
    let others: Vec<Monomial> = ideal
        .generators()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != pos)
        .map(|(_, g)| g.clone())
        .collect();
    for piece in [power, rest] {
        let gens = others.iter().cloned().chain(std::iter::once(piece));
        let branch = MonomialIdeal::new(n, gens).expect("same ambient");
        split(branch, seen, leaves);
    }
}
