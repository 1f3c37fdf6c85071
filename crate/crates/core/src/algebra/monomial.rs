use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VARS};

/// A monomial `x1^a1 * .. * xn^an` in a fixed ambient ring of `n` variables.
///
/// Monomials are ordered by total degree first and then so that higher
/// powers of earlier variables come first (`x1^2 < x1*x2 < x2^2`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(
            exponents.len() <= MAX_VARS,
            "at most {MAX_VARS} variables are supported"
        );
        Monomial { exponents }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial::new(e)
    }

    /// Squarefree monomial `prod_{i in set} x_i`.
    pub fn from_set(set: VertexSet, n: usize) -> Self {
        Monomial::new((0..n).map(|i| set.contains(i) as u32).collect())
    }

    pub fn ambient(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `nu_i(u)`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `supp(u) = { i : x_i divides u }`.
    pub fn support(&self) -> VertexSet {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `u_red`: the squarefree monomial with the same support.
    pub fn reduce(&self) -> Monomial {
        Monomial::new(self.exponents.iter().map(|&e| e.min(1)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// True for `x_i^a` with `a >= 1`.
    pub fn is_pure_power(&self) -> bool {
        self.support().len() == 1
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.ambient() == other.ambient() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ambient(),
                right: other.ambient(),
            })
        }
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.zip_with(other, u32::min)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.zip_with(other, |a, b| a + b)
    }

    /// Exact quotient `self / other`; `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| self.zip_with(other, |a, b| a - b))
    }

    /// `u : v = prod x_i^{max(a_i - b_i, 0)}`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.zip_with(other, u32::saturating_sub))
    }

    /// The same monomial viewed in `n` variables, dropping or padding trailing
    /// variables. Dropping sets those variables to 1.
    pub fn resize(&self, n: usize) -> Monomial {
        let mut e = self.exponents.clone();
        e.resize(n, 0);
        Monomial::new(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn support_examples() {
        assert_eq!(m(&[2, 0, 1]).support(), VertexSet::from_iter([0, 2]));
        assert_eq!(m(&[0, 0]).support(), VertexSet::EMPTY);
        assert_eq!(m(&[1, 1, 1]).support(), VertexSet::full(3));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(m(&[3, 1]).reduce(), m(&[1, 1]));
        assert_eq!(m(&[0, 0]).reduce(), m(&[0, 0]));
        assert_eq!(m(&[1, 1]).reduce(), m(&[1, 1]));
    }

    #[test]
    fn colon_examples() {
        // (x1^2*x2) : (x1*x3), componentwise max(a - b, 0)
        let u = m(&[2, 1, 0]);
        let v = m(&[1, 0, 1]);
        let expected: Vec<u32> = u
            .exponents()
            .iter()
            .zip(v.exponents())
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        assert_eq!(expected, vec![1, 1, 0]);
        assert_eq!(u.colon(&v).unwrap(), m(&expected));
        assert_eq!(u.colon(&Monomial::one(3)).unwrap(), u);
        assert!(u.colon(&u).unwrap().is_one());
        assert!(matches!(
            u.colon(&m(&[1])),
            Err(Error::AmbientMismatch { left: 3, right: 1 })
        ));
    }

    #[test]
    fn ordering_and_display() {
        let mut v = [m(&[0, 2]), m(&[1, 1]), m(&[2, 0]), m(&[1, 0])];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["x1", "x1^2", "x1*x2", "x2^2"]);
        assert_eq!(Monomial::one(2).to_string(), "1");
    }
}
