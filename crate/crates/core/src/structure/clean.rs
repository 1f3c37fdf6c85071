//! Clean filtrations `I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S` with
//! `I_{i+1} = (I_i, f_{i+1})` and `I_i : f_{i+1}` a minimal prime of `I`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::resolutions::IdealChain;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanCertificate {
    pub chain: IdealChain,
    pub pivots: Vec<Monomial>,
    pub primes: Vec<VertexSet>,
}

impl CleanCertificate {
    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }
}

/// All monomials `f` with `f_i <= t_i` for every `i`.
fn candidate_box(t: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &ti in t {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=ti).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    let mut monomials: Vec<Monomial> = out.into_iter().map(Monomial::new).collect();
    monomials.sort();
    monomials
}

struct Search<'a> {
    minimal: &'a [VertexSet],
    candidates: Vec<Monomial>,
    failed: HashSet<MonomialIdeal>,
    pivots: Vec<Monomial>,
    primes: Vec<VertexSet>,
    ideals: Vec<MonomialIdeal>,
}

impl Search<'_> {
    fn run(&mut self, state: &MonomialIdeal) -> Result<bool> {
        if state.is_unit() {
            return Ok(true);
        }
        if self.failed.contains(state) {
            return Ok(false);
        }
        let ass = state.associated_primes()?;
        if ass.iter().all(|p| self.minimal.contains(p)) {
            let mut tried = HashSet::new();
            for k in 0..self.candidates.len() {
                let f = &self.candidates[k];
                if state.contains(f) {
                    continue;
                }
                let Some(p) = state.colon(f)?.as_prime() else {
                    continue;
                };
                if !self.minimal.contains(&p) {
                    continue;
                }
                let next = state.with_generator(f)?;
                if !tried.insert(next.clone()) {
                    continue;
                }
                self.pivots.push(f.clone());
                self.primes.push(p);
                self.ideals.push(next.clone());
                if self.run(&next)? {
                    return Ok(true);
                }
                self.pivots.pop();
                self.primes.pop();
                self.ideals.pop();
            }
        }
        self.failed.insert(state.clone());
        Ok(false)
    }
}

/// Backtracking search for a clean filtration with pivots in the box
/// `∏ [0, t_i(I)]`. Returns a verified certificate on success.
pub fn is_clean(ideal: &MonomialIdeal) -> Result<(bool, Option<CleanCertificate>)> {
    ideal.require_proper_nonzero()?;
    let minimal = ideal.minimal_primes()?;
    let mut search = Search {
        minimal: &minimal,
        candidates: candidate_box(&ideal.t_vector()?),
        failed: HashSet::new(),
        pivots: Vec::new(),
        primes: Vec::new(),
        ideals: vec![ideal.clone()],
    };
    if !search.run(ideal)? {
        return Ok((false, None));
    }
    let n = ideal.ambient();
    let dims = search.primes.iter().map(|p| n - p.len()).collect();
    let certificate = CleanCertificate {
        chain: IdealChain::new(search.ideals, dims)?,
        pivots: search.pivots,
        primes: search.primes,
    };
    verify_certificate(ideal, &certificate)?;
    Ok((true, Some(certificate)))
}

/// Checks the certificate step by step. The colon condition is checked in
/// generator form: every `x_j` with `j ∈ P_i` is `u : f` for some
/// `u ∈ G(I_i)`, and every `w : f` with `w ∈ G(I_i)` is divisible by some
/// such `x_j`.
pub fn verify_certificate(ideal: &MonomialIdeal, cert: &CleanCertificate) -> Result<()> {
    let fail = |msg: String| Err(Error::Inconsistent(msg));
    let ideals = cert.chain.ideals();
    let r = cert.pivots.len();
    if ideals.len() != r + 1 || cert.primes.len() != r {
        return fail("certificate lengths disagree".into());
    }
    if &ideals[0] != ideal {
        return fail("chain does not start at I".into());
    }
    if !ideals[r].is_unit() {
        return fail("chain does not end at S".into());
    }
    let minimal = ideal.minimal_primes()?;
    let n = ideal.ambient();
    for k in 0..r {
        let (cur, next, f, p) = (&ideals[k], &ideals[k + 1], &cert.pivots[k], cert.primes[k]);
        if !minimal.contains(&p) {
            return fail(format!("step {}: prime {p} is not minimal over I", k + 1));
        }
        if cur.contains(f) {
            return fail(format!("step {}: pivot {f} already in I_{k}", k + 1));
        }
        if &cur.with_generator(f)? != next {
            return fail(format!(
                "step {}: (I_{k}, {f}) differs from I_{}",
                k + 1,
                k + 1
            ));
        }
        let quotients: Vec<Monomial> = cur
            .generators()
            .iter()
            .map(|u| u.colon(f))
            .collect::<Result<_>>()?;
        for j in p.iter() {
            let x = Monomial::var(j, n);
            if !quotients.contains(&x) {
                return fail(format!(
                    "step {}: x{} is not a generator quotient",
                    k + 1,
                    j + 1
                ));
            }
        }
        for w in &quotients {
            if !p.iter().any(|j| w.exponent(j) > 0) {
                return fail(format!("step {}: quotient {w} avoids the prime", k + 1));
            }
        }
    }
    Ok(())
}

/// Steps where the radical grows but `√I_i : reduce(f)` is not `P_i`.
pub fn radical_step_violations(cert: &CleanCertificate) -> Result<Vec<usize>> {
    let ideals = cert.chain.ideals();
    let mut bad = Vec::new();
    for k in 0..cert.pivots.len() {
        let lower = ideals[k].radical();
        let upper = ideals[k + 1].radical();
        if lower == upper {
            continue;
        }
        let colon = lower.colon(&cert.pivots[k].reduce())?;
        if colon.as_prime() != Some(cert.primes[k]) {
            bad.push(k + 1);
        }
    }
    Ok(bad)
}
