use serde::{Deserialize, Serialize};

use super::ideal::MonomialIdeal;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Bookkeeping for a sequence of 1-step polarizations.
///
/// New variables are appended after the source variables in step order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizationRecord {
    pub source_n: usize,
    pub target_n: usize,
    /// For each target variable, the source variable it stands for.
    pub variable_origin: Vec<usize>,
    /// `(polarized variable, new variable)` per step, 0-based.
    pub steps: Vec<(usize, usize)>,
}

impl PolarizationRecord {
    pub fn identity(n: usize) -> Self {
        PolarizationRecord {
            source_n: n,
            target_n: n,
            variable_origin: (0..n).collect(),
            steps: Vec::new(),
        }
    }

    /// Variables introduced by polarization (the set generating `N`).
    pub fn new_variables(&self) -> std::ops::Range<usize> {
        self.source_n..self.target_n
    }

    fn check(&self) -> Result<()> {
        let ok = self.variable_origin.len() == self.target_n
            && self.target_n == self.source_n + self.steps.len()
            && self.variable_origin[..self.source_n]
                .iter()
                .enumerate()
                .all(|(i, &o)| i == o)
            && self.variable_origin.iter().all(|&o| o < self.source_n);
        if ok {
            Ok(())
        } else {
            Err(Error::InconsistentRecord("malformed record".into()))
        }
    }
}

/// 1-step polarization of `I` with respect to `x_{i+1}`: every generator with
/// `nu_i >= 2` trades one factor `x_i` for a new variable `y`.
///
/// The returned record describes this single step, from `n` to `n + 1`
/// variables.
pub fn polarize_step(
    ideal: &MonomialIdeal,
    i: usize,
) -> Result<(MonomialIdeal, PolarizationRecord)> {
    let n = ideal.ambient();
    if i >= n || ideal.generators().iter().all(|g| g.exponent(i) < 2) {
        return Err(Error::NothingToPolarize(i + 1));
    }
    let gens = ideal.generators().iter().map(|g| {
        let mut e = g.exponents().to_vec();
        if e[i] >= 2 {
            e[i] -= 1;
            e.push(1);
        } else {
            e.push(0);
        }
        Monomial::new(e)
    });
    let polarized = MonomialIdeal::new(n + 1, gens)?;
    let mut origin: Vec<usize> = (0..n).collect();
    origin.push(i);
    let record = PolarizationRecord {
        source_n: n,
        target_n: n + 1,
        variable_origin: origin,
        steps: vec![(i, n)],
    };
    Ok((polarized, record))
}

/// Complete polarization, lowest variable index first.
///
/// Uses `sum_{t_i >= 1} (t_i - 1)` steps and returns a squarefree ideal.
pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, PolarizationRecord)> {
    let t = ideal.t_vector()?;
    let n = ideal.ambient();
    let mut current = ideal.clone();
    let mut record = PolarizationRecord::identity(n);
    for (i, &ti) in t.iter().enumerate() {
        for _ in 1..ti {
            let (next, step) = polarize_step(&current, i)?;
            let new_var = step.steps[0].1;
            record.target_n += 1;
            record.variable_origin.push(i);
            record.steps.push((i, new_var));
            current = next;
        }
    }
    debug_assert!(current.is_squarefree());
    Ok((current, record))
}

/// Inverts every new variable, i.e. sets it to 1, then takes the radical.
///
/// This realizes `I^p T_N = (√I) T_N` on generators: the result lives in the
/// source ring and equals the radical of the ideal that was polarized.
pub fn depolarize_radical(
    polarized: &MonomialIdeal,
    record: &PolarizationRecord,
) -> Result<MonomialIdeal> {
    record.check()?;
    if polarized.ambient() != record.target_n {
        return Err(Error::InconsistentRecord(format!(
            "ideal has {} variables, record expects {}",
            polarized.ambient(),
            record.target_n
        )));
    }
    let gens = polarized
        .generators()
        .iter()
        .map(|g| g.resize(record.source_n).reduce());
    MonomialIdeal::new(record.source_n, gens)
}
