//! Intersections of monomial primes `P_{F_1} ∩ ... ∩ P_{F_r}` over faces of
//! a common cardinality `c`, and the batteries that compare the
//! combinatorial conditions with the CM / Gorenstein behaviour of every
//! ideal with the same associated primes.

use std::cmp::Reverse;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{IrreducibleComponent, MonomialIdeal};
use crate::cohomology::is_cm;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::random::{case_seed, random_with_ass, rng};
use crate::resolutions::is_gorenstein;
use crate::vertex_set::VertexSet;

use super::size::size;

/// Pairwise distinct faces of `[n]`, all of cardinality `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PureConfiguration {
    n: usize,
    faces: Vec<VertexSet>,
}

impl PureConfiguration {
    pub fn new(n: usize, faces: Vec<VertexSet>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidConfiguration(msg.into()));
        if faces.is_empty() {
            return bad("no faces");
        }
        if n > crate::MAX_VARS || faces.iter().any(|f| !f.is_subset(VertexSet::full(n))) {
            return bad("face outside the vertex range");
        }
        let c = faces[0].len();
        if c == 0 || faces.iter().any(|f| f.len() != c) {
            return bad("faces must be nonempty of equal cardinality");
        }
        for (i, f) in faces.iter().enumerate() {
            if faces[..i].contains(f) {
                return bad("faces must be pairwise distinct");
            }
        }
        Ok(PureConfiguration { n, faces })
    }

    /// Parses `"{1,2},{2,3}"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut faces = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let start = text.len() - rest.len();
            let body = rest
                .strip_prefix('{')
                .and_then(|r| r.split_once('}'))
                .ok_or_else(|| Error::Parse {
                    position: start,
                    message: "expected a face {i,j,...}".into(),
                })?;
            let mut face = VertexSet::EMPTY;
            for item in body.0.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let v: usize = item.parse().map_err(|_| Error::Parse {
                    position: start,
                    message: format!("bad vertex `{item}`"),
                })?;
                if v == 0 || v > n {
                    return Err(Error::Parse {
                        position: start,
                        message: format!("vertex {v} outside 1..={n}"),
                    });
                }
                face = face.with(v - 1);
            }
            faces.push(face);
            rest = body.1.trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        PureConfiguration::new(n, faces)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn c(&self) -> usize {
        self.faces[0].len()
    }

    pub fn r(&self) -> usize {
        self.faces.len()
    }

    /// `∩_{i ∈ A} P_{F_i}` for the faces selected by `mask`.
    pub fn subset_ideal(&self, mask: u64) -> MonomialIdeal {
        let primes: Vec<MonomialIdeal> = self
            .faces
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, f)| MonomialIdeal::prime(self.n, *f))
            .collect();
        MonomialIdeal::intersect_all(self.n, primes.iter()).expect("same ambient")
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.subset_ideal((1u64 << self.r()) - 1)
    }

    /// `∩ Q_{F_i}` with `Q_{F_i} = (x_j^{a_ij} : j ∈ F_i)`; row `i` of
    /// `exponents` lists `a_ij` for the vertices of `F_i` in increasing order.
    pub fn ideal_with_exponents(&self, exponents: &[Vec<u32>]) -> Result<MonomialIdeal> {
        if exponents.len() != self.r()
            || exponents
                .iter()
                .zip(&self.faces)
                .any(|(row, f)| row.len() != f.len() || row.contains(&0))
        {
            return Err(Error::InvalidConfiguration(
                "exponent matrix does not fit the faces".into(),
            ));
        }
        let comps: Vec<MonomialIdeal> = self
            .faces
            .iter()
            .zip(exponents)
            .map(|(f, row)| {
                let mut exps = vec![0; self.n];
                for (j, &a) in f.iter().zip(row) {
                    exps[j] = a;
                }
                IrreducibleComponent::new(exps).to_ideal()
            })
            .collect();
        MonomialIdeal::intersect_all(self.n, comps.iter())
    }

    fn random_exponents(&self, max_exp: u32, seed: u64) -> Vec<Vec<u32>> {
        let mut rng = rng(seed);
        self.faces
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|_| rng.gen_range(1..=max_exp.max(1)))
                    .collect()
            })
            .collect()
    }

    /// Every pair of faces spans `c + 1` vertices.
    pub fn pairwise_heights_minimal(&self) -> bool {
        let c = self.c();
        let f = &self.faces;
        (0..f.len()).all(|i| (i + 1..f.len()).all(|j| f[i].union(f[j]).len() == c + 1))
    }

    /// `|∪ F_i| = c + 1` or `|∩ F_i| = c - 1` (vacuous for one face).
    pub fn union_or_intersection(&self) -> bool {
        if self.r() == 1 {
            return true;
        }
        let union = self.faces.iter().fold(VertexSet::EMPTY, |u, f| u.union(*f));
        let inter = self
            .faces
            .iter()
            .fold(self.faces[0], |u, f| u.intersection(*f));
        union.len() == self.c() + 1 || inter.len() + 1 == self.c()
    }

    /// Matches the faces against the two normal forms by relabeling the
    /// touched vertices.
    pub fn normal_form(&self) -> Option<NormalForm> {
        let (c, r) = (self.c(), self.r());
        if r == 1 {
            return Some(NormalForm::Single);
        }
        let touched: Vec<usize> = self
            .faces
            .iter()
            .fold(VertexSet::EMPTY, |u, f| u.union(*f))
            .iter()
            .collect();
        let k = touched.len();
        let first = (k == c + 1 && r <= c + 1).then(|| {
            let all = VertexSet::full(c + 1);
            sorted((0..r).map(|i| all.without(i)))
        });
        let second = (k + 1 == c + r).then(|| {
            let common = VertexSet::full(c - 1);
            sorted((0..r).map(|i| common.with(c - 1 + i)))
        });
        if first.is_none() && second.is_none() {
            return None;
        }
        if k > 9 {
            // too many relabelings; fall back to the defining shapes
            let inter = self
                .faces
                .iter()
                .fold(self.faces[0], |u, f| u.intersection(*f));
            return if first.is_some() {
                Some(NormalForm::First)
            } else {
                (inter.len() + 1 == c).then_some(NormalForm::Second)
            };
        }
        let mut perm: Vec<usize> = (0..k).collect();
        let mut found_second = false;
        loop {
            let image = sorted(self.faces.iter().map(|f| {
                f.iter()
                    .map(|v| perm[touched.binary_search(&v).expect("touched")])
                    .collect::<VertexSet>()
            }));
            if first.as_ref() == Some(&image) {
                return Some(NormalForm::First);
            }
            found_second |= second.as_ref() == Some(&image);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        found_second.then_some(NormalForm::Second)
    }
}

fn sorted(it: impl Iterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = it.collect();
    v.sort();
    v
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalForm {
    Single,
    /// `F_i = [c + 1] \ {i}`
    First,
    /// `F_i = [c - 1] ∪ {c - 1 + i}`
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BatteryStatus {
    Evaluated,
    /// The intersection of the primes is not CM; sampled conditions skipped.
    HypothesisFailed,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub samples: usize,
    pub passing: usize,
    pub first_failure: Option<MonomialIdeal>,
}

impl SampleSummary {
    pub fn all_pass(&self) -> bool {
        self.passing == self.samples
    }

    fn collect(results: Vec<(MonomialIdeal, bool)>) -> Self {
        SampleSummary {
            samples: results.len(),
            passing: results.iter().filter(|(_, ok)| *ok).count(),
            first_failure: results.into_iter().find(|(_, ok)| !ok).map(|(j, _)| j),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonCmWitness {
    /// 1-based face indices squared in the witness.
    pub subset: Vec<usize>,
    pub exponents: Vec<Vec<u32>>,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingParams {
    pub samples: usize,
    pub max_exp: u32,
    pub seed: u64,
}

impl Default for SamplingParams {
    fn default() -> Self {
        SamplingParams {
            samples: 64,
            max_exp: 3,
            seed: 0,
        }
    }
}

/// Conditions (a)–(g) in order: every exponent choice CM, every sub
/// intersection CM, pairwise heights `c + 1`, union/intersection counts,
/// normal form, size equals dimension, every ideal with the same associated
/// primes CM.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationReport {
    pub config: PureConfiguration,
    pub field: FieldSpec,
    pub status: BatteryStatus,
    pub exponent_samples: SampleSummary,
    pub subsets_cm: bool,
    pub failing_subset: Option<Vec<usize>>,
    pub pairwise_heights: bool,
    pub union_or_intersection: bool,
    pub normal_form: Option<NormalForm>,
    pub size_equals_dimension: bool,
    pub ass_samples: SampleSummary,
    pub witness: Option<NonCmWitness>,
    pub agreement: Vec<Vec<bool>>,
}

impl ConfigurationReport {
    pub fn conditions(&self) -> [bool; 7] {
        [
            self.exponent_samples.all_pass() && self.witness.is_none(),
            self.subsets_cm,
            self.pairwise_heights,
            self.union_or_intersection,
            self.normal_form.is_some(),
            self.size_equals_dimension,
            self.ass_samples.all_pass() && self.witness.is_none(),
        ]
    }

    /// (c), (d), (e), (f) coincide.
    pub fn exact_conditions_agree(&self) -> bool {
        let c = self.conditions();
        c[2..6].iter().all(|&x| x == c[2])
    }

    /// All seven conditions coincide.
    pub fn all_agree(&self) -> bool {
        self.agreement.iter().flatten().all(|&x| x)
    }
}

fn subset_masks(r: usize) -> Vec<u64> {
    let mut masks: Vec<u64> = (1u64..1 << r).collect();
    masks.sort_by_key(|&m| (m.count_ones(), Reverse(m.reverse_bits())));
    masks
}

/// Masks over `slots` bits by popcount, then lexicographically by set bits.
fn masks_by_weight(slots: usize, cap: usize) -> Vec<u64> {
    fn choose(start: usize, left: usize, slots: usize, mask: u64, out: &mut Vec<u64>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if left == 0 {
            out.push(mask);
            return;
        }
        for k in start..=slots - left {
            choose(k + 1, left - 1, slots, mask | 1 << k, out, cap);
        }
    }
    let mut out = Vec::new();
    for weight in 0..=slots {
        choose(0, weight, slots, 0, &mut out, cap);
    }
    out
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|k| mask >> k & 1 == 1)
        .map(|k| k + 1)
        .collect()
}

/// Squares every generator of `Q_{F_i}` for `i ∈ A`, keeps `P_{F_i}`
/// otherwise, for the first `A` (by size) with a non-CM `I_A`. The result
/// is returned only when the constructed ideal is verified non-CM.
pub fn find_noncm_witness(
    cfg: &PureConfiguration,
    field: FieldSpec,
) -> Result<Option<NonCmWitness>> {
    for mask in subset_masks(cfg.r()) {
        if is_cm(&cfg.subset_ideal(mask), field)? {
            continue;
        }
        let exponents: Vec<Vec<u32>> = cfg
            .faces()
            .iter()
            .enumerate()
            .map(|(k, f)| vec![if mask >> k & 1 == 1 { 2 } else { 1 }; f.len()])
            .collect();
        let ideal = cfg.ideal_with_exponents(&exponents)?;
        if !is_cm(&ideal, field)? {
            return Ok(Some(NonCmWitness {
                subset: mask_indices(mask),
                exponents,
                ideal,
            }));
        }
    }
    Ok(None)
}

pub fn configuration_battery(
    cfg: &PureConfiguration,
    field: FieldSpec,
    params: SamplingParams,
) -> Result<ConfigurationReport> {
    let ideal = cfg.ideal();
    let hypothesis = is_cm(&ideal, field)?;
    let failing = subset_masks(cfg.r())
        .into_par_iter()
        .map(|mask| Ok((mask, is_cm(&cfg.subset_ideal(mask), field)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .find(|(_, cm)| !cm)
        .map(|(mask, _)| mask_indices(mask));
    let dim = cfg.n() - cfg.c();
    let (exponent_samples, ass_samples) = if hypothesis {
        let exps = (0..params.samples as u64)
            .into_par_iter()
            .map(|k| {
                let j = cfg.ideal_with_exponents(
                    &cfg.random_exponents(params.max_exp, case_seed(params.seed, 2 * k)),
                )?;
                let cm = is_cm(&j, field)?;
                Ok((j, cm))
            })
            .collect::<Result<Vec<_>>>()?;
        let ass = (0..params.samples as u64)
            .into_par_iter()
            .map(|k| {
                let j = random_with_ass(&ideal, params.max_exp, case_seed(params.seed, 2 * k + 1))?;
                let cm = is_cm(&j, field)?;
                Ok((j, cm))
            })
            .collect::<Result<Vec<_>>>()?;
        (SampleSummary::collect(exps), SampleSummary::collect(ass))
    } else {
        (SampleSummary::default(), SampleSummary::default())
    };
    let mut report = ConfigurationReport {
        config: cfg.clone(),
        field,
        status: if hypothesis {
            BatteryStatus::Evaluated
        } else {
            BatteryStatus::HypothesisFailed
        },
        exponent_samples,
        subsets_cm: failing.is_none(),
        failing_subset: failing,
        pairwise_heights: cfg.pairwise_heights_minimal(),
        union_or_intersection: cfg.union_or_intersection(),
        normal_form: cfg.normal_form(),
        size_equals_dimension: size(&ideal)?.size == dim,
        ass_samples,
        witness: find_noncm_witness(cfg, field)?,
        agreement: Vec::new(),
    };
    let conds = report.conditions();
    report.agreement = conds
        .iter()
        .map(|&x| conds.iter().map(|&y| x == y).collect())
        .collect();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinWitness {
    pub exponents: Vec<Vec<u32>>,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub config: PureConfiguration,
    pub field: FieldSpec,
    /// `r = 1` or `c = 1`.
    pub single_face_or_vertex: bool,
    pub samples: SampleSummary,
    pub witness: Option<GorensteinWitness>,
}

impl GorensteinReport {
    /// The exact condition holds iff no non-Gorenstein choice was found.
    pub fn consistent(&self) -> bool {
        let none_found = self.samples.all_pass() && self.witness.is_none();
        self.single_face_or_vertex == none_found
    }
}

const GORENSTEIN_SEARCH_CAP: usize = 4096;

/// Exponent matrices over `{1, 2}` ordered by the number of squares, then
/// by position; the first non-Gorenstein intersection is returned.
pub fn find_non_gorenstein(
    cfg: &PureConfiguration,
    field: FieldSpec,
) -> Result<Option<GorensteinWitness>> {
    let slots = cfg.r() * cfg.c();
    if slots >= 64 {
        return Ok(None);
    }
    for mask in masks_by_weight(slots, GORENSTEIN_SEARCH_CAP) {
        let c = cfg.c();
        let exponents: Vec<Vec<u32>> = (0..cfg.r())
            .map(|i| {
                (0..c)
                    .map(|j| 1 + (mask >> (i * c + j) & 1) as u32)
                    .collect()
            })
            .collect();
        let ideal = cfg.ideal_with_exponents(&exponents)?;
        if !is_gorenstein(&ideal, field)? {
            return Ok(Some(GorensteinWitness { exponents, ideal }));
        }
    }
    Ok(None)
}

pub fn gorenstein_battery(
    cfg: &PureConfiguration,
    field: FieldSpec,
    params: SamplingParams,
) -> Result<GorensteinReport> {
    let results = (0..params.samples as u64)
        .into_par_iter()
        .map(|k| {
            let j = cfg.ideal_with_exponents(
                &cfg.random_exponents(params.max_exp, case_seed(params.seed, k)),
            )?;
            let g = is_gorenstein(&j, field)?;
            Ok((j, g))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GorensteinReport {
        config: cfg.clone(),
        field,
        single_face_or_vertex: cfg.r() == 1 || cfg.c() == 1,
        samples: SampleSummary::collect(results),
        witness: find_non_gorenstein(cfg, field)?,
    })
}
