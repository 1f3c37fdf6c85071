//! Multigraded Betti numbers of `S/I` (and of quotients `J/I`).
//!
//! Two independent routes: the upper Koszul simplicial complexes
//! `K^b(I) = { σ ⊆ supp(b) : x^{b-σ} ∈ I }` and the multigraded strands of
//! the Taylor complex on `G(I)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::rank;
use crate::simplicial::{reduced_homology, relative_homology_by_size, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// Default bound on `|G(I)|` for the Taylor complex.
pub const TAYLOR_GENERATOR_BOUND: usize = 14;

/// `β_{i,b}` indexed by homological degree and multidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiTableJson", try_from = "BettiTableJson")]
pub struct BettiTable {
    ambient: usize,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn new(ambient: usize) -> Self {
        BettiTable {
            ambient,
            entries: BTreeMap::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    fn add(&mut self, i: usize, b: Monomial, value: usize) {
        if value > 0 {
            *self.entries.entry((i, b)).or_default() += value;
        }
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    /// Nonzero `(i, b, β_{i,b})`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, b), &v)| (*i, b, v))
    }

    /// `β_i = Σ_b β_{i,b}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries()
            .filter(|(k, _, _)| *k == i)
            .map(|(_, _, v)| v)
            .sum()
    }

    /// Totals `β_i` for `i = 0..=pd`.
    pub fn totals_by_index(&self) -> Vec<usize> {
        (0..=self.projective_dimension())
            .map(|i| self.total(i))
            .collect()
    }

    /// Graded view `(i, j) -> β_{i,j}` with `j = |b|`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for (i, b, v) in self.entries() {
            *out.entry((i, b.degree())).or_default() += v;
        }
        out
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Total degrees of the last module in the resolution, with multiplicity.
    pub fn last_shifts(&self) -> Vec<u32> {
        let top = self.projective_dimension();
        let mut shifts = Vec::new();
        for (i, b, v) in self.entries() {
            if i == top {
                shifts.extend(std::iter::repeat_n(b.degree(), v));
            }
        }
        shifts.sort();
        shifts
    }

    /// Same table with homological indices lowered by one and index 0
    /// dropped: the Betti numbers of `I` from those of `S/I`.
    pub fn of_ideal(&self) -> BettiTable {
        let mut out = BettiTable::new(self.ambient);
        for (i, b, v) in self.entries() {
            if i > 0 {
                out.add(i - 1, b.clone(), v);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct BettiEntryJson {
    i: usize,
    multidegree: Vec<u32>,
    value: usize,
}

#[derive(Serialize, Deserialize)]
struct BettiTableJson {
    ambient: usize,
    entries: Vec<BettiEntryJson>,
    totals: Vec<[u64; 3]>,
}

impl From<BettiTable> for BettiTableJson {
    fn from(t: BettiTable) -> Self {
        BettiTableJson {
            ambient: t.ambient,
            entries: t
                .entries()
                .map(|(i, b, value)| BettiEntryJson {
                    i,
                    multidegree: b.exponents().to_vec(),
                    value,
                })
                .collect(),
            totals: t
                .graded()
                .into_iter()
                .map(|((i, j), v)| [i as u64, u64::from(j), v as u64])
                .collect(),
        }
    }
}

impl TryFrom<BettiTableJson> for BettiTable {
    type Error = String;

    fn try_from(j: BettiTableJson) -> std::result::Result<Self, String> {
        let mut t = BettiTable::new(j.ambient);
        for e in j.entries {
            if e.multidegree.len() != j.ambient {
                return Err("multidegree length differs from ambient".into());
            }
            t.add(e.i, Monomial::new(e.multidegree), e.value);
        }
        Ok(t)
    }
}

/// All lcms of nonempty subsets of the generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Monomial> {
    let gens = ideal.generators();
    let mut lattice: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = lattice.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for g in gens {
            let l = m.lcm(g);
            if lattice.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    lattice
}

/// Multidegrees that can carry Betti numbers. For squarefree ideals with
/// many generators the subsets of the support are cheaper than the lattice.
fn candidate_multidegrees(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let n = ideal.ambient();
    if ideal.is_squarefree() {
        let support = ideal
            .generators()
            .iter()
            .fold(VertexSet::EMPTY, |s, g| s.union(g.support()));
        if support.len() < ideal.generators().len() {
            return support
                .subsets()
                .map(|s| Monomial::from_set(s, n))
                .filter(|b| ideal.contains(b))
                .collect();
        }
    }
    lcm_lattice(ideal).into_iter().collect()
}

/// Upper Koszul simplicial complex `K^b(I)`: its facets are
/// `{ i ∈ supp(b) : b_i > g_i }` for the generators `g` dividing `x^b`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    let n = ideal.ambient();
    let facets = ideal.generators().iter().filter(|g| g.divides(b)).map(|g| {
        (0..n)
            .filter(|&i| b.exponent(i) > g.exponent(i))
            .collect::<VertexSet>()
    });
    SimplicialComplex::from_faces(n, facets).expect("subsets of [n]")
}

/// Betti numbers of `S/I` with `β_{i,b}(S/I) = dim H̃_{i-2}(K^b(I))` for
/// `i >= 1` and `β_{0,0} = 1`.
pub fn betti_koszul(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    ideal.require_proper_nonzero()?;
    let n = ideal.ambient();
    let mut table = BettiTable::new(n);
    table.add(0, Monomial::one(n), 1);
    for b in candidate_multidegrees(ideal) {
        let profile = reduced_homology(&upper_koszul_complex(ideal, &b), field);
        for (j, dim) in profile.nonzero() {
            table.add((j + 2) as usize, b.clone(), dim);
        }
    }
    Ok(table)
}

pub fn betti_taylor(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_taylor_bounded(ideal, field, TAYLOR_GENERATOR_BOUND)
}

/// Betti numbers of `S/I` from the Taylor complex: for each multidegree `b`
/// the strand spanned by subsets `σ ⊆ G(I)` with `lcm(σ) = b`, with faces of
/// the same lcm as the only surviving boundary terms.
pub fn betti_taylor_bounded(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    bound: usize,
) -> Result<BettiTable> {
    ideal.require_proper_nonzero()?;
    let gens = ideal.generators();
    let m = gens.len();
    if m > bound {
        return Err(Error::GeneratorBound { count: m, bound });
    }
    let n = ideal.ambient();
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << m);
    lcms.push(Monomial::one(n));
    for mask in 1usize..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        let l = lcms[mask & (mask - 1)].lcm(&gens[low]);
        lcms.push(l);
    }
    let mut strands: HashMap<&Monomial, Vec<usize>> = HashMap::new();
    for (mask, l) in lcms.iter().enumerate() {
        strands.entry(l).or_default().push(mask);
    }
    let mut table = BettiTable::new(n);
    for (b, masks) in strands {
        let max_size = masks
            .iter()
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); max_size + 1];
        for &s in &masks {
            by_size[s.count_ones() as usize].push(s);
        }
        let index: Vec<HashMap<usize, usize>> = by_size
            .iter()
            .map(|l| l.iter().enumerate().map(|(k, &s)| (s, k)).collect())
            .collect();
        let mut ranks = vec![0usize; max_size + 2];
        for k in 1..=max_size {
            if by_size[k].is_empty() || by_size[k - 1].is_empty() {
                continue;
            }
            let mut matrix = vec![vec![0i64; by_size[k].len()]; by_size[k - 1].len()];
            for (col, &s) in by_size[k].iter().enumerate() {
                let mut bits = s;
                let mut pos = 0;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    if let Some(&row) = index[k - 1].get(&(s & !low)) {
                        matrix[row][col] = if pos % 2 == 0 { 1 } else { -1 };
                    }
                    bits &= bits - 1;
                    pos += 1;
                }
            }
            ranks[k] = rank(&matrix, field);
        }
        for k in 0..=max_size {
            let dim = by_size[k].len() - ranks[k] - ranks[k + 1];
            table.add(k, b.clone(), dim);
        }
    }
    Ok(table)
}

/// Betti numbers of the module `J/I` for monomial ideals `I ⊆ J`.
///
/// `Tor_k(J/I, K)_b` is the homology of the Koszul complex in degree `b`,
/// which is the relative chain complex of the pair `K^b(J) ⊇ K^b(I)` with
/// `σ` in homological degree `|σ|`.
pub fn quotient_module_betti(
    larger: &MonomialIdeal,
    smaller: &MonomialIdeal,
    field: FieldSpec,
) -> Result<BettiTable> {
    if larger.ambient() != smaller.ambient() {
        return Err(Error::AmbientMismatch {
            left: larger.ambient(),
            right: smaller.ambient(),
        });
    }
    if !smaller.is_subset(larger) {
        return Err(Error::Unsupported("quotient J/I needs I ⊆ J".into()));
    }
    let n = larger.ambient();
    let mut candidates = lcm_lattice(larger);
    candidates.extend(lcm_lattice(smaller));
    let mut table = BettiTable::new(n);
    for b in candidates {
        let ground = b.support();
        let shifted = |s: VertexSet| {
            Monomial::new(
                (0..n)
                    .map(|i| b.exponent(i) - s.contains(i) as u32)
                    .collect(),
            )
        };
        let in_larger = |s: VertexSet| larger.contains(&shifted(s));
        let in_smaller = |s: VertexSet| smaller.contains(&shifted(s));
        let dims = relative_homology_by_size(ground, &in_larger, &in_smaller, field);
        for (k, dim) in dims.into_iter().enumerate() {
            table.add(k, b.clone(), dim);
        }
    }
    Ok(table)
}
