//! Seeded property campaigns. Each campaign draws its cases from
//! [`case_seed`], checks them in parallel and collects violations.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{polarize, MonomialIdeal};
use crate::cohomology::{self, LocalCohomologyTable};
use crate::error::Result;
use crate::field::FieldSpec;
use crate::random::{case_seed, random_complex, random_monomial_ideal, random_pure_configuration};
use crate::resolutions::{
    betti_koszul, betti_taylor, is_gorenstein, is_level, is_sequentially_cm,
    is_sequentially_cm_dual, BettiTable, TAYLOR_GENERATOR_BOUND,
};
use crate::simplicial::{is_shellable, reisner_cm, SimplicialComplex};
use crate::structure::{
    check_lyubeznik_bound, configuration_battery, is_clean, radical_step_violations, size_by_sums,
    BatteryStatus, SamplingParams,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParams {
    pub count: usize,
    pub max_vars: usize,
    pub max_exp: u32,
    pub max_gens: usize,
    pub seed: u64,
    pub fields: Vec<FieldSpec>,
}

impl Default for CampaignParams {
    fn default() -> Self {
        CampaignParams {
            count: 200,
            max_vars: 4,
            max_exp: 3,
            max_gens: 6,
            seed: 7,
            fields: vec![FieldSpec::Rationals, FieldSpec::PrimeField(2)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub case: usize,
    pub input: String,
    pub field: Option<FieldSpec>,
    pub property: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub name: String,
    pub params: CampaignParams,
    pub cases: usize,
    pub checks: usize,
    /// How often each hypothesis was met, so vacuous passes are visible.
    pub hits: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Outcome {
    checks: usize,
    hits: BTreeMap<String, usize>,
    violations: Vec<Violation>,
}

struct Case<'a> {
    index: usize,
    input: String,
    field: Option<FieldSpec>,
    out: &'a mut Outcome,
}

impl Case<'_> {
    fn check(&mut self, property: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.out.checks += 1;
        if !ok {
            self.out.violations.push(Violation {
                case: self.index,
                input: self.input.clone(),
                field: self.field,
                property: property.into(),
                detail: detail(),
            });
        }
    }

    fn hit(&mut self, name: &str) {
        *self.out.hits.entry(name.into()).or_default() += 1;
    }

    fn with_field(&mut self, field: FieldSpec) -> Case<'_> {
        Case {
            index: self.index,
            input: self.input.clone(),
            field: Some(field),
            out: self.out,
        }
    }
}

/// The `k`-th campaign ideal: `n` is `max_vars`, `max_vars - 1` or
/// `max_vars - 2` (at least 1), then a random ideal in `n` variables.
pub fn campaign_ideal(params: &CampaignParams, k: usize) -> Result<MonomialIdeal> {
    let seed = case_seed(params.seed, k as u64);
    let n = params.max_vars.saturating_sub((seed % 3) as usize).max(1);
    random_monomial_ideal(n, params.max_exp, params.max_gens, seed)
}

fn run_cases<T: Send + Sync>(
    name: &str,
    params: &CampaignParams,
    inputs: Vec<(T, String)>,
    body: impl Fn(&T, &mut Case<'_>) -> Result<()> + Sync,
) -> CampaignReport {
    let outcomes: Vec<Outcome> = inputs
        .par_iter()
        .enumerate()
        .map(|(index, (item, input))| {
            let mut out = Outcome::default();
            let mut case = Case {
                index,
                input: input.clone(),
                field: None,
                out: &mut out,
            };
            if let Err(e) = body(item, &mut case) {
                case.check("error", false, || e.to_string());
            }
            out
        })
        .collect();
    let mut report = CampaignReport {
        name: name.into(),
        params: params.clone(),
        cases: inputs.len(),
        checks: 0,
        hits: BTreeMap::new(),
        violations: Vec::new(),
    };
    for o in outcomes {
        report.checks += o.checks;
        for (k, v) in o.hits {
            *report.hits.entry(k).or_default() += v;
        }
        report.violations.extend(o.violations);
    }
    report
}

fn ideal_inputs(params: &CampaignParams) -> Result<Vec<(MonomialIdeal, String)>> {
    (0..params.count)
        .map(|k| {
            let i = campaign_ideal(params, k)?;
            let text = i.to_string();
            Ok((i, text))
        })
        .collect()
}

fn ideal_campaign(
    name: &str,
    params: &CampaignParams,
    body: impl Fn(&MonomialIdeal, &mut Case<'_>) -> Result<()> + Sync,
) -> Result<CampaignReport> {
    Ok(run_cases(name, params, ideal_inputs(params)?, body))
}

/// Each property of `S/I` passes to `S/√I`: CM, Gorenstein, sequentially
/// CM, generalized CM, clean, and level with maximal a-invariant.
pub fn transfer_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    ideal_campaign("transfer", params, |i, case| {
        let r = i.radical();
        if let (true, Some(cert)) = is_clean(i)? {
            case.hit("clean");
            case.check("clean", is_clean(&r)?.0, || {
                format!("radical {r} is not clean")
            });
            let bad = radical_step_violations(&cert)?;
            case.check("clean_radical_steps", bad.is_empty(), || {
                format!("steps {bad:?}")
            });
        }
        for &field in &params.fields {
            let mut case = case.with_field(field);
            if cohomology::is_cm(i, field)? {
                case.hit("cm");
                case.check("cm", cohomology::is_cm(&r, field)?, || {
                    format!("radical {r} is not CM")
                });
            }
            if is_gorenstein(i, field)? {
                case.hit("gorenstein");
                case.check("gorenstein", is_gorenstein(&r, field)?, || {
                    format!("radical {r} is not Gorenstein")
                });
            }
            if !cohomology::is_cm(i, field)? {
                case.hit("not cm");
            }
            if is_sequentially_cm(i, field)? {
                case.hit("sequentially_cm");
                case.check("sequentially_cm", is_sequentially_cm(&r, field)?, || {
                    format!("radical {r} is not sequentially CM")
                });
            }
            if cohomology::is_gcm(i, field)? {
                case.hit("gcm");
                case.check("gcm", cohomology::is_gcm(&r, field)?, || {
                    format!("radical {r} is not generalized CM")
                });
            }
            if is_level(i, field)? && cohomology::has_maximal_a_invariant(i, field)? {
                case.hit("level_max_a");
                case.check("level", is_level(&r, field)?, || {
                    format!("radical {r} is not level")
                });
            }
        }
        Ok(())
    })
}

/// `a(S/I) <= Σ t_i - n`.
pub fn a_invariant_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    ideal_campaign("a-invariant", params, |i, case| {
        let bound = cohomology::a_invariant_bound(i)?;
        for &field in &params.fields {
            let mut case = case.with_field(field);
            let a = cohomology::a_invariant(i, field)?;
            if a == bound {
                case.hit("bound attained");
            }
            case.check("a_invariant_bound", a <= bound, || {
                format!("a = {a} > {bound}")
            });
        }
        Ok(())
    })
}

/// Local cohomology of `S/I` and `S/√I` agree in clamped degrees `<= 0`.
pub fn radical_agreement_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    ideal_campaign("radical-agreement", params, |i, case| {
        for &field in &params.fields {
            let mut case = case.with_field(field);
            let report = cohomology::radical_cohomology_agreement(i, field)?;
            case.check("radical_agreement", report.violations.is_empty(), || {
                format!("{:?}", report.violations)
            });
        }
        Ok(())
    })
}

fn totals(t: &BettiTable) -> Vec<usize> {
    t.totals_by_index()
}

/// Betti numbers do not grow under the radical, are unchanged by
/// polarization, and the Koszul and Taylor routes agree.
pub fn betti_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    ideal_campaign("betti", params, |i, case| {
        let (p, _) = polarize(i)?;
        for &field in &params.fields {
            let mut case = case.with_field(field);
            let bi = betti_koszul(i, field)?;
            let br = betti_koszul(&i.radical(), field)?;
            let (ti, tr) = (totals(&bi), totals(&br));
            let monotone = tr.len() <= ti.len() && tr.iter().zip(&ti).all(|(a, b)| a <= b);
            case.check("radical_monotone", monotone, || {
                format!("β(√I) = {tr:?}, β(I) = {ti:?}")
            });
            let bp = betti_koszul(&p, field)?;
            case.check("polarization_invariant", bp.graded() == bi.graded(), || {
                format!("β(I^p) = {:?}, β(I) = {ti:?}", totals(&bp))
            });
            if i.generators().len() <= TAYLOR_GENERATOR_BOUND {
                let bt = betti_taylor(i, field)?;
                case.check("koszul_taylor", bt == bi, || "tables differ".into());
            }
        }
        Ok(())
    })
}

/// Depth from local cohomology equals `n - pd`; for squarefree ideals the
/// CM decision agrees with the Reisner criterion.
pub fn depth_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    ideal_campaign("depth", params, |i, case| {
        for &field in &params.fields {
            let mut case = case.with_field(field);
            let table = LocalCohomologyTable::compute(i, field)?;
            let pd = betti_koszul(i, field)?.projective_dimension();
            case.check("depth_ab", table.depth() + pd == i.ambient(), || {
                format!("depth {} but pd {pd}", table.depth())
            });
            case.check("dimension", table.dimension() == i.krull_dim()?, || {
                format!("table dimension {}", table.dimension())
            });
            if i.is_squarefree() {
                case.hit("squarefree");
                let reisner = reisner_cm(&SimplicialComplex::from_stanley_reisner(i)?, field)?;
                let cm = table.depth() == table.dimension();
                case.check("reisner", reisner == cm, || {
                    format!("table {cm}, Reisner {reisner}")
                });
            }
        }
        Ok(())
    })
}

/// `depth S/I >= size I`, with size computed two ways.
pub fn lyubeznik_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    ideal_campaign("lyubeznik", params, |i, case| {
        let by_sums = size_by_sums(i)?;
        for &field in &params.fields {
            let mut case = case.with_field(field);
            let report = check_lyubeznik_bound(i, field)?;
            case.check("size_routes", report.size == by_sums, || {
                format!("{:?} vs {by_sums:?}", report.size)
            });
            case.check("depth_ge_size", report.holds, || {
                format!("depth {} < size {}", report.depth, report.size.size)
            });
        }
        Ok(())
    })
}

/// Sequential Cohen–Macaulayness by layers agrees with the dual criterion.
pub fn sequential_campaign(params: &CampaignParams) -> Result<CampaignReport> {
    ideal_campaign("sequential", params, |i, case| {
        for &field in &params.fields {
            let mut case = case.with_field(field);
            let layers = is_sequentially_cm(i, field)?;
            let dual = is_sequentially_cm_dual(i, field)?;
            case.hit(if layers {
                "sequentially_cm"
            } else {
                "not sequentially_cm"
            });
            case.check("scm_routes", layers == dual, || {
                format!("layers {layers}, dual {dual}")
            });
        }
        Ok(())
    })
}

/// Clean Stanley–Reisner ideal iff shellable complex; clean implies
/// sequentially CM.
pub fn dress_campaign(params: &CampaignParams, max_vertices: usize) -> Result<CampaignReport> {
    let inputs = (0..params.count)
        .map(|k| {
            let seed = case_seed(params.seed, k as u64);
            let n = max_vertices.saturating_sub((seed % 3) as usize).max(1);
            let complex = random_complex(n, 6, seed)?;
            let text = complex.to_string();
            Ok((complex, text))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(run_cases("dress", params, inputs, |complex, case| {
        let shellable = is_shellable(complex)?.is_some();
        case.hit(if shellable {
            "shellable"
        } else {
            "not shellable"
        });
        let ideal = complex.to_stanley_reisner();
        if ideal.is_zero() {
            // a full simplex; S itself is clean
            case.check("dress", shellable, || {
                "simplex reported non-shellable".into()
            });
            return Ok(());
        }
        let clean = is_clean(&ideal)?.0;
        case.check("dress", clean == shellable, || {
            format!("clean {clean}, shellable {shellable}")
        });
        if clean {
            for &field in &params.fields {
                let mut case = case.with_field(field);
                case.check(
                    "clean_implies_scm",
                    is_sequentially_cm(&ideal, field)?,
                    || "clean but not sequentially CM".into(),
                );
            }
        }
        Ok(())
    }))
}

/// Random configurations whose prime intersection is CM: the exact
/// conditions agree, sampled ideals are CM when they hold, and a verified
/// non-CM witness exists when they fail.
pub fn configuration_campaign(
    params: &CampaignParams,
    sampling: SamplingParams,
) -> Result<CampaignReport> {
    let field = params.fields.first().copied().unwrap_or_default();
    let mut evaluated = Vec::new();
    let mut skipped = 0usize;
    let mut k = 0u64;
    while evaluated.len() < params.count {
        let seed = case_seed(params.seed, k);
        k += 1;
        let n = 3 + (seed % 4) as usize;
        let c = 1 + (seed >> 8) as usize % (n - 1).min(3);
        let r = 1 + (seed >> 16) as usize % 4;
        let Ok(cfg) = random_pure_configuration(n, c, r, seed) else {
            continue;
        };
        if cohomology::is_cm(&cfg.ideal(), field)? {
            let text = format!("{n}; {}", faces_text(cfg.faces()));
            evaluated.push((cfg, text));
        } else {
            skipped += 1;
        }
        if k > 100 * params.count as u64 + 1000 {
            break;
        }
    }
    let mut report = run_cases("configurations", params, evaluated, |cfg, case| {
        let mut case = case.with_field(field);
        let report = configuration_battery(cfg, field, sampling)?;
        case.check(
            "hypothesis",
            report.status == BatteryStatus::Evaluated,
            || "not CM".into(),
        );
        case.check("exact_agree", report.exact_conditions_agree(), || {
            format!("{:?}", report.conditions())
        });
        let exact = report.pairwise_heights;
        if exact {
            case.hit("conditions hold");
            case.check(
                "samples_cm",
                report.exponent_samples.all_pass() && report.ass_samples.all_pass(),
                || {
                    format!(
                        "non-CM sample {:?}",
                        report
                            .exponent_samples
                            .first_failure
                            .as_ref()
                            .or(report.ass_samples.first_failure.as_ref())
                            .map(ToString::to_string)
                    )
                },
            );
            case.check("subsets_cm", report.subsets_cm, || {
                format!("{:?}", report.failing_subset)
            });
        } else {
            case.hit("conditions fail");
            let verified = match &report.witness {
                Some(w) => !cohomology::is_cm(&w.ideal, field)?,
                None => false,
            };
            case.check("witness", verified, || "no verified non-CM witness".into());
        }
        Ok(())
    });
    report.hits.insert("skipped (not CM)".into(), skipped);
    Ok(report)
}

fn faces_text(faces: &[crate::VertexSet]) -> String {
    faces
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
