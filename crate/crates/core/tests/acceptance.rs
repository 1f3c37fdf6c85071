//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use monoid_forge::campaign::{
    a_invariant_campaign, betti_campaign, configuration_campaign, depth_campaign, dress_campaign,
    lyubeznik_campaign, radical_agreement_campaign, transfer_campaign, CampaignParams,
    CampaignReport,
};
use monoid_forge::cohomology::{a_invariant, a_invariant_bound, is_cm};
use monoid_forge::resolutions::{is_gorenstein, is_level};
use monoid_forge::simplicial::reisner_cm;
use monoid_forge::structure::{
    configuration_battery, size, PureConfiguration, SamplingParams, SizeReport,
};
use monoid_forge::{FieldSpec, MonomialIdeal, Result, SimplicialComplex};

const Q: FieldSpec = FieldSpec::Rationals;
const GF2: FieldSpec = FieldSpec::PrimeField(2);

fn ideal(text: &str) -> MonomialIdeal {
    text.parse().expect("valid ideal")
}

fn params() -> CampaignParams {
    CampaignParams::default()
}

fn summarize(report: &CampaignReport) -> String {
    let mut s = format!(
        "{} cases, {} checks, {} violations",
        report.cases,
        report.checks,
        report.violations.len()
    );
    if !report.hits.is_empty() {
        let hits: Vec<String> = report
            .hits
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        s.push_str(&format!(" [{}]", hits.join(", ")));
    }
    for v in report.violations.iter().take(3) {
        s.push_str(&format!(
            "\n      case {} `{}` {:?}: {} ({})",
            v.case, v.input, v.field, v.property, v.detail
        ));
    }
    s
}

fn campaign(report: Result<CampaignReport>) -> (bool, String) {
    match report {
        Ok(r) => (r.passed(), summarize(&r)),
        Err(e) => (false, format!("error: {e}")),
    }
}

fn transfer() -> (bool, String) {
    campaign(transfer_campaign(&params()))
}

fn a_bound() -> (bool, String) {
    let (ok, detail) = campaign(a_invariant_campaign(&params()));
    let square = ideal("1; x1^2");
    let a = a_invariant(&square, Q).unwrap();
    let bound = a_invariant_bound(&square).unwrap();
    (
        ok && a == 1 && bound == 1,
        format!("{detail}; a((x1^2)) = {a}, bound {bound}"),
    )
}

fn radical_agreement() -> (bool, String) {
    campaign(radical_agreement_campaign(&params()))
}

fn betti() -> (bool, String) {
    campaign(betti_campaign(&params()))
}

fn depth() -> (bool, String) {
    campaign(depth_campaign(&params()))
}

fn dress() -> (bool, String) {
    let p = CampaignParams {
        count: 100,
        ..params()
    };
    campaign(dress_campaign(&p, 5))
}

fn lyubeznik() -> (bool, String) {
    campaign(lyubeznik_campaign(&params()))
}

fn configurations() -> (bool, String) {
    let p = CampaignParams {
        count: 100,
        fields: vec![Q],
        ..params()
    };
    let (ok, detail) = campaign(configuration_campaign(&p, SamplingParams::default()));
    let path = PureConfiguration::parse(4, "{1,2},{2,3},{3,4}").unwrap();
    let report = configuration_battery(&path, Q, SamplingParams::default()).unwrap();
    let witness = report.witness.as_ref().map(|w| w.subset.clone());
    let path_ok = !report.pairwise_heights && witness == Some(vec![1, 3]);
    (
        ok && path_ok,
        format!(
            "{detail}; path (c) = {}, witness A = {witness:?}",
            report.pairwise_heights
        ),
    )
}

fn golden() -> (bool, String) {
    let tri = ideal("3; x1*x2, x1*x3, x2*x3");
    let cm = is_cm(&tri, Q).unwrap();
    let level = is_level(&tri, Q).unwrap();
    let gor = is_gorenstein(&tri, Q).unwrap();
    let other = is_gorenstein(&ideal("3; x1^2, x1*x2, x2*x3"), Q).unwrap();
    let s = size(&tri).unwrap();
    let ok = cm
        && level
        && !gor
        && !other
        && s == SizeReport {
            v: 2,
            h: 3,
            size: 1,
        };
    (
        ok,
        format!("triangle CM {cm}, level {level}, Gorenstein {gor}; (x1^2,x1x2,x2x3) Gorenstein {other}; size {s:?}"),
    )
}

fn field_dependence() -> (bool, String) {
    let rp2 = SimplicialComplex::parse(
        "6; {1,2,3},{1,3,4},{1,4,5},{1,5,6},{1,2,6},{2,3,5},{2,4,5},{2,4,6},{3,4,6},{3,5,6}",
    )
    .unwrap();
    let i = rp2.to_stanley_reisner();
    let (q, f2) = (is_cm(&i, Q).unwrap(), is_cm(&i, GF2).unwrap());
    let (rq, rf2) = (reisner_cm(&rp2, Q).unwrap(), reisner_cm(&rp2, GF2).unwrap());
    (
        q && !f2 && rq && !rf2,
        format!("CM over Q {q}, over GF(2) {f2}; Reisner Q {rq}, GF(2) {rf2}"),
    )
}

type Criterion = (&'static str, fn() -> (bool, String));

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "1 radical transfer of CM/Gorenstein/SCM/GCM/clean/level",
            transfer,
        ),
        ("2 a-invariant bound", a_bound),
        (
            "3 local cohomology agreement in nonpositive degrees",
            radical_agreement,
        ),
        ("4 Betti monotonicity, polarization, Koszul = Taylor", betti),
        ("5 depth by cohomology = n - pd; Reisner agreement", depth),
        ("6 clean iff shellable", dress),
        ("7 depth >= size", lyubeznik),
        ("8 prime configurations", configurations),
        ("9 golden examples", golden),
        ("10 field dependence", field_dependence),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = run();
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {name}: {status} ({:.1}s) {detail}",
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!ok);
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
