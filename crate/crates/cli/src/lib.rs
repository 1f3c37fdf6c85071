//! Command dispatch for the `monoid-forge` binary.

use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use monoid_forge::algebra::{depolarize_radical, parse_monomial, polarize, PolarizationRecord};
use monoid_forge::campaign::{self, CampaignParams, CampaignReport};
use monoid_forge::cohomology::{self, LocalCohomologyTable};
use monoid_forge::resolutions::{
    betti_koszul, betti_taylor, dimension_filtration, has_linear_resolution,
    is_componentwise_linear, is_gorenstein, is_level, is_sequentially_cm, last_shifts,
    layer_report, BettiTable,
};
use monoid_forge::simplicial::{delta_a, is_shellable, reduced_homology};
use monoid_forge::structure::{
    configuration_battery, gorenstein_battery, is_clean, size, size_by_sums, PureConfiguration,
    SamplingParams,
};
use monoid_forge::{Error, FieldSpec, MonomialIdeal, SimplicialComplex};

#[derive(Parser, Debug)]
#[command(
    name = "monoid-forge",
    version,
    about = "Exact invariants of monomial ideals"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct IdealInput {
    /// Ideal as `n; m1, m2, ...` or a path to a file containing one.
    #[arg(long)]
    pub ideal: String,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FieldArg {
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, default_value = "q")]
    pub field: FieldSpec,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigurationArgs {
    /// Number of variables.
    #[arg(long)]
    pub n: usize,
    /// Faces as `{1,2},{2,3}`.
    #[arg(long)]
    pub faces: String,
    #[command(flatten)]
    pub field: FieldArg,
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, default_value_t = 3)]
    pub max_exp: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BettiMethod {
    Koszul,
    Taylor,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Cm,
    Gcm,
    Buchsbaum,
    Gorenstein,
    Level,
    Scm,
    Clean,
    Linear,
    ComponentwiseLinear,
    Shellable,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CampaignName {
    /// Properties of S/I pass to S/√I.
    Transfer,
    /// a-invariant never exceeds Σ t_i - n.
    AInvariant,
    /// Local cohomology of I and √I agrees in nonpositive degrees.
    RadicalAgreement,
    /// depth >= size.
    Lyubeznik,
    /// Clean iff shellable.
    Dress,
    /// Betti monotonicity, polarization invariance, Koszul = Taylor.
    Betti,
    /// Depth from cohomology equals n - pd; Reisner agreement.
    Depth,
    /// Sequential CM by layers agrees with the dual criterion.
    Sequential,
    /// Prime-intersection configurations.
    Configurations,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Radical √I.
    Radical(IdealInput),
    /// Colon ideal I : m.
    Colon {
        #[command(flatten)]
        input: IdealInput,
        /// Monomial such as `x1^2*x3`.
        #[arg(long)]
        by: String,
    },
    /// Intersection I ∩ J.
    Intersect {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        with: String,
    },
    /// Irreducible decomposition and associated primes.
    Decompose(IdealInput),
    /// Complete polarization.
    Polarize(IdealInput),
    /// Radical of I from its polarization and the record printed by `polarize --json`.
    Depolarize {
        #[command(flatten)]
        input: IdealInput,
        /// Polarization record as JSON, or a path to one.
        #[arg(long)]
        record: String,
    },
    /// Degree complex Δ_a(I).
    DeltaA {
        #[command(flatten)]
        input: IdealInput,
        /// Comma separated integers, e.g. `--degree=-1,0,2`.
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
    /// Reduced homology of a simplicial complex.
    Homology {
        /// Complex as `n; {1,2},{2,3}` or a path.
        #[arg(long)]
        complex: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Multigraded local cohomology table.
    Cohomology {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// depth S/I.
    Depth {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// a-invariant of S/I and its bound Σ t_i - n.
    AInvariant {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Multigraded Betti numbers of S/I.
    Betti {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "koszul")]
        method: BettiMethod,
    },
    /// Dimension filtration with the depth of each layer.
    Filtration {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Lyubeznik size.
    Size(IdealInput),
    /// Decide a property of S/I (or of a complex via its Stanley-Reisner ideal).
    Check {
        #[arg(value_enum)]
        property: Property,
        #[arg(long, conflicts_with = "complex")]
        ideal: Option<String>,
        #[arg(long)]
        complex: Option<String>,
        #[command(flatten)]
        field: FieldArg,
        /// Include the clean filtration certificate.
        #[arg(long)]
        certificate: bool,
    },
    /// CM battery for an intersection of monomial primes over equal-size faces.
    Configurations(ConfigurationArgs),
    /// Gorenstein battery for an intersection of monomial primes.
    GorensteinConfigurations(ConfigurationArgs),
    /// Seeded property campaign.
    Campaign {
        #[arg(value_enum)]
        name: CampaignName,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Largest number of variables (vertices for `dress`).
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_exp: u32,
        #[arg(long, default_value_t = 6)]
        max_gens: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Fields to test, comma separated; defaults to `q,fp:2`.
        #[arg(long = "field", value_delimiter = ',')]
        fields: Vec<FieldSpec>,
        /// Samples per configuration battery.
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
}

/// Machine-readable result of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub field: Option<FieldSpec>,
    pub result: Value,
    pub witnesses: Value,
    pub timing_ms: u64,
    pub version: String,
}

/// A finished run: the report, its text rendering and whether a campaign
/// found violations.
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub violations: bool,
}

/// Inline text, or the contents of the file it names.
pub fn read_source(source: &str) -> Result<String, Error> {
    let path = Path::new(source);
    if !source.contains(';') && path.is_file() {
        std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Error::InvalidConfiguration(format!("{source}: {e}")))
    } else {
        Ok(source.to_string())
    }
}

fn parse_ideal(source: &str) -> Result<MonomialIdeal, Error> {
    read_source(source)?.parse()
}

fn parse_complex(source: &str) -> Result<SimplicialComplex, Error> {
    SimplicialComplex::parse(&read_source(source)?)
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

struct Draft {
    command: String,
    input: Value,
    field: Option<FieldSpec>,
    result: Value,
    witnesses: Value,
    text: String,
    violations: bool,
}

impl Draft {
    fn new(command: &str, input: Value, field: Option<FieldSpec>) -> Self {
        Draft {
            command: command.into(),
            input,
            field,
            result: Value::Null,
            witnesses: Value::Null,
            text: String::new(),
            violations: false,
        }
    }

    fn done(mut self, result: Value, text: String) -> Self {
        self.result = result;
        self.text = text;
        self
    }
}

fn betti_text(table: &BettiTable) -> String {
    let mut lines = vec![format!("totals: {:?}", table.totals_by_index())];
    for ((i, j), v) in table.graded() {
        lines.push(format!("beta_{{{i},{j}}} = {v}"));
    }
    lines.join("\n")
}

fn campaign_text(report: &CampaignReport) -> String {
    let mut lines = vec![format!(
        "{}: {} cases, {} checks, {} violations",
        report.name,
        report.cases,
        report.checks,
        report.violations.len()
    )];
    for (k, v) in &report.hits {
        lines.push(format!("  {k}: {v}"));
    }
    for v in &report.violations {
        let field = v.field.map(|f| format!(" [{f}]")).unwrap_or_default();
        lines.push(format!(
            "  case {} `{}`{field}: {} ({})",
            v.case, v.input, v.property, v.detail
        ));
    }
    lines.join("\n")
}

fn sampling(args: &ConfigurationArgs) -> SamplingParams {
    SamplingParams {
        samples: args.samples,
        max_exp: args.max_exp,
        seed: args.seed,
    }
}

fn configuration_input(args: &ConfigurationArgs) -> Value {
    json!({ "n": args.n, "faces": args.faces, "samples": args.samples, "max_exp": args.max_exp, "seed": args.seed })
}

fn check(
    property: Property,
    ideal: Option<&str>,
    complex: Option<&str>,
    field: FieldSpec,
    certificate: bool,
) -> Result<Draft, Error> {
    let name = format!(
        "check {}",
        property.to_possible_value().expect("named").get_name()
    );
    let complex = complex.map(parse_complex).transpose()?;
    let ideal = match (ideal, &complex) {
        (Some(text), _) => parse_ideal(text)?,
        (None, Some(c)) => c.to_stanley_reisner(),
        (None, None) => {
            return Err(Error::InvalidConfiguration(
                "need --ideal or --complex".into(),
            ))
        }
    };
    let input = match &complex {
        Some(c) => json!({ "complex": c.to_string() }),
        None => json!({ "ideal": ideal.to_string() }),
    };
    let mut draft = Draft::new(&name, input, Some(field));
    let (value, witnesses) = match property {
        Property::Cm => {
            let table = LocalCohomologyTable::compute(&ideal, field)?;
            let w = json!({ "depth": table.depth(), "dimension": table.dimension() });
            (table.depth() == table.dimension(), w)
        }
        Property::Gcm => {
            let w = json!({ "equidimensional": cohomology::is_equidimensional(&ideal)? });
            (cohomology::is_gcm(&ideal, field)?, w)
        }
        Property::Buchsbaum => (cohomology::is_buchsbaum(&ideal, field)?, Value::Null),
        Property::Gorenstein => {
            let table = betti_koszul(&ideal, field)?;
            let pd = table.projective_dimension();
            let w = json!({ "projective_dimension": pd, "height": ideal.height()?, "last_betti": table.total(pd) });
            (is_gorenstein(&ideal, field)?, w)
        }
        Property::Level => {
            let w = json!({ "last_shifts": last_shifts(&ideal, field)? });
            (is_level(&ideal, field)?, w)
        }
        Property::Scm => {
            let layers = layer_report(&ideal, field)?;
            let w = json!({ "layers": to_value(&layers) });
            (is_sequentially_cm(&ideal, field)?, w)
        }
        Property::Clean => {
            let (clean, cert) = is_clean(&ideal)?;
            let w = if certificate {
                to_value(&cert)
            } else {
                Value::Null
            };
            (clean, w)
        }
        Property::Linear => (has_linear_resolution(&ideal, field)?, Value::Null),
        Property::ComponentwiseLinear => {
            (is_componentwise_linear(&ideal, field, false)?, Value::Null)
        }
        Property::Shellable => {
            let complex = match complex {
                Some(c) => c,
                None => SimplicialComplex::from_stanley_reisner(&ideal)?,
            };
            let order = is_shellable(&complex)?;
            let w = json!({ "shelling": order.as_ref().map(|o| strings(o.iter())) });
            (order.is_some(), w)
        }
    };
    draft.witnesses = witnesses;
    Ok(draft.done(json!({ "value": value }), format!("{value}")))
}

fn dispatch(command: &Command) -> Result<Draft, Error> {
    Ok(match command {
        Command::Radical(input) => {
            let i = parse_ideal(&input.ideal)?;
            let r = i.radical();
            Draft::new("radical", json!({ "ideal": i.to_string() }), None)
                .done(json!({ "ideal": r.to_string() }), r.to_string())
        }
        Command::Colon { input, by } => {
            let i = parse_ideal(&input.ideal)?;
            let m = parse_monomial(by, i.ambient())?;
            let c = i.colon(&m)?;
            Draft::new(
                "colon",
                json!({ "ideal": i.to_string(), "by": m.to_string() }),
                None,
            )
            .done(json!({ "ideal": c.to_string() }), c.to_string())
        }
        Command::Intersect { input, with } => {
            let i = parse_ideal(&input.ideal)?;
            let j = parse_ideal(with)?;
            let k = i.intersect(&j)?;
            Draft::new(
                "intersect",
                json!({ "ideal": i.to_string(), "with": j.to_string() }),
                None,
            )
            .done(json!({ "ideal": k.to_string() }), k.to_string())
        }
        Command::Decompose(input) => {
            let i = parse_ideal(&input.ideal)?;
            let comps = i.irreducible_decomposition()?;
            let ideals = strings(comps.iter().map(|q| q.to_ideal()));
            let shown = strings(comps.iter());
            let ass = strings(i.associated_primes()?);
            let min = strings(i.minimal_primes()?);
            let text = format!(
                "components: {}\nassociated primes: {}\nminimal primes: {}\nheight {}, dimension {}",
                shown.join(" ∩ "),
                ass.join(" "),
                min.join(" "),
                i.height()?,
                i.krull_dim()?
            );
            let result = json!({
                "components": ideals,
                "associated_primes": ass,
                "minimal_primes": min,
                "height": i.height()?,
                "dimension": i.krull_dim()?,
            });
            Draft::new("decompose", json!({ "ideal": i.to_string() }), None).done(result, text)
        }
        Command::Polarize(input) => {
            let i = parse_ideal(&input.ideal)?;
            let (p, record) = polarize(&i)?;
            let text = format!(
                "{p}\nrecord: {}",
                serde_json::to_string(&record).expect("serializable")
            );
            Draft::new("polarize", json!({ "ideal": i.to_string() }), None).done(
                json!({ "ideal": p.to_string(), "record": to_value(&record) }),
                text,
            )
        }
        Command::Depolarize { input, record } => {
            let p = parse_ideal(&input.ideal)?;
            let record: PolarizationRecord = serde_json::from_str(&read_source(record)?)
                .map_err(|e| Error::InvalidConfiguration(format!("record: {e}")))?;
            let r = depolarize_radical(&p, &record)?;
            Draft::new(
                "depolarize",
                json!({ "ideal": p.to_string(), "record": to_value(&record) }),
                None,
            )
            .done(json!({ "ideal": r.to_string() }), r.to_string())
        }
        Command::DeltaA { input, degree } => {
            let i = parse_ideal(&input.ideal)?;
            let a = degree
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidConfiguration(format!("degree: {e}")))?;
            if a.len() != i.ambient() {
                return Err(Error::AmbientMismatch {
                    left: i.ambient(),
                    right: a.len(),
                });
            }
            let c = delta_a(&i, &a)?;
            Draft::new(
                "delta-a",
                json!({ "ideal": i.to_string(), "degree": a }),
                None,
            )
            .done(json!({ "complex": c.to_string() }), c.to_string())
        }
        Command::Homology { complex, field } => {
            let c = parse_complex(complex)?;
            let profile = reduced_homology(&c, field.field);
            let text = profile
                .nonzero()
                .map(|(j, d)| format!("H~_{j} = {d}"))
                .collect::<Vec<_>>()
                .join("\n");
            let text = if text.is_empty() {
                "acyclic".into()
            } else {
                text
            };
            Draft::new(
                "homology",
                json!({ "complex": c.to_string() }),
                Some(field.field),
            )
            .done(json!({ "dims_from_minus_one": to_value(&profile) }), text)
        }
        Command::Cohomology { input, field } => {
            let i = parse_ideal(&input.ideal)?;
            let table = LocalCohomologyTable::compute(&i, field.field)?;
            let mut lines = Vec::new();
            for (k, cells) in &table.cells {
                for cell in cells {
                    lines.push(format!(
                        "H^{k} at clamp {:?} (negative support {}): {}",
                        cell.clamp.entries(),
                        cell.negative_support,
                        cell.dim
                    ));
                }
            }
            lines.push(format!(
                "depth {}, dimension {}",
                table.depth(),
                table.dimension()
            ));
            Draft::new(
                "cohomology",
                json!({ "ideal": i.to_string() }),
                Some(field.field),
            )
            .done(to_value(&table.cells), lines.join("\n"))
        }
        Command::Depth { input, field } => {
            let i = parse_ideal(&input.ideal)?;
            let d = cohomology::depth(&i, field.field)?;
            Draft::new(
                "depth",
                json!({ "ideal": i.to_string() }),
                Some(field.field),
            )
            .done(json!({ "value": d }), d.to_string())
        }
        Command::AInvariant { input, field } => {
            let i = parse_ideal(&input.ideal)?;
            let a = cohomology::a_invariant(&i, field.field)?;
            let bound = cohomology::a_invariant_bound(&i)?;
            Draft::new(
                "a-invariant",
                json!({ "ideal": i.to_string() }),
                Some(field.field),
            )
            .done(
                json!({ "value": a, "bound": bound }),
                format!("{a} (bound {bound})"),
            )
        }
        Command::Betti {
            input,
            field,
            method,
        } => {
            let i = parse_ideal(&input.ideal)?;
            let f = field.field;
            let draft = Draft::new(
                "betti",
                json!({ "ideal": i.to_string(), "method": format!("{method:?}").to_lowercase() }),
                Some(f),
            );
            match method {
                BettiMethod::Koszul => {
                    let t = betti_koszul(&i, f)?;
                    draft.done(to_value(&t), betti_text(&t))
                }
                BettiMethod::Taylor => {
                    let t = betti_taylor(&i, f)?;
                    draft.done(to_value(&t), betti_text(&t))
                }
                BettiMethod::Both => {
                    let k = betti_koszul(&i, f)?;
                    let t = betti_taylor(&i, f)?;
                    let agree = k == t;
                    let text = format!("{}\nkoszul and taylor agree: {agree}", betti_text(&k));
                    draft.done(
                        json!({ "koszul": to_value(&k), "taylor": to_value(&t), "agree": agree }),
                        text,
                    )
                }
            }
        }
        Command::Filtration { input, field } => {
            let i = parse_ideal(&input.ideal)?;
            let chain = dimension_filtration(&i)?;
            let layers = layer_report(&i, field.field)?;
            let mut lines = vec![format!("chain: {}", strings(chain.ideals()).join("  ⊂  "))];
            for l in &layers {
                lines.push(format!(
                    "layer dim {} depth {} {}",
                    l.dimension,
                    l.depth,
                    if l.cohen_macaulay { "CM" } else { "not CM" }
                ));
            }
            let result = json!({ "chain": strings(chain.ideals()), "layers": to_value(&layers) });
            Draft::new(
                "filtration",
                json!({ "ideal": i.to_string() }),
                Some(field.field),
            )
            .done(result, lines.join("\n"))
        }
        Command::Size(input) => {
            let i = parse_ideal(&input.ideal)?;
            let s = size(&i)?;
            let literal = size_by_sums(&i)?;
            let text = format!("size {} (v = {}, h = {})", s.size, s.v, s.h);
            let mut draft = Draft::new("size", json!({ "ideal": i.to_string() }), None)
                .done(to_value(&s), text);
            draft.witnesses = json!({ "by_sums": to_value(&literal) });
            draft
        }
        Command::Check {
            property,
            ideal,
            complex,
            field,
            certificate,
        } => check(
            *property,
            ideal.as_deref(),
            complex.as_deref(),
            field.field,
            *certificate,
        )?,
        Command::Configurations(args) => {
            let cfg = PureConfiguration::parse(args.n, &read_source(&args.faces)?)?;
            let report = configuration_battery(&cfg, args.field.field, sampling(args))?;
            let names = ["a", "b", "c", "d", "e", "f", "g"];
            let conds = report.conditions();
            let mut lines = vec![format!("status: {:?}", report.status)];
            for (name, value) in names.iter().zip(conds) {
                lines.push(format!("({name}) {value}"));
            }
            if let Some(w) = &report.witness {
                lines.push(format!(
                    "non-CM witness on faces {:?}: {}",
                    w.subset, w.ideal
                ));
            }
            let mut draft = Draft::new(
                "configurations",
                configuration_input(args),
                Some(args.field.field),
            )
            .done(to_value(&report), lines.join("\n"));
            draft.witnesses = to_value(&report.witness);
            draft
        }
        Command::GorensteinConfigurations(args) => {
            let cfg = PureConfiguration::parse(args.n, &read_source(&args.faces)?)?;
            let report = gorenstein_battery(&cfg, args.field.field, sampling(args))?;
            let mut lines = vec![
                format!("r = 1 or c = 1: {}", report.single_face_or_vertex),
                format!(
                    "sampled Gorenstein: {}/{}",
                    report.samples.passing, report.samples.samples
                ),
            ];
            if let Some(w) = &report.witness {
                lines.push(format!("non-Gorenstein witness: {}", w.ideal));
            }
            lines.push(format!("consistent: {}", report.consistent()));
            let mut draft = Draft::new(
                "gorenstein-configurations",
                configuration_input(args),
                Some(args.field.field),
            )
            .done(to_value(&report), lines.join("\n"));
            draft.witnesses = to_value(&report.witness);
            draft.violations = !report.consistent();
            draft
        }
        Command::Campaign {
            name,
            count,
            n,
            max_exp,
            max_gens,
            seed,
            fields,
            samples,
        } => {
            let params = CampaignParams {
                count: *count,
                max_vars: *n,
                max_exp: *max_exp,
                max_gens: *max_gens,
                seed: *seed,
                fields: if fields.is_empty() {
                    CampaignParams::default().fields
                } else {
                    fields.clone()
                },
            };
            if params.count == 0
                || params.max_vars == 0
                || params.max_exp == 0
                || params.max_gens == 0
            {
                return Err(Error::InvalidConfiguration(
                    "campaign sizes must be positive".into(),
                ));
            }
            let report = match name {
                CampaignName::Transfer => campaign::transfer_campaign(&params)?,
                CampaignName::AInvariant => campaign::a_invariant_campaign(&params)?,
                CampaignName::RadicalAgreement => campaign::radical_agreement_campaign(&params)?,
                CampaignName::Lyubeznik => campaign::lyubeznik_campaign(&params)?,
                CampaignName::Dress => campaign::dress_campaign(&params, params.max_vars.max(1))?,
                CampaignName::Betti => campaign::betti_campaign(&params)?,
                CampaignName::Depth => campaign::depth_campaign(&params)?,
                CampaignName::Sequential => campaign::sequential_campaign(&params)?,
                CampaignName::Configurations => campaign::configuration_campaign(
                    &params,
                    SamplingParams {
                        samples: *samples,
                        max_exp: *max_exp,
                        seed: *seed,
                    },
                )?,
            };
            let command = format!(
                "campaign {}",
                name.to_possible_value().expect("named").get_name()
            );
            let mut draft = Draft::new(&command, to_value(&params), None)
                .done(to_value(&report), campaign_text(&report));
            draft.violations = !report.passed();
            draft.witnesses = to_value(&report.violations);
            draft
        }
    })
}

/// Runs one command.
pub fn run(command: &Command) -> Result<Outcome, Error> {
    let start = Instant::now();
    let draft = dispatch(command)?;
    Ok(Outcome {
        report: Report {
            command: draft.command,
            input: draft.input,
            field: draft.field,
            result: draft.result,
            witnesses: draft.witnesses,
            timing_ms: start.elapsed().as_millis() as u64,
            version: env!("CARGO_PKG_VERSION").into(),
        },
        text: draft.text,
        violations: draft.violations,
    })
}
