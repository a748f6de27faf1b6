//! `isob`: command-line front-end for the isotropy obstruction engine.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error, 10 inconclusive verdict.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isob_core::charclass;
use isob_core::classify::{self, GroupType, MilnorWoodQuery, SimpleGroupDescriptor};
use isob_core::config::Limits;
use isob_core::num::{fmt_q, parse_coords};
use isob_core::obstruction::{self, Verdict};
use isob_core::repthy;
use isob_core::sympair::{PairId, SymmetricPair};
use isob_core::verify::{self, CheckItem, VerifySummary};
use isob_core::{Basis, Error, RootSystem, SimpleType, Weight, WeightMultiset};
use serde::Serialize;
use serde_json::json;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 10;

#[derive(Parser, Debug)]
#[command(name = "isob", version, about = "Exact root systems, isotropy representations and extension obstructions")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Output format; `--json` overrides it.
    #[arg(long, global = true, value_enum, env = "ISOB_FORMAT", default_value = "text")]
    format: Format,
    /// Largest Weyl orbit enumerated explicitly.
    #[arg(long, global = true, env = "ISOB_ORBIT_CAP", default_value_t = Limits::default().orbit_cap,
          value_parser = clap::value_parser!(u64).range(1..))]
    orbit_cap: u64,
    /// Largest representation handed to the Freudenthal recursion.
    #[arg(long, global = true, env = "ISOB_FREUDENTHAL_CAP", default_value_t = Limits::default().freudenthal_cap,
          value_parser = clap::value_parser!(u64).range(1..))]
    freudenthal_cap: u64,
    /// Coefficient bound for the brute-force kernel search of `check --audit`.
    #[arg(long, global = true, env = "ISOB_KERNEL_SEARCH_BOUND", default_value_t = Limits::default().kernel_search_bound,
          value_parser = clap::value_parser!(i64).range(1..))]
    kernel_search_bound: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system data: Cartan matrix, simple roots, fundamental weights.
    Describe(TypeArgs),
    /// Dimension of the irreducible representation with a given highest weight.
    Dim {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        w: WeightArgs,
    },
    /// Weyl orbit of a weight.
    Orbit {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        w: WeightArgs,
        /// Print only the orbit size, computed without enumeration.
        #[arg(long)]
        count: bool,
    },
    /// Weight multiplicities of an irreducible representation.
    Freudenthal {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        w: WeightArgs,
    },
    /// Symmetric pairs and their isotropy representations.
    #[command(subcommand)]
    Pair(PairCommand),
    /// Decide whether the isotropy representation of a pair extends.
    Check {
        /// Pair such as `sl-so:5`, `sl-sp:3`, `so-so:9`, `e6-f4`, `complex:E8`.
        pair: String,
        /// Also compare the derived candidates with a brute-force search.
        #[arg(long)]
        audit: bool,
    },
    /// Chern classes from weights and the flat-bundle kernel.
    #[command(subcommand)]
    Chern(ChernCommand),
    /// Type 1 / Type 2 classification of a simple group or a product.
    Classify {
        /// Group names such as `SU(3,2)`, `SL(5,R)`, `E6(-26)`; several
        /// names form a product.
        #[arg(required = true)]
        groups: Vec<String>,
    },
    /// Euler-number bound for flat bundles over products of surfaces.
    MilnorWood {
        /// Number of hyperbolic plane factors.
        #[arg(long)]
        k: u32,
        /// Euler number of the tangent bundle.
        #[arg(long, allow_hyphen_values = true)]
        euler_tm: i64,
        /// Euler number of a bundle to test against the bound.
        #[arg(long, allow_hyphen_values = true)]
        euler_e: Option<i64>,
        /// Volume of the regular ideal 2k-simplex, for the Smillie ratio.
        #[arg(long, allow_hyphen_values = true)]
        volume: Option<f64>,
    },
    /// Reproduce every dimension, certificate and table check.
    VerifyPaper {
        /// Restrict to these pairs; ranges like `sl-so:2..9` are expanded.
        #[arg(long, num_args = 1..)]
        pairs: Vec<String>,
        /// Restrict to the classification sample.
        #[arg(long)]
        classify_sample: bool,
    },
}

#[derive(Args, Debug)]
struct TypeArgs {
    /// Family letter (A-G), or a full type such as `E8`.
    family: String,
    /// Rank, when not part of the family argument.
    rank: Option<usize>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct WeightArgs {
    /// Coordinates in the ambient basis, e.g. `2,0,0,0,0`.
    #[arg(long, allow_hyphen_values = true)]
    ambient: Option<String>,
    /// Dynkin labels, e.g. `1,0,0,0,0,0`.
    #[arg(long, allow_hyphen_values = true)]
    fundamental: Option<String>,
}

#[derive(Subcommand, Debug)]
enum PairCommand {
    /// Dimensions, restriction matrix and isotropy weights.
    Describe { pair: String },
    /// Restrict an ambient weight of `g` to the Cartan subalgebra of `k`.
    Restrict {
        pair: String,
        #[arg(long, allow_hyphen_values = true)]
        ambient: String,
    },
}

#[derive(Subcommand, Debug)]
enum ChernCommand {
    /// Chern polynomial of a weight list or of an isotropy representation.
    Poly {
        /// Weights separated by `;`, coordinates by `,`: `1,0;-1,0`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "pair", required_unless_present = "pair")]
        weights: Option<String>,
        /// Use the isotropy weights of this pair.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Compare two weight lists through their Chern polynomials.
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Characteristic classes of SO(n) that vanish on flat bundles.
    FlatKernel { n: u32 },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            e => Failure::Domain(e),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::IllegalType(_) => "illegal_type",
        Error::BasisMismatch(_) => "basis_mismatch",
        Error::NotIntegral(_) => "not_integral",
        Error::NotDominant(_) => "not_dominant",
        Error::OrbitTooLarge { .. } => "orbit_too_large",
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::IllegalParameter(_) => "illegal_parameter",
        Error::NoRestrictionMap(_) => "no_restriction_map",
        Error::NoWeightModel(_) => "no_weight_model",
        Error::NotAWeightOf(_) => "not_a_weight_of",
        Error::CountMismatch { .. } => "count_mismatch",
        Error::ConsistencyFault(_) => "consistency_fault",
        Error::OutOfTable(_) => "out_of_table",
        Error::EmptyProduct => "empty_product",
        Error::NonPositiveVolume(_) => "non_positive_volume",
        Error::MissingVolume(_) => "missing_volume",
        Error::Parse(_) => "parse",
    }
}

struct Ctx {
    json: bool,
    limits: Limits,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
        } else {
            let t = text();
            print!("{t}");
            if !t.ends_with('\n') {
                println!();
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json || cli.format == Format::Json,
        limits: Limits {
            orbit_cap: cli.orbit_cap,
            freudenthal_cap: cli.freudenthal_cap,
            kernel_search_bound: cli.kernel_search_bound,
        },
    };
    let code = match run(&ctx, cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            if ctx.json {
                println!("{}", json!({ "error": "usage", "detail": msg }));
            }
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            if ctx.json {
                println!("{}", json!({ "error": error_kind(&e), "detail": e.to_string() }));
            }
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    };
    ExitCode::from(code)
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Describe(t) => {
            let rs = RootSystem::new(simple_type(&t)?);
            let d = rs.describe();
            ctx.emit(&d, || render::root_system(&d));
            Ok(0)
        }
        Command::Dim { t, w } => {
            let rs = RootSystem::new(simple_type(&t)?);
            let lambda = weight(&w)?;
            let d = repthy::weyl_dim(&rs, &lambda)?;
            ctx.emit(&json!({ "type": rs.simple_type(), "highest_weight": lambda, "dim": d.to_string() }), || d.to_string());
            Ok(0)
        }
        Command::Orbit { t, w, count } => {
            let rs = RootSystem::new(simple_type(&t)?);
            let w = weight(&w)?;
            let size = repthy::orbit_size(&rs, &w)?;
            if count {
                ctx.emit(&json!({ "weight": w, "size": size.to_string() }), || size.to_string());
            } else {
                let orbit = repthy::weyl_orbit(&rs, &w, ctx.limits.orbit_cap)?;
                ctx.emit(&json!({ "weight": w, "size": size.to_string(), "orbit": orbit }), || {
                    orbit.iter().map(|x| format!("{x}\n")).collect()
                });
            }
            Ok(0)
        }
        Command::Freudenthal { t, w } => {
            let rs = RootSystem::new(simple_type(&t)?);
            let lambda = weight(&w)?;
            let mults = repthy::freudenthal_multiplicities(&rs, &lambda, ctx.limits.freudenthal_cap)?;
            ctx.emit(&json!({ "highest_weight": lambda, "total": mults.total(), "weights": mults }), || {
                render::multiset(&mults)
            });
            Ok(0)
        }
        Command::Pair(PairCommand::Describe { pair }) => {
            let p = SymmetricPair::new(pair_id(&pair)?)?;
            let d = p.describe();
            ctx.emit(&d, || render::pair(&d));
            Ok(0)
        }
        Command::Pair(PairCommand::Restrict { pair, ambient }) => {
            let p = SymmetricPair::new(pair_id(&pair)?)?;
            let w = Weight::ambient(coords(&ambient)?);
            let r = p.restrict(&w)?;
            ctx.emit(&json!({ "pair": p.id(), "weight": w, "restricted": r }), || r.to_string());
            Ok(0)
        }
        Command::Check { pair, audit } => check(ctx, &pair, audit),
        Command::Chern(c) => chern(ctx, c),
        Command::Classify { groups } => classify_cmd(ctx, &groups),
        Command::MilnorWood { k, euler_tm, euler_e, volume } => {
            let query = MilnorWoodQuery::new(k, euler_tm)?;
            let bound = classify::milnor_wood_bound(&query);
            let obstructed = euler_e.map(|e| classify::obstructs_flat(&query, e));
            let ratio = if k == 1 || volume.is_some() { Some(classify::smillie_ratio(k, volume)?) } else { None };
            let out = json!({
                "k": k,
                "euler_tm": euler_tm,
                "bound": fmt_q(&bound),
                "euler_e": euler_e,
                "obstructed": obstructed,
                "smillie_ratio": ratio,
            });
            ctx.emit(&out, || {
                let mut s = format!("bound: |eu(E)| <= {}\n", fmt_q(&bound));
                if let (Some(e), Some(o)) = (euler_e, obstructed) {
                    s.push_str(&format!("eu(E) = {e}: {}\n", if o { "no flat structure" } else { "within the bound" }));
                }
                if let Some(r) = ratio {
                    s.push_str(&format!("smillie ratio: {r}\n"));
                }
                s
            });
            Ok(0)
        }
        Command::VerifyPaper { pairs, classify_sample } => verify_paper(ctx, &pairs, classify_sample),
    }
}

fn simple_type(t: &TypeArgs) -> Result<SimpleType, Failure> {
    let s = match t.rank {
        Some(r) => format!("{}{}", t.family, r),
        None => t.family.clone(),
    };
    Ok(s.parse()?)
}

fn coords(s: &str) -> Result<Vec<isob_core::num::Q>, Failure> {
    parse_coords(s).ok_or_else(|| Failure::Usage(format!("bad coordinates {s:?}")))
}

fn weight(w: &WeightArgs) -> Result<Weight, Failure> {
    match (&w.ambient, &w.fundamental) {
        (Some(a), None) => Ok(Weight::new(Basis::Ambient, coords(a)?)),
        (None, Some(f)) => Ok(Weight::new(Basis::Fundamental, coords(f)?)),
        _ => Err(Failure::Usage("give exactly one of --ambient or --fundamental".into())),
    }
}

fn pair_id(s: &str) -> Result<PairId, Failure> {
    Ok(s.parse()?)
}

fn weight_list(s: &str) -> Result<WeightMultiset, Failure> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(|p| Ok(Weight::ambient(coords(p)?))).collect()
}

fn check(ctx: &Ctx, pair: &str, audit: bool) -> Outcome {
    let p = SymmetricPair::new(pair_id(pair)?)?;
    let report = obstruction::check_extension(&p, &ctx.limits)?;
    let audit_result = if audit {
        obstruction::replay(&report, &ctx.limits)?;
        Some(audit_candidates(&p, ctx.limits.kernel_search_bound)?)
    } else {
        None
    };
    match &audit_result {
        Some(a) => ctx.emit(&json!({ "report": report, "audit": a }), || {
            format!("{}{}", render::report(&report), render::audit(a))
        }),
        None => ctx.emit(&report, || render::report(&report)),
    }
    if audit_result.as_ref().is_some_and(|a| !a.passed) {
        return Ok(EXIT_VERIFY);
    }
    Ok(match report.verdict {
        Verdict::NoExtension => 0,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

#[derive(Serialize)]
struct Audit {
    passed: bool,
    replayed: bool,
    bound: i64,
    searched: Option<usize>,
    uncovered: Vec<Weight>,
    note: Option<String>,
}

/// Every brute-force candidate with coefficients in `[-bound, bound]` must
/// lie in a derived family.
fn audit_candidates(p: &SymmetricPair, bound: i64) -> Result<Audit, Failure> {
    let applicable = match p.id() {
        PairId::SlSo(n) => n >= 3,
        PairId::SlSp(_) => true,
        _ => false,
    };
    if !applicable {
        return Ok(Audit {
            passed: true,
            replayed: true,
            bound,
            searched: None,
            uncovered: Vec::new(),
            note: Some("no candidate derivation for this pair; the certificate replay is the audit".into()),
        });
    }
    let families = obstruction::candidate_weights(p)?;
    let found = obstruction::brute_force_candidates(p, bound)?;
    let uncovered: Vec<Weight> = found.iter().filter(|w| !families.iter().any(|f| f.contains(w))).cloned().collect();
    Ok(Audit { passed: uncovered.is_empty(), replayed: true, bound, searched: Some(found.len()), uncovered, note: None })
}

fn chern(ctx: &Ctx, c: ChernCommand) -> Outcome {
    match c {
        ChernCommand::Poly { weights, pair } => {
            let ws = match (weights, pair) {
                (Some(w), _) => weight_list(&w)?,
                (None, Some(p)) => SymmetricPair::new(pair_id(&p)?)?.isotropy_weights()?.clone(),
                (None, None) => return Err(Failure::Usage("give --weights or --pair".into())),
            };
            let poly = charclass::chern_polynomial(&ws)?;
            ctx.emit(&poly, || render::chern(&poly));
            Ok(0)
        }
        ChernCommand::Compare { left, right } => {
            let equal = charclass::reps_equal_by_chern(&weight_list(&left)?, &weight_list(&right)?)?;
            ctx.emit(&json!({ "equal": equal }), || equal.to_string());
            Ok(0)
        }
        ChernCommand::FlatKernel { n } => {
            let k = charclass::flat_kernel(n)?;
            ctx.emit(&k, || render::flat_kernel(&k));
            Ok(0)
        }
    }
}

fn classify_cmd(ctx: &Ctx, groups: &[String]) -> Outcome {
    let parsed: Vec<SimpleGroupDescriptor> = groups.iter().map(|g| g.parse()).collect::<Result<_, _>>()?;
    let looked_up: Vec<(SimpleGroupDescriptor, Result<GroupType, Error>)> =
        parsed.iter().map(|g| (*g, classify::lookup_type(g))).collect();
    if let Some((g, Err(e))) = looked_up.iter().find(|(_, r)| r.is_err()) {
        let out = json!({ "group": g, "error": error_kind(e), "detail": e.to_string() });
        ctx.emit(&out, || format!("{g}: {e}"));
        return Ok(EXIT_DOMAIN);
    }
    let notes: Vec<String> = parsed.iter().flat_map(classify::lookup_notes).collect();
    if parsed.len() == 1 {
        let t = classify::lookup_type(&parsed[0])?;
        let mut out = json!({ "group": parsed[0], "type": t });
        if !notes.is_empty() {
            out["notes"] = json!(notes);
        }
        ctx.emit(&out, || render::with_notes(format!("{}: {t}", parsed[0]), &notes));
    } else {
        let t = classify::product_type(&parsed)?;
        let factors: Vec<_> = looked_up
            .iter()
            .map(|(g, r)| json!({ "group": g, "type": r.as_ref().ok() }))
            .collect();
        let mut out = json!({ "factors": factors, "type": t });
        if !notes.is_empty() {
            out["notes"] = json!(notes);
        }
        let names: Vec<String> = parsed.iter().map(|g| g.to_string()).collect();
        ctx.emit(&out, || render::with_notes(format!("{}: {t}", names.join(" x ")), &notes));
    }
    Ok(0)
}

/// Expands `sl-so:2..9` into `sl-so:2`, ..., `sl-so:9`.
fn expand_pairs(args: &[String]) -> Result<Vec<PairId>, Failure> {
    let mut out = Vec::new();
    for arg in args {
        for part in arg.split(',').filter(|s| !s.is_empty()) {
            match part.split_once(':').and_then(|(f, r)| r.split_once("..").map(|(a, b)| (f, a, b))) {
                Some((family, a, b)) => {
                    let bad = || Failure::Usage(format!("bad pair range {part:?}"));
                    let a: usize = a.parse().map_err(|_| bad())?;
                    let b: usize = b.parse().map_err(|_| bad())?;
                    for n in a..=b {
                        out.push(pair_id(&format!("{family}:{n}"))?);
                    }
                }
                None => out.push(pair_id(part)?),
            }
        }
    }
    Ok(out)
}

fn verify_paper(ctx: &Ctx, pairs: &[String], classify_sample: bool) -> Outcome {
    let summary = if pairs.is_empty() && !classify_sample {
        verify::run_all(&ctx.limits)
    } else {
        let mut items: Vec<CheckItem> = verify::verify_pairs(&expand_pairs(pairs)?, &ctx.limits);
        if classify_sample {
            items.push(verify::verify_classification_sample());
        }
        VerifySummary::new(items)
    };
    ctx.emit(&summary, || render::summary(&summary));
    if summary.passed {
        Ok(0)
    } else {
        for f in summary.failures() {
            eprintln!("failed: {}", f.name);
        }
        Ok(EXIT_VERIFY)
    }
}
