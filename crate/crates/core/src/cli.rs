//! JSON-in/JSON-out command line.
//!
//! Every subcommand writes exactly one JSON document to stdout. Validation
//! failures print `{"error": <kind>, "message": ...}` and exit 1; a failing
//! `verify` run exits 2. Guard bounds can be lifted with `--force`, which
//! prints a cost warning to stderr.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bps::{bps_to_pt, extract_bps, BpsVector};
use crate::dtpt::{dt_pt_convert, palindrome_check, reciprocal_polynomial, reflexive_degree_check, Direction, Flavor, LocalSeriesLabel};
use crate::error::{Error, Result};
use crate::json::{decimal_array, parse_rational, JsonCoeff};
use crate::macmahon::{self, DEFAULT_ENUMERATION_BOUND};
use crate::motivic::{motivic_quot_series, signed_chi_check_bounded, virtual_chi_series};
use crate::quiver::field::{Field, PrimeField};
use crate::quiver::potential::{critical_check, potential_gradient, potential_value};
use crate::quiver::rep::{generation_closure, random_prime_rep, random_rational_rep, AnyRep, FramedRep};
use crate::quiver::stability::{brute_force_stability_bounded, is_stable_via_generation, Theta, BRUTE_FORCE_MAX_N, BRUTE_FORCE_MAX_P};
use crate::series::{LaurentSeries, TruncSeries};
use crate::verify::{report_json, run_suite, VerifyConfig};

/// Largest series order accepted without `--force`.
pub const MAX_ORDER: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "quotdt", version, about = "Generating series for Quot schemes of points on affine 3-space")]
pub struct Cli {
    /// Lift the guard bounds (enumeration n <= 12, oracle n <= 3, order <= 64).
    #[arg(long, global = true)]
    pub force: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// MacMahon series, plane-partition counts and coloured counts.
    Macmahon(MacmahonArgs),
    /// The DT/PT wall-crossing factor M((-1)^r q)^(r chi).
    WallFactor(WallFactorArgs),
    /// Motivic series of the Quot scheme.
    Motivic(MotivicArgs),
    /// Virtual Euler characteristic series, optionally against signed fixed-point counts.
    VirtualChi(VirtualChiArgs),
    /// N-invariants of M(-q)^chi and the factor rebuilt from them.
    NInvariants(NInvariantsArgs),
    /// Joint generation and stability of a framed representation.
    QuiverCheck(QuiverCheckArgs),
    /// Value and gradient of the trace potential Tr A[B, C].
    Potential(PotentialArgs),
    /// DT <-> PT series conversion, or the polynomial checks on a PT polynomial.
    DtptConvert(DtptArgs),
    /// BPS numbers and rationality test, or reconstruction from BPS numbers.
    Bps(BpsArgs),
    /// Run the reproduction checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMode {
    /// Coefficients of the product formula.
    Product,
    /// Plane-partition counts by enumeration.
    Enumeration,
    /// r-tuples of plane partitions (torus-fixed points of the Quot scheme).
    FixedPoints,
    /// The plane partitions of size exactly `order`, as box lists.
    List,
}

#[derive(Args, Debug)]
pub struct MacmahonArgs {
    #[arg(short = 'N', long)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "product")]
    pub count: CountMode,
    #[arg(short = 'r', long, alias = "r", default_value_t = 1)]
    pub rank: usize,
}

#[derive(Args, Debug)]
pub struct WallFactorArgs {
    #[arg(short = 'r', long, alias = "r")]
    pub rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub chi: i64,
    #[arg(short = 'N', long)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct MotivicArgs {
    #[arg(short = 'r', long, alias = "r")]
    pub rank: usize,
    #[arg(short = 'N', long)]
    pub order: usize,
    /// Specialize L^(1/2) -> -1.
    #[arg(long)]
    pub euler: bool,
}

#[derive(Args, Debug)]
pub struct VirtualChiArgs {
    #[arg(short = 'r', long, alias = "r")]
    pub rank: usize,
    #[arg(short = 'N', long)]
    pub order: usize,
    /// Compare each coefficient with (-1)^(rn) times the fixed-point count.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct NInvariantsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub chi: i64,
    #[arg(short = 'N', long)]
    pub order: usize,
    /// Also rebuild M((-1)^r q)^(r chi) from the invariants.
    #[arg(short = 'r', long, alias = "r")]
    pub rank: Option<usize>,
}

#[derive(Args, Debug)]
pub struct QuiverCheckArgs {
    /// Representation payload (path, or `-` for stdin).
    #[arg(long)]
    pub json: Option<String>,
    /// Field for payloads that omit one, and for `--random`: `Q` or `Fp:<p>`.
    #[arg(long)]
    pub field: Option<String>,
    /// Stability parameter `theta1,theta2` for (framing, vertex).
    #[arg(long, default_value = "1,0")]
    pub theta: String,
    /// Also run the brute-force oracle (prime fields only).
    #[arg(long)]
    pub oracle: bool,
    /// Check a random representation of this dimension instead of a payload.
    #[arg(long)]
    pub random: Option<usize>,
    /// Number of framing vectors for `--random`.
    #[arg(short = 'r', long, alias = "r", default_value_t = 1)]
    pub rank: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct PotentialArgs {
    #[arg(long)]
    pub json: Option<String>,
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Args, Debug)]
pub struct DtptArgs {
    #[arg(long)]
    pub json: Option<String>,
    #[arg(short = 'r', long, alias = "r")]
    pub rank: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<i64>,
    /// `dt2pt` or `pt2dt`.
    #[arg(long)]
    pub dir: Option<String>,
    /// `behrend` (default) or `euler`.
    #[arg(long)]
    pub flavor: Option<String>,
    /// Treat the payload as a PT polynomial: reciprocal, palindrome and degree checks.
    #[arg(long)]
    pub polynomial: bool,
    /// Window degree for the reciprocal (defaults to the polynomial degree).
    #[arg(long)]
    pub degree: Option<usize>,
    /// Expected degree for the reflexive-sheaf degree check.
    #[arg(long)]
    pub ell: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BpsArgs {
    #[arg(long)]
    pub json: Option<String>,
    #[arg(long)]
    pub genus: Option<usize>,
    /// With a `{"bps": [...]}` payload: top exponent of the reconstructed window.
    #[arg(short = 'N', long)]
    pub order: Option<i64>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(short = 'N', long, default_value_t = 10)]
    pub order: usize,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    pub seed: u64,
}

struct Ctx<'a> {
    force: bool,
    stdin: &'a mut dyn Read,
    stderr: &'a mut dyn Write,
}

impl Ctx<'_> {
    /// `Ok(effective bound)`; with `--force` an exceeded bound only warns.
    fn guard(&mut self, what: &'static str, value: usize, bound: usize) -> Result<usize> {
        if value <= bound {
            return Ok(bound);
        }
        if !self.force {
            return Err(Error::BoundExceeded { what, value, bound });
        }
        let _ = writeln!(
            self.stderr,
            "warning: {what} = {value} exceeds the guard bound {bound}; running anyway, cost grows quickly"
        );
        Ok(value)
    }

    fn payload(&mut self, path: Option<&str>) -> Result<Value> {
        let text = match path {
            Some(p) if p != "-" => fs::read_to_string(p).map_err(|e| Error::Invalid(format!("cannot read {p:?}: {e}")))?,
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| Error::Invalid(format!("cannot read stdin: {e}")))?;
                s
            }
        };
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let message = e.kind().to_string();
            let detail = e.to_string();
            let first = detail.lines().next().unwrap_or(&message).trim_start_matches("error: ");
            let _ = writeln!(stdout, "{}", json!({"error": "usage", "message": first}));
            return 1;
        }
    };
    let mut ctx = Ctx { force: cli.force, stdin, stderr };
    match execute(cli.command, &mut ctx) {
        Ok((doc, code)) => {
            let _ = writeln!(stdout, "{doc}");
            code
        }
        Err(e) => {
            let _ = writeln!(stdout, "{}", json!({"error": e.kind(), "message": e.to_string()}));
            1
        }
    }
}

fn execute(cmd: Command, ctx: &mut Ctx) -> Result<(Value, i32)> {
    let doc = match cmd {
        Command::Macmahon(a) => macmahon_cmd(a, ctx)?,
        Command::WallFactor(a) => {
            ctx.guard("order", a.order, MAX_ORDER)?;
            macmahon::wall_crossing_factor(a.rank, a.chi, a.order)?.to_json()
        }
        Command::Motivic(a) => {
            ctx.guard("order", a.order, MAX_ORDER)?;
            let s = motivic_quot_series(a.rank, a.order)?;
            if a.euler {
                s.euler_specialize().to_json()
            } else {
                s.to_json()
            }
        }
        Command::VirtualChi(a) => virtual_chi_cmd(a, ctx)?,
        Command::NInvariants(a) => {
            ctx.guard("order", a.order, MAX_ORDER)?;
            let n = macmahon::n_invariants(a.chi, a.order)?;
            let mut doc = json!({ "chi": a.chi, "n": decimal_array(&n) });
            if let Some(r) = a.rank {
                let rebuilt = macmahon::factor_from_n_invariants(r, &n, a.order)?;
                let direct = macmahon::wall_crossing_factor(r, a.chi, a.order)?.to_rational();
                doc["rank"] = json!(r);
                doc["factor"] = rebuilt.to_json();
                doc["matches_factor"] = json!(rebuilt == direct);
            }
            doc
        }
        Command::QuiverCheck(a) => quiver_check_cmd(a, ctx)?,
        Command::Potential(a) => {
            let rep = load_rep(ctx, a.json.as_deref(), a.field.as_deref())?;
            match &rep {
                AnyRep::Rational(r) => potential_doc(r),
                AnyRep::Prime(r) => potential_doc(r),
            }
        }
        Command::DtptConvert(a) => dtpt_cmd(a, ctx)?,
        Command::Bps(a) => bps_cmd(a, ctx)?,
        Command::Verify(a) => {
            ctx.guard("order", a.order, MAX_ORDER)?;
            let cfg = VerifyConfig { order: a.order, seed: a.seed, ..Default::default() };
            let results = run_suite(&a.suite, &cfg)?;
            let doc = report_json(&results);
            let code = if results.iter().all(|r| r.passed) { 0 } else { 2 };
            return Ok((doc, code));
        }
    };
    Ok((doc, 0))
}

fn macmahon_cmd(a: MacmahonArgs, ctx: &mut Ctx) -> Result<Value> {
    ctx.guard("order", a.order, MAX_ORDER)?;
    if a.rank == 0 {
        return Err(Error::Invalid("rank r must be >= 1".into()));
    }
    Ok(match a.count {
        CountMode::Product => json!({ "coeffs": decimal_array(macmahon::macmahon_series(a.order).coeffs()) }),
        CountMode::Enumeration => {
            let bound = ctx.guard("enumeration size n", a.order, DEFAULT_ENUMERATION_BOUND)?;
            json!({ "coeffs": decimal_array(&macmahon::plane_partition_counts(a.order, bound)?) })
        }
        CountMode::FixedPoints => {
            let bound = ctx.guard("enumeration size n", a.order, DEFAULT_ENUMERATION_BOUND)?;
            let counts = (0..=a.order)
                .map(|n| macmahon::colored_count_bounded(a.rank, n, bound))
                .collect::<Result<Vec<BigInt>>>()?;
            json!({ "rank": a.rank, "coeffs": decimal_array(&counts) })
        }
        CountMode::List => {
            let bound = ctx.guard("enumeration size n", a.order, DEFAULT_ENUMERATION_BOUND)?;
            let parts = macmahon::enumerate_plane_partitions(a.order, bound)?;
            let lists: Vec<Value> = parts.iter().map(|p| json!(p.boxes().collect::<Vec<_>>())).collect();
            json!({ "size": a.order, "count": lists.len(), "partitions": lists })
        }
    })
}

fn virtual_chi_cmd(a: VirtualChiArgs, ctx: &mut Ctx) -> Result<Value> {
    ctx.guard("order", a.order, MAX_ORDER)?;
    if !a.check {
        return Ok(virtual_chi_series(a.rank, a.order)?.to_json());
    }
    let bound = ctx.guard("enumeration size n", a.order, DEFAULT_ENUMERATION_BOUND)?;
    let rows = (0..=a.order)
        .map(|n| {
            let (signed, virt) = signed_chi_check_bounded(a.rank, n, bound)?;
            Ok(json!({ "n": n, "signed_count": signed.to_json(), "virtual": virt.to_json(), "agree": signed == virt }))
        })
        .collect::<Result<Vec<_>>>()?;
    let all = rows.iter().all(|r| r["agree"] == json!(true));
    Ok(json!({ "rank": a.rank, "checks": rows, "all_agree": all }))
}

fn parse_theta(s: &str) -> Result<Theta> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("theta must be \"theta1,theta2\", got {s:?}")))?;
    Ok(Theta::new(parse_rational(a)?, parse_rational(b)?))
}

fn parse_field(s: &str) -> Result<Option<PrimeField>> {
    let s = s.trim();
    if s == "Q" {
        return Ok(None);
    }
    let p = s
        .strip_prefix("Fp:")
        .and_then(|p| p.trim().parse::<u64>().ok())
        .ok_or_else(|| Error::Parse(format!("field must be \"Q\" or \"Fp:<p>\", got {s:?}")))?;
    Ok(Some(PrimeField::new(p)?))
}

fn load_rep(ctx: &mut Ctx, path: Option<&str>, field: Option<&str>) -> Result<AnyRep> {
    let mut v = ctx.payload(path)?;
    if let Some(flag) = field {
        match v.get("field").and_then(Value::as_str) {
            Some(given) if given.trim() != flag.trim() => {
                return Err(Error::Invalid(format!("--field {flag} conflicts with payload field {given}")));
            }
            _ => v["field"] = json!(flag),
        }
    }
    AnyRep::from_json(&v)
}

fn quiver_check_cmd(a: QuiverCheckArgs, ctx: &mut Ctx) -> Result<Value> {
    let theta = parse_theta(&a.theta)?;
    let rep = match a.random {
        Some(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            match parse_field(a.field.as_deref().unwrap_or("Fp:5"))? {
                Some(f) => AnyRep::Prime(random_prime_rep(f, n, a.rank, 0.5, &mut rng)),
                None => AnyRep::Rational(random_rational_rep(n, a.rank, 9, 4, 0.0, &mut rng)),
            }
        }
        None => load_rep(ctx, a.json.as_deref(), a.field.as_deref())?,
    };
    let mut doc = match &rep {
        AnyRep::Rational(r) => generation_doc(r, &theta, a.oracle)?,
        AnyRep::Prime(r) => generation_doc(r, &theta, a.oracle)?,
    };
    if a.oracle {
        let AnyRep::Prime(r) = &rep else {
            return Err(Error::Invalid("the brute-force oracle needs a prime field \"Fp:<p>\"".into()));
        };
        let max_n = ctx.guard("oracle dimension n", r.n(), BRUTE_FORCE_MAX_N)?;
        let max_p = ctx.guard("oracle prime p", r.field().modulus() as usize, BRUTE_FORCE_MAX_P as usize)?;
        doc["oracle"] = json!(brute_force_stability_bounded(r, &theta, max_n, max_p as u64)?.as_str());
    }
    if a.random.is_some() {
        doc["rep"] = rep.to_json();
    }
    Ok(doc)
}

/// The criterion needs `theta1 > theta2`; with `--oracle` the hypothesis
/// failure is reported as `null` instead of aborting.
fn generation_doc<F: Field>(rep: &FramedRep<F>, theta: &Theta, lenient: bool) -> Result<Value> {
    let closure = generation_closure(rep);
    let stable = match is_stable_via_generation(rep, theta) {
        Ok(b) => json!(b),
        Err(Error::Hypothesis(_)) if lenient => Value::Null,
        Err(e) => return Err(e),
    };
    Ok(json!({
        "n": rep.n(),
        "r": rep.r(),
        "field": rep.field().descriptor(),
        "closure_dim": closure.dim(),
        "generated": closure.dim() == rep.n(),
        "stable": stable,
        "critical": critical_check(rep).gradient_vanishes,
    }))
}

fn potential_doc<F: Field>(rep: &FramedRep<F>) -> Value {
    let f = rep.field();
    let g = potential_gradient(rep);
    let mat = |m: &crate::quiver::Matrix<F::Elem>| -> Value {
        m.rows().iter().map(|row| row.iter().map(|x| f.format(x)).collect::<Vec<_>>()).collect()
    };
    let check = critical_check(rep);
    json!({
        "value": f.format(&potential_value(rep)),
        "gradient": { "A": mat(&g.d_a), "B": mat(&g.d_b), "C": mat(&g.d_c) },
        "gradient_vanishes": check.gradient_vanishes,
        "commutators_vanish": check.commutators_vanish,
    })
}

/// Flag value, else the payload field, else an error.
fn flag_or_payload<T>(flag: Option<T>, payload: &Value, key: &str, parse: impl Fn(&Value) -> Option<T>) -> Result<Option<T>> {
    match flag {
        Some(x) => Ok(Some(x)),
        None => match payload.get(key) {
            None => Ok(None),
            Some(v) => parse(v).map(Some).ok_or_else(|| Error::Parse(format!("bad value for {key:?}: {v}"))),
        },
    }
}

/// A bare array payload is shorthand for `{"coeffs": [...]}`.
fn normalize_series(v: Value) -> Value {
    if v.is_array() {
        json!({ "coeffs": v })
    } else {
        v
    }
}

fn dtpt_cmd(a: DtptArgs, ctx: &mut Ctx) -> Result<Value> {
    let payload = normalize_series(ctx.payload(a.json.as_deref())?);
    if a.polynomial {
        let p: Vec<BigInt> = TruncSeries::<BigInt>::from_json(&payload)?.into_coeffs();
        let deg = p.iter().rposition(|c| *c != BigInt::from(0)).unwrap_or(0);
        let d = a.degree.unwrap_or(deg);
        let mut doc = json!({
            "reciprocal": decimal_array(&reciprocal_polynomial(&p, d)?),
            "palindrome": palindrome_check(&p),
        });
        if let Some(ell) = a.ell {
            doc["degree_matches"] = json!(reflexive_degree_check(&p, ell));
        }
        return Ok(doc);
    }
    let series = TruncSeries::<BigInt>::from_json(&payload)?;
    ctx.guard("order", series.order(), MAX_ORDER)?;
    let as_usize = |v: &Value| v.as_u64().map(|x| x as usize);
    let as_string = |v: &Value| v.as_str().map(str::to_string);
    let rank = flag_or_payload(a.rank, &payload, "r", as_usize)?
        .ok_or_else(|| Error::Invalid("missing rank (--rank or payload \"r\")".into()))?;
    let chi = flag_or_payload(a.chi, &payload, "chi", Value::as_i64)?
        .ok_or_else(|| Error::Invalid("missing chi (--chi or payload \"chi\")".into()))?;
    let dir: Direction = flag_or_payload(a.dir, &payload, "direction", as_string)?
        .ok_or_else(|| Error::Invalid("missing direction (--dir or payload \"direction\")".into()))?
        .parse()?;
    let flavor: Flavor = flag_or_payload(a.flavor, &payload, "flavor", as_string)?
        .unwrap_or_else(|| "behrend".into())
        .parse()?;
    let label = LocalSeriesLabel::new(rank, chi, flavor)?;
    Ok(dt_pt_convert(&series, &label, dir)?.to_json())
}

fn bps_cmd(a: BpsArgs, ctx: &mut Ctx) -> Result<Value> {
    let payload = ctx.payload(a.json.as_deref())?;
    let genus = flag_or_payload(a.genus, &payload, "genus", |v| v.as_u64().map(|g| g as usize))?
        .ok_or_else(|| Error::Invalid("missing genus (--genus or payload \"genus\")".into()))?;
    if let Some(values) = payload.get("bps") {
        let values = values
            .as_array()
            .ok_or_else(|| Error::Parse("\"bps\" must be an array".into()))?
            .iter()
            .map(BigRational::from_json)
            .collect::<Result<Vec<_>>>()?;
        let v = BpsVector::new(genus, values)?;
        let lo = 1 - genus as i64;
        let hi = a.order.unwrap_or(lo + 2 * genus as i64 + 3);
        ctx.guard("order", (hi - lo).max(0) as usize, MAX_ORDER)?;
        return Ok(bps_to_pt(&v, lo, hi)?.to_json());
    }
    let z = LaurentSeries::<BigRational>::from_json(&payload)?;
    ctx.guard("order", z.coeffs().len(), MAX_ORDER)?;
    Ok(extract_bps(&z, genus)?.to_json())
}
