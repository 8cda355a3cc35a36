//! Reproduction checks: each identity the library implements, run end to end
//! against an independent route, with a pass/fail verdict per check.
//!
//! The `verify` subcommand of the CLI is a thin wrapper around [`run_suite`].

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bps::{bps_to_pt, extract_bps, BpsVector};
use crate::dtpt::{dt_pt_convert, palindrome_check, reciprocal_polynomial, Direction, Flavor, LocalSeriesLabel};
use crate::error::{Error, Result};
use crate::macmahon::{self, macmahon_series, plane_partition_counts, DEFAULT_ENUMERATION_BOUND};
use crate::motivic::{motivic_quot_series, signed_chi_check};
use crate::quiver::field::{Field, PrimeField, Rationals};
use crate::quiver::linalg::{Matrix, Subspace};
use crate::quiver::potential::{critical_check, potential_gradient};
use crate::quiver::rep::{random_prime_rep, random_rational_rep, FramedRep};
use crate::quiver::stability::{all_subspaces, is_stable_via_generation, verdict_over, Theta, Verdict};
use crate::series::TruncSeries;

/// Relative tolerance for the floating-point finite-difference gradient check.
pub const FINITE_DIFFERENCE_RTOL: f64 = 1e-5;
/// Step for central finite differences.
pub const FINITE_DIFFERENCE_STEP: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Truncation order for the series checks.
    pub order: usize,
    /// Order for the DT/PT roundtrip check.
    pub roundtrip_order: usize,
    pub seed: u64,
    /// Random n = 3 representations in the stability check.
    pub stability_samples: usize,
    /// Random rational representations in the critical-locus check.
    pub critical_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { order: 10, roundtrip_order: 20, seed: 0x5eed, stability_samples: 1000, critical_samples: 500 }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        })
    }
}

pub const SUITES: [&str; 10] = [
    "macmahon",
    "motivic",
    "signed-chi",
    "n-invariants",
    "dtpt-roundtrip",
    "locally-free",
    "stability",
    "critical-locus",
    "bps",
    "reciprocal",
];

/// Runs one named check, or every check for `"all"`.
pub fn run_suite(suite: &str, cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let selected: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Error::Invalid(format!("unknown suite {suite:?}; expected \"all\" or one of {SUITES:?}")));
    };
    selected
        .into_iter()
        .map(|name| {
            let idx = SUITES.iter().position(|s| *s == name).unwrap();
            let (id, name) = (idx as u8 + 1, SUITES[idx]);
            let start = Instant::now();
            let outcome = match name {
                "macmahon" => check_macmahon(cfg),
                "motivic" => check_motivic(cfg),
                "signed-chi" => check_signed_chi(cfg),
                "n-invariants" => check_n_invariants(cfg),
                "dtpt-roundtrip" => check_dtpt_roundtrip(cfg),
                "locally-free" => check_locally_free(cfg),
                "stability" => check_stability(cfg),
                "critical-locus" => check_critical_locus(cfg),
                "bps" => check_bps(cfg),
                "reciprocal" => check_reciprocal(cfg),
                _ => unreachable!(),
            };
            let elapsed = start.elapsed();
            let (passed, detail) = match outcome {
                Ok(Outcome { passed, detail, time_limit }) => match time_limit {
                    Some(limit) if elapsed > limit => {
                        (false, format!("{detail}; took {:.2?}, limit {:.0?}", elapsed, limit))
                    }
                    _ => (passed, detail),
                },
                Err(e) => (false, format!("error: {e}")),
            };
            Ok(CheckResult { id, name, passed, detail, elapsed })
        })
        .collect()
}

struct Outcome {
    passed: bool,
    detail: String,
    time_limit: Option<Duration>,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, detail: detail.into(), time_limit: None }
    }

    fn within(mut self, secs: u64) -> Self {
        self.time_limit = Some(Duration::from_secs(secs));
        self
    }
}

fn check_macmahon(cfg: &VerifyConfig) -> Result<Outcome> {
    let n = cfg.order.min(DEFAULT_ENUMERATION_BOUND);
    let product = macmahon_series(n);
    let counts = plane_partition_counts(n, DEFAULT_ENUMERATION_BOUND)?;
    let bad: Vec<usize> = (0..=n).filter(|&k| product.coeffs()[k] != counts[k]).collect();
    Ok(Outcome::new(bad.is_empty(), format!("product formula vs enumeration for n <= {n}; mismatches at {bad:?}")).within(5))
}

fn check_motivic(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut bad = Vec::new();
    for r in 1..=4usize {
        let specialized = motivic_quot_series(r, cfg.order)?.euler_specialize();
        let mut expected = TruncSeries::<BigInt>::one(cfg.order);
        let m = macmahon_series(cfg.order).substitute_sign(r % 2 == 1);
        for _ in 0..r {
            expected = expected.checked_mul(&m)?;
        }
        if specialized != expected {
            bad.push(r);
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("chi(Z_r) vs M((-1)^r t)^r at order {}, r = 1..4; failing r: {bad:?}", cfg.order)).within(5))
}

fn check_signed_chi(cfg: &VerifyConfig) -> Result<Outcome> {
    let max_n = cfg.order.min(8);
    let mut bad = Vec::new();
    for r in 1..=3 {
        for n in 0..=max_n {
            let (signed, virt) = signed_chi_check(r, n)?;
            if signed != virt {
                bad.push((r, n));
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("(-1)^(rn) #fixed points vs virtual chi, r <= 3, n <= {max_n}; failing: {bad:?}")))
}

const CHI_VALUES: [i64; 5] = [-6, -1, 0, 1, 4];

fn check_n_invariants(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut bad = Vec::new();
    for r in 1..=3 {
        for chi in CHI_VALUES {
            let (_, rebuilt) = macmahon::n_invariants_roundtrip(r, chi, cfg.order)?;
            if rebuilt != macmahon::wall_crossing_factor(r, chi, cfg.order)?.to_rational() {
                bad.push((r, chi));
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        format!("exp from N-invariants vs M((-1)^r q)^(r chi) at order {}; failing (r, chi): {bad:?}", cfg.order),
    ))
}

fn check_dtpt_roundtrip(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.roundtrip_order;
    let mut failures = 0;
    for _ in 0..100 {
        let s = TruncSeries::from_fn(n, |_| BigInt::from(rng.gen_range(-1000i64..=1000)));
        let flavor = if rng.gen_bool(0.5) { Flavor::Euler } else { Flavor::BehrendWeighted };
        let label = LocalSeriesLabel::new(rng.gen_range(1..=3), rng.gen_range(-6..=6), flavor)?;
        let dt = dt_pt_convert(&s, &label, Direction::PtToDt)?;
        if dt_pt_convert(&dt, &label, Direction::DtToPt)? != s {
            failures += 1;
        }
    }
    Ok(Outcome::new(failures == 0, format!("100 random series at order {n}: {failures} roundtrip failures")))
}

fn check_locally_free(cfg: &VerifyConfig) -> Result<Outcome> {
    let n = cfg.order.min(DEFAULT_ENUMERATION_BOUND);
    // M(q) assembled from enumeration counts rather than the product formula.
    let m = TruncSeries::new(plane_partition_counts(n, DEFAULT_ENUMERATION_BOUND)?);
    let mut bad = Vec::new();
    for r in 1..=3usize {
        let signed = m.substitute_sign(r % 2 == 1);
        let signed_inv = signed.inverse()?;
        for chi in -6i64..=6 {
            let k = r as i64 * chi;
            let base = if k < 0 { &signed_inv } else { &signed };
            let mut expected = TruncSeries::one(n);
            for _ in 0..k.unsigned_abs() {
                expected = expected.checked_mul(base)?;
            }
            let label = LocalSeriesLabel::new(r, chi, Flavor::BehrendWeighted)?;
            if dt_pt_convert(&TruncSeries::one(n), &label, Direction::PtToDt)? != expected {
                bad.push((r, chi));
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("PT = 1 gives DT = M((-1)^r q)^(r chi), r <= 3, |chi| <= 6, order {n}; failing: {bad:?}")))
}

/// Tally of criterion-vs-oracle comparisons.
#[derive(Clone, Debug, Default)]
pub struct StabilityTally {
    pub compared: u64,
    /// Representations accounted for, counting class multiplicities.
    pub represented: u128,
    pub stable: u64,
    pub discrepancies: u64,
}

impl StabilityTally {
    fn record(&mut self, oracle: Verdict, criterion: bool, weight: u128) {
        self.compared += 1;
        self.represented += weight;
        if oracle == Verdict::Stable {
            self.stable += 1;
        }
        if (oracle == Verdict::Stable) != criterion {
            self.discrepancies += 1;
        }
    }
}

fn framing_tuples(p: u64, n: usize, r: usize) -> Vec<Vec<Vec<u64>>> {
    let vectors: Vec<Vec<u64>> = (0..p.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let x = code % p;
                    code /= p;
                    x
                })
                .collect()
        })
        .collect();
    let mut tuples: Vec<Vec<Vec<u64>>> = vec![vec![]];
    for _ in 0..r {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                vectors.iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    tuples
}

fn all_matrices(p: u64, n: usize) -> Vec<Matrix<u64>> {
    (0..p.pow((n * n) as u32))
        .map(|mut code| {
            Matrix::from_fn(n, |_, _| {
                let x = code % p;
                code /= p;
                x
            })
        })
        .collect()
}

/// Every n = 1 representation over `F_p` with `r` framings, compared directly.
pub fn exhaustive_dim_one(f: PrimeField, r: usize, theta: &Theta, tally: &mut StabilityTally) -> Result<()> {
    let subspaces = all_subspaces(&f, 1);
    let mats = all_matrices(f.modulus(), 1);
    let tuples = framing_tuples(f.modulus(), 1, r);
    for a in &mats {
        for b in &mats {
            for c in &mats {
                for v in &tuples {
                    let rep = FramedRep::new(f, a.clone(), b.clone(), c.clone(), v.clone())?;
                    tally.record(verdict_over(&rep, theta, &subspaces), is_stable_via_generation(&rep, theta)?, 1);
                }
            }
        }
    }
    Ok(())
}

/// Every n = 2 representation over `F_p` with `r` framings.
///
/// Both the oracle and the generation criterion see the operators only
/// through which lines of `F_p^2` they jointly preserve (the zero space and
/// the whole space are always invariant). All `p^12` operator triples are
/// sorted into classes by that set of lines; one representative per class
/// is then run against every framing tuple, weighted by class size.
pub fn exhaustive_dim_two(f: PrimeField, r: usize, theta: &Theta, tally: &mut StabilityTally) -> Result<()> {
    let p = f.modulus();
    let subspaces = all_subspaces(&f, 2);
    let lines: Vec<&Subspace<u64>> = subspaces.iter().filter(|s| s.dim() == 1).collect();
    assert!(lines.len() <= 64, "line masks are stored in a u64");
    let mut single: BTreeMap<u64, (u128, Matrix<u64>)> = BTreeMap::new();
    for m in all_matrices(p, 2) {
        let mask = lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_invariant_under(&f, &m))
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        single.entry(mask).or_insert((0, m)).0 += 1;
    }
    // class of a triple = AND of the three single-operator masks
    let mut classes: BTreeMap<u64, (u128, [Matrix<u64>; 3])> = BTreeMap::new();
    for (ma, (ca, a)) in &single {
        for (mb, (cb, b)) in &single {
            for (mc, (cc, c)) in &single {
                let entry = classes
                    .entry(ma & mb & mc)
                    .or_insert_with(|| (0, [a.clone(), b.clone(), c.clone()]));
                entry.0 += ca * cb * cc;
            }
        }
    }
    let total: u128 = classes.values().map(|(c, _)| c).sum();
    assert_eq!(total, (p as u128).pow(12), "operator classes must partition all triples");
    let tuples = framing_tuples(p, 2, r);
    for (count, [a, b, c]) in classes.values() {
        for v in &tuples {
            let rep = FramedRep::new(f, a.clone(), b.clone(), c.clone(), v.clone())?;
            tally.record(verdict_over(&rep, theta, &subspaces), is_stable_via_generation(&rep, theta)?, *count);
        }
    }
    Ok(())
}

fn check_stability(cfg: &VerifyConfig) -> Result<Outcome> {
    let f = PrimeField::new(5)?;
    let theta = Theta::from_ints(1, 0);
    let mut tally = StabilityTally::default();
    for r in 1..=2 {
        exhaustive_dim_one(f, r, &theta, &mut tally)?;
        exhaustive_dim_two(f, r, &theta, &mut tally)?;
    }
    let exhaustive = tally.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let subspaces = all_subspaces(&f, 3);
    for i in 0..cfg.stability_samples {
        let r = 1 + i % 2;
        // alternate between generic and sparse draws so both verdicts occur
        let sparsity = [0.0, 0.5, 0.75, 0.9][i % 4];
        let rep = random_prime_rep(f, 3, r, sparsity, &mut rng);
        tally.record(verdict_over(&rep, &theta, &subspaces), is_stable_via_generation(&rep, &theta)?, 1);
    }
    let random_stable = tally.stable - exhaustive.stable;
    Ok(Outcome::new(
        tally.discrepancies == 0,
        format!(
            "F_5, theta = (1,0): exhaustive n <= 2, r <= 2 ({} comparisons covering {} reps), {} random n = 3 ({} stable); {} discrepancies",
            exhaustive.compared, exhaustive.represented, cfg.stability_samples, random_stable, tally.discrepancies
        ),
    )
    .within(60))
}

/// Matrix entry `(operator index, row, column)`, operators ordered A, B, C.
pub type Entry = (usize, usize, usize);

/// `f = sum_{i,j,k} A_ij B_jk C_ki - A_ij C_jk B_ki` expanded into
/// monomials, each a signed product of three matrix entries.
pub fn potential_monomials(n: usize) -> Vec<(i64, [Entry; 3])> {
    let mut out = Vec::with_capacity(2 * n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push((1, [(0, i, j), (1, j, k), (2, k, i)]));
                out.push((-1, [(0, i, j), (2, j, k), (1, k, i)]));
            }
        }
    }
    out
}

/// `df / dX_pq` by differentiating the monomial expansion term by term.
pub fn symbolic_partial<F: Field>(rep: &FramedRep<F>, var: Entry) -> F::Elem {
    let f = rep.field();
    let ops = rep.operators();
    let mut acc = f.zero();
    for (sign, factors) in potential_monomials(rep.n()) {
        for (pos, &factor) in factors.iter().enumerate() {
            if factor != var {
                continue;
            }
            let mut term = f.from_i64(sign);
            for (other, &(op, i, j)) in factors.iter().enumerate() {
                if other != pos {
                    term = f.mul(&term, ops[op].get(i, j));
                }
            }
            acc = f.add(&acc, &term);
        }
    }
    acc
}

fn to_f64_matrix(m: &Matrix<BigRational>) -> Vec<Vec<f64>> {
    m.rows().iter().map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()).collect()
}

/// Central difference of `f` in one entry, in floating point. The two
/// evaluations are subtracted term by term, so the monomials that do not
/// contain the entry cancel exactly. Returns the difference quotient and
/// the magnitude `sum |term|` of the partial derivative's terms.
fn central_difference(mats: &[Vec<Vec<f64>>; 3], var: Entry, h: f64) -> (f64, f64) {
    let n = mats[0].len();
    let (mut diff, mut scale) = (0.0f64, 0.0f64);
    for (sign, factors) in potential_monomials(n) {
        if !factors.contains(&var) {
            continue;
        }
        let eval = |shift: f64| {
            factors.iter().fold(sign as f64, |acc, &(op, i, j)| {
                let x = mats[op][i][j] + if (op, i, j) == var { shift } else { 0.0 };
                acc * x
            })
        };
        diff += eval(h) - eval(-h);
        let others: f64 = factors.iter().filter(|&&f| f != var).map(|&(op, i, j)| mats[op][i][j].abs()).product();
        scale += others;
    }
    (diff / (2.0 * h), scale)
}

/// Largest gap `|fd - g| / max(|g|, S, 1e-300)` between central finite
/// differences and the analytic gradient, where `S` is the sum of the
/// absolute values of the terms making up that partial derivative (the
/// natural scale when the terms cancel).
pub fn finite_difference_gap(rep: &FramedRep<Rationals>) -> f64 {
    let grad = potential_gradient(rep);
    let base = rep.operators().map(to_f64_matrix);
    let mut worst: f64 = 0.0;
    for (op, g) in grad.parts().into_iter().enumerate() {
        for i in 0..rep.n() {
            for j in 0..rep.n() {
                let (fd, scale) = central_difference(&base, (op, i, j), FINITE_DIFFERENCE_STEP);
                let exact = g.get(i, j).to_f64().unwrap_or(f64::NAN);
                worst = worst.max((fd - exact).abs() / exact.abs().max(scale).max(1e-300));
            }
        }
    }
    worst
}

fn check_critical_locus(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xc0ffee);
    let (mut equivalence_failures, mut symbolic_failures, mut critical) = (0, 0, 0);
    let mut worst_gap: f64 = 0.0;
    for _ in 0..cfg.critical_samples {
        let n = rng.gen_range(1..=4);
        let rep = random_rational_rep(n, 1, 9, 4, 0.3, &mut rng);
        let check = critical_check(&rep);
        if check.gradient_vanishes != check.commutators_vanish {
            equivalence_failures += 1;
        }
        if check.gradient_vanishes {
            critical += 1;
        }
        let grad = potential_gradient(&rep);
        for (op, g) in grad.parts().into_iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if symbolic_partial(&rep, (op, i, j)) != *g.get(i, j) {
                        symbolic_failures += 1;
                    }
                }
            }
        }
        worst_gap = worst_gap.max(finite_difference_gap(&rep));
    }
    let passed = equivalence_failures == 0 && symbolic_failures == 0 && worst_gap <= FINITE_DIFFERENCE_RTOL;
    Ok(Outcome::new(
        passed,
        format!(
            "{} random rational reps n <= 4 ({critical} critical): {equivalence_failures} gradient/commutator disagreements, {symbolic_failures} symbolic mismatches, worst finite-difference gap {worst_gap:.2e} (tol {FINITE_DIFFERENCE_RTOL:.0e})",
            cfg.critical_samples
        ),
    ))
}

fn check_bps(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xb95);
    let (mut roundtrip_failures, mut detection_failures) = (0, 0);
    for _ in 0..200 {
        let g = rng.gen_range(0..=6usize);
        let values = (0..=g)
            .map(|_| BigRational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=7).into()))
            .collect();
        let v = BpsVector::new(g, values)?;
        let lo = 1 - g as i64;
        let hi = lo + 2 * g as i64 + 3 + rng.gen_range(0..6);
        let z = bps_to_pt(&v, lo, hi)?;
        let ex = extract_bps(&z, g)?;
        if ex.bps != v || !ex.residual_zero() {
            roundtrip_failures += 1;
        }
        // a bump above q^1 leaves the BPS numbers and must show up as residual
        let at = rng.gen_range(2..=hi);
        let mut coeffs = z.coeffs().to_vec();
        coeffs[(at - lo) as usize] += BigRational::new(rng.gen_range(1i64..=9).into(), rng.gen_range(1i64..=3).into());
        let bumped = extract_bps(&crate::series::LaurentSeries::new(lo, coeffs), g)?;
        if bumped.bps != v || bumped.residual_zero() {
            detection_failures += 1;
        }
    }
    Ok(Outcome::new(
        roundtrip_failures == 0 && detection_failures == 0,
        format!("200 random BPS vectors g <= 6: {roundtrip_failures} roundtrip failures, {detection_failures} missed non-rational inputs"),
    ))
}

fn check_reciprocal(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9a1);
    let mut failures = 0;
    for _ in 0..1000 {
        let len = rng.gen_range(1..=12);
        let p: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect();
        let deg = p.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        let d = deg + rng.gen_range(0..3);
        let rec = reciprocal_polynomial(&p, d)?;
        let back = reciprocal_polynomial(&rec, d)?;
        let mut padded = p.clone();
        padded.resize(d + 1, BigInt::zero());
        padded.truncate(d + 1);
        if back != padded {
            failures += 1;
        }
        // P + P* is symmetric on the window 0..=d; once the common power of
        // q is divided out it is a palindrome at its own degree.
        let sym: Vec<BigInt> = padded.iter().zip(&rec).map(|(a, b)| a + b).collect();
        let low = sym.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if !palindrome_check(&sym[low..]) {
            failures += 1;
        }
        let direct = {
            let trimmed: Vec<&BigInt> = p[..=deg].iter().collect();
            trimmed.iter().eq(trimmed.iter().rev())
        };
        if palindrome_check(&p) != direct {
            failures += 1;
        }
    }
    Ok(Outcome::new(failures == 0, format!("1000 random polynomials: {failures} failures")))
}

/// `{"passed": bool, "checks": [...]}`.
pub fn report_json(results: &[CheckResult]) -> Value {
    json!({
        "passed": results.iter().all(|r| r.passed),
        "checks": results.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
    })
}
