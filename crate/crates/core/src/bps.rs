//! BPS numbers of a stable-pair series in the basis
//! `q^{1-i} (1+q)^{2i-2}`, `i = 0..=g`.
//!
//! A series `Z(q) = sum_{n>=0} P_n q^{1-g+n}` is the expansion of a rational
//! function of this shape exactly when, after the `g + 1` BPS numbers are
//! read off from its lowest coefficients, nothing is left over.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::JsonCoeff;
use crate::series::LaurentSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpsVector {
    genus: usize,
    values: Vec<BigRational>,
}

impl BpsVector {
    /// `values[i]` is `n_i`; there must be exactly `genus + 1` of them.
    pub fn new(genus: usize, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != genus + 1 {
            return Err(Error::Invalid(format!(
                "genus {genus} needs {} BPS numbers, got {}",
                genus + 1,
                values.len()
            )));
        }
        Ok(Self { genus, values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("at least n_0 is required".into()));
        }
        Self::new(values.len() - 1, values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(BigRational::is_integer)
    }
}

/// Generalized binomial coefficient `binom(e, j)` for any integer `e`.
fn binomial(e: i64, j: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..j as i64 {
        acc = acc * BigRational::from_integer((e - i).into()) / BigRational::from_integer((i + 1).into());
    }
    acc
}

/// `q^{1-i} (1+q)^{2i-2}` on the exponent window `lo..=hi`.
///
/// For `i >= 1` this is a Laurent polynomial; for `i = 0` it is the infinite
/// expansion of `q / (1+q)^2`, cut at `hi`.
pub fn bps_basis_element(i: usize, genus: usize, lo: i64, hi: i64) -> Result<LaurentSeries<BigRational>> {
    if i > genus {
        return Err(Error::Invalid(format!("basis index {i} exceeds genus {genus}")));
    }
    let lead = 1 - i as i64;
    if lo > lead || hi < lo {
        return Err(Error::Invalid(format!("window {lo}..={hi} must start at or below {lead}")));
    }
    let power = 2 * i as i64 - 2;
    let mut out = LaurentSeries::zero(lo, hi);
    for e in lead..=hi {
        *out.coeff_mut(e) = binomial(power, (e - lead) as usize);
    }
    Ok(out)
}

/// `sum_i n_i q^{1-i} (1+q)^{2i-2}` on `lo..=hi`.
pub fn bps_to_pt(v: &BpsVector, lo: i64, hi: i64) -> Result<LaurentSeries<BigRational>> {
    let g = v.genus();
    if lo > 1 - g as i64 || hi < lo {
        return Err(Error::Invalid(format!("window {lo}..={hi} must start at or below {}", 1 - g as i64)));
    }
    let mut out = LaurentSeries::zero(lo, hi);
    for (i, n) in v.values().iter().enumerate() {
        if n.is_zero() {
            continue;
        }
        let basis = bps_basis_element(i, g, lo, hi)?;
        for e in lo..=hi {
            let c = basis.coeff(e).expect("inside window");
            *out.coeff_mut(e) += n * c;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpsExtraction {
    pub bps: BpsVector,
    /// `Z - bps_to_pt(bps)` on `1-g ..= order(Z)`.
    pub residual: LaurentSeries<BigRational>,
}

impl BpsExtraction {
    pub fn residual_zero(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bps": self.bps.values().iter().map(JsonCoeff::to_json).collect::<Vec<_>>(),
            "residual_zero": self.residual_zero(),
            "integral": self.bps.is_integral(),
        })
    }
}

/// Solves for `n_g, n_{g-1}, ..., n_0` top-down.
///
/// The basis element for index `i` starts at `q^{1-i}` with coefficient 1,
/// so the coefficient of `q^{1-i}` left after removing the higher indices
/// is `n_i`. Needs exponents `1-g ..= 1`; everything above is used for the
/// residual.
pub fn extract_bps(z: &LaurentSeries<BigRational>, genus: usize) -> Result<BpsExtraction> {
    let lo = 1 - genus as i64;
    if z.offset() < lo {
        return Err(Error::Invalid(format!(
            "series starts at q^{} but genus {genus} series start at q^{lo} or later",
            z.offset()
        )));
    }
    if z.order() < 1 {
        return Err(Error::WindowTooShort { need_lo: lo, need_hi: 1, have_lo: z.offset(), have_hi: z.order() });
    }
    let hi = z.order();
    let mut rest = z.rewindow(lo, hi)?;
    let mut values = vec![BigRational::zero(); genus + 1];
    for i in (0..=genus).rev() {
        let e = 1 - i as i64;
        let n = rest.coeff(e).expect("inside window");
        if !n.is_zero() {
            let basis = bps_basis_element(i, genus, lo, hi)?;
            for k in e..=hi {
                let c = basis.coeff(k).expect("inside window");
                *rest.coeff_mut(k) -= &n * c;
            }
        }
        values[i] = n;
    }
    Ok(BpsExtraction { bps: BpsVector::new(genus, values)?, residual: rest })
}

/// Convenience for integer input.
pub fn integer_laurent(offset: i64, coeffs: &[i64]) -> LaurentSeries<BigRational> {
    LaurentSeries::new(offset, coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
}
