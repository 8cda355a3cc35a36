//! Virtual motives of Quot schemes of points on affine 3-space.
//!
//! The generating series is the product
//!
//! ```text
//! Z_r(t) = prod_{m>=1} prod_{k=0}^{rm-1} (1 - L^{2+k-rm/2} t^m)^{-1}
//! ```
//!
//! with coefficients in `Z[L^{±1/2}]`. Sending `L^{1/2} -> -1` recovers the
//! virtual Euler characteristics `M((-1)^r t)^r`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::macmahon::{self, DEFAULT_ENUMERATION_BOUND};
use crate::ring::HalfLaurent;
use crate::series::TruncSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotivicSeries {
    inner: TruncSeries<HalfLaurent>,
    rank: usize,
}

impl MotivicSeries {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn series(&self) -> &TruncSeries<HalfLaurent> {
        &self.inner
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    /// Class of the degree-n Quot scheme.
    pub fn coeff(&self, n: usize) -> Option<&HalfLaurent> {
        self.inner.coeff(n)
    }

    pub fn euler_specialize(&self) -> TruncSeries<BigInt> {
        self.inner.map(HalfLaurent::euler_specialize)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.inner.to_json();
        v["rank"] = json!(self.rank);
        v
    }
}

/// Doubled Lefschetz exponent of the factor indexed by `(m, k)`:
/// `2 * (2 + k - r m / 2) = 4 + 2k - r m`.
pub fn factor_twice_exp(r: usize, m: usize, k: usize) -> i64 {
    4 + 2 * k as i64 - (r * m) as i64
}

/// `Z_r(t)` truncated at `order`.
///
/// Factors with `m > order` cannot contribute. Division by each
/// `1 - x t^m` is done in place through `g_n = f_n + x g_{n-m}`.
pub fn motivic_quot_series(r: usize, order: usize) -> Result<MotivicSeries> {
    if r == 0 {
        return Err(Error::Invalid("rank r must be >= 1".into()));
    }
    let mut c = vec![HalfLaurent::zero(); order + 1];
    c[0] = HalfLaurent::one();
    for m in 1..=order {
        for k in 0..r * m {
            let x = HalfLaurent::monomial(factor_twice_exp(r, m, k), 1);
            for n in m..=order {
                if c[n - m].is_zero() {
                    continue;
                }
                let add = x.clone() * c[n - m].clone();
                c[n] = std::mem::take(&mut c[n]) + add;
            }
        }
    }
    Ok(MotivicSeries { inner: TruncSeries::new(c), rank: r })
}

/// `sum_n chi~(Quot(O^r, n)) t^n`, the Euler specialization of `Z_r(t)`.
pub fn virtual_chi_series(r: usize, order: usize) -> Result<TruncSeries<BigInt>> {
    Ok(motivic_quot_series(r, order)?.euler_specialize())
}

/// `((-1)^{rn} * #fixed points, [t^n] virtual chi series)`; both entries
/// agree when the Behrend-weighted count is the signed fixed-point count.
pub fn signed_chi_check(r: usize, n: usize) -> Result<(BigInt, BigInt)> {
    signed_chi_check_bounded(r, n, DEFAULT_ENUMERATION_BOUND)
}

pub fn signed_chi_check_bounded(r: usize, n: usize, bound: usize) -> Result<(BigInt, BigInt)> {
    let count = macmahon::colored_count_bounded(r, n, bound)?;
    let signed = if (r * n) % 2 == 1 { -count } else { count };
    let virt = virtual_chi_series(r, n)?.coeffs()[n].clone();
    Ok((signed, virt))
}
