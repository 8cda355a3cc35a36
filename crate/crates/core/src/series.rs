//! Truncated formal power series and Laurent series with exact coefficients.
//!
//! A [`TruncSeries`] of order `N` stores the coefficients of `q^0..=q^N`.
//! Binary operations require equal orders; use [`TruncSeries::retruncate`]
//! to lower one side explicitly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::Coeff;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncSeries<C> {
    /// Series with the given coefficients; order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector, since a series always knows `q^0`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least the constant term");
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| C::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, C::one())
    }

    /// `c * q^k` at the given order (zero if `k > order`).
    pub fn monomial(order: usize, k: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `q^n`; `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn constant(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> TruncSeries<D> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Drop every coefficient above `order`.
    pub fn retruncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::RetruncateUp { have: self.order(), want: order });
        }
        Ok(Self { coeffs: self.coeffs[..=order].to_vec() })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = std::mem::replace(&mut out[i + j], C::zero()) + a.clone() * b.clone();
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let u = self.constant().unit_inverse().ok_or(Error::NonUnitConstant)?;
        let n = self.order();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(u.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = acc + a.clone() * b[k - i].clone();
                }
            }
            b.push(-(u.clone() * acc));
        }
        Ok(Self { coeffs: b })
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// [`Self::inverse`].
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul_unchecked(&square);
            }
        }
        Ok(result)
    }

    /// `q -> s q` for `s = ±1`: the coefficient of `q^n` picks up `s^n`.
    pub fn substitute_sign(&self, negate: bool) -> Self {
        if !negate {
            return self.clone();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| if n % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        }
    }

    /// Substitution `q -> s q` with `s` given as `+1` or `-1`.
    pub fn substitute_sign_by(&self, s: i32) -> Result<Self> {
        match s {
            1 => Ok(self.clone()),
            -1 => Ok(self.substitute_sign(true)),
            _ => Err(Error::Invalid(format!("sign must be +1 or -1, got {s}"))),
        }
    }
}

impl TruncSeries<BigInt> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> TruncSeries<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl TruncSeries<BigRational> {
    /// Exponential of a series with zero constant term, via
    /// `n f_n = sum_{k=1}^n k a_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::ConstantTerm { op: "exp", expected: "0" });
        }
        let n = self.order();
        let mut f: Vec<BigRational> = Vec::with_capacity(n + 1);
        f.push(BigRational::one());
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * BigRational::from_integer(k.into()) * &f[m - k];
                }
            }
            f.push(acc / BigRational::from_integer(m.into()));
        }
        Ok(Self { coeffs: f })
    }

    /// Logarithm of a series with constant term 1, via
    /// `n a_n = n f_n - sum_{k=1}^{n-1} k a_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(Error::ConstantTerm { op: "log", expected: "1" });
        }
        let n = self.order();
        let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
        a.push(BigRational::zero());
        for m in 1..=n {
            let mf = BigRational::from_integer(m.into());
            let mut acc = &mf * &self.coeffs[m];
            for k in 1..m {
                if !a[k].is_zero() {
                    acc -= &a[k] * BigRational::from_integer(k.into()) * &self.coeffs[m - k];
                }
            }
            a.push(acc / mf);
        }
        Ok(Self { coeffs: a })
    }

    /// Integer series when every coefficient has denominator 1.
    pub fn to_integer(&self) -> Option<TruncSeries<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(TruncSeries::new)
    }
}

/// Laurent series known on the exponent window `offset..=order`.
///
/// `coeffs[0]` is the coefficient of `q^offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries<C> {
    offset: i64,
    coeffs: Vec<C>,
}

impl<C: Coeff> LaurentSeries<C> {
    pub fn new(offset: i64, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a Laurent window must hold at least one exponent");
        Self { offset, coeffs }
    }

    pub fn zero(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty exponent window {lo}..={hi}");
        Self { offset: lo, coeffs: vec![C::zero(); (hi - lo + 1) as usize] }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Highest exponent in the window.
    pub fn order(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `q^e`: zero below the offset, `None` above the order.
    pub fn coeff(&self, e: i64) -> Option<C> {
        if e > self.order() {
            None
        } else if e < self.offset {
            Some(C::zero())
        } else {
            Some(self.coeffs[(e - self.offset) as usize].clone())
        }
    }

    pub(crate) fn coeff_mut(&mut self, e: i64) -> &mut C {
        &mut self.coeffs[(e - self.offset) as usize]
    }

    /// Same series on a different window; exponents below the current
    /// offset are zero, exponents above the current order are rejected.
    pub fn rewindow(&self, lo: i64, hi: i64) -> Result<Self> {
        if hi > self.order() || lo > hi {
            return Err(Error::Invalid(format!(
                "window {lo}..={hi} not available from {}..={}",
                self.offset,
                self.order()
            )));
        }
        Ok(Self {
            offset: lo,
            coeffs: (lo..=hi).map(|e| self.coeff(e).unwrap_or_else(C::zero)).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Difference on a shared window; both series must have the same
    /// order and the result starts at the smaller offset.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::Invalid(format!(
                "Laurent windows end at different exponents ({} vs {})",
                self.order(),
                other.order()
            )));
        }
        let lo = self.offset.min(other.offset);
        let hi = self.order();
        Ok(Self {
            offset: lo,
            coeffs: (lo..=hi)
                .map(|e| self.coeff(e).unwrap_or_else(C::zero) - other.coeff(e).unwrap_or_else(C::zero))
                .collect(),
        })
    }

    /// Exponents carrying nonzero coefficients.
    pub fn support(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| self.offset + i as i64)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::HalfLaurent;
    use proptest::prelude::*;

    fn ints(c: &[i64]) -> TruncSeries<BigInt> {
        TruncSeries::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        let a = ints(&[1, 1, 0]);
        let b = ints(&[1, -1, 0]);
        assert_eq!(a.checked_mul(&b).unwrap(), ints(&[1, 0, -1]));
        assert_eq!(ints(&[1, 1, 1]).checked_add(&ints(&[1, -1, 0])).unwrap(), ints(&[2, 0, 1]));
    }

    #[test]
    fn order_mismatch_rejected() {
        let err = ints(&[1, 1]).checked_mul(&ints(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 1, right: 2 });
        assert!(ints(&[1]).checked_add(&ints(&[1, 2])).is_err());
    }

    #[test]
    fn retruncate() {
        let a = ints(&[1, 2, 3, 4]);
        assert_eq!(a.retruncate(1).unwrap(), ints(&[1, 2]));
        assert!(a.retruncate(4).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ints(&[1, -1, 0, 0]).inverse().unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(ints(&[1, 1, 0, 0]).inverse().unwrap(), ints(&[1, -1, 1, -1]));
        assert_eq!(ints(&[-1, 1]).inverse().unwrap(), ints(&[-1, -1]));
        assert_eq!(ints(&[2, 1]).inverse().unwrap_err(), Error::NonUnitConstant);
    }

    #[test]
    fn inverse_half_laurent_geometric() {
        // 1 - L^{3/2} t
        let s = TruncSeries::new(vec![HalfLaurent::one(), -HalfLaurent::monomial(3, 1), HalfLaurent::zero()]);
        let inv = s.inverse().unwrap();
        assert_eq!(
            inv.coeffs(),
            &[HalfLaurent::one(), HalfLaurent::monomial(3, 1), HalfLaurent::monomial(6, 1)]
        );
    }

    #[test]
    fn pow_examples() {
        assert_eq!(ints(&[1, 1, 0]).pow(2).unwrap(), ints(&[1, 2, 1]));
        assert_eq!(ints(&[1, -1, 0, 0]).pow(-2).unwrap(), ints(&[1, 2, 3, 4]));
        assert_eq!(ints(&[3, 1, 4]).pow(0).unwrap(), ints(&[1, 0, 0]));
        assert_eq!(ints(&[2, 1]).pow(-1).unwrap_err(), Error::NonUnitConstant);
        // positive powers need no unit
        assert_eq!(ints(&[2, 1]).pow(3).unwrap(), ints(&[8, 12]));
    }

    #[test]
    fn exp_log_examples() {
        let q = TruncSeries::new(vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(q.exp().unwrap().coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]);
        let one_plus_q = TruncSeries::new(vec![rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(one_plus_q.log().unwrap().coeffs(), &[rat(0, 1), rat(1, 1), rat(-1, 2), rat(1, 3)]);
        assert!(one_plus_q.exp().is_err());
        assert!(q.log().is_err());
    }

    #[test]
    fn substitute_sign_examples() {
        let a = ints(&[1, 2, 3, 4]);
        assert_eq!(a.substitute_sign(true), ints(&[1, -2, 3, -4]));
        assert_eq!(a.substitute_sign_by(1).unwrap(), a);
        assert_eq!(a.substitute_sign(true).substitute_sign(true), a);
        assert!(a.substitute_sign_by(2).is_err());
    }

    #[test]
    fn laurent_window() {
        let z = LaurentSeries::new(-1, vec![rat(1, 1), rat(2, 1), rat(1, 1)]);
        assert_eq!(z.order(), 1);
        assert_eq!(z.coeff(-3), Some(rat(0, 1)));
        assert_eq!(z.coeff(0), Some(rat(2, 1)));
        assert_eq!(z.coeff(2), None);
        let w = z.rewindow(-2, 0).unwrap();
        assert_eq!(w.coeffs(), &[rat(0, 1), rat(1, 1), rat(2, 1)]);
        assert_eq!(z.support(), vec![-1, 0, 1]);
    }

    fn unit_series(max_order: usize) -> impl Strategy<Value = TruncSeries<BigInt>> {
        (prop::bool::ANY, prop::collection::vec(-9i64..10, 0..=max_order)).prop_map(|(neg, tail)| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(tail);
            TruncSeries::from_i64s(&c)
        })
    }

    proptest! {
        #[test]
        fn inverse_is_exact(a in unit_series(15)) {
            let prod = a.checked_mul(&a.inverse().unwrap()).unwrap();
            prop_assert_eq!(prod, TruncSeries::one(a.order()));
        }

        #[test]
        fn pow_laws(a in unit_series(12), j in -5i64..=5, k in -5i64..=5) {
            let pj = a.pow(j).unwrap();
            let pk = a.pow(k).unwrap();
            prop_assert_eq!(pj.checked_mul(&pk).unwrap(), a.pow(j + k).unwrap());
            prop_assert_eq!(pk.checked_mul(&a.pow(-k).unwrap()).unwrap(), TruncSeries::one(a.order()));
        }

        #[test]
        fn exp_log_inverse(tail in prop::collection::vec((-6i64..7, 1i64..5), 1..10)) {
            let mut c = vec![BigRational::zero()];
            c.extend(tail.iter().map(|&(n, d)| rat(n, d)));
            let a = TruncSeries::new(c);
            let e = a.exp().unwrap();
            prop_assert_eq!(e.log().unwrap(), a.clone());
            let mut f = a.clone().into_coeffs();
            f[0] = BigRational::one();
            let f = TruncSeries::new(f);
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
        }

        #[test]
        fn sign_substitution_is_ring_automorphism(a in unit_series(10), b in unit_series(10)) {
            let n = a.order().min(b.order());
            let a = a.retruncate(n).unwrap();
            let b = b.retruncate(n).unwrap();
            let lhs = a.checked_mul(&b).unwrap().substitute_sign(true);
            let rhs = a.substitute_sign(true).checked_mul(&b.substitute_sign(true)).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = a.checked_add(&b).unwrap().substitute_sign(true);
            let rhs = a.substitute_sign(true).checked_add(&b.substitute_sign(true)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
