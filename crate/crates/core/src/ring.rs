//! Coefficient rings for the series code.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`. The one
//! ring built here is [`HalfLaurent`], integer Laurent polynomials in the
//! square root of the Lefschetz motive.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring usable as a series coefficient.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse when `self` is a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Coeff for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Integer Laurent polynomial in `L^{1/2}`.
///
/// Keys are doubled exponents: the term `c * L^{e/2}` is stored as `e -> c`.
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfLaurent {
    /// `coeff * L^{twice_exp/2}`.
    pub fn monomial(twice_exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::default();
        out.add_term(twice_exp, coeff.into());
        out
    }

    /// Builds from `(twice_exp, coeff)` pairs, merging repeated keys.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::default();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, twice_exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(twice_exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&twice_exp);
        }
    }

    /// Coefficient of `L^{twice_exp/2}`.
    pub fn coeff(&self, twice_exp: i64) -> BigInt {
        self.terms.get(&twice_exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_twice_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_twice_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Euler characteristic specialization `L^{1/2} -> -1`.
    pub fn euler_specialize(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Evaluation at `L^{1/2} = 1`, i.e. the sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Zero for HalfLaurent {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for HalfLaurent {
    fn one() -> Self {
        Self::monomial(0, 1)
    }
}

impl Add for HalfLaurent {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for HalfLaurent {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for HalfLaurent {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for HalfLaurent {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Coeff for HalfLaurent {
    /// Units are exactly `±L^{k/2}`.
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(Self::monomial(-e, c.clone()))
        } else {
            None
        }
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let power = match (e, e.rem_euclid(2)) {
                (0, _) => String::new(),
                (2, _) => "L".to_string(),
                (_, 0) => format!("L^{}", e / 2),
                _ => format!("L^({e}/2)"),
            };
            match (mag.is_one(), power.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{power}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{power}")?,
            }
        }
        Ok(())
    }
}
