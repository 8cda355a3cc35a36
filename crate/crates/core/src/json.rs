//! JSON encodings.
//!
//! Big integers and rationals travel as decimal strings (`"-7"`, `"3/4"`),
//! truncated series as `{"order": N, "coeffs": [...]}` and half-Laurent
//! polynomials as `{"terms": {"<twice_exp>": "<coeff>"}}`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ring::{Coeff, HalfLaurent};
use crate::series::{LaurentSeries, TruncSeries};

pub trait JsonCoeff: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

/// Decimal strings are canonical; plain JSON integers are accepted on input.
fn scalar_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.trim().to_string()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(Error::Parse(format!("expected a decimal string, got {other}"))),
    }
}

pub fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_bigint(s)?)),
        Some((n, d)) => {
            let d = parse_bigint(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_bigint(n)?, d))
        }
    }
}

impl JsonCoeff for BigInt {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse_bigint(&scalar_text(v)?)
    }
}

impl JsonCoeff for BigRational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse_rational(&scalar_text(v)?)
    }
}

impl JsonCoeff for HalfLaurent {
    fn to_json(&self) -> Value {
        let terms: Map<String, Value> = self.terms().map(|(e, c)| (e.to_string(), c.to_json())).collect();
        json!({ "terms": terms })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let terms = v
            .get("terms")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("half-Laurent object needs a \"terms\" map".into()))?;
        let mut out = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            let e: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("bad exponent key {k:?}")))?;
            out.push((e, BigInt::from_json(c)?));
        }
        Ok(HalfLaurent::from_terms(out))
    }
}

fn coeff_array<C: JsonCoeff>(v: &Value) -> Result<Vec<C>> {
    v.get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"coeffs\" array".into()))?
        .iter()
        .map(C::from_json)
        .collect()
}

impl<C: Coeff + JsonCoeff> TruncSeries<C> {
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs().iter().map(JsonCoeff::to_json).collect::<Vec<_>>(),
        })
    }

    /// Accepts `{"coeffs": [...]}` with an optional `"order"` that must
    /// match the coefficient count.
    pub fn from_json(v: &Value) -> Result<Self> {
        let coeffs: Vec<C> = coeff_array(v)?;
        if coeffs.is_empty() {
            return Err(Error::Parse("series needs at least one coefficient".into()));
        }
        if let Some(order) = v.get("order") {
            let order = order.as_u64().ok_or_else(|| Error::Parse("\"order\" must be a nonnegative integer".into()))?;
            if order as usize + 1 != coeffs.len() {
                return Err(Error::Parse(format!(
                    "\"order\" is {order} but {} coefficients were given",
                    coeffs.len()
                )));
            }
        }
        Ok(TruncSeries::new(coeffs))
    }
}

impl<C: Coeff + JsonCoeff> LaurentSeries<C> {
    pub fn to_json(&self) -> Value {
        json!({
            "offset": self.offset(),
            "coeffs": self.coeffs().iter().map(JsonCoeff::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let offset = v
            .get("offset")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Parse("missing integer \"offset\"".into()))?;
        let coeffs: Vec<C> = coeff_array(v)?;
        if coeffs.is_empty() {
            return Err(Error::Parse("Laurent series needs at least one coefficient".into()));
        }
        Ok(LaurentSeries::new(offset, coeffs))
    }
}

/// JSON array of decimal strings.
pub fn decimal_array<C: JsonCoeff>(xs: &[C]) -> Value {
    Value::Array(xs.iter().map(JsonCoeff::to_json).collect())
}
