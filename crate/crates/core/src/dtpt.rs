//! DT/PT series conversion for a fixed local sheaf, and the polynomial
//! checks used on PT series of reflexive sheaves.
//!
//! The Behrend-weighted series satisfy `DT = M((-1)^r q)^{r chi} * PT`; the
//! unweighted (Euler characteristic) series satisfy `DT = M(q)^{r chi} * PT`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::macmahon::{macmahon_series, wall_crossing_factor};
use crate::series::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    BehrendWeighted,
    Euler,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "behrend" | "behrend-weighted" | "virtual" => Ok(Flavor::BehrendWeighted),
            "euler" | "naive" => Ok(Flavor::Euler),
            other => Err(Error::Invalid(format!("unknown flavor {other:?} (expected behrend or euler)"))),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::BehrendWeighted => "behrend",
            Flavor::Euler => "euler",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    DtToPt,
    PtToDt,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dt2pt" | "dt->pt" | "dt-to-pt" => Ok(Direction::DtToPt),
            "pt2dt" | "pt->dt" | "pt-to-dt" => Ok(Direction::PtToDt),
            other => Err(Error::Invalid(format!("unknown direction {other:?} (expected dt2pt or pt2dt)"))),
        }
    }
}

/// Parameters of a local DT/PT series. `sheaf_tag` is opaque metadata
/// (divisor, curve class, ...) and never affects a conversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSeriesLabel {
    pub rank: usize,
    pub chi_x: i64,
    pub flavor: Flavor,
    pub sheaf_tag: String,
}

impl LocalSeriesLabel {
    pub fn new(rank: usize, chi_x: i64, flavor: Flavor) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("rank r must be >= 1".into()));
        }
        Ok(Self { rank, chi_x, flavor, sheaf_tag: String::new() })
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.sheaf_tag = tag.into();
        self
    }
}

/// The series `DT / PT` at the given order.
pub fn conversion_factor(rank: usize, chi_x: i64, flavor: Flavor, order: usize) -> Result<TruncSeries<BigInt>> {
    match flavor {
        Flavor::BehrendWeighted => wall_crossing_factor(rank, chi_x, order),
        Flavor::Euler => {
            if rank == 0 {
                return Err(Error::Invalid("rank r must be >= 1".into()));
            }
            macmahon_series(order).pow(rank as i64 * chi_x)
        }
    }
}

pub fn dt_pt_convert(series: &TruncSeries<BigInt>, label: &LocalSeriesLabel, dir: Direction) -> Result<TruncSeries<BigInt>> {
    let factor = conversion_factor(label.rank, label.chi_x, label.flavor, series.order())?;
    match dir {
        Direction::PtToDt => series.checked_mul(&factor),
        Direction::DtToPt => series.checked_mul(&factor.inverse()?),
    }
}

fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// `q^d P(1/q)` as a coefficient list of length `d + 1`.
pub fn reciprocal_polynomial(p: &[BigInt], d: usize) -> Result<Vec<BigInt>> {
    if let Some(deg) = degree(p) {
        if deg > d {
            return Err(Error::Invalid(format!("window degree {d} is below the polynomial degree {deg}")));
        }
    }
    Ok((0..=d).rev().map(|i| p.get(i).cloned().unwrap_or_default()).collect())
}

/// Whether `P` equals its reciprocal taken at its own degree.
pub fn palindrome_check(p: &[BigInt]) -> bool {
    match degree(p) {
        None => true,
        Some(d) => (0..=d).all(|i| p[i] == p[d - i]),
    }
}

/// Whether `P` has degree exactly `ell`, i.e. a nonzero coefficient at
/// `q^ell` and nothing above it.
pub fn reflexive_degree_check(p: &[BigInt], ell: usize) -> bool {
    degree(p) == Some(ell)
}
