//! Slope stability for framed representations of dimension vector `(1, n)`.
//!
//! `theta = (theta1, theta2)` weighs the framing vertex and the loop vertex.
//! A subrepresentation of dimension vector `(d1, d2)` destabilizes when its
//! slope `(theta1 d1 + theta2 d2) / (d1 + d2)` exceeds that of the whole
//! representation.

use std::cmp::Ordering;

use num_rational::BigRational;

use super::field::{Field, PrimeField};
use super::linalg::Subspace;
use super::rep::{is_jointly_generated, FramedRep};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    pub theta1: BigRational,
    pub theta2: BigRational,
}

impl Theta {
    pub fn new(theta1: BigRational, theta2: BigRational) -> Self {
        Self { theta1, theta2 }
    }

    pub fn from_ints(theta1: i64, theta2: i64) -> Self {
        Self::new(BigRational::from_integer(theta1.into()), BigRational::from_integer(theta2.into()))
    }
}

/// Dimension vector `(framing, vertex)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DimVector {
    pub framing: u64,
    pub vertex: u64,
}

impl DimVector {
    pub fn new(framing: u64, vertex: u64) -> Self {
        Self { framing, vertex }
    }

    pub fn total(&self) -> u64 {
        self.framing + self.vertex
    }
}

/// `mu_theta(d) = theta . d / |d|`.
pub fn slope(theta: &Theta, d: DimVector) -> Result<BigRational> {
    if d.total() == 0 {
        return Err(Error::Invalid("slope of the zero dimension vector".into()));
    }
    let num = &theta.theta1 * BigRational::from_integer(d.framing.into())
        + &theta.theta2 * BigRational::from_integer(d.vertex.into());
    Ok(num / BigRational::from_integer(d.total().into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::StrictlySemistable => "strictly-semistable",
            Verdict::Unstable => "unstable",
        }
    }
}

/// Stability through joint generation of the framing vectors.
///
/// Only valid for `theta1 > theta2`. At `theta1 == theta2` every slope
/// coincides and the equivalence does not hold, so that case is rejected
/// along with `theta1 < theta2`.
pub fn is_stable_via_generation<F: Field>(rep: &FramedRep<F>, theta: &Theta) -> Result<bool> {
    match theta.theta1.cmp(&theta.theta2) {
        Ordering::Greater => Ok(is_jointly_generated(rep)),
        Ordering::Equal => Err(Error::Hypothesis("theta1 == theta2 is excluded from the generation criterion".into())),
        Ordering::Less => Err(Error::Hypothesis("the generation criterion needs theta1 >= theta2".into())),
    }
}

pub const BRUTE_FORCE_MAX_N: usize = 3;
pub const BRUTE_FORCE_MAX_P: u64 = 7;

/// Every subspace of `F_p^n`, each exactly once, as reduced row-echelon
/// bases: for each pivot set, the free entries (right of a pivot, outside
/// pivot columns) range over all of `F_p`.
pub fn all_subspaces(f: &PrimeField, n: usize) -> Vec<Subspace<u64>> {
    let p = f.modulus();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(row, &pc)| ((pc + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (row, c)))
            .collect();
        let count = p.pow(free.len() as u32);
        for code in 0..count {
            let mut basis: Vec<Vec<u64>> = pivots
                .iter()
                .map(|&pc| {
                    let mut row = vec![0; n];
                    row[pc] = 1;
                    row
                })
                .collect();
            let mut c = code;
            for &(row, col) in &free {
                basis[row][col] = c % p;
                c /= p;
            }
            out.push(Subspace::from_rref(n, basis, pivots.clone()));
        }
    }
    out
}

/// Verdict from the definition: enumerate every subrepresentation
/// `(d1, W)` with `W` an `A,B,C`-invariant subspace and `d1 = 1` allowed
/// only when all framing vectors lie in `W`, then compare slopes.
pub fn brute_force_stability(rep: &FramedRep<PrimeField>, theta: &Theta) -> Result<Verdict> {
    brute_force_stability_bounded(rep, theta, BRUTE_FORCE_MAX_N, BRUTE_FORCE_MAX_P)
}

pub fn brute_force_stability_bounded(
    rep: &FramedRep<PrimeField>,
    theta: &Theta,
    max_n: usize,
    max_p: u64,
) -> Result<Verdict> {
    let n = rep.n();
    let p = rep.field().modulus();
    if n > max_n {
        return Err(Error::BoundExceeded { what: "oracle dimension n", value: n, bound: max_n });
    }
    if p > max_p {
        return Err(Error::BoundExceeded { what: "oracle prime p", value: p as usize, bound: max_p as usize });
    }
    let subspaces = all_subspaces(rep.field(), n);
    Ok(verdict_over(rep, theta, &subspaces))
}

/// Shared core of the oracle, reusable with a precomputed subspace list.
pub fn verdict_over(rep: &FramedRep<PrimeField>, theta: &Theta, subspaces: &[Subspace<u64>]) -> Verdict {
    let f = rep.field();
    let n = rep.n() as u64;
    let whole = slope(theta, DimVector::new(1, n)).expect("total dimension is at least 1");
    let mut verdict = Verdict::Stable;
    for w in subspaces {
        if !rep.operators().iter().all(|op| w.is_invariant_under(f, op)) {
            continue;
        }
        let d2 = w.dim() as u64;
        let holds_framing = rep.framing().iter().all(|v| w.contains(f, v));
        for d1 in [0u64, 1] {
            if d1 == 1 && !holds_framing {
                continue;
            }
            // nonzero and proper
            if d1 + d2 == 0 || (d1 == 1 && d2 == n) {
                continue;
            }
            let mu = slope(theta, DimVector::new(d1, d2)).expect("nonzero dimension vector");
            match mu.cmp(&whole) {
                Ordering::Greater => return Verdict::Unstable,
                Ordering::Equal => verdict = Verdict::StrictlySemistable,
                Ordering::Less => {}
            }
        }
    }
    verdict
}

/// Framing-vertex weight `-theta_vertex * n`, which makes the total weight
/// of the dimension vector `(1, n)` vanish.
pub fn framing_weight(theta_vertex: &BigRational, n: u64) -> BigRational {
    -(theta_vertex * BigRational::from_integer(n.into()))
}
