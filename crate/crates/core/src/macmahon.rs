//! The MacMahon function, plane partitions and the series built from them:
//! coloured counts, DT/PT wall-crossing factors and N-invariants.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::TruncSeries;

/// Largest size the plane-partition oracle enumerates unless overridden.
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

/// Finite downward-closed set of unit boxes `(i, j, k)` in the octant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlanePartition {
    boxes: BTreeSet<(u32, u32, u32)>,
}

impl PlanePartition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates downward closure.
    pub fn from_boxes(boxes: impl IntoIterator<Item = (u32, u32, u32)>) -> Result<Self> {
        let boxes: BTreeSet<_> = boxes.into_iter().collect();
        for &(i, j, k) in &boxes {
            let below = [
                (i > 0).then(|| (i - 1, j, k)),
                (j > 0).then(|| (i, j - 1, k)),
                (k > 0).then(|| (i, j, k - 1)),
            ];
            if let Some(missing) = below.into_iter().flatten().find(|b| !boxes.contains(b)) {
                return Err(Error::Invalid(format!(
                    "box {:?} present but {:?} missing; not downward closed",
                    (i, j, k),
                    missing
                )));
            }
        }
        Ok(Self { boxes })
    }

    /// From a height matrix: `heights[i][j]` boxes stacked over `(i, j)`.
    /// Rows and columns must be weakly decreasing.
    pub fn from_heights(heights: &[Vec<u32>]) -> Result<Self> {
        let boxes = heights
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().flat_map(move |(j, &h)| (0..h).map(move |k| (i as u32, j as u32, k)))
            });
        Self::from_boxes(boxes)
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> impl Iterator<Item = &(u32, u32, u32)> {
        self.boxes.iter()
    }

    pub fn contains(&self, b: (u32, u32, u32)) -> bool {
        self.boxes.contains(&b)
    }

    /// Boxes whose addition keeps the set downward closed.
    pub fn addable_boxes(&self) -> Vec<(u32, u32, u32)> {
        let mut candidates: BTreeSet<(u32, u32, u32)> = BTreeSet::from([(0, 0, 0)]);
        for &(i, j, k) in &self.boxes {
            candidates.extend([(i + 1, j, k), (i, j + 1, k), (i, j, k + 1)]);
        }
        candidates
            .into_iter()
            .filter(|&(i, j, k)| {
                !self.boxes.contains(&(i, j, k))
                    && (i == 0 || self.boxes.contains(&(i - 1, j, k)))
                    && (j == 0 || self.boxes.contains(&(i, j - 1, k)))
                    && (k == 0 || self.boxes.contains(&(i, j, k - 1)))
            })
            .collect()
    }

    /// Copy with one extra box; the caller picks it from [`Self::addable_boxes`].
    pub fn with_box(&self, b: (u32, u32, u32)) -> Self {
        let mut boxes = self.boxes.clone();
        boxes.insert(b);
        Self { boxes }
    }
}

/// r-tuple of plane partitions: a torus fixed point of the Quot scheme of
/// length-n quotients of the rank-r trivial sheaf on affine 3-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPartitionTuple {
    parts: Vec<PlanePartition>,
}

impl ColoredPartitionTuple {
    pub fn new(parts: Vec<PlanePartition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invalid("a coloured tuple needs rank r >= 1".into()));
        }
        Ok(Self { parts })
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[PlanePartition] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(PlanePartition::size).sum()
    }
}

/// `M(q) = prod_{m>=1} (1 - q^m)^{-m}` truncated at `order`.
///
/// Each factor `(1 - q^m)^{-1}` is applied in place as a stride-`m`
/// running sum; factors with `m > order` do not contribute.
pub fn macmahon_series(order: usize) -> TruncSeries<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for m in 1..=order {
        for _ in 0..m {
            for n in m..=order {
                let prev = c[n - m].clone();
                c[n] += prev;
            }
        }
    }
    TruncSeries::new(c)
}

/// Counts plane partitions of `n` by stacking Young-diagram layers.
///
/// A plane partition is a chain of partitions `λ_0 ⊇ λ_1 ⊇ ...` (the
/// horizontal slices at heights `0, 1, ...`). The count of chains with a
/// given top bound and remaining size is memoized.
struct LayerCounter {
    memo: HashMap<(usize, Vec<u8>), BigInt>,
}

impl LayerCounter {
    fn new() -> Self {
        Self { memo: HashMap::new() }
    }

    /// Number of (possibly empty) chains of nonempty layers inside `bound`
    /// with total size exactly `remaining`.
    fn chains(&mut self, remaining: usize, bound: &[u8]) -> BigInt {
        if remaining == 0 {
            return BigInt::one();
        }
        let key = (remaining, bound.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut layers = Vec::new();
        sub_partitions(bound, remaining, &mut Vec::new(), 0, &mut layers);
        let mut total = BigInt::zero();
        for layer in layers {
            let size: usize = layer.iter().map(|&x| x as usize).sum();
            if size > 0 {
                total += self.chains(remaining - size, &layer);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// All partitions `mu ⊆ bound` with `|mu| <= budget`, as weakly decreasing
/// row lengths without trailing zeros.
fn sub_partitions(bound: &[u8], budget: usize, current: &mut Vec<u8>, used: usize, out: &mut Vec<Vec<u8>>) {
    out.push(current.clone());
    let row = current.len();
    if row >= bound.len() {
        return;
    }
    let cap = current.last().copied().unwrap_or(u8::MAX).min(bound[row]);
    for len in 1..=cap as usize {
        if used + len > budget {
            break;
        }
        current.push(len as u8);
        sub_partitions(bound, budget, current, used + len, out);
        current.pop();
    }
}

/// Number of plane partitions of `n`, by explicit layer enumeration
/// (never through the product formula). Uses the default size bound.
pub fn plane_partition_oracle(n: usize) -> Result<BigInt> {
    plane_partition_count(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn plane_partition_count(n: usize, bound: usize) -> Result<BigInt> {
    guard_size(n, bound)?;
    if n > u8::MAX as usize {
        return Err(Error::BoundExceeded { what: "plane partition size", value: n, bound: u8::MAX as usize });
    }
    let base = vec![n as u8; n];
    Ok(LayerCounter::new().chains(n, &base))
}

/// Counts for every size `0..=n` from a single memo table.
pub fn plane_partition_counts(n: usize, bound: usize) -> Result<Vec<BigInt>> {
    guard_size(n, bound)?;
    let mut counter = LayerCounter::new();
    Ok((0..=n)
        .map(|k| {
            let base = vec![k as u8; k];
            counter.chains(k, &base)
        })
        .collect())
}

/// Every plane partition of `n`, materialized from the layer recursion.
pub fn enumerate_plane_partitions(n: usize, bound: usize) -> Result<Vec<PlanePartition>> {
    guard_size(n, bound)?;
    let mut out = Vec::new();
    let base = vec![n as u8; n];
    let mut stack = Vec::new();
    collect_chains(n, &base, &mut stack, &mut out);
    Ok(out)
}

fn collect_chains(remaining: usize, bound: &[u8], stack: &mut Vec<Vec<u8>>, out: &mut Vec<PlanePartition>) {
    if remaining == 0 {
        let boxes = stack.iter().enumerate().flat_map(|(k, layer)| {
            layer
                .iter()
                .enumerate()
                .flat_map(move |(i, &len)| (0..len as u32).map(move |j| (i as u32, j, k as u32)))
        });
        out.push(PlanePartition { boxes: boxes.collect() });
        return;
    }
    let mut layers = Vec::new();
    sub_partitions(bound, remaining, &mut Vec::new(), 0, &mut layers);
    for layer in layers {
        let size: usize = layer.iter().map(|&x| x as usize).sum();
        if size == 0 {
            continue;
        }
        stack.push(layer.clone());
        collect_chains(remaining - size, &layer, stack, out);
        stack.pop();
    }
}

fn guard_size(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded { what: "enumeration size", value: n, bound });
    }
    Ok(())
}

/// Number of r-tuples of plane partitions of total size `n`.
///
/// Computed as the r-fold convolution of the enumeration oracle and checked
/// against `[q^n] M(q)^r`; the two must agree.
pub fn colored_count(r: usize, n: usize) -> Result<BigInt> {
    colored_count_bounded(r, n, DEFAULT_ENUMERATION_BOUND)
}

pub fn colored_count_bounded(r: usize, n: usize, bound: usize) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::Invalid("rank r must be >= 1".into()));
    }
    let p = plane_partition_counts(n, bound)?;
    let mut conv = p.clone();
    for _ in 1..r {
        conv = (0..=n).map(|k| (0..=k).map(|a| &conv[a] * &p[k - a]).sum()).collect();
    }
    let via_series = macmahon_series(n)
        .pow(r as i64)
        .expect("positive powers never need a unit")
        .coeffs()[n]
        .clone();
    assert_eq!(conv[n], via_series, "coloured count disagrees with [q^n] M(q)^r at r={r}, n={n}");
    Ok(conv[n].clone())
}

/// `M((-1)^r q)^{r chi}`, the factor relating DT and PT series.
pub fn wall_crossing_factor(r: usize, chi: i64, order: usize) -> Result<TruncSeries<BigInt>> {
    if r == 0 {
        return Err(Error::Invalid("rank r must be >= 1".into()));
    }
    macmahon_series(order).substitute_sign(r % 2 == 1).pow(r as i64 * chi)
}

/// `N_{m,0}` for `m = 1..=order`, read off from the rank-one identity
/// `exp(sum (-1)^{m-1} m N_{m,0} q^m) = M(-q)^chi`.
pub fn n_invariants(chi: i64, order: usize) -> Result<Vec<BigRational>> {
    let log = macmahon_series(order).substitute_sign(true).pow(chi)?.to_rational().log()?;
    Ok((1..=order)
        .map(|m| {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            &log.coeffs()[m] * BigRational::new(sign.into(), (m as i64).into())
        })
        .collect())
}

/// `exp(sum_{m>0} (-1)^{rm-1} r m N_{m,0} q^m)` truncated at `order`,
/// where `n_inv[m-1]` holds `N_{m,0}`.
pub fn factor_from_n_invariants(r: usize, n_inv: &[BigRational], order: usize) -> Result<TruncSeries<BigRational>> {
    if n_inv.len() < order {
        return Err(Error::Invalid(format!("need {order} N-invariants, got {}", n_inv.len())));
    }
    let exponent = TruncSeries::from_fn(order, |m| {
        if m == 0 {
            return BigRational::zero();
        }
        let sign: i64 = if (r * m) % 2 == 1 { 1 } else { -1 };
        &n_inv[m - 1] * BigRational::from_integer((sign * (r * m) as i64).into())
    });
    exponent.exp()
}

/// Extracts the N-invariants for `chi` and rebuilds the rank-r wall-crossing
/// factor from them. The series must equal [`wall_crossing_factor`].
pub fn n_invariants_roundtrip(r: usize, chi: i64, order: usize) -> Result<(Vec<BigRational>, TruncSeries<BigRational>)> {
    if r == 0 {
        return Err(Error::Invalid("rank r must be >= 1".into()));
    }
    let n_inv = n_invariants(chi, order)?;
    let factor = factor_from_n_invariants(r, &n_inv, order)?;
    Ok((n_inv, factor))
}
