use rand::Rng;
use serde_json::{json, Value};

use super::field::{Field, PrimeField, Rationals};
use super::linalg::{self, Matrix, Subspace};
use crate::error::{Error, Result};

/// Representation of the three-loop quiver with `r` framings: operators
/// `A, B, C` on `F^n` and framing vectors `v_1, ..., v_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct FramedRep<F: Field> {
    field: F,
    a: Matrix<F::Elem>,
    b: Matrix<F::Elem>,
    c: Matrix<F::Elem>,
    framing: Vec<Vec<F::Elem>>,
}

impl<F: Field> FramedRep<F> {
    pub fn new(
        field: F,
        a: Matrix<F::Elem>,
        b: Matrix<F::Elem>,
        c: Matrix<F::Elem>,
        framing: Vec<Vec<F::Elem>>,
    ) -> Result<Self> {
        let n = a.size();
        if b.size() != n || c.size() != n {
            return Err(Error::Invalid(format!(
                "operators have sizes {}, {}, {}; expected all equal",
                n,
                b.size(),
                c.size()
            )));
        }
        if framing.is_empty() {
            return Err(Error::Invalid("framing rank r must be >= 1".into()));
        }
        if let Some(v) = framing.iter().find(|v| v.len() != n) {
            return Err(Error::Invalid(format!("framing vector of length {} in dimension {n}", v.len())));
        }
        Ok(Self { field, a, b, c, framing })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.a.size()
    }

    pub fn r(&self) -> usize {
        self.framing.len()
    }

    pub fn a(&self) -> &Matrix<F::Elem> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<F::Elem> {
        &self.b
    }

    pub fn c(&self) -> &Matrix<F::Elem> {
        &self.c
    }

    pub fn operators(&self) -> [&Matrix<F::Elem>; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn framing(&self) -> &[Vec<F::Elem>] {
        &self.framing
    }

    /// Same operators with one more framing vector.
    pub fn with_extra_framing(&self, v: Vec<F::Elem>) -> Result<Self> {
        let mut framing = self.framing.clone();
        framing.push(v);
        Self::new(self.field.clone(), self.a.clone(), self.b.clone(), self.c.clone(), framing)
    }

    /// `g . (A, B, C, v) = (gAg^{-1}, gBg^{-1}, gCg^{-1}, gv)`.
    pub fn conjugate(&self, g: &Matrix<F::Elem>) -> Result<Self> {
        let f = &self.field;
        let g_inv = linalg::inverse(f, g).ok_or_else(|| Error::Invalid("conjugating matrix is singular".into()))?;
        let conj = |m: &Matrix<F::Elem>| linalg::matmul(f, &linalg::matmul(f, g, m), &g_inv);
        Self::new(
            f.clone(),
            conj(&self.a),
            conj(&self.b),
            conj(&self.c),
            self.framing.iter().map(|v| linalg::apply(f, g, v)).collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        let mat = |m: &Matrix<F::Elem>| -> Value {
            m.rows().iter().map(|row| row.iter().map(|x| f.format(x)).collect::<Vec<_>>()).collect()
        };
        json!({
            "n": self.n(),
            "r": self.r(),
            "field": f.descriptor(),
            "A": mat(&self.a),
            "B": mat(&self.b),
            "C": mat(&self.c),
            "v": self.framing.iter().map(|v| v.iter().map(|x| f.format(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    fn from_json_in(field: F, v: &Value) -> Result<Self> {
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing \"n\"".into()))? as usize;
        let r = v.get("r").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing \"r\"".into()))? as usize;
        let entry = |x: &Value| -> Result<F::Elem> {
            match x {
                Value::String(s) => field.parse(s),
                other => Err(Error::Parse(format!("entries must be decimal strings, got {other}"))),
            }
        };
        let vector = |x: &Value| -> Result<Vec<F::Elem>> {
            x.as_array().ok_or_else(|| Error::Parse("expected an array".into()))?.iter().map(entry).collect()
        };
        let matrix = |key: &str| -> Result<Matrix<F::Elem>> {
            let rows = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("missing matrix {key:?}")))?
                .iter()
                .map(vector)
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != n {
                return Err(Error::Parse(format!("matrix {key:?} has {} rows, expected n = {n}", rows.len())));
            }
            Matrix::from_rows(rows).ok_or_else(|| Error::Parse(format!("matrix {key:?} is not square")))
        };
        let framing = v
            .get("v")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing framing \"v\"".into()))?
            .iter()
            .map(vector)
            .collect::<Result<Vec<_>>>()?;
        if framing.len() != r {
            return Err(Error::Parse(format!("\"r\" is {r} but {} framing vectors were given", framing.len())));
        }
        let (a, b, c) = (matrix("A")?, matrix("B")?, matrix("C")?);
        Self::new(field.clone(), a, b, c, framing)
    }
}

/// A framed representation over whichever field its JSON names.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRep {
    Rational(FramedRep<Rationals>),
    Prime(FramedRep<PrimeField>),
}

impl AnyRep {
    pub fn from_json(v: &Value) -> Result<Self> {
        let field = v.get("field").and_then(Value::as_str).unwrap_or("Q").trim();
        if field == "Q" {
            return Ok(AnyRep::Rational(FramedRep::from_json_in(Rationals, v)?));
        }
        let p = field
            .strip_prefix("Fp:")
            .and_then(|p| p.trim().parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("field must be \"Q\" or \"Fp:<p>\", got {field:?}")))?;
        Ok(AnyRep::Prime(FramedRep::from_json_in(PrimeField::new(p)?, v)?))
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyRep::Rational(rep) => rep.to_json(),
            AnyRep::Prime(rep) => rep.to_json(),
        }
    }
}

/// Smallest subspace containing every framing vector and stable under
/// `A, B, C`. The framing vectors jointly generate iff its dimension is `n`.
pub fn generation_closure<F: Field>(rep: &FramedRep<F>) -> Subspace<F::Elem> {
    let f = rep.field();
    let n = rep.n();
    let mut span = Subspace::span(f, n, rep.framing().iter().cloned());
    // Each round adds at least one dimension or stops.
    for _ in 0..=n {
        let mut vectors: Vec<Vec<F::Elem>> = span.basis().to_vec();
        for w in span.basis() {
            for op in rep.operators() {
                vectors.push(linalg::apply(f, op, w));
            }
        }
        let next = Subspace::span(f, n, vectors);
        if next.dim() == span.dim() {
            break;
        }
        span = next;
    }
    span
}

pub fn is_jointly_generated<F: Field>(rep: &FramedRep<F>) -> bool {
    generation_closure(rep).dim() == rep.n()
}

/// Nilpotent Jordan block with `J e_i = e_{i+1}` (ones on the subdiagonal).
pub fn nilpotent_jordan_block<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, |i, j| if i == j + 1 { f.one() } else { f.zero() })
}

/// Uniform random representation over `F_p`; each entry is forced to zero
/// with probability `sparsity` to reach non-generic strata.
pub fn random_prime_rep<R: Rng>(f: PrimeField, n: usize, r: usize, sparsity: f64, rng: &mut R) -> FramedRep<PrimeField> {
    let p = f.modulus();
    let mut entry = || if rng.gen_bool(sparsity) { 0 } else { rng.gen_range(0..p) };
    let mut mat = || Matrix::from_fn(n, |_, _| entry());
    let (a, b, c) = (mat(), mat(), mat());
    let mut entry = || if rng.gen_bool(sparsity) { 0 } else { rng.gen_range(0..p) };
    let framing = (0..r).map(|_| (0..n).map(|_| entry()).collect()).collect();
    FramedRep::new(f, a, b, c, framing).expect("shapes are consistent by construction")
}

/// Random rational representation with entries `k/d`, `|k| <= max_num`,
/// `1 <= d <= max_den`. With probability `commuting` the operators are
/// chosen as polynomials in one matrix, so they commute.
pub fn random_rational_rep<R: Rng>(
    n: usize,
    r: usize,
    max_num: i64,
    max_den: i64,
    commuting: f64,
    rng: &mut R,
) -> FramedRep<Rationals> {
    let f = Rationals;
    let entry = |rng: &mut R| {
        num_rational::BigRational::new(rng.gen_range(-max_num..=max_num).into(), rng.gen_range(1..=max_den).into())
    };
    let (a, b, c) = if rng.gen_bool(commuting) {
        let x = Matrix::from_fn(n, |_, _| entry(rng));
        let x2 = linalg::matmul(&f, &x, &x);
        let poly = |rng: &mut R| {
            let (c0, c1, c2) = (entry(rng), entry(rng), entry(rng));
            Matrix::from_fn(n, |i, j| {
                let id = if i == j { c0.clone() } else { f.zero() };
                id + &c1 * x.get(i, j) + &c2 * x2.get(i, j)
            })
        };
        (poly(rng), poly(rng), poly(rng))
    } else {
        let mat = |rng: &mut R| Matrix::from_fn(n, |_, _| entry(rng));
        (mat(rng), mat(rng), mat(rng))
    };
    let framing = (0..r).map(|_| (0..n).map(|_| entry(rng)).collect()).collect();
    FramedRep::new(f, a, b, c, framing).expect("shapes are consistent by construction")
}
