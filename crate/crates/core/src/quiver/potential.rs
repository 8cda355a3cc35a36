//! The trace potential `f(A, B, C, v) = Tr A[B, C]` and its critical locus.
//!
//! The framing vectors do not enter `f`.

use super::field::Field;
use super::linalg::{self, commutator, is_zero_matrix, matmul, trace, Matrix};
use super::rep::FramedRep;

/// `Tr(ABC) - Tr(ACB)`.
pub fn potential_value<F: Field>(rep: &FramedRep<F>) -> F::Elem {
    let f = rep.field();
    let abc = matmul(f, &matmul(f, rep.a(), rep.b()), rep.c());
    let acb = matmul(f, &matmul(f, rep.a(), rep.c()), rep.b());
    f.sub(&trace(f, &abc), &trace(f, &acb))
}

/// Partial derivatives of `f` with respect to the matrix entries, arranged
/// so that `d_a.get(i, j) = df / dA_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gradient<E> {
    pub d_a: Matrix<E>,
    pub d_b: Matrix<E>,
    pub d_c: Matrix<E>,
}

impl<E> Gradient<E> {
    pub fn parts(&self) -> [&Matrix<E>; 3] {
        [&self.d_a, &self.d_b, &self.d_c]
    }
}

/// `dA = [B,C]^T`, `dB = [C,A]^T`, `dC = [A,B]^T`.
pub fn potential_gradient<F: Field>(rep: &FramedRep<F>) -> Gradient<F::Elem> {
    let f = rep.field();
    let (a, b, c) = (rep.a(), rep.b(), rep.c());
    Gradient {
        d_a: commutator(f, b, c).transpose(),
        d_b: commutator(f, c, a).transpose(),
        d_c: commutator(f, a, b).transpose(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalCheck {
    pub gradient_vanishes: bool,
    pub commutators_vanish: bool,
}

/// Both characterizations of the critical locus, computed separately.
pub fn critical_check<F: Field>(rep: &FramedRep<F>) -> CriticalCheck {
    let f = rep.field();
    let grad = potential_gradient(rep);
    let gradient_vanishes = grad.parts().iter().all(|m| is_zero_matrix(f, m));
    let [a, b, c] = rep.operators();
    let commutators_vanish = [(a, b), (b, c), (c, a)]
        .iter()
        .all(|(x, y)| matmul(f, x, y) == matmul(f, y, x));
    CriticalCheck { gradient_vanishes, commutators_vanish }
}

/// Whether `(A, B, C)` is a critical point of `f`, i.e. the three operators
/// pairwise commute.
pub fn is_critical_point<F: Field>(rep: &FramedRep<F>) -> bool {
    let check = critical_check(rep);
    assert_eq!(
        check.gradient_vanishes, check.commutators_vanish,
        "gradient and commutator tests disagree"
    );
    check.gradient_vanishes
}

/// `f` evaluated after replacing one operator, used for directional checks.
pub fn potential_with<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
    c: &Matrix<F::Elem>,
) -> F::Elem {
    let abc = matmul(f, &matmul(f, a, b), c);
    let acb = matmul(f, &matmul(f, a, c), b);
    f.sub(&linalg::trace(f, &abc), &linalg::trace(f, &acb))
}
