//! The potential Tr A[B, C]: its value, its gradient, and the fact that it
//! vanishes exactly on commuting triples.

use num_rational::BigRational;
use quotdt::quiver::linalg::{diagonal, elementary, Matrix};
use quotdt::quiver::potential::{critical_check, potential_gradient, potential_value};
use quotdt::quiver::{FramedRep, Rationals};

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn rep(a: Matrix<BigRational>, b: Matrix<BigRational>, c: Matrix<BigRational>) -> quotdt::Result<FramedRep<Rationals>> {
    let n = a.size();
    FramedRep::new(Rationals, a, b, c, vec![vec![q(1); n]])
}

fn main() -> quotdt::Result<()> {
    let f = Rationals;
    let non_commuting = rep(elementary(&f, 2, 0, 1), elementary(&f, 2, 1, 0), diagonal(&f, &[q(1), q(0)]))?;
    let g = potential_gradient(&non_commuting);
    println!("f = {}", potential_value(&non_commuting));
    for (name, m) in ["A", "B", "C"].iter().zip(g.parts()) {
        println!("df/d{name} = {:?}", m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());
    }
    println!("{:?}", critical_check(&non_commuting));

    let d = |x: [i64; 2]| diagonal(&f, &x.map(q));
    let commuting = rep(d([1, 2]), d([3, -1]), d([0, 5]))?;
    println!("diagonal triple: {:?}", critical_check(&commuting));
    Ok(())
}
