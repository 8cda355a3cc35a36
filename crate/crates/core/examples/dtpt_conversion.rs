//! Converting between DT and PT series of a local sheaf, and the polynomial
//! checks on the PT side.

use num_bigint::BigInt;
use quotdt::dtpt::{dt_pt_convert, palindrome_check, reciprocal_polynomial, reflexive_degree_check, Direction, Flavor, LocalSeriesLabel};
use quotdt::TruncSeries;

fn main() -> quotdt::Result<()> {
    let pt = TruncSeries::from_i64s(&[1, 0, 0, 0, 0, 0]);
    for flavor in [Flavor::BehrendWeighted, Flavor::Euler] {
        let label = LocalSeriesLabel::new(1, 2, flavor)?;
        let dt = dt_pt_convert(&pt, &label, Direction::PtToDt)?;
        let back = dt_pt_convert(&dt, &label, Direction::DtToPt)?;
        println!("{flavor}: DT = {:?}, back to PT = {:?}", dt.coeffs(), back.coeffs());
    }

    // a palindromic PT polynomial of degree 2, e.g. 1 + 4q + q^2
    let p: Vec<BigInt> = [1, 4, 1].map(BigInt::from).to_vec();
    println!("reciprocal at degree 3: {:?}", reciprocal_polynomial(&p, 3)?);
    println!("palindrome: {}, degree 2: {}", palindrome_check(&p), reflexive_degree_check(&p, 2));
    Ok(())
}
