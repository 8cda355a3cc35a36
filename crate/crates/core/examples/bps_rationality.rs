//! BPS numbers of a stable-pair series and the rationality test.

use quotdt::bps::{bps_to_pt, extract_bps, integer_laurent, BpsVector};

fn main() -> quotdt::Result<()> {
    let v = BpsVector::from_ints(&[2, -1, 3])?;
    let z = bps_to_pt(&v, -1, 8)?;
    println!("Z = {:?} starting at q^{}", z.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(), z.offset());
    let ex = extract_bps(&z, 2)?;
    let values: Vec<String> = ex.bps.values().iter().map(ToString::to_string).collect();
    println!("recovered {values:?}, residual zero: {}", ex.residual_zero());

    // q + q^50 is not of the form n_0 q / (1+q)^2
    let mut coeffs = vec![0; 50];
    coeffs[0] = 1;
    coeffs[49] = 1;
    let ex = extract_bps(&integer_laurent(1, &coeffs), 0)?;
    println!("q + q^50: {}", ex.to_json());
    Ok(())
}
