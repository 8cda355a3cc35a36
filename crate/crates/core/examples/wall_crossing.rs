//! The DT/PT wall-crossing factor M((-1)^r q)^(r chi) and the N-invariants
//! it is built from.

use quotdt::macmahon::{n_invariants, n_invariants_roundtrip, wall_crossing_factor};

fn main() -> quotdt::Result<()> {
    let order = 6;
    for (r, chi) in [(1, 1), (1, -2), (2, 1), (3, 2)] {
        let f = wall_crossing_factor(r, chi, order)?;
        let coeffs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
        println!("r = {r}, chi = {chi:>2}: {}", coeffs.join(", "));
    }

    let n = n_invariants(1, order)?;
    let shown: Vec<String> = n.iter().map(ToString::to_string).collect();
    println!("N_(m,0) for chi = 1: {}", shown.join(", "));

    let (_, rebuilt) = n_invariants_roundtrip(2, 3, order)?;
    let direct = wall_crossing_factor(2, 3, order)?.to_rational();
    println!("exp rebuild matches M(q)^6: {}", rebuilt == direct);
    Ok(())
}
