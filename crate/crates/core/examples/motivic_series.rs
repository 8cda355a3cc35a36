//! Motivic classes of Quot schemes of points, with L^(1/2) kept symbolic,
//! and their Euler characteristic specialization.

use quotdt::motivic::{motivic_quot_series, signed_chi_check};

fn main() -> quotdt::Result<()> {
    for r in 1..=2 {
        let z = motivic_quot_series(r, 3)?;
        println!("r = {r}");
        for n in 0..=z.order() {
            println!("  [t^{n}] {}", z.coeff(n).unwrap());
        }
        let chi: Vec<String> = z.euler_specialize().coeffs().iter().map(ToString::to_string).collect();
        println!("  L^(1/2) -> -1: {}", chi.join(", "));
    }

    println!("signed fixed-point count vs virtual chi, r = 3:");
    for n in 0..=5 {
        let (signed, virt) = signed_chi_check(3, n)?;
        println!("  n = {n}: {signed} / {virt}");
    }
    Ok(())
}
