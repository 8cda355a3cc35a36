//! Stability of framed representations of the three-loop quiver: the
//! generation criterion next to the brute-force check over F_5.

use quotdt::quiver::linalg::zero_matrix;
use quotdt::quiver::rep::{generation_closure, nilpotent_jordan_block, random_prime_rep};
use quotdt::quiver::stability::{brute_force_stability, is_stable_via_generation, Theta};
use quotdt::quiver::{FramedRep, PrimeField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn show(label: &str, rep: &FramedRep<PrimeField>, theta: &Theta) -> quotdt::Result<()> {
    println!(
        "{label}: closure dim {} of {}, criterion {}, brute force {}",
        generation_closure(rep).dim(),
        rep.n(),
        is_stable_via_generation(rep, theta)?,
        brute_force_stability(rep, theta)?.as_str()
    );
    Ok(())
}

fn main() -> quotdt::Result<()> {
    let f = PrimeField::new(5)?;
    let theta = Theta::from_ints(1, 0);
    let n = 3;

    // A Jordan block with v = e_1 generates everything.
    let j = nilpotent_jordan_block(&f, n);
    let z = zero_matrix(&f, n);
    let jordan = FramedRep::new(f, j, z.clone(), z.clone(), vec![vec![1, 0, 0]])?;
    show("jordan block, v = e1", &jordan, &theta)?;

    // With v = e_3 only the last line is reached.
    let stuck = FramedRep::new(f, nilpotent_jordan_block(&f, n), z.clone(), z, vec![vec![0, 0, 1]])?;
    show("jordan block, v = e3", &stuck, &theta)?;

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..4 {
        show(&format!("random #{i}"), &random_prime_rep(f, n, 1, 0.6, &mut rng), &theta)?;
    }

    // theta1 = theta2 is outside the criterion's hypothesis
    let flat = Theta::from_ints(1, 1);
    println!("theta = (1,1): {}", is_stable_via_generation(&jordan, &flat).unwrap_err());
    println!("theta = (1,1) brute force: {}", brute_force_stability(&jordan, &flat)?.as_str());
    Ok(())
}
