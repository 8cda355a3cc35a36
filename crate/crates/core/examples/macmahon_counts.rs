//! Plane partitions: the MacMahon product against direct enumeration, and
//! the torus-fixed points of the Quot scheme as r-tuples of plane partitions.

use quotdt::macmahon::{colored_count, enumerate_plane_partitions, macmahon_series, plane_partition_counts, DEFAULT_ENUMERATION_BOUND};

fn main() -> quotdt::Result<()> {
    let n = 10;
    let product = macmahon_series(n);
    let counted = plane_partition_counts(n, DEFAULT_ENUMERATION_BOUND)?;
    println!("M(q) up to q^{n}:");
    for (k, (a, b)) in product.coeffs().iter().zip(&counted).enumerate() {
        println!("  n = {k:>2}  product {a:>4}  enumerated {b:>4}");
    }

    println!("plane partitions of 3 (boxes):");
    for p in enumerate_plane_partitions(3, DEFAULT_ENUMERATION_BOUND)? {
        println!("  {:?}", p.boxes().collect::<Vec<_>>());
    }

    println!("fixed points of Quot(O^r, n):");
    for r in 1..=3 {
        let row: Vec<String> = (0..=6).map(|k| colored_count(r, k).map(|c| c.to_string())).collect::<Result<_, _>>()?;
        println!("  r = {r}: {}", row.join(", "));
    }
    Ok(())
}
