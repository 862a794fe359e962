//! Cross-check representation theory against brute-force linear algebra: the
//! radially-trivial part of each spin-3/2 solution space realizes the
//! Spin(m) representation of highest weight ((2k+1)/2, 3/2, 1/2, …, 1/2),
//! so its dimension must match the Weyl dimension formula.
//!
//! ```bash
//! cargo run --example weyl_dimensions
//! ```

use spinorlab::clifford::SpinorSpace;
use spinorlab::solutions::rs_structure;
use spinorlab::spectra::{expected_m1_dim, m1_highest_weight, weyl_dim, HighestWeight};

fn weight_str(weight: &HighestWeight) -> String {
    let parts: Vec<String> = weight.entries().iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    // The Weyl dimension formula on its own: spinor representations.
    println!("basic spinor representations:");
    for (group, weight) in [
        (3usize, HighestWeight::from_halves(vec![1])),
        (4, HighestWeight::from_halves(vec![1, 1])),
        (5, HighestWeight::from_halves(vec![1, 1])),
        (6, HighestWeight::from_halves(vec![1, 1, 1])),
    ] {
        println!(
            "  Spin({group}), weight {}: dim {}",
            weight_str(&weight),
            weyl_dim(group, &weight).unwrap()
        );
    }

    println!("\nradially-trivial parts vs Weyl dimension formula:");
    println!(
        "  {:>3} {:>3} {:>18} {:>12} {:>12}",
        "m", "k", "highest weight", "predicted", "brute rank"
    );
    for m in 3..=5usize {
        let space = SpinorSpace::new(m).unwrap();
        for k in 1..=2usize {
            let weight = match m1_highest_weight(m, k) {
                Some(w) => weight_str(&w),
                // Rank too small to carry the weight: the space must vanish.
                None => "(none)".to_string(),
            };
            let predicted = expected_m1_dim(m, k).unwrap();
            let brute = rs_structure(&space, k).unwrap().m1_basis.len();
            println!("  {m:>3} {k:>3} {weight:>18} {predicted:>12} {brute:>12}");
        }
    }
}
