//! Tabulate the dimensions of spherical-monogenic spaces — homogeneous
//! polynomial solutions of the Dirac equation on flat m-space — by exact
//! kernel rank, against the closed formula 2^⌊m/2⌋·C(k+m−2, k).
//!
//! ```bash
//! cargo run --example monogenic_dimensions
//! ```

use num::BigInt;
use spinorlab::clifford::SpinorSpace;
use spinorlab::solutions::monogenic_basis;
use spinorlab::spectra::monogenic_dimension_formula;

fn main() {
    println!("{:>3} {:>3} {:>12} {:>12}  {}", "m", "k", "kernel rank", "formula", "agree");
    for m in 3..=6usize {
        let space = SpinorSpace::new(m).unwrap();
        for k in 0..=4usize {
            let mono = monogenic_basis(&space, k).unwrap();
            let formula = monogenic_dimension_formula(m, k);
            let agree = BigInt::from(mono.dim()) == formula;
            println!(
                "{:>3} {:>3} {:>12} {:>12}  {}",
                m,
                k,
                mono.dim(),
                formula,
                if agree { "yes" } else { "NO" }
            );
        }
    }
}
