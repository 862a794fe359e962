//! Print exact eigenvalue/multiplicity tables for the Dirac operator and the
//! spin-(2j+1)/2 family on round spheres.
//!
//! ```bash
//! cargo run --example sphere_spectra
//! ```

use num::One;
use spinorlab::spectra::{dirac_spectrum, hsd_spectrum, SpectrumRow};

fn print_table(title: &str, rows: &[SpectrumRow]) {
    println!("{title}");
    println!(
        "  {:>3} {:>6} {:>4} {:>12} {:>14}",
        "l", "series", "sign", "eigenvalue", "multiplicity"
    );
    for row in rows {
        let ev = row.eigenvalue();
        let ev_str = if ev.denom().is_one() {
            ev.numer().to_string()
        } else {
            format!("{}/{}", ev.numer(), ev.denom())
        };
        println!(
            "  {:>3} {:>6} {:>4} {:>12} {:>14}",
            row.l,
            row.series.to_string(),
            row.sign.to_string(),
            ev_str,
            row.multiplicity
        );
    }
    println!();
}

fn main() {
    // Dirac on S^3: eigenvalues ±(3/2 + l), multiplicity 2·C(l+2, l).
    print_table("Dirac operator on S^3", &dirac_spectrum(3, 3).unwrap());

    // Spin-3/2 operator on S^4: two eigenvalue branches per level.
    print_table("spin-3/2 operator on S^4 (j = 1)", &hsd_spectrum(4, 1, 2).unwrap());

    // Spin-5/2 operator on S^6.
    print_table("spin-5/2 operator on S^6 (j = 2)", &hsd_spectrum(6, 2, 2).unwrap());
}
