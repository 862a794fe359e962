//! Build a Clifford algebra representation and check its defining relations.
//!
//! ```bash
//! cargo run --example clifford_algebra
//! ```

use spinorlab::clifford::{SpinorSpace, SpinorVec};
use spinorlab::Scalar;

fn main() {
    for m in 3..=6usize {
        let space = SpinorSpace::new(m).unwrap();
        let dim = space.dim_s();
        println!("m = {m}: spinor dimension {dim}");

        // e_i e_j + e_j e_i = -2 δ_ij on every basis spinor.
        let mut ok = true;
        for i in 0..m {
            for j in 0..m {
                for a in 0..dim {
                    let v = SpinorVec::basis(dim, a);
                    let eij = space
                        .clifford_apply(i, &space.clifford_apply(j, &v).unwrap())
                        .unwrap();
                    let eji = space
                        .clifford_apply(j, &space.clifford_apply(i, &v).unwrap())
                        .unwrap();
                    let expected = if i == j {
                        v.scale(&Scalar::from_int(-2))
                    } else {
                        SpinorVec::zero(dim)
                    };
                    ok &= eij.add(&eji) == expected;
                }
            }
        }
        println!("  e_i e_j + e_j e_i = -2 δ_ij: {}", if ok { "holds" } else { "FAILS" });

        match space.chirality() {
            Some(_) => println!("  chirality element: present (even m, half-spinors split)"),
            None => println!("  chirality element: none (odd m)"),
        }

        // The splitting of spinor-valued one-forms: π½ projects onto the image
        // of ι, π¾ onto the kernel of μ, and they resolve the identity.
        let phi = SpinorVec::basis(dim, 0);
        let psi = space.iota(&phi);
        println!(
            "  μ(ι(s_0)) == s_0: {}",
            if space.mu(&psi) == phi { "holds" } else { "FAILS" }
        );
        println!(
            "  π¾(ι(s_0)) == 0:  {}",
            if space.project_three_half(&psi).is_zero() { "holds" } else { "FAILS" }
        );
    }
}
