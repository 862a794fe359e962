//! Evaluate topological indices on a dimension-4 manifold described by its
//! Pontryagin numbers: the K3-type descriptor with ∫p₁ = −48.
//!
//! The spin-3/2 index class is −19 times the Dirac index class in dimension
//! 4, so the pair of indices comes out as (2, −38).
//!
//! ```bash
//! cargo run --example k3_index
//! ```

use spinorlab::index::{
    index_dirac, index_rarita_schwinger, index_twisted_cotangent, k3_descriptor,
    symbolic_index_class, OperatorKind,
};

fn main() {
    // Symbolic index classes in dimension 4, before choosing a manifold.
    for (label, op) in [
        ("Dirac      ", OperatorKind::Dirac),
        ("spin-3/2   ", OperatorKind::HigherSpin(1)),
        ("twisted D_T", OperatorKind::TwistedCotangent),
    ] {
        let class = symbolic_index_class(4, op).unwrap();
        println!("index class, {label} : {class}");
    }

    let k3 = k3_descriptor();
    println!("\ndescriptor: {}", k3.to_json());

    for report in [
        index_dirac(&k3).unwrap(),
        index_rarita_schwinger(&k3).unwrap(),
        index_twisted_cotangent(&k3).unwrap(),
    ] {
        println!("\n{report}");
    }
}
