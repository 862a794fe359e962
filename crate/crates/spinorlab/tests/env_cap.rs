//! The SPINORLAB_MAX_DEGREE environment variable raises the degree caps but
//! never lowers them. This lives in its own integration-test binary (a
//! separate process) because it mutates process-global environment state.

use spinorlab::clifford::SpinorSpace;
use spinorlab::solutions::{degree_cap, monogenic_basis, MONOGENIC_DEGREE_CAP};
use spinorlab::spectra::monogenic_dimension_formula;
use spinorlab::Error;

#[test]
fn env_var_raises_but_never_lowers_the_caps() {
    std::env::remove_var("SPINORLAB_MAX_DEGREE");
    assert_eq!(degree_cap(MONOGENIC_DEGREE_CAP), MONOGENIC_DEGREE_CAP);

    let space = SpinorSpace::new(3).unwrap();
    let over = MONOGENIC_DEGREE_CAP + 1;
    match monogenic_basis(&space, over) {
        Err(Error::UnsupportedParameter(_)) => {}
        Err(other) => panic!("expected a cap violation, got {other:?}"),
        Ok(_) => panic!("expected a cap violation, got a basis"),
    }

    // Lower values and garbage are ignored.
    std::env::set_var("SPINORLAB_MAX_DEGREE", "1");
    assert_eq!(degree_cap(MONOGENIC_DEGREE_CAP), MONOGENIC_DEGREE_CAP);
    std::env::set_var("SPINORLAB_MAX_DEGREE", "not-a-number");
    assert_eq!(degree_cap(MONOGENIC_DEGREE_CAP), MONOGENIC_DEGREE_CAP);

    // A higher value opens up the degree it names.
    std::env::set_var("SPINORLAB_MAX_DEGREE", over.to_string());
    assert_eq!(degree_cap(MONOGENIC_DEGREE_CAP), over);
    let mono = monogenic_basis(&space, over).unwrap();
    assert_eq!(
        num::BigInt::from(mono.dim()),
        monogenic_dimension_formula(3, over)
    );

    std::env::remove_var("SPINORLAB_MAX_DEGREE");
}
