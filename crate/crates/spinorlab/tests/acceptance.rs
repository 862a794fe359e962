//! Acceptance battery.
//!
//! Ten criteria, one test each, every assertion an exact equality (the crate
//! has no floating point). Each test prints a single summary line with its
//! elapsed time and asserts the stated runtime budget.

use std::time::{Duration, Instant};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use spinorlab::charclass::ahat_series;
use spinorlab::clifford::{AlgebraicOneForm, SpinorSpace, SpinorVec};
use spinorlab::fields::{KFormField, OneFormField, SpinorField};
use spinorlab::index::{
    dim8_audit, index_dirac, index_rarita_schwinger, k3_descriptor,
    symbolic_index_class, OperatorKind,
};
use spinorlab::ops;
use spinorlab::poly::{monomials_of_degree, MultiPoly};
use spinorlab::solutions::{monogenic_basis, rs_structure};
use spinorlab::spectra::{
    dirac_spectrum, expected_m1_dim, hsd_multiplicity_rational, hsd_spectrum,
    monogenic_dimension_formula, rs_spectrum, Series, Sign,
};
use spinorlab::verify;
use spinorlab::Scalar;

fn finish(number: usize, name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "acceptance {number:02} {name}: PASS in {:.2}s (budget {}s)",
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn rand_scalar(rng: &mut ChaCha20Rng) -> Scalar {
    Scalar::from_parts(rng.gen_range(-3..=3), 1, rng.gen_range(-2..=2), 1)
}

fn rand_poly(rng: &mut ChaCha20Rng, m: usize, max_deg: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(m);
    for deg in 0..=max_deg {
        for mono in monomials_of_degree(m, deg) {
            if rng.gen_range(0..4) == 0 {
                p = p.add(&MultiPoly::of_term(m, mono.0.clone(), rand_scalar(rng)));
            }
        }
    }
    p
}

fn rand_spinor_field(rng: &mut ChaCha20Rng, space: &SpinorSpace, max_deg: usize) -> SpinorField {
    let comps = (0..space.dim_s())
        .map(|_| rand_poly(rng, space.m(), max_deg))
        .collect();
    SpinorField::from_components(space, comps).unwrap()
}

fn rand_one_form(rng: &mut ChaCha20Rng, space: &SpinorSpace, max_deg: usize) -> OneFormField {
    let comps = (0..space.m())
        .map(|_| rand_spinor_field(rng, space, max_deg))
        .collect();
    OneFormField::from_components(space, comps).unwrap()
}

fn rand_spinor_vec(rng: &mut ChaCha20Rng, dim: usize) -> SpinorVec {
    SpinorVec((0..dim).map(|_| rand_scalar(rng)).collect())
}

fn rand_algebraic_form(rng: &mut ChaCha20Rng, m: usize, dim: usize) -> AlgebraicOneForm {
    AlgebraicOneForm((0..m).map(|_| rand_spinor_vec(rng, dim)).collect())
}

fn index_sets(m: u8, k: usize) -> Vec<Vec<u8>> {
    fn rec(out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>, next: u8, m: u8, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in next..m {
            cur.push(j);
            rec(out, cur, j + 1, m, k);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), 0, m, k);
    out
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Splitting identities for spinor-valued one-forms, each exercised on at
/// least 100 randomized inputs across m = 3..6: μ∘ι = id, π½ + π¾ = id, both
/// projections idempotent, μ∘π¾ = 0, 𝒯* = 2ι∘δ on ker μ, π½∘∇ = ι∘D.
#[test]
fn criterion_01_splitting_identities() {
    let start = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(0xACC0_0001);
    let mut counts = [0usize; 6];
    for m in 3..=6usize {
        let sp = SpinorSpace::new(m).unwrap();
        let dim = sp.dim_s();
        // Algebraic identities: cheap, so run plenty of cases.
        for _ in 0..40 {
            let phi = rand_spinor_vec(&mut rng, dim);
            assert_eq!(sp.mu(&sp.iota(&phi)), phi, "m={m}: μ∘ι ≠ id");
            counts[0] += 1;

            let psi = rand_algebraic_form(&mut rng, m, dim);
            let half = sp.project_half(&psi);
            let three = sp.project_three_half(&psi);
            assert_eq!(half.add(&three), psi, "m={m}: π½+π¾ ≠ id");
            counts[1] += 1;
            assert_eq!(sp.project_half(&half), half, "m={m}: π½ not idempotent");
            assert_eq!(
                sp.project_three_half(&three),
                three,
                "m={m}: π¾ not idempotent"
            );
            counts[2] += 1;
            assert!(sp.mu(&three).is_zero(), "m={m}: μ∘π¾ ≠ 0");
            counts[3] += 1;
        }
        // Differential identities on random polynomial fields.
        for _ in 0..25 {
            let psi = ops::project_three_half(&sp, &rand_one_form(&mut rng, &sp, 2));
            assert_eq!(
                ops::project_half(&sp, &ops::twisted_dirac(&sp, &psi)),
                ops::twistor_adjoint(&sp, &psi),
                "m={m}: 𝒯* ≠ spin-1/2 block of D_T on ker μ"
            );
            counts[4] += 1;

            let phi = rand_spinor_field(&mut rng, &sp, 2);
            assert_eq!(
                ops::project_half(&sp, &ops::gradient(&sp, &phi)),
                ops::iota(&sp, &ops::dirac(&sp, &phi)),
                "m={m}: π½∘∇ ≠ ι∘D"
            );
            counts[5] += 1;
        }
    }
    for (i, c) in counts.iter().enumerate() {
        assert!(*c >= 100, "identity {i} ran only {c} cases");
    }
    finish(1, "splitting-identities", start, Duration::from_secs(10));
}

/// Block form of the componentwise Dirac operator on one-forms under the
/// splitting ψ = ι(φ) ⊕ Ψ, φ = μψ, Ψ = π¾ψ:
///   D_T∘ι = (2/m)·𝒯 − ((m−2)/m)·ι∘D   and   D_T|ker μ = 2ι∘δ + ℛ,
/// verified against direct evaluation on random inputs of degree ≤ 3.
#[test]
fn criterion_02_operator_block_form() {
    let start = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(0xACC0_0002);
    for m in 3..=6usize {
        let sp = SpinorSpace::new(m).unwrap();
        let mi = m as i64;
        for _ in 0..5 {
            let psi = rand_one_form(&mut rng, &sp, 3);
            let phi = ops::mu(&sp, &psi);
            let three = ops::project_three_half(&sp, &psi);

            let iota_block = ops::twistor(&sp, &phi)
                .scale(&Scalar::from_ratio(2, mi))
                .add(
                    &ops::iota(&sp, &ops::dirac(&sp, &phi))
                        .scale(&Scalar::from_ratio(-(mi - 2), mi)),
                );
            assert_eq!(
                ops::twisted_dirac(&sp, &ops::iota(&sp, &phi)),
                iota_block,
                "m={m}: blocks through ι disagree with direct D_T"
            );

            let rs = ops::rarita_schwinger(&sp, &three).unwrap();
            assert_eq!(
                ops::twisted_dirac(&sp, &three),
                ops::twistor_adjoint(&sp, &three).add(&rs),
                "m={m}: D_T ≠ 2ιδ + ℛ on ker μ"
            );

            assert_eq!(
                ops::twisted_dirac(&sp, &psi),
                iota_block.add(&ops::twistor_adjoint(&sp, &three)).add(&rs),
                "m={m}: four blocks do not re-sum to D_T"
            );
        }
    }
    finish(2, "operator-block-form", start, Duration::from_secs(30));
}

/// ∇∘Y + Y∘∇ = −D_T on spinor-valued 1- and 2-forms with polynomial
/// coefficients of degree ≤ 3.
#[test]
fn criterion_03_contraction_anticommutator() {
    let start = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(0xACC0_0003);
    for m in 3..=5usize {
        let sp = SpinorSpace::new(m).unwrap();
        for _ in 0..3 {
            for k in 1..=2usize {
                let mut omega = KFormField::zero(&sp, k);
                for idx in index_sets(m as u8, k) {
                    omega.accumulate(idx, rand_spinor_field(&mut rng, &sp, 3));
                }
                let lhs = ops::exterior_derivative(&sp, &ops::y_contract(&sp, &omega).unwrap())
                    .add(&ops::y_contract(&sp, &ops::exterior_derivative(&sp, &omega)).unwrap());
                assert_eq!(
                    lhs,
                    ops::twisted_dirac_form(&sp, &omega).neg(),
                    "m={m} k={k}: ∇Y + Y∇ ≠ -D_T"
                );
            }
        }
    }
    finish(3, "contraction-anticommutator", start, Duration::from_secs(30));
}

/// Monogenic dimension law: exact kernel rank equals 2^⌊m/2⌋·C(k+m−2, k) for
/// m = 3..6, k = 0..4; the same numbers reproduce the sphere multiplicities
/// 2^⌊n/2⌋·C(l+n−1, l) at (n, l) = (m−1, k) up to the spinor-restriction
/// factor (2 for even m, 1 for odd m).
#[test]
fn criterion_04_monogenic_dimension_law() {
    let start = Instant::now();
    for m in 3..=6usize {
        let space = SpinorSpace::new(m).unwrap();
        let n = m - 1;
        let rows = dirac_spectrum(n, 4).unwrap();
        for k in 0..=4usize {
            let mono = monogenic_basis(&space, k).unwrap();
            assert_eq!(
                BigInt::from(mono.dim()),
                monogenic_dimension_formula(m, k),
                "m={m} k={k}: kernel rank vs closed form"
            );
            let row = rows
                .iter()
                .find(|r| r.l == k && r.sign == Sign::Plus)
                .unwrap();
            let factor = if m % 2 == 0 { 2 } else { 1 };
            assert_eq!(
                BigInt::from(mono.dim()),
                row.multiplicity.clone() * int(factor),
                "m={m} k={k}: ambient kernel vs sphere multiplicity"
            );
        }
    }
    finish(4, "monogenic-dimension-law", start, Duration::from_secs(120));
}

/// Homogeneous spin-3/2 solution spaces for m ∈ {3,4,5}, k ∈ {1,2,3}:
/// D³ℒψ = 0 on a full solution basis, D_TΞψ₀ = Σ e_iψ₀⊗dx^i on the full
/// monogenic source basis, the three-part decomposition is a direct sum with
/// exact dimension accounting, and decompose→re-sum is the identity on 25
/// random solutions per cell.
#[test]
fn criterion_05_solution_space_suite() {
    let start = Instant::now();
    let mut rng = ChaCha20Rng::seed_from_u64(0xACC0_0005);
    for m in 3..=5usize {
        let space = SpinorSpace::new(m).unwrap();
        for k in 1..=3usize {
            let s = rs_structure(&space, k).unwrap();
            for psi in &s.space.basis {
                let l = ops::l_map(&space, psi);
                let d3 = ops::dirac(&space, &ops::dirac(&space, &ops::dirac(&space, &l)));
                assert!(d3.is_zero(), "m={m} k={k}: D³ℒψ ≠ 0 on a basis solution");
            }

            let source = monogenic_basis(&space, k - 1).unwrap();
            for psi0 in &source.basis {
                let xi = ops::xi_map(&space, psi0).unwrap();
                let mut expected = OneFormField::zero(&space);
                for i in 0..m {
                    expected.set_component(i, psi0.clifford(&space, i).unwrap());
                }
                assert_eq!(
                    ops::twisted_dirac(&space, &xi),
                    expected,
                    "m={m} k={k}: D_TΞψ₀ ≠ Σ e_iψ₀⊗dx^i"
                );
            }

            let report = s.verify_direct_sum();
            assert!(report.is_direct_sum, "m={m} k={k}: not a direct sum");
            assert!(
                report.spans_solution_space,
                "m={m} k={k}: decomposition does not span"
            );
            assert_eq!(
                BigInt::from(s.m2_basis.len()),
                monogenic_dimension_formula(m, k + 1),
                "m={m} k={k}: twistor-part dimension"
            );
            assert_eq!(
                BigInt::from(s.m3_basis.len()),
                monogenic_dimension_formula(m, k - 1),
                "m={m} k={k}: embedded-part dimension"
            );

            for _ in 0..25 {
                let mut psi = OneFormField::zero(&space);
                for b in &s.space.basis {
                    psi = psi.add(&b.scale(&rand_scalar(&mut rng)));
                }
                let dec = s.decompose(&space, &psi).unwrap();
                assert!(
                    dec.verify(&space, &psi),
                    "m={m} k={k}: decompose→re-sum failed"
                );
            }
        }
    }
    finish(5, "solution-space-suite", start, Duration::from_secs(300));
}

/// Both closed-form multiplicity families are positive integers across
/// n ≤ 10, 0 < j < n/2, 1 ≤ l ≤ 6, and the specialized spin-3/2 table
/// coincides with the general family at j = 1.
#[test]
fn criterion_06_multiplicity_integrality() {
    let start = Instant::now();
    for n in 3..=10usize {
        for j in 1..=5usize {
            if 2 * j >= n {
                continue;
            }
            for l in 1..=6usize {
                for series in [Series::Mu1, Series::Mu2] {
                    let mult = hsd_multiplicity_rational(n, j, l, series);
                    assert!(
                        mult.denom().is_one(),
                        "n={n} j={j} l={l} {series:?}: multiplicity {mult} not an integer"
                    );
                    assert!(
                        mult.numer() > &int(0),
                        "n={n} j={j} l={l} {series:?}: multiplicity {mult} not positive"
                    );
                }
            }
            // The constructor enforces the same integrality on every row.
            hsd_spectrum(n, j, 6).unwrap();
        }
        assert_eq!(
            rs_spectrum(n, 6).unwrap(),
            hsd_spectrum(n, 1, 6).unwrap(),
            "n={n}: specialized spin-3/2 table ≠ general family at j=1"
        );
    }
    finish(6, "multiplicity-integrality", start, Duration::from_secs(5));
}

/// Weyl dimension formula cross-check: the representation-theoretic dimension
/// of the radially-trivial part equals its brute-force kernel dimension for
/// every cell of criterion 5.
#[test]
fn criterion_07_weyl_crosscheck() {
    let start = Instant::now();
    for m in 3..=5usize {
        let space = SpinorSpace::new(m).unwrap();
        for k in 1..=3usize {
            let s = rs_structure(&space, k).unwrap();
            assert_eq!(
                BigInt::from(s.m1_basis.len()),
                expected_m1_dim(m, k).unwrap(),
                "m={m} k={k}: Weyl dimension vs brute-force rank"
            );
        }
    }
    finish(7, "weyl-crosscheck", start, Duration::from_secs(60));
}

/// Dimension-4 indices: the spin-3/2 index class equals −19 times the Dirac
/// index class as polynomials, and the K3-type descriptor evaluates to
/// (2, −38).
#[test]
fn criterion_08_dim4_index_ratio() {
    let start = Instant::now();
    let dirac4 = symbolic_index_class(4, OperatorKind::Dirac).unwrap();
    let rs4 = symbolic_index_class(4, OperatorKind::HigherSpin(1)).unwrap();
    assert_eq!(
        rs4,
        dirac4.scale(&BigRational::from_integer(int(-19))),
        "spin-3/2 class is not -19 × Dirac class"
    );
    let k3 = k3_descriptor();
    let d = index_dirac(&k3).unwrap();
    assert_eq!(d.index, BigRational::from_integer(int(2)));
    assert!(d.is_integer);
    let r = index_rarita_schwinger(&k3).unwrap();
    assert_eq!(r.index, BigRational::from_integer(int(-38)));
    assert!(r.is_integer);
    finish(8, "dim4-index-ratio", start, Duration::from_secs(1));
}

/// Dimension-8 audit: the degree-8 coefficients of Â are (7/5760, −4/5760);
/// the spin-3/2 integrand's p₂ coefficient is −996/5760; the p₁² coefficient
/// is recomputed by two independent routes whose agreement is the acceptance
/// condition, and the report carries the printed 543/5760 beside the engine
/// value with a machine-readable flag.
#[test]
fn criterion_09_dim8_audit() {
    let start = Instant::now();
    let ahat8 = ahat_series(8).unwrap();
    let num = |a: i64, b: i64| BigRational::new(int(a), int(b));
    assert_eq!(ahat8.coefficient(&[2]), num(7, 5760));
    assert_eq!(ahat8.coefficient(&[0, 1]), num(-4, 5760));

    let audit = dim8_audit().unwrap();
    assert_eq!(audit.engine_p2, num(-996, 5760), "p₂ coefficient");
    assert!(
        audit.routes_agree,
        "the two engine routes disagree: {} vs {}",
        audit.engine_class, audit.product_route_class
    );
    assert_eq!(audit.printed_p1sq, num(543, 5760), "printed value recorded");
    println!(
        "acceptance 09 note: engine p1^2 coefficient {} vs printed {} (agreement flag {})",
        audit.engine_p1sq, audit.printed_p1sq, audit.p1sq_matches_printed
    );
    finish(9, "dim8-audit", start, Duration::from_secs(1));
}

/// Two full verification runs produce byte-identical reports.
#[test]
fn criterion_10_deterministic_verify() {
    let start = Instant::now();
    let first = verify::run(None, 1).unwrap();
    assert!(first.all_passed(), "verification battery failed:\n{}", first.render_text());
    let second = verify::run(None, 1).unwrap();
    assert_eq!(first.render_text(), second.render_text());
    assert_eq!(first.to_json().to_string(), second.to_json().to_string());
    finish(10, "deterministic-verify", start, Duration::from_secs(300));
}
