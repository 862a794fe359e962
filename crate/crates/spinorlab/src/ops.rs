//! The first-order operators on polynomial spinor fields and spinor-valued
//! forms.
//!
//! With `∂_i = ∂/∂x_i` and the Clifford convention `e_i² = -1`:
//!
//! * `D φ = Σ e_i ∂_i φ` — the Dirac operator, with `D² = -Δ`;
//! * `∇ φ = Σ ∂_i φ ⊗ dx^i` — the gradient, splitting as `∇ = ι∘D + 𝒯`;
//! * `D_T` — the Dirac operator applied componentwise to a form ("twisted"
//!   by the cotangent factor, which the flat connection leaves constant);
//! * `𝒯 φ = π_{3/2} ∇ φ`, components `∂_j φ + (1/m) e_j D φ` — the twistor
//!   operator;
//! * `δ Ψ = -Σ ∂_i ψ_i` — the divergence, with `𝒯* = 2 ι∘δ` appearing as the
//!   off-diagonal block of `D_T`;
//! * `ℛ Ψ = π_{3/2} D_T Ψ` on forms with `μΨ = 0` — the Rarita-Schwinger
//!   operator, components `D ψ_i + (1/m) e_i Σ_k e_k D ψ_k`;
//! * `Y ω = -Σ e_i · (e_i ⌟ ω)` — the pointwise Clifford contraction on
//!   `k`-forms, satisfying `∇∘Y + Y∘∇ = -D_T`;
//! * `ℒ Ψ = Σ x_i ψ_i` — pairing a one-form field with the position vector;
//! * `Ξ` — the embedding of degree-`(k-1)` monogenics into degree-`k`
//!   Rarita-Schwinger solutions, normalized so that `D_T Ξ(ψ₀) = Σ e_i ψ₀ ⊗ dx^i`.

use crate::clifford::SpinorSpace;
use crate::fields::{KFormField, OneFormField, SpinorField};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Dirac operator `D φ = Σ e_i ∂_i φ`.
pub fn dirac(space: &SpinorSpace, phi: &SpinorField) -> SpinorField {
    let mut out = SpinorField::zero(space);
    for i in 0..space.m() {
        let d = phi.partial(i).expect("index in range");
        out = out.add(&d.clifford(space, i).expect("index in range"));
    }
    out
}

/// Componentwise Laplacian `Δ φ = Σ ∂_i² φ`.
pub fn laplacian(space: &SpinorSpace, phi: &SpinorField) -> SpinorField {
    let mut out = SpinorField::zero(space);
    for i in 0..space.m() {
        let dd = phi
            .partial(i)
            .and_then(|d| d.partial(i))
            .expect("index in range");
        out = out.add(&dd);
    }
    out
}

/// Gradient `∇ φ = Σ ∂_i φ ⊗ dx^i`.
pub fn gradient(space: &SpinorSpace, phi: &SpinorField) -> OneFormField {
    let comps = (0..space.m())
        .map(|i| phi.partial(i).expect("index in range"))
        .collect();
    OneFormField::from_components(space, comps).expect("component count fits")
}

/// Euler (radial) operator `Σ x_i ∂_i φ`; multiplies a homogeneous degree-`k`
/// field by `k`.
pub fn euler(space: &SpinorSpace, phi: &SpinorField) -> SpinorField {
    let mut out = SpinorField::zero(space);
    for i in 0..space.m() {
        let xi = MultiPoly::variable(space.m(), i);
        out = out.add(&phi.partial(i).expect("index in range").poly_scale(&xi));
    }
    out
}

/// Clifford contraction `μ(Σ ψ_i ⊗ dx^i) = Σ e_i ψ_i` on fields.
pub fn mu(space: &SpinorSpace, psi: &OneFormField) -> SpinorField {
    let mut out = SpinorField::zero(space);
    for i in 0..space.m() {
        out = out.add(&psi.component(i).clifford(space, i).expect("index in range"));
    }
    out
}

/// `ι(φ) = -(1/m) Σ e_i φ ⊗ dx^i`, the right inverse of [`mu`].
pub fn iota(space: &SpinorSpace, phi: &SpinorField) -> OneFormField {
    let c = Scalar::from_ratio(-1, space.m() as i64);
    let comps = (0..space.m())
        .map(|i| phi.clifford(space, i).expect("index in range").scale(&c))
        .collect();
    OneFormField::from_components(space, comps).expect("component count fits")
}

/// Projection of a one-form field onto its spin-1/2 part: `π_{1/2} = ι∘μ`.
pub fn project_half(space: &SpinorSpace, psi: &OneFormField) -> OneFormField {
    iota(space, &mu(space, psi))
}

/// Projection onto the spin-3/2 part: `π_{3/2}(Ψ)_j = ψ_j + (1/m) e_j μ(Ψ)`.
pub fn project_three_half(space: &SpinorSpace, psi: &OneFormField) -> OneFormField {
    let mu_psi = mu(space, psi);
    let c = Scalar::from_ratio(1, space.m() as i64);
    let comps = (0..space.m())
        .map(|j| {
            let e_j_mu = mu_psi.clifford(space, j).expect("index in range");
            psi.component(j).add(&e_j_mu.scale(&c))
        })
        .collect();
    OneFormField::from_components(space, comps).expect("component count fits")
}

/// Twisted Dirac operator: `D` applied to each component of a one-form field.
pub fn twisted_dirac(space: &SpinorSpace, psi: &OneFormField) -> OneFormField {
    let comps = psi
        .components()
        .iter()
        .map(|f| dirac(space, f))
        .collect();
    OneFormField::from_components(space, comps).expect("component count fits")
}

/// Twistor operator `𝒯 = π_{3/2} ∘ ∇`, components `∂_j φ + (1/m) e_j D φ`.
pub fn twistor(space: &SpinorSpace, phi: &SpinorField) -> OneFormField {
    let d_phi = dirac(space, phi);
    let c = Scalar::from_ratio(1, space.m() as i64);
    let comps = (0..space.m())
        .map(|j| {
            let grad_j = phi.partial(j).expect("index in range");
            let e_j_d = d_phi.clifford(space, j).expect("index in range");
            grad_j.add(&e_j_d.scale(&c))
        })
        .collect();
    OneFormField::from_components(space, comps).expect("component count fits")
}

/// Divergence `δ(Σ ψ_i ⊗ dx^i) = -Σ ∂_i ψ_i`.
pub fn delta_div(space: &SpinorSpace, psi: &OneFormField) -> SpinorField {
    let mut out = SpinorField::zero(space);
    for i in 0..space.m() {
        out = out.sub(&psi.component(i).partial(i).expect("index in range"));
    }
    out
}

/// `𝒯* = 2 ι∘δ`: on forms with `μΨ = 0` this is the spin-1/2 block of `D_T`,
/// i.e. `π_{1/2} D_T Ψ = 𝒯*(Ψ)`.
pub fn twistor_adjoint(space: &SpinorSpace, psi: &OneFormField) -> OneFormField {
    iota(space, &delta_div(space, psi)).scale(&Scalar::from_int(2))
}

/// Rarita-Schwinger operator `ℛ Ψ = π_{3/2} D_T Ψ`, defined on one-form fields
/// in the kernel of `μ`; components `D ψ_i + (1/m) e_i Σ_k e_k D ψ_k`.
///
/// Errors if `μΨ ≠ 0` — the operator does not silently project its input.
pub fn rarita_schwinger(space: &SpinorSpace, psi: &OneFormField) -> Result<OneFormField> {
    if !mu(space, psi).is_zero() {
        return Err(Error::Precondition(
            "Rarita-Schwinger operator needs μ(Ψ) = 0".into(),
        ));
    }
    let out = project_three_half(space, &twisted_dirac(space, psi));
    Ok(out)
}

/// `ℒ(Σ ψ_i ⊗ dx^i) = Σ x_i ψ_i`: pairs a one-form field with the position
/// vector. On the three summands of a degree-`k` Rarita-Schwinger solution it
/// acts as `0`, `(k+1)·(monogenic)` and `½‖x‖²·(monogenic)` respectively,
/// which is what makes it the splitting invariant.
pub fn l_map(space: &SpinorSpace, psi: &OneFormField) -> SpinorField {
    let mut out = SpinorField::zero(space);
    for i in 0..space.m() {
        let xi = MultiPoly::variable(space.m(), i);
        out = out.add(&psi.component(i).poly_scale(&xi));
    }
    out
}

/// Embedding of monogenics into Rarita-Schwinger solutions.
///
/// For `ψ₀` homogeneous of degree `k-1` with `Dψ₀ = 0`,
///
/// ```text
/// Ξ(ψ₀) = (1 / (2(m+k-2))) · ( ‖x‖² 𝒯(ψ₀)
///                             + m Σ_j x_j ψ₀ ⊗ dx^j
///                             + Σ_j e_j (x·ψ₀) ⊗ dx^j )
/// ```
///
/// where `x·ψ₀ = Σ x_i e_i ψ₀`. The coefficients are forced: admissibility
/// (`μ∘Ξ = 0`) fixes the ratio of the two algebraic terms, and the
/// normalization makes `D_T Ξ(ψ₀) = Σ e_i ψ₀ ⊗ dx^i` hold exactly — the test
/// suite pins that identity, along with `μΞ = 0`, `ℒΞ(ψ₀) = ½‖x‖²ψ₀` and
/// `D³(ℒΞψ₀) = 0`.
///
/// Errors unless `ψ₀` is homogeneous and monogenic. `Ξ(0) = 0`.
pub fn xi_map(space: &SpinorSpace, psi0: &SpinorField) -> Result<OneFormField> {
    if psi0.is_zero() {
        return Ok(OneFormField::zero(space));
    }
    let Some(deg) = psi0.homogeneous_degree() else {
        return Err(Error::Precondition(
            "Ξ needs a homogeneous input field".into(),
        ));
    };
    if !dirac(space, psi0).is_zero() {
        return Err(Error::Precondition("Ξ needs a monogenic input field".into()));
    }
    let m = space.m();
    let k = deg + 1; // output degree
    let norm = Scalar::from_ratio(1, 2 * (m + k - 2) as i64);

    let r2 = MultiPoly::norm_squared(m);
    let t = twistor(space, psi0);
    let x_psi = psi0.clifford_x(space);
    let comps = (0..m)
        .map(|j| {
            let xj = MultiPoly::variable(m, j);
            let term1 = t.component(j).poly_scale(&r2);
            let term2 = psi0.poly_scale(&xj).scale(&Scalar::from_int(m as i64));
            let term3 = x_psi.clifford(space, j).expect("index in range");
            term1.add(&term2).add(&term3).scale(&norm)
        })
        .collect();
    let out = OneFormField::from_components(space, comps).expect("component count fits");
    Ok(out)
}

/// Pointwise Clifford contraction on `k`-forms:
/// `Y(ω ⊗ s) = -Σ_i (e_i ⌟ ω) ⊗ e_i s`, where
/// `e_i ⌟ dx^{j_1...j_k} = Σ_{a: j_a = i} (-1)^{a-1} dx^{...ĵ_a...}`.
///
/// Lowers form degree by one; errors on 0-forms.
pub fn y_contract(space: &SpinorSpace, omega: &KFormField) -> Result<KFormField> {
    if omega.degree() == 0 {
        return Err(Error::Precondition(
            "Y contraction needs a form of degree ≥ 1".into(),
        ));
    }
    let mut out = KFormField::zero(space, omega.degree() - 1);
    for (idx, field) in omega.components() {
        for (a, &i) in idx.iter().enumerate() {
            // Contract slot a (index i), sign (-1)^a for zero-based a.
            let mut reduced = idx.clone();
            reduced.remove(a);
            let mut contrib = field.clifford(space, i as usize).expect("index in range");
            if a % 2 == 1 {
                contrib = contrib.neg();
            }
            out.accumulate(reduced, contrib.neg()); // overall minus sign of Y
        }
    }
    Ok(out)
}

/// Covariant exterior derivative on spinor-valued `k`-forms (the connection is
/// flat, so this is `Σ_i ∂_i(·) dx^i ∧ ·` with the usual wedge signs). Raises
/// form degree by one; the result is zero for `k = m`.
pub fn exterior_derivative(space: &SpinorSpace, omega: &KFormField) -> KFormField {
    let degree = omega.degree();
    assert!(degree < space.m(), "derivative of a top-degree form");
    let mut out = KFormField::zero(space, degree + 1);
    for (idx, field) in omega.components() {
        for i in 0..space.m() as u8 {
            if idx.contains(&i) {
                continue;
            }
            let pos = idx.iter().filter(|&&j| j < i).count();
            let mut extended = idx.clone();
            extended.insert(pos, i);
            let mut contrib = field.partial(i as usize).expect("index in range");
            if pos % 2 == 1 {
                contrib = contrib.neg();
            }
            out.accumulate(extended, contrib);
        }
    }
    out
}

/// Componentwise Dirac operator on `k`-forms.
pub fn twisted_dirac_form(space: &SpinorSpace, omega: &KFormField) -> KFormField {
    let mut out = KFormField::zero(space, omega.degree());
    for (idx, field) in omega.components() {
        out.accumulate(idx.clone(), dirac(space, field));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::SpinorSpace;
    use crate::fields::SpinorFieldBasis;

    fn space(m: usize) -> SpinorSpace {
        SpinorSpace::new(m).unwrap()
    }

    /// Deterministic sample field: small mixed-degree polynomial components.
    fn sample_field(space: &SpinorSpace, max_deg: usize, salt: i64) -> SpinorField {
        let m = space.m();
        let mut comps = Vec::new();
        for a in 0..space.dim_s() {
            let mut p = MultiPoly::zero(m);
            let mut counter = salt + a as i64;
            for k in 0..=max_deg {
                for mono in crate::poly::monomials_of_degree(m, k) {
                    counter = (counter * 31 + 7) % 23;
                    let c = counter - 11; // range -11..=11, frequently nonzero
                    if c % 3 != 0 {
                        p = p.add(&MultiPoly::of_term(
                            m,
                            mono.0.clone(),
                            Scalar::from_parts(c, 1, (c + 4) % 5, 2),
                        ));
                    }
                }
            }
            comps.push(p);
        }
        SpinorField::from_components(space, comps).unwrap()
    }

    fn sample_one_form(space: &SpinorSpace, max_deg: usize, salt: i64) -> OneFormField {
        let comps = (0..space.m())
            .map(|i| sample_field(space, max_deg, salt + 13 * i as i64))
            .collect();
        OneFormField::from_components(space, comps).unwrap()
    }

    #[test]
    fn dirac_oracle_values() {
        for m in 3..=5 {
            let sp = space(m);
            // D of a constant spinor is 0.
            let s = SpinorField::basis_spinor(&sp, 0);
            assert!(dirac(&sp, &s).is_zero());
            // D(Σ_i x_i e_i s) = Σ_j e_j e_j s = -m·s.
            let xs = s.clifford_x(&sp);
            assert_eq!(dirac(&sp, &xs), s.scale(&Scalar::from_int(-(m as i64))));
            // D(x1 e_2 s + x2 e_1 s) = e_1e_2 s + e_2e_1 s = 0.
            let x1 = MultiPoly::variable(m, 0);
            let x2 = MultiPoly::variable(m, 1);
            let f = s
                .clifford(&sp, 1)
                .unwrap()
                .poly_scale(&x1)
                .add(&s.clifford(&sp, 0).unwrap().poly_scale(&x2));
            assert!(dirac(&sp, &f).is_zero());
        }
    }

    #[test]
    fn dirac_squares_to_minus_laplacian() {
        for m in 3..=5 {
            let sp = space(m);
            let phi = sample_field(&sp, 3, 2);
            let dd = dirac(&sp, &dirac(&sp, &phi));
            assert_eq!(dd, laplacian(&sp, &phi).neg());
        }
    }

    #[test]
    fn gradient_contracts_to_dirac() {
        for m in 3..=5 {
            let sp = space(m);
            let phi = sample_field(&sp, 3, 5);
            assert_eq!(mu(&sp, &gradient(&sp, &phi)), dirac(&sp, &phi));
        }
    }

    #[test]
    fn gradient_splits_into_iota_dirac_plus_twistor() {
        for m in 3..=5 {
            let sp = space(m);
            let phi = sample_field(&sp, 3, 9);
            let lhs = gradient(&sp, &phi);
            let rhs = iota(&sp, &dirac(&sp, &phi)).add(&twistor(&sp, &phi));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn twistor_lands_in_kernel_of_mu() {
        for m in 3..=5 {
            let sp = space(m);
            let phi = sample_field(&sp, 3, 4);
            assert!(mu(&sp, &twistor(&sp, &phi)).is_zero());
        }
    }

    #[test]
    fn divergence_of_gradient_is_minus_laplacian() {
        let sp = space(4);
        let phi = sample_field(&sp, 3, 8);
        assert_eq!(delta_div(&sp, &gradient(&sp, &phi)), laplacian(&sp, &phi).neg());
    }

    #[test]
    fn rarita_schwinger_requires_admissible_input() {
        let sp = space(3);
        let s = SpinorField::basis_spinor(&sp, 0);
        let bad = iota(&sp, &s); // μ(ι(s)) = s ≠ 0
        assert!(matches!(
            rarita_schwinger(&sp, &bad),
            Err(crate::Error::Precondition(_))
        ));
        let good = project_three_half(&sp, &sample_one_form(&sp, 2, 3));
        let r = rarita_schwinger(&sp, &good).unwrap();
        assert_eq!(r, project_three_half(&sp, &twisted_dirac(&sp, &good)));
    }

    #[test]
    fn rarita_schwinger_intertwines_twistor() {
        // ℛ(𝒯φ) = ((m-2)/m)·𝒯(Dφ); in particular M² = 𝒯(monogenics) ⊂ Ker ℛ.
        for m in 3..=5 {
            let sp = space(m);
            let phi = sample_field(&sp, 3, 6);
            let lhs = rarita_schwinger(&sp, &twistor(&sp, &phi)).unwrap();
            let rhs = twistor(&sp, &dirac(&sp, &phi))
                .scale(&Scalar::from_ratio(m as i64 - 2, m as i64));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn twistor_adjoint_is_the_half_block_of_twisted_dirac() {
        for m in 3..=5 {
            let sp = space(m);
            let psi3 = project_three_half(&sp, &sample_one_form(&sp, 3, 7));
            let lhs = project_half(&sp, &twisted_dirac(&sp, &psi3));
            assert_eq!(lhs, twistor_adjoint(&sp, &psi3));
        }
    }

    #[test]
    fn xi_hand_value_at_m3() {
        // m = 3, ψ₀ = s constant: Ξ(s)_j = (1/4)(3 x_j s + e_j x·s),
        // D_T Ξ(s) = Σ e_j s ⊗ dx^j, μ Ξ(s) = 0, ℒ Ξ(s) = ½‖x‖² s.
        let sp = space(3);
        let s = SpinorField::basis_spinor(&sp, 0);
        let xi = xi_map(&sp, &s).unwrap();
        let quarter = Scalar::from_ratio(1, 4);
        let xs = s.clifford_x(&sp);
        for j in 0..3 {
            let xj = MultiPoly::variable(3, j);
            let expect = s
                .poly_scale(&xj)
                .scale(&Scalar::from_int(3))
                .add(&xs.clifford(&sp, j).unwrap())
                .scale(&quarter);
            assert_eq!(*xi.component(j), expect);
        }
        let dt = twisted_dirac(&sp, &xi);
        for j in 0..3 {
            assert_eq!(*dt.component(j), s.clifford(&sp, j).unwrap());
        }
        assert!(mu(&sp, &xi).is_zero());
        let half_r2 = MultiPoly::norm_squared(3).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(l_map(&sp, &xi), s.poly_scale(&half_r2));
    }

    #[test]
    fn xi_rejects_bad_inputs() {
        let sp = space(3);
        // Not monogenic: φ = x1·e_1 s has Dφ = e_1e_1 s = -s ≠ 0.
        let s = SpinorField::basis_spinor(&sp, 0);
        let x1 = MultiPoly::variable(3, 0);
        let bad = s.clifford(&sp, 0).unwrap().poly_scale(&x1);
        assert!(matches!(xi_map(&sp, &bad), Err(crate::Error::Precondition(_))));
        // Inhomogeneous but monogenic inputs are rejected too:
        // s + x1 e_2 s + x2 e_1 s is killed by D but mixes degrees 0 and 1.
        let x2 = MultiPoly::variable(3, 1);
        let mixed = s
            .add(&s.clifford(&sp, 1).unwrap().poly_scale(&x1))
            .add(&s.clifford(&sp, 0).unwrap().poly_scale(&x2));
        assert!(dirac(&sp, &mixed).is_zero());
        assert!(matches!(xi_map(&sp, &mixed), Err(crate::Error::Precondition(_))));
        // Ξ(0) = 0.
        assert!(xi_map(&sp, &SpinorField::zero(&sp)).unwrap().is_zero());
    }

    #[test]
    fn xi_certificates_on_degree_one_monogenics() {
        // For every ψ₀ in a basis of degree-1 monogenics: ℒΞψ₀ = ½‖x‖²ψ₀,
        // D(ℒΞψ₀) = x·ψ₀, D²(ℒΞψ₀) = -(m+2)ψ₀... wait: degree k-1 = 1, so
        // D²ℒ = -(m + 2·1)ψ₀ and D³ℒ = 0.
        for m in 3..=4 {
            let sp = space(m);
            let basis = SpinorFieldBasis::new(&sp, 1);
            let d_matrix: Vec<Vec<Scalar>> = (0..basis.dim())
                .map(|i| {
                    let img = dirac(&sp, &basis.field(&sp, i));
                    SpinorFieldBasis::new(&sp, 0).coords(&img).unwrap()
                })
                .collect();
            let mat = crate::matrix::Matrix::from_columns(sp.dim_s(), &d_matrix);
            for v in mat.kernel_basis() {
                let psi0 = basis.from_coords(&sp, &v);
                let xi = xi_map(&sp, &psi0).unwrap();
                let half_r2 = MultiPoly::norm_squared(m).scale(&Scalar::from_ratio(1, 2));
                let l = l_map(&sp, &xi);
                assert_eq!(l, psi0.poly_scale(&half_r2));
                let dl = dirac(&sp, &l);
                assert_eq!(dl, psi0.clifford_x(&sp));
                let ddl = dirac(&sp, &dl);
                assert_eq!(ddl, psi0.scale(&Scalar::from_int(-(m as i64) - 2)));
                assert!(dirac(&sp, &ddl).is_zero());
            }
        }
    }

    #[test]
    fn y_on_one_forms_is_minus_mu() {
        for m in 3..=4 {
            let sp = space(m);
            let psi = sample_one_form(&sp, 2, 11);
            let k1 = KFormField::from_one_form(&sp, &psi);
            let y = y_contract(&sp, &k1).unwrap();
            assert_eq!(y.degree(), 0);
            assert_eq!(y.component(&sp, &[]), mu(&sp, &psi).neg());
        }
    }

    #[test]
    fn y_rejects_zero_forms() {
        let sp = space(3);
        let zero_form = KFormField::zero(&sp, 0);
        assert!(matches!(
            y_contract(&sp, &zero_form),
            Err(crate::Error::Precondition(_))
        ));
    }

    #[test]
    fn y_anticommutes_with_gradient_to_twisted_dirac() {
        // ∇∘Y + Y∘∇ = -D_T on spinor-valued k-forms, k = 1, 2.
        for m in 3..=4 {
            let sp = space(m);
            for k in 1..=2usize {
                let mut omega = KFormField::zero(&sp, k);
                // Fill every index set with a distinct sample field.
                let idxs: Vec<Vec<u8>> = combinations(m as u8, k);
                for (n, idx) in idxs.iter().enumerate() {
                    omega.accumulate(idx.clone(), sample_field(&sp, 3, 17 + n as i64));
                }
                let lhs = exterior_derivative(&sp, &y_contract(&sp, &omega).unwrap())
                    .add(&y_contract(&sp, &exterior_derivative(&sp, &omega)).unwrap());
                assert_eq!(lhs, twisted_dirac_form(&sp, &omega).neg());
            }
        }
    }

    #[test]
    fn euler_measures_homogeneity() {
        let sp = space(3);
        let basis = SpinorFieldBasis::new(&sp, 2);
        let f = basis.field(&sp, 1);
        assert_eq!(euler(&sp, &f), f.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn operators_shift_homogeneity_degree_as_documented() {
        let sp = space(4);
        let basis = SpinorFieldBasis::new(&sp, 3);
        let phi = basis.field(&sp, 7);
        assert!(dirac(&sp, &phi).is_homogeneous_of(2));
        assert!(gradient(&sp, &phi).is_homogeneous_of(2));
        assert!(twistor(&sp, &phi).is_homogeneous_of(2));
        let psi = sample_one_form(&sp, 2, 19);
        let psi2 = {
            // homogeneous degree-2 part of a sample form, built from scratch
            let comps = (0..4)
                .map(|i| {
                    let f = psi.component(i);
                    let comps = f
                        .components()
                        .iter()
                        .map(|p| p.homogeneous_part(2))
                        .collect();
                    SpinorField::from_components(&sp, comps).unwrap()
                })
                .collect();
            OneFormField::from_components(&sp, comps).unwrap()
        };
        assert!(delta_div(&sp, &psi2).is_homogeneous_of(1));
        assert!(l_map(&sp, &psi2).is_homogeneous_of(3));
        assert!(twisted_dirac(&sp, &psi2).is_homogeneous_of(1));
    }

    fn combinations(m: u8, k: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
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
        rec(&mut out, &mut cur, 0, m, k);
        out
    }
}
