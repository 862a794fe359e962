//! Complex spinor representations of Euclidean Clifford algebras, and the
//! algebraic structure of spinor-valued one-forms.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * generators satisfy `e_i e_j + e_j e_i = -2 δ_ij`, so `e_i² = -1`;
//! * the spinor space `S` has dimension `2^⌊m/2⌋` over `ℚ(i)`;
//! * generator matrices come from the standard recursive Pauli construction,
//!   so all entries lie in `{0, ±1, ±i}` and every computation is exact.
//!
//! A spinor-valued one-form `Ψ = Σ ψ_i ⊗ ε^i` decomposes under the algebraic
//! maps implemented here:
//!
//! * `μ(Ψ) = Σ e_i ψ_i` (Clifford contraction onto `S`),
//! * `ι(σ) = -(1/m) Σ e_i σ ⊗ ε^i` (the splitting with `μ∘ι = id`),
//! * `π_{1/2} = ι∘μ` and `π_{3/2} = id - ι∘μ`, the projections onto the
//!   spin-1/2 part and its complement. The image of `π_{3/2}` — one-forms with
//!   `μΨ = 0` — is the fiber on which the Rarita-Schwinger operator acts; it
//!   has dimension `(m-1)·2^⌊m/2⌋`.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// A spinor: a coordinate vector in `S ≅ ℚ(i)^{2^⌊m/2⌋}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorVec(pub Vec<Scalar>);

impl SpinorVec {
    pub fn zero(dim: usize) -> Self {
        SpinorVec(vec![Scalar::zero(); dim])
    }

    /// Standard basis spinor `s_a`.
    pub fn basis(dim: usize, a: usize) -> Self {
        assert!(a < dim);
        let mut v = SpinorVec::zero(dim);
        v.0[a] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &SpinorVec) -> SpinorVec {
        assert_eq!(self.dim(), other.dim(), "spinor dimension mismatch");
        SpinorVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &SpinorVec) -> SpinorVec {
        assert_eq!(self.dim(), other.dim(), "spinor dimension mismatch");
        SpinorVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> SpinorVec {
        SpinorVec(self.0.iter().map(|a| a * c).collect())
    }
}

/// A spinor-valued one-form with constant coefficients: `Σ ψ_i ⊗ ε^i`,
/// stored as its `m` spinor components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicOneForm(pub Vec<SpinorVec>);

impl AlgebraicOneForm {
    pub fn zero(m: usize, dim_s: usize) -> Self {
        AlgebraicOneForm(vec![SpinorVec::zero(dim_s); m])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(SpinorVec::is_zero)
    }

    pub fn add(&self, other: &AlgebraicOneForm) -> AlgebraicOneForm {
        assert_eq!(self.0.len(), other.0.len(), "form dimension mismatch");
        AlgebraicOneForm(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &AlgebraicOneForm) -> AlgebraicOneForm {
        assert_eq!(self.0.len(), other.0.len(), "form dimension mismatch");
        AlgebraicOneForm(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraicOneForm {
        AlgebraicOneForm(self.0.iter().map(|v| v.scale(c)).collect())
    }
}

/// The spinor representation of the Clifford algebra of `ℝ^m`.
///
/// Holds the generator matrices (the action of `e_1, ..., e_m` on `S`), their
/// sparse nonzero patterns, and — for even `m` — the chirality involution that
/// splits `S` into half-spinor subspaces.
pub struct SpinorSpace {
    m: usize,
    dim_s: usize,
    gammas: Vec<Matrix>,
    /// Sparse view of each generator: `(row, col, value)` triples. The
    /// recursive construction yields monomial matrices, so each generator has
    /// exactly one nonzero entry per row.
    gamma_entries: Vec<Vec<(usize, usize, Scalar)>>,
    chirality: Option<Matrix>,
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let av = a.get(i, j);
            if av.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let bv = b.get(k, l);
                    if !bv.is_zero() {
                        out.set(i * b.rows() + k, j * b.cols() + l, av * bv);
                    }
                }
            }
        }
    }
    out
}

fn pauli() -> [Matrix; 3] {
    let o = Scalar::zero;
    let s1 = Matrix::from_rows(vec![
        vec![o(), Scalar::one()],
        vec![Scalar::one(), o()],
    ]);
    let s2 = Matrix::from_rows(vec![
        vec![o(), -Scalar::i()],
        vec![Scalar::i(), o()],
    ]);
    let s3 = Matrix::from_rows(vec![
        vec![Scalar::one(), o()],
        vec![o(), -Scalar::one()],
    ]);
    [s1, s2, s3]
}

/// Hermitian anticommuting generators squaring to `+1` in even dimension
/// `2k`, built by the tensor recursion
/// `Γ_j ↦ Γ_j ⊗ σ3`, `Γ_{2k+1} = I ⊗ σ1`, `Γ_{2k+2} = I ⊗ σ2`.
fn hermitian_gammas(even_m: usize) -> Vec<Matrix> {
    debug_assert!(even_m % 2 == 0);
    let [s1, s2, s3] = pauli();
    let mut gammas: Vec<Matrix> = Vec::new();
    let mut dim = 1usize;
    while gammas.len() < even_m {
        let id = Matrix::identity(dim);
        let mut next: Vec<Matrix> = gammas.iter().map(|g| kron(g, &s3)).collect();
        next.push(kron(&id, &s1));
        next.push(kron(&id, &s2));
        gammas = next;
        dim *= 2;
    }
    gammas
}

/// `(-i)^k Γ_1 ⋯ Γ_{2k}`: squares to `+1`, anticommutes with each `Γ_j`.
fn hermitian_chirality(gammas: &[Matrix]) -> Matrix {
    let k = gammas.len() / 2;
    let dim = gammas[0].rows();
    let mut prod = Matrix::identity(dim);
    for g in gammas {
        prod = prod.mul(g);
    }
    let mut phase = Scalar::one();
    for _ in 0..k {
        phase = &phase * &(-Scalar::i());
    }
    prod.scale(&phase)
}

impl SpinorSpace {
    /// Builds the spinor representation of `Cl(ℝ^m)`.
    ///
    /// `m ∈ [2, 8]` is accepted; the analysis modules all require `m ≥ 3` and
    /// enforce their own tighter caps, but the bare algebra is also exercised
    /// at `m = 2` where the generators are the classic `2×2` matrices.
    pub fn new(m: usize) -> Result<Self> {
        if !(2..=8).contains(&m) {
            return Err(Error::UnsupportedParameter(format!(
                "spinor space dimension m={m} outside supported range [2, 8]"
            )));
        }
        let even = m & !1;
        let mut herm = hermitian_gammas(even);
        let chi = hermitian_chirality(&herm);
        if m % 2 == 1 {
            herm.push(chi.clone());
        }
        // e_j = i·Γ_j turns Hermitian square-(+1) generators into the
        // convention e_j² = -1 while keeping entries in {0, ±1, ±i}.
        let gammas: Vec<Matrix> = herm.iter().map(|g| g.scale(&Scalar::i())).collect();
        let dim_s = gammas[0].rows();
        let gamma_entries = gammas
            .iter()
            .map(|g| {
                let mut entries = Vec::new();
                for r in 0..g.rows() {
                    for c in 0..g.cols() {
                        let v = g.get(r, c);
                        if !v.is_zero() {
                            entries.push((r, c, v.clone()));
                        }
                    }
                }
                entries
            })
            .collect();
        Ok(SpinorSpace {
            m,
            dim_s,
            gammas,
            gamma_entries,
            chirality: (m % 2 == 0).then_some(chi),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `dim S = 2^⌊m/2⌋`.
    pub fn dim_s(&self) -> usize {
        self.dim_s
    }

    /// The matrix of `e_{i+1}` acting on `S`.
    pub fn gamma(&self, i: usize) -> &Matrix {
        &self.gammas[i]
    }

    /// Sparse `(row, col, value)` triples of `e_{i+1}`.
    pub fn gamma_entries(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.gamma_entries[i]
    }

    /// Chirality involution for even `m` (`None` for odd `m`): squares to the
    /// identity and anticommutes with every generator, so the generators are
    /// block anti-diagonal with respect to its `±1` eigenspaces `S^±`.
    pub fn chirality(&self) -> Option<&Matrix> {
        self.chirality.as_ref()
    }

    /// `e_{i+1}·ψ`. Errors when `i ≥ m` or the spinor has the wrong dimension.
    pub fn clifford_apply(&self, i: usize, psi: &SpinorVec) -> Result<SpinorVec> {
        if i >= self.m {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.m,
            });
        }
        if psi.dim() != self.dim_s {
            return Err(Error::DimensionMismatch {
                expected: self.dim_s,
                got: psi.dim(),
            });
        }
        let mut out = SpinorVec::zero(self.dim_s);
        for (r, c, v) in &self.gamma_entries[i] {
            if !psi.0[*c].is_zero() {
                out.0[*r] += &(v * &psi.0[*c]);
            }
        }
        Ok(out)
    }

    fn expect_form(&self, psi: &AlgebraicOneForm) {
        assert_eq!(psi.0.len(), self.m, "one-form component count mismatch");
        for comp in &psi.0 {
            assert_eq!(comp.dim(), self.dim_s, "spinor dimension mismatch");
        }
    }

    /// `μ(Σ ψ_i ⊗ ε^i) = Σ e_i ψ_i`.
    pub fn mu(&self, psi: &AlgebraicOneForm) -> SpinorVec {
        self.expect_form(psi);
        let mut out = SpinorVec::zero(self.dim_s);
        for i in 0..self.m {
            out = out.add(&self.clifford_apply(i, &psi.0[i]).expect("valid index"));
        }
        out
    }

    /// `ι(σ) = -(1/m) Σ e_i σ ⊗ ε^i`; the right inverse of `μ`.
    pub fn iota(&self, sigma: &SpinorVec) -> AlgebraicOneForm {
        let c = Scalar::from_ratio(-1, self.m as i64);
        AlgebraicOneForm(
            (0..self.m)
                .map(|i| {
                    self.clifford_apply(i, sigma)
                        .expect("valid index")
                        .scale(&c)
                })
                .collect(),
        )
    }

    /// Projection onto the spin-1/2 summand: `π_{1/2} = ι ∘ μ`.
    pub fn project_half(&self, psi: &AlgebraicOneForm) -> AlgebraicOneForm {
        self.iota(&self.mu(psi))
    }

    /// Projection onto the spin-3/2 summand: `π_{3/2}(Ψ)_j = ψ_j + (1/m) e_j μ(Ψ)`.
    pub fn project_three_half(&self, psi: &AlgebraicOneForm) -> AlgebraicOneForm {
        self.expect_form(psi);
        let mu = self.mu(psi);
        let c = Scalar::from_ratio(1, self.m as i64);
        AlgebraicOneForm(
            (0..self.m)
                .map(|j| {
                    let e_j_mu = self.clifford_apply(j, &mu).expect("valid index");
                    psi.0[j].add(&e_j_mu.scale(&c))
                })
                .collect(),
        )
    }

    /// The matrix of an operator on `S ⊗ (ℝ^m)^*` in the standard basis
    /// (component-major: basis element `(i, a)` is `s_a ⊗ ε^{i+1}` at flat
    /// index `i·dim_s + a`). Used for rank certificates of the projections.
    pub fn one_form_operator_matrix<F>(&self, op: F) -> Matrix
    where
        F: Fn(&AlgebraicOneForm) -> AlgebraicOneForm,
    {
        let n = self.m * self.dim_s;
        let mut cols = Vec::with_capacity(n);
        for i in 0..self.m {
            for a in 0..self.dim_s {
                let mut basis = AlgebraicOneForm::zero(self.m, self.dim_s);
                basis.0[i] = SpinorVec::basis(self.dim_s, a);
                let image = op(&basis);
                let mut col = Vec::with_capacity(n);
                for comp in &image.0 {
                    col.extend(comp.0.iter().cloned());
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(n, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spaces() -> Vec<SpinorSpace> {
        (3..=8).map(|m| SpinorSpace::new(m).unwrap()).collect()
    }

    /// Deterministic small "pseudo-random" spinor for identity tests.
    fn sample_spinor(dim: usize, salt: i64) -> SpinorVec {
        SpinorVec(
            (0..dim)
                .map(|a| {
                    let a = a as i64;
                    Scalar::from_parts(salt + a, 1 + (a % 3), salt - 2 * a, 1 + (a % 2))
                })
                .collect(),
        )
    }

    fn sample_form(space: &SpinorSpace, salt: i64) -> AlgebraicOneForm {
        AlgebraicOneForm(
            (0..space.m())
                .map(|i| sample_spinor(space.dim_s(), salt + 7 * i as i64))
                .collect(),
        )
    }

    #[test]
    fn generator_relations() {
        for space in spaces() {
            let m = space.m();
            let dim = space.dim_s();
            assert_eq!(dim, 1 << (m / 2));
            let minus_two_id = Matrix::identity(dim).scale(&Scalar::from_int(-2));
            for i in 0..m {
                for j in 0..m {
                    let anti = space
                        .gamma(i)
                        .mul(space.gamma(j))
                        .add(&space.gamma(j).mul(space.gamma(i)));
                    if i == j {
                        assert_eq!(anti, minus_two_id, "e_{i}² ≠ -1 at m={m}");
                    } else {
                        assert!(anti.is_zero(), "e_{i}e_{j}+e_{j}e_{i} ≠ 0 at m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn generator_entries_are_fourth_roots_times_unit() {
        for space in spaces() {
            for i in 0..space.m() {
                for (_, _, v) in space.gamma_entries(i) {
                    let v4 = &(v * v) * &(v * v);
                    assert_eq!(v4, Scalar::one(), "entry {v} not in {{±1, ±i}}");
                }
            }
        }
    }

    #[test]
    fn base_construction_at_m2() {
        // At m = 2 the generators act on (1,0) as the classic 2×2 matrices:
        // e_1(1,0) = (0, i), e_2(1,0) = (0, -1).
        let space = SpinorSpace::new(2).unwrap();
        let s = SpinorVec::basis(2, 0);
        let e1s = space.clifford_apply(0, &s).unwrap();
        assert_eq!(e1s.0, vec![Scalar::zero(), Scalar::i()]);
        let e2s = space.clifford_apply(1, &s).unwrap();
        assert_eq!(e2s.0, vec![Scalar::zero(), Scalar::from_int(-1)]);
    }

    #[test]
    fn clifford_apply_errors() {
        let space = SpinorSpace::new(3).unwrap();
        let s = SpinorVec::basis(2, 0);
        assert_eq!(
            space.clifford_apply(3, &s),
            Err(crate::Error::IndexOutOfRange { index: 3, limit: 3 })
        );
        let wrong = SpinorVec::zero(4);
        assert_eq!(
            space.clifford_apply(0, &wrong),
            Err(crate::Error::DimensionMismatch { expected: 2, got: 4 })
        );
        assert!(SpinorSpace::new(9).is_err());
        assert!(SpinorSpace::new(1).is_err());
    }

    #[test]
    fn involution_squares_to_minus_one() {
        for space in spaces() {
            let psi = sample_spinor(space.dim_s(), 3);
            for i in 0..space.m() {
                let twice = space
                    .clifford_apply(i, &space.clifford_apply(i, &psi).unwrap())
                    .unwrap();
                assert_eq!(twice, psi.scale(&Scalar::from_int(-1)));
            }
        }
    }

    #[test]
    fn chirality_grades_the_generators() {
        for space in spaces() {
            match space.chirality() {
                None => assert!(space.m() % 2 == 1),
                Some(chi) => {
                    let dim = space.dim_s();
                    assert_eq!(chi.mul(chi), Matrix::identity(dim));
                    for i in 0..space.m() {
                        let anti = chi.mul(space.gamma(i)).add(&space.gamma(i).mul(chi));
                        assert!(anti.is_zero(), "chirality fails to anticommute");
                    }
                    // The recursion produces a diagonal chirality, so the ±1
                    // eigenspaces are coordinate subspaces; sorting coordinates
                    // by eigenvalue exhibits every generator as block
                    // anti-diagonal.
                    let mut plus = Vec::new();
                    let mut minus = Vec::new();
                    for a in 0..dim {
                        for b in 0..dim {
                            if a != b {
                                assert!(chi.get(a, b).is_zero(), "chirality not diagonal");
                            }
                        }
                        if *chi.get(a, a) == Scalar::one() {
                            plus.push(a);
                        } else {
                            assert_eq!(*chi.get(a, a), Scalar::from_int(-1));
                            minus.push(a);
                        }
                    }
                    assert_eq!(plus.len(), dim / 2);
                    for i in 0..space.m() {
                        for &a in &plus {
                            for &b in &plus {
                                assert!(space.gamma(i).get(a, b).is_zero());
                            }
                        }
                        for &a in &minus {
                            for &b in &minus {
                                assert!(space.gamma(i).get(a, b).is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mu_iota_is_identity() {
        for space in spaces() {
            let sigma = sample_spinor(space.dim_s(), 11);
            assert_eq!(space.mu(&space.iota(&sigma)), sigma);
        }
    }

    #[test]
    fn projections_resolve_the_identity() {
        for space in spaces() {
            let psi = sample_form(&space, 5);
            let p1 = space.project_half(&psi);
            let p3 = space.project_three_half(&psi);
            assert_eq!(p1.add(&p3), psi);
            // Idempotence and complementarity.
            assert_eq!(space.project_half(&p1), p1);
            assert_eq!(space.project_three_half(&p3), p3);
            assert!(space.project_half(&p3).is_zero());
            assert!(space.project_three_half(&p1).is_zero());
            // μ kills the spin-3/2 part.
            assert!(space.mu(&p3).is_zero());
        }
    }

    #[test]
    fn image_of_iota_is_kernel_of_three_half_projection() {
        for space in spaces() {
            let sigma = sample_spinor(space.dim_s(), -4);
            assert!(space.project_three_half(&space.iota(&sigma)).is_zero());
            let rank_iota = space
                .one_form_operator_matrix(|f| space.project_half(f))
                .rank();
            let rank_three_half = space
                .one_form_operator_matrix(|f| space.project_three_half(f))
                .rank();
            assert_eq!(rank_iota, space.dim_s());
            assert_eq!(rank_three_half, (space.m() - 1) * space.dim_s());
        }
    }

    #[test]
    fn three_half_rank_at_m5_is_16() {
        let space = SpinorSpace::new(5).unwrap();
        let rank = space
            .one_form_operator_matrix(|f| space.project_three_half(f))
            .rank();
        assert_eq!(rank, 16);
    }
}
