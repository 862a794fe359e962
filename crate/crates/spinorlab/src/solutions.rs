//! Exact polynomial solution spaces, computed by brute force.
//!
//! Two families, both over `ℝ^m` with values in the spinor space:
//!
//! * `P_k(0)` — degree-`k` *monogenics*, the kernel of the Dirac operator on
//!   homogeneous spinor fields; `dim P_k(0) = 2^⌊m/2⌋·C(k+m-2, k)`.
//! * `P_k(1)` — degree-`k` *Rarita-Schwinger fields*: one-form fields `ψ` with
//!   `μψ = 0` and `ℛψ = 0`.
//!
//! Nothing here trusts a closed formula: each space is the exact kernel of an
//! explicit linear map between coordinate bases. The closed formulas (and the
//! Weyl-dimension predictions from [`crate::spectra`]) are *checked against*
//! these kernels by the test and verification suites.
//!
//! `P_k(1)` splits as `M¹ ⊕ M² ⊕ M³`:
//!
//! * `M¹ = Ker ℒ ∩ P_k(1)` — solutions annihilated by the radial pairing;
//! * `M² = 𝒯(P_{k+1}(0))` — twistor images of monogenics one degree up;
//! * `M³ = Ξ(P_{k-1}(0))` — embedded monogenics one degree down.
//!
//! [`RsStructure`] materializes all three with explicit bases and preimages,
//! certifies the direct sum by an exact rank computation, and decomposes
//! arbitrary solutions against the concatenated basis with one reusable
//! factorization.

use crate::clifford::SpinorSpace;
use crate::fields::{OneFormBasis, OneFormField, SpinorField, SpinorFieldBasis};
use crate::matrix::SparseEchelon;
use crate::ops;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Default degree cap for monogenic spaces (the linear systems stay small).
pub const MONOGENIC_DEGREE_CAP: usize = 5;
/// Default degree cap for Rarita-Schwinger spaces.
pub const RS_DEGREE_CAP: usize = 4;

/// The effective degree cap: the built-in default, raised (never lowered) by
/// the `SPINORLAB_MAX_DEGREE` environment variable. Raising it is at the
/// caller's own runtime risk — the kernels grow quickly.
pub fn degree_cap(default: usize) -> usize {
    match std::env::var("SPINORLAB_MAX_DEGREE") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) => default.max(n),
            Err(_) => default,
        },
        Err(_) => default,
    }
}

fn check_m(space: &SpinorSpace, max_m: usize, what: &str) -> Result<()> {
    let m = space.m();
    if !(3..=max_m).contains(&m) {
        return Err(Error::UnsupportedParameter(format!(
            "{what} supports 3 ≤ m ≤ {max_m}, got m={m}"
        )));
    }
    Ok(())
}

/// The space of degree-`k` monogenics `P_k(0)` with an explicit exact basis.
pub struct MonogenicSpace {
    pub m: usize,
    pub k: usize,
    pub basis: Vec<SpinorField>,
}

impl MonogenicSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Computes `P_k(0)` as the exact kernel of the Dirac operator
/// `D: (degree k) → (degree k-1)` in coordinates.
pub fn monogenic_basis(space: &SpinorSpace, k: usize) -> Result<MonogenicSpace> {
    check_m(space, 8, "monogenic_basis")?;
    let cap = degree_cap(MONOGENIC_DEGREE_CAP);
    if k > cap {
        return Err(Error::UnsupportedParameter(format!(
            "monogenic degree k={k} exceeds cap {cap} (raise SPINORLAB_MAX_DEGREE to override)"
        )));
    }
    let domain = SpinorFieldBasis::new(space, k);
    if k == 0 {
        // Constants are all monogenic.
        let basis = (0..domain.dim()).map(|i| domain.field(space, i)).collect();
        return Ok(MonogenicSpace {
            m: space.m(),
            k,
            basis,
        });
    }
    let target = SpinorFieldBasis::new(space, k - 1);
    let columns: Vec<Vec<Scalar>> = (0..domain.dim())
        .map(|i| {
            let image = ops::dirac(space, &domain.field(space, i));
            target.coords(&image).expect("D drops degree by one")
        })
        .collect();
    let basis = SparseEchelon::from_columns(target.dim(), &columns, false)
        .kernel_basis()
        .into_iter()
        .map(|v| domain.from_coords(space, &v))
        .collect();
    Ok(MonogenicSpace {
        m: space.m(),
        k,
        basis,
    })
}

/// The space of degree-`k` Rarita-Schwinger fields `P_k(1)` with an explicit
/// exact basis.
pub struct RsSpace {
    pub m: usize,
    pub k: usize,
    pub basis: Vec<OneFormField>,
}

impl RsSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Computes `P_k(1)` as the joint exact kernel of
/// `ψ ↦ (μψ, π_{3/2} D_T ψ)` on degree-`k` one-form fields. On the kernel of
/// `μ` the second block is exactly the Rarita-Schwinger operator, so this is
/// `{ψ : μψ = 0, ℛψ = 0}` without ever projecting an inadmissible input.
pub fn rs_solution_basis(space: &SpinorSpace, k: usize) -> Result<RsSpace> {
    check_m(space, 6, "rs_solution_basis")?;
    let cap = degree_cap(RS_DEGREE_CAP);
    if k == 0 || k > cap {
        return Err(Error::UnsupportedParameter(format!(
            "Rarita-Schwinger degree k={k} outside 1..={cap} (raise SPINORLAB_MAX_DEGREE to override)"
        )));
    }
    let domain = OneFormBasis::new(space, k);
    let mu_target = SpinorFieldBasis::new(space, k);
    let rs_target = OneFormBasis::new(space, k - 1);
    let rows = mu_target.dim() + rs_target.dim();
    let columns: Vec<Vec<Scalar>> = (0..domain.dim())
        .map(|i| {
            let psi = domain.field(space, i);
            let mut col = mu_target
                .coords(&ops::mu(space, &psi))
                .expect("μ preserves degree");
            let rs = ops::project_three_half(space, &ops::twisted_dirac(space, &psi));
            col.extend(rs_target.coords(&rs).expect("D_T drops degree by one"));
            col
        })
        .collect();
    let basis = SparseEchelon::from_columns(rows, &columns, false)
        .kernel_basis()
        .into_iter()
        .map(|v| domain.from_coords(space, &v))
        .collect();
    Ok(RsSpace {
        m: space.m(),
        k,
        basis,
    })
}

/// Exact rank/dimension certificate for the three-way splitting of `P_k(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumReport {
    pub dim_space: usize,
    pub dim_m1: usize,
    pub dim_m2: usize,
    pub dim_m3: usize,
    /// Rank of the concatenated `[M¹ | M² | M³]` coordinate matrix.
    pub concat_rank: usize,
    /// True iff the three bases are jointly independent.
    pub is_direct_sum: bool,
    /// True iff they additionally span all of `P_k(1)`.
    pub spans_solution_space: bool,
}

/// One Rarita-Schwinger solution split into its three canonical pieces, with
/// the monogenic preimages as certificates.
#[derive(Clone, Debug)]
pub struct RsDecomposition {
    /// Component in `M¹ = Ker ℒ ∩ P_k(1)`.
    pub psi1: OneFormField,
    /// Component in `M² = 𝒯(P_{k+1}(0))`.
    pub psi2: OneFormField,
    /// Component in `M³ = Ξ(P_{k-1}(0))`.
    pub psi3: OneFormField,
    /// Monogenic `φ` with `𝒯(φ) = psi2`.
    pub twistor_preimage: SpinorField,
    /// Monogenic `ψ₀` with `Ξ(ψ₀) = psi3`.
    pub xi_preimage: SpinorField,
}

impl RsDecomposition {
    /// Re-checks every certificate exactly: the pieces sum to `original`,
    /// `ℒψ₁ = 0`, both preimages are monogenic, and they map onto their
    /// pieces under `𝒯` and `Ξ`.
    pub fn verify(&self, space: &SpinorSpace, original: &OneFormField) -> bool {
        let resum = self.psi1.add(&self.psi2).add(&self.psi3);
        if resum != *original {
            return false;
        }
        if !ops::l_map(space, &self.psi1).is_zero() {
            return false;
        }
        if !ops::dirac(space, &self.twistor_preimage).is_zero() {
            return false;
        }
        if ops::twistor(space, &self.twistor_preimage) != self.psi2 {
            return false;
        }
        match ops::xi_map(space, &self.xi_preimage) {
            Ok(xi) => xi == self.psi3,
            Err(_) => false,
        }
    }
}

/// `P_k(1)` together with bases of the three summands, their monogenic
/// preimages, and a reusable factorization for decomposing solutions.
pub struct RsStructure {
    pub m: usize,
    pub k: usize,
    pub space: RsSpace,
    pub m1_basis: Vec<OneFormField>,
    /// `(𝒯φ, φ)` for `φ` running over the degree-`(k+1)` monogenic basis.
    pub m2_basis: Vec<(OneFormField, SpinorField)>,
    /// `(Ξψ₀, ψ₀)` for `ψ₀` running over the degree-`(k-1)` monogenic basis.
    pub m3_basis: Vec<(OneFormField, SpinorField)>,
    coord_basis: OneFormBasis,
    /// Coordinate columns of `[M¹ | M² | M³]`, in basis order.
    columns: Vec<Vec<Scalar>>,
    solver: SparseEchelon,
}

/// Builds the full decomposition structure of `P_k(1)` on `ℝ^m`.
pub fn rs_structure(space: &SpinorSpace, k: usize) -> Result<RsStructure> {
    let rs = rs_solution_basis(space, k)?;
    let coord_basis = OneFormBasis::new(space, k);

    // M¹: kernel of ℒ restricted to P_k(1). Columns of ℒ over the solution
    // basis, kernel vectors = coefficient combinations of that basis.
    let l_target = SpinorFieldBasis::new(space, k + 1);
    let l_columns: Vec<Vec<Scalar>> = rs
        .basis
        .iter()
        .map(|psi| {
            l_target
                .coords(&ops::l_map(space, psi))
                .expect("ℒ raises degree by one")
        })
        .collect();
    let l_kernel = SparseEchelon::from_columns(l_target.dim(), &l_columns, false);
    let solution_columns: Vec<Vec<Scalar>> = rs
        .basis
        .iter()
        .map(|psi| coord_basis.coords(psi).expect("solution is homogeneous"))
        .collect();
    let m1_basis: Vec<OneFormField> = l_kernel
        .kernel_basis()
        .into_iter()
        .map(|coeffs| {
            let mut acc = vec![Scalar::zero(); coord_basis.dim()];
            for (c, col) in coeffs.iter().zip(&solution_columns) {
                if c.is_zero() {
                    continue;
                }
                for (a, v) in acc.iter_mut().zip(col) {
                    if !v.is_zero() {
                        *a += &(c * v);
                    }
                }
            }
            coord_basis.from_coords(space, &acc)
        })
        .collect();

    // M² and M³ from the monogenic bases one degree up and down.
    let up = monogenic_basis(space, k + 1)?;
    let m2_basis: Vec<(OneFormField, SpinorField)> = up
        .basis
        .into_iter()
        .map(|phi| (ops::twistor(space, &phi), phi))
        .collect();
    let down = monogenic_basis(space, k - 1)?;
    let m3_basis: Vec<(OneFormField, SpinorField)> = down
        .basis
        .into_iter()
        .map(|psi0| {
            let xi = ops::xi_map(space, &psi0).expect("basis fields are monogenic");
            (xi, psi0)
        })
        .collect();

    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for psi in &m1_basis {
        columns.push(coord_basis.coords(psi).expect("homogeneous"));
    }
    for (psi, _) in &m2_basis {
        columns.push(coord_basis.coords(psi).expect("homogeneous"));
    }
    for (psi, _) in &m3_basis {
        columns.push(coord_basis.coords(psi).expect("homogeneous"));
    }
    let solver = SparseEchelon::from_columns(coord_basis.dim(), &columns, true);

    Ok(RsStructure {
        m: rs.m,
        k,
        space: rs,
        m1_basis,
        m2_basis,
        m3_basis,
        coord_basis,
        columns,
        solver,
    })
}

impl RsStructure {
    /// Exact certificate that `M¹ ⊕ M² ⊕ M³ = P_k(1)`.
    pub fn verify_direct_sum(&self) -> DirectSumReport {
        let dim_m1 = self.m1_basis.len();
        let dim_m2 = self.m2_basis.len();
        let dim_m3 = self.m3_basis.len();
        let rank = self.solver.rank();
        DirectSumReport {
            dim_space: self.space.dim(),
            dim_m1,
            dim_m2,
            dim_m3,
            concat_rank: rank,
            is_direct_sum: rank == dim_m1 + dim_m2 + dim_m3,
            spans_solution_space: rank == dim_m1 + dim_m2 + dim_m3
                && rank == self.space.dim(),
        }
    }

    /// Splits a degree-`k` Rarita-Schwinger solution into its three pieces.
    ///
    /// Errors if `ψ` is not homogeneous of degree `k`, not admissible
    /// (`μψ ≠ 0`), not a solution (`ℛψ ≠ 0`), or (impossible once the direct
    /// sum is verified) outside the span of the three bases.
    pub fn decompose(&self, space: &SpinorSpace, psi: &OneFormField) -> Result<RsDecomposition> {
        if !psi.is_homogeneous_of(self.k) {
            return Err(Error::Precondition(format!(
                "input is not homogeneous of degree {}",
                self.k
            )));
        }
        let r = ops::rarita_schwinger(space, psi)?;
        if !r.is_zero() {
            return Err(Error::Precondition(
                "input is not a Rarita-Schwinger solution (ℛψ ≠ 0)".into(),
            ));
        }
        let rhs = self.coord_basis.coords(psi)?;
        let coeffs = self
            .solver
            .solve(&rhs)
            .ok_or_else(|| Error::Unsolvable("solution outside M¹ ⊕ M² ⊕ M³".into()))?;

        let (n1, n2) = (self.m1_basis.len(), self.m2_basis.len());
        let combine = |range: std::ops::Range<usize>| -> OneFormField {
            let mut acc = vec![Scalar::zero(); self.coord_basis.dim()];
            for idx in range {
                let c = &coeffs[idx];
                if c.is_zero() {
                    continue;
                }
                for (a, v) in acc.iter_mut().zip(&self.columns[idx]) {
                    if !v.is_zero() {
                        *a += &(c * v);
                    }
                }
            }
            self.coord_basis.from_coords(space, &acc)
        };
        let psi1 = combine(0..n1);
        let psi2 = combine(n1..n1 + n2);
        let psi3 = combine(n1 + n2..self.columns.len());

        let mut twistor_preimage = SpinorField::zero(space);
        for (idx, (_, phi)) in self.m2_basis.iter().enumerate() {
            let c = &coeffs[n1 + idx];
            if !c.is_zero() {
                twistor_preimage = twistor_preimage.add(&phi.scale(c));
            }
        }
        let mut xi_preimage = SpinorField::zero(space);
        for (idx, (_, psi0)) in self.m3_basis.iter().enumerate() {
            let c = &coeffs[n1 + n2 + idx];
            if !c.is_zero() {
                xi_preimage = xi_preimage.add(&psi0.scale(c));
            }
        }

        Ok(RsDecomposition {
            psi1,
            psi2,
            psi3,
            twistor_preimage,
            xi_preimage,
        })
    }
}

/// One row of the solution-space dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionRow {
    pub m: usize,
    pub k: usize,
    pub dim_monogenic: usize,
    pub dim_rs: usize,
    pub dim_m1: usize,
    pub dim_m2: usize,
    pub dim_m3: usize,
}

/// Computes the full dimension row at `(m, k)` by brute force.
pub fn dimension_row(space: &SpinorSpace, k: usize) -> Result<DimensionRow> {
    let mono = monogenic_basis(space, k)?;
    let structure = rs_structure(space, k)?;
    Ok(DimensionRow {
        m: space.m(),
        k,
        dim_monogenic: mono.dim(),
        dim_rs: structure.space.dim(),
        dim_m1: structure.m1_basis.len(),
        dim_m2: structure.m2_basis.len(),
        dim_m3: structure.m3_basis.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::monogenic_dimension_formula;
    use num::BigInt;

    fn space(m: usize) -> SpinorSpace {
        SpinorSpace::new(m).unwrap()
    }

    #[test]
    fn monogenic_dimensions_small_cells() {
        // m=3: dim = 2(k+1); m=4, k=1: 12.
        let sp3 = space(3);
        for k in 0..=3 {
            let basis = monogenic_basis(&sp3, k).unwrap();
            assert_eq!(basis.dim(), 2 * (k + 1));
            assert_eq!(
                BigInt::from(basis.dim()),
                monogenic_dimension_formula(3, k)
            );
            for phi in &basis.basis {
                assert!(ops::dirac(&sp3, phi).is_zero());
                assert!(phi.is_homogeneous_of(k));
            }
        }
        assert_eq!(monogenic_basis(&space(4), 1).unwrap().dim(), 12);
    }

    #[test]
    fn monogenic_caps_enforced() {
        let sp = space(3);
        assert!(matches!(
            monogenic_basis(&sp, 99),
            Err(Error::UnsupportedParameter(_))
        ));
        let sp2 = SpinorSpace::new(2).unwrap();
        assert!(monogenic_basis(&sp2, 1).is_err());
    }

    #[test]
    fn rs_solutions_at_m3_k1() {
        let sp = space(3);
        let rs = rs_solution_basis(&sp, 1).unwrap();
        assert_eq!(rs.dim(), 8);
        for psi in &rs.basis {
            assert!(ops::mu(&sp, psi).is_zero());
            let r = ops::rarita_schwinger(&sp, psi).unwrap();
            assert!(r.is_zero());
            assert!(psi.is_homogeneous_of(1));
        }
        assert!(rs_solution_basis(&sp, 0).is_err());
    }

    #[test]
    fn structure_at_m3_k1() {
        let sp = space(3);
        let s = rs_structure(&sp, 1).unwrap();
        let report = s.verify_direct_sum();
        assert_eq!(report.dim_space, 8);
        assert_eq!(report.dim_m1, 0);
        assert_eq!(report.dim_m2, 6);
        assert_eq!(report.dim_m3, 2);
        assert!(report.is_direct_sum);
        assert!(report.spans_solution_space);
    }

    #[test]
    fn structure_at_m4_k1() {
        let sp = space(4);
        let s = rs_structure(&sp, 1).unwrap();
        let report = s.verify_direct_sum();
        assert_eq!(
            (report.dim_m1, report.dim_m2, report.dim_m3, report.dim_space),
            (8, 24, 4, 36)
        );
        assert!(report.spans_solution_space);
        // M¹ and M² lie in the kernel of D_T; M³ does not.
        for psi in &s.m1_basis {
            assert!(ops::twisted_dirac(&sp, psi).is_zero());
        }
        for (psi, phi) in &s.m2_basis {
            assert!(ops::twisted_dirac(&sp, psi).is_zero());
            assert!(ops::dirac(&sp, phi).is_zero());
        }
        for (psi, _) in &s.m3_basis {
            assert!(!ops::twisted_dirac(&sp, psi).is_zero());
        }
    }

    #[test]
    fn decompose_roundtrip_m3_k1() {
        let sp = space(3);
        let s = rs_structure(&sp, 1).unwrap();
        // A deterministic mix of all basis directions.
        let mut psi = OneFormField::zero(&sp);
        for (i, b) in s.space.basis.iter().enumerate() {
            psi = psi.add(&b.scale(&Scalar::from_parts(
                (i as i64 % 5) - 2,
                1,
                (i as i64 % 3) - 1,
                2,
            )));
        }
        let dec = s.decompose(&sp, &psi).unwrap();
        assert!(dec.verify(&sp, &psi));
    }

    #[test]
    fn decompose_rejects_non_solutions() {
        let sp = space(3);
        let s = rs_structure(&sp, 1).unwrap();
        // Admissible but not a solution: π_{3/2} of x1 ⊗ e_1 s ⊗ dx^1-ish form.
        let sfield = SpinorField::basis_spinor(&sp, 0);
        let x1 = crate::poly::MultiPoly::variable(3, 0);
        let mut raw = OneFormField::zero(&sp);
        raw.set_component(0, sfield.poly_scale(&x1));
        let adm = ops::project_three_half(&sp, &raw);
        assert!(ops::mu(&sp, &adm).is_zero());
        match s.decompose(&sp, &adm) {
            Err(Error::Precondition(_)) => {}
            other => panic!("expected precondition error, got {other:?}"),
        }
        // Wrong homogeneity degree.
        let constant = ops::project_three_half(&sp, &{
            let mut f = OneFormField::zero(&sp);
            f.set_component(0, sfield.clone());
            f
        });
        assert!(s.decompose(&sp, &constant).is_err());
    }

    #[test]
    fn dimension_row_matches_structure() {
        let sp = space(3);
        let row = dimension_row(&sp, 1).unwrap();
        assert_eq!(
            row,
            DimensionRow {
                m: 3,
                k: 1,
                dim_monogenic: 4,
                dim_rs: 8,
                dim_m1: 0,
                dim_m2: 6,
                dim_m3: 2,
            }
        );
    }
}
