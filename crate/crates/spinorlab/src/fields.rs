//! Spinor fields and spinor-valued differential forms with polynomial
//! coefficients, plus the coordinate bases that let the solution-space module
//! treat them as exact vectors.
//!
//! A [`SpinorField`] is a map `ℝ^m → S` whose components are polynomials in
//! `x_1, ..., x_m`; a [`OneFormField`] is `Σ ψ_i ⊗ dx^i` with spinor-field
//! components; a [`KFormField`] generalizes to antisymmetric degree `k`,
//! indexed by strictly increasing index sets.
//!
//! Fields of fixed homogeneity degree form finite-dimensional spaces;
//! [`SpinorFieldBasis`] / [`OneFormBasis`] enumerate their canonical bases and
//! convert fields to and from coordinate vectors, which is exactly what the
//! brute-force kernel computations in [`crate::solutions`] consume.

use crate::clifford::SpinorSpace;
use crate::poly::{monomials_of_degree, Monomial, MultiPoly};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial spinor field: `dim S` polynomial components in `m` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorField {
    m: usize,
    components: Vec<MultiPoly>,
}

impl SpinorField {
    pub fn zero(space: &SpinorSpace) -> Self {
        SpinorField {
            m: space.m(),
            components: vec![MultiPoly::zero(space.m()); space.dim_s()],
        }
    }

    /// Builds from explicit components (must all be polynomials in `m`
    /// variables, one per spinor coordinate).
    pub fn from_components(space: &SpinorSpace, components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() != space.dim_s() {
            return Err(Error::DimensionMismatch {
                expected: space.dim_s(),
                got: components.len(),
            });
        }
        for p in &components {
            if p.num_vars() != space.m() {
                return Err(Error::DimensionMismatch {
                    expected: space.m(),
                    got: p.num_vars(),
                });
            }
        }
        Ok(SpinorField {
            m: space.m(),
            components,
        })
    }

    /// The constant field equal to the basis spinor `s_a`.
    pub fn basis_spinor(space: &SpinorSpace, a: usize) -> Self {
        let mut f = SpinorField::zero(space);
        f.components[a] = MultiPoly::one(space.m());
        f
    }

    /// `p · s_a` for a scalar polynomial `p`.
    pub fn monomial_spinor(space: &SpinorSpace, p: &MultiPoly, a: usize) -> Self {
        let mut f = SpinorField::zero(space);
        f.components[a] = p.clone();
        f
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim_s(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, a: usize) -> &MultiPoly {
        &self.components[a]
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    pub fn add(&self, other: &SpinorField) -> SpinorField {
        assert_eq!(self.components.len(), other.components.len());
        SpinorField {
            m: self.m,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SpinorField) -> SpinorField {
        assert_eq!(self.components.len(), other.components.len());
        SpinorField {
            m: self.m,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> SpinorField {
        SpinorField {
            m: self.m,
            components: self.components.iter().map(MultiPoly::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SpinorField {
        SpinorField {
            m: self.m,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies every component by a scalar polynomial.
    pub fn poly_scale(&self, p: &MultiPoly) -> SpinorField {
        SpinorField {
            m: self.m,
            components: self.components.iter().map(|q| q.mul(p)).collect(),
        }
    }

    /// Componentwise `∂/∂x_{i+1}`.
    pub fn partial(&self, i: usize) -> Result<SpinorField> {
        Ok(SpinorField {
            m: self.m,
            components: self
                .components
                .iter()
                .map(|p| p.partial_derivative(i))
                .collect::<Result<_>>()?,
        })
    }

    /// Clifford action `e_{i+1}·φ`, applied pointwise through the generator's
    /// sparse matrix.
    pub fn clifford(&self, space: &SpinorSpace, i: usize) -> Result<SpinorField> {
        if i >= space.m() {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: space.m(),
            });
        }
        assert_eq!(self.dim_s(), space.dim_s(), "spinor dimension mismatch");
        let mut out = SpinorField::zero(space);
        for (r, c, v) in space.gamma_entries(i) {
            if !self.components[*c].is_zero() {
                out.components[*r] = out.components[*r].add(&self.components[*c].scale(v));
            }
        }
        Ok(out)
    }

    /// The Clifford product `x·φ = Σ_i x_i e_i·φ` with the position vector.
    pub fn clifford_x(&self, space: &SpinorSpace) -> SpinorField {
        let mut out = SpinorField::zero(space);
        for i in 0..space.m() {
            let xi = MultiPoly::variable(self.m, i);
            out = out.add(&self.clifford(space, i).expect("valid index").poly_scale(&xi));
        }
        out
    }

    /// Common total degree of all nonzero terms across components, `None` if
    /// the field is zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg: Option<usize> = None;
        for p in &self.components {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(existing) if existing == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// True for the zero field or any field all of whose terms have degree `k`.
    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(k)
    }
}

impl fmt::Display for SpinorField {
    /// One line per spinor component: `[comp0; comp1; ...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A spinor-valued one-form field `Σ ψ_i ⊗ dx^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneFormField {
    components: Vec<SpinorField>,
}

impl OneFormField {
    pub fn zero(space: &SpinorSpace) -> Self {
        OneFormField {
            components: vec![SpinorField::zero(space); space.m()],
        }
    }

    pub fn from_components(space: &SpinorSpace, components: Vec<SpinorField>) -> Result<Self> {
        if components.len() != space.m() {
            return Err(Error::DimensionMismatch {
                expected: space.m(),
                got: components.len(),
            });
        }
        Ok(OneFormField { components })
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &SpinorField {
        &self.components[i]
    }

    pub fn components(&self) -> &[SpinorField] {
        &self.components
    }

    pub fn set_component(&mut self, i: usize, f: SpinorField) {
        self.components[i] = f;
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SpinorField::is_zero)
    }

    pub fn add(&self, other: &OneFormField) -> OneFormField {
        assert_eq!(self.m(), other.m());
        OneFormField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &OneFormField) -> OneFormField {
        assert_eq!(self.m(), other.m());
        OneFormField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> OneFormField {
        OneFormField {
            components: self.components.iter().map(SpinorField::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> OneFormField {
        OneFormField {
            components: self.components.iter().map(|f| f.scale(c)).collect(),
        }
    }

    /// Common homogeneity degree of the components (see
    /// [`SpinorField::homogeneous_degree`]).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg: Option<usize> = None;
        for f in &self.components {
            if f.is_zero() {
                continue;
            }
            let d = f.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(existing) if existing == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(k)
    }
}

impl fmt::Display for OneFormField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{comp}⊗dx{}", i + 1)?;
        }
        Ok(())
    }
}

/// A spinor-valued `k`-form field: components indexed by strictly increasing
/// index sets `1 ≤ j_1 < ... < j_k ≤ m` (stored zero-based). Zero components
/// are not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KFormField {
    m: usize,
    degree: usize,
    components: BTreeMap<Vec<u8>, SpinorField>,
}

impl KFormField {
    pub fn zero(space: &SpinorSpace, degree: usize) -> Self {
        assert!(degree <= space.m(), "form degree exceeds dimension");
        KFormField {
            m: space.m(),
            degree,
            components: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Component at an index set (zero field if absent). The index set must be
    /// strictly increasing and zero-based.
    pub fn component(&self, space: &SpinorSpace, idx: &[u8]) -> SpinorField {
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        self.components
            .get(idx)
            .cloned()
            .unwrap_or_else(|| SpinorField::zero(space))
    }

    /// Iterate nonzero components in canonical (lexicographic index-set) order.
    pub fn components(&self) -> impl Iterator<Item = (&Vec<u8>, &SpinorField)> {
        self.components.iter()
    }

    /// Adds `field ⊗ dx^{idx}` into this form.
    pub fn accumulate(&mut self, idx: Vec<u8>, field: SpinorField) {
        assert_eq!(idx.len(), self.degree, "index set has wrong size");
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(idx.iter().all(|&j| (j as usize) < self.m));
        if field.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.components.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(field);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&field);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &KFormField) -> KFormField {
        assert_eq!((self.m, self.degree), (other.m, other.degree));
        let mut out = self.clone();
        for (idx, f) in &other.components {
            out.accumulate(idx.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, other: &KFormField) -> KFormField {
        assert_eq!((self.m, self.degree), (other.m, other.degree));
        let mut out = self.clone();
        for (idx, f) in &other.components {
            out.accumulate(idx.clone(), f.neg());
        }
        out
    }

    pub fn neg(&self) -> KFormField {
        KFormField {
            m: self.m,
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(idx, f)| (idx.clone(), f.neg()))
                .collect(),
        }
    }

    /// Views a one-form field as a 1-form (same components).
    pub fn from_one_form(space: &SpinorSpace, psi: &OneFormField) -> KFormField {
        let mut out = KFormField::zero(space, 1);
        for i in 0..psi.m() {
            out.accumulate(vec![i as u8], psi.component(i).clone());
        }
        out
    }

    /// Converts a 1-form back to a one-form field. Panics unless `degree == 1`.
    pub fn into_one_form(&self, space: &SpinorSpace) -> OneFormField {
        assert_eq!(self.degree, 1, "not a 1-form");
        let mut out = OneFormField::zero(space);
        for (idx, f) in &self.components {
            out.set_component(idx[0] as usize, f.clone());
        }
        out
    }
}

/// Canonical basis of homogeneous degree-`k` spinor fields on `ℝ^m`.
///
/// Basis element `(mono, a) ↦ mono · s_a`, flattened monomial-major: index
/// `mi·dim_s + a` where `mi` runs over [`monomials_of_degree`]`(m, k)` in its
/// canonical order. Dimension: `2^⌊m/2⌋ · C(k+m-1, k)`.
pub struct SpinorFieldBasis {
    m: usize,
    dim_s: usize,
    k: usize,
    monos: Vec<Monomial>,
    mono_index: BTreeMap<Monomial, usize>,
}

impl SpinorFieldBasis {
    pub fn new(space: &SpinorSpace, k: usize) -> Self {
        let monos = monomials_of_degree(space.m(), k);
        let mono_index = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        SpinorFieldBasis {
            m: space.m(),
            dim_s: space.dim_s(),
            k,
            monos,
            mono_index,
        }
    }

    pub fn dim(&self) -> usize {
        self.monos.len() * self.dim_s
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// The `idx`-th basis field.
    pub fn field(&self, space: &SpinorSpace, idx: usize) -> SpinorField {
        assert!(idx < self.dim());
        let (mi, a) = (idx / self.dim_s, idx % self.dim_s);
        let p = MultiPoly::of_term(self.m, self.monos[mi].0.clone(), Scalar::one());
        SpinorField::monomial_spinor(space, &p, a)
    }

    /// Exact coordinates of a homogeneous degree-`k` field. Errors when the
    /// field has a term of any other degree.
    pub fn coords(&self, field: &SpinorField) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (a, p) in field.components().iter().enumerate() {
            for (mono, c) in p.terms() {
                let mi = self.mono_index.get(mono).ok_or_else(|| {
                    Error::Precondition(format!(
                        "field is not homogeneous of degree {}: found term {mono}",
                        self.k
                    ))
                })?;
                out[mi * self.dim_s + a] = c.clone();
            }
        }
        Ok(out)
    }

    /// Reconstructs the field with the given coordinates.
    pub fn from_coords(&self, space: &SpinorSpace, coords: &[Scalar]) -> SpinorField {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut components = vec![MultiPoly::zero(self.m); self.dim_s];
        for (idx, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (mi, a) = (idx / self.dim_s, idx % self.dim_s);
            let term = MultiPoly::of_term(self.m, self.monos[mi].0.clone(), c.clone());
            components[a] = components[a].add(&term);
        }
        SpinorField::from_components(space, components).expect("components constructed to fit")
    }
}

/// Canonical basis of homogeneous degree-`k` spinor-valued one-form fields:
/// component-major over [`SpinorFieldBasis`], i.e. flat index
/// `i·(inner dim) + inner index` for `ψ ⊗ dx^{i+1}`.
pub struct OneFormBasis {
    inner: SpinorFieldBasis,
    m: usize,
}

impl OneFormBasis {
    pub fn new(space: &SpinorSpace, k: usize) -> Self {
        OneFormBasis {
            inner: SpinorFieldBasis::new(space, k),
            m: space.m(),
        }
    }

    pub fn dim(&self) -> usize {
        self.m * self.inner.dim()
    }

    pub fn degree(&self) -> usize {
        self.inner.degree()
    }

    pub fn field(&self, space: &SpinorSpace, idx: usize) -> OneFormField {
        assert!(idx < self.dim());
        let (i, rest) = (idx / self.inner.dim(), idx % self.inner.dim());
        let mut out = OneFormField::zero(space);
        out.set_component(i, self.inner.field(space, rest));
        out
    }

    pub fn coords(&self, psi: &OneFormField) -> Result<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.dim());
        for comp in psi.components() {
            out.extend(self.inner.coords(comp)?);
        }
        Ok(out)
    }

    pub fn from_coords(&self, space: &SpinorSpace, coords: &[Scalar]) -> OneFormField {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let inner_dim = self.inner.dim();
        let components = (0..self.m)
            .map(|i| {
                self.inner
                    .from_coords(space, &coords[i * inner_dim..(i + 1) * inner_dim])
            })
            .collect();
        OneFormField::from_components(space, components).expect("component count fits")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::SpinorSpace;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn basis_dimensions_match_counting() {
        for m in 3..=5 {
            let space = SpinorSpace::new(m).unwrap();
            for k in 0..=3 {
                let b = SpinorFieldBasis::new(&space, k);
                assert_eq!(b.dim(), (1 << (m / 2)) * binom(k + m - 1, k));
                let ob = OneFormBasis::new(&space, k);
                assert_eq!(ob.dim(), m * b.dim());
            }
        }
    }

    #[test]
    fn coords_roundtrip() {
        let space = SpinorSpace::new(4).unwrap();
        let basis = SpinorFieldBasis::new(&space, 2);
        for idx in [0, 5, basis.dim() - 1] {
            let f = basis.field(&space, idx);
            let coords = basis.coords(&f).unwrap();
            assert_eq!(coords.iter().filter(|c| !c.is_zero()).count(), 1);
            assert!(coords[idx].is_one());
            assert_eq!(basis.from_coords(&space, &coords), f);
        }
    }

    #[test]
    fn coords_reject_inhomogeneous_fields() {
        let space = SpinorSpace::new(3).unwrap();
        let basis = SpinorFieldBasis::new(&space, 2);
        let f = SpinorField::basis_spinor(&space, 0); // degree 0
        assert!(basis.coords(&f).is_err());
    }

    #[test]
    fn homogeneity_bookkeeping() {
        let space = SpinorSpace::new(3).unwrap();
        let x1 = MultiPoly::variable(3, 0);
        let f = SpinorField::monomial_spinor(&space, &x1, 1);
        assert_eq!(f.homogeneous_degree(), Some(1));
        assert!(f.is_homogeneous_of(1));
        assert!(!f.is_homogeneous_of(2));
        let mixed = f.add(&SpinorField::basis_spinor(&space, 1));
        assert_eq!(mixed.homogeneous_degree(), None);
        assert!(SpinorField::zero(&space).is_homogeneous_of(7));
    }

    #[test]
    fn one_form_roundtrips_through_k_form() {
        let space = SpinorSpace::new(3).unwrap();
        let basis = OneFormBasis::new(&space, 1);
        let psi = basis.field(&space, 3);
        let k = KFormField::from_one_form(&space, &psi);
        assert_eq!(k.degree(), 1);
        assert_eq!(k.into_one_form(&space), psi);
    }
}
