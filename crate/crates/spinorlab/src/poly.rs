//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms are held in a map keyed by exponent multi-index, ordered graded
//! lexicographically, so every polynomial has one canonical representation:
//! no zero coefficients are stored, and iteration (hence serialization and
//! hashing of printouts) is deterministic.

use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// An exponent multi-index. `exps[i]` is the power of variable `x_{i+1}`.
///
/// Ordering is *graded lexicographic*: first by total degree, then
/// lexicographically on the exponent vector. This is the canonical term order
/// for the whole crate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn constant(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    /// Product of two monomials (exponent-wise sum).
    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x1^2*x3`, or `1` for the constant monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A sparse polynomial in `num_vars` variables with [`Scalar`] coefficients.
///
/// Invariants: every stored coefficient is nonzero; every key has exactly
/// `num_vars` entries. All constructors and operations preserve both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(num_vars), c);
        }
        p
    }

    pub fn one(num_vars: usize) -> Self {
        MultiPoly::constant(num_vars, Scalar::one())
    }

    /// The variable `x_{i+1}` (zero-based `i`). Panics if `i >= num_vars`.
    pub fn variable(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable index {i} out of range {num_vars}");
        let mut exps = vec![0u16; num_vars];
        exps[i] = 1;
        MultiPoly::of_term(num_vars, exps, Scalar::one())
    }

    /// Single-term polynomial `c * x^exps`.
    pub fn of_term(num_vars: usize, exps: Vec<u16>, c: Scalar) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent vector length mismatch");
        let mut p = MultiPoly::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    /// `‖x‖² = x1² + ... + xm²`.
    pub fn norm_squared(num_vars: usize) -> Self {
        let mut p = MultiPoly::zero(num_vars);
        for i in 0..num_vars {
            let mut exps = vec![0u16; num_vars];
            exps[i] = 2;
            p.terms.insert(Monomial(exps), Scalar::one());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, mono: &Monomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree of the highest term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(k)` if every term has total degree `k` (`None` if zero or mixed).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    fn insert_term(&mut self, mono: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.try_add(other).expect("polynomial variable-count mismatch")
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.try_sub(other).expect("polynomial variable-count mismatch")
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.num_vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Exact product. Errors when the variable counts differ.
    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.try_mul(other).expect("polynomial variable-count mismatch")
    }

    /// Product with every term of total degree `> max_degree` dropped.
    /// Used by the graded characteristic-class engine, where everything above
    /// the manifold dimension is zero anyway.
    pub fn mul_truncated(&self, other: &MultiPoly, max_degree: usize) -> MultiPoly {
        assert_eq!(self.num_vars, other.num_vars, "variable-count mismatch");
        let mut out = MultiPoly::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > max_degree {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() > max_degree {
                    continue;
                }
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Drops every term of total degree different from `degree`.
    pub fn homogeneous_part(&self, degree: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.num_vars);
        for (m, c) in &self.terms {
            if m.degree() == degree {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Exact partial derivative `∂/∂x_{i+1}`. Errors if `i` is out of range.
    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly> {
        if i >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.num_vars,
            });
        }
        let mut out = MultiPoly::zero(self.num_vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - 1;
            out.insert_term(Monomial(exps), c * &Scalar::from_int(e as i64));
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text form: terms in descending graded-lex order, every
    /// coefficient written explicitly, e.g. `2*x1^2*x3 + -1/2*x2`. The zero
    /// polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if m.degree() > 0 {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

/// All exponent multi-indices of total degree `k` in `m` variables, in
/// *descending* graded-lex order (so `x1^k` first, `xm^k` last). This is the
/// canonical monomial enumeration used for coordinate vectors of polynomial
/// fields.
pub fn monomials_of_degree(m: usize, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; m];
    fill(&mut out, &mut current, 0, k);
    return out;

    fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u16>, var: usize, remaining: usize) {
        if var + 1 == current.len() {
            current[var] = remaining as u16;
            out.push(Monomial(current.clone()));
            current[var] = 0;
            return;
        }
        for e in (0..=remaining).rev() {
            current[var] = e as u16;
            fill(out, current, var + 1, remaining - e);
        }
        current[var] = 0;
    }
}
