//! Characteristic classes over exact rationals.
//!
//! Two cooperating models of the cohomology of an oriented `dim`-manifold:
//!
//! * [`CharClass`] — the abstract truncated polynomial ring `ℚ[p₁, p₂, …]`
//!   in Pontryagin generators, graded so that `p_i` is a `4i`-form and
//!   everything above form-degree `dim` is zero. This is the reporting and
//!   pairing format.
//! * [`ChernRoots`] — the formal-root model: `n = dim/2` commuting 2-form
//!   variables `x_1…x_n` such that the complexified (co)tangent bundle has
//!   Chern roots `±x_1, …, ±x_n` and `p_j = e_j(x_1², …, x_n²)`. All series
//!   (`Â`, Chern characters, exterior powers) are computed here and then
//!   re-expressed in the `p_j` by exact linear algebra.
//!
//! The bridge `ChernRoots::to_pont` is self-checking: a symmetric even
//! polynomial either lies in the span of the Pontryagin monomials or the
//! conversion reports failure loudly; nothing is approximated.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::matrix::Matrix;
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Manifold dimensions the engine supports.
pub const SUPPORTED_DIMS: [usize; 5] = [4, 6, 8, 10, 12];

fn check_dim(dim: usize) -> Result<()> {
    if SUPPORTED_DIMS.contains(&dim) {
        Ok(())
    } else {
        Err(Error::UnsupportedParameter(format!(
            "manifold dimension {dim} not supported (supported: 4, 6, 8, 10, 12)"
        )))
    }
}

/// Exponent vector of a Pontryagin monomial: `[a₁, a₂, …]` stands for
/// `p₁^a₁ p₂^a₂ ⋯` (trailing zeros trimmed, so the empty vector is `1`).
pub type PontMonomial = Vec<u16>;

/// The weight of `Π p_i^{a_i}` is `Σ i·a_i`; the monomial is a `4·weight`-form.
pub fn pont_weight(mono: &[u16]) -> usize {
    mono.iter()
        .enumerate()
        .map(|(i, &a)| (i + 1) * a as usize)
        .sum()
}

fn trim(mut mono: PontMonomial) -> PontMonomial {
    while mono.last() == Some(&0) {
        mono.pop();
    }
    mono
}

/// Renders a Pontryagin monomial canonically: `""` → `1`, `[2]` → `p1^2`,
/// `[1,1]` → `p1*p2`.
pub fn format_pont_monomial(mono: &[u16]) -> String {
    if mono.iter().all(|&a| a == 0) {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &a) in mono.iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("p{}", i + 1)),
            _ => parts.push(format!("p{}^{}", i + 1, a)),
        }
    }
    parts.join("*")
}

/// Parses the canonical monomial syntax accepted in manifold descriptors:
/// `1`, `p2`, `p1^2`, `p1*p2`, with arbitrary whitespace around `*`.
pub fn parse_pont_monomial(s: &str) -> Result<PontMonomial> {
    let body = s.trim();
    if body == "1" {
        return Ok(Vec::new());
    }
    let mut exps: Vec<u16> = Vec::new();
    for factor in body.split('*') {
        let f = factor.trim();
        let rest = f.strip_prefix('p').ok_or_else(|| {
            Error::InvalidDescriptor(format!("bad Pontryagin monomial '{s}'"))
        })?;
        let (idx_str, exp) = match rest.split_once('^') {
            Some((i, e)) => (
                i,
                e.trim().parse::<u16>().map_err(|_| {
                    Error::InvalidDescriptor(format!("bad exponent in '{s}'"))
                })?,
            ),
            None => (rest, 1),
        };
        let idx: usize = idx_str.trim().parse().map_err(|_| {
            Error::InvalidDescriptor(format!("bad generator index in '{s}'"))
        })?;
        if idx == 0 || exp == 0 {
            return Err(Error::InvalidDescriptor(format!(
                "bad Pontryagin monomial '{s}'"
            )));
        }
        if exps.len() < idx {
            exps.resize(idx, 0);
        }
        exps[idx - 1] = exps[idx - 1].checked_add(exp).ok_or_else(|| {
            Error::InvalidDescriptor(format!("exponent overflow in '{s}'"))
        })?;
    }
    Ok(trim(exps))
}

/// An element of the truncated Pontryagin ring of a `dim`-manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharClass {
    dim: usize,
    terms: BTreeMap<PontMonomial, BigRational>,
}

impl CharClass {
    pub fn zero(dim: usize) -> Self {
        CharClass {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: BigRational) -> Self {
        let mut class = CharClass::zero(dim);
        if !c.is_zero() {
            class.terms.insert(Vec::new(), c);
        }
        class
    }

    pub fn one(dim: usize) -> Self {
        CharClass::constant(dim, BigRational::one())
    }

    /// The generator `p_i` (`i ≥ 1`), or zero when `p_i` exceeds the
    /// truncation degree.
    pub fn generator(dim: usize, i: usize) -> Self {
        assert!(i >= 1, "Pontryagin generators are numbered from 1");
        let mut mono = vec![0u16; i];
        mono[i - 1] = 1;
        let mut class = CharClass::zero(dim);
        if pont_weight(&mono) <= dim / 4 {
            class.terms.insert(mono, BigRational::one());
        }
        class
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Maximal monomial weight kept by the truncation (`⌊dim/4⌋`).
    pub fn max_weight(&self) -> usize {
        self.dim / 4
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PontMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &[u16]) -> BigRational {
        let key = trim(mono.to_vec());
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, mono: PontMonomial, c: BigRational) {
        let key = trim(mono);
        if pont_weight(&key) > self.max_weight() || c.is_zero() {
            return;
        }
        let cancelled = match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                v.is_zero()
            }
            None => {
                self.terms.insert(key.clone(), c);
                false
            }
        };
        if cancelled {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &CharClass) -> CharClass {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CharClass) -> CharClass {
        self.add(&other.scale(&BigRational::from_integer(BigInt::from(-1))))
    }

    pub fn scale(&self, c: &BigRational) -> CharClass {
        let mut out = CharClass::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    /// Truncated graded product.
    pub fn mul(&self, other: &CharClass) -> CharClass {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = CharClass::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if pont_weight(ma) + pont_weight(mb) > self.max_weight() {
                    continue;
                }
                let mut m = ma.clone();
                if m.len() < mb.len() {
                    m.resize(mb.len(), 0);
                }
                for (i, &b) in mb.iter().enumerate() {
                    m[i] += b;
                }
                out.insert(m, ca * cb);
            }
        }
        out
    }

    /// The component of exact weight `w` (a `4w`-form).
    pub fn weight_part(&self, w: usize) -> CharClass {
        let mut out = CharClass::zero(self.dim);
        for (m, c) in &self.terms {
            if pont_weight(m) == w {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// The top-degree (volume-form) component: weight exactly `dim/4`.
    /// Empty whenever `dim` is not a multiple of 4.
    pub fn top_part(&self) -> CharClass {
        if self.dim % 4 != 0 {
            return CharClass::zero(self.dim);
        }
        self.weight_part(self.dim / 4)
    }

    /// Pairs the top-degree component with Pontryagin numbers. Monomials
    /// absent from the table count as zero.
    pub fn pair(&self, numbers: &BTreeMap<PontMonomial, BigRational>) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in self.top_part().terms {
            if let Some(v) = numbers.get(&m) {
                acc += c * v;
            }
        }
        acc
    }
}

impl fmt::Display for CharClass {
    /// Canonical form, ordered by weight then by exponent vector:
    /// `1 - 1/24*p1 + 7/5760*p1^2 - 1/1440*p2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&PontMonomial, &BigRational)> = self.terms.iter().collect();
        // Within a weight, higher powers of lower generators come first, so
        // degree-8 reads `7/5760*p1^2 - 1/1440*p2`.
        entries.sort_by(|(ma, _), (mb, _)| {
            pont_weight(ma).cmp(&pont_weight(mb)).then(mb.cmp(ma))
        });
        for (idx, (m, c)) in entries.iter().enumerate() {
            let mag = c.abs();
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_pont_monomial(m);
            if mono == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Coefficients `c_t` of `(x/2)/sinh(x/2) = Σ_t c_t x^{2t}`, computed by
/// exact power-series inversion of `sinh(u)/u` at `u = x/2`.
pub fn ahat_univariate_coefficients(max_t: usize) -> Vec<BigRational> {
    // f_t = coefficient of x^{2t} in sinh(x/2)/(x/2) = Σ x^{2t}/(4^t (2t+1)!).
    let mut f = Vec::with_capacity(max_t + 1);
    for t in 0..=max_t {
        let mut den = BigInt::one();
        for k in 1..=(2 * t + 1) {
            den *= BigInt::from(k);
        }
        den *= BigInt::from(4u32).pow(t as u32);
        f.push(BigRational::new(BigInt::one(), den));
    }
    // Invert: g·f = 1.
    let mut g: Vec<BigRational> = vec![BigRational::one()];
    for t in 1..=max_t {
        let mut acc = BigRational::zero();
        for i in 1..=t {
            acc += &f[i] * &g[t - i];
        }
        g.push(-acc);
    }
    g
}

/// The formal Chern-root model for a manifold of even dimension `dim`:
/// `n = dim/2` two-form variables, truncation above form-degree `dim`.
pub struct ChernRoots {
    n: usize,
    /// Truncation bound in x-degree (each `x_i` is a 2-form): `dim/2`.
    top: usize,
}

impl ChernRoots {
    pub fn new(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(ChernRoots {
            n: dim / 2,
            top: dim / 2,
        })
    }

    /// A root model with an explicitly raised truncation bound (in x-degree,
    /// i.e. half the form-degree). Used by consistency checks that need to
    /// see terms above the volume form of the standard model.
    pub fn with_truncation(n_roots: usize, top: usize) -> Self {
        ChernRoots { n: n_roots, top }
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn num_roots(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.n)
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(self.n)
    }

    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.mul_truncated(b, self.top)
    }

    /// `e^{s·x_i}` truncated, for `s = ±1`.
    pub fn exp_root(&self, i: usize, s: i64) -> MultiPoly {
        assert!(i < self.n, "root index out of range");
        assert!(s == 1 || s == -1, "sign must be ±1");
        let mut out = self.zero();
        let mut factorial = BigInt::one();
        for t in 0..=self.top {
            if t > 0 {
                factorial *= BigInt::from(t);
            }
            let mut exps = vec![0u16; self.n];
            exps[i] = t as u16;
            let num = if s == -1 && t % 2 == 1 {
                BigInt::from(-1)
            } else {
                BigInt::one()
            };
            let c = Scalar::from_rational(BigRational::new(num, factorial.clone()));
            out = out.add(&MultiPoly::of_term(self.n, exps, c));
        }
        out
    }

    /// `Σ_i (e^{x_i} + e^{-x_i}) = Σ_i 2·cosh(x_i)`: the Chern character of
    /// the complexified cotangent bundle.
    pub fn ch_cotangent_poly(&self) -> MultiPoly {
        let mut out = self.zero();
        for i in 0..self.n {
            out = out.add(&self.exp_root(i, 1)).add(&self.exp_root(i, -1));
        }
        out
    }

    /// `Π_i (x_i/2)/sinh(x_i/2)` truncated: the Â class.
    pub fn ahat_poly(&self) -> MultiPoly {
        let coeffs = ahat_univariate_coefficients(self.top / 2);
        let mut out = self.one();
        for i in 0..self.n {
            let mut factor = self.zero();
            for (t, c) in coeffs.iter().enumerate() {
                if 2 * t > self.top {
                    break;
                }
                let mut exps = vec![0u16; self.n];
                exps[i] = (2 * t) as u16;
                factor = factor.add(&MultiPoly::of_term(
                    self.n,
                    exps,
                    Scalar::from_rational(c.clone()),
                ));
            }
            out = self.mul(&out, &factor);
        }
        out
    }

    /// Chern character of `Λ^j` of the complexified cotangent bundle: the
    /// coefficient of `z^j` in `Π_i (1 + z·e^{x_i})(1 + z·e^{-x_i})`, i.e. in
    /// `Π_i (1 + z·2cosh(x_i) + z²)`.
    pub fn ch_exterior_poly(&self, j: usize) -> Result<MultiPoly> {
        if j > 2 * self.n {
            return Err(Error::UnsupportedParameter(format!(
                "exterior power {j} exceeds bundle rank {}",
                2 * self.n
            )));
        }
        // z-polynomial with truncated MultiPoly coefficients; degree ≤ j is
        // all we need to extract the z^j coefficient.
        let mut acc: Vec<MultiPoly> = vec![self.one()];
        for i in 0..self.n {
            let cosh2 = self.exp_root(i, 1).add(&self.exp_root(i, -1));
            let mut next: Vec<MultiPoly> = vec![self.zero(); (acc.len() + 2).min(j + 1)];
            for (d, coeff) in acc.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                if d < next.len() {
                    next[d] = next[d].add(coeff);
                }
                if d + 1 < next.len() {
                    next[d + 1] = next[d + 1].add(&self.mul(coeff, &cosh2));
                }
                if d + 2 < next.len() {
                    next[d + 2] = next[d + 2].add(coeff);
                }
            }
            acc = next;
        }
        Ok(acc.into_iter().nth(j).unwrap_or_else(|| self.zero()))
    }

    /// `Π_i (1 - e^{x_i})(1 - e^{-x_i})`: the value of the exterior-power
    /// generating polynomial at `z = -1`, used as a telescoping cross-check.
    pub fn euler_factor_poly(&self) -> MultiPoly {
        let mut out = self.one();
        for i in 0..self.n {
            let cosh2 = self.exp_root(i, 1).add(&self.exp_root(i, -1));
            // (1 - e^x)(1 - e^{-x}) = 2 - 2cosh(x).
            let factor = MultiPoly::constant(self.n, Scalar::from_int(2)).sub(&cosh2);
            out = self.mul(&out, &factor);
        }
        out
    }

    /// `p_j = e_j(x_1², …, x_n²)` as a root polynomial.
    pub fn pontryagin_poly(&self, j: usize) -> MultiPoly {
        assert!(j >= 1 && j <= self.n, "p_{j} undefined for {} roots", self.n);
        // Elementary symmetric polynomial via the product Π(1 + t·x_i²),
        // tracked as t-coefficients.
        let mut acc: Vec<MultiPoly> = vec![self.one()];
        for i in 0..self.n {
            let mut exps = vec![0u16; self.n];
            exps[i] = 2;
            let sq = MultiPoly::of_term(self.n, exps, Scalar::one());
            let mut next = vec![self.zero(); (acc.len() + 1).min(j + 1)];
            for (d, coeff) in acc.iter().enumerate() {
                if d < next.len() {
                    next[d] = next[d].add(coeff);
                }
                if d + 1 < next.len() {
                    next[d + 1] = next[d + 1].add(&coeff.mul(&sq));
                }
            }
            acc = next;
        }
        acc.into_iter().nth(j).unwrap_or_else(|| self.zero())
    }

    /// Power sum `Σ_i (x_i²)^w`, the Newton-identity side of the conversion
    /// cross-check.
    pub fn power_sum_poly(&self, w: usize) -> MultiPoly {
        let mut out = self.zero();
        for i in 0..self.n {
            let mut exps = vec![0u16; self.n];
            exps[i] = (2 * w) as u16;
            out = out.add(&MultiPoly::of_term(self.n, exps, Scalar::one()));
        }
        out
    }

    fn partitions(total: usize, max_part: usize) -> Vec<PontMonomial> {
        // Exponent vectors [a1, a2, …] with Σ i·a_i = total, parts ≤ max_part.
        fn rec(remaining: usize, part: usize, current: &mut PontMonomial, out: &mut Vec<PontMonomial>) {
            if remaining == 0 {
                out.push(trim(current.clone()));
                return;
            }
            if part == 0 {
                return;
            }
            let max_count = remaining / part;
            for count in (0..=max_count).rev() {
                current[part - 1] = count as u16;
                rec(remaining - part * count, part - 1, current, out);
                current[part - 1] = 0;
            }
        }
        let mut out = Vec::new();
        let mut current = vec![0u16; max_part];
        rec(total, max_part, &mut current, &mut out);
        out.sort();
        out
    }

    /// Expands a Pontryagin monomial `Π p_i^{a_i}` into the root model.
    pub fn pont_monomial_poly(&self, mono: &[u16]) -> MultiPoly {
        let mut out = self.one();
        for (i, &a) in mono.iter().enumerate() {
            for _ in 0..a {
                out = self.mul(&out, &self.pontryagin_poly(i + 1));
            }
        }
        out
    }

    /// Re-expresses a symmetric even root polynomial in Pontryagin
    /// generators. Errors if any graded slice lies outside their span (which
    /// would indicate the input is not an even symmetric function).
    pub fn to_pont(&self, poly: &MultiPoly) -> Result<CharClass> {
        let dim = self.dim();
        let mut out = CharClass::zero(dim);
        for w in 0..=(self.top / 2) {
            let slice = poly.homogeneous_part(2 * w);
            if w == 0 {
                if let Some(c) = slice.terms().next() {
                    out.insert(Vec::new(), rational_of(c.1)?);
                }
                continue;
            }
            if slice.is_zero() {
                continue;
            }
            let candidates = Self::partitions(w, self.n.min(w));
            let expansions: Vec<MultiPoly> = candidates
                .iter()
                .map(|m| self.pont_monomial_poly(m))
                .collect();
            // Shared x-monomial index for the linear system.
            let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
            for p in expansions.iter().chain(std::iter::once(&slice)) {
                for (m, _) in p.terms() {
                    let next = index.len();
                    index.entry(m.clone()).or_insert(next);
                }
            }
            let rows = index.len();
            let columns: Vec<Vec<Scalar>> = expansions
                .iter()
                .map(|p| {
                    let mut col = vec![Scalar::zero(); rows];
                    for (m, c) in p.terms() {
                        col[index[m]] = c.clone();
                    }
                    col
                })
                .collect();
            let mut rhs = vec![Scalar::zero(); rows];
            for (m, c) in slice.terms() {
                rhs[index[m]] = c.clone();
            }
            let matrix = Matrix::from_columns(rows, &columns);
            let solution = matrix.solve(&rhs).ok_or_else(|| {
                Error::Precondition(format!(
                    "degree-{} slice is not a polynomial in the Pontryagin classes",
                    4 * w
                ))
            })?;
            for (mono, coeff) in candidates.into_iter().zip(solution) {
                if !coeff.is_zero() {
                    out.insert(mono, rational_of(&coeff)?);
                }
            }
        }
        // Odd slices must vanish for a class of even symmetric origin.
        for d in (1..=self.top).step_by(2) {
            if !poly.homogeneous_part(d).is_zero() {
                return Err(Error::Precondition(format!(
                    "odd-degree component of x-degree {d} is nonzero"
                )));
            }
        }
        Ok(out)
    }
}

fn rational_of(s: &Scalar) -> Result<BigRational> {
    if !s.is_real() {
        return Err(Error::Precondition(
            "characteristic-class coefficient has an imaginary part".into(),
        ));
    }
    Ok(s.re().clone())
}

/// The Â class in Pontryagin generators, truncated for a `dim`-manifold.
pub fn ahat_series(dim: usize) -> Result<CharClass> {
    let roots = ChernRoots::new(dim)?;
    roots.to_pont(&roots.ahat_poly())
}

/// `Ch(T*_C)` — Chern character of the complexified cotangent bundle —
/// in Pontryagin generators: `dim + p₁ + (p₁² − 2p₂)/12 + …`.
pub fn ch_cotangent(dim: usize) -> Result<CharClass> {
    let roots = ChernRoots::new(dim)?;
    roots.to_pont(&roots.ch_cotangent_poly())
}

/// `Ch(Λ^j T*_C)` in Pontryagin generators. `j = 0` gives `1`; `j = 1` gives
/// [`ch_cotangent`].
pub fn ch_exterior_cotangent(dim: usize, j: usize) -> Result<CharClass> {
    let roots = ChernRoots::new(dim)?;
    roots.to_pont(&roots.ch_exterior_poly(j)?)
}

/// A formal sum of line bundles with integer multiples of the base roots as
/// Chern roots; used to exercise the ring laws of the Chern character.
#[derive(Clone, Debug)]
pub struct FormalBundle {
    /// Each root is a vector of integer coefficients over `x_1…x_n`.
    pub roots: Vec<Vec<i64>>,
}

impl FormalBundle {
    pub fn direct_sum(&self, other: &FormalBundle) -> FormalBundle {
        let mut roots = self.roots.clone();
        roots.extend(other.roots.iter().cloned());
        FormalBundle { roots }
    }

    pub fn tensor(&self, other: &FormalBundle) -> FormalBundle {
        let mut roots = Vec::new();
        for a in &self.roots {
            for b in &other.roots {
                roots.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        FormalBundle { roots }
    }

    /// `Ch = Σ_roots e^{root}`, truncated in the given root model.
    pub fn ch(&self, roots_model: &ChernRoots) -> MultiPoly {
        let n = roots_model.num_roots();
        let mut out = roots_model.zero();
        for root in &self.roots {
            assert_eq!(root.len(), n, "root length mismatch");
            // e^{Σ c_i x_i} = Π e^{c_i x_i}; expand the linear form's powers.
            let mut linear = MultiPoly::zero(n);
            for (i, &c) in root.iter().enumerate() {
                if c != 0 {
                    let mut exps = vec![0u16; n];
                    exps[i] = 1;
                    linear = linear.add(&MultiPoly::of_term(n, exps, Scalar::from_int(c)));
                }
            }
            let mut term = roots_model.one();
            let mut acc = roots_model.one();
            let mut factorial = BigInt::one();
            for t in 1..=roots_model.top {
                factorial *= BigInt::from(t);
                acc = roots_model.mul(&acc, &linear);
                if acc.is_zero() {
                    break;
                }
                term = term.add(&acc.scale(&Scalar::from_rational(BigRational::new(
                    BigInt::one(),
                    factorial.clone(),
                ))));
            }
            out = out.add(&term);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ahat_univariate_series_matches_known_values() {
        let c = ahat_univariate_coefficients(4);
        assert_eq!(c[0], rat(1, 1));
        assert_eq!(c[1], rat(-1, 24));
        assert_eq!(c[2], rat(7, 5760));
        assert_eq!(c[3], rat(-31, 967680));
        assert_eq!(c[4], rat(127, 154828800));
    }

    #[test]
    fn ahat_class_small_dimensions() {
        let a4 = ahat_series(4).unwrap();
        assert_eq!(a4.coefficient(&[]), rat(1, 1));
        assert_eq!(a4.coefficient(&[1]), rat(-1, 24));

        let a8 = ahat_series(8).unwrap();
        assert_eq!(a8.coefficient(&[1]), rat(-1, 24));
        assert_eq!(a8.coefficient(&[2]), rat(7, 5760));
        assert_eq!(a8.coefficient(&[0, 1]), rat(-4, 5760));
        assert_eq!(a8.to_string(), "1 - 1/24*p1 + 7/5760*p1^2 - 1/1440*p2");

        // Â₃ = (−31p₁³ + 44p₁p₂ − 16p₃)/967680 — the classical third term.
        let a12 = ahat_series(12).unwrap();
        assert_eq!(a12.coefficient(&[3]), rat(-31, 967680));
        assert_eq!(a12.coefficient(&[1, 1]), rat(44, 967680));
        assert_eq!(a12.coefficient(&[0, 0, 1]), rat(-16, 967680));
    }

    #[test]
    fn cotangent_character_expansion() {
        let c4 = ch_cotangent(4).unwrap();
        assert_eq!(c4.coefficient(&[]), rat(4, 1));
        assert_eq!(c4.coefficient(&[1]), rat(1, 1));

        let c8 = ch_cotangent(8).unwrap();
        assert_eq!(c8.coefficient(&[]), rat(8, 1));
        assert_eq!(c8.coefficient(&[1]), rat(1, 1));
        assert_eq!(c8.coefficient(&[2]), rat(1, 12));
        assert_eq!(c8.coefficient(&[0, 1]), rat(-2, 12));
    }

    #[test]
    fn exterior_powers_match_ranks_and_special_cases() {
        assert_eq!(
            ch_exterior_cotangent(4, 0).unwrap(),
            CharClass::one(4)
        );
        assert_eq!(
            ch_exterior_cotangent(4, 1).unwrap(),
            ch_cotangent(4).unwrap()
        );
        // Rank of Λ^j ℂ^4.
        for j in 0..=4 {
            let class = ch_exterior_cotangent(4, j).unwrap();
            let binom = [1i64, 4, 6, 4, 1][j];
            assert_eq!(class.coefficient(&[]), rat(binom, 1));
        }
        assert_eq!(
            ch_exterior_cotangent(8, 2).unwrap().coefficient(&[]),
            rat(28, 1)
        );
        assert!(ch_exterior_cotangent(4, 5).is_err());
        // Top exterior power of T*_C has trivial determinant here (roots sum
        // to zero): Ch(Λ^{2n}) = 1.
        assert_eq!(
            ch_exterior_cotangent(4, 4).unwrap(),
            CharClass::one(4)
        );
    }

    #[test]
    fn telescoping_alternating_sum() {
        // Raised truncation: both sides are compared through the full degree
        // 2·(number of roots), where the product side is genuinely nonzero.
        for n in [2usize, 3, 4] {
            let roots = ChernRoots::with_truncation(n, 2 * n);
            let mut alternating = roots.zero();
            for j in 0..=2 * n {
                let term = roots.ch_exterior_poly(j).unwrap();
                alternating = if j % 2 == 0 {
                    alternating.add(&term)
                } else {
                    alternating.sub(&term)
                };
            }
            let product = roots.euler_factor_poly();
            assert!(!product.is_zero(), "n {n}: product side must be nonzero");
            assert_eq!(alternating, product, "n {n}");
        }
        // Standard truncation: everything below the product's lowest degree
        // must cancel to exactly zero.
        for dim in [4, 6, 8] {
            let roots = ChernRoots::new(dim).unwrap();
            let mut alternating = roots.zero();
            for j in 0..=dim {
                let term = roots.ch_exterior_poly(j).unwrap();
                alternating = if j % 2 == 0 {
                    alternating.add(&term)
                } else {
                    alternating.sub(&term)
                };
            }
            assert!(alternating.is_zero(), "dim {dim}");
        }
    }

    #[test]
    fn pontryagin_conversion_roundtrip() {
        let roots = ChernRoots::new(8).unwrap();
        for j in 1..=2 {
            let class = roots.to_pont(&roots.pontryagin_poly(j)).unwrap();
            assert_eq!(class, CharClass::generator(8, j));
        }
        // Newton's identities on power sums of squares:
        // s₁ = p₁, s₂ = p₁² − 2p₂.
        let s1 = roots.to_pont(&roots.power_sum_poly(1)).unwrap();
        assert_eq!(s1, CharClass::generator(8, 1));
        let s2 = roots.to_pont(&roots.power_sum_poly(2)).unwrap();
        let expected = CharClass::generator(8, 1)
            .mul(&CharClass::generator(8, 1))
            .sub(&CharClass::generator(8, 2).scale(&rat(2, 1)));
        assert_eq!(s2, expected);
    }

    #[test]
    fn conversion_rejects_asymmetric_input() {
        let roots = ChernRoots::new(8).unwrap();
        // x₁² alone is not symmetric.
        let mut exps = vec![0u16; roots.num_roots()];
        exps[0] = 2;
        let poly = MultiPoly::of_term(roots.num_roots(), exps, Scalar::one());
        assert!(roots.to_pont(&poly).is_err());
        // Odd-degree input is rejected too.
        let mut exps = vec![0u16; roots.num_roots()];
        exps[0] = 1;
        let poly = MultiPoly::of_term(roots.num_roots(), exps, Scalar::one());
        assert!(roots.to_pont(&poly).is_err());
    }

    #[test]
    fn char_class_ring_operations() {
        let p1 = CharClass::generator(8, 1);
        let p2 = CharClass::generator(8, 2);
        let sum = p1.add(&p2);
        assert_eq!(sum.coefficient(&[1]), rat(1, 1));
        assert_eq!(sum.coefficient(&[0, 1]), rat(1, 1));
        let sq = p1.mul(&p1);
        assert_eq!(sq.coefficient(&[2]), rat(1, 1));
        // Weight-3 products vanish in dim 8.
        assert!(p1.mul(&sq).is_zero());
        assert!(p1.mul(&p2).is_zero());
        // In dim 12 they survive.
        let q1 = CharClass::generator(12, 1);
        let q2 = CharClass::generator(12, 2);
        assert_eq!(q1.mul(&q2).coefficient(&[1, 1]), rat(1, 1));
    }

    #[test]
    fn monomial_parsing_and_formatting() {
        assert_eq!(parse_pont_monomial("p1^2").unwrap(), vec![2]);
        assert_eq!(parse_pont_monomial("p2").unwrap(), vec![0, 1]);
        assert_eq!(parse_pont_monomial("p1 * p2").unwrap(), vec![1, 1]);
        assert_eq!(parse_pont_monomial("1").unwrap(), Vec::<u16>::new());
        assert_eq!(parse_pont_monomial("p1*p1").unwrap(), vec![2]);
        assert!(parse_pont_monomial("q3").is_err());
        assert!(parse_pont_monomial("p0").is_err());
        assert!(parse_pont_monomial("p1^x").is_err());
        assert_eq!(format_pont_monomial(&[2]), "p1^2");
        assert_eq!(format_pont_monomial(&[1, 1]), "p1*p2");
        assert_eq!(format_pont_monomial(&[]), "1");
    }

    #[test]
    fn formal_bundle_ring_laws() {
        let roots = ChernRoots::new(8).unwrap();
        let e = FormalBundle {
            roots: vec![vec![1, 0, 0, 0], vec![-1, 0, 0, 0]],
        };
        let f = FormalBundle {
            roots: vec![vec![0, 1, 0, 0], vec![0, 0, 2, -1]],
        };
        let lhs_sum = e.direct_sum(&f).ch(&roots);
        let rhs_sum = e.ch(&roots).add(&f.ch(&roots));
        assert_eq!(lhs_sum, rhs_sum);
        let lhs_prod = e.tensor(&f).ch(&roots);
        let rhs_prod = roots.mul(&e.ch(&roots), &f.ch(&roots));
        assert_eq!(lhs_prod, rhs_prod);
    }

    #[test]
    fn unsupported_dimensions_error() {
        assert!(ahat_series(5).is_err());
        assert!(ahat_series(14).is_err());
        assert!(ChernRoots::new(2).is_err());
    }
}
