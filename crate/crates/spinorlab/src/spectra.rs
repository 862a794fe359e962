//! Sphere spectra of the Dirac and higher-spin Dirac operators, and the Weyl
//! dimension formula used to cross-check multiplicities.
//!
//! On the unit sphere `S^n ⊂ ℝ^{n+1}`:
//!
//! * the Dirac operator has eigenvalues `±(n/2 + l)`, `l ≥ 0`, with
//!   multiplicity `2^⌊n/2⌋ · C(l+n-1, l)`;
//! * for `0 < j < n/2` the operator `D_j` acting on spinor-valued `j`-forms in
//!   the kernel of Clifford contraction has, for each level `l ≥ 1`, two
//!   eigenvalue series:
//!
//!   ```text
//!   μ¹_l = ±(n/2 + l)
//!     mult: 2^⌊n/2⌋ C(n+1, j+1) C(l+n, l-1) (n-2j)(j+1) / ((l+j)(l+n-j))
//!   μ²_l = ±((n-2j)/(n-2j+2)) (n/2 + l)
//!     mult: 2^⌊n/2⌋ C(n+1, j)   C(l+n, l-1) (n-2j+2) j  / ((l+j-1)(l+n-j+1))
//!   ```
//!
//! `j = 1` is the Rarita-Schwinger operator; [`rs_spectrum`] implements its
//! specialized closed forms independently so the test suite can check they
//! agree with the general family.
//!
//! Every multiplicity is computed as an exact rational and verified to be a
//! positive integer before a row is emitted.

use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact binomial coefficient, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `2^⌊n/2⌋`, the spinor-space dimension entering every multiplicity.
fn spinor_factor(n: usize) -> BigInt {
    BigInt::one() << (n / 2)
}

/// Which of the two eigenvalue series a spectrum row belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Series {
    #[serde(rename = "mu1")]
    Mu1,
    #[serde(rename = "mu2")]
    Mu2,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::Mu1 => write!(f, "mu1"),
            Series::Mu2 => write!(f, "mu2"),
        }
    }
}

/// Sign of an eigenvalue (spectra are symmetric around zero).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// One eigenvalue of a sphere spectrum: `sign · eigenvalue_abs` with its
/// multiplicity. `j = 0` marks Dirac rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumRow {
    pub n: usize,
    pub j: usize,
    pub l: usize,
    pub series: Series,
    pub sign: Sign,
    pub eigenvalue_abs: BigRational,
    pub multiplicity: BigInt,
}

impl std::str::FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mu1" => Ok(Series::Mu1),
            "mu2" => Ok(Series::Mu2),
            other => Err(Error::InvalidDescriptor(format!(
                "unknown series '{other}' (expected mu1 or mu2)"
            ))),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidDescriptor(format!(
                "unknown sign '{other}' (expected + or -)"
            ))),
        }
    }
}

impl SpectrumRow {
    /// Header of the CSV table format.
    pub const CSV_HEADER: &'static str =
        "n,j,l,series,sign,eigenvalue_num,eigenvalue_den,multiplicity";

    /// The signed eigenvalue.
    pub fn eigenvalue(&self) -> BigRational {
        match self.sign {
            Sign::Plus => self.eigenvalue_abs.clone(),
            Sign::Minus => -self.eigenvalue_abs.clone(),
        }
    }

    /// One CSV line matching [`Self::CSV_HEADER`]; the eigenvalue is split
    /// into exact numerator/denominator columns.
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.j,
            self.l,
            self.series,
            self.sign,
            self.eigenvalue_abs.numer(),
            self.eigenvalue_abs.denom(),
            self.multiplicity
        )
    }

    /// Parses one CSV line produced by [`Self::to_csv_line`].
    pub fn from_csv_line(line: &str) -> Result<SpectrumRow> {
        let bad = |what: &str| Error::InvalidDescriptor(format!("{what} in row '{line}'"));
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 8 {
            return Err(bad("expected 8 comma-separated fields"));
        }
        let parse_usize =
            |s: &str, what: &str| s.trim().parse::<usize>().map_err(|_| bad(what));
        let parse_bigint = |s: &str, what: &str| {
            s.trim().parse::<BigInt>().map_err(|_| bad(what))
        };
        let den = parse_bigint(fields[6], "bad eigenvalue denominator")?;
        if den.is_zero() {
            return Err(bad("zero eigenvalue denominator"));
        }
        Ok(SpectrumRow {
            n: parse_usize(fields[0], "bad n")?,
            j: parse_usize(fields[1], "bad j")?,
            l: parse_usize(fields[2], "bad l")?,
            series: fields[3].trim().parse()?,
            sign: fields[4].trim().parse()?,
            eigenvalue_abs: BigRational::new(
                parse_bigint(fields[5], "bad eigenvalue numerator")?,
                den,
            ),
            multiplicity: parse_bigint(fields[7], "bad multiplicity")?,
        })
    }

    /// JSON object form; the eigenvalue and multiplicity are exact strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "j": self.j,
            "l": self.l,
            "series": self.series.to_string(),
            "sign": self.sign.to_string(),
            "eigenvalue": {
                "num": self.eigenvalue_abs.numer().to_string(),
                "den": self.eigenvalue_abs.denom().to_string(),
            },
            "multiplicity": self.multiplicity.to_string(),
        })
    }

    /// Parses the object form produced by [`Self::to_json_value`].
    pub fn from_json_value(v: &serde_json::Value) -> Result<SpectrumRow> {
        let bad = |what: &str| Error::InvalidDescriptor(format!("{what} in row {v}"));
        let get_usize = |key: &str| {
            v.get(key)
                .and_then(serde_json::Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| bad(&format!("missing integer '{key}'")))
        };
        let get_str = |key: &str| {
            v.get(key)
                .and_then(serde_json::Value::as_str)
                .ok_or_else(|| bad(&format!("missing string '{key}'")))
        };
        let eig = v
            .get("eigenvalue")
            .ok_or_else(|| bad("missing 'eigenvalue'"))?;
        let part = |key: &str| -> Result<BigInt> {
            eig.get(key)
                .and_then(serde_json::Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad(&format!("bad eigenvalue '{key}'")))
        };
        let den = part("den")?;
        if den.is_zero() {
            return Err(bad("zero eigenvalue denominator"));
        }
        Ok(SpectrumRow {
            n: get_usize("n")?,
            j: get_usize("j")?,
            l: get_usize("l")?,
            series: get_str("series")?.parse()?,
            sign: get_str("sign")?.parse()?,
            eigenvalue_abs: BigRational::new(part("num")?, den),
            multiplicity: get_str("multiplicity")?
                .parse()
                .map_err(|_| bad("bad multiplicity"))?,
        })
    }
}

fn rational(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Checks an exact rational multiplicity and converts it to an integer.
fn expect_integer_multiplicity(value: BigRational, what: &str) -> Result<BigInt> {
    if !value.is_integer() || !value.is_positive() {
        return Err(Error::Precondition(format!(
            "{what} is not a positive integer: {value}"
        )));
    }
    Ok(value.to_integer())
}

/// Dirac spectrum on `S^n`: rows for `l = 0..=lmax`, both signs.
pub fn dirac_spectrum(n: usize, lmax: usize) -> Result<Vec<SpectrumRow>> {
    if n < 2 {
        return Err(Error::UnsupportedParameter(format!(
            "sphere dimension n={n} must be at least 2"
        )));
    }
    let mut rows = Vec::new();
    for l in 0..=lmax {
        let eig = rational(int(n as i64 + 2 * l as i64), int(2));
        let mult = spinor_factor(n) * binomial(l as i64 + n as i64 - 1, l as i64);
        for sign in [Sign::Plus, Sign::Minus] {
            rows.push(SpectrumRow {
                n,
                j: 0,
                l,
                series: Series::Mu1,
                sign,
                eigenvalue_abs: eig.clone(),
                multiplicity: mult.clone(),
            });
        }
    }
    Ok(rows)
}

/// Exact rational multiplicity of one higher-spin series, before the
/// integrality check. Exposed so the verification suite can assert
/// integrality across a whole parameter sweep.
pub fn hsd_multiplicity_rational(n: usize, j: usize, l: usize, series: Series) -> BigRational {
    let (n, j, l) = (n as i64, j as i64, l as i64);
    let common = BigRational::from_integer(
        spinor_factor(n as usize) * binomial(l + n, l - 1),
    );
    match series {
        Series::Mu1 => {
            common
                * rational(
                    binomial(n + 1, j + 1) * int((n - 2 * j) * (j + 1)),
                    int((l + j) * (l + n - j)),
                )
        }
        Series::Mu2 => {
            common
                * rational(
                    binomial(n + 1, j) * int((n - 2 * j + 2) * j),
                    int((l + j - 1) * (l + n - j + 1)),
                )
        }
    }
}

/// Absolute eigenvalue of one higher-spin series.
pub fn hsd_eigenvalue_abs(n: usize, j: usize, l: usize, series: Series) -> BigRational {
    let half_n_plus_l = rational(int(n as i64 + 2 * l as i64), int(2));
    match series {
        Series::Mu1 => half_n_plus_l,
        Series::Mu2 => {
            let (n, j) = (n as i64, j as i64);
            rational(int(n - 2 * j), int(n - 2 * j + 2)) * half_n_plus_l
        }
    }
}

/// Spectrum of the higher-spin Dirac operator `D_j` on `S^n`, levels
/// `l = 1..=lmax`. Requires `0 < j < n/2`.
pub fn hsd_spectrum(n: usize, j: usize, lmax: usize) -> Result<Vec<SpectrumRow>> {
    if j == 0 || 2 * j >= n {
        return Err(Error::UnsupportedParameter(format!(
            "higher-spin parameter j={j} must satisfy 0 < j < n/2 (n={n})"
        )));
    }
    let mut rows = Vec::new();
    for l in 1..=lmax {
        for series in [Series::Mu1, Series::Mu2] {
            let eig = hsd_eigenvalue_abs(n, j, l, series);
            let mult = expect_integer_multiplicity(
                hsd_multiplicity_rational(n, j, l, series),
                &format!("multiplicity(n={n}, j={j}, l={l}, {series})"),
            )?;
            for sign in [Sign::Plus, Sign::Minus] {
                rows.push(SpectrumRow {
                    n,
                    j,
                    l,
                    series,
                    sign,
                    eigenvalue_abs: eig.clone(),
                    multiplicity: mult.clone(),
                });
            }
        }
    }
    Ok(rows)
}

/// Rarita-Schwinger spectrum on `S^n` via its *specialized* closed forms
/// (independent of [`hsd_spectrum`]; the two must agree at `j = 1`, and the
/// verification suite checks that they do):
///
/// ```text
/// μ¹: ±(n/2+l),           mult 2^⌊n/2⌋ C(n+1,2) C(l+n,l-1) · 2(n-2)/((l+1)(l+n-1))
/// μ²: ±((n-2)/n)(n/2+l),  mult 2^⌊n/2⌋ (n+1)   C(l+n,l-1) · n/(l(l+n))
/// ```
pub fn rs_spectrum(n: usize, lmax: usize) -> Result<Vec<SpectrumRow>> {
    if n < 3 {
        return Err(Error::UnsupportedParameter(format!(
            "Rarita-Schwinger spectrum needs n ≥ 3, got {n}"
        )));
    }
    let ni = n as i64;
    let mut rows = Vec::new();
    for l in 1..=lmax {
        let li = l as i64;
        let half_n_plus_l = rational(int(ni + 2 * li), int(2));
        let common = BigRational::from_integer(spinor_factor(n) * binomial(li + ni, li - 1));

        let mult1 = common.clone()
            * rational(
                binomial(ni + 1, 2) * int(2 * (ni - 2)),
                int((li + 1) * (li + ni - 1)),
            );
        let mult1 = expect_integer_multiplicity(mult1, "Rarita-Schwinger μ¹ multiplicity")?;
        let eig2 = rational(int(ni - 2), int(ni)) * half_n_plus_l.clone();
        let mult2 = common * rational(int(ni + 1) * int(ni), int(li * (li + ni)));
        let mult2 = expect_integer_multiplicity(mult2, "Rarita-Schwinger μ² multiplicity")?;

        for (series, eig, mult) in [
            (Series::Mu1, half_n_plus_l.clone(), mult1),
            (Series::Mu2, eig2, mult2),
        ] {
            for sign in [Sign::Plus, Sign::Minus] {
                rows.push(SpectrumRow {
                    n,
                    j: 1,
                    l,
                    series,
                    sign,
                    eigenvalue_abs: eig.clone(),
                    multiplicity: mult.clone(),
                });
            }
        }
    }
    Ok(rows)
}

/// A dominant highest weight for `Spin(N)` in the standard `e_i` coordinates:
/// entries all integers or all half-odd-integers, decreasing, and (for odd
/// `N`) nonnegative; for even `N` the last entry may be negative as long as
/// `λ_{r-1} ≥ |λ_r|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HighestWeight {
    entries: Vec<BigRational>,
}

impl HighestWeight {
    /// Builds a weight from halves: `halves[i]` is `2·λ_{i+1}`.
    pub fn from_halves(halves: Vec<i64>) -> Self {
        HighestWeight {
            entries: halves
                .into_iter()
                .map(|h| rational(int(h), int(2)))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    fn validate(&self, spin_n: usize) -> Result<()> {
        let rank = spin_n / 2;
        if self.entries.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: self.entries.len(),
            });
        }
        // All integral or all half-odd-integral.
        let doubled: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| (e * BigRational::from_integer(int(2))).to_integer())
            .collect();
        for (e, d) in self.entries.iter().zip(&doubled) {
            if *e != rational(d.clone(), int(2)) {
                return Err(Error::Precondition(format!(
                    "weight entry {e} is not an integer or half-integer"
                )));
            }
        }
        let parity = |b: &BigInt| (b % 2i32 != BigInt::zero()) as u8;
        if doubled.windows(2).any(|w| parity(&w[0]) != parity(&w[1])) {
            return Err(Error::Precondition(
                "weight entries must be all integral or all half-odd-integral".into(),
            ));
        }
        // Dominance.
        for w in self.entries.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Precondition(format!(
                    "weight is not dominant: {} < {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(last) = self.entries.last() {
            let ok = if spin_n % 2 == 1 {
                !last.is_negative()
            } else {
                // λ_{r-1} ≥ |λ_r| for even N (rank 1 imposes nothing).
                self.entries.len() < 2 || self.entries[self.entries.len() - 2] >= last.abs()
            };
            if !ok {
                return Err(Error::Precondition(
                    "weight is not dominant for this group".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Dimension of the irreducible `Spin(N)` representation with the given
/// highest weight, by the Weyl dimension formula
/// `dim = Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` over the positive roots
/// (`e_i ± e_j` and, for odd `N`, `e_i`).
pub fn weyl_dim(spin_n: usize, weight: &HighestWeight) -> Result<BigInt> {
    if spin_n < 3 {
        return Err(Error::UnsupportedParameter(format!(
            "Spin({spin_n}) is not supported (need N ≥ 3)"
        )));
    }
    weight.validate(spin_n)?;
    let rank = spin_n / 2;
    let odd = spin_n % 2 == 1;
    // ρ = (r - 1/2, ..., 1/2) for B_r; (r-1, ..., 1, 0) for D_r.
    let rho: Vec<BigRational> = (0..rank)
        .map(|i| {
            if odd {
                rational(int(2 * (rank as i64 - i as i64) - 1), int(2))
            } else {
                BigRational::from_integer(int(rank as i64 - 1 - i as i64))
            }
        })
        .collect();
    let v: Vec<BigRational> = weight
        .entries
        .iter()
        .zip(&rho)
        .map(|(a, b)| a + b)
        .collect();

    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for i in 0..rank {
        for j in i + 1..rank {
            num *= &v[i] - &v[j];
            den *= &rho[i] - &rho[j];
            num *= &v[i] + &v[j];
            den *= &rho[i] + &rho[j];
        }
        if odd {
            num *= v[i].clone();
            den *= rho[i].clone();
        }
    }
    let dim = num / den;
    if !dim.is_integer() || !dim.is_positive() {
        return Err(Error::Precondition(format!(
            "Weyl formula gave a non-integer dimension {dim}"
        )));
    }
    Ok(dim.to_integer())
}

/// The highest weight `((2k+1)/2, 3/2, 1/2, ..., 1/2)` (rank `⌊m/2⌋` entries)
/// of the `Spin(m)` module conjecturally carried by the degree-`k`
/// Rarita-Schwinger solutions killed by `ℒ`. Returns `None` when the rank is
/// too small to form it (`m = 3`), in which case that solution summand is
/// expected to vanish — the brute-force computation confirms it does.
pub fn m1_highest_weight(m: usize, k: usize) -> Option<HighestWeight> {
    let rank = m / 2;
    if rank < 2 {
        return None;
    }
    let mut halves = vec![1i64; rank];
    halves[0] = 2 * k as i64 + 1;
    halves[1] = 3;
    Some(HighestWeight::from_halves(halves))
}

/// Representation-theoretic prediction for `dim M¹(m, k)`, the space of
/// degree-`k` Rarita-Schwinger solutions with `ℒψ = 0`: the Weyl dimension of
/// [`m1_highest_weight`], summed over both chiralities (`±` last entry) for
/// even `m`, and `0` when the weight does not exist.
pub fn expected_m1_dim(m: usize, k: usize) -> Result<BigInt> {
    let Some(weight) = m1_highest_weight(m, k) else {
        return Ok(BigInt::zero());
    };
    let dim = weyl_dim(m, &weight)?;
    if m % 2 == 0 {
        let mut halves: Vec<i64> = weight
            .entries()
            .iter()
            .map(|e| (e * BigRational::from_integer(int(2))).to_integer())
            .map(|b| {
                // entries fit in i64 for all supported (m, k)
                let s: String = b.to_string();
                s.parse::<i64>().expect("small weight entry")
            })
            .collect();
        let last = halves.len() - 1;
        halves[last] = -halves[last];
        let mirrored = HighestWeight::from_halves(halves);
        Ok(dim + weyl_dim(m, &mirrored)?)
    } else {
        Ok(dim)
    }
}

/// Closed-form dimension of the degree-`k` spherical monogenics on `ℝ^m`:
/// `2^⌊m/2⌋ · C(k+m-2, k)`.
pub fn monogenic_dimension_formula(m: usize, k: usize) -> BigInt {
    spinor_factor(m) * binomial(k as i64 + m as i64 - 2, k as i64)
}
