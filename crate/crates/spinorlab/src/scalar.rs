//! Exact scalars: Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.
//!
//! Complex spinor representations need `i`, and eigenvalue/multiplicity
//! bookkeeping needs exact rationals, so the coefficient field for the whole
//! crate is `ℚ(i)`. Both parts are arbitrary-precision [`BigRational`]s: values
//! stay reduced with positive denominators, equality is structural, and there
//! is no rounding anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A Gaussian rational `re + im·i`.
///
/// `re` and `im` are kept in lowest terms with positive denominators — that is
/// the [`BigRational`] invariant, so it cannot be violated from outside.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    /// `0`.
    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    /// `1`.
    pub fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// The integer `n`.
    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// The rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// The Gaussian rational `a/b + (c/d)·i`. Panics if `b == 0` or `d == 0`.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        assert!(b != 0 && d != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    /// Wraps an exact real rational.
    pub fn from_rational(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    /// Real part.
    pub fn re(&self) -> &BigRational {
        &self.re
    }

    /// Imaginary part.
    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True if the value is real (imaginary part zero).
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True if both parts are integers.
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Complex conjugate `re - im·i`.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        // 1/(a+bi) = (a-bi)/(a²+b²)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Scalar {
            re: &self.re / &norm,
            im: -&self.im / &norm,
        }
    }

    /// The positive least common multiple of the two denominators; multiplying
    /// by it clears this scalar to a Gaussian integer.
    pub fn denominator_lcm(&self) -> BigInt {
        use num::Integer;
        self.re.denom().lcm(self.im.denom())
    }

    /// Multiplies by an integer in place (used when clearing denominators).
    pub fn scale_int(&mut self, n: &BigInt) {
        let f = BigRational::from_integer(n.clone());
        self.re *= &f;
        self.im *= &f;
    }

    /// Canonical text form of a (real) rational: `p` or `p/q`.
    fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if r.is_integer() {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: `a`, `b*i`, or `(a+b*i)` / `(a-b*i)` when both parts are
    /// nonzero. Real parts print as `p` or `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return Scalar::fmt_rational(&self.re, f);
        }
        if self.re.is_zero() {
            Scalar::fmt_rational(&self.im, f)?;
            return write!(f, "*i");
        }
        write!(f, "(")?;
        Scalar::fmt_rational(&self.re, f)?;
        if self.im.is_positive() {
            write!(f, "+")?;
        }
        Scalar::fmt_rational(&self.im, f)?;
        write!(f, "*i)")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        (&self).mul(&rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc) i, with cheap paths for the
        // real factors that dominate matrix elimination.
        if self.im.is_zero() {
            return Scalar {
                re: &self.re * &rhs.re,
                im: &self.re * &rhs.im,
            };
        }
        if rhs.im.is_zero() {
            return Scalar {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            };
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        (&self).div(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn field_inverse() {
        let z = Scalar::from_parts(3, 2, -1, 5); // 3/2 - i/5
        assert_eq!(&z * &z.inv(), Scalar::one());
    }

    #[test]
    fn conjugate_multiplies_to_norm() {
        let z = Scalar::from_parts(1, 1, 1, 1); // 1 + i
        assert_eq!(&z * &z.conj(), Scalar::from_int(2));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_int(-3).to_string(), "-3");
        assert_eq!(Scalar::from_ratio(2, 4).to_string(), "1/2");
        assert_eq!(Scalar::i().to_string(), "1*i");
        assert_eq!(Scalar::from_parts(1, 2, -1, 3).to_string(), "(1/2-1/3*i)");
    }

    #[test]
    fn denominator_clearing() {
        let mut z = Scalar::from_parts(1, 6, 1, 4);
        let l = z.denominator_lcm();
        assert_eq!(l, BigInt::from(12));
        z.scale_int(&l);
        assert!(z.is_gaussian_integer());
        assert_eq!(z, Scalar::from_parts(2, 1, 3, 1));
    }
}
