use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::laurent::{poly_div_exact, poly_gcd, LaurentPoly};
use crate::error::SkeinError;

/// An element of Q(t) as a quotient of Laurent polynomials, kept in a
/// canonical form so that equal values are structurally identical:
///
/// - the denominator has lowest exponent 0 and positive leading coefficient,
/// - numerator and denominator share no nonconstant polynomial factor,
/// - their integer contents are coprime,
/// - zero is 0/1.
///
/// Powers of t are units of Z[t,t^-1], so they are never treated as common
/// factors; any t-power ends up in the numerator (whose exponents may be
/// negative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalScalar {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, SkeinError> {
        if den.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::canonicalized(num, den))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn monomial(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(k, 1))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in Z[t,t^-1] (denominator 1).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn canonicalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }

        // Shift all t-powers out of the denominator and into the numerator.
        let den_shift = den.min_exp().unwrap();
        let mut den = den.shift(-den_shift);
        let mut num = num.shift(-den_shift);

        // Split the numerator as t^a * n with n(0) != 0, then cancel the
        // polynomial gcd of n and the denominator.
        let num_shift = num.min_exp().unwrap();
        let mut n = num.shift(-num_shift);
        let g = poly_gcd(&n, &den);
        if !g.is_one() {
            n = poly_div_exact(&n, &g);
            den = poly_div_exact(&den, &g);
        }

        // Shared integer content.
        let c = n.content().gcd(&den.content());
        if !c.is_one() {
            n = n.div_content(&c);
            den = den.div_content(&c);
        }

        if den.leading_coeff().is_negative() {
            n = n.neg();
            den = den.neg();
        }

        num = n.shift(num_shift);
        Self { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::canonicalized(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::canonicalized(num, den)
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        Self::canonicalized(num, den)
    }

    pub fn div(&self, other: &Self) -> Result<Self, SkeinError> {
        if other.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        let num = self.num.mul(&other.den);
        let den = self.den.mul(&other.num);
        Ok(Self::canonicalized(num, den))
    }

    /// Evaluate at a complex point t0. Errors with DegenerateScalar when the
    /// denominator evaluates within `tolerance` of zero.
    pub fn eval(&self, t0: Complex64, tolerance: f64) -> Result<Complex64, SkeinError> {
        let den = self.den.eval(t0);
        if den.norm() <= tolerance {
            return Err(SkeinError::DegenerateScalar);
        }
        let v = self.num.eval(t0) / den;
        if !v.is_finite() {
            return Err(SkeinError::NonFinite);
        }
        Ok(v)
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 && !self.num.to_string().starts_with('-') {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
