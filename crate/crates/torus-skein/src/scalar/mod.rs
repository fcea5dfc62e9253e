//! The coefficient field: exact rational functions in t, or complex
//! numbers once t has been specialized.

mod laurent;
mod rational;

pub(crate) use laurent::complex_powi;
pub use laurent::LaurentPoly;
pub use rational::RationalScalar;

use std::fmt;

use num_complex::Complex64;

use crate::error::SkeinError;

/// Numeric guard against a specialization sitting at (or within rounding
/// distance of) a root of unity.
pub const DEFAULT_DEGENERACY_TOLERANCE: f64 = 1e-12;

/// A coefficient: exact in Q(t), or a complex double once specialized.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(RationalScalar),
    Numeric(Complex64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Numeric(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_one(),
            Scalar::Numeric(z) => *z == Complex64::new(1.0, 0.0),
        }
    }

    pub fn as_exact(&self) -> Option<&RationalScalar> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Numeric(_) => None,
        }
    }

    pub fn as_numeric(&self) -> Option<Complex64> {
        match self {
            Scalar::Exact(_) => None,
            Scalar::Numeric(z) => Some(*z),
        }
    }
}

impl From<RationalScalar> for Scalar {
    fn from(r: RationalScalar) -> Self {
        Scalar::Exact(r)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::Exact(RationalScalar::from_laurent(p))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Numeric(z) => write!(f, "{}", fmt_complex(*z)),
        }
    }
}

/// Complex number with 12 significant digits per component.
pub fn fmt_complex(z: Complex64) -> String {
    let re = fmt_sig12(z.re);
    if z.im == 0.0 {
        re
    } else if z.im.is_sign_negative() {
        format!("{re}-{}i", fmt_sig12(-z.im))
    } else {
        format!("{re}+{}i", fmt_sig12(z.im))
    }
}

fn fmt_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Which coefficient field is active.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    Exact,
    Numeric,
}

/// Carries the specialization choice: exact arithmetic in Q(t), or complex
/// arithmetic at a fixed t. All scalar constructors and the operations that
/// need t (monomials, division, evaluation) go through the context, and
/// every operation checks its operands against the active mode.
#[derive(Debug, Clone)]
pub struct ScalarContext {
    mode: ScalarMode,
    t_value: Option<Complex64>,
    degeneracy_tolerance: f64,
}

impl ScalarContext {
    pub fn exact() -> Self {
        Self {
            mode: ScalarMode::Exact,
            t_value: None,
            degeneracy_tolerance: DEFAULT_DEGENERACY_TOLERANCE,
        }
    }

    /// Numeric context specialized at t. Rejects t = 0 and non-finite t.
    pub fn numeric(t: Complex64) -> Result<Self, SkeinError> {
        if !t.is_finite() {
            return Err(SkeinError::NonFinite);
        }
        if t.norm() == 0.0 {
            return Err(SkeinError::DegenerateScalar);
        }
        Ok(Self {
            mode: ScalarMode::Numeric,
            t_value: Some(t),
            degeneracy_tolerance: DEFAULT_DEGENERACY_TOLERANCE,
        })
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        assert!(tolerance >= 0.0);
        self.degeneracy_tolerance = tolerance;
        self
    }

    pub fn mode(&self) -> ScalarMode {
        self.mode
    }

    pub fn t_value(&self) -> Option<Complex64> {
        self.t_value
    }

    pub fn tolerance(&self) -> f64 {
        self.degeneracy_tolerance
    }

    pub fn zero(&self) -> Scalar {
        match self.mode {
            ScalarMode::Exact => Scalar::Exact(RationalScalar::zero()),
            ScalarMode::Numeric => Scalar::Numeric(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> Scalar {
        match self.mode {
            ScalarMode::Exact => {
                Scalar::Exact(RationalScalar::from_laurent(LaurentPoly::integer(n)))
            }
            ScalarMode::Numeric => Scalar::Numeric(Complex64::new(n as f64, 0.0)),
        }
    }

    /// t^k in the active mode.
    pub fn monomial(&self, k: i64) -> Scalar {
        match self.mode {
            ScalarMode::Exact => Scalar::Exact(RationalScalar::monomial(k)),
            ScalarMode::Numeric => Scalar::Numeric(complex_powi(self.t_value.unwrap(), k)),
        }
    }

    /// Interpret a Laurent-polynomial literal in the active mode.
    pub fn from_laurent(&self, p: &LaurentPoly) -> Scalar {
        match self.mode {
            ScalarMode::Exact => Scalar::Exact(RationalScalar::from_laurent(p.clone())),
            ScalarMode::Numeric => Scalar::Numeric(p.eval(self.t_value.unwrap())),
        }
    }

    /// Err(ModeMismatch) unless the scalar belongs to this context's mode.
    pub fn check(&self, s: &Scalar) -> Result<(), SkeinError> {
        let matches = matches!(
            (self.mode, s),
            (ScalarMode::Exact, Scalar::Exact(_)) | (ScalarMode::Numeric, Scalar::Numeric(_))
        );
        if matches {
            Ok(())
        } else {
            Err(SkeinError::ModeMismatch)
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, SkeinError> {
        self.check(a)?;
        self.check(b)?;
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Ok(Scalar::Exact(x.add(y))),
            (Scalar::Numeric(x), Scalar::Numeric(y)) => finite(x + y),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, SkeinError> {
        self.check(a)?;
        self.check(b)?;
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Ok(Scalar::Exact(x.sub(y))),
            (Scalar::Numeric(x), Scalar::Numeric(y)) => finite(x - y),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Result<Scalar, SkeinError> {
        self.check(a)?;
        Ok(match a {
            Scalar::Exact(x) => Scalar::Exact(x.neg()),
            Scalar::Numeric(x) => Scalar::Numeric(-x),
        })
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, SkeinError> {
        self.check(a)?;
        self.check(b)?;
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Ok(Scalar::Exact(x.mul(y))),
            (Scalar::Numeric(x), Scalar::Numeric(y)) => finite(x * y),
            _ => unreachable!(),
        }
    }

    /// Division. Exact mode rejects a zero divisor; numeric mode rejects a
    /// divisor within the degeneracy tolerance of zero.
    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, SkeinError> {
        self.check(a)?;
        self.check(b)?;
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Ok(Scalar::Exact(x.div(y)?)),
            (Scalar::Numeric(x), Scalar::Numeric(y)) => {
                if y.norm() <= self.degeneracy_tolerance {
                    Err(SkeinError::DegenerateScalar)
                } else {
                    finite(x / y)
                }
            }
            _ => unreachable!(),
        }
    }

    /// Evaluate an exact scalar at this context's t (numeric mode only).
    pub fn eval(&self, a: &Scalar) -> Result<Scalar, SkeinError> {
        match (self.mode, a) {
            (ScalarMode::Numeric, Scalar::Exact(r)) => Ok(Scalar::Numeric(
                r.eval(self.t_value.unwrap(), self.degeneracy_tolerance)?,
            )),
            _ => Err(SkeinError::ModeMismatch),
        }
    }
}

fn finite(z: Complex64) -> Result<Scalar, SkeinError> {
    if z.is_finite() {
        Ok(Scalar::Numeric(z))
    } else {
        Err(SkeinError::NonFinite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn monomials() {
        let ctx = ScalarContext::exact();
        assert!(ctx.monomial(0).is_one());
        assert_eq!(ctx.monomial(3), Scalar::from(lp(&[(3, 1)])));

        let t = Complex64::new(0.0, 0.5);
        let nctx = ScalarContext::numeric(t).unwrap();
        assert_eq!(nctx.monomial(2).as_numeric().unwrap(), t * t);
    }

    #[test]
    fn identity_and_absorbing() {
        let ctx = ScalarContext::exact();
        let x = Scalar::from(lp(&[(2, 1), (-1, 5)]));
        assert_eq!(ctx.add(&ctx.zero(), &x).unwrap(), x);
        assert!(ctx.mul(&ctx.zero(), &x).unwrap().is_zero());
    }

    #[test]
    fn product_of_conjugate_binomials() {
        let ctx = ScalarContext::exact();
        let a = Scalar::from(lp(&[(1, 1), (-1, -1)]));
        let b = Scalar::from(lp(&[(1, 1), (-1, 1)]));
        assert_eq!(
            ctx.mul(&a, &b).unwrap(),
            Scalar::from(lp(&[(2, 1), (-2, -1)]))
        );
    }

    #[test]
    fn mode_mismatch_detected() {
        let ctx = ScalarContext::exact();
        let nctx = ScalarContext::numeric(Complex64::new(0.7, 0.3)).unwrap();
        let e = ctx.one();
        let n = nctx.one();
        assert_eq!(ctx.add(&e, &n), Err(SkeinError::ModeMismatch));
        assert_eq!(nctx.mul(&e, &n), Err(SkeinError::ModeMismatch));
    }

    #[test]
    fn degenerate_division_at_root_of_unity() {
        // t = 1: dividing by t - t^-1 = 0 must fail
        let ctx = ScalarContext::numeric(Complex64::new(1.0, 0.0)).unwrap();
        let d = ctx.sub(&ctx.monomial(1), &ctx.monomial(-1)).unwrap();
        assert_eq!(ctx.div(&ctx.one(), &d), Err(SkeinError::DegenerateScalar));
    }

    #[test]
    fn numeric_context_rejects_zero_t() {
        assert!(ScalarContext::numeric(Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn exact_division_example() {
        let ctx = ScalarContext::exact();
        let one = ctx.one();
        let d = ctx.sub(&ctx.monomial(1), &ctx.monomial(-1)).unwrap();
        let r = ctx.div(&one, &d).unwrap();
        let expected = RationalScalar::new(lp(&[(1, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(r, Scalar::Exact(expected));
    }
}
