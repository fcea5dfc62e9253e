use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A Laurent polynomial in t with arbitrary-precision integer coefficients.
///
/// Stored sparsely as exponent -> coefficient; no zero coefficient is ever
/// kept, so the zero polynomial has an empty map. Exponents may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The single term c * t^k (the zero polynomial when c = 0).
    pub fn monomial(exponent: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exponent, coeff);
        }
        Self { coeffs }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::monomial(0, n)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc = Self::zero();
        for (exp, c) in terms {
            acc.add_term(exp, c.into());
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    /// Lowest exponent present; None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent present; None for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Leading coefficient (of the highest exponent); zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_default()
    }

    pub fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    /// The gcd of all integer coefficients (positive; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by d, which must divide each one exactly.
    pub fn div_content(&self, d: &BigInt) -> Self {
        debug_assert!(!d.is_zero());
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "content division must be exact");
                    (e, q)
                })
                .collect(),
        }
    }

    /// Evaluate at a complex point. Negative exponents require t != 0,
    /// which the caller guarantees.
    pub fn eval(&self, t: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.terms() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            acc += c * complex_powi(t, e);
        }
        acc
    }
}

/// t^k for a (possibly negative, possibly large) integer exponent.
pub fn complex_powi(t: Complex64, k: i64) -> Complex64 {
    match i32::try_from(k) {
        Ok(k) => t.powi(k),
        // Out of i32 range: fall back to powf on the absolute value.
        Err(_) => {
            let p = t.powf(k.abs() as f64);
            if k < 0 {
                p.finv()
            } else {
                p
            }
        }
    }
}

// --- polynomial (nonnegative-exponent) helpers used by canonicalization ---

/// Remainder sequence step over Z[t]: returns r with c*a = q*b + r for
/// some integer c and deg r < deg b. Scales by lc(b) only when a leading
/// coefficient does not divide exactly, which keeps coefficients small on
/// the sparse inputs canonicalization produces. Both inputs must have
/// min_exp >= 0 and b must be nonzero.
pub(crate) fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(!b.is_zero());
    let db = b.max_exp().unwrap();
    let lb = b.leading_coeff();
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff();
        let (q, rem) = lr.div_rem(&lb);
        if rem.is_zero() {
            r = r.sub(&b.shift(dr - db).scale(&q));
        } else {
            // r <- lc(b)*r - lc(r)*t^(dr-db)*b
            r = r.scale(&lb).sub(&b.shift(dr - db).scale(&lr));
        }
    }
    r
}

/// Primitive part: content removed, leading coefficient made positive.
/// Zero maps to zero.
pub(crate) fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let mut c = p.content();
    if p.leading_coeff().is_negative() {
        c = -c;
    }
    p.div_content(&c)
}

/// Gcd of two polynomials with nonnegative exponents, returned primitive
/// with positive leading coefficient. gcd(0,0) = 0. Uses a primitive
/// pseudo-remainder sequence, so steps stay cheap on sparse inputs.
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(a.min_exp().unwrap_or(0) >= 0 && b.min_exp().unwrap_or(0) >= 0);
    let mut a = primitive_part(a);
    let mut b = primitive_part(b);
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    a
}

/// Exact division a / b in Z[t] (nonnegative exponents); panics in debug
/// builds if the division is not exact.
pub(crate) fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(!b.is_zero());
    let db = b.max_exp().unwrap();
    let lb = b.leading_coeff();
    let mut r = a.clone();
    let mut q = LaurentPoly::zero();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let (qc, rem) = r.leading_coeff().div_rem(&lb);
        debug_assert!(rem.is_zero(), "leading coefficient division must be exact");
        let term = LaurentPoly::monomial(dr - db, qc);
        r = r.sub(&term.mul(b));
        q = q.add(&term);
    }
    debug_assert!(r.is_zero(), "polynomial division must be exact");
    q
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending exponent order, e.g. "t^3 - 2*t^-1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (e, true) => write!(f, "t^{e}")?,
                (e, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}
