//! The skein algebra of the torus in the Frohman-Gelca T-basis.
//!
//! Basis elements are indexed by integer pairs (p,q) up to sign, with
//! (0,0) reserved for the empty skein (the multiplicative identity).
//! Multiplication of basis curves follows the product-to-sum formula
//!
//! ```text
//! (p,q)_T * (r,s)_T = t^d (p+r, q+s)_T + t^-d (p-r, q-s)_T,   d = ps - qr
//! ```
//!
//! with the convention that an index landing on (0,0) contributes twice
//! the empty skein.

mod chebyshev;
mod simple;

pub use chebyshev::{chebyshev_coeffs, monomial_to_chebyshev};
pub use simple::SimpleElement;

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::SkeinError;
use crate::scalar::{Scalar, ScalarContext};

/// A basis index: the pair (p,q) modulo sign, canonicalized so that
/// either p > 0, or p = 0 and q >= 0. The index (0,0) is the empty skein.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveIndex {
    p: i64,
    q: i64,
}

impl CurveIndex {
    pub const ZERO: CurveIndex = CurveIndex { p: 0, q: 0 };

    /// Canonical representative of {(p,q), (-p,-q)}.
    pub fn new(p: i64, q: i64) -> Self {
        if p < 0 || (p == 0 && q < 0) {
            Self { p: -p, q: -q }
        } else {
            Self { p, q }
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// Split off the gcd: (p,q) = n * primitive with n = gcd(|p|,|q|) >= 1.
    /// The empty curve has no such decomposition.
    pub fn gcd_split(&self) -> Result<(i64, CurveIndex), SkeinError> {
        if self.is_zero() {
            return Err(SkeinError::ZeroCurve);
        }
        let n = self.p.gcd(&self.q);
        Ok((n, CurveIndex::new(self.p / n, self.q / n)))
    }

    /// gcd(|p|,|q|) = 1, i.e. the index of a single essential curve.
    pub fn is_primitive(&self) -> bool {
        self.p.gcd(&self.q) == 1
    }

    /// The determinant | p q / r s |, as used by the product-to-sum formula.
    pub fn det(&self, other: &CurveIndex) -> i64 {
        self.p * other.q - self.q * other.p
    }
}

/// An element of the algebra: a finite linear combination of basis
/// indices. Keys are canonical and no zero coefficient is stored, so
/// structural equality is equality of elements (in exact mode).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SkeinElement {
    terms: BTreeMap<CurveIndex, Scalar>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty skein with coefficient 1: the multiplicative identity.
    pub fn phi(ctx: &ScalarContext) -> Self {
        Self::single(CurveIndex::ZERO, ctx.one())
    }

    /// A single basis curve with coefficient 1.
    pub fn basis(c: CurveIndex, ctx: &ScalarContext) -> Self {
        Self::single(c, ctx.one())
    }

    pub fn single(c: CurveIndex, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(c, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (CurveIndex, &Scalar)> + '_ {
        self.terms.iter().map(|(&c, s)| (c, s))
    }

    pub fn coeff(&self, c: CurveIndex) -> Option<&Scalar> {
        self.terms.get(&c)
    }

    pub fn add_term(
        &mut self,
        c: CurveIndex,
        coeff: Scalar,
        ctx: &ScalarContext,
    ) -> Result<(), SkeinError> {
        ctx.check(&coeff)?;
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&c) {
            None => {
                self.terms.insert(c, coeff);
            }
            Some(old) => {
                let sum = ctx.add(&old, &coeff)?;
                if !sum.is_zero() {
                    self.terms.insert(c, sum);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let mut out = self.clone();
        for (c, s) in other.terms() {
            out.add_term(c, s.clone(), ctx)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let mut out = self.clone();
        for (c, s) in other.terms() {
            out.add_term(c, ctx.neg(s)?, ctx)?;
        }
        Ok(out)
    }

    pub fn neg(&self, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let mut terms = BTreeMap::new();
        for (c, s) in self.terms() {
            terms.insert(c, ctx.neg(s)?);
        }
        Ok(Self { terms })
    }

    pub fn scale(&self, k: &Scalar, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let mut out = Self::zero();
        for (c, s) in self.terms() {
            out.add_term(c, ctx.mul(k, s)?, ctx)?;
        }
        Ok(out)
    }

    /// Bilinear extension of the basis product.
    pub fn multiply(&self, other: &Self, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let mut out = Self::zero();
        for (a, sa) in self.terms() {
            for (b, sb) in other.terms() {
                let coeff = ctx.mul(sa, sb)?;
                let prod = multiply_basis(a, b, ctx)?;
                for (c, sc) in prod.terms() {
                    out.add_term(c, ctx.mul(&coeff, sc)?, ctx)?;
                }
            }
        }
        Ok(out)
    }

    /// ab - ba.
    pub fn commutator(&self, other: &Self, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let ab = self.multiply(other, ctx)?;
        let ba = other.multiply(self, ctx)?;
        ab.sub(&ba, ctx)
    }

    /// x^n by repeated multiplication; x^0 is the identity.
    pub fn pow(&self, n: u32, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let mut out = Self::phi(ctx);
        for _ in 0..n {
            out = out.multiply(self, ctx)?;
        }
        Ok(out)
    }

    /// Evaluate every exact coefficient at the numeric context's t.
    pub fn specialize(&self, ctx: &ScalarContext) -> Result<Self, SkeinError> {
        let mut out = Self::zero();
        for (c, s) in self.terms() {
            out.add_term(c, ctx.eval(s)?, ctx)?;
        }
        Ok(out)
    }
}

/// Product of two basis indices by the product-to-sum formula. The empty
/// skein is the identity; an output index of (0,0) stands for twice the
/// empty skein.
pub fn multiply_basis(
    a: CurveIndex,
    b: CurveIndex,
    ctx: &ScalarContext,
) -> Result<SkeinElement, SkeinError> {
    if a.is_zero() {
        return Ok(SkeinElement::basis(b, ctx));
    }
    if b.is_zero() {
        return Ok(SkeinElement::basis(a, ctx));
    }
    let d = a.det(&b);
    let mut out = SkeinElement::zero();
    for (exp, u, v) in [(d, a.p + b.p, a.q + b.q), (-d, a.p - b.p, a.q - b.q)] {
        let c = CurveIndex::new(u, v);
        let mut coeff = ctx.monomial(exp);
        if c.is_zero() {
            coeff = ctx.add(&coeff, &coeff)?;
        }
        out.add_term(c, coeff, ctx)?;
    }
    Ok(out)
}
