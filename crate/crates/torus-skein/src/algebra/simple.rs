use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::chebyshev::{chebyshev_coeffs, monomial_to_chebyshev};
use super::{CurveIndex, SkeinElement};
use crate::error::SkeinError;
use crate::scalar::{LaurentPoly, Scalar, ScalarContext};

/// An element written in the simple-diagram basis: each term is n >= 1
/// parallel copies of a primitive curve, plus the empty skein, which is
/// the single term ((0,0), 0).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SimpleElement {
    terms: BTreeMap<(CurveIndex, i64), Scalar>,
}

impl SimpleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn phi(ctx: &ScalarContext) -> Self {
        let mut e = Self::zero();
        e.add_term(CurveIndex::ZERO, 0, ctx.one(), ctx).unwrap();
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (CurveIndex, i64, &Scalar)> + '_ {
        self.terms.iter().map(|(&(c, n), s)| (c, n, s))
    }

    /// Add coeff * (primitive)^n. The empty skein is (0,0) with n = 0;
    /// otherwise the curve must be primitive and n >= 1.
    pub fn add_term(
        &mut self,
        primitive: CurveIndex,
        multiplicity: i64,
        coeff: Scalar,
        ctx: &ScalarContext,
    ) -> Result<(), SkeinError> {
        ctx.check(&coeff)?;
        if primitive.is_zero() {
            if multiplicity != 0 {
                return Err(SkeinError::NonPrimitiveCurve);
            }
        } else if !primitive.is_primitive() {
            return Err(SkeinError::NonPrimitiveCurve);
        } else if multiplicity < 1 {
            return Err(SkeinError::ZeroPower);
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let key = (primitive, multiplicity);
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, coeff);
            }
            Some(old) => {
                let sum = ctx.add(&old, &coeff)?;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
        }
        Ok(())
    }

    /// Change of basis into the T-basis: n parallel copies of a primitive
    /// curve (a,b) expand through x^n = sum_k c_{n,k} T_k, sending T_k to
    /// (ka, kb)_T for k >= 1 and T_0 to twice the empty skein.
    pub fn to_t(&self, ctx: &ScalarContext) -> Result<SkeinElement, SkeinError> {
        let mut out = SkeinElement::zero();
        for (prim, n, coeff) in self.terms() {
            if n == 0 {
                out.add_term(CurveIndex::ZERO, coeff.clone(), ctx)?;
                continue;
            }
            for (k, c) in monomial_to_chebyshev(n as u32)? {
                let c = big_to_scalar(&c, ctx);
                if k == 0 {
                    let two_c = ctx.add(&c, &c)?;
                    out.add_term(CurveIndex::ZERO, ctx.mul(coeff, &two_c)?, ctx)?;
                } else {
                    let idx = CurveIndex::new(prim.p() * k as i64, prim.q() * k as i64);
                    out.add_term(idx, ctx.mul(coeff, &c)?, ctx)?;
                }
            }
        }
        Ok(out)
    }
}

impl SkeinElement {
    /// Change of basis out of the T-basis: (p,q)_T with gcd n expands as
    /// T_n evaluated on the primitive curve, the constant term landing on
    /// the empty skein.
    pub fn to_simple(&self, ctx: &ScalarContext) -> Result<SimpleElement, SkeinError> {
        let mut out = SimpleElement::zero();
        for (idx, coeff) in self.terms() {
            if idx.is_zero() {
                out.add_term(CurveIndex::ZERO, 0, coeff.clone(), ctx)?;
                continue;
            }
            let (n, prim) = idx.gcd_split()?;
            for (j, c) in chebyshev_coeffs(n as u32).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let c = big_to_scalar(c, ctx);
                if j == 0 {
                    out.add_term(CurveIndex::ZERO, 0, ctx.mul(coeff, &c)?, ctx)?;
                } else {
                    out.add_term(prim, j as i64, ctx.mul(coeff, &c)?, ctx)?;
                }
            }
        }
        Ok(out)
    }
}

fn big_to_scalar(c: &BigInt, ctx: &ScalarContext) -> Scalar {
    ctx.from_laurent(&LaurentPoly::monomial(0, c.clone()))
}
