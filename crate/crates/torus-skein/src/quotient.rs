//! The five trace functionals and certified reduction modulo commutators.
//!
//! Basis indices fall into five classes: the empty skein, and the four
//! parity classes of (p,q) mod 2. Summing coefficients classwise gives a
//! linear map onto a five-dimensional space that kills every commutator,
//! and conversely every element in its kernel is an explicit linear
//! combination of commutators. The reduction here produces that
//! combination as a checkable certificate.

use std::fmt;

use crate::algebra::{multiply_basis, CurveIndex, SkeinElement};
use crate::error::SkeinError;
use crate::scalar::{Scalar, ScalarContext};

/// The class of a basis index: the empty skein, or the parities of (p,q).
/// Negating (p,q) preserves parity, so this is well defined on indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParityClass {
    Phi,
    Ee,
    Eo,
    Oe,
    Oo,
}

pub const ALL_CLASSES: [ParityClass; 5] = [
    ParityClass::Phi,
    ParityClass::Ee,
    ParityClass::Eo,
    ParityClass::Oe,
    ParityClass::Oo,
];

impl ParityClass {
    pub fn of(c: CurveIndex) -> Self {
        if c.is_zero() {
            return ParityClass::Phi;
        }
        match (c.p().rem_euclid(2), c.q().rem_euclid(2)) {
            (0, 0) => ParityClass::Ee,
            (0, 1) => ParityClass::Eo,
            (1, 0) => ParityClass::Oe,
            (1, 1) => ParityClass::Oo,
            _ => unreachable!(),
        }
    }

    /// Fixed coset representative used by the reducer.
    pub fn representative(&self) -> CurveIndex {
        match self {
            ParityClass::Phi => CurveIndex::ZERO,
            ParityClass::Ee => CurveIndex::new(2, 0),
            ParityClass::Eo => CurveIndex::new(0, 1),
            ParityClass::Oe => CurveIndex::new(1, 0),
            ParityClass::Oo => CurveIndex::new(1, 1),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ParityClass::Phi => "phi",
            ParityClass::Ee => "ee",
            ParityClass::Eo => "eo",
            ParityClass::Oe => "oe",
            ParityClass::Oo => "oo",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "phi" => Some(ParityClass::Phi),
            "ee" => Some(ParityClass::Ee),
            "eo" => Some(ParityClass::Eo),
            "oe" => Some(ParityClass::Oe),
            "oo" => Some(ParityClass::Oo),
            _ => None,
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Classwise coefficient sums: the image of an element in the
/// five-dimensional quotient.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientVector {
    pub phi: Scalar,
    pub ee: Scalar,
    pub eo: Scalar,
    pub oe: Scalar,
    pub oo: Scalar,
}

impl QuotientVector {
    pub fn zero(ctx: &ScalarContext) -> Self {
        Self {
            phi: ctx.zero(),
            ee: ctx.zero(),
            eo: ctx.zero(),
            oe: ctx.zero(),
            oo: ctx.zero(),
        }
    }

    pub fn component(&self, class: ParityClass) -> &Scalar {
        match class {
            ParityClass::Phi => &self.phi,
            ParityClass::Ee => &self.ee,
            ParityClass::Eo => &self.eo,
            ParityClass::Oe => &self.oe,
            ParityClass::Oo => &self.oo,
        }
    }

    fn component_mut(&mut self, class: ParityClass) -> &mut Scalar {
        match class {
            ParityClass::Phi => &mut self.phi,
            ParityClass::Ee => &mut self.ee,
            ParityClass::Eo => &mut self.eo,
            ParityClass::Oe => &mut self.oe,
            ParityClass::Oo => &mut self.oo,
        }
    }

    pub fn is_zero(&self) -> bool {
        ALL_CLASSES.iter().all(|c| self.component(*c).is_zero())
    }

    /// The vector as an element supported on the class representatives.
    pub fn as_element(&self, ctx: &ScalarContext) -> Result<SkeinElement, SkeinError> {
        let mut e = SkeinElement::zero();
        for class in ALL_CLASSES {
            e.add_term(class.representative(), self.component(class).clone(), ctx)?;
        }
        Ok(e)
    }
}

/// Sum the coefficients of each parity class.
pub fn phi_map(e: &SkeinElement, ctx: &ScalarContext) -> Result<QuotientVector, SkeinError> {
    let mut v = QuotientVector::zero(ctx);
    for (idx, coeff) in e.terms() {
        let slot = v.component_mut(ParityClass::of(idx));
        *slot = ctx.add(slot, coeff)?;
    }
    Ok(v)
}

/// The trace attached to one class: the classwise coefficient sum. The
/// Phi trace is the Yang-Mills measure.
pub fn trace(
    e: &SkeinElement,
    class: ParityClass,
    ctx: &ScalarContext,
) -> Result<Scalar, SkeinError> {
    Ok(phi_map(e, ctx)?.component(class).clone())
}

/// One scalar-weighted basis commutator.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub lambda: Scalar,
    pub left: CurveIndex,
    pub right: CurveIndex,
}

impl Witness {
    /// lambda * [left_T, right_T] as an element.
    pub fn expand(&self, ctx: &ScalarContext) -> Result<SkeinElement, SkeinError> {
        let lr = multiply_basis(self.left, self.right, ctx)?;
        let rl = multiply_basis(self.right, self.left, ctx)?;
        lr.sub(&rl, ctx)?.scale(&self.lambda, ctx)
    }
}

/// Construct the witness for (x,y)_T - (z,w)_T as a single scaled
/// commutator: with p = (x+z)/2, q = (y+w)/2, r = (x-z)/2, s = (y-w)/2
/// and a = ps - qr,
///
/// ```text
/// (x,y)_T - (z,w)_T = 1/(t^a - t^-a) * ((p,q)_T (r,s)_T - (r,s)_T (p,q)_T)
/// ```
///
/// Requires x+z and y+w even and xw - yz nonzero (which forces a != 0).
pub fn commutator_witness(
    x: i64,
    y: i64,
    z: i64,
    w: i64,
    ctx: &ScalarContext,
) -> Result<Witness, SkeinError> {
    if (x + z) % 2 != 0 || (y + w) % 2 != 0 {
        return Err(SkeinError::ParityMismatch);
    }
    if x * w - y * z == 0 {
        return Err(SkeinError::DependentCurves);
    }
    let (p, q) = ((x + z) / 2, (y + w) / 2);
    let (r, s) = ((x - z) / 2, (y - w) / 2);
    let alpha = p * s - q * r;
    debug_assert_eq!(2 * alpha, y * z - x * w);
    let denom = ctx.sub(&ctx.monomial(alpha), &ctx.monomial(-alpha))?;
    let lambda = ctx.div(&ctx.one(), &denom)?;
    Ok(Witness {
        lambda,
        left: CurveIndex::new(p, q),
        right: CurveIndex::new(r, s),
    })
}

/// Deterministically pick an index in `class` linearly independent of the
/// class representative and of everything in `avoid`. Enumerates by
/// max(|p|,|q|), then p, then |q| with the nonnegative sign first.
/// The class must not be Phi.
pub fn pick_independent_direction(class: ParityClass, avoid: &[CurveIndex]) -> CurveIndex {
    assert!(class != ParityClass::Phi, "Phi has a single index");
    let rep = class.representative();
    let independent = |c: &CurveIndex| c.det(&rep) != 0 && avoid.iter().all(|a| c.det(a) != 0);
    for norm in 1.. {
        for p in 0..=norm {
            for abs_q in 0..=norm {
                if p.max(abs_q) != norm {
                    continue;
                }
                for q in [abs_q, -abs_q] {
                    // canonical indices only; skip the duplicate -0
                    if q < 0 && (p == 0 || abs_q == 0) {
                        continue;
                    }
                    let c = CurveIndex::new(p, q);
                    if ParityClass::of(c) == class && independent(&c) {
                        return c;
                    }
                }
            }
        }
    }
    unreachable!("every class contains infinitely many pairwise independent indices")
}

/// A certified decomposition: `residual` (supported on the class
/// representatives) plus the expansion of every witness reproduces the
/// original element exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorCertificate {
    pub residual: QuotientVector,
    pub witnesses: Vec<Witness>,
}

/// Rewrite an element as (classwise sums on the representatives) plus an
/// explicit combination of basis commutators.
///
/// Every non-representative term moves onto its class representative: in
/// one witness when the term's index is independent of the representative,
/// or through an intermediate independent direction (two witnesses) when
/// it is collinear with it.
pub fn reduce_mod_commutators(
    e: &SkeinElement,
    ctx: &ScalarContext,
) -> Result<CommutatorCertificate, SkeinError> {
    let residual = phi_map(e, ctx)?;
    let mut witnesses = Vec::new();
    for (idx, coeff) in e.terms() {
        let class = ParityClass::of(idx);
        let rep = class.representative();
        if idx == rep {
            continue;
        }
        if idx.det(&rep) != 0 {
            witnesses.push(rewrite(idx, rep, coeff, ctx)?);
        } else {
            let via = pick_independent_direction(class, &[idx]);
            witnesses.push(rewrite(idx, via, coeff, ctx)?);
            witnesses.push(rewrite(via, rep, coeff, ctx)?);
        }
    }
    Ok(CommutatorCertificate {
        residual,
        witnesses,
    })
}

/// Witness for coeff * ((from)_T - (to)_T).
fn rewrite(
    from: CurveIndex,
    to: CurveIndex,
    coeff: &Scalar,
    ctx: &ScalarContext,
) -> Result<Witness, SkeinError> {
    let mut w = commutator_witness(from.p(), from.q(), to.p(), to.q(), ctx)?;
    w.lambda = ctx.mul(&w.lambda, coeff)?;
    Ok(w)
}

/// Check that a certificate reproduces `e`: exactly in exact mode, within
/// 1e-9 per coefficient in numeric mode.
pub fn verify_certificate(
    e: &SkeinElement,
    cert: &CommutatorCertificate,
    ctx: &ScalarContext,
) -> Result<bool, SkeinError> {
    let mut reconstructed = cert.residual.as_element(ctx)?;
    for w in &cert.witnesses {
        reconstructed = reconstructed.add(&w.expand(ctx)?, ctx)?;
    }
    match ctx.mode() {
        crate::scalar::ScalarMode::Exact => Ok(reconstructed == *e),
        crate::scalar::ScalarMode::Numeric => Ok(elements_approx_eq(&reconstructed, e, 1e-9)),
    }
}

/// Coefficientwise comparison with a relative tolerance (floored at 1 so
/// near-zero coefficients compare absolutely).
pub fn elements_approx_eq(a: &SkeinElement, b: &SkeinElement, tol: f64) -> bool {
    let indices: std::collections::BTreeSet<CurveIndex> = a
        .terms()
        .map(|(c, _)| c)
        .chain(b.terms().map(|(c, _)| c))
        .collect();
    indices.into_iter().all(|c| {
        let va = a.coeff(c).and_then(Scalar::as_numeric).unwrap_or_default();
        let vb = b.coeff(c).and_then(Scalar::as_numeric).unwrap_or_default();
        (va - vb).norm() <= tol * va.norm().max(vb.norm()).max(1.0)
    })
}
