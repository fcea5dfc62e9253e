//! Deterministic text rendering for elements, vectors, witnesses and
//! certificates. Terms print in ascending (p,q) order, so output is
//! reproducible and (for exact Laurent coefficients) re-parseable.

use std::fmt;

use num_traits::{One, Signed};

use crate::algebra::{CurveIndex, SimpleElement, SkeinElement};
use crate::quotient::{CommutatorCertificate, QuotientVector, Witness, ALL_CLASSES};
use crate::scalar::{fmt_complex, Scalar};

/// Which basis to render an element in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputBasis {
    T,
    Simple,
}

fn curve_atom(c: CurveIndex) -> String {
    if c.is_zero() {
        "phi".to_string()
    } else {
        format!("({},{})_T", c.p(), c.q())
    }
}

fn simple_atom(c: CurveIndex, n: i64) -> String {
    if n == 0 {
        "phi".to_string()
    } else {
        format!("({},{})^{}", c.p(), c.q(), n)
    }
}

/// Split a coefficient into an extractable sign and an optional textual
/// body. `None` means the coefficient is (plus or minus) one and the bare
/// atom suffices.
fn coeff_parts(s: &Scalar) -> (bool, Option<String>) {
    if let Scalar::Exact(r) = s {
        if r.is_laurent() {
            let p = r.numerator();
            if p.num_terms() == 1 {
                let (exp, c) = p.terms().next().unwrap();
                let neg = c.is_negative();
                let body = if c.abs().is_one() && exp == 0 {
                    None
                } else if neg {
                    Some(p.neg().to_string())
                } else {
                    Some(p.to_string())
                };
                return (neg, body);
            }
            return (false, Some(format!("({p})")));
        }
        return (false, Some(format!("({r})")));
    }
    let z = s.as_numeric().unwrap();
    (false, Some(format!("({})", fmt_complex(z))))
}

fn render_terms<I>(terms: I) -> String
where
    I: Iterator<Item = (String, Scalar)>,
{
    let mut out = String::new();
    let mut first = true;
    for (atom, coeff) in terms {
        let (neg, body) = coeff_parts(&coeff);
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match body {
            None => out.push_str(&atom),
            Some(b) => {
                out.push_str(&b);
                out.push('*');
                out.push_str(&atom);
            }
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

pub fn format_element(e: &SkeinElement) -> String {
    render_terms(e.terms().map(|(c, s)| (curve_atom(c), s.clone())))
}

pub fn format_simple(e: &SimpleElement) -> String {
    render_terms(e.terms().map(|(c, n, s)| (simple_atom(c, n), s.clone())))
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_element(self))
    }
}

impl fmt::Display for SimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_simple(self))
    }
}

impl fmt::Display for QuotientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = ALL_CLASSES
            .iter()
            .map(|c| format!("{} = {}", c.name(), self.component(*c)))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lambda = {}, left = {}, right = {}",
            self.lambda,
            curve_atom(self.left),
            curve_atom(self.right)
        )
    }
}

impl fmt::Display for CommutatorCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "residual: {}", self.residual)?;
        write!(f, "witnesses: {}", self.witnesses.len())?;
        for (i, w) in self.witnesses.iter().enumerate() {
            write!(f, "\n  [{i}] {w}")?;
        }
        Ok(())
    }
}
