//! Specializing the coefficient ring at a complex number t. Exact and
//! numeric computations agree wherever both are defined; at roots of
//! unity the witness divisions degenerate, and the numeric mode reports
//! that instead of returning garbage.
//!
//! Run with: cargo run --example numeric_specialization

use num_complex::Complex64;
use torus_skein::quotient::commutator_witness;
use torus_skein::{CurveIndex, ScalarContext, SkeinElement, SkeinError};

fn main() -> Result<(), SkeinError> {
    let exact = ScalarContext::exact();
    let t0 = Complex64::new(0.7, 0.3);
    let numeric = ScalarContext::numeric(t0)?;

    // The same product, computed exactly and numerically.
    let a = SkeinElement::basis(CurveIndex::new(2, 1), &exact);
    let b = SkeinElement::basis(CurveIndex::new(1, 3), &exact);
    let exact_product = a.multiply(&b, &exact)?;
    println!("exact:   (2,1)_T * (1,3)_T = {exact_product}");

    let numeric_product = a
        .specialize(&numeric)?
        .multiply(&b.specialize(&numeric)?, &numeric)?;
    println!("at t={t0}: {numeric_product}");

    // Evaluating the exact coefficients lands on the numeric ones.
    let specialized = exact_product.specialize(&numeric)?;
    for (idx, coeff) in specialized.terms() {
        let direct = numeric_product.coeff(idx).unwrap().as_numeric().unwrap();
        let via_exact = coeff.as_numeric().unwrap();
        assert!((direct - via_exact).norm() <= 1e-9 * direct.norm().max(1.0));
    }
    println!("coefficientwise agreement within 1e-9");

    // Witness scalars divide by t^a - t^-a; away from roots of unity
    // that is harmless.
    let w = commutator_witness(2, 0, 0, 2, &numeric)?;
    println!("witness at t={t0}: {w}");

    // At t = 1 the divisor vanishes and the division is refused.
    let at_one = ScalarContext::numeric(Complex64::new(1.0, 0.0))?;
    assert_eq!(
        commutator_witness(2, 0, 0, 2, &at_one),
        Err(SkeinError::DegenerateScalar)
    );
    println!("witness at t=1: DegenerateScalar (t is a root of unity)");

    // Mixing modes is an error, not a silent coercion.
    let mixed = SkeinElement::phi(&exact).add(&SkeinElement::phi(&numeric), &exact);
    assert_eq!(mixed, Err(SkeinError::ModeMismatch));
    println!("mixing exact and numeric coefficients: ModeMismatch");

    Ok(())
}
