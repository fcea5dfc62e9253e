//! Converting between the simple-diagram basis (parallel copies of
//! primitive curves) and the T-basis (Chebyshev polynomials of curves).
//!
//! Run with: cargo run --example chebyshev_bases

use torus_skein::algebra::{chebyshev_coeffs, monomial_to_chebyshev};
use torus_skein::{CurveIndex, ScalarContext, SimpleElement, SkeinElement};

fn main() -> Result<(), torus_skein::SkeinError> {
    let ctx = ScalarContext::exact();

    // The T-basis is built from Chebyshev polynomials with T_0 = 2, T_1 = x.
    for n in 0..=4 {
        let coeffs: Vec<String> = chebyshev_coeffs(n).iter().map(|c| c.to_string()).collect();
        println!(
            "T_{n} coefficients (by power of x): [{}]",
            coeffs.join(", ")
        );
    }

    // The inverse expansion writes monomials in the T's, e.g.
    // x^4 = T_4 + 4 T_2 + 3 T_0.
    let m4 = monomial_to_chebyshev(4)?;
    let parts: Vec<String> = m4.iter().rev().map(|(k, c)| format!("{c}*T_{k}")).collect();
    println!("x^4 = {}", parts.join(" + "));

    // Three parallel copies of the (1,0) curve, rewritten in the T-basis.
    let mut copies = SimpleElement::zero();
    copies.add_term(CurveIndex::new(1, 0), 3, ctx.one(), &ctx)?;
    let in_t = copies.to_t(&ctx)?;
    println!("(1,0)^3            = {in_t}");

    // And back: the conversions are mutually inverse.
    assert_eq!(in_t.to_simple(&ctx)?, copies);

    // A non-primitive index unwinds through its gcd: (3,0)_T is T_3
    // applied to the (1,0) curve.
    let t3 = SkeinElement::basis(CurveIndex::new(3, 0), &ctx);
    println!("(3,0)_T in simple basis: {}", t3.to_simple(&ctx)?);

    // Parallel copies stack without crossings, so the Chebyshev route
    // agrees with the repeated product.
    let via_product = SkeinElement::basis(CurveIndex::new(1, 0), &ctx).pow(3, &ctx)?;
    assert_eq!(via_product, in_t);
    println!("(1,0)_T^3 (repeated product) matches the Chebyshev expansion");

    Ok(())
}
