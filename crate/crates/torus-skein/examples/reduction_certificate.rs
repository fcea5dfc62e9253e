//! Certified reduction: every element splits into classwise sums on five
//! fixed representatives plus an explicit, re-checkable combination of
//! commutators. The quotient by commutators is exactly five dimensional,
//! and this example exercises that constructively.
//!
//! Run with: cargo run --example reduction_certificate

use torus_skein::json;
use torus_skein::quotient::{phi_map, reduce_mod_commutators, verify_certificate};
use torus_skein::{CurveIndex, ScalarContext, SkeinElement};

fn main() -> Result<(), torus_skein::SkeinError> {
    let ctx = ScalarContext::exact();

    // An element spread over several classes.
    let mut e = SkeinElement::zero();
    e.add_term(CurveIndex::new(4, 0), ctx.integer(1), &ctx)?;
    e.add_term(CurveIndex::new(2, 2), ctx.monomial(2), &ctx)?;
    e.add_term(CurveIndex::new(3, 5), ctx.integer(-2), &ctx)?;
    e.add_term(CurveIndex::ZERO, ctx.integer(7), &ctx)?;
    println!("e = {e}");

    let cert = reduce_mod_commutators(&e, &ctx)?;
    println!("{cert}");

    // The residual is the image of e in the five-dimensional quotient...
    assert_eq!(phi_map(&e, &ctx)?, cert.residual);

    // ...and residual + witness expansions reproduce e exactly.
    assert!(verify_certificate(&e, &cert, &ctx)?);
    println!("certificate verifies");

    // Tampering with any witness scalar breaks verification.
    let mut bad = cert.clone();
    bad.witnesses[0].lambda = ctx.add(&bad.witnesses[0].lambda, &ctx.one())?;
    assert!(!verify_certificate(&e, &bad, &ctx)?);
    println!("perturbed certificate is rejected");

    // An element whose classwise sums all vanish lies in the span of
    // commutators; its certificate has an all-zero residual.
    let k = SkeinElement::basis(CurveIndex::new(2, 0), &ctx)
        .sub(&SkeinElement::basis(CurveIndex::new(0, 2), &ctx), &ctx)?;
    let kcert = reduce_mod_commutators(&k, &ctx)?;
    assert!(kcert.residual.is_zero());
    assert!(verify_certificate(&k, &kcert, &ctx)?);
    println!("(2,0)_T - (0,2)_T reduces to commutators alone:");
    println!("{kcert}");

    // Certificates serialize to JSON for external checking.
    println!(
        "as JSON: {}",
        serde_json::to_string(&json::certificate_to_value(&kcert)).unwrap()
    );

    Ok(())
}
