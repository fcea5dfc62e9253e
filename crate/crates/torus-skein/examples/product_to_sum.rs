//! Multiplying curves on the torus with the product-to-sum formula.
//!
//! Run with: cargo run --example product_to_sum

use torus_skein::{multiply_basis, CurveIndex, ScalarContext, SkeinElement};

fn main() -> Result<(), torus_skein::SkeinError> {
    let ctx = ScalarContext::exact();

    // Two curves meeting once: the product has two terms, weighted by
    // t^d and t^-d where d is the determinant of their coordinates.
    let meridian = CurveIndex::new(1, 0);
    let longitude = CurveIndex::new(0, 1);
    println!(
        "(1,0)_T * (0,1)_T = {}",
        multiply_basis(meridian, longitude, &ctx)?
    );

    // A curve times itself: the difference index lands on (0,0), which
    // contributes twice the empty skein.
    println!(
        "(1,0)_T * (1,0)_T = {}",
        multiply_basis(meridian, meridian, &ctx)?
    );

    // The empty skein is the identity.
    let phi = SkeinElement::phi(&ctx);
    let curve = SkeinElement::basis(CurveIndex::new(3, 5), &ctx);
    assert_eq!(phi.multiply(&curve, &ctx)?, curve);
    println!("phi * (3,5)_T = {}", phi.multiply(&curve, &ctx)?);

    // Multiplication is noncommutative; the commutator measures by how much.
    let a = SkeinElement::basis(meridian, &ctx);
    let b = SkeinElement::basis(longitude, &ctx);
    println!("[(1,0)_T, (0,1)_T] = {}", a.commutator(&b, &ctx)?);

    // Parallel curves (same slope) commute.
    let c = SkeinElement::basis(CurveIndex::new(2, 0), &ctx);
    assert!(a.commutator(&c, &ctx)?.is_zero());
    println!("[(1,0)_T, (2,0)_T] = 0");

    // Associativity, spot-checked on a triple product.
    let d = SkeinElement::basis(CurveIndex::new(1, 1), &ctx);
    let left = a.multiply(&b, &ctx)?.multiply(&d, &ctx)?;
    let right = a.multiply(&b.multiply(&d, &ctx)?, &ctx)?;
    assert_eq!(left, right);
    println!("((1,0)(0,1))(1,1) = (1,0)((0,1)(1,1)) = {left}");

    Ok(())
}
