//! The five traces: classwise coefficient sums indexed by the empty
//! skein and the four parity classes of (p,q) mod 2.
//!
//! Run with: cargo run --example five_traces

use torus_skein::quotient::{phi_map, trace, ParityClass, ALL_CLASSES};
use torus_skein::{CurveIndex, ScalarContext, SkeinElement};

fn main() -> Result<(), torus_skein::SkeinError> {
    let ctx = ScalarContext::exact();

    // Every index lands in one of five classes.
    for (p, q) in [(0, 0), (2, 0), (0, 1), (1, 0), (1, 1), (-3, -2)] {
        let c = CurveIndex::new(p, q);
        println!("({p},{q}) -> class {}", ParityClass::of(c));
    }

    // The class map on a small element.
    let mut e = SkeinElement::zero();
    e.add_term(CurveIndex::ZERO, ctx.integer(3), &ctx)?;
    e.add_term(CurveIndex::new(2, 0), ctx.monomial(1), &ctx)?;
    e.add_term(CurveIndex::new(4, 2), ctx.monomial(-1), &ctx)?;
    println!("e = {e}");
    println!("phi_map(e): {}", phi_map(&e, &ctx)?);

    // The Phi trace picks off the empty-skein coefficient: applied to
    // (1,0)_T^2 = (2,0)_T + 2 phi it returns 2.
    let square = SkeinElement::basis(CurveIndex::new(1, 0), &ctx).pow(2, &ctx)?;
    println!(
        "Yang-Mills measure of (1,0)_T^2: {}",
        trace(&square, ParityClass::Phi, &ctx)?
    );

    // All five traces vanish on every commutator, which is exactly what
    // makes them traces.
    let a = SkeinElement::basis(CurveIndex::new(3, 1), &ctx);
    let b = SkeinElement::basis(CurveIndex::new(1, 2), &ctx);
    let comm = a.commutator(&b, &ctx)?;
    println!("[(3,1)_T, (1,2)_T] = {comm}");
    for class in ALL_CLASSES {
        assert!(trace(&comm, class, &ctx)?.is_zero());
    }
    println!("all five traces vanish on the commutator");

    // And they are symmetric: trace(ab) = trace(ba) for every class.
    let ab = a.multiply(&b, &ctx)?;
    let ba = b.multiply(&a, &ctx)?;
    for class in ALL_CLASSES {
        assert_eq!(trace(&ab, class, &ctx)?, trace(&ba, class, &ctx)?);
    }
    println!("trace(ab) = trace(ba) for every class");

    Ok(())
}
