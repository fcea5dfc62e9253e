//! Property tests for the algebraic laws the library guarantees.

use num_complex::Complex64;
use proptest::prelude::*;

use torus_skein::algebra::{multiply_basis, CurveIndex, SimpleElement, SkeinElement};
use torus_skein::format::format_element;
use torus_skein::parse::{evaluate, parse_expression};
use torus_skein::quotient::{commutator_witness, phi_map, ALL_CLASSES};
use torus_skein::scalar::{LaurentPoly, RationalScalar, Scalar, ScalarContext};

fn ctx() -> ScalarContext {
    ScalarContext::exact()
}

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-6i64..=6), (-9i64..=9)), 0..4).prop_map(LaurentPoly::from_terms)
}

fn arb_laurent_nonzero() -> impl Strategy<Value = LaurentPoly> {
    arb_laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_rational() -> impl Strategy<Value = RationalScalar> {
    (arb_laurent(), arb_laurent_nonzero())
        .prop_map(|(num, den)| RationalScalar::new(num, den).unwrap())
}

fn arb_index() -> impl Strategy<Value = CurveIndex> {
    ((-8i64..=8), (-8i64..=8)).prop_map(|(p, q)| CurveIndex::new(p, q))
}

fn arb_element() -> impl Strategy<Value = SkeinElement> {
    prop::collection::vec((arb_index(), arb_laurent_nonzero()), 1..=3).prop_map(|terms| {
        let c = ctx();
        let mut e = SkeinElement::zero();
        for (idx, p) in terms {
            e.add_term(idx, Scalar::from(p), &c).unwrap();
        }
        e
    })
}

proptest! {
    // -- scalar field laws, bit-exact on canonical forms --

    #[test]
    fn canonicalization_is_idempotent(r in arb_rational()) {
        let again = RationalScalar::new(r.numerator().clone(), r.denominator().clone()).unwrap();
        prop_assert_eq!(again, r);
    }

    #[test]
    fn addition_associates(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_associates(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn ring_is_commutative(a in arb_rational(), b in arb_rational()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_distributes(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn nonzero_scalars_invert(a in arb_rational()) {
        prop_assume!(!a.is_zero());
        let inv = RationalScalar::one().div(&a).unwrap();
        prop_assert!(a.mul(&inv).is_one());
    }

    #[test]
    fn evaluation_commutes_with_arithmetic(a in arb_rational(), b in arb_rational()) {
        let t0 = Complex64::new(0.7, 0.3);
        let tol = 1e-6;
        // skip ill-conditioned denominators
        prop_assume!(a.denominator().eval(t0).norm() > tol);
        prop_assume!(b.denominator().eval(t0).norm() > tol);

        let close = |x: Complex64, y: Complex64| {
            (x - y).norm() <= 1e-9 * x.norm().max(y.norm()).max(1.0)
        };

        let sum = a.add(&b);
        prop_assume!(sum.denominator().eval(t0).norm() > tol);
        prop_assert!(close(sum.eval(t0, 0.0).unwrap(),
                           a.eval(t0, 0.0).unwrap() + b.eval(t0, 0.0).unwrap()));

        let prod = a.mul(&b);
        prop_assume!(prod.denominator().eval(t0).norm() > tol);
        prop_assert!(close(prod.eval(t0, 0.0).unwrap(),
                           a.eval(t0, 0.0).unwrap() * b.eval(t0, 0.0).unwrap()));

        if !b.is_zero() && b.numerator().eval(t0).norm() > tol {
            let quot = a.div(&b).unwrap();
            prop_assume!(quot.denominator().eval(t0).norm() > tol);
            prop_assert!(close(quot.eval(t0, 0.0).unwrap(),
                               a.eval(t0, 0.0).unwrap() / b.eval(t0, 0.0).unwrap()));
        }
    }

    // -- algebra laws --

    #[test]
    fn basis_product_ignores_sign_representatives(
        p in -8i64..=8, q in -8i64..=8, r in -8i64..=8, s in -8i64..=8,
    ) {
        let c = ctx();
        let reference = multiply_basis(CurveIndex::new(p, q), CurveIndex::new(r, s), &c).unwrap();
        for (a, b) in [((p, q), (-r, -s)), ((-p, -q), (r, s)), ((-p, -q), (-r, -s))] {
            let other = multiply_basis(CurveIndex::new(a.0, a.1), CurveIndex::new(b.0, b.1), &c).unwrap();
            prop_assert_eq!(&other, &reference);
        }
    }

    #[test]
    fn element_product_associates(a in arb_element(), b in arb_element(), c in arb_element()) {
        let x = ctx();
        let ab_c = a.multiply(&b, &x).unwrap().multiply(&c, &x).unwrap();
        let a_bc = a.multiply(&b.multiply(&c, &x).unwrap(), &x).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn identity_element(a in arb_element()) {
        let x = ctx();
        let phi = SkeinElement::phi(&x);
        prop_assert_eq!(&phi.multiply(&a, &x).unwrap(), &a);
        prop_assert_eq!(&a.multiply(&phi, &x).unwrap(), &a);
    }

    #[test]
    fn fixed_slope_curves_commute(
        a in -5i64..=5, b in -5i64..=5, k in 1i64..=6, l in 1i64..=6,
    ) {
        prop_assume!(CurveIndex::new(a, b).is_primitive());
        let x = ctx();
        let u = SkeinElement::basis(CurveIndex::new(k * a, k * b), &x);
        let v = SkeinElement::basis(CurveIndex::new(l * a, l * b), &x);
        prop_assert!(u.commutator(&v, &x).unwrap().is_zero());
    }

    #[test]
    fn chebyshev_round_trip(a in -5i64..=5, b in -5i64..=5, n in 1i64..=8) {
        let idx = CurveIndex::new(a, b);
        prop_assume!(idx.is_primitive());
        let x = ctx();

        let mut s = SimpleElement::zero();
        s.add_term(idx, n, x.one(), &x).unwrap();
        prop_assert_eq!(&s.to_t(&x).unwrap().to_simple(&x).unwrap(), &s);

        let e = SkeinElement::basis(CurveIndex::new(n * a, n * b), &x);
        prop_assert_eq!(&e.to_simple(&x).unwrap().to_t(&x).unwrap(), &e);
    }

    #[test]
    fn parallel_copies_match_repeated_product(a in -5i64..=5, b in -5i64..=5, n in 1u32..=6) {
        let idx = CurveIndex::new(a, b);
        prop_assume!(idx.is_primitive());
        let x = ctx();
        let mut s = SimpleElement::zero();
        s.add_term(idx, n as i64, x.one(), &x).unwrap();
        let via_chebyshev = s.to_t(&x).unwrap();
        let via_product = SkeinElement::basis(idx, &x).pow(n, &x).unwrap();
        prop_assert_eq!(via_chebyshev, via_product);
    }

    // -- traces and witnesses --

    #[test]
    fn traces_vanish_on_commutators(a in arb_element(), b in arb_element()) {
        let x = ctx();
        let comm = a.commutator(&b, &x).unwrap();
        prop_assert!(phi_map(&comm, &x).unwrap().is_zero());
    }

    #[test]
    fn traces_are_symmetric(a in arb_element(), b in arb_element()) {
        let x = ctx();
        let ab = phi_map(&a.multiply(&b, &x).unwrap(), &x).unwrap();
        let ba = phi_map(&b.multiply(&a, &x).unwrap(), &x).unwrap();
        for class in ALL_CLASSES {
            prop_assert_eq!(ab.component(class), ba.component(class));
        }
    }

    #[test]
    fn witnesses_expand_correctly(
        x in -20i64..=20, y in -20i64..=20, z in -20i64..=20, w in -20i64..=20,
    ) {
        prop_assume!((x + z) % 2 == 0 && (y + w) % 2 == 0 && x * w - y * z != 0);
        let c = ctx();
        let wit = commutator_witness(x, y, z, w, &c).unwrap();
        let target = SkeinElement::basis(CurveIndex::new(x, y), &c)
            .sub(&SkeinElement::basis(CurveIndex::new(z, w), &c), &c)
            .unwrap();
        prop_assert_eq!(wit.expand(&c).unwrap(), target);
    }

    // -- text and JSON round-trips --

    #[test]
    fn text_round_trip(e in arb_element()) {
        let x = ctx();
        let printed = format_element(&e);
        let back = evaluate(&parse_expression(&printed).unwrap(), &x).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn parser_never_panics(src in "[ -~]{0,48}") {
        let _ = parse_expression(&src);
    }

    #[test]
    fn json_round_trip_is_bit_exact(e in arb_element()) {
        let v = torus_skein::json::element_to_value(&e);
        let s1 = serde_json::to_string(&v).unwrap();
        let back = torus_skein::json::element_from_value(&serde_json::from_str(&s1).unwrap()).unwrap();
        prop_assert_eq!(&back, &e);
        let s2 = serde_json::to_string(&torus_skein::json::element_to_value(&back)).unwrap();
        prop_assert_eq!(s1, s2);
    }
}
