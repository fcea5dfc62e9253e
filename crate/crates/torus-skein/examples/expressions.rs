//! Parsing, evaluating and printing skein-algebra expressions.
//!
//! Run with: cargo run --example expressions

use torus_skein::format::format_element;
use torus_skein::json;
use torus_skein::parse::{evaluate, parse_expression};
use torus_skein::ScalarContext;

fn main() {
    let ctx = ScalarContext::exact();

    for src in [
        "(1,0)_T * (0,1)_T",
        "(1,0)_T * (0,1)_T - (0,1)_T * (1,0)_T",
        "(1,0)^3 - 3*(1,0)_T",
        "(t^2 - 1) * (2,3)_T + phi",
        "(1,1)_T^2",
    ] {
        let expr = parse_expression(src).unwrap();
        let value = evaluate(&expr, &ctx).unwrap();
        println!("{src:40} => {}", format_element(&value));
    }

    // Formatted output parses back to the same element.
    let e = evaluate(&parse_expression("(1,0)^2 - (2,0)_T").unwrap(), &ctx).unwrap();
    let printed = format_element(&e);
    let reparsed = evaluate(&parse_expression(&printed).unwrap(), &ctx).unwrap();
    assert_eq!(reparsed, e);
    println!("round-trip: {printed:?} parses back identically");

    // Parse errors carry a byte position and the tokens that were legal there.
    let err = parse_expression("(1,0)_T + ").unwrap_err();
    println!("error demo: {err}");

    // JSON output follows a fixed schema with bigint-safe string coefficients.
    println!(
        "json: {}",
        serde_json::to_string(&json::element_to_value(&e)).unwrap()
    );
}
