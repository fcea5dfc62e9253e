//! Driving the randomized invariant suites from code: exact mode, then
//! numeric mode at a chosen specialization.
//!
//! Run with: cargo run --example selftest_harness

use num_complex::Complex64;
use torus_skein::selftest::{run_selftest, SelfTestConfig};

fn main() {
    let exact = run_selftest(&SelfTestConfig::exact(42, 100, 8));
    println!("{exact}");
    println!();

    let numeric = run_selftest(&SelfTestConfig::numeric(
        42,
        100,
        8,
        Complex64::new(0.7, 0.3),
    ));
    println!("{numeric}");

    // Reports are pure functions of their configuration.
    assert_eq!(exact, run_selftest(&SelfTestConfig::exact(42, 100, 8)));

    // Machine-readable form, one line.
    println!();
    println!("{}", exact.to_value());

    assert!(exact.ok() && numeric.ok());
}
