//! Chebyshev polynomials in the normalization T_0 = 2, T_1 = x,
//! T_{n+1} = T_n * x - T_{n-1}, and the inverse change of basis from
//! monomials. These drive the conversion between parallel-copy powers of
//! a curve and the T-basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::SkeinError;

/// Monomial coefficients of T_n(x), indexed by power of x.
pub fn chebyshev_coeffs(n: u32) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)]; // T_0
    if n == 0 {
        return prev;
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(1)]; // T_1
    for _ in 1..n {
        // next = x * cur - prev
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, c) in cur.iter().enumerate() {
            next[j + 1] += c;
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients c_{n,k} with x^n = sum_k c_{n,k} T_k(x), k running over
/// n, n-2, ..., down to 1 or 0. All integers under the T_0 = 2 convention.
/// x^0 is the empty skein and is handled by callers, never here.
pub fn monomial_to_chebyshev(n: u32) -> Result<BTreeMap<u32, BigInt>, SkeinError> {
    if n == 0 {
        return Err(SkeinError::ZeroPower);
    }
    // Repeatedly multiply by x, using x*T_0 = 2 T_1 and
    // x*T_k = T_{k+1} + T_{k-1} for k >= 1.
    let mut coeffs: BTreeMap<u32, BigInt> = BTreeMap::new();
    coeffs.insert(1, BigInt::from(1));
    for _ in 1..n {
        let mut next: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (k, c) in &coeffs {
            if *k == 0 {
                *next.entry(1).or_default() += c * 2;
            } else {
                *next.entry(k + 1).or_default() += c;
                *next.entry(k - 1).or_default() += c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        coeffs = next;
    }
    Ok(coeffs)
}
