//! Exact binomial coefficients from a shared, lazily grown Pascal triangle.
//!
//! `binomial(a, b)` is zero whenever `b < 0`, `a < 0` or `b > a`. Every
//! alternating sum in the crate leans on that convention.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

fn triangle() -> &'static RwLock<Vec<Vec<BigInt>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

fn ensure_rows(a: usize) {
    if triangle().read().expect("binomial cache poisoned").len() > a {
        return;
    }
    let mut rows = triangle().write().expect("binomial cache poisoned");
    while rows.len() <= a {
        let prev = rows.last().expect("row 0 always present");
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigInt::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
}

/// `C(a, b)` with the zero convention outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let (a, b) = (a as usize, b as usize);
    ensure_rows(a);
    triangle().read().expect("binomial cache poisoned")[a][b].clone()
}

/// `C(a, b)` for small arguments where the value fits a machine word.
pub fn binomial_u64(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}

/// Falling factorial `x (x-1) ... (x-j+1)`; empty product for `j = 0`.
pub fn falling_factorial(x: i64, j: u32) -> BigInt {
    (0..j as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(x - i))
}
