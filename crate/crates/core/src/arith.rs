//! Exact rational arithmetic helpers shared by every module.
//!
//! All computation in this crate is over arbitrary-precision rationals;
//! nothing here ever rounds.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The coefficient type used throughout: an arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational p/q. Panics if q = 0.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k). Zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // Each intermediate division is exact: acc holds C(n, i) after step i.
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Falling factorial n·(n−1)···(n−k+1). Zero when k > n.
pub fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    acc
}

/// base^exp for rationals by repeated multiplication.
pub fn pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// A full row of binomial coefficients C(n, 0..=n), as rationals.
pub fn binomial_row(n: usize) -> Vec<Rat> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        row.push(Rat::from_integer(c.clone()));
        if k < n {
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        }
    }
    row
}
