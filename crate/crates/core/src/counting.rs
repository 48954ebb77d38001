//! Exact integer helpers shared by the weight-distribution formulas.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Signed binomial for use in alternating sums.
pub fn binomial_signed(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// `(-1)^e` as a signed integer.
pub fn sign(e: u64) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn pow(base: u64, e: u64) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Krawtchouk polynomial `K_j(i) = sum_h (-1)^h (q-1)^{j-h} C(i,h) C(n-i,j-h)`.
pub fn krawtchouk(n: u64, q: u64, j: u64, i: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for h in 0..=j {
        let term = sign(h) * pow(q - 1, j - h) * binomial_signed(i, h) * binomial_signed(n - i, j - h);
        acc += term;
    }
    acc
}
