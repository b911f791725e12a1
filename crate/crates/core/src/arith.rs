//! Small integer helpers: trial-division factorization, divisors, roots.

use num_bigint::BigUint;
use num_integer::Roots;

/// Prime factors of `v` with multiplicity, ascending. `factorize(1)` is empty.
pub fn factorize(mut v: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    if v < 2 {
        return factors;
    }
    while v.is_multiple_of(2) {
        factors.push(2);
        v /= 2;
    }
    let mut p = 3u64;
    while p <= v / p {
        while v.is_multiple_of(p) {
            factors.push(p);
            v /= p;
        }
        p += 2;
    }
    if v > 1 {
        factors.push(v);
    }
    factors
}

/// Collapse a sorted factor list into `(prime, exponent)` pairs.
pub fn prime_powers(factors: &[u64]) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    for &p in factors {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// All positive divisors of `v`, ascending.
pub fn divisors(v: u64) -> Vec<u64> {
    assert!(v >= 1, "divisors of zero are undefined");
    let mut divs = vec![1u64];
    for (p, e) in prime_powers(&factorize(v)) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Number of positive divisors.
pub fn tau(v: u64) -> u64 {
    assert!(v >= 1, "tau(0) is undefined");
    prime_powers(&factorize(v))
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product()
}

/// Largest `t` with `t³ <= v`.
pub fn icbrt(v: u128) -> u128 {
    v.cbrt()
}

/// Largest `t` with `t² <= v`.
pub fn isqrt(v: u128) -> u128 {
    v.sqrt()
}

/// Exact square root if `v` is a perfect square.
pub fn exact_sqrt(v: &BigUint) -> Option<BigUint> {
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

pub fn binomial2(n: u64) -> u128 {
    let n = u128::from(n);
    n * n.saturating_sub(1) / 2
}
