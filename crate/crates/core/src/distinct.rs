//! How many distinct values a solution can take.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::exact_sqrt;
use crate::enumerate::enumerate;
use crate::error::{Error, Result};
use crate::sigma::{eval_sigmas, CompactSolution};

/// Number of distinct entries.
pub fn distinct_count(c: &CompactSolution) -> usize {
    let mut values: BTreeSet<u64> = c.tail().iter().copied().collect();
    if c.ones() > 0 {
        values.insert(1);
    }
    values.len()
}

/// `M(n)`: fewest distinct entries over `S(n)`.
pub fn min_distinct(n: u64) -> Result<usize> {
    enumerate(n)?
        .iter()
        .map(distinct_count)
        .min()
        .ok_or_else(|| Error::Contract(format!("S({n}) is empty")))
}

/// A solution `(1̄_{n−k}, x̄_k)`: `k` copies of `x` after `n − k` ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EqualBlockHit {
    pub k: u32,
    pub x: u64,
    pub n: u64,
    /// `y = 2n + 2k(x − 1) − 1` with `y² = P_k(x)`.
    pub y: BigUint,
}

impl EqualBlockHit {
    pub fn solution(&self) -> Result<CompactSolution> {
        CompactSolution::new(self.n - u64::from(self.k), vec![self.x; self.k as usize])
    }
}

/// `P_k(x) = 8x^k + 4kx² − 4kx + 1`.
pub fn block_polynomial(k: u32, x: u64) -> BigUint {
    let xb = BigUint::from(x);
    let kb = BigUint::from(k);
    BigUint::from(8u32) * xb.pow(k) + BigUint::from(4u32) * &kb * &xb * (&xb - 1u32) + 1u32
}

fn hits_for_k(k: u32, x_max: u64) -> Result<Vec<EqualBlockHit>> {
    let mut out = Vec::new();
    for x in 2..=x_max {
        let Some(y) = exact_sqrt(&block_polynomial(k, x)) else {
            continue;
        };
        // 2n = y + 1 − 2k(x − 1)
        let shift = BigUint::from(2 * u64::from(k)) * (x - 1);
        let top = &y + 1u32;
        if top <= shift {
            continue;
        }
        let twice_n = top - shift;
        if twice_n.bit(0) {
            continue;
        }
        let Some(n) = (twice_n >> 1u32).to_u64() else {
            return Err(Error::Overflow { what: "block solution length" });
        };
        if n < 3 || n < u64::from(k) {
            continue;
        }
        let hit = EqualBlockHit { k, x, n, y };
        hit.solution()?
            .verify()
            .map_err(|e| Error::Contract(format!("block hit k={k} x={x}: {e}")))?;
        out.push(hit);
    }
    Ok(out)
}

/// All `(k, x)` in range with `P_k(x)` a perfect square that yield a
/// solution of length `n >= max(3, k)`. Runs one thread per `k`.
pub fn search_equal_blocks(k_range: RangeInclusive<u32>, x_max: u64) -> Result<Vec<EqualBlockHit>> {
    let ks: Vec<u32> = k_range.filter(|&k| k >= 1).collect();
    let parts: Vec<Result<Vec<EqualBlockHit>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ks
            .iter()
            .map(|&k| scope.spawn(move || hits_for_k(k, x_max)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("block search worker panicked"))
            .collect()
    });
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
    }
    out.sort();
    Ok(out)
}

/// `(1̄_k, Y, Yₙ)` with `k = σ(Y) − σ₁(Y) − 1` and
/// `Yₙ = C(k, 2) + σ₂(Y) + k·σ₁(Y)`; every entry of `Y` is distinct from 1.
pub fn construct_max_distinct(tail: &[u64]) -> Result<CompactSolution> {
    let mut ys = tail.to_vec();
    ys.sort_unstable();
    if ys.len() < 2 {
        return Err(Error::TooShort(ys.len()));
    }
    if let Some(&bad) = ys.iter().find(|&&y| y < 2) {
        return Err(Error::TailEntry(bad));
    }
    if ys == [2, 2] || ys == [2, 3] {
        return Err(Error::ExcludedTail(ys));
    }
    let s = eval_sigmas(&ys)?;
    let shift = &s.s1 + 1u32;
    if s.prod <= shift {
        let k = s.prod.to_i128().unwrap_or(i128::MAX) - shift.to_i128().unwrap_or(i128::MAX);
        return Err(Error::NonPositiveOnes(k.to_string()));
    }
    let k = &s.prod - shift;
    let last = &k * (&k - 1u32) / 2u32 + &s.s2 + &k * &s.s1;
    let k = k.to_u64().ok_or(Error::Overflow { what: "count of ones" })?;
    let last = last.to_u64().ok_or(Error::Overflow { what: "last entry" })?;
    ys.push(last);
    CompactSolution::new(k, ys)?
        .verify()
        .map_err(|e| Error::Contract(format!("construction failed: {e}")))
}

/// [`construct_max_distinct`] on `(2, 3, …, m + 1)`: a solution with
/// `m + 2` distinct entries.
pub fn max_distinct_witness(m: u64) -> Result<CompactSolution> {
    if m < 3 {
        return Err(Error::ExcludedTail((2..=m + 1).collect()));
    }
    construct_max_distinct(&(2..=m + 1).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verified(ones: u64, tail: Vec<u64>) -> CompactSolution {
        CompactSolution::new(ones, tail).unwrap().verify().unwrap()
    }

    #[test]
    fn distinct_examples() {
        assert_eq!(distinct_count(&verified(0, vec![3, 3, 3])), 1);
        assert_eq!(distinct_count(&verified(0, vec![2, 2, 2, 6])), 2);
        assert_eq!(distinct_count(&verified(8, vec![7, 7, 7])), 2);
    }

    #[test]
    fn min_distinct_examples() {
        assert_eq!(min_distinct(3).unwrap(), 1);
        assert_eq!(min_distinct(4).unwrap(), 2);
        assert_eq!(min_distinct(11).unwrap(), 2);
    }

    #[test]
    fn polynomial_identity() {
        // y = 2n + 2k(x − 1) − 1 squares to P_k(x) on every block solution
        for (k, x, n, y) in [(3u32, 7u64, 11u64, 57u64), (4, 7, 47, 141), (4, 172, 41156, 83679), (3, 3, 3, 17)] {
            assert_eq!(block_polynomial(k, x), BigUint::from(y).pow(2));
            assert_eq!(2 * n + 2 * u64::from(k) * (x - 1) - 1, y);
        }
    }

    #[test]
    fn known_block_hits() {
        let hits = search_equal_blocks(3..=4, 200).unwrap();
        let triples: Vec<(u32, u64, u64)> = hits.iter().map(|h| (h.k, h.n, h.x)).collect();
        assert_eq!(triples, vec![(3, 3, 3), (3, 11, 7), (4, 47, 7), (4, 41156, 172)]);
        assert_eq!(hits[1].y, BigUint::from(57u32));
        assert_eq!(hits[3].y, BigUint::from(83679u32));
    }

    #[test]
    fn degenerate_block_lengths() {
        // P_1 and P_2 are squares of linear polynomials but give n = 2
        assert!(search_equal_blocks(1..=2, 500).unwrap().is_empty());
    }

    #[test]
    fn construct_examples() {
        let c = construct_max_distinct(&[2, 4]).unwrap();
        assert_eq!((c.ones(), c.tail()), (1, &[2u64, 4, 14][..]));

        let c = construct_max_distinct(&[2, 3, 4]).unwrap();
        assert_eq!((c.n(), c.ones(), c.tail()), (18, 14, &[2u64, 3, 4, 243][..]));
        assert_eq!(c.m(), Some(&BigUint::from(5832u32)));

        assert_eq!(construct_max_distinct(&[2, 3]), Err(Error::ExcludedTail(vec![2, 3])));
        assert_eq!(construct_max_distinct(&[2, 2]), Err(Error::ExcludedTail(vec![2, 2])));
        assert_eq!(construct_max_distinct(&[1, 5]), Err(Error::TailEntry(1)));
    }

    #[test]
    fn witnesses() {
        let c = max_distinct_witness(3).unwrap();
        assert_eq!((c.n(), distinct_count(&c)), (18, 5));
        let c = max_distinct_witness(4).unwrap();
        assert_eq!((c.ones(), c.n(), distinct_count(&c)), (105, 110, 6));
        assert!(max_distinct_witness(2).is_err());
    }
}
