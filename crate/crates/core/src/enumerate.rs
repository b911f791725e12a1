//! Complete enumeration of `S(n)`.
//!
//! Every solution is its prefix `(x₁, …, x_{n−2})` followed by two entries
//! determined by a factorization `d₁·d₂ = f` of
//! `f = σ₁(X)² + σ₂(X)(σ(X) − 1)`:
//!
//! ```text
//! x_{n−1} = (σ₁(X) + d₁) / (σ(X) − 1),   xₙ = (σ₁(X) + d₂) / (σ(X) − 1)
//! ```
//!
//! The prefix product is bounded by `C(n, 2)` and `x_{n−2}` by
//! `1 + ⌊2(n−2)^{2/3}⌋`, so only finitely many prefixes need extending.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::arith::divisors;
use crate::bounds::{bounds_for, BoundsReport};
use crate::error::{Error, Result};
use crate::sigma::{eval_sigmas, split_sigma2, CompactSolution, SigmaTriple};

/// The first `n − 2` entries of a candidate solution, `(1̄_ones, tail)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prefix {
    n: u64,
    ones: u64,
    tail: Vec<u64>,
    sigmas: SigmaTriple,
}

impl Prefix {
    /// Build a prefix, enforcing every pruning bound for length `n`.
    pub fn new(n: u64, ones: u64, tail: Vec<u64>) -> Result<Self> {
        let b = bounds_for(n)?;
        Self::checked(&b, ones, tail)
    }

    fn checked(b: &BoundsReport, ones: u64, tail: Vec<u64>) -> Result<Self> {
        let n = b.n;
        if ones + tail.len() as u64 != n - 2 {
            return Err(Error::InvalidPrefix(format!(
                "length {} does not equal n - 2 = {}",
                ones + tail.len() as u64,
                n - 2
            )));
        }
        if tail.is_empty() {
            return Err(Error::AllOnesPrefix);
        }
        if tail.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPrefix("tail is not nondecreasing".into()));
        }
        if let Some(&bad) = tail.iter().find(|&&x| x < 2) {
            return Err(Error::TailEntry(bad));
        }
        if tail.len() as u64 + 2 > u64::from(b.i_max) {
            return Err(Error::InvalidPrefix(format!(
                "{} entries above one exceed the bound {}",
                tail.len() + 2,
                b.i_max
            )));
        }
        if let Some(&big) = tail.iter().find(|&&x| x > b.xn2_max) {
            return Err(Error::InvalidPrefix(format!(
                "entry {big} exceeds the x_(n-2) bound {}",
                b.xn2_max
            )));
        }
        let sigmas = split_sigma2(ones, &eval_sigmas(&tail)?);
        if sigmas.prod > BigUint::from(b.prefix_product_max) {
            return Err(Error::InvalidPrefix(format!(
                "product {} exceeds C(n,2) = {}",
                sigmas.prod, b.prefix_product_max
            )));
        }
        Ok(Self { n, ones, tail, sigmas })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ones(&self) -> u64 {
        self.ones
    }

    pub fn tail(&self) -> &[u64] {
        &self.tail
    }

    pub fn sigmas(&self) -> &SigmaTriple {
        &self.sigmas
    }

    fn last(&self) -> u64 {
        *self.tail.last().expect("prefix tail is nonempty")
    }
}

/// A factorization `d1 · d2` with `d1 <= d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorPair {
    pub d1: u64,
    pub d2: u64,
}

/// All pairs `d1 <= d2` with `d1 · d2 = v`, ascending in `d1`.
pub fn divisor_pairs(v: u64) -> Vec<DivisorPair> {
    divisors(v)
        .into_iter()
        .take_while(|&d| d <= v / d)
        .map(|d1| DivisorPair { d1, d2: v / d1 })
        .collect()
}

/// `f = σ₁(X)² + σ₂(X)(σ(X) − 1)` for a prefix `X`.
pub fn f_value(p: &Prefix) -> BigUint {
    let s = &p.sigmas;
    &s.s1 * &s.s1 + &s.s2 * (&s.prod - 1u32)
}

/// All solutions whose first `n − 2` entries are `p`.
pub fn extend_prefix(p: &Prefix) -> Result<Vec<CompactSolution>> {
    let f = f_value(p)
        .to_u64()
        .ok_or(Error::Overflow { what: "f value" })?;
    let s1 = &p.sigmas.s1;
    let denom = &p.sigmas.prod - BigUint::one();
    let last = p.last();

    let mut out = Vec::new();
    for pair in divisor_pairs(f) {
        let (y, ry) = (s1 + pair.d1).div_rem(&denom);
        if ry.bits() != 0 {
            continue;
        }
        let (z, rz) = (s1 + pair.d2).div_rem(&denom);
        if rz.bits() != 0 {
            continue;
        }
        let (Some(y), Some(z)) = (y.to_u64(), z.to_u64()) else {
            return Err(Error::Overflow { what: "completion entry" });
        };
        debug_assert!(y <= z);
        if y < last {
            continue;
        }
        let mut tail = p.tail.clone();
        tail.extend([y, z]);
        let c = CompactSolution::new(p.ones, tail)?;
        if let Ok(c) = c.verify() {
            out.push(c);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every prefix of length `n − 2` satisfying the pruning bounds, ordered by
/// ones count descending, then tail lexicographically.
pub fn prefixes(n: u64) -> Result<Vec<Prefix>> {
    let b = bounds_for(n)?;
    let max_len = (u64::from(b.i_max) - 2).min(n - 2) as usize;
    let mut out = Vec::new();
    let mut tail = Vec::with_capacity(max_len);
    for len in 1..=max_len {
        tails(&b, len, 2, 1, &mut tail, &mut |t| {
            out.push(Prefix::checked(&b, n - 2 - len as u64, t.to_vec()).expect("generated prefix is valid"));
        });
    }
    Ok(out)
}

fn tails(
    b: &BoundsReport,
    remaining: usize,
    min: u64,
    product: u64,
    tail: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    if remaining == 0 {
        emit(tail);
        return;
    }
    // the remaining entries are all >= x, so x^remaining must fit
    let mut x = min;
    while x <= b.xn2_max {
        let Some(least) = x
            .checked_pow(remaining as u32)
            .and_then(|p| p.checked_mul(product))
        else {
            break;
        };
        if least > b.prefix_product_max {
            break;
        }
        tail.push(x);
        tails(b, remaining - 1, x, product * x, tail, emit);
        tail.pop();
        x += 1;
    }
}

/// `S(n)` in canonical order.
pub fn enumerate(n: u64) -> Result<Vec<CompactSolution>> {
    enumerate_with_jobs(n, 1)
}

/// [`enumerate`] split across `jobs` worker threads. Worker `w` extends the
/// prefixes at positions `w, w + jobs, …`; the results are merged and sorted,
/// so the output does not depend on `jobs`.
pub fn enumerate_with_jobs(n: u64, jobs: usize) -> Result<Vec<CompactSolution>> {
    let all = prefixes(n)?;
    let jobs = jobs.clamp(1, all.len().max(1));
    let mut parts: Vec<Result<Vec<CompactSolution>>> = if jobs == 1 {
        vec![extend_stride(&all, 0, 1)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    let all = &all;
                    scope.spawn(move || extend_stride(all, w, jobs))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };
    let mut out = Vec::new();
    for part in parts.drain(..) {
        out.extend(part?);
    }
    out.sort();
    let before = out.len();
    out.dedup();
    debug_assert_eq!(before, out.len(), "two prefixes produced the same solution");
    Ok(out)
}

fn extend_stride(all: &[Prefix], start: usize, step: usize) -> Result<Vec<CompactSolution>> {
    let mut out = Vec::new();
    for p in all.iter().skip(start).step_by(step) {
        out.extend(extend_prefix(p)?);
    }
    Ok(out)
}

/// Exhaustive oracle for `S(n)`: every nondecreasing `x₁ ≤ … ≤ x_{n−1} ≤ cap`
/// whose first `n − 2` entries have product at most `C(n, 2)`, completed by
/// `xₙ = σ₂(X_{n−1}) / (σ(X_{n−1}) − σ₁(X_{n−1}))`.
///
/// Shares no arithmetic with [`enumerate`]: sums are accumulated pairwise
/// in `u128`.
pub fn enumerate_brute(n: u64, cap: u64) -> Result<Vec<CompactSolution>> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    let limit = u128::from(n) * u128::from(n - 1) / 2;
    let mut xs = Vec::with_capacity(n as usize);
    let mut out = Vec::new();
    brute_prefix(n as usize, cap, limit, 1, 1, &mut xs, &mut out);
    let mut verified = Vec::with_capacity(out.len());
    for xs in out {
        let ones = xs.iter().take_while(|&&x| x == 1).count();
        let c = CompactSolution::new(ones as u64, xs[ones..].to_vec())?;
        if let Ok(c) = c.verify() {
            verified.push(c);
        }
    }
    verified.sort();
    verified.dedup();
    Ok(verified)
}

fn brute_prefix(
    n: usize,
    cap: u64,
    limit: u128,
    min: u64,
    product: u128,
    xs: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if xs.len() == n - 2 {
        let lo = xs.last().copied().unwrap_or(1);
        for last in lo..=cap {
            xs.push(last);
            if let Some(xn) = brute_last(xs) {
                if xn >= last {
                    let mut full = xs.clone();
                    full.push(xn);
                    out.push(full);
                }
            }
            xs.pop();
        }
        return;
    }
    let mut x = min;
    while x <= cap && product * u128::from(x) <= limit {
        xs.push(x);
        brute_prefix(n, cap, limit, x, product * u128::from(x), xs, out);
        xs.pop();
        x += 1;
    }
}

fn brute_last(xs: &[u64]) -> Option<u64> {
    let mut sum = 0u128;
    let mut pairs = 0u128;
    let mut prod = 1u128;
    for (a, &x) in xs.iter().enumerate() {
        sum += u128::from(x);
        prod = prod.checked_mul(u128::from(x))?;
        for &w in &xs[a + 1..] {
            pairs += u128::from(x) * u128::from(w);
        }
    }
    if prod <= sum {
        return None;
    }
    let denom = prod - sum;
    pairs.is_multiple_of(denom).then(|| u64::try_from(pairs / denom).ok()).flatten()
}
