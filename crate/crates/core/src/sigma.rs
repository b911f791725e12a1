//! Elementary symmetric sums, solution verification and canonical forms.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A nondecreasing tuple of positive integers of length at least 3.
///
/// The constructor sorts its input, so two tuples built from permutations of
/// the same multiset compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionTuple {
    entries: Vec<u64>,
}

impl SolutionTuple {
    pub fn new(mut entries: Vec<u64>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::TooShort(entries.len()));
        }
        if entries.contains(&0) {
            return Err(Error::ZeroEntry);
        }
        entries.sort_unstable();
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Unverified compact form.
    pub fn compact(&self) -> CompactSolution {
        let ones = self.entries.iter().take_while(|&&x| x == 1).count();
        CompactSolution {
            n: self.entries.len() as u64,
            ones: ones as u64,
            tail: self.entries[ones..].to_vec(),
            m: None,
        }
    }
}

impl fmt::Display for SolutionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.entries.iter().copied())
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, it: impl Iterator<Item = u64>) -> fmt::Result {
    f.write_str("(")?;
    for (j, x) in it.enumerate() {
        if j > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// `σ₁`, `σ₂` and the full product of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaTriple {
    pub s1: BigUint,
    pub s2: BigUint,
    pub prod: BigUint,
}

impl SigmaTriple {
    /// Sigmas of the empty sequence.
    pub fn empty() -> Self {
        Self {
            s1: BigUint::zero(),
            s2: BigUint::zero(),
            prod: BigUint::one(),
        }
    }

    /// Sigmas of `(1, …, 1, tail)` with `ones` leading ones, where `self`
    /// holds the sigmas of `tail`.
    pub fn with_leading_ones(&self, ones: &BigUint) -> Self {
        let pairs_of_ones = if ones.is_zero() {
            BigUint::zero()
        } else {
            ones * (ones - 1u32) / 2u32
        };
        Self {
            s1: ones + &self.s1,
            s2: pairs_of_ones + ones * &self.s1 + &self.s2,
            prod: self.prod.clone(),
        }
    }
}

/// Evaluate `σ₁`, `σ₂` and the product of a nonempty sequence of positive
/// integers. `σ₂` is taken as `(σ₁² − Σx²) / 2`.
pub fn eval_sigmas(xs: &[u64]) -> Result<SigmaTriple> {
    eval_sigmas_big(xs.iter().map(|&x| BigUint::from(x)))
}

/// [`eval_sigmas`] over arbitrary-precision entries.
pub fn eval_sigmas_big<I: IntoIterator<Item = BigUint>>(xs: I) -> Result<SigmaTriple> {
    let mut s1 = BigUint::zero();
    let mut squares = BigUint::zero();
    let mut prod = BigUint::one();
    let mut len = 0usize;
    for x in xs {
        if x.is_zero() {
            return Err(Error::ZeroEntry);
        }
        squares += &x * &x;
        prod *= &x;
        s1 += x;
        len += 1;
    }
    if len == 0 {
        return Err(Error::Empty);
    }
    let s2 = (&s1 * &s1 - squares) >> 1u32;
    Ok(SigmaTriple { s1, s2, prod })
}

/// Sigmas of `(1̄_ones, tail)` from the sigmas of `tail` in constant time.
pub fn split_sigma2(ones: u64, tail: &SigmaTriple) -> SigmaTriple {
    tail.with_leading_ones(&BigUint::from(ones))
}

/// Rejection produced by [`is_solution`]: the two sides that differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotASolution {
    pub s2: BigUint,
    pub prod: BigUint,
}

impl fmt::Display for NotASolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a solution (σ₂={}, σₙ={})", self.s2, self.prod)
    }
}

impl std::error::Error for NotASolution {}

/// Canonical compressed tuple `(1̄_ones, tail)` with every tail entry `>= 2`.
///
/// `m` is the common value `σ₂ = σₙ` and is present only once the tuple has
/// been verified. Equality, hashing and ordering ignore `m`; ordering is by
/// length, then lexicographic on the expanded tuple.
#[derive(Debug, Clone)]
pub struct CompactSolution {
    n: u64,
    ones: u64,
    tail: Vec<u64>,
    m: Option<BigUint>,
}

impl CompactSolution {
    pub fn new(ones: u64, mut tail: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = tail.iter().find(|&&x| x < 2) {
            return Err(Error::TailEntry(bad));
        }
        let n = ones
            .checked_add(tail.len() as u64)
            .ok_or(Error::Overflow { what: "tuple length" })?;
        if n < 3 {
            return Err(Error::TooShort(n as usize));
        }
        tail.sort_unstable();
        Ok(Self { n, ones, tail, m: None })
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

    /// Number of entries different from 1.
    pub fn i(&self) -> usize {
        self.tail.len()
    }

    pub fn m(&self) -> Option<&BigUint> {
        self.m.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.m.is_some()
    }

    /// Entries of the expanded tuple, in order.
    pub fn entries(&self) -> impl Iterator<Item = u64> + '_ {
        std::iter::repeat_n(1u64, self.ones as usize).chain(self.tail.iter().copied())
    }

    /// Entry at position `idx` (0-based) of the expanded tuple.
    pub fn entry(&self, idx: u64) -> u64 {
        if idx < self.ones {
            1
        } else {
            self.tail[(idx - self.ones) as usize]
        }
    }

    pub fn expand(&self) -> SolutionTuple {
        SolutionTuple {
            entries: self.entries().collect(),
        }
    }

    pub fn sigmas(&self) -> SigmaTriple {
        let tail = if self.tail.is_empty() {
            SigmaTriple::empty()
        } else {
            eval_sigmas(&self.tail).expect("tail entries are positive")
        };
        split_sigma2(self.ones, &tail)
    }

    /// Check `σ₂ = σₙ` and record `m` on success.
    pub fn verify(mut self) -> std::result::Result<Self, NotASolution> {
        let s = self.sigmas();
        if s.s2 == s.prod {
            self.m = Some(s.prod);
            Ok(self)
        } else {
            Err(NotASolution { s2: s.s2, prod: s.prod })
        }
    }

    /// The first `n - 2` entries as `(ones, tail)`.
    pub fn prefix_parts(&self) -> (u64, &[u64]) {
        let drop = 2usize;
        if self.tail.len() >= drop {
            (self.ones, &self.tail[..self.tail.len() - drop])
        } else {
            (self.ones - (drop - self.tail.len()) as u64, &[])
        }
    }
}

impl PartialEq for CompactSolution {
    fn eq(&self, other: &Self) -> bool {
        self.ones == other.ones && self.tail == other.tail
    }
}

impl Eq for CompactSolution {}

impl Hash for CompactSolution {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ones.hash(state);
        self.tail.hash(state);
    }
}

impl Ord for CompactSolution {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            // more leading ones is lexicographically smaller
            other
                .ones
                .cmp(&self.ones)
                .then_with(|| self.tail.cmp(&other.tail))
        })
    }
}

impl PartialOrd for CompactSolution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CompactSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ones > 3 {
            write!(f, "(1^{}", self.ones)?;
            for x in &self.tail {
                write!(f, ",{x}")?;
            }
            f.write_str(")")
        } else {
            write_tuple(f, self.entries())
        }
    }
}

/// Accept `t` iff `σ₂(t) = σₙ(t)`.
pub fn is_solution(t: &SolutionTuple) -> std::result::Result<CompactSolution, NotASolution> {
    let s = eval_sigmas(t.entries()).expect("tuple entries are positive");
    if s.s2 == s.prod {
        let mut c = t.compact();
        c.m = Some(s.prod);
        Ok(c)
    } else {
        Err(NotASolution { s2: s.s2, prod: s.prod })
    }
}

/// Verify `(1̄_ones, tail)` with arbitrary-precision entries; returns `m`.
pub fn verify_big(ones: &BigUint, tail: &[BigUint]) -> std::result::Result<BigUint, NotASolution> {
    let tail_sigmas = if tail.is_empty() {
        SigmaTriple::empty()
    } else {
        eval_sigmas_big(tail.iter().cloned()).map_err(|_| NotASolution {
            s2: BigUint::zero(),
            prod: BigUint::zero(),
        })?
    };
    let s = tail_sigmas.with_leading_ones(ones);
    if s.s2 == s.prod {
        Ok(s.prod)
    } else {
        Err(NotASolution { s2: s.s2, prod: s.prod })
    }
}

/// Denominators `m / (xᵢ xⱼ)` for all `i < j`; their reciprocals sum to 1.
pub fn egyptian_view(c: &CompactSolution) -> Result<Vec<BigUint>> {
    let m = c
        .m()
        .ok_or_else(|| Error::Contract("egyptian_view needs a verified solution".into()))?;
    let xs: Vec<u64> = c.entries().collect();
    let mut out = Vec::with_capacity(xs.len() * (xs.len() - 1) / 2);
    for (a, &xi) in xs.iter().enumerate() {
        for &xj in &xs[a + 1..] {
            out.push(m / (BigUint::from(xi) * xj));
        }
    }
    Ok(out)
}
