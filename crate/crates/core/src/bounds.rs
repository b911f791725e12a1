//! Pruning bounds for `S(n)` and the inequalities every solution satisfies.

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{binomial2, icbrt};
use crate::error::{Error, Result};
use crate::sigma::{eval_sigmas, split_sigma2, CompactSolution};

/// Every bound that constrains solutions of length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundsReport {
    pub n: u64,
    /// Upper bound on `x₁⋯x_{n−2}`: `C(n, 2)`.
    pub prefix_product_max: u64,
    /// Upper bound on the number of entries greater than one.
    pub i_max: u32,
    /// Upper bound on `xₙ`: `n(3n − 5)/2`.
    pub xn_max: u64,
    /// Upper bound on `m = σ₂ = σₙ`: `n²(3n − 5)`.
    pub m_max: u128,
    /// Upper bound on `x_{n−2}`: `1 + ⌊2(n − 2)^{2/3}⌋`.
    pub xn2_max: u64,
}

fn to_u64(v: u128, what: &'static str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow { what })
}

/// Largest `i` with `2^{i−2} <= C(n, 2)`.
fn i_max(n: u64) -> u32 {
    let c = binomial2(n);
    // c >= 3 for n >= 3, so the answer is at least 3
    2 + (127 - c.leading_zeros())
}

pub fn bounds_for(n: u64) -> Result<BoundsReport> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    let wide = u128::from(n);
    let m_max = wide
        .checked_mul(wide)
        .and_then(|sq| sq.checked_mul(3 * wide - 5))
        .ok_or(Error::Overflow { what: "m bound" })?;
    let shifted = wide - 2;
    let cube = 8 * shifted * shifted;
    Ok(BoundsReport {
        n,
        prefix_product_max: to_u64(binomial2(n), "prefix product bound")?,
        i_max: i_max(n),
        xn_max: to_u64(wide * (3 * wide - 5) / 2, "x_n bound")?,
        m_max,
        xn2_max: to_u64(1 + icbrt(cube), "x_{n-2} bound")?,
    })
}

/// Number of leading entries forced to equal 1 in every solution of length `n`.
pub fn forced_ones(n: u64) -> Result<u64> {
    let b = bounds_for(n)?;
    Ok(n.saturating_sub(u64::from(b.i_max)))
}

/// Truth values of the inequalities a genuine solution must satisfy,
/// evaluated on its prefix `X = (x₁, …, x_{n−2}) = (1̄_{n−i}, Y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProofInequalities {
    /// `σ₁(Y) <= (i−2)/2^{i−3} · σ(Y)`
    pub tail_sum: bool,
    /// `σ₂(Y) <= (i−2)(i−3)/2^{i−3} · σ(Y)`
    pub tail_pairs: bool,
    /// `σ₁(X) <= n − i + (i−2)/2^{i−3} · σ(X)`
    pub prefix_sum_by_i: bool,
    /// `σ₂(X) <= C(n−i, 2) + (i−2)(n−3)/2^{i−3} · σ(X)`
    pub prefix_pairs_by_i: bool,
    /// `σ₁(X) <= n − 3 + σ(X)`
    pub prefix_sum: bool,
    /// `σ₂(X) <= C(n−3, 2) + (n−3) · σ(X)`
    pub prefix_pairs: bool,
}

impl ProofInequalities {
    pub fn all(&self) -> bool {
        self.tail_sum
            && self.tail_pairs
            && self.prefix_sum_by_i
            && self.prefix_pairs_by_i
            && self.prefix_sum
            && self.prefix_pairs
    }
}

pub fn check_proof_inequalities(c: &CompactSolution) -> Result<ProofInequalities> {
    if !c.is_verified() {
        return Err(Error::Contract(
            "inequalities are only checked on verified solutions".into(),
        ));
    }
    let i = c.i() as u64;
    if i < 3 {
        return Err(Error::Contract(format!(
            "a verified solution has at least 3 entries above one, found {i}"
        )));
    }
    let n = BigUint::from(c.n());
    let n_minus_i = BigUint::from(c.n() - i);
    let i_minus_2 = BigUint::from(i - 2);
    let i_minus_3 = BigUint::from(i - 3);
    let pow = BigUint::one() << (i - 3);
    let (ones, y) = c.prefix_parts();
    debug_assert_eq!(ones, c.n() - i);

    let ys = eval_sigmas(y)?;
    let xs = split_sigma2(ones, &ys);
    let prod = &xs.prod;

    let tail_sum = &ys.s1 * &pow <= &i_minus_2 * &ys.prod;
    let tail_pairs = &ys.s2 * &pow <= &i_minus_2 * &i_minus_3 * &ys.prod;
    let prefix_sum_by_i = &xs.s1 * &pow <= &n_minus_i * &pow + &i_minus_2 * prod;
    // doubled to clear the binomial's denominator
    let prefix_pairs_by_i = &xs.s2 * &pow * 2u32
        <= &n_minus_i * sub_one_sat(&n_minus_i) * &pow
            + &i_minus_2 * (&n - 3u32) * prod * 2u32;
    let n3 = &n - 3u32;
    let prefix_sum = xs.s1 <= &n3 + prod;
    let prefix_pairs = &xs.s2 * 2u32 <= &n3 * sub_one_sat(&n3) + &n3 * prod * 2u32;

    Ok(ProofInequalities {
        tail_sum,
        tail_pairs,
        prefix_sum_by_i,
        prefix_pairs_by_i,
        prefix_sum,
        prefix_pairs,
    })
}

fn sub_one_sat(v: &BigUint) -> BigUint {
    if v.bits() == 0 {
        BigUint::default()
    } else {
        v - 1u32
    }
}
