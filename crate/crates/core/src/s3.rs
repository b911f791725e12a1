//! Solutions with exactly three entries greater than one,
//! `(1̄_{n−3}, x, y, z)` with `2 <= x <= y <= z`.
//!
//! For fixed `n` and `x` these are parameterized by factorizations
//! `d₁·d₂ = f3(n, x)`:
//!
//! ```text
//! y = (n + d₁ − 2)/(x − 1) + 1,   z = (n + d₂ − 2)/(x − 1) + 1
//! ```

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::tau;
use crate::bounds::bounds_for;
use crate::enumerate::divisor_pairs;
use crate::error::{Error, Result};
use crate::sigma::CompactSolution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct S3Solution {
    pub n: u64,
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub d1: u64,
    pub d2: u64,
}

impl S3Solution {
    /// Build from `(n, x, y, z)`, recovering the divisor pair and verifying.
    pub fn from_entries(n: u64, x: u64, y: u64, z: u64) -> Result<Self> {
        if !(2 <= x && x <= y && y <= z) {
            return Err(Error::OrderingViolation {
                x: x.to_string(),
                y: y.to_string(),
                z: z.to_string(),
            });
        }
        let d = |v: u64| -> Result<u64> {
            let wide = i128::from(v - 1) * i128::from(x - 1) - i128::from(n) + 2;
            u64::try_from(wide).map_err(|_| Error::Contract(format!("divisor {wide} is not positive")))
        };
        let s = Self { n, x, y, z, d1: d(y)?, d2: d(z)? };
        s.compact()?
            .verify()
            .map_err(|e| Error::Contract(format!("{s:?} is {e}")))?;
        Ok(s)
    }

    pub fn compact(&self) -> Result<CompactSolution> {
        CompactSolution::new(self.n - 3, vec![self.x, self.y, self.z])
    }
}

/// `f(n, x) = ½(n − 2)((x + 1)n + 2x² − 3x − 3)`.
pub fn f3(n: u64, x: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    if x < 2 {
        return Err(Error::TailEntry(x));
    }
    let (n, x) = (u128::from(n), u128::from(x));
    let inner = (x + 1) * n + 2 * x * x - 3 * x - 3;
    u64::try_from((n - 2) * inner / 2).map_err(|_| Error::Overflow { what: "f(n, x)" })
}

/// `S₃(n)`, ordered by `(x, y)`.
pub fn s3_enumerate(n: u64) -> Result<Vec<S3Solution>> {
    let b = bounds_for(n)?;
    let mut out = Vec::new();
    for x in 2..=b.xn2_max {
        let f = f3(n, x)?;
        let step = x - 1;
        for pair in divisor_pairs(f) {
            let ny = n + pair.d1 - 2;
            let nz = n + pair.d2 - 2;
            if !ny.is_multiple_of(step) || !nz.is_multiple_of(step) {
                continue;
            }
            let (y, z) = (ny / step + 1, nz / step + 1);
            if y < x {
                continue;
            }
            let s = S3Solution { n, x, y, z, d1: pair.d1, d2: pair.d2 };
            if s.compact()?.verify().is_ok() {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// `⌈τ(f(n, 2)) / 2⌉`, the number of `x = 2` members of `S₃(n)`.
pub fn s3_lower_bound(n: u64) -> Result<u64> {
    Ok(tau(f3(n, 2)?).div_ceil(2))
}

/// The explicit members of `S₃(n)`: `(2, n, n(3n−5)/2)` plus two more
/// depending on the parity of `n`. Duplicates collapse (all three coincide
/// at `n = 3`).
pub fn canonical_families(n: u64) -> Result<Vec<S3Solution>> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    if n == 4 {
        return Err(Error::NoCanonicalFamily);
    }
    let mut raw = vec![[2, n, n * (3 * n - 5) / 2]];
    if n % 2 == 1 {
        raw.push([2, 2 * n - 3, (5 * n - 3) / 2]);
        raw.push([3, n - 1, 3 * (n + 1) / 2]);
    } else {
        raw.push([2, (3 * n - 4) / 2, 2 * (2 * n - 1)]);
        raw.push([4, n / 2, 2 * (n + 3)]);
    }
    let mut out = Vec::with_capacity(3);
    for mut t in raw {
        t.sort_unstable();
        out.push(S3Solution::from_entries(n, t[0], t[1], t[2])?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The two cubic-in-`k` families of `S₃(n)` with all three entries of
/// order `2^{−1/3} n^{2/3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `y = 2q² + 1` with `q = 4k³ + 2k² + 2k − 2`.
    A,
    /// `x = 2q² + 1` with `q = 4k³ − 10k² + 10k − 6`. Its entries are those
    /// of `A` at `k − 1` in another order, so it never satisfies `x <= y <= z`.
    B,
}

/// Raw `(n, x, y, z)` of a parametric family member, before any checks.
pub fn parametric_raw(variant: Variant, k: i64) -> [BigInt; 4] {
    let k = BigInt::from(k);
    let p = |coeffs: &[i64]| -> BigInt {
        coeffs
            .iter()
            .fold(BigInt::from(0), |acc, &c| acc * &k + c)
    };
    match variant {
        Variant::A => {
            let q = p(&[4, 2, 2, -2]);
            let n = BigInt::from(4) * q.pow(3) + 2;
            let x = BigInt::from(2) * &q + p(&[32, 32, 32, -16, -8, -10, 8]);
            let y = BigInt::from(2) * q.pow(2) + 1;
            let z = &q * p(&[8, 4, 6, -1]) + 1;
            [n, x, y, z]
        }
        Variant::B => {
            let q = p(&[4, -10, 10, -6]);
            let n = BigInt::from(4) * q.pow(3) + 2;
            let x = BigInt::from(2) * q.pow(2) + 1;
            let y = &q * p(&[8, -20, 22, -11]) + 1;
            let z = BigInt::from(2) * &q + p(&[32, -160, 352, -464, 392, -202, 58]);
            [n, x, y, z]
        }
    }
}

/// A member of a parametric family, verified. Small `k` may violate the
/// ordering `x <= y <= z`; that is reported as an error, never reordered.
pub fn parametric_family(variant: Variant, k: i64) -> Result<S3Solution> {
    let [n, x, y, z] = parametric_raw(variant, k);
    if n.is_negative() || n < BigInt::from(3) {
        return Err(Error::InvalidN(n.to_u64().unwrap_or(0)));
    }
    let fit = |v: &BigInt| v.to_u64().ok_or(Error::Overflow { what: "family member" });
    let ordered = BigInt::from(2) <= x && x <= y && y <= z;
    if !ordered {
        return Err(Error::OrderingViolation {
            x: x.to_string(),
            y: y.to_string(),
            z: z.to_string(),
        });
    }
    S3Solution::from_entries(fit(&n)?, fit(&x)?, fit(&y)?, fit(&z)?)
}
