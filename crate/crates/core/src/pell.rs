//! Pell-equation families of solutions.
//!
//! Taking `x = 2` in `S₃(n)` gives `(1̄_{n−3}, 2, n + d₁ − 1, n + d₂ − 1)` with
//! `d₁·d₂ = f(n, 2) = ½(n − 2)(3n − 1)`. Writing `d₁ = a·t`, `d₂ = b·t` and
//! `u = 6n − 7` turns this into `u² − 24ab·t² = 25`.

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

use crate::arith::exact_sqrt;
use crate::enumerate::enumerate;
use crate::error::{Error, Result};
use crate::sigma::verify_big;

/// `m`-th term of `f_m = 10 f_{m−1} − f_{m−2}` with `f₀ = a0`, `f₁ = a1`.
pub fn lucas_step(a0: i64, a1: i64, m: u64) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(a0), BigInt::from(a1));
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &cur * 10 - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Member `j` of the infinite family `(1̄_{n−3}, 2, x, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualPairSolution {
    pub j: u64,
    pub n: BigUint,
    pub x: BigUint,
    /// The repeated divisor, `d₁ = d₂ = d`.
    pub d: BigUint,
    /// Common value `σ₂ = σₙ`.
    pub m: BigUint,
}

pub fn equal_pair_family(j: u64) -> Result<EqualPairSolution> {
    let m = 2 * j + 1;
    let d: BigInt = lucas_step(1, 10, m) * 5;
    let y: BigInt = lucas_step(5, 49, m) * 5;
    let shifted: BigInt = y + 7i32;
    let (n, r) = shifted.div_rem(&BigInt::from(6));
    if !r.is_zero() {
        return Err(Error::Contract(format!("6n - 7 is not integral at j = {j}")));
    }
    let x: BigInt = &n + &d - 1;
    let (n, x, d) = (
        n.to_biguint().expect("n is positive"),
        x.to_biguint().expect("x is positive"),
        d.to_biguint().expect("d is positive"),
    );
    let ones = &n - 3u32;
    let m = verify_big(&ones, &[BigUint::from(2u32), x.clone(), x.clone()])
        .map_err(|e| Error::Contract(format!("family member {j}: {e}")))?;
    Ok(EqualPairSolution { j, n, x, d, m })
}

/// A solution of `u² − 24ab·t² = 25` with `t > 0` and `u ≡ 5 (mod 6)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub a: u64,
    pub b: u64,
    pub u: BigUint,
    pub t: BigUint,
}

impl PellSolution {
    /// `n = (u + 7) / 6`.
    pub fn n(&self) -> BigUint {
        (&self.u + 7u32) / 6u32
    }
}

/// Fundamental solution of `v² − D·w² = 1` from the continued fraction of `√D`.
pub fn fundamental_unit(d: u64) -> Result<(BigUint, BigUint)> {
    let root = d.sqrt();
    if root * root == d {
        return Err(Error::SquareDiscriminant(d));
    }
    let big_d = BigInt::from(d);
    let (mut m, mut den, mut a) = (0u64, 1u64, root);
    // convergents p/q
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(root));
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    loop {
        if &p * &p - &big_d * &q * &q == BigInt::one() {
            return Ok((p.to_biguint().unwrap(), q.to_biguint().unwrap()));
        }
        m = den * a - m;
        den = (d - m * m) / den;
        a = (root + m) / den;
        let p_next = &p * a + &p_prev;
        let q_next = &q * a + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

fn discriminant(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Err(Error::NonPositive);
    }
    24u64
        .checked_mul(a)
        .and_then(|v| v.checked_mul(b))
        .ok_or(Error::Overflow { what: "24ab" })
}

/// The first `count` solutions of `u² − 24ab·t² = 25` with `t > 0` and
/// `u ≡ 5 (mod 6)`, ascending in `u`.
///
/// Each class of solutions has a representative with
/// `t <= w·√(25 / (2(v + 1)))`, where `(v, w)` is the fundamental unit; every
/// solution is a representative (or its conjugate) times a power of the unit.
pub fn pell_solve(a: u64, b: u64, count: usize) -> Result<Vec<PellSolution>> {
    let d = discriminant(a, b)?;
    let (v, w) = fundamental_unit(d)?;
    let (v, w) = (BigInt::from(v), BigInt::from(w));
    let big_d = BigInt::from(d);

    let t_max: BigInt = (&w * &w * 25u32 / (BigInt::from(2) * (&v + 1i32))).sqrt();
    let mut orbits: Vec<(BigInt, BigInt)> = Vec::new();
    let mut t = BigInt::zero();
    while t <= t_max {
        let sq = (&big_d * &t * &t + 25u32).to_biguint().unwrap();
        if let Some(u) = exact_sqrt(&sq) {
            let u = BigInt::from(u);
            orbits.push((u.clone(), t.clone()));
            if !t.is_zero() {
                orbits.push((u, -&t));
            }
        }
        t += 1;
    }

    let unit = |(u, t): &(BigInt, BigInt)| (u * &v + &big_d * t * &w, u * &w + t * &v);
    let six = BigInt::from(6);
    let five = BigInt::from(5);
    let mut found: BTreeSet<(BigInt, BigInt)> = BTreeSet::new();
    loop {
        for (u, t) in &orbits {
            if u.is_positive() && t.is_positive() && u.mod_floor(&six) == five {
                found.insert((u.clone(), t.clone()));
            }
        }
        let next: Vec<_> = orbits.iter().map(unit).collect();
        // once every orbit is increasing, nothing below the smallest next
        // value can appear later
        let settled = orbits
            .iter()
            .zip(&next)
            .all(|(cur, nxt)| nxt.0 > cur.0 && nxt.0.is_positive());
        if settled {
            let floor = next.iter().map(|s| &s.0).min().expect("(5, 0) is always a base");
            let ready = found.iter().take_while(|(u, _)| u < floor).count();
            if ready >= count {
                return Ok(found
                    .into_iter()
                    .take(count)
                    .map(|(u, t)| PellSolution {
                        a,
                        b,
                        u: u.to_biguint().unwrap(),
                        t: t.to_biguint().unwrap(),
                    })
                    .collect());
            }
        }
        orbits = next;
    }
}

/// `(√(6ab) + 3b) / (√(6ab) + 3a)`, the limit of `z/y` along [`ratio_solutions`].
pub fn ratio_limit(a: u64, b: u64) -> f64 {
    let s = (6.0 * a as f64 * b as f64).sqrt();
    (s + 3.0 * b as f64) / (s + 3.0 * a as f64)
}

/// Rational interval `[lo, hi]` containing [`ratio_limit`], of width about
/// `10^{-digits}`.
pub fn ratio_limit_interval(a: u64, b: u64, digits: u32) -> (BigRational, BigRational) {
    let scale = BigInt::from(10u32).pow(digits);
    let radicand = BigInt::from(6u64 * a * b) * &scale * &scale;
    let lo_root = radicand.sqrt();
    let hi_root = if &lo_root * &lo_root == radicand {
        lo_root.clone()
    } else {
        &lo_root + 1
    };
    let limit_at = |root: BigInt| {
        let s = BigRational::new(root, scale.clone());
        let (a3, b3) = (BigRational::from_integer(BigInt::from(3 * a)), BigRational::from_integer(BigInt::from(3 * b)));
        (&s + b3) / (&s + a3)
    };
    let (p, q) = (limit_at(lo_root), limit_at(hi_root));
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

/// A member `(1̄_{n−3}, 2, y, z)` of `S₃(n)` built from a Pell solution.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioPoint {
    pub n: BigUint,
    /// `n + a·t − 1`
    pub y: BigUint,
    /// `n + b·t − 1`
    pub z: BigUint,
    /// `z / y`, exact.
    pub ratio: BigRational,
    pub ratio_f64: f64,
}

pub fn ratio_solutions(a: u64, b: u64, count: usize) -> Result<Vec<RatioPoint>> {
    let mut out = Vec::with_capacity(count);
    for s in pell_solve(a, b, count)? {
        let n = s.n();
        let y = &n + &s.t * a - 1u32;
        let z = &n + &s.t * b - 1u32;
        let (lo, hi) = if y <= z { (&y, &z) } else { (&z, &y) };
        verify_big(&(&n - 3u32), &[BigUint::from(2u32), lo.clone(), hi.clone()])
            .map_err(|e| Error::Contract(format!("Pell solution u = {}: {e}", s.u)))?;
        let ratio = BigRational::new(BigInt::from(z.clone()), BigInt::from(y.clone()));
        let ratio_f64 = ratio.to_f64().unwrap_or(f64::NAN);
        out.push(RatioPoint { n, y, z, ratio, ratio_f64 });
    }
    Ok(out)
}

/// Largest `xₙ / x_{n−1}` over `S(n)`.
pub fn max_ratio(n: u64) -> Result<Ratio<u64>> {
    enumerate(n)?
        .iter()
        .map(|c| {
            let t = c.tail();
            Ratio::new(t[t.len() - 1], t[t.len() - 2])
        })
        .max()
        .ok_or_else(|| Error::Contract(format!("S({n}) is empty")))
}
