//! One test per acceptance criterion. Each prints a single `ACn PASS|FAIL`
//! line (run with `--nocapture` to see them) and then asserts.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use sigma2_core::{
    bounds_for, check_proof_inequalities, construct_max_distinct, egyptian_view, enumerate,
    enumerate_brute, equal_pair_family, eval_sigmas, is_solution, max_distinct_witness, min_distinct,
    pell_solve, ratio_solutions, s3_enumerate, s3_lower_bound, search_equal_blocks, split_sigma2,
    CompactSolution, SigmaTriple, SolutionTuple,
};
use sigma2_core::pell::ratio_limit_interval;

type Check = std::result::Result<String, String>;

fn report(id: &str, limit: Option<Duration>, f: impl FnOnce() -> Check) {
    let start = Instant::now();
    let mut outcome = f();
    let elapsed = start.elapsed();
    if let (Ok(_), Some(limit)) = (&outcome, limit) {
        if elapsed > limit {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit:.0?}"));
        }
    }
    match &outcome {
        Ok(detail) => println!("{id} PASS ({elapsed:.2?}) {detail}"),
        Err(why) => println!("{id} FAIL ({elapsed:.2?}) {why}"),
    }
    if let Err(why) = outcome {
        panic!("{id} failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_solutions(max_n: u64) -> Vec<CompactSolution> {
    (3..=max_n).flat_map(|n| enumerate(n).unwrap()).collect()
}

#[test]
fn ac1_table1_and_lists() {
    report("AC1", Some(Duration::from_secs(300)), || {
        let golden = common::golden();
        let mut counts = Vec::new();
        for (n, expected) in common::table1() {
            let got = enumerate(n).map_err(|e| e.to_string())?;
            ensure(got.len() == expected, || format!("|S({n})| = {}, expected {expected}", got.len()))?;
            ensure(got == golden[&n], || format!("S({n}) differs from the golden list"))?;
            counts.push(got.len().to_string());
        }
        Ok(format!("counts n=3..16: {}", counts.join(",")))
    });
}

#[test]
fn ac2_brute_force_oracle() {
    report("AC2", Some(Duration::from_secs(120)), || {
        for n in 3..=8u64 {
            let cap = bounds_for(n).unwrap().xn_max;
            let fast = enumerate(n).map_err(|e| e.to_string())?;
            let slow = enumerate_brute(n, cap).map_err(|e| e.to_string())?;
            ensure(fast == slow, || format!("n = {n}: divisor method {fast:?} vs brute {slow:?}"))?;
        }
        Ok("exact set equality for n=3..8".into())
    });
}

#[test]
fn ac3_bounds() {
    report("AC3", None, || {
        let mut xn_equal = 0;
        let mut xn2_equal = Vec::new();
        for c in all_solutions(16) {
            let n = c.n();
            let b = bounds_for(n).unwrap();
            let m = c.m().unwrap().to_u128().unwrap();
            let tail = c.tail();
            let xn = tail[tail.len() - 1];
            let xn2 = c.entry(n - 3);
            let prefix: u128 = (0..n - 2).map(|k| u128::from(c.entry(k))).product();
            ensure(m <= b.m_max, || format!("{c}: m = {m} > {}", b.m_max))?;
            ensure(xn <= b.xn_max, || format!("{c}: x_n above bound"))?;
            ensure(xn2 <= b.xn2_max, || format!("{c}: x_(n-2) = {xn2} > {}", b.xn2_max))?;
            ensure(c.i() as u32 <= b.i_max, || format!("{c}: i = {} > {}", c.i(), b.i_max))?;
            ensure(prefix <= u128::from(b.prefix_product_max), || format!("{c}: prefix product {prefix}"))?;
            let ineq = check_proof_inequalities(&c).map_err(|e| e.to_string())?;
            ensure(ineq.all(), || format!("{c}: {ineq:?}"))?;
            if xn == b.xn_max {
                let canonical = CompactSolution::new(n - 3, vec![2, n, b.xn_max]).unwrap();
                ensure(c == canonical, || format!("{c} reaches the x_n bound off the canonical family"))?;
                xn_equal += 1;
            }
            if xn2 == b.xn2_max {
                xn2_equal.push(c.to_string());
            }
        }
        ensure(xn_equal == 14, || format!("x_n bound attained {xn_equal} times, expected once per n"))?;
        ensure(xn2_equal == ["(3,3,3)"], || format!("x_(n-2) bound attained at {xn2_equal:?}"))?;
        Ok("all bounds hold for n<=16; equality cases as expected".into())
    });
}

#[test]
fn ac4_table2() {
    report("AC4", Some(Duration::from_secs(1)), || {
        for (j, n, x) in common::table2() {
            let s = equal_pair_family(j).map_err(|e| e.to_string())?;
            ensure(s.n == BigUint::from(n) && s.x == BigUint::from(x), || {
                format!("j = {j}: got (n, x) = ({}, {}), expected ({n}, {x})", s.n, s.x)
            })?;
            let ones = u64::try_from(n - 3).unwrap();
            let tuple = CompactSolution::new(ones, vec![2, x as u64, x as u64]).unwrap();
            ensure(tuple.verify().is_ok(), || format!("j = {j} does not verify"))?;
        }
        Ok("j=0..5 exact".into())
    });
}

#[test]
fn ac5_s3_structure() {
    report("AC5", Some(Duration::from_secs(120)), || {
        for n in 3..=300u64 {
            let s3 = s3_enumerate(n).map_err(|e| e.to_string())?;
            let lb = s3_lower_bound(n).unwrap();
            ensure(s3.len() as u64 >= lb, || format!("|S3({n})| = {} below {lb}", s3.len()))?;
            let has_x3 = s3.iter().any(|s| s.x == 3);
            ensure(has_x3 == (n % 4 != 0), || format!("n = {n}: x = 3 present is {has_x3}"))?;
            if n <= 16 {
                let slice: Vec<CompactSolution> = enumerate(n).unwrap().into_iter().filter(|c| c.i() == 3).collect();
                let mut mine: Vec<CompactSolution> = s3.iter().map(|s| s.compact().unwrap()).collect();
                mine.sort();
                ensure(slice == mine, || format!("n = {n}: S3 disagrees with the i = 3 slice"))?;
            }
        }
        let n299 = s3_enumerate(299).unwrap().len();
        ensure(n299 == 213, || format!("|S3(299)| = {n299}"))?;
        Ok("lower bound, x=3 criterion and slices hold; |S3(299)| = 213".into())
    });
}

#[test]
fn ac6_distinct_values() {
    report("AC6", None, || {
        let hits: BTreeSet<(u32, u64, u64)> =
            search_equal_blocks(1..=4, 200).unwrap().iter().map(|h| (h.k, h.n, h.x)).collect();
        for want in [(3, 11, 7), (4, 47, 7), (4, 41156, 172)] {
            ensure(hits.contains(&want), || format!("block witness {want:?} missing from {hits:?}"))?;
        }
        let m: Vec<usize> = [3, 4, 5, 11].iter().map(|&n| min_distinct(n).unwrap()).collect();
        ensure(m == [1, 2, 2, 2], || format!("M(3), M(4), M(5), M(11) = {m:?}"))?;
        let c = construct_max_distinct(&[2, 4]).map_err(|e| e.to_string())?;
        ensure(c == CompactSolution::new(1, vec![2, 4, 14]).unwrap(), || format!("(2,4) gave {c}"))?;
        let w = max_distinct_witness(3).map_err(|e| e.to_string())?;
        let s = w.sigmas();
        ensure(s.s2 == BigUint::from(5832u32) && s.prod == BigUint::from(5832u32), || {
            format!("witness(3) sides {} and {}", s.s2, s.prod)
        })?;
        Ok("block witnesses, M values and constructions exact".into())
    });
}

fn sigma2_identity_sweep() -> std::result::Result<(), String> {
    // small LCG, fixed seed
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state >> 33
    };
    for _ in 0..10_000 {
        let len = 1 + next() as usize % 30;
        let xs: Vec<u64> = (0..len).map(|_| 1 + next() % 1_000_000).collect();
        let s = eval_sigmas(&xs).map_err(|e| e.to_string())?;
        let squares: BigUint = xs.iter().map(|&x| BigUint::from(x).pow(2)).sum();
        ensure(&s.s2 * 2u32 + squares == &s.s1 * &s.s1, || format!("identity fails on {xs:?}"))?;
        let ones = xs.iter().filter(|&&x| x == 1).count() as u64;
        let tail: Vec<u64> = xs.iter().copied().filter(|&x| x > 1).collect();
        let base = if tail.is_empty() { SigmaTriple::empty() } else { eval_sigmas(&tail).unwrap() };
        ensure(split_sigma2(ones, &base) == s, || format!("split disagrees on {xs:?}"))?;
    }
    Ok(())
}

fn egyptian_sweep() -> std::result::Result<(), String> {
    for c in all_solutions(16) {
        let sum = egyptian_view(&c)
            .map_err(|e| e.to_string())?
            .into_iter()
            .fold(BigRational::zero(), |acc, d| acc + BigRational::new(BigInt::one(), BigInt::from(d)));
        ensure(sum.is_one(), || format!("{c}: certificate sums to {sum}"))?;
        let expanded = SolutionTuple::new(c.entries().collect()).unwrap();
        ensure(is_solution(&expanded).is_ok(), || format!("{c} fails verification"))?;
    }
    Ok(())
}

fn ratio_convergence(case: &common::RatioCase) -> std::result::Result<String, String> {
    let (a, b) = (case.a, case.b);
    for s in pell_solve(a, b, case.solutions).map_err(|e| format!("({a},{b}): {e}"))? {
        let lhs = BigInt::from(s.u.clone()).pow(2) - BigInt::from(24 * a * b) * BigInt::from(s.t).pow(2);
        ensure(lhs == BigInt::from(25), || format!("({a},{b}): Pell residual {lhs}"))?;
    }
    let points = ratio_solutions(a, b, case.solutions).map_err(|e| format!("({a},{b}): {e}"))?;
    ensure(points.len() == case.solutions, || format!("({a},{b}): only {} solutions", points.len()))?;
    let (lo, hi) = ratio_limit_interval(a, b, 60);
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    let gaps: Vec<BigRational> = points.iter().map(|p| (&p.ratio - &mid).abs()).collect();
    ensure(gaps.windows(2).all(|w| w[1] < w[0]), || format!("({a},{b}): gaps not strictly decreasing"))?;
    let last = gaps.last().unwrap().to_f64().unwrap();
    ensure(last < case.max_final_gap, || {
        format!("({a},{b}): final gap {last:e} above {:e}", case.max_final_gap)
    })?;
    Ok(format!("({a},{b}) gap {last:.2e}"))
}

#[test]
fn ac7_properties() {
    report("AC7", None, || {
        sigma2_identity_sweep()?;
        egyptian_sweep()?;
        let mut notes = Vec::new();
        let mut failures = Vec::new();
        for case in common::ratio_cases() {
            match ratio_convergence(&case) {
                Ok(note) => notes.push(note),
                Err(why) => failures.push(why),
            }
        }
        if failures.is_empty() {
            Ok(format!("identities, certificates, residuals; {}", notes.join(", ")))
        } else {
            Err(format!("ratio convergence: {}; passing: {}", failures.join("; "), notes.join(", ")))
        }
    });
}
