#![allow(dead_code)]

use std::collections::BTreeMap;

use sigma2_core::CompactSolution;

pub const GOLDEN: &str = include_str!("../../data/s_n_golden.tsv");
pub const TABLE1: &str = include_str!("../../data/table1.tsv");
pub const TABLE2: &str = include_str!("../../data/table2.tsv");
pub const RATIO: &str = include_str!("../../data/ratio_convergence.tsv");

fn rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').map(str::trim).collect())
}

/// `n -> sorted solutions` from the golden listing.
pub fn golden() -> BTreeMap<u64, Vec<CompactSolution>> {
    let mut out: BTreeMap<u64, Vec<CompactSolution>> = BTreeMap::new();
    for r in rows(GOLDEN) {
        let n: u64 = r[0].parse().unwrap();
        let ones: u64 = r[1].parse().unwrap();
        let tail: Vec<u64> = r[2].split(',').map(|v| v.parse().unwrap()).collect();
        let c = CompactSolution::new(ones, tail).unwrap();
        assert_eq!(c.n(), n, "golden row {r:?} has the wrong length");
        out.entry(n).or_default().push(c);
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

pub fn table1() -> Vec<(u64, usize)> {
    rows(TABLE1).map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap())).collect()
}

pub fn table2() -> Vec<(u64, u128, u128)> {
    rows(TABLE2)
        .map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap(), r[2].parse().unwrap()))
        .collect()
}

pub struct RatioCase {
    pub a: u64,
    pub b: u64,
    pub solutions: usize,
    pub max_final_gap: f64,
}

pub fn ratio_cases() -> Vec<RatioCase> {
    rows(RATIO)
        .map(|r| RatioCase {
            a: r[0].parse().unwrap(),
            b: r[1].parse().unwrap(),
            solutions: r[2].parse().unwrap(),
            max_final_gap: r[3].parse().unwrap(),
        })
        .collect()
}
