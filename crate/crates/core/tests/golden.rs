mod common;

use sigma2_core::{enumerate, is_solution};

#[test]
fn golden_rows_are_solutions() {
    for (n, sols) in common::golden() {
        for c in sols {
            assert!(is_solution(&c.expand()).is_ok(), "n = {n}: {c}");
        }
    }
}

#[test]
fn enumeration_matches_golden_lists() {
    for (n, expected) in common::golden() {
        assert_eq!(enumerate(n).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn golden_counts_match_table() {
    let g = common::golden();
    for (n, count) in common::table1() {
        assert_eq!(g[&n].len(), count, "n = {n}");
    }
}
