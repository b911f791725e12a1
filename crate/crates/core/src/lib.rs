//! Exact enumeration and structural analysis of positive integer solutions
//! of `σ₂(x₁,…,xₙ) = σₙ(x₁,…,xₙ)`.
//!
//! Solutions are nondecreasing tuples. Most of them start with a long run
//! of ones, so the canonical in-memory form is [`CompactSolution`]: a count
//! of leading ones plus the tail of entries `>= 2`.
//!
//! Modules:
//! - [`sigma`]: symmetric sums, verification, Egyptian fraction certificates
//! - [`bounds`]: pruning bounds and the inequalities every solution obeys
//! - [`enumerate`]: complete enumeration by divisor pairs, plus a brute oracle
//! - [`s3`]: solutions with exactly three entries greater than one
//! - [`pell`]: Pell-equation families and ratio limits
//! - [`distinct`]: statistics on the number of distinct entries

pub mod arith;
pub mod bounds;
pub mod distinct;
pub mod enumerate;
mod error;
pub mod pell;
pub mod s3;
pub mod sigma;

pub use bounds::{bounds_for, check_proof_inequalities, forced_ones, BoundsReport, ProofInequalities};
pub use distinct::{
    construct_max_distinct, distinct_count, max_distinct_witness, min_distinct, search_equal_blocks,
    EqualBlockHit,
};
pub use enumerate::{
    enumerate, enumerate_brute, enumerate_with_jobs, extend_prefix, f_value, DivisorPair, Prefix,
};
pub use error::{Error, Result};
pub use pell::{
    equal_pair_family, lucas_step, max_ratio, pell_solve, ratio_limit, ratio_solutions,
    EqualPairSolution, PellSolution, RatioPoint,
};
pub use s3::{canonical_families, f3, parametric_family, s3_enumerate, s3_lower_bound, S3Solution, Variant};
pub use sigma::{
    egyptian_view, eval_sigmas, is_solution, split_sigma2, CompactSolution, NotASolution,
    SigmaTriple, SolutionTuple,
};
