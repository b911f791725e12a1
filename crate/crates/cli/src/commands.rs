use serde_json::json;

use sigma2_core::pell::ratio_limit_interval;
use sigma2_core::{
    bounds_for, construct_max_distinct, distinct_count, enumerate_with_jobs, equal_pair_family,
    is_solution, max_distinct_witness, min_distinct, ratio_limit, ratio_solutions, s3_enumerate,
    search_equal_blocks, CompactSolution, SolutionTuple,
};

use crate::output::{write_solutions, Failure, Run, CHECK_FAILED, USAGE};
use crate::Format;

type Outcome = Result<Run, Failure>;

/// `|S(n)|` for `n = 3..=16`.
pub const TABLE1: [usize; 14] = [3, 2, 7, 4, 7, 5, 5, 10, 26, 10, 9, 10, 13, 9];

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Jsonl => "jsonl",
        Format::Csv => "csv",
    }
}

pub fn enumerate(n: u64, format: Format, jobs: usize) -> Outcome {
    let mut run = Run::new("enumerate", json!({ "n": n, "format": format_name(format), "jobs": jobs }));
    if jobs == 0 {
        return Err(Failure { message: "--jobs must be at least 1".into(), status: USAGE });
    }
    let sols = enumerate_with_jobs(n, jobs)?;
    write_solutions(&mut run, format, &sols);
    run.diagnostics.push(format!("|S({n})|={}", sols.len()));
    Ok(run)
}

pub fn table1(n_max: u64, check: bool) -> Outcome {
    let mut run = Run::new("table1", json!({ "n_max": n_max, "check": check }));
    if n_max < 3 {
        return Err(Failure { message: format!("n_max must be at least 3, got {n_max}"), status: USAGE });
    }
    let check_max = if check { n_max.max(16) } else { n_max };
    let mut mismatches = Vec::new();
    run.line("n\tcount");
    for n in 3..=check_max {
        let count = sigma2_core::enumerate(n)?.len();
        if n <= n_max {
            run.line(format!("{n}\t{count}"));
            run.result_count += 1;
        }
        if check && n <= 16 {
            let want = TABLE1[(n - 3) as usize];
            if count != want {
                mismatches.push(format!("n={n}: got {count}, expected {want}"));
            }
        }
    }
    if check {
        if mismatches.is_empty() {
            run.diagnostics.push("check passed for n=3..16".into());
        } else {
            run.diagnostics.extend(mismatches);
            run.status = CHECK_FAILED;
        }
    }
    Ok(run)
}

pub fn verify(tuple: Vec<u64>) -> Outcome {
    let text: Vec<String> = tuple.iter().map(u64::to_string).collect();
    let mut run = Run::new("verify", json!({ "tuple": text.join(",") }));
    let t = SolutionTuple::new(tuple)?;
    match is_solution(&t) {
        Ok(c) => {
            run.line(format!("solution, m={}", c.m().expect("verified")));
            run.line(format!("i={}, distinct={}", c.i(), distinct_count(&c)));
            run.result_count = 1;
        }
        Err(e) => {
            run.line(e.to_string());
            let c = t.compact();
            run.line(format!("i={}, distinct={}", c.i(), distinct_count(&c)));
            run.status = CHECK_FAILED;
        }
    }
    Ok(run)
}

pub fn pell_family(j_max: u64) -> Outcome {
    let mut run = Run::new("pell family", json!({ "j": j_max }));
    run.line("j\tn\tx");
    for j in 0..=j_max {
        let s = equal_pair_family(j)?;
        run.line(format!("{}\t{}\t{}", s.j, s.n, s.x));
        run.result_count += 1;
    }
    Ok(run)
}

pub fn pell_ratio(a: u64, b: u64, count: usize) -> Outcome {
    let mut run = Run::new("pell ratio", json!({ "a": a, "b": b, "count": count }));
    let points = ratio_solutions(a, b, count)?;
    let limit = ratio_limit(a, b);
    // digits beyond f64 are only needed to print the gap
    let (lo, hi) = ratio_limit_interval(a, b, 40);
    let mid = (lo + hi) / num_rational::BigRational::from_integer(2.into());
    run.line("n\ty\tz\tratio\tlimit\tgap");
    for p in &points {
        let gap = num_traits::ToPrimitive::to_f64(&(&p.ratio - &mid)).unwrap_or(f64::NAN);
        run.line(format!("{}\t{}\t{}\t{:.15}\t{limit:.15}\t{gap:.3e}", p.n, p.y, p.z, p.ratio_f64));
    }
    run.result_count = points.len();
    Ok(run)
}

pub fn s3(n: u64, count: bool, format: Format) -> Outcome {
    let mut run = Run::new("s3", json!({ "n": n, "count": count, "format": format_name(format) }));
    let sols = s3_enumerate(n)?;
    if count {
        run.line(sols.len().to_string());
        run.result_count = sols.len();
    } else {
        let compact = sols
            .iter()
            .map(|s| s.compact().and_then(|c| c.verify().map_err(|e| sigma2_core::Error::Contract(e.to_string()))))
            .collect::<Result<Vec<CompactSolution>, _>>()?;
        write_solutions(&mut run, format, &compact);
    }
    run.diagnostics.push(format!("|S3({n})|={}", sols.len()));
    Ok(run)
}

pub fn bounds(n: u64) -> Outcome {
    let mut run = Run::new("bounds", json!({ "n": n }));
    let b = bounds_for(n)?;
    run.line(format!("n={}", b.n));
    run.line(format!("prefix_product_max={}", b.prefix_product_max));
    run.line(format!("i_max={}", b.i_max));
    run.line(format!("xn_max={}", b.xn_max));
    run.line(format!("m_max={}", b.m_max));
    run.line(format!("xn2_max={}", b.xn2_max));
    run.result_count = 1;
    Ok(run)
}

pub fn distinct_min(n: u64) -> Outcome {
    let mut run = Run::new("distinct min", json!({ "n": n }));
    run.line(min_distinct(n)?.to_string());
    run.result_count = 1;
    Ok(run)
}

pub fn distinct_blocks((k_lo, k_hi): (u32, u32), x_max: u64) -> Outcome {
    let mut run = Run::new("distinct blocks", json!({ "k": format!("{k_lo}..{k_hi}"), "x_max": x_max }));
    let hits = search_equal_blocks(k_lo..=k_hi, x_max)?;
    run.line("k\tn\tx\ty");
    for h in &hits {
        run.line(format!("{}\t{}\t{}\t{}", h.k, h.n, h.x, h.y));
    }
    run.result_count = hits.len();
    Ok(run)
}

pub fn distinct_construct(tail: Vec<u64>) -> Outcome {
    let text: Vec<String> = tail.iter().map(u64::to_string).collect();
    let mut run = Run::new("distinct construct", json!({ "tail": text.join(",") }));
    let c = construct_max_distinct(&tail)?;
    write_solutions(&mut run, Format::Jsonl, &[c]);
    Ok(run)
}

pub fn distinct_witness(m: u64) -> Outcome {
    let mut run = Run::new("distinct witness", json!({ "m": m }));
    let c = max_distinct_witness(m)?;
    write_solutions(&mut run, Format::Jsonl, &[c]);
    Ok(run)
}
