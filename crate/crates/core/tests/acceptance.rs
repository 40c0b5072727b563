//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs without the libtest harness so that the summary is always printed.
//! All checks are exact; the two timing budgets are wall-clock limits.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cinv::enumerate::{centrosymmetric_permutations, Involutions};
use cinv::qpoly::{binomial, q_binomial};
use cinv::stats::distribution;
use cinv::verify::{verify, TheoremId, VerificationReport, VerifyOptions};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn expect_pass(report: &VerificationReport) -> Check {
    match report.first_failure() {
        None => Ok(format!(
            "n=0..={}, {} objects, {:.2}s",
            report.max_n,
            report.checked(),
            report.duration.as_secs_f64()
        )),
        Some(r) => Err(format!(
            "n={}: {}",
            r.n,
            r.counterexample
                .as_ref()
                .map_or("?".into(), |c| c.to_string())
        )),
    }
}

fn run(theorem: TheoremId, max_n: usize) -> Check {
    expect_pass(&verify(theorem, &VerifyOptions::new(max_n)))
}

fn within(budget: Duration, start: Instant, inner: Check) -> Check {
    let took = start.elapsed();
    let detail = inner?;
    if took > budget {
        return Err(format!("{detail}; took {took:?}, budget {budget:?}"));
    }
    Ok(detail)
}

fn counting() -> Check {
    let start = Instant::now();
    within(Duration::from_secs(120), start, run(TheoremId::Count, 7))
}

fn sixpat() -> Check {
    let start = Instant::now();
    within(Duration::from_secs(60), start, run(TheoremId::SixPat, 5))
}

fn refined_formulas() -> Check {
    let a = run(TheoremId::Cor1, 10)?;
    let b = run(TheoremId::Cor2, 10)?;
    Ok(format!("{a}; {b}"))
}

fn parity() -> Check {
    let mut seen = 0u64;
    for m in 0..=14 {
        for p in Involutions::new(m) {
            if p.fixed_point_count() % 2 != m % 2 {
                return Err(format!("fp parity fails on {p}"));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} involutions, m <= 14"))
}

fn centro_maj() -> Check {
    let mut seen = 0u64;
    for m in (0..=10).step_by(2) {
        for p in centrosymmetric_permutations(m) {
            if 2 * p.maj() != m * p.des() {
                return Err(format!("maj != m des / 2 on {p}"));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} centrosymmetric permutations, even m <= 10"))
}

fn partitions_in_box(r: usize, rows: usize, cols: usize) -> u64 {
    if r == 0 {
        return 1;
    }
    if rows == 0 || cols == 0 {
        return 0;
    }
    (1..=cols.min(r))
        .map(|k| partitions_in_box(r - k, rows - 1, k))
        .sum()
}

fn q_binomials() -> Check {
    for n in 0..=14usize {
        for h in 0..=n {
            let poly = q_binomial(n as i64, h as i64);
            if !poly.is_palindromic() || poly.eval_at_one() != binomial(n as i64, h as i64) {
                return Err(format!("[{n} choose {h}] = {poly}"));
            }
            for r in 0..=h * (n - h) {
                if poly.coeff(r) != partitions_in_box(r, h, n - h).into() {
                    return Err(format!("[{n} choose {h}], coefficient of q^{r}"));
                }
            }
        }
    }
    Ok("palindromic and counting box partitions, n <= 14".into())
}

fn parallel_equals_serial() -> Check {
    for theorem in [TheoremId::DesPoly, TheoremId::MajPoly, TheoremId::DesFull] {
        let serial = verify(theorem, &VerifyOptions::new(12));
        let parallel = verify(theorem, &VerifyOptions::new(12).jobs(4));
        if serial.to_json() != parallel.to_json() || !serial.passed() {
            return Err(format!("{theorem}: reports differ"));
        }
    }
    let bin = env!("CARGO_BIN_EXE_cinv");
    for stat in ["des+", "maj+", "des"] {
        let table = distribution(
            "cinv321-even".parse().unwrap(),
            "14".parse().unwrap(),
            stat.parse().unwrap(),
            4,
        )
        .map_err(|e| e.to_string())?;
        let mut outputs = Vec::new();
        for jobs in ["1", "4"] {
            let out = Command::new(bin)
                .args([
                    "stats",
                    "--class",
                    "cinv321-even",
                    "--size",
                    "14",
                    "--stat",
                    stat,
                ])
                .args(["--format", "json", "--jobs", jobs])
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!("cinv stats {stat} --jobs {jobs} failed"));
            }
            outputs.push(out.stdout);
        }
        if outputs[0] != outputs[1] {
            return Err(format!("{stat}: --jobs 1 and --jobs 4 differ"));
        }
        if String::from_utf8_lossy(&outputs[0]).trim() != table.to_json().to_string().as_str() {
            return Err(format!("{stat}: binary and library disagree"));
        }
    }
    Ok("3 verify reports and 3 size-14 distributions identical with 4 jobs".into())
}

fn property_suite() -> Check {
    let parts = [
        parity()?,
        centro_maj()?,
        q_binomials()?,
        parallel_equals_serial()?,
    ];
    Ok(parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("class sizes by direct generation, n <= 7", counting),
        ("des+ distribution, n <= 12 (raw n <= 7)", || {
            run(TheoremId::DesPoly, 12)
        }),
        ("maj+ distribution five ways, n <= 12", || {
            run(TheoremId::MajPoly, 12)
        }),
        ("des distribution, n <= 12 (raw n <= 7)", || {
            run(TheoremId::DesFull, 12)
        }),
        ("subset/matching/involution round trips, n <= 12", || {
            run(TheoremId::Cara, 12)
        }),
        ("g carries peaks to hooks on Y_{a,b}, a+b <= 12", || {
            run(TheoremId::HdPeak, 12)
        }),
        ("odd-size distributions, n <= 7", || run(TheoremId::Odd, 7)),
        ("Θ image equals the six-pattern avoiders, n <= 5", sixpat),
        ("θ bijection with Des = hd, a+b <= 10", || {
            run(TheoremId::Fp, 10)
        }),
        ("fixed-point refined maj/des formulas, n <= 10", refined_formulas),
        ("property suite", property_suite),
    ];

    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "PASS  criterion {:>2}: {label} [{detail}] ({secs:.2}s)",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {label} [{why}] ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
