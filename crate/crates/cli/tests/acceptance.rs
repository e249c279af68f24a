//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any failed.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use harmopart::distinct::{self, harmonic_of_weight};
use harmopart::qseries::{bosonic_rhs, pentagonal_rhs};
use harmopart::{
    build_report, enumerate_distinct, enumerate_ordinary, laplacian_oracle, ordinary, BlockPartition, Distinct,
    DistinctPartition, Ordinary, PartitionComplex, TruncatedSeries,
};
use num_bigint::BigInt;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

const SERIES_ORDER: usize = 500;
const SERIES_LIMIT: Duration = Duration::from_secs(10);
const PERF_LIMIT: Duration = Duration::from_secs(5);

fn verify_via_cli(identity: &str) -> Result<Duration, String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_harmopart"))
        .args([
            "--format",
            "json",
            "verify",
            identity,
            "--order",
            &SERIES_ORDER.to_string(),
        ])
        .env_remove("HARMOPART_ORDER")
        .output()
        .map_err(|e| format!("cannot run harmopart: {e}"))?;
    let elapsed = start.elapsed();
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{identity}: bad json: {e}"))?;
    if !out.status.success() || v["equal"] != true || v["order"] != SERIES_ORDER {
        return Err(format!("{identity}: {v}"));
    }
    if let Some(ctl) = v.get("negative_control") {
        if ctl["detected"] != true {
            return Err(format!("{identity}: negative control missed"));
        }
    }
    if elapsed >= SERIES_LIMIT {
        return Err(format!("{identity}: took {elapsed:.2?}"));
    }
    Ok(elapsed)
}

fn verify_all(ids: &[&str]) -> Outcome {
    let mut notes = Vec::new();
    for id in ids {
        let t = verify_via_cli(id)?;
        notes.push(format!("{id} equal to q^{SERIES_ORDER} in {t:.2?}"));
    }
    Ok(notes.join("; "))
}

fn criterion_1() -> Outcome {
    verify_all(&["pentagonal"])
}

fn criterion_2() -> Outcome {
    verify_all(&["bosonic"])
}

fn criterion_3() -> Outcome {
    verify_all(&["euler-odd", "odd-reciprocal", "neg-q-chain"])
}

fn ordinary_harmonics(n: usize) -> Vec<BlockPartition> {
    let mut v: Vec<_> = enumerate_ordinary(n)
        .unwrap()
        .iter()
        .filter(|(_, p)| ordinary::delta(p).is_zero() && ordinary::delta_star(p).is_zero())
        .map(|(_, p)| p.clone())
        .collect();
    v.sort_unstable();
    v
}

fn criterion_4() -> Outcome {
    let table = support::load()?;
    if table.rows.keys().copied().collect::<Vec<_>>() != (1..=26).collect::<Vec<_>>() {
        return Err("table does not cover n = 1..=26".into());
    }
    for (&n, printed) in &table.rows {
        let mut want = printed.clone();
        want.sort_unstable();
        let got = ordinary_harmonics(n);
        if got != want {
            let show = |v: &[BlockPartition]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ");
            return Err(format!("n={n}: computed [{}], table [{}]", show(&got), show(&want)));
        }
    }
    let n22: BlockPartition = "2^6,1^10".parse().unwrap();
    if !table.rows[&22].contains(&n22) {
        return Err("n=22 row lacks 2^6,1^10".into());
    }
    for (n, len) in [(2, 0), (16, 5), (26, 12)] {
        if table.rows[&n].len() != len {
            return Err(format!("n={n} has {} entries, expected {len}", table.rows[&n].len()));
        }
    }
    let fixes: Vec<String> = table
        .fixes
        .iter()
        .map(|f| format!("n={} '{}' read as '{}'", f.n, f.printed, f.corrected))
        .collect();
    Ok(format!("26 rows match; typeset fixes: {}", fixes.join(", ")))
}

fn criterion_5() -> Outcome {
    const EXPECTED: [usize; 12] = [1, 2, 5, 7, 12, 15, 22, 26, 35, 40, 51, 57];
    let mut support = Vec::new();
    for n in 1..=60 {
        let harmonic: Vec<DistinctPartition> = enumerate_distinct(n)
            .unwrap()
            .iter()
            .filter(|(_, p)| distinct::delta(p).is_zero() && distinct::delta_star(p).is_zero())
            .map(|(_, p)| p.clone())
            .collect();
        match harmonic.as_slice() {
            [] => {}
            [p] => {
                let l = p.len() as u32;
                let low: Vec<u32> = (l..=2 * l - 1).rev().collect();
                let high: Vec<u32> = (l + 1..=2 * l).rev().collect();
                if p.parts() != low && p.parts() != high {
                    return Err(format!("n={n}: {p} is not of closed form"));
                }
                if harmonic_of_weight(n).as_ref() != Some(p) {
                    return Err(format!("n={n}: closed-form generator disagrees with {p}"));
                }
                support.push(n);
            }
            many => return Err(format!("n={n}: {} harmonic partitions", many.len())),
        }
    }
    if support != EXPECTED {
        return Err(format!("support {support:?}"));
    }
    Ok(format!("support {support:?}, each unique and of closed form"))
}

fn check_laws<C: PartitionComplex>(max: usize) -> Result<usize, String> {
    let mut visited = 0;
    for n in 1..=max {
        for (ell, p) in C::basis(n).map_err(|e| e.to_string())?.iter() {
            visited += 1;
            let d = C::delta(p);
            let s = C::delta_star(p);
            if let Some(t) = d.as_image() {
                if C::length(t) != ell + 1 || C::weight(t) != n {
                    return Err(format!("δ{p} = {t} has the wrong grading"));
                }
                if !C::delta(t).is_zero() {
                    return Err(format!("δδ{p} ≠ 0"));
                }
                if C::delta_star(t).as_image() != Some(p) {
                    return Err(format!("δ*δ{p} ≠ {p}"));
                }
                if !s.is_zero() {
                    return Err(format!("δ{p} and δ*{p} both nonzero"));
                }
            }
            if let Some(t) = s.as_image() {
                if C::length(t) + 1 != ell || C::weight(t) != n {
                    return Err(format!("δ*{p} = {t} has the wrong grading"));
                }
                if !C::delta_star(t).is_zero() {
                    return Err(format!("δ*δ*{p} ≠ 0"));
                }
                if C::delta(t).as_image() != Some(p) {
                    return Err(format!("δδ*{p} ≠ {p}"));
                }
            }
            if C::is_harmonic(p) != (d.is_zero() && s.is_zero()) {
                return Err(format!("harmonic test wrong on {p}"));
            }
        }
    }
    Ok(visited)
}

fn criterion_6() -> Outcome {
    let d = check_laws::<Distinct>(50)?;
    let o = check_laws::<Ordinary>(30)?;
    Ok(format!(
        "{d} distinct (n ≤ 50) and {o} ordinary (n ≤ 30) partitions checked"
    ))
}

fn oracle<C: PartitionComplex>(max: usize) -> Result<(), String> {
    for n in 1..=max {
        let oracle = laplacian_oracle::<C>(n).map_err(|e| format!("{} n={n}: {e}", C::KIND))?;
        let report = build_report::<C>(n).map_err(|e| e.to_string())?;
        if oracle.kernel_dims != report.cohomology {
            return Err(format!(
                "{} n={n}: kernel {:?}, harmonic {:?}",
                C::KIND,
                oracle.kernel_dims,
                report.cohomology
            ));
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    oracle::<Distinct>(20)?;
    oracle::<Ordinary>(20)?;
    Ok("kernel dimensions, transposes and vanishing squares hold for n ≤ 20, both kinds".into())
}

fn triple<C: PartitionComplex>(max: usize, series: &TruncatedSeries) -> Result<(), String> {
    for n in 1..=max {
        let signed = C::basis(n).map_err(|e| e.to_string())?.signed_count();
        let harmonic = build_report::<C>(n).map_err(|e| e.to_string())?.harmonic_signed_count();
        let coeff = series.coeff(n);
        if signed != harmonic || BigInt::from(signed) != *coeff {
            return Err(format!(
                "{} n={n}: signed {signed}, harmonic {harmonic}, series {coeff}",
                C::KIND
            ));
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    triple::<Ordinary>(30, &bosonic_rhs(30))?;
    triple::<Distinct>(50, &pentagonal_rhs(50))?;
    Ok("ordinary n ≤ 30 and distinct n ≤ 50 agree per n".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let basis = enumerate_ordinary(50).map_err(|e| e.to_string())?;
    let (mut harmonic, mut paired) = (0usize, 0usize);
    for (_, p) in basis.iter() {
        if ordinary::delta(p).is_zero() && ordinary::delta_star(p).is_zero() {
            harmonic += 1;
        } else {
            paired += 1;
        }
    }
    let elapsed = start.elapsed();
    if harmonic + paired != 204_226 {
        return Err(format!("{} partitions enumerated", harmonic + paired));
    }
    if elapsed >= PERF_LIMIT {
        return Err(format!("took {elapsed:.2?}"));
    }
    Ok(format!(
        "204226 partitions ({harmonic} harmonic, {paired} paired) in {elapsed:.2?}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "pentagonal identity", criterion_1),
        (2, "bosonic identity", criterion_2),
        (3, "odd-part identities and q -> -q chain", criterion_3),
        (4, "harmonic ordinary table", criterion_4),
        (5, "harmonic distinct support", criterion_5),
        (6, "operator laws", criterion_6),
        (7, "Laplacian oracle", criterion_7),
        (8, "triple agreement", criterion_8),
        (9, "enumeration performance", criterion_9),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        match run() {
            Ok(msg) => println!("PASS criterion {id} ({name}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {msg}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
