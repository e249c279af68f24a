//! `harmopart`: enumerate partitions, apply the coboundary operators, list
//! harmonic partitions, emit Hodge reports and verify q-series identities.
//!
//! Exit codes: 0 success, 1 a verified-false result or failed consistency
//! check, 2 usage error.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use harmopart::qseries::{self, compare, verify_neg_q_chain, Identity, Verdict};
use harmopart::{
    build_report, check_report, laplacian_oracle, parse_partition, AnyPartition, DeltaResult, Distinct, Kind, Ordinary,
    PartitionComplex,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

const ORACLE_MAX_N: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "harmopart",
    version,
    about = "Harmonic partitions and pentagonal-type identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Truncation order N for series work (series are exact modulo q^(N+1)).
    #[arg(long, global = true, env = "HARMOPART_ORDER", default_value_t = 500)]
    order: usize,

    /// Largest weight for table sweeps.
    #[arg(long, global = true, default_value_t = 30, value_parser = positive)]
    max_n: usize,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed_2024)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all partitions of n in canonical order.
    Enumerate {
        #[command(flatten)]
        target: Target,
        /// Only partitions of this length.
        #[arg(long, value_parser = positive)]
        ell: Option<usize>,
    },
    /// Apply δ or δ* to one partition; prints the image or `0`.
    Apply {
        #[arg(value_enum)]
        op: Op,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Partition text, e.g. `4,2,1` or `3^3,2^2`.
        partition: String,
    },
    /// List harmonic partitions of n, or of every weight up to --max-n.
    Harmonics {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = positive)]
        n: Option<usize>,
    },
    /// Matching decomposition, cohomology and Euler characteristic of weight n.
    Hodge {
        #[command(flatten)]
        target: Target,
        /// Cross-check against the exact Laplacian kernel (n <= 20).
        #[arg(long)]
        oracle: bool,
    },
    /// Check a q-series identity coefficientwise up to q^order.
    Verify {
        #[arg(value_enum)]
        identity: IdentityArg,
    },
    /// Per-weight signed basis count, harmonic count and series coefficient.
    EulerChar {
        #[arg(long, value_enum)]
        kind: KindArg,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, value_parser = positive)]
    n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Distinct,
    Ordinary,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Distinct => Kind::Distinct,
            KindArg::Ordinary => Kind::Ordinary,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Op {
    Delta,
    DeltaStar,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum IdentityArg {
    Pentagonal,
    Bosonic,
    EulerOdd,
    OddReciprocal,
    /// q → -q together with the odd-reciprocal identity turns euler-odd into bosonic.
    NegQChain,
}

/// Failure of a command after argument parsing.
enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<(), Failure>;

struct Ctx {
    format: Format,
    order: usize,
    max_n: usize,
    seed: u64,
}

impl Ctx {
    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        format: cli.format,
        order: cli.order,
        max_n: cli.max_n,
        seed: cli.seed,
    };
    let result = match cli.command {
        Command::Enumerate { target, ell } => with_kind(target.kind.into(), Dispatch::Enumerate(target.n, ell), &ctx),
        Command::Apply { op, kind, partition } => cmd_apply(op, kind.into(), &partition, &ctx),
        Command::Harmonics { kind, n } => with_kind(kind.into(), Dispatch::Harmonics(n), &ctx),
        Command::Hodge { target, oracle } => with_kind(target.kind.into(), Dispatch::Hodge(target.n, oracle), &ctx),
        Command::Verify { identity } => cmd_verify(identity, &ctx),
        Command::EulerChar { kind } => with_kind(kind.into(), Dispatch::EulerChar, &ctx),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
    }
}

enum Dispatch {
    Enumerate(usize, Option<usize>),
    Harmonics(Option<usize>),
    Hodge(usize, bool),
    EulerChar,
}

fn with_kind(kind: Kind, what: Dispatch, ctx: &Ctx) -> Outcome {
    match kind {
        Kind::Distinct => dispatch::<Distinct>(what, ctx),
        Kind::Ordinary => dispatch::<Ordinary>(what, ctx),
    }
}

fn dispatch<C: PartitionComplex>(what: Dispatch, ctx: &Ctx) -> Outcome
where
    C::Element: serde::Serialize,
{
    match what {
        Dispatch::Enumerate(n, ell) => cmd_enumerate::<C>(n, ell, ctx),
        Dispatch::Harmonics(n) => cmd_harmonics::<C>(n, ctx),
        Dispatch::Hodge(n, oracle) => cmd_hodge::<C>(n, oracle, ctx),
        Dispatch::EulerChar => cmd_euler_char::<C>(ctx),
    }
}

fn partition_json<P: serde::Serialize>(kind: Kind, p: &P) -> Value {
    let mut v = serde_json::to_value(p).expect("partitions serialize");
    if let Value::Object(map) = &mut v {
        map.insert("kind".into(), json!(kind.as_str()));
    }
    v
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn cmd_enumerate<C: PartitionComplex>(n: usize, ell: Option<usize>, ctx: &Ctx) -> Outcome
where
    C::Element: serde::Serialize,
{
    let basis = C::basis(n).map_err(|e| Failure::Usage(e.to_string()))?;
    let items: Vec<&C::Element> = basis
        .iter()
        .filter(|(l, _)| ell.is_none_or(|want| *l == want))
        .map(|(_, p)| p)
        .collect();
    if ctx.json() {
        print_json(&Value::Array(
            items.iter().map(|p| partition_json(C::KIND, p)).collect(),
        ));
    } else {
        for p in items {
            println!("{p}");
        }
    }
    Ok(())
}

fn cmd_apply(op: Op, kind: Kind, text: &str, ctx: &Ctx) -> Outcome {
    let input = parse_partition(text, kind).map_err(|e| Failure::Usage(e.to_string()))?;
    let (image, image_json): (String, Value) = match &input {
        AnyPartition::Distinct(p) => apply_one::<Distinct>(op, p),
        AnyPartition::Ordinary(p) => apply_one::<Ordinary>(op, p),
    };
    if ctx.json() {
        let op_name = match op {
            Op::Delta => "delta",
            Op::DeltaStar => "delta-star",
        };
        print_json(&json!({
            "op": op_name,
            "input": serde_json::to_value(&input).expect("serializable"),
            "image": image_json,
        }));
    } else {
        println!("{image}");
    }
    Ok(())
}

fn apply_one<C: PartitionComplex>(op: Op, p: &C::Element) -> (String, Value)
where
    C::Element: serde::Serialize,
{
    let r = match op {
        Op::Delta => C::delta(p),
        Op::DeltaStar => C::delta_star(p),
    };
    let js = match &r {
        DeltaResult::Zero => Value::Null,
        DeltaResult::Image(q) => partition_json(C::KIND, q),
    };
    (r.to_string(), js)
}

fn harmonics_of<C: PartitionComplex>(n: usize) -> Vec<C::Element> {
    C::basis(n)
        .expect("n >= 1")
        .iter()
        .filter(|(_, p)| C::delta(p).is_zero() && C::delta_star(p).is_zero())
        .map(|(_, p)| p.clone())
        .collect()
}

fn strings<P: Display>(v: &[P]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn cmd_harmonics<C: PartitionComplex>(n: Option<usize>, ctx: &Ctx) -> Outcome {
    match n {
        Some(n) => {
            let hs = harmonics_of::<C>(n);
            if ctx.json() {
                print_json(&json!({"n": n, "kind": C::KIND.as_str(), "harmonic": strings(&hs)}));
            } else {
                for h in hs {
                    println!("{h}");
                }
            }
        }
        None => {
            let rows: Vec<(usize, Vec<C::Element>)> = (1..=ctx.max_n).map(|n| (n, harmonics_of::<C>(n))).collect();
            if ctx.json() {
                let v = rows
                    .iter()
                    .map(|(n, hs)| json!({"n": n, "kind": C::KIND.as_str(), "harmonic": strings(hs)}))
                    .collect();
                print_json(&Value::Array(v));
            } else {
                for (n, hs) in rows {
                    let body = if hs.is_empty() {
                        "none".to_string()
                    } else {
                        strings(&hs).join(" | ")
                    };
                    println!("{n}: {body}");
                }
            }
        }
    }
    Ok(())
}

fn cmd_hodge<C: PartitionComplex>(n: usize, oracle: bool, ctx: &Ctx) -> Outcome {
    if oracle && n > ORACLE_MAX_N {
        return Err(Failure::Usage(format!("--oracle is limited to n <= {ORACLE_MAX_N}")));
    }
    let report = build_report::<C>(n).map_err(|e| Failure::Usage(e.to_string()))?;
    let checked = check_report::<C>(&report);
    let oracle_result = if oracle { Some(laplacian_oracle::<C>(n)) } else { None };
    if ctx.json() {
        let mut v = serde_json::to_value(&report).expect("reports serialize");
        if let (Some(Ok(o)), Value::Object(map)) = (&oracle_result, &mut v) {
            map.insert("oracle_kernel_dims".into(), json!(o.kernel_dims));
        }
        print_json(&v);
    } else {
        print!("{report}");
    }
    checked.map_err(|e| Failure::Check(format!("report inconsistent: {e}")))?;
    match oracle_result {
        None => {}
        Some(Err(e)) => return Err(Failure::Check(format!("oracle failed: {e}"))),
        Some(Ok(o)) => {
            if o.kernel_dims != report.cohomology {
                let mut diff = String::from("oracle disagrees with the matching:\nlength  matching  laplacian\n");
                for (ell, dim) in &report.cohomology {
                    let k = o.kernel_dims.get(ell).copied().unwrap_or(0);
                    let mark = if k == *dim { "" } else { "  <--" };
                    diff.push_str(&format!("{ell:>6}  {dim:>8}  {k:>9}{mark}\n"));
                }
                return Err(Failure::Check(diff));
            }
            if !ctx.json() {
                println!("oracle: Laplacian kernel dimensions agree");
            }
        }
    }
    Ok(())
}

fn cmd_verify(identity: IdentityArg, ctx: &Ctx) -> Outcome {
    let order = ctx.order;
    let (name, verdict, control) = match identity {
        IdentityArg::NegQChain => {
            let (name, v) = match verify_neg_q_chain(order) {
                Ok(()) => ("neg-q-chain".to_string(), Verdict::Equal { order }),
                Err((link, v)) => (format!("neg-q-chain ({link})"), v),
            };
            (name, v, None)
        }
        other => {
            let id = match other {
                IdentityArg::Pentagonal => Identity::Pentagonal,
                IdentityArg::Bosonic => Identity::Bosonic,
                IdentityArg::EulerOdd => Identity::EulerOdd,
                IdentityArg::OddReciprocal => Identity::OddReciprocal,
                IdentityArg::NegQChain => unreachable!(),
            };
            let (lhs, rhs) = id.sides(order);
            let verdict = compare(&lhs, &rhs).expect("sides share the order");
            (id.name().to_string(), verdict, Some(negative_control(&rhs, ctx.seed)))
        }
    };
    if ctx.json() {
        let mut v = json!({
            "identity": name,
            "order": order,
            "equal": verdict.is_equal(),
        });
        if let Verdict::Mismatch { exponent, lhs, rhs } = &verdict {
            v["mismatch"] = json!({"exponent": exponent, "lhs": lhs.to_string(), "rhs": rhs.to_string()});
        }
        if let Some((k, detected)) = control {
            v["negative_control"] = json!({"exponent": k, "detected": detected});
        }
        print_json(&v);
    } else {
        println!("{name}: {verdict}");
        if let Some((k, detected)) = control {
            let state = if detected { "detected" } else { "NOT detected" };
            println!("negative control: rhs perturbed at q^{k}, {state}");
        }
    }
    if let Some((k, false)) = control {
        return Err(Failure::Check(format!("comparator missed a perturbation at q^{k}")));
    }
    if verdict.is_equal() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{name}: {verdict}")))
    }
}

/// Bumps one seeded coefficient of the right side and checks the comparison
/// reports exactly that exponent.
fn negative_control(rhs: &qseries::TruncatedSeries, seed: u64) -> (usize, bool) {
    let mut rng = StdRng::seed_from_u64(seed);
    let k = rng.random_range(0..=rhs.order());
    let mut bumped = rhs.clone();
    bumped.set_coeff(k, rhs.coeff(k) + 1);
    let detected = matches!(
        compare(rhs, &bumped),
        Ok(Verdict::Mismatch { exponent, .. }) if exponent == k
    );
    (k, detected)
}

fn cmd_euler_char<C: PartitionComplex>(ctx: &Ctx) -> Outcome {
    let max_n = ctx.max_n;
    let warn_above = match C::KIND {
        Kind::Distinct => 60,
        Kind::Ordinary => 40,
    };
    if max_n > warn_above {
        eprintln!(
            "warning: --max-n {max_n} is past enumeration scale for {} partitions",
            C::KIND
        );
    }
    let series = match C::KIND {
        Kind::Distinct => qseries::product_one_minus(max_n),
        Kind::Ordinary => qseries::inv_product_one_plus(max_n),
    };
    let mut rows = Vec::with_capacity(max_n);
    let mut all_agree = true;
    for n in 1..=max_n {
        let report = build_report::<C>(n).expect("n >= 1");
        let signed = report.euler_characteristic;
        let harmonic = report.harmonic_signed_count();
        let coeff = series.coeff(n).to_string();
        let agree = signed == harmonic && coeff == signed.to_string();
        all_agree &= agree;
        rows.push((n, signed, harmonic, coeff, agree));
    }
    if ctx.json() {
        let v = rows
            .iter()
            .map(|(n, s, h, c, a)| json!({"n": n, "signed_count": s, "harmonic_signed_count": h, "series_coeff": c, "agree": a}))
            .collect();
        print_json(&json!({"kind": C::KIND.as_str(), "rows": Value::Array(v)}));
    } else {
        println!("{:>4} {:>8} {:>9} {:>7}  agree", "n", "signed", "harmonic", "series");
        for (n, s, h, c, a) in &rows {
            println!("{n:>4} {s:>8} {h:>9} {c:>7}  {}", if *a { "yes" } else { "NO" });
        }
    }
    if all_agree {
        Ok(())
    } else {
        Err(Failure::Check(
            "signed counts, harmonic counts and series disagree".into(),
        ))
    }
}
