//! Command-line front end.
//!
//! [`run`] takes the argument list and standard input and returns the exit
//! code with everything that would be printed, so the binary is a thin
//! wrapper and tests can call it directly.
//!
//! Exit codes: 0 success, 1 verification failure or invalid tableau,
//! 2 usage or input error, 3 internal error.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Parser, Subcommand, ValueEnum};

use crate::enumeration::{
    enum_biflagged, enum_exquisite, enum_hvt, enum_ssyt, verify, CheckId, EnumBounds,
};
use crate::genfun::{det_formula_check, hvt_genfun, schur_expansion_genfun, Model};
use crate::mixed::{MixedTableau, Sign};
use crate::poly::TruncatedPolynomial;
use crate::shape::{Partition, SkewShape};
use crate::switching::{
    available_switches, fully_switch_trace, gg_jdt_trace, shuffle_trace, SwitchMove, Strategy,
};
use crate::text::{parse_hvt_cells, parse_mixed, TextError};
use crate::hvt::{validate_hvt, HookValuedTableau};
use crate::uncrowding::{bump, uncrowd, BumpKind, UncrowdWord};

/// Everything a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "hooktab", about = "Hook-valued tableaux, uncrowding and tableau switching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableauFamily {
    Hvt,
    Mixed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumFamily {
    Hvt,
    Ssyt,
    Exq,
    Bft,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a tableau read from standard input.
    Validate {
        #[arg(long, value_enum, default_value = "hvt")]
        family: TableauFamily,
    },
    /// Uncrowd a hook-valued tableau read from standard input.
    Uncrowd {
        /// Letters A and L in composition order (rightmost applied first),
        /// or LAinf / ALinf for the two complete uncrowdings.
        #[arg(long)]
        word: String,
        #[arg(long)]
        trace: bool,
        /// With --trace, show every individual bump rather than whole steps.
        #[arg(long)]
        bumps: bool,
    },
    /// Shuffle a mixed tableau read from standard input.
    Shuffle {
        #[arg(long)]
        trace: bool,
    },
    /// List the available switches, or switch until none applies.
    Switch {
        #[arg(long)]
        all: bool,
        /// Choose switches at random from this seed instead of in scan order.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trace: bool,
    },
    /// Apply the GG-jdt map to a mixed tableau read from standard input.
    Ggjdt {
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate a tableau family.
    Enum {
        #[arg(long, value_enum)]
        family: EnumFamily,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        outer: Option<String>,
        #[arg(long)]
        inner: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        excess: Option<usize>,
    },
    /// Run a verification driver and print its JSON report.
    Verify {
        #[arg(long)]
        check: String,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        excess: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report `elapsed_ms` as 0 so the output is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Compare the generating-function identities.
    Identity {
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        excess: usize,
        /// Compare the determinant formula instead of the Schur expansions.
        #[arg(long)]
        det: bool,
    },
}

/// A user-facing failure: exit code and message.
struct Failure(i32, String);

impl From<TextError> for Failure {
    fn from(e: TextError) -> Self {
        match e {
            TextError::Syntax(_) => Failure(2, e.to_string()),
            _ => Failure(1, e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

/// Parses `a,b,c`; the empty string (or `()`) is the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if t.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = t
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad partition {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn partition_arg(s: &str) -> Result<Partition, Failure> {
    parse_partition(s).map_err(usage)
}

fn read_hvt(stdin: &str) -> Result<HookValuedTableau, Failure> {
    let (shape, cells) = parse_hvt_cells(stdin.trim()).map_err(|e| usage(e.to_string()))?;
    validate_hvt(shape, cells).map_err(|v| Failure::from(TextError::InvalidHvt(v)))
}

fn read_mixed(stdin: &str) -> Result<MixedTableau, Failure> {
    Ok(parse_mixed(stdin.trim())?)
}

fn arrow(label: impl std::fmt::Display) -> String {
    format!("--{label}-->")
}

fn trace_lines(out: &mut String, start: &MixedTableau, steps: &[(SwitchMove, MixedTableau)]) {
    let _ = writeln!(out, "{start}");
    for (mv, t) in steps {
        let _ = writeln!(out, "{}", arrow(mv));
        let _ = writeln!(out, "{t}");
    }
}

fn last_or(start: &MixedTableau, steps: &[(SwitchMove, MixedTableau)]) -> MixedTableau {
    steps.last().map_or_else(|| start.clone(), |(_, t)| t.clone())
}

fn cmd_validate(family: TableauFamily, stdin: &str, out: &mut String) -> Result<i32, Failure> {
    match family {
        TableauFamily::Hvt => {
            let (shape, cells) = parse_hvt_cells(stdin.trim()).map_err(|e| usage(e.to_string()))?;
            match validate_hvt(shape, cells) {
                Ok(t) => {
                    let _ = writeln!(out, "valid");
                    let _ = writeln!(out, "shape: {}", t.shape());
                    let _ = writeln!(out, "arm excess: {}", t.arm_excess());
                    let _ = writeln!(out, "leg excess: {}", t.leg_excess());
                    let _ = writeln!(out, "weight: {}", t.weight());
                    Ok(0)
                }
                Err(violations) => {
                    let _ = writeln!(out, "invalid");
                    for v in violations {
                        let _ = writeln!(out, "{v}");
                    }
                    Ok(1)
                }
            }
        }
        TableauFamily::Mixed => {
            let t = read_mixed(stdin)?;
            let f = t.classify();
            let _ = writeln!(out, "shape: {}", t.shape());
            for (name, v) in [
                ("alpha_column_strict", f.alpha_column_strict),
                ("alpha_row_strict", f.alpha_row_strict),
                ("beta_column_strict", f.beta_column_strict),
                ("beta_row_strict", f.beta_row_strict),
                ("totally_column_strict", f.totally_column_strict),
                ("sorted_alpha_beta", f.sorted_alpha_beta),
                ("sorted_beta_alpha", f.sorted_beta_alpha),
                ("flagged_mixed", f.flagged_mixed),
                ("exquisite", t.is_exquisite()),
                ("biflagged", crate::switching::is_biflagged(&t)),
            ] {
                let _ = writeln!(out, "{name}: {v}");
            }
            match t.weight() {
                Ok(w) => {
                    let _ = writeln!(out, "weight: {w}");
                }
                Err(e) => {
                    let _ = writeln!(out, "weight: undefined ({e})");
                }
            }
            Ok(0)
        }
    }
}

fn bump_trace(t: &HookValuedTableau, w: &UncrowdWord, out: &mut String) {
    let _ = writeln!(out, "{t}");
    let mut cur = t.clone();
    for &letter in w.letters.iter().rev() {
        let label = match letter {
            BumpKind::Arm => "Ab",
            BumpKind::Leg => "Lb",
        };
        // A step is a run of bumps ending with the one that grows the shape.
        loop {
            let (next, record) = bump(&cur, letter);
            let Some(record) = record else { break };
            let _ = writeln!(out, "{}", arrow(label));
            let _ = writeln!(out, "{next}");
            cur = next;
            if record.created.is_some() {
                break;
            }
        }
    }
}

fn cmd_uncrowd(word: &str, trace: bool, bumps: bool, stdin: &str, out: &mut String) -> Result<i32, Failure> {
    let t = read_hvt(stdin)?;
    let w = match word {
        "LAinf" => UncrowdWord::legs_after_arms(t.arm_excess(), t.leg_excess()),
        "ALinf" => UncrowdWord::arms_after_legs(t.arm_excess(), t.leg_excess()),
        _ => word.parse().map_err(|e: crate::uncrowding::WordError| usage(e.to_string()))?,
    };
    let res = uncrowd(&t, &w);
    if trace && bumps {
        bump_trace(&t, &w, out);
    } else if trace {
        let _ = writeln!(out, "{t}");
        for step in &res.steps {
            let label = match step.letter {
                BumpKind::Arm => "A",
                BumpKind::Leg => "L",
            };
            let _ = writeln!(out, "{}", arrow(label));
            let _ = writeln!(out, "{}", step.result);
        }
    }
    let _ = writeln!(out, "P = {}", res.insertion);
    let _ = writeln!(out, "Q = {}", res.recording);
    Ok(0)
}

fn cmd_switch(all: bool, seed: Option<u64>, trace: bool, stdin: &str, out: &mut String) -> Result<i32, Failure> {
    let t = read_mixed(stdin)?;
    let strategy = seed.map_or(Strategy::Deterministic, Strategy::Seeded);
    if !all {
        if !(t.is_alpha_column_strict() && t.is_beta_row_strict()) {
            return Err(Failure(1, format!("{t} is not alpha-column-strict and beta-row-strict")));
        }
        for mv in available_switches(&t) {
            let _ = writeln!(out, "{mv}");
        }
        return Ok(0);
    }
    let steps = fully_switch_trace(&t, strategy).map_err(|e| Failure(1, e.to_string()))?;
    if trace {
        trace_lines(out, &t, &steps);
    } else {
        let _ = writeln!(out, "{}", last_or(&t, &steps));
    }
    Ok(0)
}

fn cmd_shuffle(trace: bool, stdin: &str, out: &mut String) -> Result<i32, Failure> {
    let t = read_mixed(stdin)?;
    let steps = shuffle_trace(&t).map_err(|e| Failure(1, e.to_string()))?;
    if trace {
        trace_lines(out, &t, &steps);
    } else {
        let _ = writeln!(out, "{}", last_or(&t, &steps));
    }
    Ok(0)
}

fn cmd_ggjdt(trace: bool, stdin: &str, out: &mut String) -> Result<i32, Failure> {
    let t = read_mixed(stdin)?;
    let steps = gg_jdt_trace(&t).map_err(|e| Failure(1, e.to_string()))?;
    let end = last_or(&t, &steps);
    if trace {
        trace_lines(out, &t, &steps);
        let _ = writeln!(out, "c_beta_plus = {}", end.c_beta_shift(Sign::Plus));
    } else {
        let _ = writeln!(out, "{end}");
    }
    Ok(0)
}

fn cmd_enum(
    family: EnumFamily,
    lambda: Option<&str>,
    outer: Option<&str>,
    inner: Option<&str>,
    n: Option<u32>,
    excess: Option<usize>,
    out: &mut String,
) -> Result<i32, Failure> {
    let lines: Vec<String> = match family {
        EnumFamily::Hvt | EnumFamily::Ssyt => {
            let shape = lambda.or(outer).ok_or_else(|| usage("--lambda is required"))?;
            let shape = partition_arg(shape)?;
            let n = n.ok_or_else(|| usage("--n is required"))?;
            let list = match family {
                EnumFamily::Hvt => enum_hvt(&shape, EnumBounds::new(n, excess.unwrap_or(0))),
                _ => enum_ssyt(&shape, n),
            };
            list.iter().map(ToString::to_string).collect()
        }
        EnumFamily::Exq | EnumFamily::Bft => {
            let outer = partition_arg(outer.ok_or_else(|| usage("--outer is required"))?)?;
            let inner = partition_arg(inner.or(lambda).unwrap_or(""))?;
            let shape = SkewShape::new(outer, inner).map_err(|e| usage(e.to_string()))?;
            let list = match family {
                EnumFamily::Exq => enum_exquisite(&shape),
                _ => enum_biflagged(&shape),
            };
            list.iter().map(ToString::to_string).collect()
        }
    };
    for l in &lines {
        let _ = writeln!(out, "{l}");
    }
    let _ = writeln!(out, "# count: {}", lines.len());
    Ok(0)
}

fn cmd_verify(
    check: &str,
    lambda: &str,
    bounds: EnumBounds,
    jobs: usize,
    no_timing: bool,
    out: &mut String,
) -> Result<i32, Failure> {
    let check: CheckId = check.parse().map_err(|e: crate::enumeration::UnknownCheck| usage(e.to_string()))?;
    let lambda = partition_arg(lambda)?;
    let report = verify(check, &lambda, bounds, jobs);
    let json = if no_timing { report.canonical_json() } else { report.to_json() };
    let _ = writeln!(out, "{json}");
    Ok(if report.passed { 0 } else { 1 })
}

fn compare(out: &mut String, left: (&str, &TruncatedPolynomial), right: (&str, &TruncatedPolynomial)) -> bool {
    let diff = left.1.diff(right.1);
    for (m, a, b) in &diff {
        let _ = writeln!(out, "mismatch {m}: {} {a}, {} {b}", left.0, right.0);
    }
    diff.is_empty()
}

fn cmd_identity(lambda: &str, n: u32, excess: usize, det: bool, out: &mut String) -> Result<i32, Failure> {
    let lambda = partition_arg(lambda)?;
    let cap = lambda.size() as u32 + excess as u32;
    if det {
        let (lhs, rhs) = det_formula_check(&lambda, n, cap).map_err(|e| usage(e.to_string()))?;
        let _ = writeln!(out, "determinant: {} terms", lhs.len());
        let _ = writeln!(out, "vandermonde * hvt: {} terms", rhs.len());
        let ok = compare(out, ("determinant", &lhs), ("vandermonde*hvt", &rhs));
        let _ = writeln!(out, "{}", if ok { "equal" } else { "NOT equal" });
        return Ok(if ok { 0 } else { 1 });
    }
    let bounds = EnumBounds::new(n, excess);
    let hvt = hvt_genfun(&lambda, bounds, cap);
    let exq = schur_expansion_genfun(&lambda, bounds, cap, Model::Exquisite);
    let bft = schur_expansion_genfun(&lambda, bounds, cap, Model::Biflagged);
    let _ = writeln!(out, "hvt: {} terms", hvt.len());
    let _ = writeln!(out, "schur x exq: {} terms", exq.len());
    let _ = writeln!(out, "schur x bft: {} terms", bft.len());
    let ok = compare(out, ("hvt", &hvt), ("exq", &exq)) & compare(out, ("hvt", &hvt), ("bft", &bft));
    let _ = writeln!(out, "{}", if ok { "equal" } else { "NOT equal" });
    Ok(if ok { 0 } else { 1 })
}

fn dispatch(cli: Cli, stdin: &str, out: &mut String) -> Result<i32, Failure> {
    match cli.command {
        Command::Validate { family } => cmd_validate(family, stdin, out),
        Command::Uncrowd { word, trace, bumps } => cmd_uncrowd(&word, trace, bumps, stdin, out),
        Command::Shuffle { trace } => cmd_shuffle(trace, stdin, out),
        Command::Switch { all, seed, trace } => cmd_switch(all, seed, trace, stdin, out),
        Command::Ggjdt { trace } => cmd_ggjdt(trace, stdin, out),
        Command::Enum { family, lambda, outer, inner, n, excess } => cmd_enum(
            family,
            lambda.as_deref(),
            outer.as_deref(),
            inner.as_deref(),
            n,
            excess,
            out,
        ),
        Command::Verify { check, lambda, n, excess, jobs, no_timing } => {
            cmd_verify(&check, &lambda, EnumBounds::new(n, excess), jobs, no_timing, out)
        }
        Command::Identity { lambda, n, excess, det } => cmd_identity(&lambda, n, excess, det, out),
    }
}

/// Runs one command. `args` excludes the program name.
pub fn run<S: AsRef<str>>(args: &[S], stdin: &str) -> RunOutput {
    let argv = std::iter::once("hooktab").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunOutput { code, stdout: text, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut stdout = String::new();
    let result = catch_unwind(AssertUnwindSafe(|| dispatch(cli, stdin, &mut stdout)));
    match result {
        Ok(Ok(code)) => RunOutput { code, stdout, stderr: String::new() },
        Ok(Err(Failure(code, msg))) => RunOutput { code, stdout, stderr: format!("error: {msg}\n") },
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".to_string());
            RunOutput { code: 3, stdout, stderr: format!("internal error: {msg}\n") }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_from_flags() {
        assert_eq!(parse_partition("2,1").unwrap().parts(), &[2, 1]);
        assert_eq!(parse_partition(" 3, 1 ").unwrap().parts(), &[3, 1]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("()").unwrap().is_empty());
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn trace_arrows_name_the_operator() {
        let out = run(&["uncrowd", "--word", "A", "--trace"], "1+1");
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "1+1\n--A-->\n1|1\nP = 1|1\nQ = .|a1\n");
    }

    #[test]
    fn help_is_success_on_stdout() {
        let out = run(&["--help"], "");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("uncrowd"));
        assert!(out.stderr.is_empty());
    }

    #[test]
    fn switch_rejects_non_strict_input() {
        let out = run(&["switch"], "a1 / a1");
        assert_eq!(out.code, 1);
        assert!(out.stderr.starts_with("error:"));
    }
}
