use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use weyl_oracle::{character, RootSystem};
use yangian_core::algebra::{check_ybe, operator_identities, r_matrix, r_matrix_gl, AlgebraKind, Family};
use yangian_core::exact::{qi, Rational, RationalFunction};
use yangian_core::gl2::{drinfeld_from_pairs, drinfeld_ratio_check, DrinfeldTuple};
use yangian_core::hw::{
    antisym_checks, antisym_expected_tuple, fdim_conditions, sp_fundamental_checks, sp_fundamental_module,
    verma_consistency, HighestWeightData,
};
use yangian_core::lowrank::{classical_irrep, ev_rep, fusion_check_o3, fusion_check_o4};
use yangian_core::report::CheckOutcome;
use yangian_core::spinor::vp_checks;
use yangian_core::yangian::{check_defining_relations, compute_z, TRep, TRepJson};
use yangian_kit::suites::{evaluation_checks, mu_standard, parse_rationals, to_standard, wp_check, SPINOR_RANK_CEILING};
use yangian_kit::{run_suite, SuiteName, SuiteParams, SuiteReport};

#[derive(Parser)]
#[command(name = "yangian-kit", version, about = "Exact checks for extended Yangians of types B, C and D")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the main object (report, representation or Drinfeld tuple) to this file.
    #[arg(long, global = true, value_name = "PATH")]
    emit: Option<PathBuf>,
    /// Largest rank built by suites and accepted by rank arguments.
    #[arg(long, global = true, default_value_t = 3, value_name = "K")]
    max_rank: usize,
    /// Record per-check wall time in reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prove the Yang-Baxter equation and the P, Q identities.
    Ybe {
        #[arg(long)]
        family: String,
        /// n for B, C, D; N for gl.
        #[arg(long)]
        rank: usize,
    },
    /// Check the defining relations of a representation stored as JSON.
    VerifyRtt {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Fusion of gl2 R-matrices into the o3 or o4 R-matrix.
    Fusion {
        #[arg(long)]
        target: String,
    },
    /// Build and check an evaluation module of X(sp2), X(o3) or X(o4).
    EvalRep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Highest weight, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        shift: String,
    },
    /// Drinfeld polynomial of a tensor product of gl2 evaluation modules.
    Gl2Drinfeld {
        #[arg(long, allow_hyphen_values = true)]
        alphas: String,
        #[arg(long, allow_hyphen_values = true)]
        betas: String,
    },
    /// Drinfeld polynomials of a highest weight given as JSON.
    Classify {
        #[arg(long)]
        weights: PathBuf,
    },
    /// Check the module generated by the antisymmetrizer vector.
    Antisym {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        m: usize,
    },
    /// Highest vectors v_p (B, D) or the fundamental modules W_p(a) (C).
    Fundamental {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        p: usize,
        /// a for W_p(a).
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        shift: String,
        /// Compare the decomposition with the Weyl character formula.
        #[arg(long)]
        verify_decomposition: bool,
    },
    /// Run a named verification suite.
    Suite {
        /// ybe, rtt, fusion, lowrank-ev, classify, fundamental, spinor, sp-fundamental or all.
        name: String,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<yangian_core::Error> for Failure {
    fn from(e: yangian_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn kind_of(family: &str, rank: usize, max_rank: usize) -> Result<AlgebraKind, Failure> {
    if rank > max_rank {
        return Err(Failure::Usage(format!("rank {rank} exceeds --max-rank {max_rank}")));
    }
    let f: Family = family.parse()?;
    Ok(AlgebraKind::new(f, rank)?)
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, format!("{text}\n")).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Prints the report, writes it when `--emit` is given unless another object was emitted.
fn finish(cli: &Cli, report: SuiteReport, emit_report: bool) -> CmdResult {
    if cli.json {
        println!("{}", to_json(&report));
    } else {
        print!("{}", report.render_text());
    }
    if emit_report {
        if let Some(path) = &cli.emit {
            write_file(path, &to_json(&report))?;
        }
    }
    Ok(report.passed())
}

fn run(cli: &Cli) -> CmdResult {
    let r = cli.max_rank;
    match &cli.command {
        Command::Ybe { family, rank } => {
            let outcomes = if family.eq_ignore_ascii_case("gl") {
                if *rank < 2 || *rank > r + 1 {
                    return Err(Failure::Usage(format!("gl rank must lie in 2..={}", r + 1)));
                }
                vec![CheckOutcome::from_proof(&check_ybe(&r_matrix_gl(*rank), &format!("YBE gl{rank}")))]
            } else {
                let k = kind_of(family, *rank, r)?;
                let mut v = vec![CheckOutcome::from_proof(&check_ybe(&r_matrix(&k), &format!("YBE {k}")))];
                v.extend(operator_identities(&k));
                v
            };
            finish(cli, SuiteReport::from_outcomes("ybe", outcomes), true)
        }
        Command::VerifyRtt { rep } => {
            let j: TRepJson = serde_json::from_str(&read_file(rep)?).map_err(|e| Failure::Usage(format!("bad representation: {e}")))?;
            let t = TRep::from_json(&j)?;
            let mut outcomes = vec![CheckOutcome::from_proof(&check_defining_relations(&t))];
            if t.kind().algebra().is_ok() {
                let z = compute_z(&t)?;
                outcomes.push(match &z.scalar {
                    Some(s) => CheckOutcome::from_bool(format!("z(u) = {s}"), z.full_relation, || "T^t T differs from z".into()),
                    None => CheckOutcome::fail("z(u) is scalar", "not a multiple of the identity"),
                });
            }
            finish(cli, SuiteReport::from_outcomes("verify-rtt", outcomes), true)
        }
        Command::Fusion { target } => {
            let outcomes = match target.as_str() {
                "o3" => fusion_check_o3(),
                "o4" => fusion_check_o4(),
                _ => return Err(Failure::Usage(format!("unknown fusion target {target:?}; use o3 or o4"))),
            };
            finish(cli, SuiteReport::from_outcomes("fusion", outcomes), true)
        }
        Command::EvalRep { family, rank, mu, shift } => {
            let k = kind_of(family, *rank, r)?;
            let mu = parse_rationals(mu)?;
            let a: Rational = shift.parse()?;
            let rep = ev_rep(&classical_irrep(&k, &mu)?, &a)?;
            if let Some(path) = &cli.emit {
                write_file(path, &to_json(&rep.to_json()))?;
            }
            finish(cli, SuiteReport::from_outcomes("eval-rep", evaluation_checks(&k, &mu, &a)?), false)
        }
        Command::Gl2Drinfeld { alphas, betas } => {
            let (al, be) = (parse_rationals(alphas)?, parse_rationals(betas)?);
            let tuple = drinfeld_from_pairs(&al, &be)?;
            let eigen = |xs: &[Rational]| {
                xs.iter().fold(RationalFunction::one(), |acc, x| &acc * &RationalFunction::from_roots(&[-x.clone()], &[Rational::zero()]))
            };
            let ok = drinfeld_ratio_check(&eigen(&al), &eigen(&be), &tuple.polys[0], &qi(1));
            emit_tuple(cli, &tuple, ok)
        }
        Command::Classify { weights } => {
            let hw: HighestWeightData =
                serde_json::from_str(&read_file(weights)?).map_err(|e| Failure::Usage(format!("bad weights: {e}")))?;
            let hw = HighestWeightData::new(hw.kind, hw.lambda)?;
            let verdict = match verma_consistency(&hw) {
                Err(i) => Err(format!("the Verma module is trivial: consistency fails at i = {i}")),
                Ok(()) => fdim_conditions(&hw).map_err(|e| e.to_string()),
            };
            match verdict {
                Ok(t) => emit_tuple(cli, &t, true),
                Err(reason) => {
                    let failure = serde_json::json!({ "status": "fail", "reason": reason });
                    if cli.json {
                        println!("{}", serde_json::to_string_pretty(&failure).expect("json"));
                    } else {
                        println!("not of finite-dimensional type: {reason}");
                    }
                    if let Some(path) = &cli.emit {
                        write_file(path, &failure.to_string())?;
                    }
                    Ok(false)
                }
            }
        }
        Command::Antisym { family, rank, m } => {
            let k = kind_of(family, *rank, r)?;
            let outcomes = antisym_checks(&k, *m, &antisym_expected_tuple(&k, *m)?)?;
            finish(cli, SuiteReport::from_outcomes("antisym", outcomes), true)
        }
        Command::Fundamental { family, rank, p, shift, verify_decomposition } => {
            let k = kind_of(family, *rank, r)?;
            let mut outcomes = Vec::new();
            if k.is_symplectic() {
                let a: Rational = shift.parse()?;
                outcomes.extend(sp_fundamental_checks(&k, *p, &a)?);
                if *verify_decomposition {
                    outcomes.push(sp_decomposition_check(&k, *p, &a)?);
                }
            } else {
                if k.n > SPINOR_RANK_CEILING {
                    return Err(Failure::Usage(format!("spinor constructions allow rank up to {SPINOR_RANK_CEILING}")));
                }
                outcomes.extend(vp_checks(&k, *p)?);
                if *verify_decomposition {
                    outcomes.push(wp_check(&k, *p)?);
                }
            }
            finish(cli, SuiteReport::from_outcomes("fundamental", outcomes), true)
        }
        Command::Suite { name } => {
            let suite: SuiteName = name.parse().map_err(Failure::Usage)?;
            let params = SuiteParams { max_rank: r, timings: cli.timings };
            let report = run_suite(suite, &params).map_err(Failure::Usage)?;
            finish(cli, report, true)
        }
    }
}

fn emit_tuple(cli: &Cli, tuple: &DrinfeldTuple, ok: bool) -> CmdResult {
    if cli.json {
        println!("{}", to_json(tuple));
    } else {
        for (i, p) in tuple.polys.iter().enumerate() {
            println!("P_{}(u) = {p}", i + 1);
        }
        if !ok {
            println!("consistency check failed");
        }
    }
    if let Some(path) = &cli.emit {
        write_file(path, &to_json(tuple))?;
    }
    Ok(ok)
}

/// The weights of `W_p(a)` against the character of `V(μ^{(p)})`.
fn sp_decomposition_check(kind: &AlgebraKind, p: usize, a: &Rational) -> Result<CheckOutcome, Failure> {
    let rep = sp_fundamental_module(kind, p, a)?;
    let got = to_standard(&rep.weight_decomposition()?);
    let want = character(RootSystem::C, &mu_standard(kind.n, p));
    Ok(CheckOutcome::from_bool(format!("W_{p}({a}) is V(mu^({p})) as a {kind}-module"), got == want, || {
        format!("dim {} vs {}", rep.dim(), want.values().sum::<u64>())
    }))
}
