//! Command-line front end. Results go to stdout as JSON (or a plain table),
//! diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{ComplexInput, SimplicialComplex, MAX_HOMOLOGY_VERTICES};
use crate::error::{Error, Result};
use crate::freegroup::{fuzz_identities, parse_commutator};
use crate::lie2::{compare_with_group, graph_relations, square_relations, GradedLie2};
use crate::nq::{express, invariant_lists, racg_quotient, Caps, Expressed};
use crate::racg::verify_all_pairs;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "racg-lcs",
    version,
    about = "Lower central series of right-angled Coxeter groups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions and invariants of γ_k/γ_{k+1}(RC_K) for k ≤ class.
    Dims {
        #[arg(long, default_value_t = 4)]
        class: usize,
        input: PathBuf,
    },
    /// Homology of the real moment-angle complex R_K.
    Homology {
        /// Also compute the cubical chain complex and compare.
        #[arg(long)]
        cubical: bool,
        input: PathBuf,
    },
    /// Commutator generators of the commutator subgroup RC_K'.
    Gens { input: PathBuf },
    /// Seeded Hall–Witt and triple-commutator identity suites in F_m.
    Identities {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        rank: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// (g_i,g_j,g_i) = (g_i,g_j,g_j) and the degree-4 expansion for all pairs.
    RacgIdentities { input: PathBuf },
    /// Dimensions of the graph Lie algebra over GF(2).
    LieDims {
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long)]
        with_square_relations: bool,
        input: PathBuf,
    },
    /// dim F^d against dim L^d(RC_K).
    LieCompare {
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        input: PathBuf,
    },
    /// Coordinates of a commutator word in L^k(RC_K).
    Express {
        #[arg(long, default_value_t = 4)]
        class: usize,
        /// Commutator word such as "(1,2,1,1)" or "((1,2),3)".
        #[arg(long)]
        word: String,
        /// Degree k; defaults to the class.
        #[arg(long)]
        degree: Option<usize>,
        input: PathBuf,
    },
    /// Runs the encoded claim suite.
    VerifyPaper {
        #[arg(long)]
        case: Option<String>,
        /// Emit full JSON reports (otherwise one line per claim).
        #[arg(long)]
        json: bool,
    },
}

/// Validated run parameters.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub input: Option<PathBuf>,
    pub class_cap: usize,
    pub degree_cap: usize,
    pub seed: Option<u64>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let caps = Caps::from_env();
        let (command, input, seed) = match &cli.command {
            Command::Dims { input, .. } => ("dims", Some(input), None),
            Command::Homology { input, .. } => ("homology", Some(input), None),
            Command::Gens { input } => ("gens", Some(input), None),
            Command::Identities { seed, .. } => ("identities", None, Some(*seed)),
            Command::RacgIdentities { input } => ("racg-identities", Some(input), None),
            Command::LieDims { input, .. } => ("lie-dims", Some(input), None),
            Command::LieCompare { input, .. } => ("lie-compare", Some(input), None),
            Command::Express { input, .. } => ("express", Some(input), None),
            Command::VerifyPaper { .. } => ("verify-paper", None, None),
        };
        let cfg = RunConfig {
            command: command.to_string(),
            input: input.cloned(),
            class_cap: caps.max_class,
            degree_cap: crate::lie2::MAX_LIE_DEGREE,
            seed,
            format: cli.format,
        };
        match &cli.command {
            Command::Dims { class, .. } | Command::Express { class, .. }
                if *class > cfg.class_cap || *class == 0 =>
            {
                Err(Error::CapExceeded(format!(
                    "class must be in 1..={}",
                    cfg.class_cap
                )))
            }
            Command::LieDims { dmax, .. } | Command::LieCompare { dmax, .. }
                if *dmax > cfg.degree_cap || *dmax == 0 =>
            {
                Err(Error::CapExceeded(format!(
                    "dmax must be in 1..={}",
                    cfg.degree_cap
                )))
            }
            _ => Ok(cfg),
        }
    }
}

fn read_complex(path: &PathBuf) -> Result<SimplicialComplex> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    ComplexInput::from_json(&text)
}

fn check_nq_size(k: &SimplicialComplex) -> Result<()> {
    Caps::from_env().check(k.m(), 1)
}

/// Command outcome: JSON payload and whether every check passed.
pub struct Outcome {
    pub value: Value,
    pub passed: bool,
    pub table: Option<String>,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            passed: true,
            table: None,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    RunConfig::from_cli(cli)?;
    match &cli.command {
        Command::Dims { class, input } => {
            let k = read_complex(input)?;
            check_nq_size(&k)?;
            let pc = racg_quotient(&k, *class)?;
            let dims = pc.dims();
            let table = dims
                .iter()
                .enumerate()
                .map(|(i, d)| format!("L^{}\t{}", i + 1, d))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome {
                value: json!({"dims": dims, "invariants": invariant_lists(&pc)}),
                passed: true,
                table: Some(table),
            })
        }
        Command::Homology { cubical, input } => {
            let k = read_complex(input)?;
            if k.m() > MAX_HOMOLOGY_VERTICES {
                return Err(Error::CapExceeded(format!(
                    "homology limited to m <= {MAX_HOMOLOGY_VERTICES}"
                )));
            }
            let mut groups = Vec::new();
            let mut agree = true;
            for d in 0..=k.m() {
                let h = k.rmk_homology(d)?;
                let mut entry =
                    json!({"degree": d, "free_rank": h.free_rank, "torsion": h.torsion});
                if *cubical {
                    let c = k.cubical_rmk_homology(d)?;
                    agree &= c == h;
                    entry["cubical_agrees"] = json!(c == h);
                }
                groups.push(entry);
            }
            let table = groups
                .iter()
                .map(|g| {
                    format!(
                        "H_{}\tZ^{}\ttorsion {}",
                        g["degree"], g["free_rank"], g["torsion"]
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome {
                value: json!({"homology": groups}),
                passed: agree,
                table: Some(table),
            })
        }
        Command::Gens { input } => {
            let k = read_complex(input)?;
            let gens: Vec<String> = k.gscox_generators().iter().map(|p| p.to_string()).collect();
            Ok(Outcome {
                table: Some(gens.join("\n")),
                value: json!({"count": gens.len(), "generators": gens}),
                passed: true,
            })
        }
        Command::Identities {
            trials,
            seed,
            rank,
            max_len,
        } => {
            if *rank == 0 {
                return Err(Error::InvalidArgument("rank must be positive".into()));
            }
            let r = fuzz_identities(*rank, *trials, *max_len, *seed);
            Ok(Outcome {
                passed: r.passed(),
                value: json!({"rank": rank, "seed": seed, "report": r}),
                table: None,
            })
        }
        Command::RacgIdentities { input } => {
            let k = read_complex(input)?;
            let r = verify_all_pairs(&k)?;
            Ok(Outcome {
                passed: r.passed(),
                value: json!({"report": r}),
                table: None,
            })
        }
        Command::LieDims {
            dmax,
            with_square_relations,
            input,
        } => {
            let k = read_complex(input)?;
            let mut rels = graph_relations(&k);
            if *with_square_relations {
                rels.extend(square_relations(k.m()));
            }
            let alg = GradedLie2::new(k.m(), &rels, *dmax)?;
            let dims = alg.dims();
            let labels: Vec<Vec<String>> = (1..=*dmax)
                .map(|d| {
                    alg.basis_labels(d)
                        .iter()
                        .map(|w| {
                            format!(
                                "[{}]",
                                w.iter()
                                    .map(|x| x.to_string())
                                    .collect::<Vec<_>>()
                                    .join(",")
                            )
                        })
                        .collect()
                })
                .collect();
            Ok(Outcome {
                table: Some(
                    dims.iter()
                        .enumerate()
                        .map(|(i, d)| format!("F^{}\t{}", i + 1, d))
                        .collect::<Vec<_>>()
                        .join("\n"),
                ),
                value: json!({"dims": dims, "square_relations": with_square_relations, "basis": labels}),
                passed: true,
            })
        }
        Command::LieCompare { dmax, input } => {
            let k = read_complex(input)?;
            check_nq_size(&k)?;
            let cmp = compare_with_group(&k, *dmax)?;
            let passed = cmp.iter().all(|c| c.kernel_dim >= 0);
            Ok(Outcome {
                table: Some(
                    cmp.iter()
                        .map(|c| {
                            format!(
                                "d={}\tF {}\tL {}\tkernel {}",
                                c.degree, c.lie_dim, c.group_dim, c.kernel_dim
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("\n"),
                ),
                value: json!({"comparison": cmp}),
                passed,
            })
        }
        Command::Express {
            class,
            word,
            degree,
            input,
        } => {
            let k = read_complex(input)?;
            check_nq_size(&k)?;
            let w = parse_commutator(word)?;
            if w.max_generator() > k.m() {
                return Err(Error::GeneratorOutOfRange {
                    index: w.max_generator(),
                    m: k.m(),
                });
            }
            let degree = degree.unwrap_or(*class);
            if degree > *class {
                return Err(Error::InvalidArgument(format!(
                    "degree {degree} exceeds class {class}"
                )));
            }
            let pc = racg_quotient(&k, *class)?;
            let value = match express(&pc, &w, degree)? {
                Expressed::Element(e) => {
                    let bits: Vec<u8> = e.to_gf2().to_bools().iter().map(|&b| b as u8).collect();
                    json!({"word": word, "degree": degree, "in_gamma": true, "coordinates": bits})
                }
                Expressed::NotInGamma { lowest_weight } => {
                    json!({"word": word, "degree": degree, "in_gamma": false, "lowest_weight": lowest_weight})
                }
            };
            Ok(Outcome::ok(value))
        }
        Command::VerifyPaper { case, json } => {
            let reports = verify::run_all(case.as_deref())?;
            let passed = reports.iter().all(|r| r.passed);
            let lines = reports
                .iter()
                .map(|r| format!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.id))
                .collect::<Vec<_>>()
                .join("\n");
            let value = if *json {
                serde_json::to_value(&reports).map_err(|e| Error::Internal(e.to_string()))?
            } else {
                Value::Array(
                    reports
                        .iter()
                        .map(|r| serde_json::json!({"id": r.id, "passed": r.passed}))
                        .collect(),
                )
            };
            Ok(Outcome {
                value,
                passed,
                table: Some(lines),
            })
        }
    }
}

/// Parses `args` and runs the command, writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let text = match (cli.format, &outcome.table) {
                (Format::Table, Some(t)) => t.clone(),
                _ => serde_json::to_string(&outcome.value).expect("serializable"),
            };
            let _ = writeln!(out, "{text}");
            if outcome.passed {
                EXIT_OK
            } else {
                let _ = writeln!(err, "check failed");
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => EXIT_CHECK_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}
