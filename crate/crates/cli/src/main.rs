//! `octomod`: exact octonion arithmetic, module classification, and
//! bimodule solving from the command line.
//!
//! Exit codes: 0 for a successful determination (including `Infeasible`
//! from the solver), 1 for a violated invariant or failed verification,
//! 2 for malformed input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use octomod_core::bimodule::{check_bimodule, solve_right_action};
use octomod_core::clifford::{
    clifford_dimension, unit_reps_on_o, unit_reps_on_obar, verify_clifford_relations,
};
use octomod_core::error::Error;
use octomod_core::json::{
    from_json_str, matrix_to_strings, right_action_from_json, AbstractModuleJson,
    CanonicalFormJson, ElementJson, SolveOutcomeJson,
};
use octomod_core::octonion::{format_literal, parse_literal, Octonion, MUL_TABLE};
use octomod_core::omodule::{
    canonicalize, classify_element, generated_submodule, length, submodule_type, AbstractModule,
    canonical_generator, ModuleElement, ModuleType,
};
use octomod_core::selftest::{run_all, SelftestConfig, DEFAULT_SEED};
use octomod_core::{Rat, RatOctonion};

#[derive(Parser)]
#[command(
    name = "octomod",
    version,
    about = "Exact octonion algebra, octonionic modules, and bimodule solving"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two octonion literals.
    Mul { x: String, y: String },
    /// Conjugate an octonion literal.
    Conj { x: String },
    /// Associator (ab)c - a(bc) of three octonion literals.
    Assoc { a: String, b: String, c: String },
    /// Print the 8x8 basis multiplication table.
    Table {
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Checks on the matrix representation.
    Clifford {
        #[command(subcommand)]
        cmd: CliffordCmd,
    },
    /// Module element computations on O^n (+) Obar^k.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Right-action checks and the bimodule feasibility solver.
    Bimodule {
        #[command(subcommand)]
        cmd: BimoduleCmd,
    },
    /// Run the full verification suite (the acceptance criteria).
    Selftest {
        /// RNG seed; falls back to OCTOMOD_SEED, then the default.
        #[arg(long)]
        seed: Option<u64>,
        /// Random sample count override; falls back to OCTOMOD_SAMPLES.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum CliffordCmd {
    /// Verify the anticommutation relations for both unit families.
    Verify,
    /// Dimension of the algebra generated by the paired representation.
    Dim,
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Classify an element: Assoc, ConjAssoc, Neither, or Zero.
    Classify {
        #[arg(long = "type", value_parser = parse_type)]
        mtype: ModuleType,
        /// Inline JSON or a path to a JSON file.
        #[arg(long)]
        element: String,
    },
    /// Length (l+, l-) of an element.
    Length {
        #[arg(long = "type", value_parser = parse_type)]
        mtype: ModuleType,
        #[arg(long)]
        element: String,
    },
    /// Generated submodule of an element: dimension, type, and basis.
    Submodule {
        #[arg(long = "type", value_parser = parse_type)]
        mtype: ModuleType,
        #[arg(long)]
        element: String,
    },
    /// The canonical generator (1, e1, ..; 1, e1, ..) of a cyclic module.
    Generator {
        #[arg(long = "type", value_parser = parse_type)]
        mtype: ModuleType,
    },
    /// Decompose an abstract module given by seven action matrices.
    Canonicalize {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum BimoduleCmd {
    /// Decide whether the standard module of a type admits a right action.
    Solve {
        #[arg(long = "type", value_parser = parse_type)]
        mtype: ModuleType,
        /// Also write the outcome JSON to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a right action against the standard left action of a type.
    Check {
        #[arg(long = "type", value_parser = parse_type)]
        mtype: ModuleType,
        /// JSON file with {"d", "R"} or a solver outcome with "action".
        #[arg(long)]
        action: PathBuf,
    },
}

fn parse_type(s: &str) -> Result<ModuleType, String> {
    let (n, k) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `n,k`, got `{s}`"))?;
    let n: usize = n.trim().parse().map_err(|e| format!("bad n: {e}"))?;
    let k: usize = k.trim().parse().map_err(|e| format!("bad k: {e}"))?;
    ModuleType::new(n, k).map_err(|e| e.to_string())
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn literal(s: &str) -> Result<RatOctonion, Error> {
    parse_literal::<Rat>(s)
}

/// `--element` accepts inline JSON (starts with `{`) or a file path.
fn load_element(mtype: ModuleType, arg: &str) -> Result<ModuleElement<Rat>, Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!(
            "cannot read element file `{arg}`: {e}"
        )))?
    };
    let json: ElementJson = from_json_str(&text)?;
    let element = json.to_element()?;
    if element.mtype() != mtype {
        return Err(Error::InvalidInput(format!(
            "element has type {} but --type says {}",
            element.mtype(),
            mtype
        )));
    }
    Ok(element)
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read `{}`: {e}", path.display())))
}

fn basis_label(i: usize) -> String {
    if i == 0 {
        "1".to_string()
    } else {
        format!("e{i}")
    }
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Mul { x, y } => {
            println!("{}", format_literal(&(&literal(&x)? * &literal(&y)?)));
            Ok(0)
        }
        Command::Conj { x } => {
            println!("{}", format_literal(&literal(&x)?.conj()));
            Ok(0)
        }
        Command::Assoc { a, b, c } => {
            let assoc = Octonion::associator(&literal(&a)?, &literal(&b)?, &literal(&c)?);
            println!("{}", format_literal(&assoc));
            Ok(0)
        }
        Command::Table { format } => {
            let cell = |i: usize, j: usize| -> String {
                let (sign, k) = MUL_TABLE[i][j];
                let label = basis_label(k);
                if sign > 0 {
                    label
                } else {
                    format!("-{label}")
                }
            };
            match format {
                TableFormat::Text => {
                    for i in 0..8 {
                        let row: Vec<String> =
                            (0..8).map(|j| format!("{:>4}", cell(i, j))).collect();
                        println!("{}", row.join(" "));
                    }
                }
                TableFormat::Csv => {
                    for i in 0..8 {
                        let row: Vec<String> = (0..8).map(|j| cell(i, j)).collect();
                        println!("{}", row.join(","));
                    }
                }
                TableFormat::Json => {
                    let rows: Vec<Vec<String>> =
                        (0..8).map(|i| (0..8).map(|j| cell(i, j)).collect()).collect();
                    println!("{}", serde_json::to_string(&rows).expect("strings serialize"));
                }
            }
            Ok(0)
        }
        Command::Clifford { cmd } => match cmd {
            CliffordCmd::Verify => {
                let mut ok = true;
                for (name, family) in [
                    ("on O", unit_reps_on_o::<Rat>()),
                    ("on Obar", unit_reps_on_obar::<Rat>()),
                ] {
                    let report = verify_clifford_relations(&family)?;
                    if report.passed() {
                        println!("{name}: pass (28 pairs)");
                    } else {
                        ok = false;
                        println!("{name}: FAIL, violated pairs {:?}", report.violations);
                    }
                }
                Ok(if ok { 0 } else { 1 })
            }
            CliffordCmd::Dim => {
                let dim = clifford_dimension::<Rat>();
                println!("{dim}");
                Ok(if dim == 128 { 0 } else { 1 })
            }
        },
        Command::Module { cmd } => match cmd {
            ModuleCmd::Classify { mtype, element } => {
                let m = load_element(mtype, &element)?;
                println!("{}", classify_element(&m));
                Ok(0)
            }
            ModuleCmd::Length { mtype, element } => {
                let m = load_element(mtype, &element)?;
                println!("{}", length(&m));
                Ok(0)
            }
            ModuleCmd::Submodule { mtype, element } => {
                let m = load_element(mtype, &element)?;
                let s = generated_submodule(&m);
                let ty = submodule_type(&s, mtype)?;
                let out = serde_json::json!({
                    "dim": s.dim(),
                    "n": ty.n(),
                    "k": ty.k(),
                    "basis": matrix_to_strings(s.basis()),
                });
                println!("{out}");
                Ok(0)
            }
            ModuleCmd::Generator { mtype } => {
                let g = canonical_generator::<Rat>(mtype)?;
                let json = ElementJson::from_element(&g);
                println!("{}", serde_json::to_string(&json).expect("strings serialize"));
                Ok(0)
            }
            ModuleCmd::Canonicalize { input } => {
                let json: AbstractModuleJson = from_json_str(&read_file(&input)?)?;
                let form = canonicalize(&json.to_module()?)?;
                let out = CanonicalFormJson::from_form(&form);
                println!("{}", serde_json::to_string(&out).expect("strings serialize"));
                Ok(0)
            }
        },
        Command::Bimodule { cmd } => match cmd {
            BimoduleCmd::Solve { mtype, out } => {
                let am = AbstractModule::<Rat>::standard(mtype);
                let outcome = solve_right_action(&am)?;
                let json = SolveOutcomeJson::from_outcome(&outcome);
                let text = serde_json::to_string(&json).expect("strings serialize");
                if let Some(path) = out {
                    std::fs::write(&path, &text).map_err(|e| {
                        Error::InvalidInput(format!("cannot write `{}`: {e}", path.display()))
                    })?;
                }
                println!("{text}");
                Ok(0)
            }
            BimoduleCmd::Check { mtype, action } => {
                let ra = right_action_from_json(&read_file(&action)?)?;
                let am = AbstractModule::<Rat>::standard(mtype);
                let report = check_bimodule(&am, &ra)?;
                if report.passed() {
                    println!("pass: bimodule identities hold on the standard module {mtype}");
                    Ok(0)
                } else {
                    for v in &report.violations {
                        println!("violated: {:?} at pair ({}, {})", v.identity, v.i, v.j);
                    }
                    Ok(1)
                }
            }
        },
        Command::Selftest { seed, samples } => {
            let env_u64 = |name: &str| std::env::var(name).ok().and_then(|s| s.parse().ok());
            let cfg = SelftestConfig {
                seed: seed.or_else(|| env_u64("OCTOMOD_SEED")).unwrap_or(DEFAULT_SEED),
                samples: samples.or_else(|| {
                    std::env::var("OCTOMOD_SAMPLES")
                        .ok()
                        .and_then(|s| s.parse().ok())
                }),
            };
            println!(
                "selftest: seed {}, samples {}",
                cfg.seed,
                cfg.samples
                    .map_or("default".to_string(), |s| s.to_string())
            );
            let results = run_all(&cfg);
            let mut ok = true;
            for res in &results {
                println!("{}", res.summary_line());
                ok &= res.ok();
            }
            println!("{}", if ok { "all criteria passed" } else { "FAILURES present" });
            Ok(if ok { 0 } else { 1 })
        }
    }
}
