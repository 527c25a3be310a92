//! `nvlogic` command-line front end.
//!
//! Exit codes: 0 success, 1 constraint violation (`check`), 2 usage, parse or
//! evaluation error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nvlogic::formula::{self, Assignment, LogicConfig};
use nvlogic::{
    project_fuzzy, project_intuitionistic, Bound, CustomLogic, DependencyGroups, Engine,
    IndeterminacyMode, NormFamily, PriorityOrder, RefinedValue, Signature,
};

#[derive(Parser)]
#[command(
    name = "nvlogic",
    version,
    about = "Many-valued and neutrosophic logic evaluator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula under the chosen logic.
    Eval {
        formula: String,
        #[command(flatten)]
        logic: LogicArgs,
        /// Assignment file with one `name = value` per line.
        #[arg(short = 'a', long = "assign")]
        assign: Option<PathBuf>,
    },
    /// Print the truth table of a formula under a finite logic.
    Table {
        formula: String,
        #[command(flatten)]
        logic: LogicArgs,
    },
    /// Check the component-sum constraint of a value.
    Check {
        value: String,
        /// Dependent slots, e.g. `T2,I3`. Repeat the flag or separate groups with `;`.
        #[arg(long = "deps")]
        deps: Vec<String>,
    },
    /// Project or normalize a value.
    Convert {
        value: String,
        #[arg(long = "to", value_enum)]
        to: Target,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicKind {
    Boolean,
    Kleene,
    Belnap,
    Custom,
    Neutro,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum EngineKind {
    Norm,
    Priority,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Fuzzy,
    Intuitionistic,
    Normalized,
}

#[derive(Args)]
struct LogicArgs {
    #[arg(long, value_enum, default_value = "boolean", ignore_case = true)]
    logic: LogicKind,
    /// Signature `p,r,s` for neutrosophic values.
    #[arg(long, default_value = "1,1,1")]
    sig: String,
    #[arg(long, value_enum, ignore_case = true)]
    engine: Option<EngineKind>,
    /// minmax, product or lukasiewicz
    #[arg(long)]
    family: Option<String>,
    /// pessimistic or optimistic
    #[arg(long)]
    mode: Option<String>,
    /// lower or upper; applies to both the conjunction and disjunction chains.
    #[arg(long, conflicts_with_all = ["and_order", "or_order"])]
    bound: Option<String>,
    /// Explicit conjunction chain, e.g. `T1<I1<F1`.
    #[arg(long = "and-order")]
    and_order: Option<String>,
    /// Explicit disjunction chain, e.g. `F1<I1<T1`.
    #[arg(long = "or-order")]
    or_order: Option<String>,
    /// Connective table file for `--logic custom`.
    #[arg(long)]
    tables: Option<PathBuf>,
}

impl LogicArgs {
    fn config(&self) -> Result<LogicConfig, String> {
        let neutro_only = [
            ("--engine", self.engine.is_some()),
            ("--family", self.family.is_some()),
            ("--mode", self.mode.is_some()),
            ("--bound", self.bound.is_some()),
            ("--and-order", self.and_order.is_some()),
            ("--or-order", self.or_order.is_some()),
        ];
        if !matches!(self.logic, LogicKind::Neutro) {
            if let Some((flag, _)) = neutro_only.iter().find(|(_, set)| *set) {
                return Err(format!("{flag} only applies to --logic neutro"));
            }
        }
        if self.tables.is_some() && !matches!(self.logic, LogicKind::Custom) {
            return Err("--tables only applies to --logic custom".into());
        }
        match self.logic {
            LogicKind::Boolean => Ok(LogicConfig::Boolean),
            LogicKind::Kleene => Ok(LogicConfig::Kleene),
            LogicKind::Belnap => Ok(LogicConfig::Belnap),
            LogicKind::Custom => {
                let path = self
                    .tables
                    .as_ref()
                    .ok_or("--logic custom needs --tables <file>")?;
                let text = read(path)?;
                let logic: CustomLogic = text
                    .parse()
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                Ok(LogicConfig::Custom(logic))
            }
            LogicKind::Neutro => {
                let sig: Signature = self.sig.parse().map_err(|e| format!("--sig: {e}"))?;
                let engine = self.engine.unwrap_or(EngineKind::Norm);
                let engine = match engine {
                    EngineKind::Norm => {
                        if self.bound.is_some()
                            || self.and_order.is_some()
                            || self.or_order.is_some()
                        {
                            return Err(
                                "--bound/--and-order/--or-order need --engine priority".into()
                            );
                        }
                        let family = match &self.family {
                            Some(s) => s.parse::<NormFamily>().map_err(|e| e.to_string())?,
                            None => NormFamily::MinMax,
                        };
                        let mode = match &self.mode {
                            Some(s) => s.parse::<IndeterminacyMode>()?,
                            None => IndeterminacyMode::Pessimistic,
                        };
                        Engine::Norm { family, mode }
                    }
                    EngineKind::Priority => {
                        if self.family.is_some() || self.mode.is_some() {
                            return Err("--family/--mode need --engine norm".into());
                        }
                        let bound = match &self.bound {
                            Some(s) => s.parse::<Bound>()?,
                            None => Bound::Lower,
                        };
                        let chain = |text: &Option<String>, preset: PriorityOrder| match text {
                            Some(t) => PriorityOrder::parse(sig, t).map_err(|e| e.to_string()),
                            None => Ok(preset),
                        };
                        Engine::Priority {
                            and_order: chain(&self.and_order, PriorityOrder::for_and(sig, bound))?,
                            or_order: chain(&self.or_order, PriorityOrder::for_or(sig, bound))?,
                        }
                    }
                };
                Ok(LogicConfig::Neutrosophic { sig, engine })
            }
        }
    }
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn parse_formula(text: &str) -> Result<formula::Formula, String> {
    formula::parse(text).map_err(|e| {
        let (line, column) = e.position();
        let src = text.lines().nth(line - 1).unwrap_or("");
        format!("{e}\n  {src}\n  {}^", " ".repeat(column.saturating_sub(1)))
    })
}

fn parse_value(text: &str) -> Result<RefinedValue, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval {
            formula,
            logic,
            assign,
        } => {
            let cfg = logic.config()?;
            let f = parse_formula(&formula)?;
            let env = match &assign {
                Some(path) => Assignment::parse(&read(path)?)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => Assignment::new(),
            };
            let value = formula::evaluate(&f, &env, &cfg).map_err(|e| e.to_string())?;
            println!("{value}");
        }
        Command::Table { formula, logic } => {
            let cfg = logic.config()?;
            let f = parse_formula(&formula)?;
            let table = formula::truth_table(&f, &cfg).map_err(|e| e.to_string())?;
            print!("{table}");
        }
        Command::Check { value, deps } => {
            let v = parse_value(&value)?;
            let groups: Vec<String> = deps
                .iter()
                .flat_map(|d| d.split(';'))
                .map(str::to_string)
                .collect();
            let deps: DependencyGroups = groups
                .join(";")
                .parse()
                .map_err(|e| format!("--deps: {e}"))?;
            let report = v.check_constraint(&deps).map_err(|e| e.to_string())?;
            print!("{report}");
            if !report.all_pass() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Convert { value, to } => {
            let v = parse_value(&value)?;
            match to {
                Target::Fuzzy => {
                    let (out, lossy) = project_fuzzy(&v);
                    println!("{out}");
                    eprintln!("lossy: {lossy}");
                }
                Target::Intuitionistic => {
                    let (out, clamped) = project_intuitionistic(&v);
                    println!("{out}");
                    eprintln!("clamped: {clamped}");
                }
                Target::Normalized => {
                    let out = v.normalize(1.0).map_err(|e| e.to_string())?;
                    println!("{out}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
