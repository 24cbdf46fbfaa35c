use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use yangian_core::config::{Command, ConfigError, RunConfig, Scenario};
use yangian_core::lie::AlgebraName;
use yangian_core::report::SuiteReport;
use yangian_core::suites::{self, Tolerances};
use yangian_core::YangianParams;

const EXIT_OK: u8 = 0;
const EXIT_ASSERTION: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "yangian",
    version,
    about = "Two-site Yangian verification and entanglement kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// JSON run configuration; flags given on the command line take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Tolerance for two-site algebra and block residuals.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Seed for the randomized parameter battery.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug, Default)]
struct ParamArgs {
    /// `{"mu": .., "nu": .., "lambda": ..}`
    #[arg(long)]
    params: Option<String>,

    /// Replace mu by -lambda^2/(4 nu).
    #[arg(long)]
    constrained: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum System {
    Su2,
    Su3,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run the algebra suites at one parameter point plus the seeded battery.
    Verify(ParamArgs),
    /// Similarity-reduce the constrained generators and dump the blocks.
    Reduce {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        system: Option<System>,
    },
    /// Apply a transition operator to an initial state and report entanglement.
    Entangle {
        /// Scenario JSON, inline or as a file path.
        #[arg(long)]
        scenario: Option<String>,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::input(e.to_string())
    }
}

fn read_json_arg(raw: &str) -> Result<String, Failure> {
    if raw.trim_start().starts_with('{') {
        Ok(raw.to_string())
    } else {
        fs::read_to_string(raw).map_err(|e| Failure::input(format!("cannot read {raw}: {e}")))
    }
}

fn build_config(cli: &Cli) -> Result<RunConfig, Failure> {
    let command = match cli.command {
        Cmd::Verify(_) => Command::Verify,
        Cmd::Reduce { .. } => Command::Reduce,
        Cmd::Entangle { .. } => Command::Entangle,
    };
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            let c: RunConfig = serde_json::from_str(&text).map_err(ConfigError::from)?;
            if c.command != command {
                return Err(Failure::input(format!(
                    "config is for {:?} but the {:?} subcommand was given",
                    c.command, command
                )));
            }
            c
        }
        None => RunConfig::new(command),
    };
    let params = match &cli.command {
        Cmd::Verify(p) => Some(p),
        Cmd::Reduce { params, .. } => Some(params),
        Cmd::Entangle { .. } => None,
    };
    if let Some(p) = params {
        if let Some(text) = &p.params {
            cfg.params = Some(yangian_core::config::parse_params(&read_json_arg(text)?)?);
        }
        cfg.constrained |= p.constrained;
    }
    if let Cmd::Reduce {
        system: Some(s), ..
    } = cli.command
    {
        cfg.system = Some(match s {
            System::Su2 => AlgebraName::Su2,
            System::Su3 => AlgebraName::Su3,
        });
    }
    if let Cmd::Entangle { scenario: Some(s) } = &cli.command {
        cfg.scenario = Some(Scenario::parse(&read_json_arg(s)?)?);
    }
    if let Some(t) = cli.tol {
        cfg.tolerance = t;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(o) = &cli.out {
        cfg.output_path = Some(o.display().to_string());
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit<T: Serialize>(
    cfg: &RunConfig,
    json: bool,
    value: &T,
    summary: impl FnOnce() -> String,
) -> Result<(), Failure> {
    let text =
        serde_json::to_string_pretty(value).map_err(|e| Failure::input(e.to_string()))? + "\n";
    if let Some(path) = &cfg.output_path {
        fs::write(path, &text).map_err(|e| Failure::input(format!("cannot write {path}: {e}")))?;
    }
    if json {
        print!("{text}");
    } else {
        print!("{}", summary());
    }
    Ok(())
}

fn summarize(report: &SuiteReport) -> String {
    let mut s = String::new();
    for e in &report.entries {
        s += &format!(
            "{} {:<48} {:.3e}\n",
            if e.pass { "ok  " } else { "FAIL" },
            e.relation,
            e.residual
        );
    }
    for f in &report.flagged {
        s += &format!("note {:<48} {:.3e} ({})\n", f.relation, f.residual, f.flag);
    }
    for k in &report.skipped {
        s += &format!("skip {:<48} {}\n", k.relation, k.reason);
    }
    let failed = report.failures().count();
    s += &format!(
        "{}: {} checks, {} failed, {:.1} ms\n",
        report.suite,
        report.entries.len(),
        failed,
        report.wall_time.as_secs_f64() * 1e3
    );
    s
}

fn verdict(pass: bool) -> u8 {
    if pass {
        EXIT_OK
    } else {
        EXIT_ASSERTION
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let cfg = build_config(cli)?;
    let tol = Tolerances::with_algebra(cfg.tolerance);
    let params: YangianParams = cfg
        .effective_params()?
        .unwrap_or_else(suites::default_params);
    match cfg.command {
        Command::Verify => {
            let report = suites::verify(params, cfg.seed, &tol);
            emit(&cfg, cli.json, &report, || summarize(&report))?;
            Ok(verdict(report.pass))
        }
        Command::Reduce => {
            let out = match cfg.system.unwrap_or(AlgebraName::Su3) {
                AlgebraName::Su2 => suites::reduce_su2_run(params, &tol),
                AlgebraName::Su3 => suites::reduce_su3_run(params, &tol),
            }
            .map_err(|e| Failure::input(e.to_string()))?;
            emit(&cfg, cli.json, &out, || {
                let mut s = format!("alpha = nu - lambda/2 = {}\n", out.blocks.alpha);
                if let Some(m) = &out.blocks.i8_middle_block {
                    s += &format!(
                        "I8 middle block: {} (residual vs I3 {:.3e}, vs I8 {:.3e})\n",
                        m.adopted, m.residual_vs_i3, m.residual_vs_i8
                    );
                }
                s + &summarize(&out.report)
            })?;
            Ok(verdict(out.report.pass))
        }
        Command::Entangle => {
            let scenario = cfg
                .scenario
                .as_ref()
                .ok_or_else(|| Failure::input("entangle needs --scenario"))?;
            let report = suites::entangle(scenario).map_err(|e| Failure::input(e.to_string()))?;
            let checks = suites::entangle_suite(&report);
            emit(&cfg, cli.json, &report, || {
                format!(
                    "initial measure {:.12}\nfinal measure   {:.12}\nnorm factor     {:.12}\ndisentangled    {}\n{}",
                    report.initial_measure,
                    report.final_measure,
                    report.norm_factor,
                    report.disentangled,
                    summarize(&checks)
                )
            })?;
            Ok(verdict(checks.pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
