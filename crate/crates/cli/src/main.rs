use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use modsing_core::catalog;
use modsing_core::invariants::{invariant_space, minimal_generators, DegreeCap, PolynomialityOptions};
use modsing_core::io::{AnalysisDocument, GroupDefinition};
use modsing_core::replay::{replay, ReplayCase};
use modsing_core::{analyze, MatrixGroup, Verdict};

const EXIT_INPUT_ERROR: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "modsing", version, about = "Quotient singularities of finite linear groups over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify V/G as smooth, isolated or nonisolated.
    Analyze {
        /// Group definition JSON, or `-` for stdin.
        path: PathBuf,
        /// Largest invariant degree to examine: a number or `auto`.
        #[arg(long, default_value = "auto", value_parser = parse_cap)]
        degree_cap: DegreeCap,
        #[command(flatten)]
        format: Format,
    },
    /// Dimensions of the invariant pieces and minimal generators.
    Invariants {
        path: PathBuf,
        #[arg(long)]
        max_degree: u32,
        #[command(flatten)]
        format: Format,
    },
    /// Replay the worked identities and examples.
    VerifyPaper {
        #[arg(long, default_value = "all", value_parser = parse_case)]
        case: ReplayCase,
        #[command(flatten)]
        format: Format,
    },
    /// Named groups.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print every catalog name with its order.
    List,
    /// Print the group definition JSON of a catalog group.
    Build { name: String },
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    /// JSON output (the default).
    #[arg(long)]
    json: bool,
    /// Human-readable output.
    #[arg(long)]
    text: bool,
}

fn parse_cap(s: &str) -> Result<DegreeCap, String> {
    if s == "auto" {
        return Ok(DegreeCap::Auto);
    }
    match s.parse::<u32>() {
        Ok(n) if n > 0 => Ok(DegreeCap::Fixed(n)),
        _ => Err(format!("expected a positive integer or `auto`, got {s:?}")),
    }
}

fn parse_case(s: &str) -> Result<ReplayCase, String> {
    s.parse().map_err(|e: modsing_core::Error| e.to_string())
}

fn load(path: &Path) -> anyhow::Result<(Option<String>, MatrixGroup)> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let def = GroupDefinition::parse(&text).context("parsing group definition")?;
    let group = def.to_group().context("building group")?;
    Ok((def.name, group))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Analyze { path, degree_cap, format } => {
            let (name, group) = load(&path)?;
            let report = analyze(&group, &PolynomialityOptions::with_cap(degree_cap))?;
            let doc = AnalysisDocument::new(name.as_deref(), report);
            if format.text {
                print!("{}", doc.to_text());
            } else {
                println!("{}", doc.to_json()?);
            }
            Ok(if doc.verdict == Verdict::Inconclusive { EXIT_INCONCLUSIVE } else { 0 })
        }
        Command::Invariants { path, max_degree, format } => {
            let (_, group) = load(&path)?;
            if max_degree == 0 {
                bail!("--max-degree must be at least 1");
            }
            let dims = (0..=max_degree)
                .map(|d| invariant_space(&group, d).map(|p| p.dim()))
                .collect::<modsing_core::Result<Vec<_>>>()?;
            let gens = minimal_generators(&group, max_degree)?;
            let polys: Vec<String> = gens.generators.iter().map(|p| p.to_string()).collect();
            if format.text {
                println!("dimensions: {dims:?}");
                println!("generator degrees: {:?}", gens.degrees);
                for p in &polys {
                    println!("  {p}");
                }
                println!("complete: {}", gens.complete);
            } else {
                let doc = serde_json::json!({
                    "dimensions": dims,
                    "generator_degrees": gens.degrees,
                    "generators": polys,
                    "complete": gens.complete,
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            }
            Ok(0)
        }
        Command::VerifyPaper { case, format } => {
            let checks = replay(case)?;
            if format.text {
                for c in &checks {
                    let mark = if c.holds { "PASS" } else { "FAIL" };
                    println!("{mark} [{}] {}: {}  {}", c.case, c.context, c.name, c.detail);
                }
                let passed = checks.iter().filter(|c| c.holds).count();
                println!("{passed}/{} checks hold", checks.len());
            } else {
                println!("{}", serde_json::to_string_pretty(&checks)?);
            }
            Ok(if checks.iter().all(|c| c.holds) { 0 } else { EXIT_CHECK_FAILED })
        }
        Command::Catalog { command: CatalogCommand::List } => {
            for name in catalog::names() {
                let g = catalog::build(name)?;
                println!("{name}\tF_{}\tdim {}\torder {}", g.field().order(), g.dim(), g.order());
            }
            Ok(0)
        }
        Command::Catalog { command: CatalogCommand::Build { name } } => {
            let g = catalog::build(&name)?;
            println!("{}", GroupDefinition::from_group(&g, Some(&name)).to_json()?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}
