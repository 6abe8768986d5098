//! Batch front-end: load fixture files, run the verification suites, emit
//! reports. Exit code 0 means no FAIL, 1 a verification failure, 2 an input
//! error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use peiffer::bisimplicial::BisimplicialGroupTrunc;
use peiffer::crossed::{
    check_crossed_square, check_two_crossed_module, extract_crossed_module,
    extract_crossed_square, mapping_cone, two_crossed_from_cols, two_crossed_from_rows,
    two_crossed_from_simplicial,
};
use peiffer::descriptor::{
    crossed_module_from_file, crossed_module_to_file, crossed_square_from_file,
    crossed_square_to_file, grid_from_file, read_fixture, simplicial_from_file,
    two_crossed_from_file, two_crossed_to_file, Fixture,
};
use peiffer::error::Error;
use peiffer::peiffer::PeifferMachine;
use peiffer::report::VerificationReport;
use peiffer::simplicial::check_crossed_module;

#[derive(Parser)]
#[command(
    name = "peiffer",
    about = "Verify Moore-bicomplex structure of finite (bi)simplicial groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumeration cap for group closures
    #[arg(long, global = true, default_value_t = 40_000)]
    order_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity/axiom suite matching the file's kind
    Verify { path: PathBuf },
    /// Moore cell orders, optionally at a single level
    Moore {
        path: PathBuf,
        /// level as "p,q"
        #[arg(long)]
        level: Option<String>,
    },
    /// Order factorization at every level
    Decompose { path: PathBuf },
    /// Closed-form table comparison against the composite pairing definition
    PeifferTable { path: PathBuf },
    /// The boundary-image equalities and inclusions
    BoundaryEqualities { path: PathBuf },
    /// Extract a crossed structure and re-check it
    Extract {
        #[arg(value_enum)]
        kind: ExtractKind,
        path: PathBuf,
        /// fixed row/column index for the 2-crossed extractions
        #[arg(long, default_value_t = 0)]
        at: usize,
    },
    /// The mapping-cone 2-crossed module of a crossed square
    MappingCone { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtractKind {
    Xmod,
    Xsq,
    X2modRow,
    X2modCol,
    X2modSimplicial,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Error::Parse(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
        Err(Error::Io(e)) => {
            eprintln!("input error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load_grid(cli: &Cli, path: &PathBuf) -> Result<BisimplicialGroupTrunc, Error> {
    match read_fixture(path)? {
        Fixture::Bisimplicial(file) => grid_from_file(&file, cli.order_cap),
        _ => Err(Error::Parse(format!(
            "{} is not a bisimplicial fixture",
            path.display()
        ))),
    }
}

fn emit(cli: &Cli, report: &VerificationReport) -> ExitCode {
    match cli.format {
        Format::Text => print!("{report}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("serializable report")
        ),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit_with_payload(
    cli: &Cli,
    report: &VerificationReport,
    payload: serde_json::Value,
) -> ExitCode {
    match cli.format {
        Format::Text => print!("{report}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Verify { path } => {
            let report = match read_fixture(path)? {
                Fixture::Bisimplicial(file) => grid_from_file(&file, cli.order_cap)?.verify(),
                Fixture::Simplicial(file) => simplicial_from_file(&file, cli.order_cap)?.verify(),
                Fixture::CrossedModule(file) => {
                    check_crossed_module(&crossed_module_from_file(&file, cli.order_cap)?)
                }
                Fixture::CrossedSquare(file) => {
                    check_crossed_square(&crossed_square_from_file(&file, cli.order_cap)?)
                }
                Fixture::TwoCrossedModule(file) => {
                    check_two_crossed_module(&two_crossed_from_file(&file, cli.order_cap)?)
                }
            };
            Ok(emit(cli, &report))
        }
        Command::Moore { path, level } => {
            let grid = load_grid(cli, path)?;
            let (max_p, max_q) = grid.truncation();
            let levels: Vec<(usize, usize)> = match level {
                Some(spec) => {
                    let parts: Vec<&str> = spec.split(',').collect();
                    if parts.len() != 2 {
                        return Err(Error::Parse(format!("bad level spec {spec}")));
                    }
                    vec![(
                        parts[0].trim().parse().map_err(|_| Error::Parse(spec.clone()))?,
                        parts[1].trim().parse().map_err(|_| Error::Parse(spec.clone()))?,
                    )]
                }
                None => (0..=max_p)
                    .flat_map(|p| (0..=max_q).map(move |q| (p, q)))
                    .collect(),
            };
            let mut rows = Vec::new();
            for lv in levels {
                let cell = grid.moore_subgroup(lv)?;
                rows.push(json!({ "level": [lv.0, lv.1], "order": cell.order() }));
                if matches!(cli.format, Format::Text) {
                    println!("NG({},{}) has order {}", lv.0, lv.1, cell.order());
                }
            }
            if matches!(cli.format, Format::Json) {
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { path } => {
            let grid = load_grid(cli, path)?;
            Ok(emit(cli, &grid.order_factorization_check()))
        }
        Command::PeifferTable { path } => {
            let grid = load_grid(cli, path)?;
            let machine = PeifferMachine::new(&grid)?;
            let report = machine.table_check()?;
            let rows: Vec<_> = report
                .checks
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    json!({
                        "row": i + 1,
                        "spec": c.name,
                        "status": c.status,
                        "witness": c.witness,
                    })
                })
                .collect();
            Ok(emit_with_payload(cli, &report, serde_json::Value::Array(rows)))
        }
        Command::BoundaryEqualities { path } => {
            let grid = load_grid(cli, path)?;
            let machine = PeifferMachine::new(&grid)?;
            let report = machine.boundary_equalities_check()?;
            Ok(emit(cli, &report))
        }
        Command::Extract { kind, path, at } => match kind {
            ExtractKind::Xmod => {
                let grid = load_grid(cli, path)?;
                let corner = extract_crossed_module(&grid)?;
                let mut report = VerificationReport::new("corner crossed modules");
                for (name, cm) in [
                    ("vertical", &corner.vertical),
                    ("horizontal", &corner.horizontal),
                    ("product", &corner.product),
                ] {
                    let mut sub = check_crossed_module(cm);
                    for c in &mut sub.checks {
                        c.name = format!("{name}: {}", c.name);
                    }
                    report.merge(sub);
                }
                let payload = json!({
                    "vertical": crossed_module_to_file(&corner.vertical),
                    "horizontal": crossed_module_to_file(&corner.horizontal),
                    "product": crossed_module_to_file(&corner.product),
                    "report": report,
                });
                Ok(emit_with_payload(cli, &report, payload))
            }
            ExtractKind::Xsq => {
                let grid = load_grid(cli, path)?;
                let square = extract_crossed_square(&grid)?;
                let report = check_crossed_square(&square);
                let payload = json!({
                    "square": crossed_square_to_file(&square),
                    "report": report,
                });
                Ok(emit_with_payload(cli, &report, payload))
            }
            ExtractKind::X2modRow | ExtractKind::X2modCol => {
                let grid = load_grid(cli, path)?;
                let tcm = match kind {
                    ExtractKind::X2modRow => two_crossed_from_rows(&grid, *at)?,
                    _ => two_crossed_from_cols(&grid, *at)?,
                };
                let report = check_two_crossed_module(&tcm);
                let payload = json!({
                    "two_crossed_module": two_crossed_to_file(&tcm),
                    "report": report,
                });
                Ok(emit_with_payload(cli, &report, payload))
            }
            ExtractKind::X2modSimplicial => {
                let sg = match read_fixture(path)? {
                    Fixture::Simplicial(file) => simplicial_from_file(&file, cli.order_cap)?,
                    _ => {
                        return Err(Error::Parse(format!(
                            "{} is not a simplicial fixture",
                            path.display()
                        )))
                    }
                };
                let tcm = two_crossed_from_simplicial(&sg)?;
                let report = check_two_crossed_module(&tcm);
                let payload = json!({
                    "two_crossed_module": two_crossed_to_file(&tcm),
                    "report": report,
                });
                Ok(emit_with_payload(cli, &report, payload))
            }
        },
        Command::MappingCone { path } => {
            let square = match read_fixture(path)? {
                Fixture::CrossedSquare(file) => crossed_square_from_file(&file, cli.order_cap)?,
                _ => {
                    return Err(Error::Parse(format!(
                        "{} is not a crossed-square fixture",
                        path.display()
                    )))
                }
            };
            let cone = mapping_cone(&square)?;
            let report = check_two_crossed_module(&cone);
            let payload = json!({
                "two_crossed_module": two_crossed_to_file(&cone),
                "report": report,
            });
            Ok(emit_with_payload(cli, &report, payload))
        }
    }
}
