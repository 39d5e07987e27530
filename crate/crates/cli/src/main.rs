use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gonal_bn::atlas::{atlas, render_ascii, render_svg};
use gonal_bn::oracle::verify_all;
use gonal_bn::rank_one::components_w;
use gonal_bn::rank_two::{classify_b3, classify_fixed_determinant, Status};

mod render;

const EXIT_USAGE: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gonal-bn",
    version,
    about = "Brill-Noether loci on general nu-gonal curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components of W^r_d(C)
    #[command(allow_negative_numbers = true)]
    Wrd {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Components of B^k3_d intersected with the stable locus
    #[command(allow_negative_numbers = true)]
    B3 {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        d: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fixed-determinant variant of b3
    #[command(allow_negative_numbers = true)]
    Fixdet {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        d: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Region decomposition of 2g-2 <= d <= 4g-4
    #[command(allow_negative_numbers = true)]
    Atlas {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cross-check tables against the oracle and run the invariant suite
    Verify {
        #[arg(long, value_parser = clap::value_parser!(i64).range(4..))]
        gmax: i64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(3..))]
        numax: i64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        pad: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k_i, rho_d^{k_i}, rho(g,r,d) and rho_M^{k3}
    #[command(allow_negative_numbers = true)]
    Rho {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(0..))]
        i: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    g: i64,
    #[arg(long)]
    nu: i64,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    #[value(name = "ascii")]
    AsciiDiagram,
    Svg,
}

impl Format {
    fn is_diagram(self) -> bool {
        matches!(self, Format::AsciiDiagram | Format::Svg)
    }
}

enum Failure {
    Usage(String),
    Hypothesis(String),
}

struct Outcome {
    body: String,
    code: u8,
    note: Option<String>,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            code: 0,
            note: None,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn no_diagram(format: Format) -> Result<(), Failure> {
    if format.is_diagram() {
        return Err(Failure::Usage(
            "--format ascii and --format svg are only available for atlas".into(),
        ));
    }
    Ok(())
}

fn run(command: Command) -> Result<(Outcome, Option<PathBuf>), Failure> {
    match command {
        Command::Wrd {
            curve,
            d,
            r,
            output,
        } => {
            no_diagram(output.format)?;
            let report = components_w(curve.g, curve.nu, d, r)
                .map_err(|e| Failure::Hypothesis(e.to_string()))?;
            let body = match output.format {
                Format::Json => to_json(&report),
                Format::Csv => render::wrd_csv(&report),
                _ => render::wrd_text(&report),
            };
            Ok((Outcome::ok(body), output.out))
        }
        Command::B3 { curve, d, output } => {
            no_diagram(output.format)?;
            let report = classify_b3(curve.g, curve.nu, d);
            let body = match output.format {
                Format::Json => to_json(&report),
                Format::Csv => render::b3_csv(&report),
                _ => render::b3_text(&report),
            };
            let mut outcome = Outcome::ok(body);
            if report.status == Status::NotApplicable {
                outcome.code = EXIT_HYPOTHESIS;
                outcome.note = report.reason.clone();
            }
            Ok((outcome, output.out))
        }
        Command::Fixdet { curve, d, output } => {
            no_diagram(output.format)?;
            let report = classify_fixed_determinant(curve.g, curve.nu, d);
            let body = match output.format {
                Format::Json => to_json(&report),
                Format::Csv => render::fixdet_csv(&report),
                _ => render::fixdet_text(&report),
            };
            let mut outcome = Outcome::ok(body);
            if !report.applicable {
                outcome.code = EXIT_HYPOTHESIS;
                outcome.note = report.reason.clone();
            }
            Ok((outcome, output.out))
        }
        Command::Atlas { curve, output } => {
            let a = atlas(curve.g, curve.nu).map_err(|e| Failure::Hypothesis(e.to_string()))?;
            let body = match output.format {
                Format::Json => to_json(&a),
                Format::Csv => render::atlas_csv(&a),
                Format::AsciiDiagram => render_ascii(&a),
                Format::Svg => render_svg(&a),
                Format::Text => render::atlas_text(&a),
            };
            Ok((Outcome::ok(body), output.out))
        }
        Command::Verify {
            gmax,
            numax,
            pad,
            format,
            out,
        } => {
            if !matches!(format, Format::Json | Format::Text) {
                return Err(Failure::Usage(
                    "verify supports --format json and --format text".into(),
                ));
            }
            let report = verify_all(gmax, numax, pad).map_err(|e| Failure::Usage(e.to_string()))?;
            let body = match format {
                Format::Json => to_json(&report),
                _ => report.to_text(),
            };
            let mut outcome = Outcome::ok(body);
            if !report.passed {
                outcome.code = EXIT_VERIFY;
                outcome.note = Some(report.to_text());
            }
            Ok((outcome, out))
        }
        Command::Rho { g, d, r, i, output } => {
            no_diagram(output.format)?;
            let report = render::RhoReport::new(g, d, r, i);
            let body = match output.format {
                Format::Json => to_json(&report),
                Format::Csv => render::rho_csv(&report),
                _ => render::rho_text(&report),
            };
            Ok((Outcome::ok(body), output.out))
        }
    }
}

fn emit(body: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let (outcome, out) = match run(cli.command) {
        Ok(x) => x,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Hypothesis(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_HYPOTHESIS);
        }
    };
    if let Err(e) = emit(&outcome.body, out.as_ref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    if let Some(note) = outcome.note {
        if outcome.code == EXIT_HYPOTHESIS {
            eprintln!("error: {note}");
        } else {
            eprint!("{note}");
        }
    }
    ExitCode::from(outcome.code)
}
