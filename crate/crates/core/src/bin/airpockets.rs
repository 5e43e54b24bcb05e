use std::io::Write;
use std::process::ExitCode;

use airpockets::bijection::{phi, phi_inv, psi, psi_inv, BijectionError};
use airpockets::catalog::{evaluate, CatalogError, Params};
use airpockets::oracle::{
    count_paths, enum_compositions, enum_motzkin_avoiding, enum_paths, CompositionKind, Family,
    FamilySpec, StepKind,
};
use airpockets::verify::{run_suite, Suite, VerifyOptions};
use airpockets::{Composition, LatticePath};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "airpockets",
    version,
    about = "Lattice paths with air pockets: series, enumeration, bijections, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gdap,
    Dap,
    Prime,
    Prefix,
    #[value(name = "H")]
    H,
    Motzkin,
    Alt,
    AltOddEven,
}

#[derive(Clone, Copy, ValueEnum)]
enum StepArg {
    Up,
    Down,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionArg {
    Psi,
    Phi,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a catalog series.
    Series {
        /// Catalog name (`--list` shows them all).
        name: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// List catalog names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Count or list the members of a family of a given length.
    Enumerate {
        #[arg(long, value_enum, default_value = "gdap")]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        min_y: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        max_y: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        end_ordinate: Option<i64>,
        #[arg(long, value_enum)]
        end_step: Option<StepArg>,
        #[arg(long, value_enum)]
        start_step: Option<StepArg>,
        #[arg(long)]
        length: usize,
        #[arg(long, conflicts_with = "count")]
        list: bool,
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Apply or invert one of the path/composition bijections.
    Map {
        #[arg(long, value_enum)]
        bijection: BijectionArg,
        /// A path such as UUD2UD.
        #[arg(long, conflicts_with = "invert", required_unless_present = "invert")]
        apply: Option<String>,
        /// A composition such as 1,2,3 (or "()" for the empty one).
        #[arg(long)]
        invert: Option<String>,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        offline: bool,
        #[arg(long)]
        refresh: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_UNKNOWN_NAME: u8 = 2;
const EXIT_BAD_PARAMS: u8 = 3;
const EXIT_MAP_ERROR: u8 = 4;

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("airpockets: {msg}");
    ExitCode::from(code)
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes());
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Series {
            name,
            k,
            t,
            m,
            order,
            format,
            list,
        } => {
            if list {
                let mut s = String::new();
                for (n, desc, params) in airpockets::catalog::NAMES {
                    let p = if params.is_empty() {
                        String::new()
                    } else {
                        format!(" ({params})")
                    };
                    s.push_str(&format!("{n}{p}: {desc}\n"));
                }
                return emit(&s);
            }
            let Some(name) = name else {
                return fail(EXIT_BAD_PARAMS, "series needs a name (or --list)");
            };
            series(&name, Params { k, t, m }, order, format)
        }
        Command::Enumerate {
            family,
            min_y,
            max_y,
            end_ordinate,
            end_step,
            start_step,
            length,
            list,
            count: _,
            format,
        } => enumerate(
            family,
            min_y,
            max_y,
            end_ordinate,
            end_step,
            start_step,
            length,
            list,
            format,
        ),
        Command::Map {
            bijection,
            apply,
            invert,
        } => map(bijection, apply, invert),
        Command::Verify {
            suite,
            max_n,
            offline,
            refresh,
            format,
        } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return fail(EXIT_BAD_PARAMS, e),
            };
            if max_n < 2 {
                return fail(EXIT_BAD_PARAMS, "--max-n must be at least 2");
            }
            let report = run_suite(
                suite,
                &VerifyOptions {
                    max_n,
                    offline,
                    refresh,
                    ..Default::default()
                },
            );
            let text = match format {
                Format::Plain => report.to_plain(),
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
            };
            emit(&text);
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                for c in report.failures() {
                    eprintln!("airpockets: failed: {} {}", c.kind, c.subject);
                }
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
    }
}

fn series(name: &str, params: Params, order: usize, format: Format) -> ExitCode {
    let named = match evaluate(name, params, order) {
        Ok(s) => s,
        Err(CatalogError::UnknownName(n)) => {
            return fail(
                EXIT_UNKNOWN_NAME,
                format!("unknown series {n:?} (try --list)"),
            )
        }
        Err(e) => return fail(EXIT_BAD_PARAMS, e),
    };
    let Some(coeffs) = named.series.to_integers() else {
        return fail(
            EXIT_VERIFY_FAILED,
            format!("{name} has a non-integer coefficient"),
        );
    };
    let strs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    let text = match format {
        Format::Plain => strs.join(" ") + "\n",
        Format::Csv => {
            let mut s = String::from("n,coeff\n");
            for (i, c) in strs.iter().enumerate() {
                s.push_str(&format!("{i},{c}\n"));
            }
            s
        }
        // Written by hand so that coefficients beyond 64 bits stay exact integers.
        Format::Json => format!(
            "{{\"name\":{},\"params\":{},\"coeffs\":[{}]}}\n",
            json!(named.name),
            json!(named.params),
            strs.join(",")
        ),
    };
    emit(&text)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    family: FamilyArg,
    min_y: Option<i64>,
    max_y: Option<i64>,
    end_ordinate: Option<i64>,
    end_step: Option<StepArg>,
    start_step: Option<StepArg>,
    length: usize,
    list: bool,
    format: Format,
) -> ExitCode {
    let kind = match family {
        FamilyArg::Gdap => Family::Gdap,
        FamilyArg::Dap => Family::Dap,
        FamilyArg::Prime => Family::Prime,
        FamilyArg::Prefix => Family::PrefixGdap,
        FamilyArg::H => Family::SpecialH,
        FamilyArg::Motzkin => Family::MotzkinAvoiding,
        FamilyArg::Alt => Family::CompositionAlt,
        FamilyArg::AltOddEven => Family::CompositionAltOddEven,
    };
    let step = |s: StepArg| match s {
        StepArg::Up => StepKind::Up,
        StepArg::Down => StepKind::Down,
    };
    let spec = FamilySpec {
        kind,
        min_y,
        max_y,
        end_ordinate,
        end_step: end_step.map(step),
        start_step: start_step.map(step),
    };
    if !list {
        return match count_paths(length, &spec) {
            Ok(c) => emit(&match format {
                Format::Json => format!("{{\"length\":{length},\"count\":{c}}}\n"),
                Format::Csv => format!("length,count\n{length},{c}\n"),
                Format::Plain => format!("{c}\n"),
            }),
            Err(e) => fail(EXIT_BAD_PARAMS, e),
        };
    }
    let items: Vec<String> = match kind {
        Family::MotzkinAvoiding => enum_motzkin_avoiding(length)
            .iter()
            .map(|p| p.to_string())
            .collect(),
        Family::CompositionAlt => enum_compositions(length, CompositionKind::Alt)
            .iter()
            .map(|c| c.to_string())
            .collect(),
        Family::CompositionAltOddEven => enum_compositions(length, CompositionKind::AltOddEven)
            .iter()
            .map(|c| c.to_string())
            .collect(),
        _ => match enum_paths(length, &spec) {
            Ok(paths) => paths.iter().map(|p| p.to_string()).collect(),
            Err(e) => return fail(EXIT_BAD_PARAMS, e),
        },
    };
    emit(&match format {
        Format::Json => format!("{}\n", json!(items)),
        Format::Csv => {
            let mut s = String::from("item\n");
            for i in &items {
                s.push_str(&format!("\"{i}\"\n"));
            }
            s
        }
        Format::Plain => items.iter().map(|i| format!("{i}\n")).collect(),
    })
}

fn map(bijection: BijectionArg, apply: Option<String>, invert: Option<String>) -> ExitCode {
    let result: Result<String, String> = if let Some(p) = apply {
        p.parse::<LatticePath>()
            .map_err(|e| e.to_string())
            .and_then(|path| {
                match bijection {
                    BijectionArg::Psi => psi(&path),
                    BijectionArg::Phi => phi(&path),
                }
                .map(|c| c.to_string())
                .map_err(|e: BijectionError| e.to_string())
            })
    } else {
        let c = invert.unwrap_or_default();
        c.parse::<Composition>()
            .map_err(|e| e.to_string())
            .and_then(|c| {
                match bijection {
                    BijectionArg::Psi => psi_inv(&c),
                    BijectionArg::Phi => phi_inv(&c),
                }
                .map(|p| p.to_string())
                .map_err(|e| e.to_string())
            })
    };
    match result {
        Ok(s) => emit(&format!("{s}\n")),
        Err(e) => fail(EXIT_MAP_ERROR, e),
    }
}
