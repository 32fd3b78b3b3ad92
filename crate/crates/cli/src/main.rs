//! `frqi` — encode grayscale images as FRQI states and evaluate quantum and
//! classical correlation measures, with CSV output for the experiment
//! runners.
//!
//! Exit codes: 0 on success, 2 on usage or input errors, 3 on numerical
//! failures. Diagnostics go to standard error.

use clap::{Parser, Subcommand, ValueEnum};
use frqi_core::{experiments, read_pgm, Error, Image};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "frqi", version, about = "FRQI image encoding and correlation measures")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Purities and entropies of the color/position split of one image.
    Entropy {
        /// pattern:<bits>, graylist:<v,v,...>, or a PGM file path.
        #[arg(long, value_name = "IMAGE")]
        image: String,
    },
    /// Entropy summaries of all 16 binary 2x2 patterns.
    Table1,
    /// Correlation reports of a patron against all 16 binary 2x2 patterns.
    Table2 {
        /// Binary 2x2 patron image.
        #[arg(long, value_name = "IMAGE")]
        patron: String,
    },
    /// Vary one pixel of image B over 0..=255 and compare against image A.
    Sweep {
        #[arg(long = "base-a", value_name = "IMAGE")]
        base_a: String,
        #[arg(long = "base-b", value_name = "IMAGE")]
        base_b: String,
        /// Row-major index of the varied pixel.
        #[arg(long, default_value_t = 2)]
        pixel: usize,
    },
    /// Compare a binary patron against all of its cyclic translations.
    Translate {
        /// Binary patron image; defaults to the shipped 8x8 stripe.
        #[arg(long, value_name = "IMAGE")]
        patron: Option<String>,
        /// Gray value substituted for black (0).
        #[arg(long, default_value_t = 0)]
        low: u8,
        /// Gray value substituted for white (255).
        #[arg(long, default_value_t = 255)]
        high: u8,
    },
    /// Dump the nonzero amplitudes of an image's FRQI state.
    Encode {
        #[arg(long, value_name = "IMAGE")]
        image: String,
        /// Emit the amplitude listing (the default and only mode).
        #[arg(long, default_value_t = true)]
        dump_state: bool,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            message: err.to_string(),
            code: if err.is_numeric() { 3 } else { 2 },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli.command) {
        Ok(output) => output,
        Err(failure) => {
            eprintln!("frqi: {}", failure.message);
            return ExitCode::from(failure.code);
        }
    };
    match &cli.out {
        None => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(path, output) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => {
                eprintln!("frqi: cannot write {}: {err}", path.display());
                ExitCode::from(2)
            }
        },
    }
}

fn run(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Entropy { image } => {
            let image = load_image(image)?;
            let m = experiments::entropy_summary(&image)?;
            Ok(csv(
                "purity_cp,purity_c,purity_p,S_c,S_p",
                std::iter::once(row(&[m.purity_cp, m.purity_c, m.purity_p, m.s_color, m.s_position])),
            ))
        }
        Command::Table1 => {
            let rows = experiments::run_table1()?;
            Ok(csv(
                "pattern,purity_cp,purity_c,purity_p,S_c,S_p",
                rows.iter().map(|r| {
                    let m = r.measures;
                    format!(
                        "{},{}",
                        r.pattern,
                        row(&[m.purity_cp, m.purity_c, m.purity_p, m.s_color, m.s_position])
                    )
                }),
            ))
        }
        Command::Table2 { patron } => {
            let patron = load_image(patron)?;
            let rows = experiments::run_table2(&patron)?;
            Ok(csv(
                "pattern,S_A,S_B,S_12,S_AB,S_A12,S_B12,I0,IT,ID",
                rows.iter().enumerate().map(|(index, r)| {
                    format!(
                        "{:04b},{}",
                        index,
                        row(&[
                            r.s_a,
                            r.s_b,
                            r.s_12,
                            r.s_ab,
                            r.s_a12,
                            r.s_b12,
                            r.tripartite.interaction,
                            r.tripartite.total_correlation,
                            r.tripartite.dual_total_correlation,
                        ])
                    )
                }),
            ))
        }
        Command::Sweep {
            base_a,
            base_b,
            pixel,
        } => {
            let base_a = load_image(base_a)?;
            let base_b = load_image(base_b)?;
            let rows = experiments::run_sweep(&base_a, &base_b, *pixel)?;
            Ok(csv(
                "x,S_AB_q,I_T,H_AB_c",
                rows.iter().map(|r| {
                    format!(
                        "{},{}",
                        r.x,
                        row(&[r.s_ab, r.total_correlation, r.h_ab])
                    )
                }),
            ))
        }
        Command::Translate { patron, low, high } => {
            let patron = match patron {
                Some(spec) => load_image(spec)?,
                None => experiments::default_patron(),
            };
            let rows = experiments::run_translate(&patron, *low, *high)?;
            Ok(csv(
                "shift,S_A,S_B,S_AB,I_AB,I_T,H_A,H_B,H_AB,I_c,NMI",
                rows.iter().map(|r| {
                    format!(
                        "{},{}",
                        r.shift,
                        row(&[
                            r.s_a,
                            r.s_b,
                            r.s_ab,
                            r.mutual_ab,
                            r.total_correlation,
                            r.classical.h_a,
                            r.classical.h_b,
                            r.classical.h_ab,
                            r.classical.mutual_information,
                            r.classical.normalized_mutual_information,
                        ])
                    )
                }),
            ))
        }
        Command::Encode { image, dump_state } => {
            let _ = dump_state;
            let image = load_image(image)?;
            let state = frqi_core::encode_frqi(&image);
            let width = state.qubits();
            let mut out = String::new();
            for (index, &amp) in state.amplitudes().iter().enumerate() {
                if amp.abs() > 1e-9 {
                    out.push_str(&format!("{index} {index:0width$b} {}\n", cell(amp)));
                }
            }
            Ok(out)
        }
    }
}

/// pattern:<bits>, graylist:<v,v,...>, or a PGM file path.
fn load_image(spec: &str) -> Result<Image, Failure> {
    if let Some(bits) = spec.strip_prefix("pattern:") {
        return Ok(Image::from_bit_pattern(bits)?);
    }
    if let Some(grays) = spec.strip_prefix("graylist:") {
        return Ok(Image::from_gray_list(grays)?);
    }
    let bytes = std::fs::read(spec)
        .map_err(|err| Failure::usage(format!("cannot read {spec}: {err}")))?;
    Ok(read_pgm(&bytes)?)
}

fn cell(value: f64) -> String {
    let text = format!("{value:.6}");
    // Values that round to zero print without a sign.
    if text == "-0.000000" {
        "0.000000".into()
    } else {
        text
    }
}

fn row(values: &[f64]) -> String {
    values.iter().map(|&v| cell(v)).collect::<Vec<_>>().join(",")
}

fn csv(header: &str, rows: impl Iterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}
