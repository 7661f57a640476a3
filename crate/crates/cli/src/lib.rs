//! Command-line workflows: embed, extract, keygen, attack, evaluate, sweep.
//!
//! Exit codes: 0 success, 2 usage or validation error, 1 runtime failure.

pub mod grid;
pub mod sweep;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use lsbmark::codec::{self, EmbedConfig, ExtractConfig};
use lsbmark::imagecore::{load_bitmatrix, load_image, save_bitmatrix, save_image};
use lsbmark::metrics;
use lsbmark::{AttackKind, AttackSpec, SelectionMode};

use crate::grid::{Grid, GridError};

#[derive(Debug, Parser)]
#[command(name = "lsbmark", version, about = "Blind intensity-gated LSB watermarking for color images")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum Mode {
    /// Channel selection on raw values.
    Paper,
    /// Channel selection on LSB-cleared values; exact round trip.
    #[default]
    Stable,
}

impl From<Mode> for SelectionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Paper => SelectionMode::PaperFaithful,
            Mode::Stable => SelectionMode::Stable,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Embed a binary watermark into a cover image.
    Embed {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        watermark: PathBuf,
        #[arg(long)]
        key: PathBuf,
        /// Output image (.png or .bmp).
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
    /// Recover the watermark from a watermarked image and its key.
    Extract {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        key: PathBuf,
        /// Output watermark (.pbm, .pgm, .png, .bmp, or a TMK1 file).
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
    /// Generate a reproducible TMK1 key file.
    Keygen {
        rows: usize,
        cols: usize,
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Apply one attack to an image.
    #[command(allow_negative_numbers = true)]
    Attack {
        /// crop, jpeg, blur or saltpepper.
        kind: AttackKind,
        /// Crop percent, JPEG quality, disk radius or noise density.
        strength: f64,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare two images (mse, psnr) or two watermarks (nc, sc).
    Evaluate {
        #[arg(long, requires = "modified", conflicts_with_all = ["watermark", "extracted"])]
        original: Option<PathBuf>,
        #[arg(long)]
        modified: Option<PathBuf>,
        #[arg(long, requires = "extracted")]
        watermark: Option<PathBuf>,
        #[arg(long)]
        extracted: Option<PathBuf>,
    },
    /// Embed, attack, extract and score over a grid; writes a CSV report.
    Sweep {
        /// Cover image; repeat for several covers.
        #[arg(long, required = true)]
        cover: Vec<PathBuf>,
        #[arg(long)]
        watermark: PathBuf,
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        grid: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Lib {
        context: String,
        source: lsbmark::Error,
    },
    #[error(transparent)]
    Sweep(#[from] sweep::SweepError),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib { source, .. } if source.is_validation() => 2,
            CliError::Sweep(e) if e.source_error().is_validation() => 2,
            _ => 1,
        }
    }
}

trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError>;
}

impl<T> Context<T> for lsbmark::Result<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError> {
        self.map_err(|source| CliError::Lib { context: what(), source })
    }
}

fn show(p: &Path) -> String {
    p.display().to_string()
}

fn fmt_psnr(v: f64) -> String {
    if v.is_infinite() {
        "inf".into()
    } else {
        format!("{v:.4}")
    }
}

/// Runs one command, returning the report line printed on success.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Embed {
            cover,
            watermark,
            key,
            output,
            mode,
        } => {
            let img = load_image(&cover).context(|| show(&cover))?;
            let w = load_bitmatrix(&watermark).context(|| show(&watermark))?;
            let k = load_bitmatrix(&key).context(|| show(&key))?;
            let cfg = EmbedConfig { mode: mode.into() };
            let marked = codec::embed(&img, &w, &k, cfg).context(|| "embed".into())?;
            save_image(&marked, &output).context(|| show(&output))?;
            let q = metrics::quality(&img, &marked).context(|| "metrics".into())?;
            Ok(format!("mse={:.6} psnr={}", q.mse, fmt_psnr(q.psnr)))
        }
        Command::Extract {
            input,
            key,
            output,
            mode,
        } => {
            let img = load_image(&input).context(|| show(&input))?;
            let k = load_bitmatrix(&key).context(|| show(&key))?;
            let w = codec::extract(&img, &k, ExtractConfig::new(mode.into())).context(|| "extract".into())?;
            save_bitmatrix(&w, &output).context(|| show(&output))?;
            Ok(format!("rows={} cols={} ones={}", w.rows(), w.cols(), w.count_ones()))
        }
        Command::Keygen {
            rows,
            cols,
            seed,
            output,
        } => {
            let k = codec::keygen(rows, cols, seed).context(|| "keygen".into())?;
            save_bitmatrix(&k, &output).context(|| show(&output))?;
            Ok(format!("rows={rows} cols={cols} seed={seed} ones={}", k.count_ones()))
        }
        Command::Attack {
            kind,
            strength,
            input,
            output,
            seed,
        } => {
            let spec = AttackSpec::new(kind, strength, seed);
            spec.validate().context(|| "attack".into())?;
            let img = load_image(&input).context(|| show(&input))?;
            let attacked = spec.apply(&img).context(|| "attack".into())?;
            save_image(&attacked, &output).context(|| show(&output))?;
            let q = metrics::quality(&img, &attacked).context(|| "metrics".into())?;
            Ok(format!(
                "attack={kind} strength={strength} seed={seed} mse={:.6} psnr={}",
                q.mse,
                fmt_psnr(q.psnr)
            ))
        }
        Command::Evaluate {
            original,
            modified,
            watermark,
            extracted,
        } => match (original, modified, watermark, extracted) {
            (Some(a), Some(b), None, None) => {
                let ia = load_image(&a).context(|| show(&a))?;
                let ib = load_image(&b).context(|| show(&b))?;
                let q = metrics::quality(&ia, &ib).context(|| "evaluate".into())?;
                Ok(format!("mse={:.6} psnr={}", q.mse, fmt_psnr(q.psnr)))
            }
            (None, None, Some(a), Some(b)) => {
                let wa = load_bitmatrix(&a).context(|| show(&a))?;
                let wb = load_bitmatrix(&b).context(|| show(&b))?;
                let s = metrics::similarity(&wa, &wb).context(|| "evaluate".into())?;
                Ok(format!("nc={:.6} sc={:.6}", s.nc, s.sc))
            }
            _ => Err(CliError::Usage(
                "evaluate needs --original/--modified or --watermark/--extracted".into(),
            )),
        },
        Command::Sweep {
            cover,
            watermark,
            key,
            grid,
            output,
            mode,
        } => {
            let text = fs::read_to_string(&grid).map_err(|e| CliError::Runtime(format!("{}: {e}", show(&grid))))?;
            let grid: Grid = text.parse().map_err(|e: GridError| CliError::Usage(e.to_string()))?;
            let w = load_bitmatrix(&watermark).context(|| show(&watermark))?;
            let k = load_bitmatrix(&key).context(|| show(&key))?;
            let covers = cover
                .iter()
                .map(|p| {
                    Ok(sweep::Cover {
                        id: p.file_stem().map_or_else(|| show(p), |s| s.to_string_lossy().into_owned()),
                        image: load_image(p).context(|| show(p))?,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let report = sweep::run(&covers, &w, &k, &grid, EmbedConfig { mode: mode.into() })?;
            report
                .write_csv(&output)
                .map_err(|e| CliError::Runtime(format!("{}: {e}", show(&output))))?;
            Ok(format!("rows={} output={}", report.rows.len(), show(&output)))
        }
    }
}
