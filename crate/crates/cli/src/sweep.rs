//! Embed, attack, extract and score over a grid of attack cells.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use lsbmark::codec::{embed, extract, EmbedConfig};
use lsbmark::metrics::{nc, quality, sc};
use lsbmark::{AttackSpec, BitMatrix, RgbImage};

use crate::grid::Grid;

pub const CSV_HEADER: [&str; 8] = ["cover_id", "attack_kind", "strength", "seed", "nc", "sc", "mse", "psnr"];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub cover_id: String,
    pub attack: AttackSpec,
    pub nc: f64,
    pub sc: f64,
    /// Between the watermarked image and its attacked version.
    pub mse: f64,
    pub psnr: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("cover {cover_id}: {source}")]
    Embed {
        cover_id: String,
        source: lsbmark::Error,
    },
    #[error("cell cover={cover_id} attack={} strength={} seed={}: {source}", .attack.kind, .attack.strength, .attack.seed)]
    Cell {
        cover_id: String,
        attack: AttackSpec,
        source: lsbmark::Error,
    },
}

impl SweepError {
    pub fn source_error(&self) -> &lsbmark::Error {
        match self {
            SweepError::Embed { source, .. } | SweepError::Cell { source, .. } => source,
        }
    }
}

pub struct Cover {
    pub id: String,
    pub image: RgbImage,
}

/// Runs every (cover, cell) combination. Cells execute in parallel; rows
/// come back in grid order.
pub fn run(
    covers: &[Cover],
    watermark: &BitMatrix,
    key: &BitMatrix,
    grid: &Grid,
    cfg: EmbedConfig,
) -> Result<SweepReport, SweepError> {
    let marked: Vec<RgbImage> = covers
        .iter()
        .map(|c| {
            embed(&c.image, watermark, key, cfg).map_err(|source| SweepError::Embed {
                cover_id: c.id.clone(),
                source,
            })
        })
        .collect::<Result<_, _>>()?;

    let cells: Vec<(usize, AttackSpec)> = (0..covers.len())
        .flat_map(|i| grid.cells().map(move |a| (i, a)))
        .collect();

    let rows = cells
        .par_iter()
        .map(|&(i, attack)| {
            let cover_id = covers[i].id.clone();
            score_cell(&marked[i], watermark, key, attack, cfg).map_or_else(
                |source| {
                    Err(SweepError::Cell {
                        cover_id: cover_id.clone(),
                        attack,
                        source,
                    })
                },
                |(nc, sc, q)| {
                    Ok(SweepRow {
                        cover_id: cover_id.clone(),
                        attack,
                        nc,
                        sc,
                        mse: q.mse,
                        psnr: q.psnr,
                    })
                },
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SweepReport { rows })
}

fn score_cell(
    marked: &RgbImage,
    watermark: &BitMatrix,
    key: &BitMatrix,
    attack: AttackSpec,
    cfg: EmbedConfig,
) -> lsbmark::Result<(f64, f64, lsbmark::QualityReport)> {
    let attacked = attack.apply(marked)?;
    let extracted = extract(&attacked, key, cfg.into())?;
    let q = quality(marked, &attacked)?;
    let n = nc(watermark, &extracted)?;
    // A fully destroyed watermark can come back constant; report NaN then.
    let s = match sc(watermark, &extracted) {
        Ok(v) => v,
        Err(lsbmark::Error::Degenerate(_)) => f64::NAN,
        Err(e) => return Err(e),
    };
    Ok((n, s, q))
}

impl SweepReport {
    pub fn write_csv_to<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for r in &self.rows {
            w.write_record([
                r.cover_id.clone(),
                r.attack.kind.to_string(),
                r.attack.strength.to_string(),
                r.attack.seed.to_string(),
                r.nc.to_string(),
                r.sc.to_string(),
                r.mse.to_string(),
                r.psnr.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Writes to a temporary file beside `path`, then renames it into place.
    pub fn write_csv(&self, path: &Path) -> std::io::Result<()> {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        self.write_csv_to(&mut tmp).map_err(std::io::Error::other)?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }
}
