//! State behind the browser demo: one cover, watermark and key, the current
//! watermarked image, and the most recent attack.

use lsbmark::codec::{self, capacity_profile, CapacityProfile, EmbedConfig, ExtractConfig};
use lsbmark::colorspace::select_channels;
use lsbmark::imagecore::decode_image;
use lsbmark::metrics::{self, nc, sc};
use lsbmark::{AttackKind, AttackSpec, BitMatrix, Channel, Error, Result, RgbImage, SelectionMode};

/// Uploaded images are centre-cropped to a square and scaled down to this.
pub const MAX_SIDE: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttackOutcome {
    pub nc: f64,
    /// NaN when the extracted watermark is constant.
    pub sc: f64,
    pub mse: f64,
    pub psnr: f64,
}

pub struct Session {
    cover: RgbImage,
    watermark: BitMatrix,
    key: BitMatrix,
    mode: SelectionMode,
    marked: RgbImage,
    attacked: RgbImage,
    extracted: BitMatrix,
}

impl Session {
    pub fn new(side: usize, key_seed: u64) -> Result<Self> {
        let cover = synthetic_cover(side)?;
        let watermark = synthetic_watermark(side)?;
        let key = codec::keygen(side, side, key_seed)?;
        let mode = SelectionMode::Stable;
        let marked = codec::embed(&cover, &watermark, &key, EmbedConfig { mode })?;
        let extracted = codec::extract(&marked, &key, ExtractConfig::new(mode))?;
        Ok(Self {
            attacked: marked.clone(),
            cover,
            watermark,
            key,
            mode,
            marked,
            extracted,
        })
    }

    pub fn side(&self) -> usize {
        self.cover.width()
    }

    /// Replaces the cover with a decoded image file. Watermark and key are
    /// regenerated at the new size.
    pub fn load_cover(&mut self, bytes: &[u8], key_seed: u64) -> Result<()> {
        let img = fit_square(&decode_image(bytes)?, MAX_SIDE)?;
        let side = img.width();
        self.watermark = synthetic_watermark(side)?;
        self.key = codec::keygen(side, side, key_seed)?;
        self.cover = img;
        self.reembed()
    }

    pub fn set_mode(&mut self, mode: SelectionMode) -> Result<()> {
        self.mode = mode;
        self.reembed()
    }

    pub fn set_key_seed(&mut self, seed: u64) -> Result<()> {
        self.key = codec::keygen(self.side(), self.side(), seed)?;
        self.reembed()
    }

    fn reembed(&mut self) -> Result<()> {
        self.marked = codec::embed(&self.cover, &self.watermark, &self.key, EmbedConfig { mode: self.mode })?;
        self.attacked = self.marked.clone();
        self.extracted = codec::extract(&self.marked, &self.key, ExtractConfig::new(self.mode))?;
        Ok(())
    }

    pub fn cover(&self) -> &RgbImage {
        &self.cover
    }

    pub fn marked(&self) -> &RgbImage {
        &self.marked
    }

    pub fn attacked(&self) -> &RgbImage {
        &self.attacked
    }

    pub fn watermark(&self) -> &BitMatrix {
        &self.watermark
    }

    pub fn extracted(&self) -> &BitMatrix {
        &self.extracted
    }

    pub fn masked_watermark(&self) -> BitMatrix {
        codec::mask_watermark(&self.watermark, &self.key).expect("same dimensions")
    }

    pub fn embed_quality(&self) -> metrics::QualityReport {
        metrics::quality(&self.cover, &self.marked).expect("same dimensions")
    }

    pub fn capacity(&self) -> CapacityProfile {
        capacity_profile(&self.cover, self.mode)
    }

    /// Attacks the watermarked image, extracts, and scores against the
    /// original watermark.
    pub fn attack(&mut self, spec: AttackSpec) -> Result<AttackOutcome> {
        let attacked = spec.apply(&self.marked)?;
        let extracted = codec::extract(&attacked, &self.key, ExtractConfig::new(self.mode))?;
        let q = metrics::quality(&self.marked, &attacked)?;
        let outcome = AttackOutcome {
            nc: nc(&self.watermark, &extracted)?,
            sc: sc(&self.watermark, &extracted).unwrap_or(f64::NAN),
            mse: q.mse,
            psnr: q.psnr,
        };
        self.attacked = attacked;
        self.extracted = extracted;
        Ok(outcome)
    }

    /// Mean NC at each strength, averaged over `seeds` noise seeds.
    pub fn nc_curve(&self, kind: AttackKind, strengths: &[f64], seeds: u64) -> Result<Vec<f64>> {
        let seeds = if kind.uses_seed() { seeds.max(1) } else { 1 };
        strengths
            .iter()
            .map(|&s| {
                let mut total = 0.0;
                for seed in 0..seeds {
                    let attacked = AttackSpec::new(kind, s, seed).apply(&self.marked)?;
                    let got = codec::extract(&attacked, &self.key, ExtractConfig::new(self.mode))?;
                    total += nc(&self.watermark, &got)?;
                }
                Ok(total / seeds as f64)
            })
            .collect()
    }

    /// Per-channel map of samples changed by embedding.
    pub fn diff_view(&self) -> RgbImage {
        let mut out = self.cover.clone();
        for i in 0..out.len() {
            let (a, b) = (self.cover.get_index(i), self.marked.get_index(i));
            out.set_index(i, [0, 1, 2].map(|c| if a[c] == b[c] { 0 } else { 255 }));
        }
        out
    }

    /// Selected embedding channels per pixel, shown in their own colour.
    pub fn mask_view(&self) -> RgbImage {
        let mut out = self.cover.clone();
        for i in 0..out.len() {
            let mask = select_channels(self.cover.get_index(i), self.mode);
            out.set_index(i, Channel::ALL.map(|c| if mask.contains(c) { 255 } else { 0 }));
        }
        out
    }
}

pub fn bits_view(bits: &BitMatrix) -> RgbImage {
    RgbImage::from_fn(bits.cols(), bits.rows(), |x, y| if bits.get(y, x) { [255; 3] } else { [0; 3] })
        .expect("non-empty matrix")
}

/// Centre-crops to a square and nearest-neighbour scales to at most `max`.
pub fn fit_square(img: &RgbImage, max: usize) -> Result<RgbImage> {
    let side = img.width().min(img.height());
    if side == 0 {
        return Err(Error::EmptyDimensions {
            cols: img.width(),
            rows: img.height(),
        });
    }
    let (x0, y0) = ((img.width() - side) / 2, (img.height() - side) / 2);
    let out = side.min(max);
    RgbImage::from_fn(out, out, |x, y| img.get(x0 + x * side / out, y0 + y * side / out))
}

/// A smooth scene with some texture, standing in for a photograph.
pub fn synthetic_cover(side: usize) -> Result<RgbImage> {
    let s = side as f64;
    RgbImage::from_fn(side, side, |x, y| {
        let (u, v) = (x as f64 / s, y as f64 / s);
        let sky = 1.0 - v;
        let sun = (-(((u - 0.7).powi(2) + (v - 0.3).powi(2)) / 0.01)).exp();
        let hills = ((u * 9.0).sin() * 0.08 + 0.62 < v) as u8 as f64;
        let grain = ((x * 7919 + y * 104_729) % 13) as f64 - 6.0;
        let r = 60.0 + 120.0 * sky + 200.0 * sun - 40.0 * hills + grain;
        let g = 90.0 + 90.0 * sky + 150.0 * sun + 60.0 * hills + grain;
        let b = 140.0 + 100.0 * sky - 80.0 * hills + grain;
        [r, g, b].map(|c| c.round().clamp(0.0, 255.0) as u8)
    })
}

/// Rings around a solid centre with a diagonal bar.
pub fn synthetic_watermark(side: usize) -> Result<BitMatrix> {
    let c = side as f64 / 2.0;
    BitMatrix::from_fn(side, side, |r, col| {
        let (dy, dx) = (r as f64 - c, col as f64 - c);
        let d = (dx * dx + dy * dy).sqrt() / side as f64;
        let ring = d < 0.12 || (0.2..0.26).contains(&d) || (0.34..0.4).contains(&d);
        let bar = (dx - dy).abs() < side as f64 * 0.05 && d < 0.46;
        ring ^ bar
    })
}
