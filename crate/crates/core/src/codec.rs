//! Key masking, embedding and blind extraction.
//!
//! Every pixel carries one masked watermark bit, written into the LSB of each
//! channel selected by [`select_channels`]. Extraction recomputes the mask
//! from the watermarked image alone and majority-votes the selected LSBs.

use rand::RngCore;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

use crate::colorspace::{select_channels, Channel, ChannelMask, SelectionMode};
use crate::error::{Error, Result};
use crate::imagecore::{BitMatrix, RgbImage};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EmbedConfig {
    pub mode: SelectionMode,
}

/// How one bit is recovered from the LSBs of a multi-channel mask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DecodeRule {
    /// Majority of the selected LSBs. A two-channel tie goes to the
    /// higher-priority channel (R, then G, then B).
    #[default]
    MajorityVote,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtractConfig {
    pub mode: SelectionMode,
    pub decode_rule: DecodeRule,
}

impl ExtractConfig {
    pub fn new(mode: SelectionMode) -> Self {
        Self {
            mode,
            decode_rule: DecodeRule::MajorityVote,
        }
    }
}

impl From<EmbedConfig> for ExtractConfig {
    fn from(cfg: EmbedConfig) -> Self {
        Self::new(cfg.mode)
    }
}

/// Deterministic pseudo-random key.
///
/// The generator is SplitMix64 with its state initialised to `seed`. Each
/// 64-bit output fills the next 64 cells in row-major order, least
/// significant bit first.
pub fn keygen(rows: usize, cols: usize, seed: u64) -> Result<BitMatrix> {
    let mut key = BitMatrix::zeros(rows, cols)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    for chunk in key.as_mut_slice().chunks_mut(64) {
        let word = rng.next_u64();
        for (i, cell) in chunk.iter_mut().enumerate() {
            *cell = (word >> i) & 1 == 1;
        }
    }
    Ok(key)
}

/// `W' = W xor K`.
pub fn mask_watermark(watermark: &BitMatrix, key: &BitMatrix) -> Result<BitMatrix> {
    key.ensure_dims(watermark.rows(), watermark.cols(), "key")?;
    watermark.xor(key)
}

fn ensure_square(img: &RgbImage, what: &'static str) -> Result<()> {
    if img.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            what,
            cols: img.width(),
            rows: img.height(),
        })
    }
}

pub fn embed(cover: &RgbImage, watermark: &BitMatrix, key: &BitMatrix, cfg: EmbedConfig) -> Result<RgbImage> {
    ensure_square(cover, "cover image")?;
    watermark.ensure_dims(cover.height(), cover.width(), "watermark")?;
    key.ensure_dims(cover.height(), cover.width(), "key")?;
    let masked = mask_watermark(watermark, key)?;

    let mut marked = cover.clone();
    for (i, &bit) in masked.as_slice().iter().enumerate() {
        let px = cover.get_index(i);
        let mask = select_channels(px, cfg.mode);
        marked.set_index(i, substitute(px, mask, bit));
    }
    Ok(marked)
}

#[inline]
fn substitute(mut px: [u8; 3], mask: ChannelMask, bit: bool) -> [u8; 3] {
    for c in mask.iter() {
        let v = &mut px[c.index()];
        *v = (*v & !1) | u8::from(bit);
    }
    px
}

pub fn extract(marked: &RgbImage, key: &BitMatrix, cfg: ExtractConfig) -> Result<BitMatrix> {
    ensure_square(marked, "watermarked image")?;
    key.ensure_dims(marked.height(), marked.width(), "key")?;
    let masked = BitMatrix::from_bools(
        marked.height(),
        marked.width(),
        marked.pixels().map(|px| decode_bit(px, select_channels(px, cfg.mode), cfg.decode_rule)).collect(),
    )?;
    masked.xor(key)
}

#[inline]
fn decode_bit(px: [u8; 3], mask: ChannelMask, rule: DecodeRule) -> bool {
    match rule {
        DecodeRule::MajorityVote => {
            let ones = mask.iter().filter(|c| px[c.index()] & 1 == 1).count();
            let n = mask.len();
            if 2 * ones == n {
                let first: Channel = mask.iter().next().expect("mask is never empty");
                px[first.index()] & 1 == 1
            } else {
                2 * ones > n
            }
        }
    }
}

/// Pixel counts by mask size.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CapacityProfile {
    pub one: usize,
    pub two: usize,
    pub three: usize,
}

impl CapacityProfile {
    pub fn total(&self) -> usize {
        self.one + self.two + self.three
    }

    /// Mean number of channels written per pixel.
    pub fn mean_channels(&self) -> f64 {
        (self.one + 2 * self.two + 3 * self.three) as f64 / self.total() as f64
    }
}

pub fn capacity_profile(cover: &RgbImage, mode: SelectionMode) -> CapacityProfile {
    let mut profile = CapacityProfile::default();
    for px in cover.pixels() {
        match select_channels(px, mode).len() {
            1 => profile.one += 1,
            2 => profile.two += 1,
            _ => profile.three += 1,
        }
    }
    profile
}
