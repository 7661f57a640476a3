//! Robustness attacks. Each is a deterministic transform that preserves the
//! image dimensions; the random one is driven by an explicit seed.

mod pillbox;

use std::fmt;
use std::io::Cursor;
use std::str::FromStr;

use image::codecs::jpeg::JpegEncoder;
use image::{ExtendedColorType, ImageEncoder, ImageFormat};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

pub use pillbox::{pillbox_blur, PillboxKernel};

use crate::error::{Error, Result};
use crate::imagecore::RgbImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttackKind {
    Crop,
    JpegCompress,
    PillboxBlur,
    SaltPepper,
}

impl AttackKind {
    pub const ALL: [AttackKind; 4] = [
        AttackKind::Crop,
        AttackKind::JpegCompress,
        AttackKind::PillboxBlur,
        AttackKind::SaltPepper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AttackKind::Crop => "crop",
            AttackKind::JpegCompress => "jpeg",
            AttackKind::PillboxBlur => "blur",
            AttackKind::SaltPepper => "saltpepper",
        }
    }

    pub fn uses_seed(self) -> bool {
        self == AttackKind::SaltPepper
    }
}

impl fmt::Display for AttackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAttack(pub String);

impl fmt::Display for UnknownAttack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown attack {:?} (expected crop, jpeg, blur or saltpepper)", self.0)
    }
}

impl std::error::Error for UnknownAttack {}

impl FromStr for AttackKind {
    type Err = UnknownAttack;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "crop" => Ok(AttackKind::Crop),
            "jpeg" | "jpg" => Ok(AttackKind::JpegCompress),
            "blur" | "pillbox" => Ok(AttackKind::PillboxBlur),
            "saltpepper" | "salt-pepper" => Ok(AttackKind::SaltPepper),
            _ => Err(UnknownAttack(s.to_owned())),
        }
    }
}

/// One attack with its strength: crop percent, JPEG quality, disk radius or
/// noise density depending on `kind`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttackSpec {
    pub kind: AttackKind,
    pub strength: f64,
    pub seed: u64,
}

impl AttackSpec {
    pub fn new(kind: AttackKind, strength: f64, seed: u64) -> Self {
        Self { kind, strength, seed }
    }

    pub fn validate(&self) -> Result<()> {
        let s = self.strength;
        let (ok, param, range) = match self.kind {
            AttackKind::Crop => ((0.0..=100.0).contains(&s), "crop percent", "0 to 100"),
            AttackKind::JpegCompress => (
                (1.0..=100.0).contains(&s) && s.fract() == 0.0,
                "jpeg quality",
                "integer 1 to 100",
            ),
            AttackKind::PillboxBlur => (s > 0.0 && s.is_finite(), "blur radius", "greater than 0"),
            AttackKind::SaltPepper => ((0.0..=1.0).contains(&s), "noise density", "0 to 1"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange { param, value: s, range })
        }
    }

    pub fn apply(&self, img: &RgbImage) -> Result<RgbImage> {
        self.validate()?;
        match self.kind {
            AttackKind::Crop => crop(img, self.strength),
            AttackKind::JpegCompress => jpeg_compress(img, self.strength as u8),
            AttackKind::PillboxBlur => pillbox_blur(img, self.strength),
            AttackKind::SaltPepper => salt_pepper(img, self.strength, self.seed),
        }
    }
}

/// Number of top rows blackened by [`crop`].
pub fn cropped_rows(height: usize, percent: f64) -> usize {
    ((percent / 100.0 * height as f64).round() as usize).min(height)
}

/// Blackens a full-width strip of `round(percent / 100 * height)` rows at
/// the top of the image.
pub fn crop(img: &RgbImage, percent: f64) -> Result<RgbImage> {
    if !(0.0..=100.0).contains(&percent) {
        return Err(Error::OutOfRange {
            param: "crop percent",
            value: percent,
            range: "0 to 100",
        });
    }
    let mut out = img.clone();
    let rows = cropped_rows(img.height(), percent);
    for i in 0..rows * img.width() {
        out.set_index(i, [0, 0, 0]);
    }
    Ok(out)
}

/// Baseline JPEG encode at `quality`, then decode.
pub fn jpeg_compress(img: &RgbImage, quality: u8) -> Result<RgbImage> {
    if !(1..=100).contains(&quality) {
        return Err(Error::OutOfRange {
            param: "jpeg quality",
            value: f64::from(quality),
            range: "integer 1 to 100",
        });
    }
    let mut buf = Vec::new();
    JpegEncoder::new_with_quality(&mut buf, quality).write_image(
        &img.to_interleaved(),
        img.width() as u32,
        img.height() as u32,
        ExtendedColorType::Rgb8,
    )?;
    let decoded = image::load(Cursor::new(buf), ImageFormat::Jpeg)?.to_rgb8();
    RgbImage::from_interleaved(img.width(), img.height(), decoded.as_raw())
}

/// Number of pixels [`salt_pepper`] replaces.
pub fn noisy_pixel_count(pixels: usize, density: f64) -> usize {
    ((density * pixels as f64).round() as usize).min(pixels)
}

/// Sets `round(density * pixels)` distinct, uniformly chosen pixels to black
/// or white with equal probability.
pub fn salt_pepper(img: &RgbImage, density: f64, seed: u64) -> Result<RgbImage> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::OutOfRange {
            param: "noise density",
            value: density,
            range: "0 to 1",
        });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut out = img.clone();
    let count = noisy_pixel_count(img.len(), density);
    for i in index::sample(&mut rng, img.len(), count) {
        let v = if rng.random_bool(0.5) { 255 } else { 0 };
        out.set_index(i, [v; 3]);
    }
    Ok(out)
}
