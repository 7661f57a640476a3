//! Distortion (MSE, PSNR) and watermark similarity (NC, SC).

use crate::colorspace::Channel;
use crate::error::{Error, Result};
use crate::imagecore::{BitMatrix, RgbImage};

/// Peak value for 8-bit samples, `(2^8 - 1)^2`.
const PEAK_SQUARED: f64 = 65025.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityReport {
    pub mse: f64,
    /// `f64::INFINITY` for identical images.
    pub psnr: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityReport {
    pub nc: f64,
    pub sc: f64,
}

/// Mean of the squared sample differences over all three channels.
pub fn mse(a: &RgbImage, b: &RgbImage) -> Result<f64> {
    a.ensure_same_dims(b, "image")?;
    let sum: u64 = Channel::ALL
        .into_iter()
        .map(|c| {
            a.plane(c)
                .iter()
                .zip(b.plane(c))
                .map(|(&x, &y)| u64::from(x.abs_diff(y)).pow(2))
                .sum::<u64>()
        })
        .sum();
    Ok(sum as f64 / (3 * a.len()) as f64)
}

/// `10 log10(255^2 / mse)`, infinite when `mse == 0`.
pub fn psnr_from_mse(mse: f64) -> f64 {
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (PEAK_SQUARED / mse).log10()
    }
}

pub fn psnr(a: &RgbImage, b: &RgbImage) -> Result<f64> {
    mse(a, b).map(psnr_from_mse)
}

pub fn quality(a: &RgbImage, b: &RgbImage) -> Result<QualityReport> {
    let mse = mse(a, b)?;
    Ok(QualityReport {
        mse,
        psnr: psnr_from_mse(mse),
    })
}

/// Normalized correlation `sum(I * I') / sum(I^2)`: the fraction of the
/// original's 1-bits that are also set in `extracted`.
pub fn nc(original: &BitMatrix, extracted: &BitMatrix) -> Result<f64> {
    extracted.ensure_dims(original.rows(), original.cols(), "extracted watermark")?;
    let (mut cross, mut energy) = (0u64, 0u64);
    for (&i, &j) in original.as_slice().iter().zip(extracted.as_slice()) {
        cross += u64::from(i && j);
        energy += u64::from(i);
    }
    if energy == 0 {
        return Err(Error::Degenerate("NC of an all-zero original watermark"));
    }
    Ok(cross as f64 / energy as f64)
}

/// Standard (Pearson) correlation between two watermarks.
pub fn sc(original: &BitMatrix, extracted: &BitMatrix) -> Result<f64> {
    extracted.ensure_dims(original.rows(), original.cols(), "extracted watermark")?;
    let n = original.len() as f64;
    let mean_i = original.count_ones() as f64 / n;
    let mean_j = extracted.count_ones() as f64 / n;
    let (mut cov, mut var_i, mut var_j) = (0.0, 0.0, 0.0);
    for (&i, &j) in original.as_slice().iter().zip(extracted.as_slice()) {
        let di = f64::from(u8::from(i)) - mean_i;
        let dj = f64::from(u8::from(j)) - mean_j;
        cov += di * dj;
        var_i += di * di;
        var_j += dj * dj;
    }
    if var_i == 0.0 || var_j == 0.0 {
        return Err(Error::Degenerate("SC of a constant watermark"));
    }
    Ok((cov / (var_i * var_j).sqrt()).clamp(-1.0, 1.0))
}

pub fn similarity(original: &BitMatrix, extracted: &BitMatrix) -> Result<SimilarityReport> {
    Ok(SimilarityReport {
        nc: nc(original, extracted)?,
        sc: sc(original, extracted)?,
    })
}
