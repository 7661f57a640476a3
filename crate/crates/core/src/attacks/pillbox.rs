use crate::colorspace::Channel;
use crate::error::{Error, Result};
use crate::imagecore::RgbImage;

/// Circular averaging kernel. Each cell's weight is the area of its unit
/// square covered by a disk of `radius` centred on the middle cell,
/// normalised so the weights sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PillboxKernel {
    radius: f64,
    half: usize,
    weights: Vec<f64>,
}

impl PillboxKernel {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::OutOfRange {
                param: "blur radius",
                value: radius,
                range: "greater than 0",
            });
        }
        let half = radius.ceil() as usize;
        let mut weights = coverage(radius, half);
        let total: f64 = weights.iter().sum();
        weights.iter_mut().for_each(|w| *w /= total);
        Ok(Self { radius, half, weights })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Side length of the square support, `2 * ceil(radius) + 1`.
    pub fn side(&self) -> usize {
        2 * self.half + 1
    }

    /// Row-major weights.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weight at offset `(dx, dy)` from the centre.
    pub fn weight(&self, dx: isize, dy: isize) -> f64 {
        let h = self.half as isize;
        if dx.abs() > h || dy.abs() > h {
            return 0.0;
        }
        self.weights[((dy + h) as usize) * self.side() + (dx + h) as usize]
    }
}

/// Disk-cell overlap areas before normalisation; they sum to `pi r^2`.
pub(crate) fn coverage(radius: f64, half: usize) -> Vec<f64> {
    let h = half as isize;
    let mut out = Vec::with_capacity((2 * half + 1).pow(2));
    for dy in -h..=h {
        for dx in -h..=h {
            let (x0, x1) = (dx as f64 - 0.5, dx as f64 + 0.5);
            let (y0, y1) = (dy as f64 - 0.5, dy as f64 + 0.5);
            let a = corner_area(radius, x1, y1) - corner_area(radius, x0, y1) - corner_area(radius, x1, y0)
                + corner_area(radius, x0, y0);
            out.push(a.max(0.0));
        }
    }
    out
}

/// Signed area of the disk inside the rectangle spanned by the origin and
/// `(x, y)`. Inclusion-exclusion over four corners gives any cell's area.
fn corner_area(r: f64, x: f64, y: f64) -> f64 {
    let sign = x.signum() * y.signum();
    let (x, y) = (x.abs().min(r), y.abs().min(r));
    if x == 0.0 || y == 0.0 {
        return 0.0;
    }
    if x * x + y * y <= r * r {
        return sign * x * y;
    }
    // Below t0 the rectangle's top edge bounds the region, above it the arc.
    let t0 = (r * r - y * y).max(0.0).sqrt();
    let arc = |t: f64| 0.5 * (t * (r * r - t * t).max(0.0).sqrt() + r * r * (t / r).clamp(-1.0, 1.0).asin());
    sign * (y * t0 + arc(x) - arc(t0))
}

/// Convolves each channel with [`PillboxKernel`]; borders replicate the edge
/// pixel and results are rounded to the nearest integer.
pub fn pillbox_blur(img: &RgbImage, radius: f64) -> Result<RgbImage> {
    let kernel = PillboxKernel::new(radius)?;
    let (w, h) = (img.width() as isize, img.height() as isize);
    let half = kernel.half as isize;
    let taps: Vec<(isize, isize, f64)> = (-half..=half)
        .flat_map(|dy| (-half..=half).map(move |dx| (dx, dy)))
        .map(|(dx, dy)| (dx, dy, kernel.weight(dx, dy)))
        .filter(|&(_, _, wt)| wt > 0.0)
        .collect();

    let planes: Vec<&[u8]> = Channel::ALL.iter().map(|&c| img.plane(c)).collect();
    let mut out = img.clone();
    for y in 0..h {
        for x in 0..w {
            let mut acc = [0.0f64; 3];
            for &(dx, dy, wt) in &taps {
                let sx = (x + dx).clamp(0, w - 1);
                let sy = (y + dy).clamp(0, h - 1);
                let i = (sy * w + sx) as usize;
                for (a, p) in acc.iter_mut().zip(&planes) {
                    *a += wt * f64::from(p[i]);
                }
            }
            out.set(x as usize, y as usize, acc.map(|v| v.round().clamp(0.0, 255.0) as u8));
        }
    }
    Ok(out)
}
