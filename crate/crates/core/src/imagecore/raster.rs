use crate::colorspace::Channel;
use crate::error::{Error, Result};

/// An 8-bit RGB raster stored as three planes in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct RgbImage {
    width: usize,
    height: usize,
    r: Vec<u8>,
    g: Vec<u8>,
    b: Vec<u8>,
}

impl RgbImage {
    /// A black image.
    pub fn new(width: usize, height: usize) -> Result<Self> {
        check_dims(width, height)?;
        let n = width * height;
        Ok(Self {
            width,
            height,
            r: vec![0; n],
            g: vec![0; n],
            b: vec![0; n],
        })
    }

    pub fn filled(width: usize, height: usize, px: [u8; 3]) -> Result<Self> {
        Self::from_fn(width, height, |_, _| px)
    }

    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> [u8; 3],
    ) -> Result<Self> {
        let mut img = Self::new(width, height)?;
        for y in 0..height {
            for x in 0..width {
                img.set(x, y, f(x, y));
            }
        }
        Ok(img)
    }

    pub fn from_planes(width: usize, height: usize, r: Vec<u8>, g: Vec<u8>, b: Vec<u8>) -> Result<Self> {
        check_dims(width, height)?;
        let n = width * height;
        for plane in [&r, &g, &b] {
            if plane.len() != n {
                return Err(Error::BufferLength {
                    expected: n,
                    found: plane.len(),
                });
            }
        }
        Ok(Self { width, height, r, g, b })
    }

    /// Builds an image from packed `RGBRGB...` samples.
    pub fn from_interleaved(width: usize, height: usize, data: &[u8]) -> Result<Self> {
        Self::from_packed(width, height, data, 3)
    }

    /// Builds an image from packed `RGBARGBA...` samples, dropping alpha.
    pub fn from_rgba(width: usize, height: usize, data: &[u8]) -> Result<Self> {
        Self::from_packed(width, height, data, 4)
    }

    fn from_packed(width: usize, height: usize, data: &[u8], stride: usize) -> Result<Self> {
        check_dims(width, height)?;
        let n = width * height;
        if data.len() != n * stride {
            return Err(Error::BufferLength {
                expected: n * stride,
                found: data.len(),
            });
        }
        let mut img = Self::new(width, height)?;
        for (i, px) in data.chunks_exact(stride).enumerate() {
            img.r[i] = px[0];
            img.g[i] = px[1];
            img.b[i] = px[2];
        }
        Ok(img)
    }

    pub fn to_interleaved(&self) -> Vec<u8> {
        self.pixels().flatten().collect()
    }

    pub fn to_rgba(&self) -> Vec<u8> {
        self.pixels().flat_map(|[r, g, b]| [r, g, b, 255]).collect()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_square(&self) -> bool {
        self.width == self.height
    }

    pub fn plane(&self, channel: Channel) -> &[u8] {
        match channel {
            Channel::R => &self.r,
            Channel::G => &self.g,
            Channel::B => &self.b,
        }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> [u8; 3] {
        self.get_index(y * self.width + x)
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, px: [u8; 3]) {
        self.set_index(y * self.width + x, px);
    }

    /// Pixel at a row-major linear index.
    #[inline]
    pub fn get_index(&self, i: usize) -> [u8; 3] {
        [self.r[i], self.g[i], self.b[i]]
    }

    #[inline]
    pub fn set_index(&mut self, i: usize, px: [u8; 3]) {
        self.r[i] = px[0];
        self.g[i] = px[1];
        self.b[i] = px[2];
    }

    /// Pixels in row-major order.
    pub fn pixels(&self) -> impl ExactSizeIterator<Item = [u8; 3]> + '_ {
        (0..self.len()).map(move |i| self.get_index(i))
    }

    pub fn same_dims(&self, other: &RgbImage) -> bool {
        self.width == other.width && self.height == other.height
    }

    pub(crate) fn ensure_same_dims(&self, other: &RgbImage, what: &'static str) -> Result<()> {
        if self.same_dims(other) {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                what,
                expected_cols: self.width,
                expected_rows: self.height,
                found_cols: other.width,
                found_rows: other.height,
            })
        }
    }
}

impl std::fmt::Debug for RgbImage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RgbImage")
            .field("width", &self.width)
            .field("height", &self.height)
            .finish_non_exhaustive()
    }
}

pub(crate) fn check_dims(cols: usize, rows: usize) -> Result<()> {
    if cols == 0 || rows == 0 {
        Err(Error::EmptyDimensions { cols, rows })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planes_have_matching_lengths() {
        let err = RgbImage::from_planes(2, 2, vec![0; 4], vec![0; 3], vec![0; 4]).unwrap_err();
        assert!(matches!(err, Error::BufferLength { expected: 4, found: 3 }));
    }

    #[test]
    fn rejects_zero_dimensions() {
        assert!(RgbImage::new(0, 5).is_err());
    }

    #[test]
    fn interleaved_round_trip() {
        let data: Vec<u8> = (0..12).collect();
        let img = RgbImage::from_interleaved(2, 2, &data).unwrap();
        assert_eq!(img.get(1, 0), [3, 4, 5]);
        assert_eq!(img.to_interleaved(), data);
        let rgba = img.to_rgba();
        assert_eq!(RgbImage::from_rgba(2, 2, &rgba).unwrap(), img);
    }
}
