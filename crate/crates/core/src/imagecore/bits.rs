use std::ops::BitXor;

use super::raster::check_dims;
use crate::error::{Error, Result};

/// A rows x cols matrix of bits: watermarks, masked watermarks and keys.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_dims(cols, rows)?;
        Ok(Self {
            rows,
            cols,
            bits: vec![false; rows * cols],
        })
    }

    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, cols)?;
        m.bits.fill(true);
        Ok(m)
    }

    /// Builds a matrix from row-major cells, each of which must be 0 or 1.
    pub fn from_cells(rows: usize, cols: usize, cells: &[u8]) -> Result<Self> {
        check_dims(cols, rows)?;
        if cells.len() != rows * cols {
            return Err(Error::BufferLength {
                expected: rows * cols,
                found: cells.len(),
            });
        }
        let bits = cells
            .iter()
            .map(|&c| match c {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::InvalidBit(other)),
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows, cols, bits })
    }

    pub fn from_bools(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        check_dims(cols, rows)?;
        if bits.len() != rows * cols {
            return Err(Error::BufferLength {
                expected: rows * cols,
                found: bits.len(),
            });
        }
        Ok(Self { rows, cols, bits })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        check_dims(cols, rows)?;
        let bits = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        Ok(Self { rows, cols, bits })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        self.bits[row * self.cols + col] = bit;
    }

    /// Row-major view of the cells.
    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [bool] {
        &mut self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn same_dims(&self, other: &BitMatrix) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    pub(crate) fn ensure_dims(&self, rows: usize, cols: usize, what: &'static str) -> Result<()> {
        if self.rows == rows && self.cols == cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                what,
                expected_cols: cols,
                expected_rows: rows,
                found_cols: self.cols,
                found_rows: self.rows,
            })
        }
    }

    /// Cell-wise exclusive-or.
    pub fn xor(&self, other: &BitMatrix) -> Result<Self> {
        other.ensure_dims(self.rows, self.cols, "bit matrix")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        })
    }
}

impl BitXor for &BitMatrix {
    type Output = Result<BitMatrix>;

    fn bitxor(self, rhs: Self) -> Self::Output {
        self.xor(rhs)
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        if self.len() <= 256 {
            for row in self.bits.chunks(self.cols) {
                let line: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}
