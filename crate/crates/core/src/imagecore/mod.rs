//! Raster and bit-matrix types plus their file formats.

mod bits;
mod io;
mod raster;

pub use bits::BitMatrix;
pub use io::{decode_image, load_bitmatrix, load_image, parse_key, save_bitmatrix, save_image, write_key};
pub use raster::RgbImage;
