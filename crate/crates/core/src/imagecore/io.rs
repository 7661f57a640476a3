use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use image::codecs::pnm::{PnmEncoder, PnmSubtype, SampleEncoding};
use image::{DynamicImage, ExtendedColorType, ImageEncoder, ImageFormat};

use super::{BitMatrix, RgbImage};
use crate::error::{Error, Result};

const KEY_MAGIC: &[u8] = b"TMK1";

/// Reads a PNG, BMP or PNM file as 8-bit RGB. Grayscale is promoted to
/// R = G = B and alpha is dropped.
pub fn load_image(path: impl AsRef<Path>) -> Result<RgbImage> {
    let decoded = image::ImageReader::open(path)?.with_guessed_format()?.decode()?;
    to_rgb(decoded)
}

/// Decodes an in-memory image file (format sniffed from its magic bytes).
pub fn decode_image(bytes: &[u8]) -> Result<RgbImage> {
    to_rgb(image::load_from_memory(bytes)?)
}

fn to_rgb(decoded: DynamicImage) -> Result<RgbImage> {
    let color = decoded.color();
    let depth = color.bits_per_pixel() / u16::from(color.channel_count());
    if depth > 8 {
        return Err(Error::Unsupported(format!("{depth} bits per channel")));
    }
    let rgb = decoded.to_rgb8();
    RgbImage::from_interleaved(rgb.width() as usize, rgb.height() as usize, rgb.as_raw())
}

/// Writes `img` losslessly. The container is chosen from the extension and
/// must be PNG or BMP.
pub fn save_image(img: &RgbImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let format = match extension(path).as_deref() {
        Some("png") => ImageFormat::Png,
        Some("bmp") => ImageFormat::Bmp,
        Some("jpg" | "jpeg" | "jpe" | "jfif") => return Err(Error::LossyContainer(path.to_owned())),
        other => {
            return Err(Error::Unsupported(format!(
                "output extension {:?} (expected png or bmp)",
                other.unwrap_or("")
            )))
        }
    };
    image::save_buffer_with_format(
        path,
        &img.to_interleaved(),
        img.width() as u32,
        img.height() as u32,
        ExtendedColorType::Rgb8,
        format,
    )?;
    Ok(())
}

/// Reads a watermark or key. `TMK1` key files are recognised by their magic;
/// anything else is decoded as an image where zero samples map to 0 and
/// every nonzero sample maps to 1.
pub fn load_bitmatrix(path: impl AsRef<Path>) -> Result<BitMatrix> {
    let bytes = fs::read(path)?;
    if bytes.starts_with(KEY_MAGIC) {
        return parse_key(&bytes);
    }
    let img = decode_image(&bytes)?;
    BitMatrix::from_fn(img.height(), img.width(), |row, col| {
        img.get(col, row).iter().any(|&v| v != 0)
    })
}

/// Writes a bit matrix. `.png`, `.bmp`, `.pbm` and `.pgm` produce a
/// black/white image (1 = white); any other extension produces a `TMK1`
/// key file.
pub fn save_bitmatrix(bits: &BitMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let ext = extension(path);
    let luma: Vec<u8> = bits.as_slice().iter().map(|&b| if b { 255 } else { 0 }).collect();
    let (w, h) = (bits.cols() as u32, bits.rows() as u32);
    match ext.as_deref() {
        Some("png") => image::save_buffer_with_format(path, &luma, w, h, ExtendedColorType::L8, ImageFormat::Png)?,
        Some("bmp") => image::save_buffer_with_format(path, &luma, w, h, ExtendedColorType::L8, ImageFormat::Bmp)?,
        Some(kind @ ("pbm" | "pgm")) => {
            // The PBM encoder takes 0/1 samples with 1 meaning white.
            let (subtype, samples) = if kind == "pbm" {
                let bits = bits.as_slice().iter().map(|&b| u8::from(b)).collect();
                (PnmSubtype::Bitmap(SampleEncoding::Binary), bits)
            } else {
                (PnmSubtype::Graymap(SampleEncoding::Binary), luma)
            };
            let mut out = BufWriter::new(fs::File::create(path)?);
            PnmEncoder::new(&mut out)
                .with_subtype(subtype)
                .write_image(&samples, w, h, ExtendedColorType::L8)?;
            out.flush()?;
        }
        Some("jpg" | "jpeg" | "jpe" | "jfif") => return Err(Error::LossyContainer(path.to_owned())),
        _ => fs::write(path, write_key(bits))?,
    }
    Ok(())
}

/// Parses the `TMK1` key format: an ASCII header `TMK1 <rows> <cols>`
/// terminated by a newline, then rows x cols `0`/`1` characters in
/// row-major order. ASCII whitespace between cells is ignored.
pub fn parse_key(bytes: &[u8]) -> Result<BitMatrix> {
    let malformed = |msg: String| Error::MalformedKeyFile(msg);
    let nl = bytes
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| malformed("missing header line".into()))?;
    let header = std::str::from_utf8(&bytes[..nl]).map_err(|_| malformed("header is not ASCII".into()))?;
    let mut fields = header.trim_end_matches('\r').split(' ');
    if fields.next() != Some("TMK1") {
        return Err(malformed(format!("bad magic in header {header:?}")));
    }
    let mut dim = |name: &str| -> Result<usize> {
        fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| malformed(format!("missing or invalid {name} in header {header:?}")))
    };
    let rows = dim("rows")?;
    let cols = dim("cols")?;
    if fields.next().is_some() {
        return Err(malformed(format!("trailing fields in header {header:?}")));
    }
    let mut cells = Vec::with_capacity(rows.saturating_mul(cols));
    for (offset, &b) in bytes[nl + 1..].iter().enumerate() {
        match b {
            b'0' => cells.push(0),
            b'1' => cells.push(1),
            b if b.is_ascii_whitespace() => {}
            other => {
                return Err(malformed(format!(
                    "non-binary byte 0x{other:02x} at offset {}",
                    nl + 1 + offset
                )))
            }
        }
    }
    if cells.len() != rows * cols {
        return Err(malformed(format!("expected {} cells, found {}", rows * cols, cells.len())));
    }
    BitMatrix::from_cells(rows, cols, &cells)
}

/// Serialises a matrix as a `TMK1` key file, one matrix row per line.
pub fn write_key(bits: &BitMatrix) -> Vec<u8> {
    let mut out = format!("TMK1 {} {}\n", bits.rows(), bits.cols()).into_bytes();
    out.reserve(bits.len() + bits.rows());
    for row in bits.as_slice().chunks(bits.cols()) {
        out.extend(row.iter().map(|&b| if b { b'1' } else { b'0' }));
        out.push(b'\n');
    }
    out
}

fn extension(path: &Path) -> Option<String> {
    path.extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_format_is_bit_exact() {
        let m = BitMatrix::from_cells(2, 3, &[1, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(write_key(&m), b"TMK1 2 3\n101\n001\n");
        assert_eq!(parse_key(b"TMK1 2 3\n101001").unwrap(), m);
    }

    #[test]
    fn key_parser_rejects_bad_content() {
        assert!(matches!(parse_key(b"TMK1 1 2\n12\n"), Err(Error::MalformedKeyFile(_))));
        assert!(matches!(parse_key(b"TMK1 2 2\n101\n"), Err(Error::MalformedKeyFile(_))));
        assert!(matches!(parse_key(b"TMK2 1 1\n1\n"), Err(Error::MalformedKeyFile(_))));
        assert!(matches!(parse_key(b"TMK1 1\n1\n"), Err(Error::MalformedKeyFile(_))));
        assert!(parse_key(b"TMK1 0 0\n").is_err());
    }
}
