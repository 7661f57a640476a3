//! Blind, invisible watermarking of 24-bit color images.
//!
//! A binary watermark is masked with a secret key (`W' = W xor K`) and each
//! masked bit is written into the least significant bit of every color
//! channel whose value is at least the pixel's intensity `(R + G + B) / 3`.
//! Extraction needs only the watermarked image and the key.
//!
//! Besides the codec the crate carries the distortion and similarity
//! metrics (MSE, PSNR, NC, SC) and the attacks used to probe robustness
//! (cropping, JPEG recompression, pillbox blur, salt-and-pepper noise).

pub mod attacks;
pub mod codec;
pub mod colorspace;
mod error;
pub mod imagecore;
pub mod metrics;

pub use attacks::{AttackKind, AttackSpec};
pub use codec::{embed, extract, keygen, mask_watermark, EmbedConfig, ExtractConfig};
pub use colorspace::{Channel, ChannelMask, HsiPixel, SelectionMode};
pub use error::{Error, Result};
pub use imagecore::{BitMatrix, RgbImage};
pub use metrics::{QualityReport, SimilarityReport};
