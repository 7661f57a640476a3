//! wasm-bindgen bindings for the browser demo in `www/`.

mod session;

pub use session::{bits_view, fit_square, synthetic_cover, synthetic_watermark, AttackOutcome, Session};

use lsbmark::{AttackKind, AttackSpec, SelectionMode};
use wasm_bindgen::prelude::*;

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
#[derive(Clone, Copy)]
pub struct EmbedStats {
    pub mse: f64,
    pub psnr: f64,
    pub one_channel: usize,
    pub two_channels: usize,
    pub three_channels: usize,
}

#[wasm_bindgen]
#[derive(Clone, Copy)]
pub struct AttackScores {
    pub nc: f64,
    pub sc: f64,
    pub mse: f64,
    pub psnr: f64,
}

#[wasm_bindgen]
pub struct Demo {
    inner: Session,
}

#[wasm_bindgen]
impl Demo {
    #[wasm_bindgen(constructor)]
    pub fn new(side: usize, key_seed: u32) -> Result<Demo, JsError> {
        Session::new(side, u64::from(key_seed)).map(|inner| Demo { inner }).map_err(js_err)
    }

    pub fn side(&self) -> usize {
        self.inner.side()
    }

    /// Replace the cover with an uploaded PNG/BMP/JPEG file.
    pub fn load_cover(&mut self, bytes: &[u8], key_seed: u32) -> Result<(), JsError> {
        self.inner.load_cover(bytes, u64::from(key_seed)).map_err(js_err)
    }

    pub fn set_stable(&mut self, stable: bool) -> Result<(), JsError> {
        let mode = if stable { SelectionMode::Stable } else { SelectionMode::PaperFaithful };
        self.inner.set_mode(mode).map_err(js_err)
    }

    pub fn set_key_seed(&mut self, seed: u32) -> Result<(), JsError> {
        self.inner.set_key_seed(u64::from(seed)).map_err(js_err)
    }

    pub fn embed_stats(&self) -> EmbedStats {
        let q = self.inner.embed_quality();
        let c = self.inner.capacity();
        EmbedStats {
            mse: q.mse,
            psnr: q.psnr,
            one_channel: c.one,
            two_channels: c.two,
            three_channels: c.three,
        }
    }

    /// `kind` is one of crop, jpeg, blur, saltpepper.
    pub fn attack(&mut self, kind: &str, strength: f64, seed: u32) -> Result<AttackScores, JsError> {
        let kind: AttackKind = kind.parse().map_err(js_err)?;
        let o = self
            .inner
            .attack(AttackSpec::new(kind, strength, u64::from(seed)))
            .map_err(js_err)?;
        Ok(AttackScores {
            nc: o.nc,
            sc: o.sc,
            mse: o.mse,
            psnr: o.psnr,
        })
    }

    pub fn nc_curve(&self, kind: &str, strengths: Vec<f64>, seeds: u32) -> Result<Vec<f64>, JsError> {
        let kind: AttackKind = kind.parse().map_err(js_err)?;
        self.inner.nc_curve(kind, &strengths, u64::from(seeds)).map_err(js_err)
    }

    pub fn cover_rgba(&self) -> Vec<u8> {
        self.inner.cover().to_rgba()
    }

    pub fn marked_rgba(&self) -> Vec<u8> {
        self.inner.marked().to_rgba()
    }

    pub fn diff_rgba(&self) -> Vec<u8> {
        self.inner.diff_view().to_rgba()
    }

    pub fn mask_rgba(&self) -> Vec<u8> {
        self.inner.mask_view().to_rgba()
    }

    pub fn watermark_rgba(&self) -> Vec<u8> {
        bits_view(self.inner.watermark()).to_rgba()
    }

    pub fn masked_watermark_rgba(&self) -> Vec<u8> {
        bits_view(&self.inner.masked_watermark()).to_rgba()
    }

    pub fn attacked_rgba(&self) -> Vec<u8> {
        self.inner.attacked().to_rgba()
    }

    pub fn extracted_rgba(&self) -> Vec<u8> {
        bits_view(self.inner.extracted()).to_rgba()
    }
}
