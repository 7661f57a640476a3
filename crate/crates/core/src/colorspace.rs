//! RGB to HSI conversion and the intensity-gated channel selection.
//!
//! Only intensity drives embedding. Hue and saturation are computed for
//! diagnostics.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    R,
    G,
    B,
}

impl Channel {
    /// In tie-break priority order.
    pub const ALL: [Channel; 3] = [Channel::R, Channel::G, Channel::B];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    const fn bit(self) -> u8 {
        1 << self as u8
    }
}

/// Non-empty subset of {R, G, B} selected for embedding at one pixel.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChannelMask(u8);

impl ChannelMask {
    pub const ALL: ChannelMask = ChannelMask(0b111);

    /// Builds a mask from channels; `None` if the set is empty.
    pub fn from_channels(channels: &[Channel]) -> Option<Self> {
        let bits = channels.iter().fold(0, |acc, c| acc | c.bit());
        (bits != 0).then_some(ChannelMask(bits))
    }

    #[inline]
    pub fn contains(self, channel: Channel) -> bool {
        self.0 & channel.bit() != 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Selected channels in priority order R, G, B.
    pub fn iter(self) -> impl Iterator<Item = Channel> {
        Channel::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for ChannelMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// How the channel mask is evaluated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum SelectionMode {
    /// Compare raw channel values against the intensity. Embedding can move
    /// a borderline pixel across the threshold, so extraction may disagree.
    PaperFaithful,
    /// Compare values with their LSB cleared. LSB substitution can never
    /// change the mask, so embed and extract always agree.
    #[default]
    Stable,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HsiPixel {
    /// Degrees in [0, 360).
    pub h: f64,
    /// In [0, 1].
    pub s: f64,
    /// In [0, 255].
    pub i: f64,
}

pub fn rgb_to_hsi(r: u8, g: u8, b: u8) -> HsiPixel {
    let (rf, gf, bf) = (f64::from(r), f64::from(g), f64::from(b));
    let sum = u32::from(r) + u32::from(g) + u32::from(b);
    let min = r.min(g).min(b);

    let s = if sum == 0 {
        0.0
    } else {
        (1.0 - f64::from(3 * u32::from(min)) / f64::from(sum)).clamp(0.0, 1.0)
    };

    // (R-G)^2 + (R-B)(G-B) vanishes only when R = G = B.
    let den = ((rf - gf).powi(2) + (rf - bf) * (gf - bf)).sqrt();
    let h = if den == 0.0 {
        0.0
    } else {
        let num = 0.5 * ((rf - gf) + (rf - bf));
        let theta = (num / den).clamp(-1.0, 1.0).acos().to_degrees();
        let h = if b <= g { theta } else { 360.0 - theta };
        if h >= 360.0 {
            0.0
        } else {
            h
        }
    };

    HsiPixel {
        h,
        s,
        i: f64::from(sum) / 3.0,
    }
}

/// Three times the intensity, exact: `r + g + b`.
#[inline]
pub fn intensity_sum(r: u8, g: u8, b: u8) -> u16 {
    u16::from(r) + u16::from(g) + u16::from(b)
}

#[inline]
pub fn intensity(r: u8, g: u8, b: u8) -> f64 {
    f64::from(intensity_sum(r, g, b)) / 3.0
}

/// Channels whose value is at least the pixel intensity, compared exactly
/// as `3 * value >= r + g + b`.
#[inline]
pub fn select_channels(px: [u8; 3], mode: SelectionMode) -> ChannelMask {
    let [r, g, b] = match mode {
        SelectionMode::PaperFaithful => px,
        SelectionMode::Stable => px.map(|v| v & !1),
    };
    let sum = intensity_sum(r, g, b);
    let mut bits = 0;
    for (c, v) in Channel::ALL.into_iter().zip([r, g, b]) {
        if 3 * u16::from(v) >= sum {
            bits |= c.bit();
        }
    }
    debug_assert_ne!(bits, 0);
    ChannelMask(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mask(cs: &[Channel]) -> ChannelMask {
        ChannelMask::from_channels(cs).unwrap()
    }

    #[test]
    fn hsi_spot_values() {
        let gray = rgb_to_hsi(100, 100, 100);
        assert_eq!((gray.h, gray.s, gray.i), (0.0, 0.0, 100.0));

        let black = rgb_to_hsi(0, 0, 0);
        assert_eq!((black.h, black.s, black.i), (0.0, 0.0, 0.0));

        // theta = acos(125 / sqrt(17500))
        let px = rgb_to_hsi(200, 100, 50);
        let theta = (125.0 / 17500f64.sqrt()).acos().to_degrees();
        assert!((px.h - theta).abs() < 1e-12);
        assert!((px.h - 19.11).abs() < 0.01);
        assert!((px.s - 4.0 / 7.0).abs() < 1e-12);
        assert!((px.i - 350.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn hue_reflects_when_blue_exceeds_green() {
        let a = rgb_to_hsi(200, 50, 100);
        let b = rgb_to_hsi(200, 100, 50);
        assert!((a.h - (360.0 - b.h)).abs() < 1e-9);
    }

    #[test]
    fn intensity_values() {
        assert_eq!(intensity(0, 0, 0), 0.0);
        assert_eq!(intensity(255, 255, 255), 255.0);
        assert!((intensity(200, 100, 50) - 116.666_666_666_666_67).abs() < 1e-12);
    }

    #[test]
    fn selection_examples() {
        use Channel::*;
        for mode in [SelectionMode::PaperFaithful, SelectionMode::Stable] {
            assert_eq!(select_channels([100, 100, 100], mode), ChannelMask::ALL);
            assert_eq!(select_channels([200, 100, 50], mode), mask(&[R]));
        }
        assert_eq!(select_channels([200, 150, 50], SelectionMode::Stable), mask(&[R, G]));
    }

    #[test]
    fn stable_mask_ignores_lsbs() {
        use Channel::*;
        // Raw: 303 >= 303 selects R. LSB-cleared: (100, 100, 102), 300 < 302.
        assert_eq!(select_channels([101, 100, 102], SelectionMode::PaperFaithful), mask(&[R, B]));
        assert_eq!(select_channels([101, 100, 102], SelectionMode::Stable), mask(&[B]));
        assert_eq!(select_channels([100, 100, 102], SelectionMode::PaperFaithful), mask(&[B]));
    }

    /// Every high-bit triple with every LSB assignment: 2^24 checks.
    #[test]
    fn stable_mask_is_invariant_exhaustively() {
        for hi in 0u32..(1 << 21) {
            let base = [(hi >> 14) as u8 * 2, ((hi >> 7) & 0x7f) as u8 * 2, (hi & 0x7f) as u8 * 2];
            let expected = select_channels(base, SelectionMode::Stable);
            assert!(!expected.is_empty());
            for lsb in 1u8..8 {
                let px = [base[0] | (lsb & 1), base[1] | ((lsb >> 1) & 1), base[2] | ((lsb >> 2) & 1)];
                assert_eq!(select_channels(px, SelectionMode::Stable), expected, "{px:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn mask_never_empty(r: u8, g: u8, b: u8) {
            prop_assert!(!select_channels([r, g, b], SelectionMode::PaperFaithful).is_empty());
            prop_assert!(!select_channels([r, g, b], SelectionMode::Stable).is_empty());
        }

        #[test]
        fn achromatic_selects_all(v: u8) {
            prop_assert_eq!(select_channels([v, v, v], SelectionMode::PaperFaithful), ChannelMask::ALL);
            prop_assert_eq!(select_channels([v, v, v], SelectionMode::Stable), ChannelMask::ALL);
            prop_assert_eq!(rgb_to_hsi(v, v, v).s, 0.0);
        }

        #[test]
        fn hsi_ranges(r: u8, g: u8, b: u8) {
            let px = rgb_to_hsi(r, g, b);
            prop_assert!((0.0..360.0).contains(&px.h));
            prop_assert!((0.0..=1.0).contains(&px.s));
            prop_assert!((0.0..=255.0).contains(&px.i));
            prop_assert!((px.i - (f64::from(r) + f64::from(g) + f64::from(b)) / 3.0).abs() < 1e-12);
        }

        #[test]
        fn lsb_substitution_moves_intensity_by_at_most_one(r: u8, g: u8, b: u8, lsbs in 0u8..8) {
            let after = [(r & !1) | (lsbs & 1), (g & !1) | ((lsbs >> 1) & 1), (b & !1) | (lsbs >> 2)];
            let delta = intensity(after[0], after[1], after[2]) - intensity(r, g, b);
            prop_assert!(delta.abs() <= 1.0);
        }
    }

    #[test]
    fn hsi_ranges_on_lattice() {
        for r in (0..=255u8).step_by(5) {
            for g in (0..=255u8).step_by(5) {
                for b in (0..=255u8).step_by(5) {
                    let px = rgb_to_hsi(r, g, b);
                    assert!((0.0..360.0).contains(&px.h) && (0.0..=1.0).contains(&px.s));
                }
            }
        }
    }
}
