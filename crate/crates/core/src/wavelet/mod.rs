//! Periodic discrete wavelet transforms over analysis/synthesis filter banks.
//!
//! The transform extends signals circularly, so a length-`n` signal yields
//! exactly `n` coefficients and orthogonal bases preserve energy. Images
//! whose sides are not multiples of `2^levels` must be padded first (see
//! [`crate::image::pad_symmetric`]).

mod filters;
mod pyramid;
mod tables;
mod transform;

pub use filters::{get_filter_bank, Family, WaveletFilterBank, FILTER_TOLERANCE, SUPPORTED_BASES};
pub use pyramid::{dwt2d, idwt2d, Block, DetailLevel, Orientation, WaveletPyramid};
pub use transform::{dwt1d, idwt1d};
