//! Grayscale rasters with real-valued samples, plus PGM/PNG I/O and the
//! symmetric padding used to bring arbitrary sizes onto the transform grid.
//!
//! Samples follow the 8-bit intensity convention (nominally 0..=255) but are
//! stored as `f64` so noise and reconstruction keep full precision. Clamping
//! and rounding happen only in [`save_image`].

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Width and height of a raster, in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dims {
    pub width: usize,
    pub height: usize,
}

impl Dims {
    pub fn new(width: usize, height: usize) -> Self {
        Self { width, height }
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }
}

impl std::fmt::Display for Dims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

/// A row-major 2D raster of finite real samples.
///
/// Also used for wavelet coefficient blocks, which share the layout.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    width: usize,
    height: usize,
    samples: Vec<f64>,
}

impl Image {
    /// Builds an image from row-major samples.
    ///
    /// Fails if either dimension is zero, the sample count is not
    /// `width * height`, or any sample is NaN/infinite.
    pub fn new(width: usize, height: usize, samples: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Dimensions(format!(
                "image dimensions must be at least 1x1 (got {width}x{height})"
            )));
        }
        if samples.len() != width * height {
            return Err(Error::Dimensions(format!(
                "{width}x{height} image needs {} samples, got {}",
                width * height,
                samples.len()
            )));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "sample {i} is not finite ({})",
                samples[i]
            )));
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    /// Image with every sample equal to `value`.
    pub fn filled(width: usize, height: usize, value: f64) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    /// Builds an image by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self> {
        let mut samples = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                samples.push(f(x, y));
            }
        }
        Self::new(width, height, samples)
    }

    // Internal constructor for transform code whose arithmetic cannot
    // introduce non-finite values from finite inputs.
    pub(crate) fn from_raw(width: usize, height: usize, samples: Vec<f64>) -> Self {
        debug_assert_eq!(samples.len(), width * height);
        Self {
            width,
            height,
            samples,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> Dims {
        Dims::new(self.width, self.height)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Row-major samples.
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub(crate) fn samples_mut(&mut self) -> &mut [f64] {
        &mut self.samples
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.samples[y * self.width + x]
    }

    pub fn row(&self, y: usize) -> &[f64] {
        &self.samples[y * self.width..(y + 1) * self.width]
    }

    /// Applies `f` to every sample. Fails if `f` produces a non-finite value.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(
            self.width,
            self.height,
            self.samples.iter().map(|&v| f(v)).collect(),
        )
    }

    /// Samples clamped to 0..=255 and rounded half away from zero, as stored on disk.
    pub fn quantized(&self) -> Self {
        Self::from_raw(
            self.width,
            self.height,
            self.samples.iter().map(|&v| quantize(v) as f64).collect(),
        )
    }
}

fn quantize(v: f64) -> u8 {
    // f64::round rounds half away from zero.
    v.clamp(0.0, 255.0).round() as u8
}

/// Reads an 8-bit grayscale PGM (P2 or P5, maxval 255) or an 8-bit PNG.
///
/// PNG files may be grayscale or RGB (alpha is ignored); color is reduced
/// to luma `0.299 R + 0.587 G + 0.114 B` without rounding.
pub fn load_image(path: impl AsRef<Path>) -> Result<Image> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    if bytes.starts_with(b"P2") || bytes.starts_with(b"P5") {
        parse_pgm(&bytes).map_err(|e| e.at(path))
    } else if bytes.starts_with(b"\x89PNG") {
        decode_png(&bytes, path)
    } else if bytes.first() == Some(&b'P') && bytes.len() > 1 {
        Err(Error::Unsupported {
            path: path.to_path_buf(),
            reason: format!(
                "netpbm magic P{} (only P2 and P5 grayscale are read)",
                bytes[1] as char
            ),
        })
    } else {
        Err(Error::Unsupported {
            path: path.to_path_buf(),
            reason: "file is neither PGM nor PNG".into(),
        })
    }
}

/// Writes `img` as binary P5 PGM, or as 8-bit grayscale PNG when the path
/// ends in `.png`. Samples are clamped to 0..=255 and rounded half away
/// from zero.
pub fn save_image(img: &Image, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let pixels: Vec<u8> = img.samples.iter().map(|&v| quantize(v)).collect();

    let is_png = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("png"));
    if is_png {
        let buf = image::GrayImage::from_raw(img.width as u32, img.height as u32, pixels)
            .expect("pixel count matches dimensions");
        return buf
            .save_with_format(path, image::ImageFormat::Png)
            .map_err(|e| match e {
                image::ImageError::IoError(source) => io_err(source),
                other => Error::Format {
                    path: path.to_path_buf(),
                    reason: other.to_string(),
                },
            });
    }

    let file = fs::File::create(path).map_err(io_err)?;
    let mut out = BufWriter::new(file);
    write!(out, "P5\n{} {}\n255\n", img.width, img.height).map_err(io_err)?;
    out.write_all(&pixels).map_err(io_err)?;
    out.flush().map_err(io_err)
}

struct PgmError(String, bool);

impl PgmError {
    fn malformed(reason: impl Into<String>) -> Self {
        Self(reason.into(), false)
    }

    fn unsupported(reason: impl Into<String>) -> Self {
        Self(reason.into(), true)
    }

    fn at(self, path: &Path) -> Error {
        let path = path.to_path_buf();
        if self.1 {
            Error::Unsupported {
                path,
                reason: self.0,
            }
        } else {
            Error::Format {
                path,
                reason: self.0,
            }
        }
    }
}

/// Cursor over a netpbm header: whitespace-separated tokens with `#` comments.
struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Header<'a> {
    fn skip_space(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_space();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }

    fn number(&mut self, what: &str) -> Result<usize, PgmError> {
        let tok = self
            .token()
            .ok_or_else(|| PgmError::malformed(format!("missing {what}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                PgmError::malformed(format!("invalid {what} {:?}", String::from_utf8_lossy(tok)))
            })
    }
}

fn parse_pgm(bytes: &[u8]) -> Result<Image, PgmError> {
    let binary = bytes[1] == b'5';
    let mut header = Header { bytes, pos: 2 };
    let width = header.number("width")?;
    let height = header.number("height")?;
    let maxval = header.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(PgmError::malformed(format!(
            "zero dimension {width}x{height}"
        )));
    }
    if maxval != 255 {
        return Err(PgmError::unsupported(format!(
            "maxval {maxval} (only 8-bit maxval 255 is supported)"
        )));
    }
    let count = width * height;

    let samples: Vec<f64> = if binary {
        // Exactly one whitespace byte separates the header from the raster.
        let start = header.pos + 1;
        let payload = bytes.get(start..).unwrap_or_default();
        if payload.len() < count {
            return Err(PgmError::malformed(format!(
                "truncated payload: expected {count} bytes, found {}",
                payload.len()
            )));
        }
        payload[..count].iter().map(|&b| b as f64).collect()
    } else {
        let mut samples = Vec::with_capacity(count);
        for i in 0..count {
            let v = match header.token() {
                Some(tok) => std::str::from_utf8(tok)
                    .ok()
                    .and_then(|s| s.parse::<u32>().ok()),
                None => {
                    return Err(PgmError::malformed(format!(
                        "truncated payload: expected {count} samples, found {i}"
                    )))
                }
            };
            match v {
                Some(v) if v <= 255 => samples.push(v as f64),
                _ => {
                    return Err(PgmError::malformed(format!(
                        "sample {i} is not an integer in 0..=255"
                    )))
                }
            }
        }
        samples
    };
    Ok(Image::from_raw(width, height, samples))
}

fn decode_png(bytes: &[u8], path: &Path) -> Result<Image> {
    use image::DynamicImage;

    let decoded =
        image::load_from_memory_with_format(bytes, image::ImageFormat::Png).map_err(|e| {
            Error::Format {
                path: path.to_path_buf(),
                reason: e.to_string(),
            }
        })?;
    let (width, height) = (decoded.width() as usize, decoded.height() as usize);
    let luma = |r: u8, g: u8, b: u8| 0.299 * r as f64 + 0.587 * g as f64 + 0.114 * b as f64;
    let samples: Vec<f64> = match decoded {
        DynamicImage::ImageLuma8(buf) => buf.into_raw().into_iter().map(f64::from).collect(),
        DynamicImage::ImageLumaA8(buf) => buf.pixels().map(|p| p[0] as f64).collect(),
        DynamicImage::ImageRgb8(buf) => buf.pixels().map(|p| luma(p[0], p[1], p[2])).collect(),
        DynamicImage::ImageRgba8(buf) => buf.pixels().map(|p| luma(p[0], p[1], p[2])).collect(),
        other => {
            return Err(Error::Unsupported {
                path: path.to_path_buf(),
                reason: format!(
                    "PNG color type {:?} (only 8-bit grayscale or RGB)",
                    other.color()
                ),
            })
        }
    };
    Image::new(width, height, samples)
}

/// Reflects index `i` into `0..n` with whole-sample symmetry: `[a,b,c]`
/// extends as `a b c b a b c ...`.
fn reflect(i: usize, n: usize) -> usize {
    if i < n {
        return i;
    }
    let period = 2 * (n - 1);
    if period == 0 {
        return 0;
    }
    let m = i % period;
    if m < n {
        m
    } else {
        period - m
    }
}

/// Pads `img` on the right and bottom to the next multiples of `multiple`
/// using whole-sample symmetric reflection. Returns the padded image and
/// the original dimensions for [`crop`].
pub fn pad_symmetric(img: &Image, multiple: usize) -> Result<(Image, Dims)> {
    if multiple == 0 {
        return Err(Error::InvalidArgument(
            "padding multiple must be at least 1".into(),
        ));
    }
    let dims = img.dims();
    let width = dims.width.div_ceil(multiple) * multiple;
    let height = dims.height.div_ceil(multiple) * multiple;
    if (width, height) == (dims.width, dims.height) {
        return Ok((img.clone(), dims));
    }
    let padded = Image::from_fn(width, height, |x, y| {
        img.get(reflect(x, dims.width), reflect(y, dims.height))
    })?;
    Ok((padded, dims))
}

/// Top-left `dims` sub-raster of `img`.
pub fn crop(img: &Image, dims: Dims) -> Result<Image> {
    if dims.width > img.width || dims.height > img.height {
        return Err(Error::Dimensions(format!(
            "cannot crop {} image to {}",
            img.dims(),
            dims
        )));
    }
    Image::from_fn(dims.width, dims.height, |x, y| img.get(x, y))
}
