use super::transform::{analyze, synthesize};
use super::{get_filter_bank, WaveletFilterBank};
use crate::error::{Error, Result};
use crate::image::{Dims, Image};

/// A 2D coefficient block; shares the raster layout of [`Image`].
pub type Block = Image;

/// Detail subband orientation. The first letter names the filter applied
/// along rows (horizontal), the second the filter applied along columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// Row low-pass, column high-pass (horizontal edges).
    LH,
    /// Row high-pass, column low-pass (vertical edges).
    HL,
    /// High-pass both ways (diagonal detail).
    HH,
}

impl Orientation {
    pub const ALL: [Orientation; 3] = [Orientation::LH, Orientation::HL, Orientation::HH];

    pub fn as_str(&self) -> &'static str {
        match self {
            Orientation::LH => "LH",
            Orientation::HL => "HL",
            Orientation::HH => "HH",
        }
    }
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The three detail blocks of one decomposition level.
#[derive(Debug, Clone, PartialEq)]
pub struct DetailLevel {
    pub lh: Block,
    pub hl: Block,
    pub hh: Block,
}

impl DetailLevel {
    pub fn get(&self, orientation: Orientation) -> &Block {
        match orientation {
            Orientation::LH => &self.lh,
            Orientation::HL => &self.hl,
            Orientation::HH => &self.hh,
        }
    }

    pub fn get_mut(&mut self, orientation: Orientation) -> &mut Block {
        match orientation {
            Orientation::LH => &mut self.lh,
            Orientation::HL => &mut self.hl,
            Orientation::HH => &mut self.hh,
        }
    }
}

/// Multi-level 2D decomposition. `details[0]` is level 1 (finest);
/// `approx` is the LL block of the deepest level.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveletPyramid {
    pub approx: Block,
    pub details: Vec<DetailLevel>,
    pub basis: String,
    pub original_dims: Dims,
}

impl WaveletPyramid {
    pub fn levels(&self) -> usize {
        self.details.len()
    }

    /// Detail block at `level` (1-based, 1 = finest).
    pub fn detail(&self, level: usize, orientation: Orientation) -> &Block {
        self.details[level - 1].get(orientation)
    }

    pub fn coefficient_count(&self) -> usize {
        self.approx.len()
            + self
                .details
                .iter()
                .map(|d| d.lh.len() + d.hl.len() + d.hh.len())
                .sum::<usize>()
    }

    /// Every coefficient, approximation first then levels finest to coarsest.
    pub fn coefficients(&self) -> impl Iterator<Item = f64> + '_ {
        self.approx
            .samples()
            .iter()
            .copied()
            .chain(self.details.iter().flat_map(|d| {
                Orientation::ALL
                    .into_iter()
                    .flat_map(move |o| d.get(o).samples().iter().copied())
            }))
    }
}

fn check_divisible(dims: Dims, levels: usize) -> Result<()> {
    if levels == 0 {
        return Err(Error::InvalidArgument(
            "decomposition needs at least one level".into(),
        ));
    }
    let multiple = 1usize.checked_shl(levels as u32).unwrap_or(0);
    if multiple == 0 || dims.width % multiple != 0 || dims.height % multiple != 0 {
        return Err(Error::Dimensions(format!(
            "{dims} image cannot be decomposed to {levels} levels: width and height must be multiples of {multiple}"
        )));
    }
    Ok(())
}

/// Splits every row into low/high halves.
fn split_rows(src: &Block, bank: &WaveletFilterBank) -> (Block, Block) {
    let (w, h) = (src.width(), src.height());
    let half = w / 2;
    let mut lo = vec![0.0; half * h];
    let mut hi = vec![0.0; half * h];
    for y in 0..h {
        analyze(
            src.row(y),
            bank,
            &mut lo[y * half..(y + 1) * half],
            &mut hi[y * half..(y + 1) * half],
        );
    }
    (Block::from_raw(half, h, lo), Block::from_raw(half, h, hi))
}

/// Splits every column into low (top) and high halves.
fn split_cols(src: &Block, bank: &WaveletFilterBank) -> (Block, Block) {
    let (w, h) = (src.width(), src.height());
    let half = h / 2;
    let mut lo = vec![0.0; w * half];
    let mut hi = vec![0.0; w * half];
    let mut column = vec![0.0; h];
    let (mut a, mut d) = (vec![0.0; half], vec![0.0; half]);
    for x in 0..w {
        for (y, c) in column.iter_mut().enumerate() {
            *c = src.get(x, y);
        }
        analyze(&column, bank, &mut a, &mut d);
        for k in 0..half {
            lo[k * w + x] = a[k];
            hi[k * w + x] = d[k];
        }
    }
    (Block::from_raw(w, half, lo), Block::from_raw(w, half, hi))
}

fn merge_cols(lo: &Block, hi: &Block, bank: &WaveletFilterBank) -> Block {
    let (w, half) = (lo.width(), lo.height());
    let h = 2 * half;
    let mut out = vec![0.0; w * h];
    let (mut a, mut d) = (vec![0.0; half], vec![0.0; half]);
    let mut column = vec![0.0; h];
    for x in 0..w {
        for k in 0..half {
            a[k] = lo.get(x, k);
            d[k] = hi.get(x, k);
        }
        synthesize(&a, &d, bank, &mut column);
        for (y, &v) in column.iter().enumerate() {
            out[y * w + x] = v;
        }
    }
    Block::from_raw(w, h, out)
}

fn merge_rows(lo: &Block, hi: &Block, bank: &WaveletFilterBank) -> Block {
    let (half, h) = (lo.width(), lo.height());
    let w = 2 * half;
    let mut out = vec![0.0; w * h];
    for y in 0..h {
        synthesize(lo.row(y), hi.row(y), bank, &mut out[y * w..(y + 1) * w]);
    }
    Block::from_raw(w, h, out)
}

/// Separable multi-level 2D DWT: rows then columns at each level,
/// recursing on LL.
pub fn dwt2d(img: &Image, bank: &WaveletFilterBank, levels: usize) -> Result<WaveletPyramid> {
    check_divisible(img.dims(), levels)?;
    let mut approx = img.clone();
    let mut details = Vec::with_capacity(levels);
    for _ in 0..levels {
        let (row_lo, row_hi) = split_rows(&approx, bank);
        let (ll, lh) = split_cols(&row_lo, bank);
        let (hl, hh) = split_cols(&row_hi, bank);
        details.push(DetailLevel { lh, hl, hh });
        approx = ll;
    }
    Ok(WaveletPyramid {
        approx,
        details,
        basis: bank.name().to_string(),
        original_dims: img.dims(),
    })
}

/// Inverse of [`dwt2d`]; the basis is looked up from the pyramid.
pub fn idwt2d(pyr: &WaveletPyramid) -> Result<Image> {
    let bank = get_filter_bank(&pyr.basis)?;
    check_divisible(pyr.original_dims, pyr.levels())?;
    for (i, level) in pyr.details.iter().enumerate() {
        let k = i + 1;
        let want = Dims::new(pyr.original_dims.width >> k, pyr.original_dims.height >> k);
        for o in Orientation::ALL {
            let got = level.get(o).dims();
            if got != want {
                return Err(Error::Dimensions(format!(
                    "level {k} {o} block is {got}, expected {want}"
                )));
            }
        }
    }
    let deepest = pyr.levels();
    let want = Dims::new(
        pyr.original_dims.width >> deepest,
        pyr.original_dims.height >> deepest,
    );
    if pyr.approx.dims() != want {
        return Err(Error::Dimensions(format!(
            "approximation block is {}, expected {want}",
            pyr.approx.dims()
        )));
    }

    let mut current = pyr.approx.clone();
    for level in pyr.details.iter().rev() {
        let row_lo = merge_cols(&current, &level.lh, &bank);
        let row_hi = merge_cols(&level.hl, &level.hh, &bank);
        current = merge_rows(&row_lo, &row_hi, &bank);
    }
    Ok(current)
}
