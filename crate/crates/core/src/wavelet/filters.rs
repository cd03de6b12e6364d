use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::sync::OnceLock;

use super::tables::*;
use crate::error::{Error, Result};

/// Tolerance for the filter-bank identities.
pub const FILTER_TOLERANCE: f64 = 1e-10;

/// Every basis identifier accepted by [`get_filter_bank`].
pub const SUPPORTED_BASES: &[&str] = &[
    "haar", "db1", "db2", "db3", "db4", "db5", "db6", "db7", "db8", "db9", "db10", "sym2", "sym3",
    "sym4", "sym5", "sym6", "sym7", "sym8", "bior1.1", "bior1.3", "bior1.5", "bior2.2", "bior3.5",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Orthogonal,
    Biorthogonal,
}

/// Analysis/synthesis low- and high-pass filters for one wavelet basis.
///
/// Filters are stored in convolution order. The high-pass filters follow
/// from the low-pass pair by the alternating-sign quadrature relation
/// `analysis_hi[n] = (-1)^(n+1) synthesis_lo[n]` and
/// `synthesis_hi[n] = (-1)^n analysis_lo[n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveletFilterBank {
    name: String,
    family: Family,
    vanishing_moments: usize,
    analysis_lo: Vec<f64>,
    analysis_hi: Vec<f64>,
    synthesis_lo: Vec<f64>,
    synthesis_hi: Vec<f64>,
    // Analysis filters in correlation order, as the transform consumes them.
    pub(crate) corr_lo: Vec<f64>,
    pub(crate) corr_hi: Vec<f64>,
}

impl WaveletFilterBank {
    fn new(
        name: &str,
        family: Family,
        vanishing_moments: usize,
        analysis_lo: &[f64],
        synthesis_lo: &[f64],
    ) -> Self {
        let sign = |n: usize| if n % 2 == 0 { 1.0 } else { -1.0 };
        let analysis_hi: Vec<f64> = synthesis_lo
            .iter()
            .enumerate()
            .map(|(n, &v)| -sign(n) * v)
            .collect();
        let synthesis_hi: Vec<f64> = analysis_lo
            .iter()
            .enumerate()
            .map(|(n, &v)| sign(n) * v)
            .collect();
        Self {
            name: name.to_string(),
            family,
            vanishing_moments,
            corr_lo: analysis_lo.iter().rev().copied().collect(),
            corr_hi: analysis_hi.iter().rev().copied().collect(),
            analysis_lo: analysis_lo.to_vec(),
            analysis_hi,
            synthesis_lo: synthesis_lo.to_vec(),
            synthesis_hi,
        }
    }

    fn orthogonal(name: &str, vanishing_moments: usize, lo: &[f64]) -> Self {
        let rev: Vec<f64> = lo.iter().rev().copied().collect();
        Self::new(name, Family::Orthogonal, vanishing_moments, lo, &rev)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of vanishing moments of the analysis wavelet.
    pub fn vanishing_moments(&self) -> usize {
        self.vanishing_moments
    }

    pub fn analysis_lo(&self) -> &[f64] {
        &self.analysis_lo
    }

    pub fn analysis_hi(&self) -> &[f64] {
        &self.analysis_hi
    }

    pub fn synthesis_lo(&self) -> &[f64] {
        &self.synthesis_lo
    }

    pub fn synthesis_hi(&self) -> &[f64] {
        &self.synthesis_hi
    }

    pub fn taps(&self) -> usize {
        self.analysis_lo.len()
    }

    /// Checks the algebraic identities the bank must satisfy, returning a
    /// description of the first violation.
    ///
    /// Orthogonal banks: `Σ lo = √2`, `Σ lo² = 1`, double-shift
    /// orthogonality, and synthesis equal to time-reversed analysis.
    /// Biorthogonal banks: `Σ analysis_lo · Σ synthesis_lo = 2` and
    /// biorthogonality of the low-pass pair under even shifts.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let tol = FILTER_TOLERANCE;
        let lo = &self.analysis_lo;
        let sum: f64 = lo.iter().sum();
        match self.family {
            Family::Orthogonal => {
                if (sum - SQRT_2).abs() > tol {
                    return Err(format!(
                        "{}: sum of low-pass taps {sum} != sqrt(2)",
                        self.name
                    ));
                }
                for k in 0..lo.len() / 2 {
                    let dot: f64 = (0..lo.len() - 2 * k).map(|n| lo[n] * lo[n + 2 * k]).sum();
                    let want = if k == 0 { 1.0 } else { 0.0 };
                    if (dot - want).abs() > tol {
                        return Err(format!(
                            "{}: double-shift product at shift {k} is {dot}",
                            self.name
                        ));
                    }
                }
                let reversed = lo.iter().rev().zip(&self.synthesis_lo).all(|(a, b)| a == b);
                if !reversed {
                    return Err(format!(
                        "{}: synthesis is not the time-reverse of analysis",
                        self.name
                    ));
                }
            }
            Family::Biorthogonal => {
                let product = sum * self.synthesis_lo.iter().sum::<f64>();
                if (product - 2.0).abs() > tol {
                    return Err(format!(
                        "{}: low-pass sum product {product} != 2",
                        self.name
                    ));
                }
                // Correlation-order analysis filter against the synthesis filter.
                let len = lo.len();
                for k in -(len as isize / 2)..=(len as isize / 2) {
                    let shift = 2 * k;
                    let dot: f64 = (0..len as isize)
                        .filter_map(|n| {
                            let m = n + shift;
                            (0..len as isize)
                                .contains(&m)
                                .then(|| self.corr_lo[n as usize] * self.synthesis_lo[m as usize])
                        })
                        .sum();
                    let want = if k == 0 { 1.0 } else { 0.0 };
                    if (dot - want).abs() > tol {
                        return Err(format!(
                            "{}: biorthogonality fails at shift {shift} ({dot})",
                            self.name
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

fn build_all() -> Vec<WaveletFilterBank> {
    let haar = [FRAC_1_SQRT_2, FRAC_1_SQRT_2];
    let db: [&[f64]; 9] = [
        &DB2_LO, &DB3_LO, &DB4_LO, &DB5_LO, &DB6_LO, &DB7_LO, &DB8_LO, &DB9_LO, &DB10_LO,
    ];
    let sym: [&[f64]; 7] = [
        &SYM2_LO, &SYM3_LO, &SYM4_LO, &SYM5_LO, &SYM6_LO, &SYM7_LO, &SYM8_LO,
    ];

    let mut banks = vec![
        WaveletFilterBank::orthogonal("haar", 1, &haar),
        WaveletFilterBank::orthogonal("db1", 1, &haar),
    ];
    for (i, lo) in db.iter().enumerate() {
        let order = i + 2;
        banks.push(WaveletFilterBank::orthogonal(
            &format!("db{order}"),
            order,
            lo,
        ));
    }
    for (i, lo) in sym.iter().enumerate() {
        let order = i + 2;
        banks.push(WaveletFilterBank::orthogonal(
            &format!("sym{order}"),
            order,
            lo,
        ));
    }
    let bior: [(&str, usize, &[f64], &[f64]); 5] = [
        ("bior1.1", 1, &BIOR11_DEC_LO, &BIOR11_REC_LO),
        ("bior1.3", 1, &BIOR13_DEC_LO, &BIOR13_REC_LO),
        ("bior1.5", 1, &BIOR15_DEC_LO, &BIOR15_REC_LO),
        ("bior2.2", 2, &BIOR22_DEC_LO, &BIOR22_REC_LO),
        ("bior3.5", 3, &BIOR35_DEC_LO, &BIOR35_REC_LO),
    ];
    for (name, moments, dec, rec) in bior {
        banks.push(WaveletFilterBank::new(
            name,
            Family::Biorthogonal,
            moments,
            dec,
            rec,
        ));
    }
    for bank in &banks {
        if let Err(e) = bank.check_invariants() {
            panic!("embedded filter table is corrupt: {e}");
        }
    }
    banks
}

fn registry() -> &'static [WaveletFilterBank] {
    static BANKS: OnceLock<Vec<WaveletFilterBank>> = OnceLock::new();
    BANKS.get_or_init(build_all)
}

/// Looks up a filter bank by basis identifier (case-insensitive).
pub fn get_filter_bank(name: &str) -> Result<WaveletFilterBank> {
    let wanted = name.trim().to_ascii_lowercase();
    registry()
        .iter()
        .find(|b| b.name == wanted)
        .cloned()
        .ok_or_else(|| Error::UnknownBasis {
            name: name.to_string(),
            supported: SUPPORTED_BASES.join(", "),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_supported_basis_resolves() {
        assert_eq!(registry().len(), SUPPORTED_BASES.len());
        for name in SUPPORTED_BASES {
            let bank = get_filter_bank(name).unwrap();
            assert_eq!(bank.name(), *name);
            bank.check_invariants().unwrap();
        }
    }

    #[test]
    fn haar_defining_case() {
        let bank = get_filter_bank("haar").unwrap();
        assert_eq!(bank.analysis_lo(), &[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        assert_eq!(bank.analysis_hi(), &[-FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        assert_eq!(bank.family(), Family::Orthogonal);
    }

    #[test]
    fn db5_is_ten_taps() {
        let bank = get_filter_bank("DB5").unwrap();
        assert_eq!(bank.taps(), 10);
        let sum: f64 = bank.analysis_lo().iter().sum();
        assert!((sum - SQRT_2).abs() < 1e-10);
        // Largest tap of the standard Daubechies-5 scaling filter.
        assert!((bank.analysis_lo()[7] - 0.7243085284377729).abs() < 1e-15);
    }

    #[test]
    fn unknown_basis_lists_supported() {
        let err = get_filter_bank("bior9.9").unwrap_err().to_string();
        assert!(err.contains("unknown basis"));
        assert!(err.contains("sym4"));
    }

    #[test]
    fn quadrature_relation() {
        for name in SUPPORTED_BASES {
            let b = get_filter_bank(name).unwrap();
            for n in 0..b.taps() {
                let s = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(b.analysis_hi()[n], -s * b.synthesis_lo()[n]);
                assert_eq!(b.synthesis_hi()[n], s * b.analysis_lo()[n]);
            }
        }
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut lo = DB4_LO;
        lo[3] += 1e-6;
        let bank = WaveletFilterBank::orthogonal("db4x", 4, &lo);
        assert!(bank.check_invariants().is_err());

        let mut rec = BIOR22_REC_LO;
        rec[2] += 1e-6;
        let bank =
            WaveletFilterBank::new("bior2.2x", Family::Biorthogonal, 2, &BIOR22_DEC_LO, &rec);
        assert!(bank.check_invariants().is_err());
    }
}
