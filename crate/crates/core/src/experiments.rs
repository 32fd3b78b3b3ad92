//! Experiment runners: single-image entropy summaries for all 16 binary 2x2
//! patterns, the exhaustive patron-vs-candidate comparison, pixel-value
//! sweeps, and the cyclic translation scan. Rows are emitted in ascending
//! order of the row key.

use crate::error::{Error, Result};
use crate::frqi::{encode_frqi, encode_joint, position_labels, QubitLabel};
use crate::image::{read_pgm, Image};
use crate::measures::{
    clamp_tiny_negative, classical_entropies, correlation_report, joint_histogram,
    von_neumann_entropy, ClassicalMeasures, CorrelationReport,
};

/// Purities and entropies of the color/position split of one image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropySummary {
    pub purity_cp: f64,
    pub purity_c: f64,
    pub purity_p: f64,
    pub s_color: f64,
    pub s_position: f64,
}

/// Encode one image and reduce to the color and position subsystems.
pub fn entropy_summary(image: &Image) -> Result<EntropySummary> {
    let rho = encode_frqi(image).density();
    let color = rho.partial_trace(&[QubitLabel::ColorA])?;
    let position = rho.partial_trace(&position_labels(image.position_qubits()))?;
    Ok(EntropySummary {
        purity_cp: rho.purity(),
        purity_c: color.purity(),
        purity_p: position.purity(),
        s_color: von_neumann_entropy(&color)?,
        s_position: von_neumann_entropy(&position)?,
    })
}

/// One row of the binary-pattern entropy table.
#[derive(Debug, Clone)]
pub struct Table1Row {
    /// Pattern label; leftmost character is pixel 0.
    pub pattern: String,
    pub measures: EntropySummary,
}

/// Entropy summaries for all 16 binary 2x2 patterns, 0000 through 1111.
pub fn run_table1() -> Result<Vec<Table1Row>> {
    (0..16)
        .map(|index| {
            let pattern = format!("{index:04b}");
            let image = Image::from_bit_pattern(&pattern)?;
            Ok(Table1Row {
                pattern,
                measures: entropy_summary(&image)?,
            })
        })
        .collect()
}

/// Correlation reports of a binary 2x2 patron against all 16 candidate
/// patterns; row k is the candidate with label `format!("{k:04b}")`.
pub fn run_table2(patron: &Image) -> Result<Vec<CorrelationReport>> {
    if patron.side() != 2 {
        return Err(Error::UnexpectedSide {
            expected: 2,
            got: patron.side(),
        });
    }
    patron.require_binary()?;
    (0..16)
        .map(|index| {
            let candidate = Image::from_bit_pattern(&format!("{index:04b}"))?;
            correlation_report(patron, &candidate)
        })
        .collect()
}

/// One row of a pixel-value sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    pub x: u8,
    /// Entropy of the two-color subsystem.
    pub s_ab: f64,
    pub total_correlation: f64,
    /// Classical joint entropy of the same pair.
    pub h_ab: f64,
}

/// For each x in 0..=255, set pixel `pixel_index` of `base_b` to x and
/// compare against `base_a`.
pub fn run_sweep(base_a: &Image, base_b: &Image, pixel_index: usize) -> Result<Vec<SweepRow>> {
    if base_a.side() != base_b.side() {
        return Err(Error::SideMismatch(base_a.side(), base_b.side()));
    }
    use QubitLabel::{ColorA, ColorB};
    let positions = position_labels(base_a.position_qubits());
    (0..=255u8)
        .map(|x| {
            let b = base_b.with_pixel(pixel_index, x)?;
            let rho = encode_joint(base_a, &b)?.density();
            let s_a = von_neumann_entropy(&rho.partial_trace(&[ColorA])?)?;
            let s_b = von_neumann_entropy(&rho.partial_trace(&[ColorB])?)?;
            let s_ab = von_neumann_entropy(&rho.partial_trace(&[ColorA, ColorB])?)?;
            let s_12 = von_neumann_entropy(&rho.partial_trace(&positions)?)?;
            let s_full = von_neumann_entropy(&rho)?;
            let classical = classical_entropies(&joint_histogram(base_a, &b)?);
            Ok(SweepRow {
                x,
                s_ab,
                total_correlation: clamp_tiny_negative(s_a + s_b + s_12 - s_full),
                h_ab: classical.h_ab,
            })
        })
        .collect()
}

/// One row of the translation scan.
#[derive(Debug, Clone, Copy)]
pub struct TranslateRow {
    pub shift: usize,
    pub s_a: f64,
    pub s_b: f64,
    pub s_ab: f64,
    /// Quantum I(A;B) between the two color qubits.
    pub mutual_ab: f64,
    pub total_correlation: f64,
    pub classical: ClassicalMeasures,
}

/// Remap a binary patron to the grays (low, high), then compare it against
/// every cyclic translation of itself, one row per shift.
pub fn run_translate(patron: &Image, low_gray: u8, high_gray: u8) -> Result<Vec<TranslateRow>> {
    let reference = patron.remap_binary(low_gray, high_gray)?;
    use QubitLabel::{ColorA, ColorB};
    let positions = position_labels(reference.position_qubits());
    (0..reference.pixel_count())
        .map(|shift| {
            let shifted = reference.translate_cyclic(shift)?;
            let rho = encode_joint(&reference, &shifted)?.density();
            let s_a = von_neumann_entropy(&rho.partial_trace(&[ColorA])?)?;
            let s_b = von_neumann_entropy(&rho.partial_trace(&[ColorB])?)?;
            let s_ab = von_neumann_entropy(&rho.partial_trace(&[ColorA, ColorB])?)?;
            let s_12 = von_neumann_entropy(&rho.partial_trace(&positions)?)?;
            let s_full = von_neumann_entropy(&rho)?;
            let classical = classical_entropies(&joint_histogram(&reference, &shifted)?);
            Ok(TranslateRow {
                shift,
                s_a,
                s_b,
                s_ab,
                mutual_ab: clamp_tiny_negative(s_a + s_b - s_ab),
                total_correlation: clamp_tiny_negative(s_a + s_b + s_12 - s_full),
                classical,
            })
        })
        .collect()
}

const DEFAULT_PATRON_PGM: &[u8] = include_bytes!("../assets/patron8.pgm");

/// The shipped 8x8 patron: a two-pixel-wide diagonal stripe that wraps, white
/// where (col - row) mod 8 is 0 or 1. Its classical mutual information over
/// the 64-shift scan peaks strictly at shift 0.
pub fn default_patron() -> Image {
    read_pgm(DEFAULT_PATRON_PGM).expect("embedded patron asset is valid")
}
