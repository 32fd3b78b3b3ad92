//! Quantum and classical correlation measures: von Neumann entropy,
//! conditional entropy, mutual information, the three tripartite measures
//! (interaction information, total correlation, dual total correlation),
//! joint histograms, and the Shannon baselines. All entropies are in bits.

use crate::error::{Error, Result};
use crate::frqi::{encode_joint, DensityMatrix, QubitLabel};
use crate::image::Image;

/// Eigenvalues of a density matrix may dip this far below zero before the
/// input is rejected; anything in [-1e-9, 0) is treated as rounding noise.
pub const EIGENVALUE_FLOOR: f64 = -1e-9;

/// Zero out eigensolver noise on quantities that are nonnegative by theory.
/// Anything below the floor is left alone so real violations stay visible.
pub(crate) fn clamp_tiny_negative(value: f64) -> f64 {
    if (EIGENVALUE_FLOOR..0.0).contains(&value) {
        0.0
    } else {
        value
    }
}

/// S(rho) = -sum(lambda * log2(lambda)) with 0*log(0) = 0.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let spectrum = rho.matrix().eigenvalues()?;
    let mut entropy = 0.0;
    for &lambda in spectrum.values() {
        if lambda < EIGENVALUE_FLOOR {
            return Err(Error::NotDensity(lambda));
        }
        if lambda > 0.0 {
            entropy -= lambda * lambda.log2();
        }
    }
    Ok(entropy.max(0.0))
}

/// Entropy of the marginal on `part` (the full register is not re-traced).
fn entropy_of(rho: &DensityMatrix, part: &[QubitLabel]) -> Result<f64> {
    if part.len() == rho.register().len() {
        let mut selected = part.to_vec();
        selected.sort_unstable();
        let mut register = rho.register().to_vec();
        register.sort_unstable();
        if selected == register {
            return von_neumann_entropy(rho);
        }
    }
    von_neumann_entropy(&rho.partial_trace(part)?)
}

fn ensure_disjoint(part_a: &[QubitLabel], part_b: &[QubitLabel]) -> Result<()> {
    if part_a.iter().any(|l| part_b.contains(l)) {
        return Err(Error::OverlappingParts);
    }
    Ok(())
}

fn union(parts: &[&[QubitLabel]]) -> Vec<QubitLabel> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// S(A|B) = S(A, B) - S(B); may be negative for entangled states.
pub fn conditional_entropy(
    rho: &DensityMatrix,
    part_a: &[QubitLabel],
    part_b: &[QubitLabel],
) -> Result<f64> {
    ensure_disjoint(part_a, part_b)?;
    Ok(entropy_of(rho, &union(&[part_a, part_b]))? - entropy_of(rho, part_b)?)
}

/// I(A;B) = S(A) + S(B) - S(A, B), with eigensolver noise in [-1e-9, 0)
/// clamped to zero.
pub fn quantum_mutual_information(
    rho: &DensityMatrix,
    part_a: &[QubitLabel],
    part_b: &[QubitLabel],
) -> Result<f64> {
    ensure_disjoint(part_a, part_b)?;
    let mi = entropy_of(rho, part_a)? + entropy_of(rho, part_b)?
        - entropy_of(rho, &union(&[part_a, part_b]))?;
    Ok(clamp_tiny_negative(mi))
}

/// The three tripartite correlation measures of a partition (A, B, C).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripartiteMeasures {
    /// I0(A;B;C) = S(A)+S(B)+S(C) - S(A,B)-S(A,C)-S(B,C) + S(A,B,C).
    pub interaction: f64,
    /// IT(A;B;C) = S(A)+S(B)+S(C) - S(A,B,C).
    pub total_correlation: f64,
    /// ID(A;B;C) = S(A,B)+S(A,C)+S(B,C) - 2 S(A,B,C).
    pub dual_total_correlation: f64,
}

/// Computes I0, IT, ID from the seven subsystem entropies of a partition of
/// the register into three disjoint parts.
pub fn tripartite_measures(
    rho: &DensityMatrix,
    part_a: &[QubitLabel],
    part_b: &[QubitLabel],
    part_c: &[QubitLabel],
) -> Result<TripartiteMeasures> {
    ensure_disjoint(part_a, part_b)?;
    ensure_disjoint(part_a, part_c)?;
    ensure_disjoint(part_b, part_c)?;
    let mut all = union(&[part_a, part_b, part_c]);
    all.sort_unstable();
    let mut register: Vec<QubitLabel> = rho.register().to_vec();
    register.sort_unstable();
    if all != register {
        return Err(Error::NotPartition);
    }

    let s_a = entropy_of(rho, part_a)?;
    let s_b = entropy_of(rho, part_b)?;
    let s_c = entropy_of(rho, part_c)?;
    let s_ab = entropy_of(rho, &union(&[part_a, part_b]))?;
    let s_ac = entropy_of(rho, &union(&[part_a, part_c]))?;
    let s_bc = entropy_of(rho, &union(&[part_b, part_c]))?;
    let s_abc = von_neumann_entropy(rho)?;
    Ok(TripartiteMeasures {
        interaction: s_a + s_b + s_c - s_ab - s_ac - s_bc + s_abc,
        total_correlation: s_a + s_b + s_c - s_abc,
        dual_total_correlation: s_ab + s_ac + s_bc - 2.0 * s_abc,
    })
}

/// 256x256 co-occurrence counts of gray-value pairs at identical positions.
#[derive(Debug, Clone)]
pub struct JointHistogram {
    counts: Vec<u64>,
    total: u64,
}

impl JointHistogram {
    pub fn count(&self, a: u8, b: u8) -> u64 {
        self.counts[usize::from(a) * 256 + usize::from(b)]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Gray-level histogram of the first image (row sums).
    pub fn marginal_a(&self) -> [u64; 256] {
        let mut out = [0u64; 256];
        for (row, slot) in self.counts.chunks_exact(256).zip(out.iter_mut()) {
            *slot = row.iter().sum();
        }
        out
    }

    /// Gray-level histogram of the second image (column sums).
    pub fn marginal_b(&self) -> [u64; 256] {
        let mut out = [0u64; 256];
        for (i, &c) in self.counts.iter().enumerate() {
            out[i % 256] += c;
        }
        out
    }
}

pub fn joint_histogram(a: &Image, b: &Image) -> Result<JointHistogram> {
    if a.side() != b.side() {
        return Err(Error::SideMismatch(a.side(), b.side()));
    }
    let mut counts = vec![0u64; 256 * 256];
    for (&va, &vb) in a.pixels().iter().zip(b.pixels()) {
        counts[usize::from(va) * 256 + usize::from(vb)] += 1;
    }
    Ok(JointHistogram {
        counts,
        total: a.pixel_count() as u64,
    })
}

/// Shannon entropies and mutual information of a joint histogram, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalMeasures {
    pub h_a: f64,
    pub h_b: f64,
    pub h_ab: f64,
    pub mutual_information: f64,
    /// (H_A + H_B) / H_AB, defined as 2 when H_AB = 0 (constant pair).
    pub normalized_mutual_information: f64,
}

pub fn classical_entropies(histogram: &JointHistogram) -> ClassicalMeasures {
    let total = histogram.total as f64;
    let term = |count: u64| -> f64 {
        if count == 0 {
            0.0
        } else {
            let p = count as f64 / total;
            -p * p.log2()
        }
    };
    let h_ab: f64 = histogram.counts.iter().map(|&c| term(c)).sum();
    let h_a: f64 = histogram.marginal_a().iter().map(|&c| term(c)).sum();
    let h_b: f64 = histogram.marginal_b().iter().map(|&c| term(c)).sum();
    let mutual = (h_a + h_b - h_ab).max(0.0);
    let nmi = if h_ab == 0.0 { 2.0 } else { (h_a + h_b) / h_ab };
    ClassicalMeasures {
        h_a,
        h_b,
        h_ab,
        mutual_information: mutual,
        normalized_mutual_information: nmi,
    }
}

/// Every quantum and classical measure of one image pair.
#[derive(Debug, Clone)]
pub struct CorrelationReport {
    pub s_a: f64,
    pub s_b: f64,
    pub s_12: f64,
    pub s_ab: f64,
    pub s_a12: f64,
    pub s_b12: f64,
    pub tripartite: TripartiteMeasures,
    /// Quantum I(A;B) between the two color qubits.
    pub mutual_ab: f64,
    pub classical: ClassicalMeasures,
}

/// Encode the pair, compute the seven subsystem entropies and the derived
/// measures, plus the classical baseline.
pub fn correlation_report(a: &Image, b: &Image) -> Result<CorrelationReport> {
    use QubitLabel::{ColorA, ColorB};
    let rho = encode_joint(a, b)?.density();
    let positions = crate::frqi::position_labels(a.position_qubits());

    let s_a = entropy_of(&rho, &[ColorA])?;
    let s_b = entropy_of(&rho, &[ColorB])?;
    let s_12 = entropy_of(&rho, &positions)?;
    let s_ab = entropy_of(&rho, &[ColorA, ColorB])?;
    let s_a12 = entropy_of(&rho, &union(&[&positions, &[ColorA]]))?;
    let s_b12 = entropy_of(&rho, &union(&[&positions, &[ColorB]]))?;
    let s_full = von_neumann_entropy(&rho)?;

    let mutual_ab = clamp_tiny_negative(s_a + s_b - s_ab);
    Ok(CorrelationReport {
        s_a,
        s_b,
        s_12,
        s_ab,
        s_a12,
        s_b12,
        tripartite: TripartiteMeasures {
            interaction: s_a + s_b + s_12 - s_ab - s_a12 - s_b12 + s_full,
            total_correlation: s_a + s_b + s_12 - s_full,
            dual_total_correlation: s_ab + s_a12 + s_b12 - 2.0 * s_full,
        },
        mutual_ab,
        classical: classical_entropies(&joint_histogram(a, b)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frqi::{encode_frqi, position_labels};
    use crate::linalg::SymMatrix;
    use QubitLabel::{ColorA, ColorB, Position};

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    const H14: f64 = 0.8112781244591328; // -(3/4)log2(3/4) - (1/4)log2(1/4)

    #[test]
    fn entropy_of_pure_state() {
        let img = Image::from_gray_list("51,204,204,51").unwrap();
        let rho = encode_frqi(&img).density();
        assert_close(von_neumann_entropy(&rho).unwrap(), 0.0, 1e-9);
    }

    #[test]
    fn entropy_of_diagonal_matrices() {
        let rho = DensityMatrix::new(
            vec![Position(0)],
            SymMatrix::from_diagonal(&[0.75, 0.25]),
        )
        .unwrap();
        assert_close(von_neumann_entropy(&rho).unwrap(), H14, 1e-9);
        let rho = DensityMatrix::new(
            vec![Position(0)],
            SymMatrix::from_diagonal(&[0.5, 0.5]),
        )
        .unwrap();
        assert_close(von_neumann_entropy(&rho).unwrap(), 1.0, 1e-9);
    }

    #[test]
    fn entropy_of_color_marginals() {
        // Color marginal of pattern 1000 is diag(3/4, 1/4).
        let img = Image::from_bit_pattern("1000").unwrap();
        let rho = encode_frqi(&img).density();
        let color = rho.partial_trace(&[ColorA]).unwrap();
        assert_close(von_neumann_entropy(&color).unwrap(), H14, 1e-9);
        // diag(1/2, 1/2) from pattern 0011.
        let img = Image::from_bit_pattern("0011").unwrap();
        let rho = encode_frqi(&img).density();
        let color = rho.partial_trace(&[ColorA]).unwrap();
        assert_close(von_neumann_entropy(&color).unwrap(), 1.0, 1e-9);
    }

    #[test]
    fn entropy_of_gray_position_marginal() {
        // Closed form (Gram matrix of the cos/sin vectors): eigenvalues
        // (1 +- (sin(0.2 pi) + sin(0.8 pi)) / 2) / 2 -> 0.733976 bits.
        let img = Image::from_gray_list("51,204,204,51").unwrap();
        let rho = encode_frqi(&img).density();
        let pos = rho.partial_trace(&position_labels(2)).unwrap();
        assert_close(
            von_neumann_entropy(&pos).unwrap(),
            0.7339759413257614,
            1e-9,
        );
    }

    #[test]
    fn entropy_rejects_negative_eigenvalues() {
        // Trace 1 but indefinite: construction passes, entropy refuses.
        let rho = DensityMatrix::new(
            vec![Position(0)],
            SymMatrix::from_diagonal(&[1.5, -0.5]),
        )
        .unwrap();
        assert!(matches!(
            von_neumann_entropy(&rho),
            Err(Error::NotDensity(_))
        ));
    }

    #[test]
    fn conditional_entropy_examples() {
        let a = Image::from_bit_pattern("1000").unwrap();
        let b = Image::from_bit_pattern("1010").unwrap();
        let rho = encode_joint(&a, &b).unwrap().density();
        // S(A|B) = S(A,B) - S(B) = 1.5 - 1.0.
        assert_close(
            conditional_entropy(&rho, &[ColorA], &[ColorB]).unwrap(),
            0.5,
            1e-9,
        );
        // Pure bipartite: S(X | complement) = -S(X).
        let positions = position_labels(2);
        let rest = [ColorA, ColorB];
        let s_pos = von_neumann_entropy(&rho.partial_trace(&positions).unwrap()).unwrap();
        assert_close(
            conditional_entropy(&rho, &positions, &rest).unwrap(),
            -s_pos,
            1e-9,
        );
        assert!(matches!(
            conditional_entropy(&rho, &[ColorA], &[ColorA]),
            Err(Error::OverlappingParts)
        ));
    }

    #[test]
    fn conditional_entropy_of_product_state() {
        // Joint encoding of two constant images is a product state, so
        // S(A|B) = S(A) = 0 and the colors are uncorrelated.
        let black = Image::constant(2, 0).unwrap();
        let rho = encode_joint(&black, &black).unwrap().density();
        let s_a = von_neumann_entropy(&rho.partial_trace(&[ColorA]).unwrap()).unwrap();
        assert_close(
            conditional_entropy(&rho, &[ColorA], &[ColorB]).unwrap(),
            s_a,
            1e-9,
        );
    }

    #[test]
    fn mutual_information_examples() {
        let a = Image::from_bit_pattern("1000").unwrap();
        let b = Image::from_bit_pattern("1010").unwrap();
        let rho = encode_joint(&a, &b).unwrap().density();
        // 0.811278 + 1.0 - 1.5
        assert_close(
            quantum_mutual_information(&rho, &[ColorA], &[ColorB]).unwrap(),
            0.3112781244591329,
            1e-9,
        );
        // Pure bipartite doubling: I(X; complement) = 2 S(X).
        let positions = position_labels(2);
        let s_pos = von_neumann_entropy(&rho.partial_trace(&positions).unwrap()).unwrap();
        assert_close(
            quantum_mutual_information(&rho, &positions, &[ColorA, ColorB]).unwrap(),
            2.0 * s_pos,
            1e-9,
        );
        // Product state.
        let black = Image::constant(2, 0).unwrap();
        let product = encode_joint(&black, &black).unwrap().density();
        assert_close(
            quantum_mutual_information(&product, &[ColorA], &[ColorB]).unwrap(),
            0.0,
            1e-9,
        );
    }

    #[test]
    fn tripartite_worked_example() {
        let a = Image::from_bit_pattern("1000").unwrap();
        let b = Image::from_bit_pattern("1010").unwrap();
        let rho = encode_joint(&a, &b).unwrap().density();
        let m = tripartite_measures(&rho, &position_labels(2), &[ColorA], &[ColorB]).unwrap();
        assert_close(m.interaction, 0.0, 1e-9);
        assert_close(m.total_correlation, 3.311278124459133, 1e-9);
        assert_close(m.dual_total_correlation, 3.311278124459133, 1e-9);
    }

    #[test]
    fn tripartite_all_black_vs_one_pixel() {
        let a = Image::from_bit_pattern("1000").unwrap();
        let b = Image::from_bit_pattern("0000").unwrap();
        let rho = encode_joint(&a, &b).unwrap().density();
        let m = tripartite_measures(&rho, &position_labels(2), &[ColorA], &[ColorB]).unwrap();
        assert_close(m.interaction, 0.0, 1e-9);
        assert_close(m.total_correlation, 2.0 * H14, 1e-9);
        assert_close(m.dual_total_correlation, 2.0 * H14, 1e-9);
    }

    #[test]
    fn tripartite_of_product_state_vanishes() {
        let black = Image::constant(2, 0).unwrap();
        let rho = encode_joint(&black, &black).unwrap().density();
        let m = tripartite_measures(&rho, &position_labels(2), &[ColorA], &[ColorB]).unwrap();
        assert_close(m.interaction, 0.0, 1e-9);
        assert_close(m.total_correlation, 0.0, 1e-9);
        assert_close(m.dual_total_correlation, 0.0, 1e-9);
    }

    #[test]
    fn tripartite_requires_partition() {
        let a = Image::from_bit_pattern("1000").unwrap();
        let b = Image::from_bit_pattern("1010").unwrap();
        let rho = encode_joint(&a, &b).unwrap().density();
        assert!(matches!(
            tripartite_measures(&rho, &[Position(0)], &[ColorA], &[ColorB]),
            Err(Error::NotPartition)
        ));
        assert!(matches!(
            tripartite_measures(&rho, &position_labels(2), &[ColorA], &[ColorA]),
            Err(Error::OverlappingParts)
        ));
    }

    #[test]
    fn joint_histogram_examples() {
        let a = Image::from_bit_pattern("1000").unwrap();
        let b = Image::from_bit_pattern("1010").unwrap();
        let h = joint_histogram(&a, &b).unwrap();
        assert_eq!(h.count(255, 255), 1);
        assert_eq!(h.count(0, 0), 2);
        assert_eq!(h.count(0, 255), 1);
        assert_eq!(h.total(), 4);

        let c = Image::constant(2, 7).unwrap();
        let h = joint_histogram(&c, &c).unwrap();
        assert_eq!(h.count(7, 7), 4);

        let a = Image::from_gray_list("0,0,0,0").unwrap();
        let b = Image::from_gray_list("0,0,128,0").unwrap();
        let h = joint_histogram(&a, &b).unwrap();
        assert_eq!(h.count(0, 0), 3);
        assert_eq!(h.count(0, 128), 1);

        let big = Image::constant(4, 0).unwrap();
        assert!(joint_histogram(&a, &big).is_err());
    }

    #[test]
    fn classical_entropy_examples() {
        let a = Image::from_gray_list("0,0,0,0").unwrap();
        let b = Image::from_gray_list("0,0,128,0").unwrap();
        let m = classical_entropies(&joint_histogram(&a, &b).unwrap());
        assert_close(m.h_a, 0.0, 1e-12);
        assert_close(m.h_b, H14, 1e-12);
        assert_close(m.h_ab, H14, 1e-12);
        assert_close(m.mutual_information, 0.0, 1e-12);
        assert_close(m.normalized_mutual_information, 1.0, 1e-12);

        // Perfectly correlated binary pair.
        let a = Image::from_bit_pattern("1010").unwrap();
        let m = classical_entropies(&joint_histogram(&a, &a).unwrap());
        assert_close(m.h_a, 1.0, 1e-12);
        assert_close(m.h_b, 1.0, 1e-12);
        assert_close(m.h_ab, 1.0, 1e-12);
        assert_close(m.mutual_information, 1.0, 1e-12);
        assert_close(m.normalized_mutual_information, 2.0, 1e-12);

        // Constant pair: all entropies zero, NMI takes its limit value.
        let c = Image::constant(2, 128).unwrap();
        let m = classical_entropies(&joint_histogram(&c, &c).unwrap());
        assert_eq!(m.h_ab, 0.0);
        assert_eq!(m.mutual_information, 0.0);
        assert_eq!(m.normalized_mutual_information, 2.0);
    }

    #[test]
    fn histogram_marginals_match_per_image_histograms() {
        let a = Image::from_gray_list("5,5,9,200").unwrap();
        let b = Image::from_gray_list("0,5,9,9").unwrap();
        let h = joint_histogram(&a, &b).unwrap();
        let ma = h.marginal_a();
        assert_eq!(ma[5], 2);
        assert_eq!(ma[9], 1);
        assert_eq!(ma[200], 1);
        let mb = h.marginal_b();
        assert_eq!(mb[0], 1);
        assert_eq!(mb[5], 1);
        assert_eq!(mb[9], 2);
    }

    #[test]
    fn report_matches_tripartite_and_classical_paths() {
        let a = Image::from_bit_pattern("1000").unwrap();
        let b = Image::from_bit_pattern("1010").unwrap();
        let report = correlation_report(&a, &b).unwrap();
        let rho = encode_joint(&a, &b).unwrap().density();
        let m = tripartite_measures(&rho, &position_labels(2), &[ColorA], &[ColorB]).unwrap();
        assert_close(report.tripartite.interaction, m.interaction, 1e-12);
        assert_close(
            report.tripartite.total_correlation,
            m.total_correlation,
            1e-12,
        );
        assert_close(
            report.tripartite.dual_total_correlation,
            m.dual_total_correlation,
            1e-12,
        );
        assert_close(report.s_a, H14, 1e-9);
        assert_close(report.s_b, 1.0, 1e-9);
        assert_close(report.s_12, 1.5, 1e-9);
        assert_close(report.s_ab, 1.5, 1e-9);
        assert_close(report.s_a12, 1.0, 1e-9);
        assert_close(report.s_b12, H14, 1e-9);
        assert_close(report.mutual_ab, H14 + 1.0 - 1.5, 1e-9);
    }
}
