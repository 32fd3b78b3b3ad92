//! FRQI encoding of images into labeled state vectors, density matrices,
//! and partial traces over arbitrary qubit subsets.
//!
//! Basis-index convention: the qubit at register position 0 is the most
//! significant bit of the basis index. A single image of side 2^n encodes as
//! `[ColorA, Position(0..2n)]` (color bit leading, matching |c p p> kets);
//! a pair encodes as `[Position(0..2n), ColorA, ColorB]` (positions leading,
//! matching |p p c_A c_B> kets). `Position(0)` is the most significant bit
//! of the row-major pixel index.

use crate::error::{Error, Result};
use crate::image::Image;
use crate::linalg::{outer, SymMatrix};
use std::f64::consts::FRAC_PI_2;

/// Norm tolerance for state-vector construction.
pub const NORM_TOL: f64 = 1e-12;

/// One qubit of a register: a position bit or one of the two color qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QubitLabel {
    Position(usize),
    ColorA,
    ColorB,
}

/// The 2n position labels `Position(0)..Position(2n-1)`.
pub fn position_labels(count: usize) -> Vec<QubitLabel> {
    (0..count).map(QubitLabel::Position).collect()
}

/// Linear map from gray values to rotation angles in [0, pi/2].
pub fn color_to_angle(color: u8) -> f64 {
    f64::from(color) * FRAC_PI_2 / 255.0
}

/// A real unit-norm amplitude vector over a labeled qubit register.
#[derive(Debug, Clone)]
pub struct StateVector {
    register: Vec<QubitLabel>,
    amplitudes: Vec<f64>,
}

impl StateVector {
    pub fn new(register: Vec<QubitLabel>, amplitudes: Vec<f64>) -> Result<Self> {
        for (i, label) in register.iter().enumerate() {
            if register[..i].contains(label) {
                return Err(Error::DuplicateLabel(*label));
            }
        }
        let expected = 1usize << register.len();
        if amplitudes.len() != expected {
            return Err(Error::AmplitudeCount {
                qubits: register.len(),
                got: amplitudes.len(),
            });
        }
        let norm = amplitudes.iter().map(|a| a * a).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            register,
            amplitudes,
        })
    }

    pub fn register(&self) -> &[QubitLabel] {
        &self.register
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn qubits(&self) -> usize {
        self.register.len()
    }

    /// The pure-state density matrix |psi><psi|.
    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            register: self.register.clone(),
            matrix: outer(&self.amplitudes).expect("state vector is nonempty"),
        }
    }
}

/// Encode one image: amplitude of basis state (c, i) is cos(theta_i)/2^n for
/// c = 0 and sin(theta_i)/2^n for c = 1, with theta_i = color_to_angle of
/// pixel i. Register `[ColorA, Position(0..2n)]`, color bit most significant.
pub fn encode_frqi(image: &Image) -> StateVector {
    let pixel_count = image.pixel_count();
    let prefactor = 1.0 / (pixel_count as f64).sqrt();
    let mut amplitudes = vec![0.0; 2 * pixel_count];
    for (i, &color) in image.pixels().iter().enumerate() {
        let theta = color_to_angle(color);
        amplitudes[i] = prefactor * theta.cos();
        amplitudes[pixel_count + i] = prefactor * theta.sin();
    }
    let mut register = Vec::with_capacity(image.position_qubits() + 1);
    register.push(QubitLabel::ColorA);
    register.extend(position_labels(image.position_qubits()));
    StateVector::new(register, amplitudes).expect("FRQI amplitudes are normalized")
}

/// Encode an image pair: amplitude of (i, c_A, c_B) is
/// f(c_A, theta_A_i) * f(c_B, theta_B_i) / 2^n with f(0, t) = cos t and
/// f(1, t) = sin t. Register `[Position(0..2n), ColorA, ColorB]`.
pub fn encode_joint(a: &Image, b: &Image) -> Result<StateVector> {
    if a.side() != b.side() {
        return Err(Error::SideMismatch(a.side(), b.side()));
    }
    let pixel_count = a.pixel_count();
    let prefactor = 1.0 / (pixel_count as f64).sqrt();
    let mut amplitudes = vec![0.0; 4 * pixel_count];
    for i in 0..pixel_count {
        let ta = color_to_angle(a.pixels()[i]);
        let tb = color_to_angle(b.pixels()[i]);
        let fa = [ta.cos(), ta.sin()];
        let fb = [tb.cos(), tb.sin()];
        for ca in 0..2 {
            for cb in 0..2 {
                amplitudes[i * 4 + ca * 2 + cb] = prefactor * fa[ca] * fb[cb];
            }
        }
    }
    let mut register = position_labels(a.position_qubits());
    register.push(QubitLabel::ColorA);
    register.push(QubitLabel::ColorB);
    Ok(StateVector::new(register, amplitudes).expect("joint amplitudes are normalized"))
}

/// Free-function form of [`StateVector::density`].
pub fn density(state: &StateVector) -> DensityMatrix {
    state.density()
}

/// A real symmetric trace-1 matrix over a labeled qubit register.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    register: Vec<QubitLabel>,
    matrix: SymMatrix,
}

impl DensityMatrix {
    /// Build from an explicit symmetric matrix. Validates label uniqueness,
    /// the dimension, and trace 1 within 1e-9; positivity is checked later,
    /// when a spectrum is actually needed.
    pub fn new(register: Vec<QubitLabel>, matrix: SymMatrix) -> Result<Self> {
        for (i, label) in register.iter().enumerate() {
            if register[..i].contains(label) {
                return Err(Error::DuplicateLabel(*label));
            }
        }
        let expected = 1usize << register.len();
        if matrix.dim() != expected {
            return Err(Error::DimensionMismatch(expected, matrix.dim()));
        }
        let trace = matrix.trace();
        if (trace - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized(trace));
        }
        Ok(Self { register, matrix })
    }

    pub fn register(&self) -> &[QubitLabel] {
        &self.register
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    pub fn purity(&self) -> f64 {
        self.matrix.purity()
    }

    /// Trace out every qubit not in `keep`. The result register is `keep`
    /// reordered to the original register order; entry (i, j) sums the
    /// entries of `self` whose kept bits spell i resp. j over all
    /// assignments of the traced bits.
    pub fn partial_trace(&self, keep: &[QubitLabel]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        let qubits = self.register.len();
        let mut kept_indices = Vec::with_capacity(keep.len());
        for label in keep {
            let index = self
                .register
                .iter()
                .position(|l| l == label)
                .ok_or(Error::LabelNotInRegister(*label))?;
            if kept_indices.contains(&index) {
                return Err(Error::DuplicateLabel(*label));
            }
            kept_indices.push(index);
        }
        kept_indices.sort_unstable();
        let traced_indices: Vec<usize> =
            (0..qubits).filter(|i| !kept_indices.contains(i)).collect();

        // Qubit at register position r owns basis-index bit (qubits - 1 - r).
        let spread = |compact: usize, positions: &[usize]| -> usize {
            let width = positions.len();
            positions.iter().enumerate().fold(0, |acc, (slot, &r)| {
                let bit = (compact >> (width - 1 - slot)) & 1;
                acc | (bit << (qubits - 1 - r))
            })
        };

        let kept_dim = 1usize << kept_indices.len();
        let traced_dim = 1usize << traced_indices.len();
        let offsets: Vec<usize> = (0..traced_dim).map(|t| spread(t, &traced_indices)).collect();
        let bases: Vec<usize> = (0..kept_dim).map(|k| spread(k, &kept_indices)).collect();

        let mut data = vec![0.0; kept_dim * kept_dim];
        for i in 0..kept_dim {
            for j in 0..=i {
                let mut sum = 0.0;
                for &off in &offsets {
                    sum += self.matrix.get(bases[i] | off, bases[j] | off);
                }
                data[i * kept_dim + j] = sum;
                data[j * kept_dim + i] = sum;
            }
        }
        let register = kept_indices
            .iter()
            .map(|&i| self.register[i])
            .collect();
        Ok(DensityMatrix {
            register,
            matrix: SymMatrix::from_raw_symmetric(kept_dim, data),
        })
    }
}

/// Free-function form of [`DensityMatrix::partial_trace`].
pub fn partial_trace(rho: &DensityMatrix, keep: &[QubitLabel]) -> Result<DensityMatrix> {
    rho.partial_trace(keep)
}
