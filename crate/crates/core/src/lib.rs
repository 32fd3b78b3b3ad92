//! Encode grayscale images as FRQI quantum states and compare image pairs
//! through quantum and classical correlation measures.
//!
//! A 2^n x 2^n image becomes a (2n+1)-qubit pure state whose color qubit
//! carries each pixel's gray level as a rotation angle; a pair of images
//! becomes a (2n+2)-qubit state with one color qubit per image. From the
//! density matrix of such a state, partial traces and von Neumann entropies
//! yield mutual information and the tripartite correlation measures, which
//! the [`experiments`] module evaluates over pattern tables, pixel sweeps,
//! and translation scans alongside joint-histogram baselines.

pub mod error;
pub mod experiments;
pub mod frqi;
pub mod image;
pub mod linalg;
pub mod measures;

pub use error::{Error, Result};
pub use experiments::{
    default_patron, entropy_summary, run_sweep, run_table1, run_table2, run_translate,
    EntropySummary, SweepRow, Table1Row, TranslateRow,
};
pub use frqi::{
    color_to_angle, density, encode_frqi, encode_joint, partial_trace, position_labels,
    DensityMatrix, QubitLabel, StateVector,
};
pub use image::{parse_pattern, read_pgm, write_pgm, Image, PatternSpec};
pub use linalg::{outer, EigenDecomposition, Spectrum, SymMatrix};
pub use measures::{
    classical_entropies, conditional_entropy, correlation_report, joint_histogram,
    quantum_mutual_information, tripartite_measures, von_neumann_entropy, ClassicalMeasures,
    CorrelationReport, JointHistogram, TripartiteMeasures,
};
