//! Dense real symmetric linear algebra sized for the density matrices this
//! crate produces (typically up to 256x256): outer products, traces,
//! products, purity, and a cyclic Jacobi eigensolver.
//!
//! Everything here is real. FRQI angles lie in [0, pi/2], so all states have
//! real nonnegative amplitudes and every density matrix in scope is real
//! symmetric.

use crate::error::{Error, Result};

/// Absolute tolerance for the symmetry check at construction.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Off-diagonal convergence threshold of the eigensolver, relative to the
/// largest input entry (trace-1 density matrices get it as an absolute bound).
const JACOBI_TOL: f64 = 1e-12;

/// A dim x dim real symmetric matrix in row-major full storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Build from row-major entries, validating shape, finiteness, and
    /// symmetry.
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch(dim * dim, data.len()));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NotFinite);
        }
        let mut max_dev = 0.0f64;
        for i in 0..dim {
            for j in (i + 1)..dim {
                max_dev = max_dev.max((data[i * dim + j] - data[j * dim + i]).abs());
            }
        }
        if max_dev > SYMMETRY_TOL {
            return Err(Error::NotSymmetric(max_dev));
        }
        Ok(Self { dim, data })
    }

    /// Trusted constructor for entries that are symmetric by construction.
    pub(crate) fn from_raw_symmetric(dim: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        Self { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, &v) in diag.iter().enumerate() {
            m.data[i * dim + i] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    /// Matrix product. The result must itself be symmetric (the factors must
    /// commute), which holds for the matrix powers this crate needs.
    pub fn matmul(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        SymMatrix::new(n, out)
    }

    /// Tr(M^2); for a symmetric matrix this is the sum of squared entries.
    pub fn purity(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    /// All eigenvalues, descending.
    pub fn eigenvalues(&self) -> Result<Spectrum> {
        let (values, _) = jacobi(self, false)?;
        Ok(Spectrum { values })
    }

    /// Eigenvalues (descending) with matching eigenvectors.
    pub fn eigen_decomposition(&self) -> Result<EigenDecomposition> {
        let (values, vectors) = jacobi(self, true)?;
        Ok(EigenDecomposition {
            values,
            vectors: vectors.expect("vectors requested"),
        })
    }
}

/// Rank-1 outer product v v^T.
pub fn outer(v: &[f64]) -> Result<SymMatrix> {
    if v.is_empty() {
        return Err(Error::EmptyVector);
    }
    let n = v.len();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = v[i] * v[j];
        }
    }
    Ok(SymMatrix::from_raw_symmetric(n, data))
}

/// Eigenvalues of a symmetric matrix, sorted descending.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
}

impl EigenDecomposition {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Unit eigenvector matching `values()[k]`.
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        &self.vectors[k]
    }
}

/// Plane rotation of the pair (x, y) by the angle encoded in (s, tau).
#[inline]
fn rot(s: f64, tau: f64, x: f64, y: f64) -> (f64, f64) {
    (x - s * (y + x * tau), y + s * (x - y * tau))
}

/// Eigenvalues plus, when requested, one eigenvector per value.
type ValuesAndVectors = (Vec<f64>, Option<Vec<Vec<f64>>>);

/// Cyclic Jacobi with threshold scheduling and annihilation of negligible
/// entries. Converges when the off-diagonal L1 norm drops below the relative
/// threshold; capped at 100 * dim sweeps.
fn jacobi(matrix: &SymMatrix, want_vectors: bool) -> Result<ValuesAndVectors> {
    let n = matrix.dim;
    if n == 0 {
        return Ok((Vec::new(), want_vectors.then(Vec::new)));
    }
    let mut a = matrix.data.clone();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    } else {
        Vec::new()
    };
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    let tol = JACOBI_TOL * scale;
    let max_sweeps = 100 * n;

    let mut converged = false;
    for sweep in 0..max_sweeps {
        let mut sm = 0.0;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                sm += a[p * n + q].abs();
            }
        }
        if sm <= tol {
            converged = true;
            break;
        }
        let thresh = if sweep < 3 {
            0.2 * sm / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // Annihilate entries that are negligible against both
                // diagonal neighbours once iteration has settled.
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                } else if apq.abs() > thresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        apq / h
                    } else {
                        let theta = 0.5 * h / apq;
                        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            -t
                        } else {
                            t
                        }
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    h = t * apq;
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p * n + q] = 0.0;
                    for j in 0..p {
                        let (x, y) = rot(s, tau, a[j * n + p], a[j * n + q]);
                        a[j * n + p] = x;
                        a[j * n + q] = y;
                    }
                    for j in (p + 1)..q {
                        let (x, y) = rot(s, tau, a[p * n + j], a[j * n + q]);
                        a[p * n + j] = x;
                        a[j * n + q] = y;
                    }
                    for j in (q + 1)..n {
                        let (x, y) = rot(s, tau, a[p * n + j], a[q * n + j]);
                        a[p * n + j] = x;
                        a[q * n + j] = y;
                    }
                    if want_vectors {
                        for j in 0..n {
                            let (x, y) = rot(s, tau, v[j * n + p], v[j * n + q]);
                            v[j * n + p] = x;
                            v[j * n + q] = y;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(max_sweeps));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].partial_cmp(&d[i]).expect("finite eigenvalues"));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors = want_vectors.then(|| {
        order
            .iter()
            .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
            .collect()
    });
    Ok((values, vectors))
}
