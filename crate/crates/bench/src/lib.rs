//! Deterministic fixture builders shared by the benchmarks.

use frqi_core::{Image, SymMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random symmetric matrix with entries in [-1, 1).
pub fn random_symmetric(seed: u64, dim: usize) -> SymMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let x = rng.gen_range(-1.0..1.0);
            data[i * dim + j] = x;
            data[j * dim + i] = x;
        }
    }
    SymMatrix::new(dim, data).expect("constructed symmetric")
}

/// Random grayscale image of the given power-of-two side.
pub fn random_image(seed: u64, side: usize) -> Image {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pixels = (0..side * side).map(|_| rng.gen()).collect();
    Image::new(side, pixels).expect("valid side")
}
