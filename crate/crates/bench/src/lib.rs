//! Shared fixtures for the engine benchmarks.

use qtetra_core::qgroup::GenSet;
use qtetra_core::scalar::{qq_factorial, QRat};

/// Generator images at rank parameter `n`, built once per benchmark.
pub fn genset(n: usize) -> GenSet {
    GenSet::new(n).expect("valid rank parameter")
}

/// A moderately sized exact scalar: `q^3 / (q^2; q^2)_k`.
pub fn sample_scalar(k: usize) -> QRat {
    QRat::q_power(3)
        .checked_div(&qq_factorial(k))
        .expect("nonzero Pochhammer")
}
