//! Seeded random instances for tests, the self-test and searches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElement};
use crate::linalg::{FpMatrix, Matrix};

pub type DetRng = ChaCha8Rng;

pub fn deterministic_rng(seed: u64) -> DetRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<G: Rng>(
    field: &Field,
    rows: usize,
    cols: usize,
    rng: &mut G,
) -> Matrix<FieldElement> {
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, FieldElement::random(field, rng));
        }
    }
    m
}

/// Uniform invertible matrix by rejection.
pub fn random_invertible<G: Rng>(field: &Field, n: usize, rng: &mut G) -> Matrix<FieldElement> {
    loop {
        let m = random_matrix(field, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_fp_invertible<G: Rng>(p: u32, n: usize, rng: &mut G) -> FpMatrix {
    loop {
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let m = FpMatrix::from_rows(p, &rows);
        if m.is_invertible() {
            return m;
        }
    }
}
