//! Seeded inputs shared by the benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sbk_core::solvers::surface_alphabet;
use sbk_core::words::reduce_codes;
use sbk_core::Word;

/// A `rows × cols` matrix with entries in `-bound..=bound`.
pub fn random_matrix(seed: u64, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

/// A freely reduced word of length at most `len` in the genus-g surface alphabet.
pub fn random_surface_word(seed: u64, g: u32, len: usize) -> Word {
    let mut rng = StdRng::seed_from_u64(seed);
    let alphabet = surface_alphabet(g);
    let letters = 2 * alphabet.len() as u32;
    let mut codes: Vec<u32> = (0..len).map(|_| rng.gen_range(0..letters)).collect();
    reduce_codes(&mut codes);
    alphabet.decode(&codes)
}
