//! Seeded random inputs for property suites, the CLI and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidLetter, BraidWord};
use crate::freegroup::{FreeWord, Letter};
use crate::quotient::{FiniteHom, Permutation};

pub type SampleRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A reduced word whose length is uniform in `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::ALL[rng.gen_range(0..4)];
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    FreeWord::reduce(letters)
}

pub fn random_pairs<R: Rng>(rng: &mut R, count: usize, max_len: usize) -> Vec<(FreeWord, FreeWord)> {
    (0..count)
        .map(|_| (random_word(rng, max_len), random_word(rng, max_len)))
        .collect()
}

/// A braid word of length uniform in `0..=max_len`, freely reduced.
pub fn random_braid<R: Rng>(rng: &mut R, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord::new((0..len).map(|_| BraidLetter::ALL[rng.gen_range(0..4)]))
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}

pub fn random_hom<R: Rng>(rng: &mut R, n: usize) -> FiniteHom {
    FiniteHom::new(random_permutation(rng, n), random_permutation(rng, n))
        .expect("equal degrees")
}
