//! Inputs shared by the benchmarks in `benches/`.

use quatlat::lattice::preset;
use quatlat::parikh::{language_preset, BoundedLanguageSpec};
use quatlat::{LatticeParams, Presentation, Word};

/// `(p, c, tau)` triples for table construction, smallest first.
pub const PRIME_PARAMS: [(u64, i64, i64); 4] = [(3, -1, -1), (5, 2, 3), (7, 3, 2), (11, 2, 5)];

pub fn params(p: u64, c: i64, tau: i64) -> LatticeParams {
    LatticeParams::prime(p, c, tau).expect("benchmark parameters are valid")
}

/// A pseudo-random word of `len` letters over both alphabets of `gamma3`.
pub fn gamma3_word(len: usize) -> (Presentation, Word) {
    let pres = preset("gamma3").expect("bundled preset");
    let letters = ["a", "b", "x", "y", "a^-1", "x^-1", "b^-1", "y^-1"];
    let mut state = 0x2545_f491_u64;
    let w: Vec<&str> = (0..len)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            letters[(state >> 33) as usize % letters.len()]
        })
        .collect();
    let word = pres.word(&w.join(",")).expect("valid letters");
    (pres, word)
}

pub fn language(id: &str) -> (Presentation, BoundedLanguageSpec, u64) {
    let p = language_preset(id).expect("bundled language");
    let pres = p.lattice.load().expect("lattice loads");
    let spec = p.spec(&pres).expect("words parse");
    (pres, spec, p.bound)
}
