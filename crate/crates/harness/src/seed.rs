//! Per-run seed derivation.
//!
//! `seed = FNV-1a-64(bytes)` where `bytes` is the concatenation of
//! `base_seed` (8 bytes, little endian), the algorithm label (UTF-8), a
//! `0xFF` separator, the problem label (UTF-8), another `0xFF`, and
//! `run_index` as a little-endian `u64`. `0xFF` never occurs in UTF-8, so
//! distinct label pairs cannot collide by concatenation.
//!
//! The seed depends only on what identifies the run, never on the order in
//! which the campaign schedules it.

use std::hash::Hasher;

use fnv::FnvHasher;

pub fn derive_seed(base_seed: u64, algorithm: &str, problem: &str, run_index: usize) -> u64 {
    let mut h = FnvHasher::default();
    h.write(&base_seed.to_le_bytes());
    h.write(algorithm.as_bytes());
    h.write(&[0xFF]);
    h.write(problem.as_bytes());
    h.write(&[0xFF]);
    h.write(&(run_index as u64).to_le_bytes());
    h.finish()
}
