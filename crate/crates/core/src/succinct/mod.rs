//! Bit-level building blocks: MSB-first bit I/O and rank/select bit vectors.

mod bitio;
mod bitvec;

pub use bitio::{BitReader, BitWriter};
pub use bitvec::{BitVector, RankSelect};

/// Number of bits needed to store every value in `0..n`, i.e. `⌈lg n⌉`.
///
/// `bits_for(0) == bits_for(1) == 0`.
pub fn bits_for(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}
