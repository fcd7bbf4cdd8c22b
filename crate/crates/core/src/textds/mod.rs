//! Suffix array, inverse suffix array, LCP array and BWT over a
//! sentinel-terminated text.
//!
//! Arrays are 0-based in Rust: `sa[j]` is the 0-based start of the `j`-th
//! smallest suffix and `lcp[0] == 0`.

mod bundle;
mod packed;
mod sais;
mod text;

pub use bundle::{DsFlags, IntArray, StorageMode, TextDs};
pub use packed::PackedIntArray;
pub use sais::build_sa;
pub use text::{escape, unescape, unescape_terminated, Text, SENTINEL};

/// Inverse permutation of `sa`.
pub fn build_isa(sa: &[usize]) -> Vec<usize> {
    let mut isa = vec![0; sa.len()];
    for (j, &p) in sa.iter().enumerate() {
        isa[p] = j;
    }
    isa
}

/// LCP array via the permuted LCP (Φ) array in linear time.
///
/// `lcp[0] == 0`; for `j >= 1`, `lcp[j]` is the longest common prefix of the
/// suffixes `sa[j - 1]` and `sa[j]`.
pub fn build_lcp_phi(text: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = sa.len();
    if n == 0 {
        return Vec::new();
    }
    // phi[sa[j]] = sa[j-1]; reused in place as the PLCP array
    let mut phi = vec![usize::MAX; n];
    for j in 1..n {
        phi[sa[j]] = sa[j - 1];
    }
    let mut l = 0usize;
    for i in 0..n {
        let prev = phi[i];
        if prev == usize::MAX {
            phi[i] = 0;
            l = 0;
            continue;
        }
        while i + l < n && prev + l < n && text[i + l] == text[prev + l] {
            l += 1;
        }
        phi[i] = l;
        l = l.saturating_sub(1);
    }
    sa.iter().map(|&p| phi[p]).collect()
}

/// `bwt[j] = text[sa[j] - 1]`, wrapping to the last character for `sa[j] == 0`.
pub fn build_bwt(text: &[u8], sa: &[usize]) -> Vec<u8> {
    let n = text.len();
    sa.iter().map(|&p| if p == 0 { text[n - 1] } else { text[p - 1] }).collect()
}
