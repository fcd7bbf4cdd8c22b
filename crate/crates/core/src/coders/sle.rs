//! Static low-entropy coder: Huffman over byte tokens plus frequent 3-grams
//! of the literal runs.
//!
//! Model layout: VByte count of selected 3-grams, each as 3 raw bytes, then a
//! canonical Huffman header over token ids (bytes are `0..256`, the `k`-th
//! selected 3-gram is `256 + k`).

use super::huffman::CanonicalCode;
use crate::error::{corrupt, Result};
use crate::succinct::{BitReader, BitWriter};
use std::collections::HashMap;

/// A 3-gram becomes a token when it occurs at least this often.
pub const TRIGRAM_THRESHOLD: u32 = 8;

#[derive(Debug, Clone)]
pub struct SleModel {
    trigrams: Vec<[u8; 3]>,
    lookup: HashMap<[u8; 3], u32>,
    code: CanonicalCode,
}

fn tokenize(run: &[u8], lookup: &HashMap<[u8; 3], u32>, mut emit: impl FnMut(u32)) {
    let mut i = 0;
    while i < run.len() {
        if i + 3 <= run.len() {
            if let Some(&k) = lookup.get(&[run[i], run[i + 1], run[i + 2]]) {
                emit(256 + k);
                i += 3;
                continue;
            }
        }
        emit(run[i] as u32);
        i += 1;
    }
}

impl SleModel {
    /// Two-pass training over all literal runs.
    pub fn train<'a>(runs: impl IntoIterator<Item = &'a [u8]> + Clone) -> Self {
        let mut counts: HashMap<[u8; 3], u32> = HashMap::new();
        for run in runs.clone() {
            for g in run.windows(3) {
                *counts.entry([g[0], g[1], g[2]]).or_insert(0) += 1;
            }
        }
        let mut trigrams: Vec<[u8; 3]> =
            counts.into_iter().filter(|&(_, c)| c >= TRIGRAM_THRESHOLD).map(|(g, _)| g).collect();
        trigrams.sort_unstable();
        let lookup: HashMap<[u8; 3], u32> =
            trigrams.iter().enumerate().map(|(k, &g)| (g, k as u32)).collect();

        let mut freq = vec![0u64; 256 + trigrams.len()];
        for run in runs {
            tokenize(run, &lookup, |t| freq[t as usize] += 1);
        }
        let freqs: Vec<(u32, u64)> =
            freq.iter().enumerate().filter(|(_, &f)| f > 0).map(|(t, &f)| (t as u32, f)).collect();
        let code = CanonicalCode::from_frequencies(&freqs);
        Self { trigrams, lookup, code }
    }

    pub fn trigrams(&self) -> &[[u8; 3]] {
        &self.trigrams
    }

    pub fn code(&self) -> &CanonicalCode {
        &self.code
    }

    pub fn write_header(&self, w: &mut BitWriter) {
        w.write_vbyte(self.trigrams.len() as u64);
        for g in &self.trigrams {
            for &b in g {
                w.write_bits(b as u64, 8);
            }
        }
        self.code.write_header(w);
    }

    pub fn read_header(r: &mut BitReader) -> Result<Self> {
        let k = r.read_vbyte()?;
        if k.saturating_mul(24) > r.bits_remaining() {
            return Err(corrupt("sle header trigram count exceeds stream"));
        }
        let mut trigrams = Vec::with_capacity(k as usize);
        for _ in 0..k {
            let g = [r.read_bits(8)? as u8, r.read_bits(8)? as u8, r.read_bits(8)? as u8];
            trigrams.push(g);
        }
        let code = CanonicalCode::read_header(r)?;
        if code.lengths().iter().any(|&(t, _)| t as usize >= 256 + trigrams.len()) {
            return Err(corrupt("sle token id out of range"));
        }
        let lookup = trigrams.iter().enumerate().map(|(k, &g)| (g, k as u32)).collect();
        Ok(Self { trigrams, lookup, code })
    }

    pub fn encode_run(&self, w: &mut BitWriter, run: &[u8]) {
        tokenize(run, &self.lookup, |t| self.code.encode(w, t));
    }

    /// Decodes tokens until exactly `len` bytes were produced.
    pub fn decode_run(&self, r: &mut BitReader, len: usize, out: &mut Vec<u8>) -> Result<()> {
        let target = out.len() + len;
        while out.len() < target {
            let t = self.code.decode(r)?;
            if t < 256 {
                out.push(t as u8);
            } else {
                let g = self.trigrams[(t - 256) as usize];
                if out.len() + 3 > target {
                    return Err(corrupt("sle token crosses a literal run boundary"));
                }
                out.extend_from_slice(&g);
            }
        }
        Ok(())
    }

    /// Bits needed for the token stream of `runs` (excluding the header).
    pub fn payload_bits<'a>(&self, runs: impl IntoIterator<Item = &'a [u8]>) -> u64 {
        let mut bits = 0u64;
        for run in runs {
            tokenize(run, &self.lookup, |t| bits += self.code.code_len(t).unwrap() as u64);
        }
        bits
    }
}
