use crate::compressor::Compressor;
use crate::error::{corrupt, Result};
use crate::textds::{unescape, DsFlags, StorageMode, Text, TextDs, SENTINEL};

/// BWT of a sentinel-terminated text.
pub fn bwt_forward(text: Text) -> Vec<u8> {
    let mut ds = TextDs::new(text, StorageMode::Plain);
    ds.require(DsFlags::BWT);
    ds.bwt().to_vec()
}

/// Inverts a BWT by LF-mapping; returns the text including its sentinel.
pub fn bwt_inverse(bwt: &[u8]) -> Result<Vec<u8>> {
    let sentinels = bwt.iter().filter(|&&b| b == SENTINEL).count();
    if sentinels != 1 {
        return Err(corrupt(format!("BWT must contain exactly one sentinel, found {sentinels}")));
    }
    let n = bwt.len();
    let mut counts = [0usize; 256];
    // rank of bwt[i] among equal characters before i
    let mut rank = vec![0u32; n];
    for (i, &c) in bwt.iter().enumerate() {
        rank[i] = counts[c as usize] as u32;
        counts[c as usize] += 1;
    }
    let mut first = [0usize; 256];
    let mut sum = 0;
    for c in 0..256 {
        first[c] = sum;
        sum += counts[c];
    }
    let mut text = vec![0u8; n];
    // row 0 is the sentinel suffix; walk backwards from it
    let mut row = 0;
    for k in (0..n - 1).rev() {
        let c = bwt[row];
        text[k] = c;
        row = first[c as usize] + rank[row] as usize;
    }
    text[n - 1] = SENTINEL;
    if text[..n - 1].contains(&SENTINEL) {
        return Err(corrupt("BWT does not describe a single cycle"));
    }
    Ok(text)
}

/// Emits the BWT of the escaped input plus sentinel.
#[derive(Debug, Default, Clone, Copy)]
pub struct Bwt;

impl Compressor for Bwt {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        Ok(bwt_forward(Text::escaped(input)))
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let text = bwt_inverse(input)?;
        unescape(&text[..text.len() - 1])
    }
}
