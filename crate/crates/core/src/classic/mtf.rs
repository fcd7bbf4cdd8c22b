use crate::compressor::Compressor;
use crate::error::Result;

fn identity() -> [u8; 256] {
    std::array::from_fn(|i| i as u8)
}

pub fn mtf_encode(input: &[u8]) -> Vec<u8> {
    let mut table = identity();
    input
        .iter()
        .map(|&b| {
            let idx = table.iter().position(|&t| t == b).unwrap();
            table.copy_within(0..idx, 1);
            table[0] = b;
            idx as u8
        })
        .collect()
}

pub fn mtf_decode(input: &[u8]) -> Vec<u8> {
    let mut table = identity();
    input
        .iter()
        .map(|&idx| {
            let idx = idx as usize;
            let b = table[idx];
            table.copy_within(0..idx, 1);
            table[0] = b;
            b
        })
        .collect()
}

/// Move-to-front over a table initialised to the identity.
#[derive(Debug, Default, Clone, Copy)]
pub struct Mtf;

impl Compressor for Mtf {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        Ok(mtf_encode(input))
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        Ok(mtf_decode(input))
    }
}
