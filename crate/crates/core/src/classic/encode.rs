use crate::coders::CoderKind;
use crate::compressor::Compressor;
use crate::error::{corrupt, Result};
use crate::succinct::{BitReader, BitWriter};

/// Codes the raw input as one literal run through a coder. An empty input
/// gives an empty body.
#[derive(Debug, Clone, Copy)]
pub struct Encode {
    pub coder: CoderKind,
}

impl Compressor for Encode {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        if input.is_empty() {
            return Ok(Vec::new());
        }
        let mut w = BitWriter::new();
        w.write_vbyte(input.len() as u64);
        let codec = self.coder.encoder(&mut w, &[input]);
        codec.encode_literals(&mut w, input);
        Ok(w.finish())
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        if input.is_empty() {
            return Ok(Vec::new());
        }
        let mut r = BitReader::new(input);
        let n = r.read_vbyte()?;
        // every token costs at least one bit and yields at most three bytes
        if n > r.bits_remaining().saturating_mul(3) {
            return Err(corrupt("stored length exceeds the stream"));
        }
        let codec = self.coder.decoder(&mut r)?;
        let mut out = Vec::with_capacity(n as usize);
        codec.decode_literals(&mut r, n as usize, &mut out)?;
        Ok(out)
    }
}
