use crate::coders::CoderKind;
use crate::compressor::Compressor;
use crate::error::{corrupt, Result};
use crate::stats;
use crate::succinct::{BitReader, BitWriter};
use crate::textds::{unescape_terminated, Text};
use std::collections::HashMap;

/// Factor `x` spells factor `reference` followed by `ext`; 0 is the empty
/// factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lz78Factor {
    pub reference: usize,
    pub ext: u8,
}

/// Greedy LZ78 factorization with a hash-map trie. The text must end with a
/// unique sentinel so the last factor is complete.
pub fn lz78_factorize(text: &[u8]) -> Vec<Lz78Factor> {
    let mut trie: HashMap<(u32, u8), u32> = HashMap::new();
    let mut factors = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        let mut node = 0u32;
        while pos + 1 < text.len() {
            match trie.get(&(node, text[pos])) {
                Some(&child) => {
                    node = child;
                    pos += 1;
                }
                None => break,
            }
        }
        let id = factors.len() as u32 + 1;
        trie.insert((node, text[pos]), id);
        factors.push(Lz78Factor { reference: node as usize, ext: text[pos] });
        pos += 1;
    }
    factors
}

/// Expands factors back into the text.
pub fn lz78_expand(factors: &[Lz78Factor]) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    // (start, len) of every factor in `out`; index 0 is the empty factor
    let mut spans = vec![(0usize, 0usize)];
    for (x, f) in factors.iter().enumerate() {
        push_factor(&mut out, &mut spans, x, f.reference, f.ext)?;
    }
    Ok(out)
}

fn push_factor(out: &mut Vec<u8>, spans: &mut Vec<(usize, usize)>, x: usize, reference: usize, ext: u8) -> Result<()> {
    if reference > x {
        return Err(corrupt(format!("factor {} refers to later factor {reference}", x + 1)));
    }
    let (start, len) = spans[reference];
    let at = out.len();
    out.extend_from_within(start..start + len);
    out.push(ext);
    spans.push((at, len + 1));
    Ok(())
}

/// LZ78 with references coded through the integer coder and extension
/// characters through its literal coder.
#[derive(Debug, Clone, Copy)]
pub struct Lz78 {
    pub coder: CoderKind,
}

impl Compressor for Lz78 {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let text = Text::escaped(input);
        let factors = stats::phase("factorize", || lz78_factorize(text.as_bytes()));
        stats::log("factors", factors.len());
        let exts: Vec<u8> = factors.iter().map(|f| f.ext).collect();
        let mut w = BitWriter::new();
        w.write_vbyte(text.len() as u64);
        // each extension is coded on its own, so the model sees one-byte runs
        let runs: Vec<&[u8]> = exts.chunks(1).collect();
        let codec = self.coder.encoder(&mut w, &runs);
        for (x, f) in factors.iter().enumerate() {
            codec.encode_int(&mut w, f.reference as u64, x as u64 + 1);
            codec.encode_literals(&mut w, &[f.ext]);
        }
        Ok(w.finish())
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut r = BitReader::new(input);
        let n = r.read_vbyte()? as usize;
        let codec = self.coder.decoder(&mut r)?;
        let mut out = Vec::with_capacity(n.min(1 << 24));
        let mut spans = vec![(0usize, 0usize)];
        let mut ext = Vec::with_capacity(1);
        while out.len() < n {
            let x = spans.len() - 1;
            let reference = codec.decode_int(&mut r, x as u64 + 1)? as usize;
            ext.clear();
            codec.decode_literals(&mut r, 1, &mut ext)?;
            push_factor(&mut out, &mut spans, x, reference, ext[0])?;
        }
        if out.len() != n {
            return Err(corrupt("factor overruns the text length"));
        }
        unescape_terminated(&out)
    }
}
