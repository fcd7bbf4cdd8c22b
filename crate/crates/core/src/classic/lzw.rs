use crate::coders::CoderKind;
use crate::compressor::Compressor;
use crate::error::{corrupt, Result};
use crate::stats;
use crate::succinct::{BitReader, BitWriter};
use std::collections::HashMap;

/// Classic LZW codes; the dictionary starts with all 256 single bytes.
pub fn lzw_codes(input: &[u8]) -> Vec<u32> {
    let mut dict: HashMap<(u32, u8), u32> = HashMap::new();
    let mut codes = Vec::new();
    let Some((&first, rest)) = input.split_first() else {
        return codes;
    };
    let mut cur = first as u32;
    for &b in rest {
        match dict.get(&(cur, b)) {
            Some(&code) => cur = code,
            None => {
                codes.push(cur);
                dict.insert((cur, b), 256 + dict.len() as u32);
                cur = b as u32;
            }
        }
    }
    codes.push(cur);
    codes
}

/// Incremental LZW decoder.
struct Decoder {
    /// (prefix code, last byte, first byte) for codes >= 256
    entries: Vec<(u32, u8, u8)>,
    prev: Option<u32>,
    scratch: Vec<u8>,
}

impl Decoder {
    fn new() -> Self {
        Self { entries: Vec::new(), prev: None, scratch: Vec::new() }
    }

    fn first_byte(&self, code: u32) -> u8 {
        if code < 256 {
            code as u8
        } else {
            self.entries[code as usize - 256].2
        }
    }

    fn expand(&mut self, mut code: u32, out: &mut Vec<u8>) {
        self.scratch.clear();
        while code >= 256 {
            let (prefix, last, _) = self.entries[code as usize - 256];
            self.scratch.push(last);
            code = prefix;
        }
        self.scratch.push(code as u8);
        out.extend(self.scratch.iter().rev());
    }

    fn push(&mut self, code: u32, out: &mut Vec<u8>) -> Result<()> {
        let size = 256 + self.entries.len() as u32;
        match self.prev {
            None if code >= 256 => return Err(corrupt("first LZW code must be a single byte")),
            None => {}
            Some(prev) => {
                if code > size {
                    return Err(corrupt(format!("LZW code {code} exceeds dictionary size {size}")));
                }
                // code == size is the cScSc case: the new entry starts with prev's first byte
                let c = if code == size { self.first_byte(prev) } else { self.first_byte(code) };
                let head = self.first_byte(prev);
                self.entries.push((prev, c, head));
            }
        }
        self.expand(code, out);
        self.prev = Some(code);
        Ok(())
    }
}

pub fn lzw_decode_codes(codes: &[u32]) -> Result<Vec<u8>> {
    let mut d = Decoder::new();
    let mut out = Vec::new();
    for &c in codes {
        d.push(c, &mut out)?;
    }
    Ok(out)
}

/// LZW with the `i`-th code written below bound `256 + i`, so bit-compact
/// widths grow with the dictionary.
#[derive(Debug, Clone, Copy)]
pub struct Lzw {
    pub coder: CoderKind,
}

impl Compressor for Lzw {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let codes = stats::phase("factorize", || lzw_codes(input));
        stats::log("codes", codes.len());
        let mut w = BitWriter::new();
        w.write_vbyte(input.len() as u64);
        let codec = self.coder.encoder(&mut w, &[]);
        for (i, &c) in codes.iter().enumerate() {
            codec.encode_int(&mut w, c as u64, 256 + i as u64);
        }
        Ok(w.finish())
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut r = BitReader::new(input);
        let n = r.read_vbyte()? as usize;
        let codec = self.coder.decoder(&mut r)?;
        let mut d = Decoder::new();
        let mut out = Vec::with_capacity(n.min(1 << 24));
        let mut i = 0u64;
        while out.len() < n {
            let code = codec.decode_int(&mut r, 256 + i)?;
            d.push(code as u32, &mut out)?;
            i += 1;
        }
        if out.len() != n {
            return Err(corrupt("LZW output overruns the stored length"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(lzw_codes(b"ab"), [97, 98]);
        assert_eq!(lzw_codes(b"aaaa"), [97, 256, 97]);
        assert_eq!(lzw_codes(b""), Vec::<u32>::new());
        assert_eq!(lzw_decode_codes(&[97, 256, 97]).unwrap(), b"aaaa");
    }

    #[test]
    fn rejects_codes_beyond_dictionary() {
        assert!(lzw_decode_codes(&[97, 258]).is_err());
        assert!(lzw_decode_codes(&[300]).is_err());
    }

    proptest! {
        #[test]
        fn roundtrip(s in proptest::collection::vec(0u8..3, 0..400)) {
            prop_assert_eq!(lzw_decode_codes(&lzw_codes(&s)).unwrap(), s);
        }
    }
}
