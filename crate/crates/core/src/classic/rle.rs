use crate::coders::{vbyte_decode, vbyte_write};
use crate::compressor::Compressor;
use crate::error::{corrupt, Result};

/// Replaces every maximal run `c^k` with `k >= 2` by `c c VByte(k-2)`.
#[derive(Debug, Default, Clone, Copy)]
pub struct Rle;

pub fn rle_encode(input: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(input.len());
    let mut i = 0;
    while i < input.len() {
        let c = input[i];
        let mut j = i + 1;
        while j < input.len() && input[j] == c {
            j += 1;
        }
        let k = j - i;
        out.push(c);
        if k >= 2 {
            out.push(c);
            vbyte_write(&mut out, (k - 2) as u64);
        }
        i = j;
    }
    out
}

pub fn rle_decode(input: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(input.len());
    let mut i = 0;
    while i < input.len() {
        let c = input[i];
        if i + 1 < input.len() && input[i + 1] == c {
            let (m, used) = vbyte_decode(&input[i + 2..]).map_err(|_| corrupt("truncated run length"))?;
            let k = usize::try_from(m).ok().and_then(|m| m.checked_add(2)).ok_or_else(|| corrupt("run too long"))?;
            out.resize(out.len() + k, c);
            i += 2 + used;
        } else {
            out.push(c);
            i += 1;
        }
    }
    Ok(out)
}

impl Compressor for Rle {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        Ok(rle_encode(input))
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        rle_decode(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(rle_encode(b"aaaa"), [b'a', b'a', 2]);
        assert_eq!(rle_encode(b"ab"), b"ab");
        assert_eq!(rle_encode(b"aab"), [b'a', b'a', 0, b'b']);
        assert_eq!(rle_encode(b""), b"");
        let long = vec![7u8; 130];
        assert_eq!(rle_encode(&long), [7, 7, 0x80, 0x01]);
    }

    #[test]
    fn truncated_length() {
        assert!(rle_decode(b"aa").is_err());
        assert!(rle_decode(&[b'a', b'a', 0x80]).is_err());
    }

    proptest! {
        #[test]
        fn roundtrip(s in proptest::collection::vec(0u8..3, 0..300)) {
            prop_assert_eq!(rle_decode(&rle_encode(&s)).unwrap(), s);
        }
    }
}
