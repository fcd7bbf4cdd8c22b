use crate::error::{Error, Result};

pub const SENTINEL: u8 = 0;
const ESCAPE: u8 = 0xff;

/// A byte string terminated by a unique sentinel byte `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    /// Appends the sentinel. Fails if `input` already contains a `0` byte.
    pub fn new(input: &[u8]) -> Result<Self> {
        if let Some(p) = input.iter().position(|&b| b == SENTINEL) {
            return Err(Error::InvalidInput(format!("input contains the sentinel byte at offset {p}")));
        }
        let mut bytes = Vec::with_capacity(input.len() + 1);
        bytes.extend_from_slice(input);
        bytes.push(SENTINEL);
        Ok(Self { bytes })
    }

    /// Escapes `input` (see [`escape`]) and appends the sentinel.
    pub fn escaped(input: &[u8]) -> Self {
        let mut bytes = escape(input);
        bytes.push(SENTINEL);
        Self { bytes }
    }

    /// Validates an already terminated byte string.
    pub fn from_terminated(bytes: Vec<u8>) -> Result<Self> {
        match bytes.iter().position(|&b| b == SENTINEL) {
            Some(p) if p + 1 == bytes.len() => Ok(Self { bytes }),
            _ => Err(Error::InvalidInput("text must contain exactly one sentinel, at the end".into())),
        }
    }

    /// Length including the sentinel.
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The text without its sentinel.
    pub fn content(&self) -> &[u8] {
        &self.bytes[..self.bytes.len() - 1]
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.bytes
    }
}

/// Makes arbitrary bytes sentinel-free: `0x00 -> ff 01`, `0xff -> ff ff`.
pub fn escape(input: &[u8]) -> Vec<u8> {
    let extra = input.iter().filter(|&&b| b == SENTINEL || b == ESCAPE).count();
    let mut out = Vec::with_capacity(input.len() + extra);
    for &b in input {
        match b {
            SENTINEL => out.extend_from_slice(&[ESCAPE, 0x01]),
            ESCAPE => out.extend_from_slice(&[ESCAPE, ESCAPE]),
            _ => out.push(b),
        }
    }
    out
}

pub fn unescape(input: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(input.len());
    let mut it = input.iter();
    while let Some(&b) = it.next() {
        if b != ESCAPE {
            out.push(b);
            continue;
        }
        match it.next() {
            Some(0x01) => out.push(SENTINEL),
            Some(&ESCAPE) => out.push(ESCAPE),
            _ => return Err(Error::Corrupt("invalid escape sequence".into())),
        }
    }
    Ok(out)
}

/// Checks that `bytes` is a sentinel-terminated escaped text and returns the
/// original input.
pub fn unescape_terminated(bytes: &[u8]) -> Result<Vec<u8>> {
    match bytes.iter().position(|&b| b == SENTINEL) {
        Some(p) if p + 1 == bytes.len() => unescape(&bytes[..p]),
        _ => Err(Error::Corrupt("decoded text lacks a unique trailing sentinel".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_embedded_sentinel() {
        assert!(Text::new(b"ab\0c").is_err());
        let t = Text::new(b"abc").unwrap();
        assert_eq!(t.as_bytes(), b"abc\0");
        assert_eq!(t.content(), b"abc");
        assert_eq!(Text::new(b"").unwrap().len(), 1);
    }

    #[test]
    fn escaping_leaves_plain_text_alone() {
        assert_eq!(escape(b"hello"), b"hello");
        assert_eq!(escape(&[0, 0xff, 7]), [0xff, 1, 0xff, 0xff, 7]);
        assert!(unescape(&[0xff]).is_err());
        assert!(unescape(&[0xff, 5]).is_err());
    }

    proptest! {
        #[test]
        fn escape_roundtrip(data in prop::collection::vec(any::<u8>(), 0..300)) {
            let e = escape(&data);
            prop_assert!(!e.contains(&SENTINEL));
            prop_assert_eq!(unescape(&e).unwrap(), data);
        }
    }
}
