//! Stream layout: VByte(n), VByte(theta), literal model, then items in text
//! order, each led by a flag bit. A literal run is `0 gamma(len) literals`,
//! a reference `1 src len-theta+1` with `src` bit-compact below `n` and the
//! length in Elias gamma.

use super::factorize::RefTriplet;
use crate::coders::{read_bit_compact, read_gamma, write_bit_compact, write_gamma, CoderKind};
use crate::error::{corrupt, Error, Result};
use crate::succinct::{BitReader, BitWriter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Item {
    /// `len` bytes starting at `offset` in [`Parsed::literals`]
    Literal { offset: usize, len: usize },
    Reference { src: usize, len: usize },
}

/// A decoded stream before resolving references.
#[derive(Debug, Clone, Default)]
pub struct Parsed {
    pub n: usize,
    pub theta: usize,
    pub items: Vec<Item>,
    pub literals: Vec<u8>,
}

impl Parsed {
    /// Items paired with their destination positions.
    pub fn placed(&self) -> impl Iterator<Item = (usize, Item)> + '_ {
        self.items.iter().scan(0usize, |d, &item| {
            let at = *d;
            *d += match item {
                Item::Literal { len, .. } | Item::Reference { len, .. } => len,
            };
            Some((at, item))
        })
    }
}

/// Encodes `text` with the given references, which must be sorted by
/// position and must not overlap.
pub fn encode(text: &[u8], sorted: &[RefTriplet], theta: usize, coder: CoderKind) -> Result<Vec<u8>> {
    let n = text.len();
    let mut runs: Vec<&[u8]> = Vec::new();
    let mut d = 0;
    for t in sorted {
        if t.pos < d || t.pos + t.len > n || t.len < theta || t.src + t.len > n {
            return Err(Error::InvalidInput(format!("overlapping or out-of-range reference {t:?}")));
        }
        if t.pos > d {
            runs.push(&text[d..t.pos]);
        }
        d = t.pos + t.len;
    }
    if d < n {
        runs.push(&text[d..]);
    }

    let mut w = BitWriter::new();
    w.write_vbyte(n as u64);
    w.write_vbyte(theta as u64);
    let codec = coder.encoder(&mut w, &runs);
    let literal = |w: &mut BitWriter, run: &[u8]| {
        w.write_bit(false);
        write_gamma(w, run.len() as u64);
        codec.encode_literals(w, run);
    };
    let mut d = 0;
    for t in sorted {
        if t.pos > d {
            literal(&mut w, &text[d..t.pos]);
        }
        w.write_bit(true);
        write_bit_compact(&mut w, t.src as u64, n as u64);
        write_gamma(&mut w, (t.len - theta + 1) as u64);
        d = t.pos + t.len;
    }
    if d < n {
        literal(&mut w, &text[d..]);
    }
    Ok(w.finish())
}

pub fn parse(bytes: &[u8], coder: CoderKind) -> Result<Parsed> {
    let mut r = BitReader::new(bytes);
    let n = r.read_vbyte()?;
    let theta = r.read_vbyte()?;
    if n > isize::MAX as u64 || theta == 0 {
        return Err(corrupt("implausible stream header"));
    }
    let (n, theta) = (n as usize, theta as usize);
    let codec = coder.decoder(&mut r)?;
    let mut p = Parsed { n, theta, ..Default::default() };
    let mut d = 0;
    while d < n {
        let len;
        if r.read_bit()? {
            let src = read_bit_compact(&mut r, n as u64)? as usize;
            len = (read_gamma(&mut r)? as usize).saturating_add(theta - 1);
            if src.saturating_add(len) > n {
                return Err(corrupt(format!("reference source ({src},{len}) exceeds the text")));
            }
            p.items.push(Item::Reference { src, len });
        } else {
            len = read_gamma(&mut r)? as usize;
            let offset = p.literals.len();
            if d.saturating_add(len) > n {
                return Err(corrupt("literal run overruns the text"));
            }
            codec.decode_literals(&mut r, len, &mut p.literals)?;
            p.items.push(Item::Literal { offset, len });
        }
        if d.saturating_add(len) > n {
            return Err(corrupt("item overruns the text"));
        }
        d += len;
    }
    Ok(p)
}
