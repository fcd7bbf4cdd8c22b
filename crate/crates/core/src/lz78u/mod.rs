//! LZ78U: LZ78 whose factors run along unary suffix-tree paths, so a factor
//! may add a multi-character label.
//!
//! Stream: VByte(n), the integer coder's model, the string coder's model,
//! then per factor the referred index (below the factor's own id) and the
//! label. A label is `gamma(len)` followed by its bytes (`plain`) or by
//! tokens `1 id` / `0 byte` (`buffering`).

mod factorize;
mod suffix_tree;

pub use factorize::{buffer_labels, factorize_offline, factorize_streaming, Lz78uFactor, Lz78uParse, Token};
pub use suffix_tree::{Node, SuffixTree, ROOT};

use crate::classic::positive;
use crate::coders::{read_gamma, write_gamma, CoderKind};
use crate::compressor::Compressor;
use crate::error::{corrupt, Result};
use crate::registry::{Config, Meta, Registry, CODER, COMPRESSOR, LZ78U_STRATEGY};
use crate::stats;
use crate::succinct::{BitReader, BitWriter};
use crate::textds::{unescape_terminated, DsFlags, StorageMode, Text, TextDs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    Plain,
    Buffering,
}

#[derive(Debug, Clone, Copy)]
pub struct Lz78u {
    pub theta: usize,
    pub coder: CoderKind,
    pub mode: LabelMode,
    pub string_coder: CoderKind,
    pub offline: bool,
}

impl Lz78u {
    fn from_config(c: &Config) -> Result<Self> {
        let comp = c.algo("comp");
        Ok(Self {
            theta: positive(c, "threshold")?,
            coder: CoderKind::from_config(c.algo("coder"))?,
            mode: if comp.id == "plain" { LabelMode::Plain } else { LabelMode::Buffering },
            string_coder: CoderKind::from_config(comp.algo("string_coder"))?,
            offline: c.int("offline") != 0,
        })
    }
}


impl Compressor for Lz78u {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut ds = TextDs::new(Text::escaped(input), StorageMode::Plain);
        ds.require(DsFlags::SA | DsFlags::ISA | DsFlags::LCP);
        let st = stats::phase("suffix tree", || SuffixTree::build(&ds));
        let parse = stats::phase("factorize", || {
            if self.offline {
                factorize_offline(&st, &ds)
            } else {
                factorize_streaming(&st, &ds)
            }
        });
        stats::log("factors", parse.factors.len());
        let text = ds.bytes();
        let tokens = match self.mode {
            LabelMode::Buffering => Some(stats::phase("buffering", || buffer_labels(&st, &parse, self.theta))),
            LabelMode::Plain => None,
        };
        // literal runs seen by the string coder
        let mut literal_bytes: Vec<u8> = Vec::new();
        let mut bounds: Vec<usize> = vec![0];
        match &tokens {
            None => {
                for f in &parse.factors {
                    literal_bytes.extend_from_slice(f.label(text));
                    bounds.push(literal_bytes.len());
                }
            }
            Some(tokens) => {
                // byte tokens are coded one at a time
                for c in tokens.iter().flatten().filter_map(|t| match *t {
                    Token::Byte(c) => Some(c),
                    Token::Factor(_) => None,
                }) {
                    literal_bytes.push(c);
                    bounds.push(literal_bytes.len());
                }
            }
        }
        bounds.dedup();
        let runs: Vec<&[u8]> = bounds.windows(2).map(|w| &literal_bytes[w[0]..w[1]]).collect();

        let mut w = BitWriter::new();
        w.write_vbyte(text.len() as u64);
        let ints = self.coder.encoder(&mut w, &[]);
        let strings = self.string_coder.encoder(&mut w, &runs);
        for (x0, f) in parse.factors.iter().enumerate() {
            let x = x0 as u64 + 1;
            ints.encode_int(&mut w, f.reference as u64, x);
            write_gamma(&mut w, f.len as u64);
            match &tokens {
                None => strings.encode_literals(&mut w, f.label(text)),
                Some(tokens) => {
                    for t in &tokens[x0] {
                        match *t {
                            Token::Byte(c) => {
                                w.write_bit(false);
                                strings.encode_literals(&mut w, &[c]);
                            }
                            Token::Factor(y) => {
                                w.write_bit(true);
                                ints.encode_int(&mut w, y as u64, x);
                            }
                        }
                    }
                }
            }
        }
        Ok(w.finish())
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut r = BitReader::new(input);
        let n = r.read_vbyte()? as usize;
        let ints = self.coder.decoder(&mut r)?;
        let strings = self.string_coder.decoder(&mut r)?;
        let mut out: Vec<u8> = Vec::with_capacity(n.min(1 << 24));
        let mut spans: Vec<(usize, usize)> = vec![(0, 0)];
        while out.len() < n {
            let x = spans.len() as u64;
            let reference = ints.decode_int(&mut r, x)? as usize;
            let label_len = read_gamma(&mut r)? as usize;
            let (rs, rl) = spans[reference];
            let start = out.len();
            if start.saturating_add(rl).saturating_add(label_len) > n {
                return Err(corrupt("factor overruns the text"));
            }
            out.extend_from_within(rs..rs + rl);
            let label_end = out.len() + label_len;
            match self.mode {
                LabelMode::Plain => strings.decode_literals(&mut r, label_len, &mut out)?,
                LabelMode::Buffering => {
                    while out.len() < label_end {
                        if r.read_bit()? {
                            let y = ints.decode_int(&mut r, x)? as usize;
                            let (ys, yl) = spans[y];
                            if out.len() + yl > label_end || yl == 0 {
                                return Err(corrupt("label token overruns the label"));
                            }
                            out.extend_from_within(ys..ys + yl);
                        } else {
                            strings.decode_literals(&mut r, 1, &mut out)?;
                        }
                    }
                }
            }
            spans.push((start, out.len() - start));
        }
        unescape_terminated(&out)
    }
}

pub(crate) fn register(reg: &mut Registry) {
    reg.register(
        Meta::new(LZ78U_STRATEGY, "plain", "labels coded byte by byte").algo("string_coder", &[], CODER, Some("huff")),
    );
    reg.register(
        Meta::new(LZ78U_STRATEGY, "buffering", "labels re-factorized into earlier factors")
            .algo("string_coder", &[], CODER, Some("huff")),
    );
    reg.register_compressor(
        Meta::new(COMPRESSOR, "lz78u", "LZ78 along unary suffix-tree paths")
            .int("threshold", &["t"], Some("3"))
            .algo("coder", &[], CODER, Some("bit"))
            .algo("comp", &[], LZ78U_STRATEGY, Some("buffering"))
            .int("offline", &[], Some("0")),
        |c| Lz78u::from_config(c).map(|l| Box::new(l) as Box<dyn Compressor>),
    );
}
