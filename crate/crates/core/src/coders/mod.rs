//! Integer and string coders.
//!
//! Every coder handles both bounded integers and literal byte runs. The
//! statistical coders (`huff`, `sle`) train a model over all literal runs
//! up front and write it at the start of the stream; their integers use
//! bit-compact widths.

mod huffman;
mod sle;
mod universal;

pub use huffman::{huffman_lengths, CanonicalCode, MAX_CODE_LEN};
pub use sle::{SleModel, TRIGRAM_THRESHOLD};
pub use universal::{
    read_bit_compact, read_delta, read_gamma, vbyte_decode, vbyte_encode, vbyte_write, write_bit_compact,
    write_delta, write_gamma,
};

use crate::error::{corrupt, Error, Result};
use crate::registry::{Config, Meta, Registry, CODER};
use crate::succinct::{BitReader, BitWriter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoderKind {
    Bit,
    Gamma,
    Delta,
    VByte,
    Huff,
    Sle,
}

pub const ALL_CODERS: [CoderKind; 6] =
    [CoderKind::Bit, CoderKind::Gamma, CoderKind::Delta, CoderKind::VByte, CoderKind::Huff, CoderKind::Sle];

pub(crate) fn register(reg: &mut Registry) {
    reg.register(Meta::new(CODER, "bit", "bit-compact integers, raw literals"));
    reg.register(Meta::new(CODER, "gamma", "Elias gamma integers, raw literals"));
    reg.register(Meta::new(CODER, "delta", "Elias delta integers, raw literals"));
    reg.register(Meta::new(CODER, "vbyte", "VByte integers, raw literals"));
    reg.register(Meta::new(CODER, "huff", "canonical Huffman literals"));
    reg.register(Meta::new(CODER, "sle", "static low-entropy literals (bytes and frequent 3-grams)"));
}

impl CoderKind {
    pub fn id(self) -> &'static str {
        match self {
            CoderKind::Bit => "bit",
            CoderKind::Gamma => "gamma",
            CoderKind::Delta => "delta",
            CoderKind::VByte => "vbyte",
            CoderKind::Huff => "huff",
            CoderKind::Sle => "sle",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        ALL_CODERS.iter().copied().find(|c| c.id() == id)
    }

    pub fn from_config(cfg: &Config) -> Result<Self> {
        if cfg.kind != CODER {
            return Err(Error::Param { id: cfg.id.clone(), msg: "not a coder".into() });
        }
        Self::from_id(&cfg.id).ok_or_else(|| Error::UnknownAlgorithm { kind: CODER.into(), id: cfg.id.clone() })
    }

    /// Starts an encoding session; writes the literal model (if any) trained
    /// on `literal_runs`.
    pub fn encoder(self, w: &mut BitWriter, literal_runs: &[&[u8]]) -> Codec {
        let literals = match self {
            CoderKind::Huff => {
                let mut freq = [0u64; 256];
                for run in literal_runs {
                    for &b in *run {
                        freq[b as usize] += 1;
                    }
                }
                let freqs: Vec<(u32, u64)> = (0..256u32).map(|b| (b, freq[b as usize])).collect();
                let code = CanonicalCode::from_frequencies(&freqs);
                code.write_header(w);
                Literals::Huff(code)
            }
            CoderKind::Sle => {
                let model = SleModel::train(literal_runs.iter().copied());
                model.write_header(w);
                Literals::Sle(model)
            }
            _ => Literals::Raw,
        };
        Codec { kind: self, literals }
    }

    /// Starts a decoding session, reading the literal model.
    pub fn decoder(self, r: &mut BitReader) -> Result<Codec> {
        let literals = match self {
            CoderKind::Huff => {
                let code = CanonicalCode::read_header(r)?;
                if code.lengths().iter().any(|&(s, _)| s > 255) {
                    return Err(corrupt("huffman symbol is not a byte"));
                }
                Literals::Huff(code)
            }
            CoderKind::Sle => Literals::Sle(SleModel::read_header(r)?),
            _ => Literals::Raw,
        };
        Ok(Codec { kind: self, literals })
    }
}

#[derive(Debug, Clone)]
enum Literals {
    Raw,
    Huff(CanonicalCode),
    Sle(SleModel),
}

/// An active coder with its literal model.
#[derive(Debug, Clone)]
pub struct Codec {
    kind: CoderKind,
    literals: Literals,
}

impl Codec {
    pub fn kind(&self) -> CoderKind {
        self.kind
    }

    /// Writes `value`, which must be below `bound`.
    pub fn encode_int(&self, w: &mut BitWriter, value: u64, bound: u64) {
        debug_assert!(value < bound, "{value} >= {bound}");
        match self.kind {
            CoderKind::Gamma => write_gamma(w, value + 1),
            CoderKind::Delta => write_delta(w, value + 1),
            CoderKind::VByte => w.write_vbyte(value),
            _ => write_bit_compact(w, value, bound),
        }
    }

    pub fn decode_int(&self, r: &mut BitReader, bound: u64) -> Result<u64> {
        let v = match self.kind {
            CoderKind::Gamma => read_gamma(r)? - 1,
            CoderKind::Delta => read_delta(r)? - 1,
            CoderKind::VByte => r.read_vbyte()?,
            _ => return read_bit_compact(r, bound),
        };
        if v >= bound {
            return Err(corrupt(format!("decoded integer {v} exceeds bound {bound}")));
        }
        Ok(v)
    }

    pub fn encode_literals(&self, w: &mut BitWriter, run: &[u8]) {
        match &self.literals {
            Literals::Raw => run.iter().for_each(|&b| w.write_bits(b as u64, 8)),
            Literals::Huff(code) => run.iter().for_each(|&b| code.encode(w, b as u32)),
            Literals::Sle(model) => model.encode_run(w, run),
        }
    }

    pub fn decode_literals(&self, r: &mut BitReader, len: usize, out: &mut Vec<u8>) -> Result<()> {
        match &self.literals {
            Literals::Raw => {
                for _ in 0..len {
                    out.push(r.read_bits(8)? as u8);
                }
            }
            Literals::Huff(code) => {
                for _ in 0..len {
                    out.push(code.decode(r)? as u8);
                }
            }
            Literals::Sle(model) => model.decode_run(r, len, out)?,
        }
        Ok(())
    }
}
