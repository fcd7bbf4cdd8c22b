//! Baseline compressors: BWT, RLE, MTF, LZ78, LZW, LZ77 via SA/LCP and the
//! coder wrapper `encode`.

mod bwt;
mod encode;
mod lz78;
mod lzss;
mod lzw;
mod mtf;
mod rle;

pub use bwt::{bwt_forward, bwt_inverse, Bwt};
pub use encode::Encode;
pub use lz78::{lz78_expand, lz78_factorize, Lz78, Lz78Factor};
pub use lzss::{lzss_factorize, Lz77Factor, LzssLcp};
pub use lzw::{lzw_codes, lzw_decode_codes, Lzw};
pub use mtf::{mtf_decode, mtf_encode, Mtf};
pub use rle::{rle_decode, rle_encode, Rle};

use crate::coders::CoderKind;
use crate::compressor::Compressor;
use crate::error::{Error, Result};
use crate::registry::{Config, Meta, Registry, CODER, COMPRESSOR};

pub(crate) fn positive(cfg: &Config, name: &str) -> Result<usize> {
    match cfg.int(name) {
        0 => Err(Error::Param { id: cfg.id.clone(), msg: format!("{name} must be at least 1") }),
        v => usize::try_from(v).map_err(|_| Error::Param { id: cfg.id.clone(), msg: format!("{name} too large") }),
    }
}

pub(crate) fn register(reg: &mut Registry) {
    reg.register_compressor(Meta::new(COMPRESSOR, "bwt", "Burrows-Wheeler transform"), |_| Ok(Box::new(Bwt)));
    reg.register_compressor(Meta::new(COMPRESSOR, "rle", "run-length encoding"), |_| Ok(Box::new(Rle)));
    reg.register_compressor(Meta::new(COMPRESSOR, "mtf", "move-to-front"), |_| Ok(Box::new(Mtf)));
    reg.register_compressor(
        Meta::new(COMPRESSOR, "encode", "codes the input with a coder").algo("coder", &[], CODER, None),
        |c| Ok(Box::new(Encode { coder: CoderKind::from_config(c.algo("coder"))? }) as Box<dyn Compressor>),
    );
    reg.register_compressor(
        Meta::new(COMPRESSOR, "lz78", "LZ78 factorization").algo("coder", &[], CODER, Some("bit")),
        |c| Ok(Box::new(Lz78 { coder: CoderKind::from_config(c.algo("coder"))? })),
    );
    reg.register_compressor(
        Meta::new(COMPRESSOR, "lzw", "LZW factorization").algo("coder", &[], CODER, Some("bit")),
        |c| Ok(Box::new(Lzw { coder: CoderKind::from_config(c.algo("coder"))? })),
    );
    reg.register_compressor(
        Meta::new(COMPRESSOR, "lzss_lcp", "LZ77 factorization via suffix and LCP arrays")
            .int("threshold", &["t"], Some("2"))
            .algo("coder", &[], CODER, Some("bit")),
        |c| {
            Ok(Box::new(LzssLcp {
                theta: positive(c, "threshold")?,
                coder: CoderKind::from_config(c.algo("coder"))?,
            }))
        },
    );
}
