//! lcpcomp: greedily substitutes the longest remaining repeated substring by
//! a reference to another occurrence, which may lie to the right.

mod decompress;
mod factorize;
mod heap;
mod stream;

pub use decompress::{decompress_compact, decompress_scans};
pub use factorize::{factorize_arrays, factorize_arrays_observed, factorize_heap, Factorization, RefTriplet};
pub use heap::ArrayMaxHeap;
pub use stream::{encode, parse, Item, Parsed};

use crate::classic::positive;
use crate::coders::CoderKind;
use crate::compressor::Compressor;
use crate::error::Result;
use crate::registry::{Config, Meta, Registry, CODER, COMPRESSOR, LCPCOMP_DEC, LCPCOMP_STRATEGY};
use crate::stats;
use crate::textds::{unescape_terminated, StorageMode, Text, TextDs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Heap,
    Arrays,
}

impl Strategy {
    pub fn factorize(self, ds: &mut TextDs, theta: usize) -> Factorization {
        match self {
            Strategy::Heap => factorize_heap(ds, theta),
            Strategy::Arrays => factorize_arrays(ds, theta),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decompression {
    Compact,
    Scans { alpha: usize },
}

impl Decompression {
    pub fn run(self, p: &Parsed) -> Result<Vec<u8>> {
        match self {
            Decompression::Compact => decompress_compact(p),
            Decompression::Scans { alpha } => decompress_scans(p, alpha),
        }
    }
}

/// Number of factors of a parse: references plus maximal literal runs.
pub fn factor_count(n: usize, sorted: &[RefTriplet]) -> usize {
    let mut runs = 0;
    let mut d = 0;
    for t in sorted {
        if t.pos > d {
            runs += 1;
        }
        d = t.pos + t.len;
    }
    if d < n {
        runs += 1;
    }
    runs + sorted.len()
}

#[derive(Debug, Clone, Copy)]
pub struct Lcpcomp {
    pub theta: usize,
    pub coder: CoderKind,
    pub strategy: Strategy,
    pub dec: Decompression,
}

impl Lcpcomp {
    fn from_config(c: &Config) -> Result<Self> {
        let strategy = match c.algo("comp").id.as_str() {
            "heap" => Strategy::Heap,
            _ => Strategy::Arrays,
        };
        let dec_cfg = c.algo("dec");
        let dec = match dec_cfg.id.as_str() {
            "compact" => Decompression::Compact,
            _ => Decompression::Scans { alpha: dec_cfg.int("alpha") as usize },
        };
        Ok(Self {
            theta: positive(c, "threshold")?,
            coder: CoderKind::from_config(c.algo("coder"))?,
            strategy,
            dec,
        })
    }
}

impl Compressor for Lcpcomp {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut ds = TextDs::new(Text::escaped(input), StorageMode::Plain);
        let f = stats::phase("factorize", || self.strategy.factorize(&mut ds, self.theta));
        stats::log("references", f.triplets.len());
        stats::log("double_decreases", f.double_decreases);
        stats::log("double_delays", f.double_delays);
        let sorted = stats::phase("sort", || f.sorted());
        stats::phase("encode", || encode(ds.bytes(), &sorted, self.theta, self.coder))
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let parsed = stats::phase("parse", || parse(input, self.coder))?;
        let text = stats::phase("resolve", || self.dec.run(&parsed))?;
        unescape_terminated(&text)
    }
}

pub(crate) fn register(reg: &mut Registry) {
    reg.register(Meta::new(LCPCOMP_STRATEGY, "heap", "max-heap over LCP values"));
    reg.register(Meta::new(LCPCOMP_STRATEGY, "arrays", "buckets of SA entries per LCP value"));
    reg.register(Meta::new(LCPCOMP_DEC, "compact", "single pass with waiting lists"));
    reg.register(
        Meta::new(LCPCOMP_DEC, "scans", "rescans before falling back to waiting lists").int("alpha", &["a"], Some("25")),
    );
    reg.register_compressor(
        Meta::new(COMPRESSOR, "lcpcomp", "longest-repeat substitution via the LCP array")
            .algo("coder", &[], CODER, Some("sle"))
            .int("threshold", &["t"], Some("5"))
            .algo("comp", &[], LCPCOMP_STRATEGY, Some("arrays"))
            .algo("dec", &[], LCPCOMP_DEC, Some("compact")),
        |c| Lcpcomp::from_config(c).map(|l| Box::new(l) as Box<dyn Compressor>),
    );
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_runs_compress_to_a_few_bytes() {
        let input = vec![b'a'; 100_000];
        for strategy in [Strategy::Heap, Strategy::Arrays] {
            for dec in [Decompression::Compact, Decompression::Scans { alpha: 1 }] {
                let c = Lcpcomp { theta: 5, coder: CoderKind::Bit, strategy, dec };
                let z = c.compress(&input).unwrap();
                assert!(z.len() < 32, "{} bytes", z.len());
                assert_eq!(c.decompress(&z).unwrap(), input);
            }
        }
    }

    #[test]
    fn factor_count_counts_runs() {
        let refs = [RefTriplet { src: 10, len: 6, pos: 1 }, RefTriplet { src: 4, len: 2, pos: 8 }, RefTriplet { src: 7, len: 4, pos: 10 }];
        // a (11,6) a (5,2) (8,4) ba$
        assert_eq!(factor_count(17, &refs), 6);
        assert_eq!(factor_count(17, &[]), 1);
    }
}
