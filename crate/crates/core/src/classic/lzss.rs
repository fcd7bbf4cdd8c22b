use crate::coders::CoderKind;
use crate::compressor::Compressor;
use crate::error::{corrupt, Result};
use crate::stats;
use crate::succinct::{BitReader, BitWriter};
use crate::textds::{unescape_terminated, DsFlags, StorageMode, Text, TextDs};

/// One LZ77 factor. Literal runs are maximal: two runs are never adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lz77Factor {
    Literal { pos: usize, len: usize },
    Reference { src: usize, len: usize },
}

impl Lz77Factor {
    pub fn len(&self) -> usize {
        match *self {
            Lz77Factor::Literal { len, .. } | Lz77Factor::Reference { len, .. } => len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_reference(&self) -> bool {
        matches!(self, Lz77Factor::Reference { .. })
    }
}

const NONE: usize = usize::MAX;

/// For every SA rank, the text positions of the nearest smaller SA values to
/// the left and to the right.
fn psv_nsv(sa: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = sa.len();
    let mut psv = vec![NONE; n];
    let mut nsv = vec![NONE; n];
    let mut stack: Vec<usize> = Vec::new();
    for i in 0..n {
        while let Some(&top) = stack.last() {
            if sa[top] > sa[i] {
                nsv[top] = sa[i];
                stack.pop();
            } else {
                break;
            }
        }
        psv[i] = stack.last().map_or(NONE, |&j| sa[j]);
        stack.push(i);
    }
    (psv, nsv)
}

fn common_prefix(text: &[u8], a: usize, b: usize) -> usize {
    text[a..].iter().zip(&text[b..]).take_while(|(x, y)| x == y).count()
}

/// Greedy LZ77 with threshold `theta`: at each position the longest previous
/// occurrence is one of the two SA neighbours with a smaller text position.
/// Of two equally long candidates the smaller source wins.
pub fn lzss_factorize(ds: &mut TextDs, theta: usize) -> Vec<Lz77Factor> {
    assert!(theta >= 1);
    ds.require(DsFlags::SA | DsFlags::ISA);
    let text = ds.bytes();
    let n = text.len();
    let isa = ds.isa().as_cow();
    let (psv, nsv) = psv_nsv(&ds.sa().as_cow());
    let mut factors = Vec::new();
    let mut run_start: Option<usize> = None;
    let mut d = 0;
    while d < n {
        let i = isa[d];
        let mut best = (0usize, NONE);
        for cand in [psv[i], nsv[i]] {
            if cand != NONE {
                let l = common_prefix(text, cand, d);
                if l > best.0 || (l == best.0 && cand < best.1) {
                    best = (l, cand);
                }
            }
        }
        if best.0 >= theta {
            if let Some(p) = run_start.take() {
                factors.push(Lz77Factor::Literal { pos: p, len: d - p });
            }
            factors.push(Lz77Factor::Reference { src: best.1, len: best.0 });
            d += best.0;
        } else {
            run_start.get_or_insert(d);
            d += 1;
        }
    }
    if let Some(p) = run_start {
        factors.push(Lz77Factor::Literal { pos: p, len: n - p });
    }
    factors
}

/// LZ77 via SA/ISA with a 1-bit flag per factor; literal runs carry their
/// length, references `(src, len - theta)`, all through the coder.
#[derive(Debug, Clone, Copy)]
pub struct LzssLcp {
    pub theta: usize,
    pub coder: CoderKind,
}

impl Compressor for LzssLcp {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut ds = TextDs::new(Text::escaped(input), StorageMode::Plain);
        let factors = stats::phase("factorize", || lzss_factorize(&mut ds, self.theta));
        let refs = factors.iter().filter(|f| f.is_reference()).count();
        stats::log("references", refs);
        stats::log("literal_runs", factors.len() - refs);
        let text = ds.bytes();
        let n = text.len() as u64;
        let runs: Vec<&[u8]> = factors
            .iter()
            .filter_map(|f| match *f {
                Lz77Factor::Literal { pos, len } => Some(&text[pos..pos + len]),
                _ => None,
            })
            .collect();
        let mut w = BitWriter::new();
        w.write_vbyte(n);
        let codec = self.coder.encoder(&mut w, &runs);
        for f in &factors {
            match *f {
                Lz77Factor::Literal { pos, len } => {
                    w.write_bit(false);
                    codec.encode_int(&mut w, len as u64, n + 1);
                    codec.encode_literals(&mut w, &text[pos..pos + len]);
                }
                Lz77Factor::Reference { src, len } => {
                    w.write_bit(true);
                    codec.encode_int(&mut w, src as u64, n);
                    codec.encode_int(&mut w, (len - self.theta) as u64, n);
                }
            }
        }
        Ok(w.finish())
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut r = BitReader::new(input);
        let n = r.read_vbyte()?;
        let codec = self.coder.decoder(&mut r)?;
        let mut out: Vec<u8> = Vec::with_capacity((n as usize).min(1 << 24));
        while (out.len() as u64) < n {
            let d = out.len();
            if r.read_bit()? {
                let src = codec.decode_int(&mut r, n)? as usize;
                let len = codec.decode_int(&mut r, n)? as usize + self.theta;
                if src >= d || (d + len) as u64 > n {
                    return Err(corrupt(format!("invalid reference ({src},{len}) at {d}")));
                }
                // byte-wise: the source may overlap the destination
                for k in 0..len {
                    out.push(out[src + k]);
                }
            } else {
                let len = codec.decode_int(&mut r, n + 1)? as usize;
                if (d + len) as u64 > n {
                    return Err(corrupt("literal run overruns the text"));
                }
                codec.decode_literals(&mut r, len, &mut out)?;
            }
        }
        unescape_terminated(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorize(s: &[u8], theta: usize) -> (Vec<u8>, Vec<Lz77Factor>) {
        let text = Text::new(s).unwrap();
        let bytes = text.as_bytes().to_vec();
        let mut ds = TextDs::new(text, StorageMode::Plain);
        (bytes, lzss_factorize(&mut ds, theta))
    }

    /// Quadratic greedy LZ77 with the same threshold rule.
    fn naive(t: &[u8], theta: usize) -> Vec<usize> {
        let mut lens = Vec::new();
        let mut d = 0;
        while d < t.len() {
            let best = (0..d).map(|s| common_prefix(t, s, d)).max().unwrap_or(0);
            if best >= theta {
                lens.push(best);
                d += best;
            } else {
                d += 1;
            }
        }
        lens
    }

    #[test]
    fn running_example() {
        let (_, f) = factorize(b"aaababaaabaababa", 2);
        // 1-based rendering
        let shown: Vec<String> = f
            .iter()
            .map(|f| match *f {
                Lz77Factor::Literal { pos, len } => format!("L{}+{}", pos + 1, len),
                Lz77Factor::Reference { src, len } => format!("({},{})", src + 1, len),
            })
            .collect();
        assert_eq!(shown, ["L1+1", "(1,2)", "L4+1", "(3,3)", "(2,4)", "(3,5)", "L17+1"]);
    }

    #[test]
    fn threshold_above_length_gives_one_run() {
        let (t, f) = factorize(b"abababab", 100);
        assert_eq!(f, [Lz77Factor::Literal { pos: 0, len: t.len() }]);
    }

    proptest! {
        #[test]
        fn references_point_backwards(s in proptest::collection::vec(1u8..4, 0..200), theta in 1usize..5) {
            let (t, f) = factorize(&s, theta);
            let mut d = 0;
            for fac in &f {
                if let Lz77Factor::Reference { src, len } = *fac {
                    prop_assert!(src < d && len >= theta);
                    for k in 0..len {
                        prop_assert_eq!(t[src + k], t[d + k]);
                    }
                }
                d += fac.len();
            }
            prop_assert_eq!(d, t.len());
        }

        #[test]
        fn matches_naive_greedy(s in proptest::collection::vec(1u8..4, 0..150), theta in 1usize..4) {
            let (t, f) = factorize(&s, theta);
            let lens: Vec<usize> = f.iter().filter(|f| f.is_reference()).map(|f| f.len()).collect();
            prop_assert_eq!(lens, naive(&t, theta));
        }
    }
}
