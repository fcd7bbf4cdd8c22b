use crate::error::{Error, Result};

/// A fixed-length plain bit vector.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut bv = BitVector::default();
        for b in bits {
            bv.push(b);
        }
        bv
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, bit);
    }

    /// Bit at 0-based index `i`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

const WORDS_PER_SUPER: usize = 8; // 512-bit superblocks
const SELECT_SAMPLE: usize = 512;

/// Rank/select index over an immutable [`BitVector`].
///
/// Rank uses a two-level directory: absolute counts per 512-bit superblock
/// and 16-bit relative counts per 64-bit word. Select samples the superblock
/// of every 512th one-bit and scans forward from there.
#[derive(Debug, Clone)]
pub struct RankSelect {
    bv: BitVector,
    supers: Vec<u64>,
    blocks: Vec<u16>,
    samples: Vec<u32>,
    ones: usize,
}

impl RankSelect {
    pub fn new(bv: BitVector) -> Self {
        let mut supers = Vec::with_capacity(bv.words.len() / WORDS_PER_SUPER + 1);
        let mut blocks = Vec::with_capacity(bv.words.len());
        let mut samples = Vec::new();
        let mut total = 0u64;
        let mut in_super = 0u64;
        for (w, &word) in bv.words.iter().enumerate() {
            if w % WORDS_PER_SUPER == 0 {
                supers.push(total);
                in_super = 0;
            }
            blocks.push(in_super as u16);
            let c = word.count_ones() as u64;
            // record the superblock holding one number k*SELECT_SAMPLE+1
            while (samples.len() * SELECT_SAMPLE) as u64 + 1 <= total + c {
                samples.push((w / WORDS_PER_SUPER) as u32);
            }
            total += c;
            in_super += c;
        }
        supers.push(total);
        Self { bv, supers, blocks, samples, ones: total as usize }
    }

    pub fn bit_vector(&self) -> &BitVector {
        &self.bv
    }

    pub fn len(&self) -> usize {
        self.bv.len
    }

    pub fn is_empty(&self) -> bool {
        self.bv.len == 0
    }

    pub fn count_ones(&self) -> usize {
        self.ones
    }

    /// Number of one-bits among the first `i` bits (`0 <= i <= len`).
    pub fn rank1(&self, i: usize) -> Result<usize> {
        if i > self.bv.len {
            return Err(Error::OutOfRange { index: i, len: self.bv.len });
        }
        Ok(self.rank1_unchecked(i))
    }

    #[inline]
    pub fn rank1_unchecked(&self, i: usize) -> usize {
        let w = i / 64;
        if w == self.bv.words.len() {
            return self.ones;
        }
        let partial = self.bv.words[w] & ((1u64 << (i % 64)) - 1);
        self.supers[w / WORDS_PER_SUPER] as usize
            + self.blocks[w] as usize
            + partial.count_ones() as usize
    }

    pub fn rank0(&self, i: usize) -> Result<usize> {
        Ok(i - self.rank1(i)?)
    }

    /// Length of the shortest prefix holding `k` one-bits, i.e. the 1-based
    /// position of the `k`-th one. `rank1(select1(k)) == k`.
    pub fn select1(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.ones {
            return Err(Error::OutOfRange { index: k, len: self.ones });
        }
        let mut sb = self.samples[(k - 1) / SELECT_SAMPLE] as usize;
        while self.supers[sb + 1] < k as u64 {
            sb += 1;
        }
        let mut remaining = k - self.supers[sb] as usize;
        let mut w = sb * WORDS_PER_SUPER;
        loop {
            let c = self.bv.words[w].count_ones() as usize;
            if remaining <= c {
                break;
            }
            remaining -= c;
            w += 1;
        }
        let mut word = self.bv.words[w];
        for _ in 1..remaining {
            word &= word - 1;
        }
        Ok(w * 64 + word.trailing_zeros() as usize + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn from_str(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|c| c == b'1'))
    }

    #[test]
    fn small_examples() {
        let rs = RankSelect::new(from_str("10110"));
        assert_eq!(rs.rank1(3).unwrap(), 2);
        assert_eq!(rs.rank1(5).unwrap(), 3);
        assert_eq!(rs.select1(2).unwrap(), 3);
        assert_eq!(rs.select1(3).unwrap(), 4);
        assert_eq!(rs.rank0(5).unwrap(), 2);
    }

    #[test]
    fn errors() {
        let rs = RankSelect::new(from_str("10110"));
        assert!(rs.rank1(6).is_err());
        assert!(rs.select1(0).is_err());
        assert!(rs.select1(4).is_err());
        let empty = RankSelect::new(BitVector::new(0));
        assert_eq!(empty.rank1(0).unwrap(), 0);
        assert!(empty.select1(1).is_err());
    }

    #[test]
    fn against_linear_scan() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for round in 0..60 {
            let n = rng.gen_range(0..10_000);
            let density = [0.01, 0.5, 0.99][round % 3];
            let bits: Vec<bool> = (0..n).map(|_| rng.gen_bool(density)).collect();
            let rs = RankSelect::new(BitVector::from_bits(bits.iter().copied()));
            let mut count = 0;
            assert_eq!(rs.rank1(0).unwrap(), 0);
            for (i, &b) in bits.iter().enumerate() {
                if b {
                    count += 1;
                    assert_eq!(rs.select1(count).unwrap(), i + 1);
                }
                assert_eq!(rs.rank1(i + 1).unwrap(), count);
            }
            assert_eq!(rs.count_ones(), count);
        }
    }
}
