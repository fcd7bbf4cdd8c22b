//! Canonical Huffman codes over integer symbols.

use crate::error::{corrupt, Result};
use crate::succinct::{BitReader, BitWriter};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

pub const MAX_CODE_LEN: u8 = 64;

/// Optimal prefix-code lengths for `(symbol, frequency)` pairs with positive
/// frequencies. A lone symbol gets length 1.
pub fn huffman_lengths(freqs: &[(u32, u64)]) -> Vec<(u32, u8)> {
    let mut freqs: Vec<(u32, u64)> = freqs.iter().copied().filter(|&(_, f)| f > 0).collect();
    freqs.sort_unstable();
    match freqs.len() {
        0 => return Vec::new(),
        1 => return vec![(freqs[0].0, 1)],
        _ => {}
    }
    let leaves = freqs.len();
    // nodes 0..leaves are leaves, the rest internal; ties break on node index
    let mut parent = vec![usize::MAX; 2 * leaves - 1];
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> =
        freqs.iter().enumerate().map(|(i, &(_, f))| Reverse((f, i))).collect();
    let mut next = leaves;
    while heap.len() > 1 {
        let Reverse((w1, a)) = heap.pop().unwrap();
        let Reverse((w2, b)) = heap.pop().unwrap();
        parent[a] = next;
        parent[b] = next;
        heap.push(Reverse((w1 + w2, next)));
        next += 1;
    }
    // parents always have larger indices, so depths resolve top-down
    let root = next - 1;
    let mut depth = vec![0u32; 2 * leaves - 1];
    for v in (0..root).rev() {
        depth[v] = depth[parent[v]] + 1;
    }
    freqs
        .iter()
        .enumerate()
        .map(|(i, &(s, _))| {
            assert!(depth[i] <= MAX_CODE_LEN as u32, "huffman code length exceeds 64 bits");
            (s, depth[i] as u8)
        })
        .collect()
}

/// A canonical prefix code: equal-length codes are assigned in ascending
/// symbol order, shorter codes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCode {
    /// symbols sorted by (length, symbol)
    sorted: Vec<u32>,
    codes: HashMap<u32, (u64, u8)>,
    /// per length: (first code, count, offset into `sorted`)
    table: Vec<(u64, u64, usize)>,
    max_len: u8,
}

impl CanonicalCode {
    pub fn from_frequencies(freqs: &[(u32, u64)]) -> Self {
        Self::from_lengths(&huffman_lengths(freqs)).expect("huffman lengths are always valid")
    }

    /// Builds the canonical code for the given lengths, validating Kraft's
    /// inequality.
    pub fn from_lengths(lengths: &[(u32, u8)]) -> Result<Self> {
        let mut sorted: Vec<(u8, u32)> = lengths.iter().map(|&(s, l)| (l, s)).collect();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0].1 == w[1].1) {
            return Err(corrupt("duplicate symbol in code table"));
        }
        let mut kraft: u128 = 0;
        for &(l, _) in &sorted {
            if l == 0 || l > MAX_CODE_LEN {
                return Err(corrupt(format!("invalid code length {l}")));
            }
            kraft += 1u128 << (MAX_CODE_LEN - l);
        }
        if kraft > 1u128 << MAX_CODE_LEN {
            return Err(corrupt("code lengths violate the Kraft inequality"));
        }
        let max_len = sorted.last().map_or(0, |&(l, _)| l);
        let mut table = vec![(0u64, 0u64, 0usize); max_len as usize + 1];
        let mut codes = HashMap::with_capacity(sorted.len());
        let mut code: u64 = 0;
        let mut prev_len = sorted.first().map_or(0, |&(l, _)| l);
        for (idx, &(l, s)) in sorted.iter().enumerate() {
            if l != prev_len {
                code <<= l - prev_len;
                prev_len = l;
            }
            let entry = &mut table[l as usize];
            if entry.1 == 0 {
                *entry = (code, 0, idx);
            }
            entry.1 += 1;
            codes.insert(s, (code, l));
            code = code.wrapping_add(1);
        }
        Ok(Self { sorted: sorted.into_iter().map(|(_, s)| s).collect(), codes, table, max_len })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn code_len(&self, symbol: u32) -> Option<u8> {
        self.codes.get(&symbol).map(|&(_, l)| l)
    }

    pub fn code(&self, symbol: u32) -> Option<(u64, u8)> {
        self.codes.get(&symbol).copied()
    }

    /// `(symbol, length)` in ascending symbol order.
    pub fn lengths(&self) -> Vec<(u32, u8)> {
        let mut v: Vec<(u32, u8)> = self.codes.iter().map(|(&s, &(_, l))| (s, l)).collect();
        v.sort_unstable();
        v
    }

    /// `Σ 2^-len` scaled by `2^64`.
    pub fn kraft_sum(&self) -> u128 {
        self.codes.values().map(|&(_, l)| 1u128 << (MAX_CODE_LEN - l)).sum()
    }

    pub fn encode(&self, w: &mut BitWriter, symbol: u32) {
        let (code, len) = self.codes[&symbol];
        w.write_bits(code, len as u32);
    }

    pub fn decode(&self, r: &mut BitReader) -> Result<u32> {
        let mut code = 0u64;
        for len in 1..=self.max_len as usize {
            code = (code << 1) | r.read_bit()? as u64;
            let (first, count, offset) = self.table[len];
            if count > 0 && code >= first && code - first < count {
                return Ok(self.sorted[offset + (code - first) as usize]);
            }
        }
        Err(corrupt("invalid huffman code word"))
    }

    /// Header: VByte symbol count, then (VByte symbol, VByte length) pairs in
    /// ascending symbol order.
    pub fn write_header(&self, w: &mut BitWriter) {
        let lengths = self.lengths();
        w.write_vbyte(lengths.len() as u64);
        for (s, l) in lengths {
            w.write_vbyte(s as u64);
            w.write_vbyte(l as u64);
        }
    }

    pub fn read_header(r: &mut BitReader) -> Result<Self> {
        let count = r.read_vbyte()?;
        if count > r.bits_remaining() {
            return Err(corrupt("huffman header symbol count exceeds stream"));
        }
        let mut lengths = Vec::with_capacity(count as usize);
        for _ in 0..count {
            let s = r.read_vbyte()?;
            let l = r.read_vbyte()?;
            if s > u32::MAX as u64 || l == 0 || l > MAX_CODE_LEN as u64 {
                return Err(corrupt("invalid huffman header entry"));
            }
            lengths.push((s as u32, l as u8));
        }
        Self::from_lengths(&lengths)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    /// Optimal total code length by repeated merging of the two lightest
    /// weights in a sorted list: every merge adds its weight once per level.
    fn oracle_cost(weights: &[u64]) -> u64 {
        let mut w: Vec<u64> = weights.iter().copied().filter(|&x| x > 0).collect();
        if w.len() == 1 {
            return w[0];
        }
        let mut cost = 0;
        while w.len() > 1 {
            w.sort_unstable();
            let merged = w[0] + w[1];
            cost += merged;
            w.drain(..2);
            w.push(merged);
        }
        cost
    }

    #[test]
    fn two_symbols() {
        let code = CanonicalCode::from_frequencies(&[(b'a' as u32, 2), (b'b' as u32, 1)]);
        assert_eq!(code.code_len(b'a' as u32), Some(1));
        assert_eq!(code.code_len(b'b' as u32), Some(1));
        let mut w = BitWriter::new();
        for &c in b"aab" {
            code.encode(&mut w, c as u32);
        }
        assert_eq!(w.bits_written(), 3);
        assert_eq!(w.finish(), [0b0010_0000]);
    }

    #[test]
    fn single_symbol_gets_one_bit() {
        let code = CanonicalCode::from_frequencies(&[(b'a' as u32, 3)]);
        assert_eq!(code.code(b'a' as u32), Some((0, 1)));
        assert_eq!(code.kraft_sum(), 1u128 << 63);
    }

    #[test]
    fn kraft_equality_and_canonical_order() {
        let freqs: Vec<(u32, u64)> = (0..20).map(|s| (s, (s as u64 % 7) * 3 + 1)).collect();
        let code = CanonicalCode::from_frequencies(&freqs);
        assert_eq!(code.kraft_sum(), 1u128 << 64);
        let lens = code.lengths();
        for a in &lens {
            for b in &lens {
                if a.1 == b.1 && a.0 < b.0 {
                    assert!(code.code(a.0).unwrap().0 < code.code(b.0).unwrap().0);
                }
            }
        }
    }

    #[test]
    fn optimal_against_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let k = rng.gen_range(1..60);
            let freqs: Vec<(u32, u64)> = (0..k).map(|s| (s * 3, rng.gen_range(1..1000))).collect();
            let lengths = huffman_lengths(&freqs);
            let cost: u64 = lengths
                .iter()
                .map(|&(s, l)| freqs.iter().find(|f| f.0 == s).unwrap().1 * l as u64)
                .sum();
            let weights: Vec<u64> = freqs.iter().map(|f| f.1).collect();
            assert_eq!(cost, oracle_cost(&weights));
        }
    }

    #[test]
    fn header_roundtrip_and_decode() {
        let freqs: Vec<(u32, u64)> = vec![(1, 5), (300, 9), (7, 1), (42, 1), (99, 30)];
        let code = CanonicalCode::from_frequencies(&freqs);
        let msg = [99u32, 1, 300, 7, 42, 99, 99];
        let mut w = BitWriter::new();
        code.write_header(&mut w);
        for &s in &msg {
            code.encode(&mut w, s);
        }
        let bytes = w.finish();
        let mut r = BitReader::new(&bytes);
        let back = CanonicalCode::read_header(&mut r).unwrap();
        assert_eq!(back, code);
        for &s in &msg {
            assert_eq!(back.decode(&mut r).unwrap(), s);
        }
    }

    #[test]
    fn corrupt_headers() {
        // three symbols of length 1
        assert!(CanonicalCode::from_lengths(&[(0, 1), (1, 1), (2, 1)]).is_err());
        assert!(CanonicalCode::from_lengths(&[(0, 0)]).is_err());
        assert!(CanonicalCode::from_lengths(&[(0, 1), (0, 2)]).is_err());
        let mut w = BitWriter::new();
        w.write_vbyte(1);
        w.write_vbyte(5);
        w.write_vbyte(65);
        let b = w.finish();
        assert!(CanonicalCode::read_header(&mut BitReader::new(&b)).is_err());
    }

    #[test]
    fn unused_code_word_is_rejected() {
        // lengths {1, 2}: code word "11" is unassigned
        let code = CanonicalCode::from_lengths(&[(0, 1), (1, 2)]).unwrap();
        assert!(code.decode(&mut BitReader::new(&[0b1100_0000])).is_err());
    }
}
