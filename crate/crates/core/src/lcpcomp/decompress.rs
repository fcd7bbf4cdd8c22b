//! Resolving lcpcomp references. Sources may lie to the right of their
//! destination, so positions whose source is still unknown wait in lists
//! keyed by that source position.

use super::stream::{Item, Parsed};
use crate::error::{corrupt, Result};
use crate::stats;
use crate::succinct::{BitVector, RankSelect};

const NIL: usize = usize::MAX;

/// Intrusive singly linked waiting lists: `head[key]` starts a chain of
/// positions linked through `next`.
struct WaitLists {
    head: Vec<usize>,
    next: Vec<usize>,
}

impl WaitLists {
    fn new(keys: usize, positions: usize) -> Self {
        Self { head: vec![NIL; keys], next: vec![NIL; positions] }
    }

    fn push(&mut self, key: usize, pos: usize, slot: usize) {
        self.next[slot] = self.head[key];
        self.head[key] = pos;
    }
}

struct Output {
    text: Vec<u8>,
    written: BitVector,
    missing: usize,
}

impl Output {
    fn new(n: usize) -> Self {
        Self { text: vec![0; n], written: BitVector::new(n), missing: n }
    }

    fn put(&mut self, p: usize, c: u8) {
        self.text[p] = c;
        self.written.set(p, true);
        self.missing -= 1;
    }

    fn finish(self) -> Result<Vec<u8>> {
        if self.missing > 0 {
            return Err(corrupt(format!("{} positions never resolved (cyclic references)", self.missing)));
        }
        Ok(self.text)
    }
}

/// Writes `c` at `p` and everything transitively waiting for `p`.
/// `key_of` maps a position to its waiting-list key and its `next` slot.
fn put_and_drain(out: &mut Output, lists: &mut WaitLists, p: usize, c: u8, key_of: &dyn Fn(usize) -> usize) {
    out.put(p, c);
    if lists.head[key_of(p)] == NIL {
        return;
    }
    let mut stack = vec![p];
    while let Some(q) = stack.pop() {
        let key = key_of(q);
        let mut w = std::mem::replace(&mut lists.head[key], NIL);
        while w != NIL {
            let following = lists.next[key_of(w)];
            out.put(w, out.text[q]);
            stack.push(w);
            w = following;
        }
    }
}

/// Single pass with a waiting list per text position.
pub fn decompress_compact(p: &Parsed) -> Result<Vec<u8>> {
    let mut out = Output::new(p.n);
    let mut lists = WaitLists::new(p.n, p.n);
    let ident = |q: usize| q;
    for (d, item) in p.placed() {
        match item {
            Item::Literal { offset, len } => {
                for k in 0..len {
                    put_and_drain(&mut out, &mut lists, d + k, p.literals[offset + k], &ident);
                }
            }
            Item::Reference { src, len } => {
                for k in 0..len {
                    let s = src + k;
                    if out.written.get(s) {
                        let c = out.text[s];
                        put_and_drain(&mut out, &mut lists, d + k, c, &ident);
                    } else {
                        lists.push(s, d + k, d + k);
                    }
                }
            }
        }
    }
    out.finish()
}

/// Copies the resolvable bytes of a reference; true if it is complete.
fn copy_available(out: &mut Output, d: usize, src: usize, len: usize) -> bool {
    let mut done = true;
    for k in 0..len {
        if out.written.get(d + k) {
            continue;
        }
        if out.written.get(src + k) {
            let c = out.text[src + k];
            out.put(d + k, c);
        } else {
            done = false;
        }
    }
    done
}

/// Pass 0 plus up to `alpha` rescans of the unresolved references; what is
/// left is finished with waiting lists indexed by the rank of the gap
/// positions, so the lists cost memory only for unresolved positions.
pub fn decompress_scans(p: &Parsed, alpha: usize) -> Result<Vec<u8>> {
    let mut out = Output::new(p.n);
    let mut pending: Vec<(usize, usize, usize)> = Vec::new();
    for (d, item) in p.placed() {
        match item {
            Item::Literal { offset, len } => {
                for k in 0..len {
                    out.put(d + k, p.literals[offset + k]);
                }
            }
            Item::Reference { src, len } => {
                if !copy_available(&mut out, d, src, len) {
                    pending.push((d, src, len));
                }
            }
        }
    }
    let mut rounds = 0;
    while rounds < alpha && !pending.is_empty() {
        let before = out.missing;
        pending.retain(|&(d, src, len)| !copy_available(&mut out, d, src, len));
        rounds += 1;
        if out.missing == before {
            break;
        }
    }
    stats::log("scan_rounds", rounds);
    stats::log("gaps_after_scans", out.missing);
    if pending.is_empty() {
        return out.finish();
    }

    let gaps = RankSelect::new(BitVector::from_bits((0..p.n).map(|i| !out.written.get(i))));
    let slots = gaps.count_ones();
    let mut lists = WaitLists::new(slots, slots);
    let rank = |q: usize| gaps.rank1_unchecked(q);
    for &(d, src, len) in &pending {
        for k in 0..len {
            let q = d + k;
            if out.written.get(q) {
                continue;
            }
            let s = src + k;
            if out.written.get(s) {
                let c = out.text[s];
                put_and_drain(&mut out, &mut lists, q, c, &rank);
            } else {
                lists.push(rank(s), q, rank(q));
            }
        }
    }
    out.finish()
}
