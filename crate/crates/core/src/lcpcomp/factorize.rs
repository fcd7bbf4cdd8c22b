//! Computing the lcpcomp references: repeatedly substitute the longest
//! remaining repeated substring.

use super::heap::ArrayMaxHeap;
use crate::succinct::BitVector;
use crate::textds::{DsFlags, TextDs};

/// `text[pos..pos+len]` is replaced by a reference to `text[src..src+len]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RefTriplet {
    pub src: usize,
    pub len: usize,
    pub pos: usize,
}

/// References in creation order plus counters for the at-most-once
/// properties of key updates.
#[derive(Debug, Clone, Default)]
pub struct Factorization {
    pub triplets: Vec<RefTriplet>,
    /// number of key decreases
    pub decreases: usize,
    /// keys decreased more than once (heap)
    pub double_decreases: usize,
    /// bucket entries moved more than once (arrays)
    pub double_delays: usize,
}

impl Factorization {
    /// Triplets ordered by destination.
    pub fn sorted(&self) -> Vec<RefTriplet> {
        let mut t = self.triplets.clone();
        t.sort_unstable_by_key(|t| t.pos);
        t
    }
}

fn prepare(ds: &mut TextDs) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    ds.require(DsFlags::SA | DsFlags::ISA | DsFlags::LCP);
    let lcp = ds.release_lcp().expect("LCP requested").into_vec();
    (ds.sa().to_vec(), ds.isa().to_vec(), lcp)
}

/// Max-heap strategy. Among equal keys the larger text position wins.
pub fn factorize_heap(ds: &mut TextDs, theta: usize) -> Factorization {
    let theta = theta.max(1);
    let (sa, isa, lcp) = prepare(ds);
    let n = sa.len();
    let mut heap = ArrayMaxHeap::with_tiebreak(lcp, sa.clone());
    for i in 1..n {
        if heap.key(i) >= theta {
            heap.insert(i);
        }
    }
    let mut out = Factorization::default();
    let mut decreased = BitVector::new(n);
    while let Some(m) = heap.top() {
        let (fpos, fsrc, flen) = (sa[m], sa[m - 1], heap.key(m));
        out.triplets.push(RefTriplet { src: fsrc, len: flen, pos: fpos });
        for k in 0..flen {
            heap.remove(isa[fpos + k]);
        }
        for k in 0..flen.min(fpos) {
            let s = fpos - k - 1;
            let i = isa[s];
            if heap.contains(i) && s + heap.key(i) > fpos {
                let l = fpos - s;
                out.decreases += 1;
                if decreased.get(i) {
                    out.double_decreases += 1;
                }
                decreased.set(i, true);
                if l >= theta {
                    heap.decrease_key(i, l);
                } else {
                    heap.remove(i);
                }
            }
        }
    }
    out
}

/// Bucket strategy: entries are kept in arrays indexed by their LCP value
/// and processed from the largest value down. The LCP array is updated in
/// place; entries whose value dropped are moved to their new bucket when
/// met. `observe` sees the LCP array after every substitution.
pub fn factorize_arrays_observed(ds: &mut TextDs, theta: usize, mut observe: impl FnMut(&[usize])) -> Factorization {
    let theta = theta.max(1);
    let (sa, isa, mut lcp) = prepare(ds);
    let n = sa.len();
    let max = lcp.iter().copied().max().unwrap_or(0);
    let mut out = Factorization::default();
    if max < theta {
        return out;
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
    for i in 1..n {
        if lcp[i] >= theta {
            buckets[lcp[i]].push(i);
        }
    }
    let mut delayed = BitVector::new(n);
    let mut decreased = BitVector::new(n);
    for level in (theta..=max).rev() {
        let mut bucket = std::mem::take(&mut buckets[level]);
        // same order as the heap's tie-break
        bucket.sort_unstable_by(|&a, &b| sa[b].cmp(&sa[a]));
        for i in bucket {
            let cur = lcp[i];
            if cur != level {
                if cur >= theta {
                    if delayed.get(i) {
                        out.double_delays += 1;
                    }
                    delayed.set(i, true);
                    buckets[cur].push(i);
                }
                continue;
            }
            let (fpos, fsrc, flen) = (sa[i], sa[i - 1], level);
            out.triplets.push(RefTriplet { src: fsrc, len: flen, pos: fpos });
            for k in 0..flen {
                lcp[isa[fpos + k]] = 0;
            }
            for k in 0..flen.min(fpos) {
                let s = fpos - k - 1;
                let j = isa[s];
                if lcp[j] >= theta && s + lcp[j] > fpos {
                    out.decreases += 1;
                    if decreased.get(j) {
                        out.double_decreases += 1;
                    }
                    decreased.set(j, true);
                    lcp[j] = fpos - s;
                }
            }
            observe(&lcp);
        }
    }
    out
}

pub fn factorize_arrays(ds: &mut TextDs, theta: usize) -> Factorization {
    factorize_arrays_observed(ds, theta, |_| {})
}
