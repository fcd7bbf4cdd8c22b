//! Max-heap over array indices whose keys live in an external array.

const ABSENT: usize = usize::MAX;

/// Max-heap of values `0..n` ordered by `keys[v]`, ties broken by
/// `tie[v]` (larger wins), then by the value itself.
#[derive(Debug, Clone)]
pub struct ArrayMaxHeap {
    keys: Vec<usize>,
    tie: Vec<usize>,
    heap: Vec<usize>,
    pos: Vec<usize>,
}

impl ArrayMaxHeap {
    pub fn new(keys: Vec<usize>) -> Self {
        Self::with_tiebreak(keys, Vec::new())
    }

    /// `tie` must be empty or as long as `keys`.
    pub fn with_tiebreak(keys: Vec<usize>, tie: Vec<usize>) -> Self {
        assert!(tie.is_empty() || tie.len() == keys.len());
        let n = keys.len();
        Self { keys, tie, heap: Vec::new(), pos: vec![ABSENT; n] }
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.pos[v] != ABSENT
    }

    pub fn key(&self, v: usize) -> usize {
        self.keys[v]
    }

    pub fn keys(&self) -> &[usize] {
        &self.keys
    }

    pub fn top(&self) -> Option<usize> {
        self.heap.first().copied()
    }

    #[inline]
    fn above(&self, a: usize, b: usize) -> bool {
        let ta = self.tie.get(a).copied().unwrap_or(a);
        let tb = self.tie.get(b).copied().unwrap_or(b);
        (self.keys[a], ta) > (self.keys[b], tb)
    }

    /// Inserts `v` with its current key. No-op if already present.
    pub fn insert(&mut self, v: usize) {
        if self.contains(v) {
            return;
        }
        self.heap.push(v);
        self.pos[v] = self.heap.len() - 1;
        self.sift_up(self.heap.len() - 1);
    }

    /// Inserts `v` after setting its key.
    pub fn insert_with(&mut self, v: usize, key: usize) {
        assert!(!self.contains(v));
        self.keys[v] = key;
        self.insert(v);
    }

    /// Removes `v` and zeroes its key. No-op if absent.
    pub fn remove(&mut self, v: usize) {
        let p = self.pos[v];
        if p == ABSENT {
            return;
        }
        let last = self.heap.pop().unwrap();
        self.pos[v] = ABSENT;
        self.keys[v] = 0;
        if p < self.heap.len() {
            self.heap[p] = last;
            self.pos[last] = p;
            self.sift_down(p);
            self.sift_up(p);
        }
    }

    /// Lowers the key of `v`. No-op if absent.
    pub fn decrease_key(&mut self, v: usize, key: usize) {
        let p = self.pos[v];
        if p == ABSENT {
            return;
        }
        debug_assert!(key <= self.keys[v]);
        self.keys[v] = key;
        self.sift_down(p);
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.heap.swap(a, b);
        self.pos[self.heap[a]] = a;
        self.pos[self.heap[b]] = b;
    }

    fn sift_up(&mut self, mut p: usize) {
        while p > 0 {
            let parent = (p - 1) / 2;
            if self.above(self.heap[p], self.heap[parent]) {
                self.swap(p, parent);
                p = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, mut p: usize) {
        loop {
            let l = 2 * p + 1;
            if l >= self.heap.len() {
                break;
            }
            let r = l + 1;
            let mut c = l;
            if r < self.heap.len() && self.above(self.heap[r], self.heap[l]) {
                c = r;
            }
            if self.above(self.heap[c], self.heap[p]) {
                self.swap(p, c);
                p = c;
            } else {
                break;
            }
        }
    }

    pub fn into_keys(self) -> Vec<usize> {
        self.keys
    }
}
