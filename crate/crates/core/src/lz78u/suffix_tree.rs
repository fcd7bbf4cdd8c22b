//! Explicit suffix tree built from the LCP intervals of SA/LCP.
//!
//! Nodes are numbered in pre-order and children are stored in lexicographic
//! order of their first edge character. Level ancestors are answered by
//! descending from the root, O(depth) per query.

use crate::error::{Error, Result};
use crate::succinct::{BitVector, RankSelect};
use crate::textds::TextDs;

pub type Node = usize;
pub const ROOT: Node = 0;

#[derive(Debug)]
pub struct SuffixTree<'a> {
    text: &'a [u8],
    parent: Vec<u32>,
    depth: Vec<u32>,
    level: Vec<u32>,
    /// text position of some suffix in the node's subtree
    rep: Vec<u32>,
    child_start: Vec<u32>,
    children: Vec<u32>,
    leaf_by_rank: Vec<u32>,
    internal: RankSelect,
}

impl<'a> SuffixTree<'a> {
    /// Builds the tree; `ds` must already hold SA and LCP.
    pub fn build(ds: &'a TextDs) -> Self {
        let text = ds.bytes();
        let n = text.len();
        assert!(n < (u32::MAX / 2) as usize, "text too long for 32-bit node ids");
        let sa = ds.sa().as_cow();
        let lcp = ds.lcp().as_cow();

        // (lb, rb, depth) of every LCP interval, root included
        let mut intervals: Vec<(u32, u32, u32)> = Vec::new();
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        for i in 1..n {
            let mut lb = i - 1;
            while lcp[i] < stack.last().unwrap().0 {
                let (d, l) = stack.pop().unwrap();
                intervals.push((l as u32, (i - 1) as u32, d as u32));
                lb = l;
            }
            if lcp[i] > stack.last().unwrap().0 {
                stack.push((lcp[i], lb));
            }
        }
        while let Some((d, l)) = stack.pop() {
            intervals.push((l as u32, (n - 1) as u32, d as u32));
        }
        // pre-order among intervals: by left bound, enclosing ones first
        intervals.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

        let total = intervals.len() + n;
        let mut parent = Vec::with_capacity(total);
        let mut depth = Vec::with_capacity(total);
        let mut level = Vec::with_capacity(total);
        let mut rep = Vec::with_capacity(total);
        let mut is_internal = BitVector::new(total);
        let mut leaf_by_rank = vec![0u32; n];
        let mut open: Vec<(u32, u32)> = Vec::new(); // (node, rb)
        let mut next_interval = 0;
        let mut add = |lb: u32, rb: u32, d: u32, internal: bool, open: &mut Vec<(u32, u32)>| -> u32 {
            let id = parent.len() as u32;
            while open.last().is_some_and(|&(_, r)| r < lb) {
                open.pop();
            }
            let (p, lv) = match open.last() {
                Some(&(p, _)) => (p, level[p as usize] + 1),
                None => (u32::MAX, 0),
            };
            parent.push(p);
            level.push(lv);
            depth.push(d);
            rep.push(sa[lb as usize] as u32);
            if internal {
                is_internal.set(id as usize, true);
                open.push((id, rb));
            }
            id
        };
        for i in 0..n {
            while next_interval < intervals.len() && intervals[next_interval].0 as usize == i {
                let (lb, rb, d) = intervals[next_interval];
                add(lb, rb, d, true, &mut open);
                next_interval += 1;
            }
            leaf_by_rank[i] = add(i as u32, i as u32, (n - sa[i]) as u32, false, &mut open);
        }

        let mut child_start = vec![0u32; total + 1];
        for &p in &parent[1..] {
            child_start[p as usize + 1] += 1;
        }
        for v in 0..total {
            child_start[v + 1] += child_start[v];
        }
        let mut fill = child_start.clone();
        let mut children = vec![0u32; total.saturating_sub(1)];
        for (v, &p) in parent.iter().enumerate().skip(1) {
            children[fill[p as usize] as usize] = v as u32;
            fill[p as usize] += 1;
        }
        Self {
            text,
            parent,
            depth,
            level,
            rep,
            child_start,
            children,
            leaf_by_rank,
            internal: RankSelect::new(is_internal),
        }
    }

    pub fn text(&self) -> &'a [u8] {
        self.text
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn internal_count(&self) -> usize {
        self.internal.count_ones()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_by_rank.len()
    }

    pub fn is_leaf(&self, v: Node) -> bool {
        !self.internal.bit_vector().get(v)
    }

    /// Rank of an internal node among internal nodes in pre-order.
    pub fn internal_rank(&self, v: Node) -> usize {
        debug_assert!(!self.is_leaf(v));
        self.internal.rank1_unchecked(v)
    }

    pub fn parent(&self, v: Node) -> Option<Node> {
        (v != ROOT).then(|| self.parent[v] as usize)
    }

    pub fn str_depth(&self, v: Node) -> usize {
        self.depth[v] as usize
    }

    /// Number of edges from the root.
    pub fn node_depth(&self, v: Node) -> usize {
        self.level[v] as usize
    }

    /// Text position of a suffix below `v`.
    pub fn representative(&self, v: Node) -> usize {
        self.rep[v] as usize
    }

    /// Leaf of the suffix with lexicographic rank `i` (0-based).
    pub fn leaf_select(&self, i: usize) -> Node {
        self.leaf_by_rank[i] as usize
    }

    pub fn children(&self, v: Node) -> impl ExactSizeIterator<Item = Node> + '_ {
        self.children[self.child_start[v] as usize..self.child_start[v + 1] as usize].iter().map(|&c| c as usize)
    }

    /// Text interval `[start, end)` spelling the edge into `v`.
    pub fn edge_label(&self, v: Node) -> (usize, usize) {
        let p = self.parent(v).expect("the root has no edge");
        let r = self.rep[v] as usize;
        (r + self.str_depth(p), r + self.str_depth(v))
    }

    /// First character of the edge into `v`.
    fn edge_char(&self, v: Node) -> u8 {
        self.text[self.edge_label(v).0]
    }

    /// Child of `v` whose edge starts with `c`.
    pub fn child(&self, v: Node, c: u8) -> Option<Node> {
        let kids = &self.children[self.child_start[v] as usize..self.child_start[v + 1] as usize];
        kids.binary_search_by(|&k| self.edge_char(k as usize).cmp(&c)).ok().map(|i| kids[i] as usize)
    }

    /// Child of `v` on the path of the suffix starting at `pos`, which
    /// must lie below `v`.
    pub fn child_toward(&self, v: Node, pos: usize) -> Node {
        self.child(v, self.text[pos + self.str_depth(v)]).expect("suffix continues below node")
    }

    /// Ancestor of `v` with node depth `d`.
    pub fn level_anc(&self, v: Node, d: usize) -> Result<Node> {
        let target = self.node_depth(v);
        if d > target {
            return Err(Error::OutOfRange { index: d, len: target + 1 });
        }
        let pos = self.rep[v] as usize;
        let mut cur = ROOT;
        for _ in 0..d {
            cur = self.child_toward(cur, pos);
        }
        Ok(cur)
    }
}
