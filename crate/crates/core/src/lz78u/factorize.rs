use super::suffix_tree::{Node, SuffixTree, ROOT};
use crate::succinct::{BitVector, RankSelect};
use crate::textds::TextDs;

/// Factor `x` is factor `reference` followed by the label
/// `text[start..start+len]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lz78uFactor {
    pub reference: usize,
    pub start: usize,
    pub len: usize,
}

impl Lz78uFactor {
    pub fn label<'t>(&self, text: &'t [u8]) -> &'t [u8] {
        &text[self.start..self.start + self.len]
    }
}

/// The factors together with the suffix-tree node of every factor.
#[derive(Debug, Clone, Default)]
pub struct Lz78uParse {
    pub factors: Vec<Lz78uFactor>,
    pub nodes: Vec<Node>,
}

/// Factor ids per internal node (0 = none), indexed by internal rank.
struct FactorIds<'s, 't> {
    st: &'s SuffixTree<'t>,
    ids: Vec<u32>,
}

impl<'s, 't> FactorIds<'s, 't> {
    fn new(st: &'s SuffixTree<'t>) -> Self {
        Self { st, ids: vec![0; st.internal_count()] }
    }

    fn get(&self, v: Node) -> usize {
        if v == ROOT || self.st.is_leaf(v) {
            0
        } else {
            self.ids[self.st.internal_rank(v)] as usize
        }
    }

    fn set(&mut self, v: Node, x: usize) {
        self.ids[self.st.internal_rank(v)] = x as u32;
    }
}

/// Streaming LZ78U: one pass over the text, factor ids stored in the
/// internal nodes of the suffix tree.
pub fn factorize_streaming(st: &SuffixTree, ds: &TextDs) -> Lz78uParse {
    let n = st.text().len();
    let isa = ds.isa();
    let mut ids = FactorIds::new(st);
    let mut out = Lz78uParse::default();
    let mut pos = 0;
    while pos < n {
        let leaf = st.leaf_select(isa.get(pos));
        let p = st.parent(leaf).expect("leaves have parents");
        if p == ROOT || ids.get(p) != 0 {
            let d = st.str_depth(p);
            out.factors.push(Lz78uFactor { reference: ids.get(p), start: pos + d, len: 1 });
            out.nodes.push(leaf);
            pos += d + 1;
        } else {
            // highest node on the root-to-p path without a factor
            let mut v = st.child_toward(ROOT, pos);
            while ids.get(v) != 0 {
                v = st.child_toward(v, pos);
            }
            let x = out.factors.len() + 1;
            ids.set(v, x);
            let up = st.parent(v).unwrap();
            let (a, b) = st.edge_label(v);
            let d = st.str_depth(up);
            out.factors.push(Lz78uFactor { reference: ids.get(up), start: pos + d, len: b - a });
            out.nodes.push(v);
            pos += st.str_depth(v);
        }
    }
    out
}

/// Offline LZ78U: first marks the factor nodes in a bit vector, then
/// derives referred indices through rank over the marks.
pub fn factorize_offline(st: &SuffixTree, ds: &TextDs) -> Lz78uParse {
    let n = st.text().len();
    let isa = ds.isa();
    let mut marked = BitVector::new(st.node_count());
    marked.set(ROOT, true);
    let mut order: Vec<Node> = Vec::new();
    let mut pos = 0;
    while pos < n {
        let leaf = st.leaf_select(isa.get(pos));
        let p = st.parent(leaf).unwrap();
        if marked.get(p) {
            marked.set(leaf, true);
            order.push(leaf);
            pos += st.str_depth(p) + 1;
        } else {
            let mut v = st.child_toward(ROOT, pos);
            while marked.get(v) {
                v = st.child_toward(v, pos);
            }
            marked.set(v, true);
            order.push(v);
            pos += st.str_depth(v);
        }
    }

    let z = order.len();
    let marks = RankSelect::new(marked);
    // index among marked nodes, the root excluded
    let slot = |v: Node| marks.rank1_unchecked(v) - 1;
    let mut factor_of = vec![0usize; z];
    for (x, &v) in order.iter().enumerate() {
        factor_of[slot(v)] = x + 1;
    }
    drop(order);
    let mut factors = vec![Lz78uFactor { reference: 0, start: 0, len: 0 }; z];
    let mut nodes = vec![ROOT; z];
    for k in 0..z {
        // select is 1-based and returns the prefix length; +1 skips the root
        let v = marks.select1(k + 2).expect("k-th marked node") - 1;
        let x = factor_of[k];
        let p = st.parent(v).unwrap();
        let (a, b) = st.edge_label(v);
        let len = if st.is_leaf(v) { 1 } else { b - a };
        let reference = if p == ROOT { 0 } else { factor_of[slot(p)] };
        factors[x - 1] = Lz78uFactor { reference, start: a, len };
        nodes[x - 1] = v;
    }
    // labels were taken from the nodes' representatives; move them onto the
    // factors' own text positions
    let mut pos = 0;
    for (f, &v) in factors.iter_mut().zip(&nodes) {
        let full = if st.is_leaf(v) { st.str_depth(st.parent(v).unwrap()) + 1 } else { st.str_depth(v) };
        f.start = pos + full - f.len;
        pos += full;
    }
    Lz78uParse { factors, nodes }
}

/// A piece of a re-factorized label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Byte(u8),
    /// an earlier factor, by id
    Factor(usize),
}

/// Re-factorizes every label greedily into earlier factors of length at
/// least `theta` and single bytes.
pub fn buffer_labels(st: &SuffixTree, parse: &Lz78uParse, theta: usize) -> Vec<Vec<Token>> {
    let text = st.text();
    let mut ids = FactorIds::new(st);
    for (x, &v) in parse.nodes.iter().enumerate() {
        if !st.is_leaf(v) {
            ids.set(v, x + 1);
        }
    }
    let mut out = Vec::with_capacity(parse.factors.len());
    for (x0, f) in parse.factors.iter().enumerate() {
        let x = x0 + 1;
        let mut tokens = Vec::new();
        let end = f.start + f.len;
        let mut q = f.start;
        while q < end {
            let rem = end - q;
            let mut best: Option<(usize, usize)> = None;
            let mut cur = ROOT;
            loop {
                let c = st.child_toward(cur, q);
                let d = st.str_depth(c);
                if st.is_leaf(c) || d > rem {
                    break;
                }
                let y = ids.get(c);
                if y == 0 || y >= x {
                    break;
                }
                if d >= theta {
                    best = Some((y, d));
                }
                cur = c;
            }
            match best {
                Some((y, d)) if d > 1 => {
                    tokens.push(Token::Factor(y));
                    q += d;
                }
                _ => {
                    tokens.push(Token::Byte(text[q]));
                    q += 1;
                }
            }
        }
        out.push(tokens);
    }
    out
}
