use super::{build_bwt, build_isa, build_lcp_phi, build_sa, PackedIntArray, Text};
use crate::stats;
use crate::succinct::bits_for;

/// When (and whether) integer arrays are stored bit-compact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StorageMode {
    /// Machine-word arrays.
    Plain,
    /// Every array packed at width `⌈lg n⌉` as soon as it exists.
    Compressed,
    /// Built plain and packed once nothing pending depends on them.
    #[default]
    Delayed,
}

impl StorageMode {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "plain" => Some(Self::Plain),
            "compressed" => Some(Self::Compressed),
            "delayed" => Some(Self::Delayed),
            _ => None,
        }
    }
}

/// Set of data structures to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DsFlags(u8);

impl DsFlags {
    pub const SA: DsFlags = DsFlags(1);
    pub const ISA: DsFlags = DsFlags(2);
    pub const LCP: DsFlags = DsFlags(4);
    pub const BWT: DsFlags = DsFlags(8);

    pub fn contains(self, other: DsFlags) -> bool {
        self.0 & other.0 == other.0
    }
}

impl std::ops::BitOr for DsFlags {
    type Output = DsFlags;
    fn bitor(self, rhs: DsFlags) -> DsFlags {
        DsFlags(self.0 | rhs.0)
    }
}

/// An integer array stored either plain or packed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntArray {
    Plain(Vec<usize>),
    Packed(PackedIntArray),
}

impl IntArray {
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        match self {
            IntArray::Plain(v) => v[i],
            IntArray::Packed(p) => p.get(i) as usize,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            IntArray::Plain(v) => v.len(),
            IntArray::Packed(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_packed(&self) -> bool {
        matches!(self, IntArray::Packed(_))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        match self {
            IntArray::Plain(v) => v.clone(),
            IntArray::Packed(p) => p.iter().map(|x| x as usize).collect(),
        }
    }

    /// Borrows plain arrays, unpacks packed ones.
    pub fn as_cow(&self) -> std::borrow::Cow<'_, [usize]> {
        match self {
            IntArray::Plain(v) => std::borrow::Cow::Borrowed(v.as_slice()),
            IntArray::Packed(p) => std::borrow::Cow::Owned(p.iter().map(|x| x as usize).collect()),
        }
    }

    pub fn into_vec(self) -> Vec<usize> {
        match self {
            IntArray::Plain(v) => v,
            IntArray::Packed(p) => p.iter().map(|x| x as usize).collect(),
        }
    }

    fn pack(&mut self, width: u32) {
        if let IntArray::Plain(v) = self {
            *self = IntArray::Packed(PackedIntArray::from_slice(v, width));
        }
    }
}

/// Lazily built bundle of SA, ISA, LCP and BWT over a [`Text`].
///
/// ISA, LCP and BWT all depend on SA. In delayed mode SA stays plain until
/// every structure requested together with it has been built.
#[derive(Debug, Clone)]
pub struct TextDs {
    text: Text,
    mode: StorageMode,
    sa: Option<IntArray>,
    isa: Option<IntArray>,
    lcp: Option<IntArray>,
    bwt: Option<Vec<u8>>,
}

impl TextDs {
    pub fn new(text: Text, mode: StorageMode) -> Self {
        Self { text, mode, sa: None, isa: None, lcp: None, bwt: None }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn bytes(&self) -> &[u8] {
        self.text.as_bytes()
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mode(&self) -> StorageMode {
        self.mode
    }

    fn width(&self) -> u32 {
        bits_for(self.text.len() as u64).max(1)
    }

    pub fn require(&mut self, flags: DsFlags) {
        let needs_sa = flags.contains(DsFlags::SA)
            || flags.contains(DsFlags::ISA)
            || flags.contains(DsFlags::LCP)
            || flags.contains(DsFlags::BWT);
        if needs_sa && self.sa.is_none() {
            let sa = stats::phase("construct SA", || build_sa(self.text.as_bytes()));
            self.sa = Some(IntArray::Plain(sa));
            if self.mode == StorageMode::Compressed {
                self.pack_sa();
            }
        }
        if flags.contains(DsFlags::ISA) && self.isa.is_none() {
            let sa = self.sa.as_ref().unwrap().as_cow();
            let mut isa = IntArray::Plain(stats::phase("construct ISA", || build_isa(&sa)));
            if self.mode != StorageMode::Plain {
                isa.pack(self.width());
            }
            self.isa = Some(isa);
        }
        if flags.contains(DsFlags::LCP) && self.lcp.is_none() {
            let sa = self.sa.as_ref().unwrap().as_cow();
            let text = self.text.as_bytes();
            let mut lcp = IntArray::Plain(stats::phase("construct LCP", || build_lcp_phi(text, &sa)));
            if self.mode != StorageMode::Plain {
                lcp.pack(self.width());
            }
            self.lcp = Some(lcp);
        }
        if flags.contains(DsFlags::BWT) && self.bwt.is_none() {
            let sa = self.sa.as_ref().unwrap().as_cow();
            self.bwt = Some(stats::phase("construct BWT", || build_bwt(self.text.as_bytes(), &sa)));
        }
        // all dependents of SA requested in this call exist now
        if self.mode == StorageMode::Delayed {
            self.pack_sa();
        }
    }

    fn pack_sa(&mut self) {
        let width = self.width();
        if let Some(sa) = self.sa.as_mut() {
            if !sa.is_packed() {
                stats::phase("pack SA", || sa.pack(width));
            }
        }
    }

    pub fn sa(&self) -> &IntArray {
        self.sa.as_ref().expect("SA not built; call require first")
    }

    pub fn isa(&self) -> &IntArray {
        self.isa.as_ref().expect("ISA not built; call require first")
    }

    pub fn lcp(&self) -> &IntArray {
        self.lcp.as_ref().expect("LCP not built; call require first")
    }

    pub fn bwt(&self) -> &[u8] {
        self.bwt.as_deref().expect("BWT not built; call require first")
    }

    /// Hands the LCP array to the caller, who may overwrite it.
    pub fn release_lcp(&mut self) -> Option<IntArray> {
        self.lcp.take()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> Text {
        Text::new(b"aaababaaabaababa").unwrap()
    }

    #[test]
    fn lcp_pulls_in_sa() {
        let mut ds = TextDs::new(running(), StorageMode::Plain);
        ds.require(DsFlags::LCP);
        assert_eq!(ds.sa().get(0), 16);
        assert_eq!(ds.lcp().to_vec(), [0, 0, 1, 5, 2, 4, 6, 1, 3, 4, 3, 5, 0, 2, 3, 2, 4]);
        assert!(!ds.sa().is_packed());
    }

    #[test]
    fn delayed_equals_compressed() {
        let all = DsFlags::SA | DsFlags::ISA | DsFlags::LCP | DsFlags::BWT;
        let mut c = TextDs::new(running(), StorageMode::Compressed);
        let mut d = TextDs::new(running(), StorageMode::Delayed);
        let mut p = TextDs::new(running(), StorageMode::Plain);
        c.require(all);
        d.require(all);
        p.require(all);
        for (a, b) in [(c.sa(), d.sa()), (c.isa(), d.isa()), (c.lcp(), d.lcp())] {
            assert!(a.is_packed() && b.is_packed());
            match (a, b) {
                (IntArray::Packed(x), IntArray::Packed(y)) => {
                    assert_eq!(x.width(), 5);
                    assert_eq!(x.payload(), y.payload());
                }
                _ => unreachable!(),
            }
        }
        assert_eq!(c.sa().to_vec(), p.sa().to_vec());
        assert_eq!(c.lcp().to_vec(), p.lcp().to_vec());
        assert_eq!(c.bwt(), p.bwt());
    }

    #[test]
    fn incremental_requests() {
        let mut ds = TextDs::new(running(), StorageMode::Delayed);
        ds.require(DsFlags::SA);
        assert!(ds.sa().is_packed());
        ds.require(DsFlags::ISA);
        let isa = ds.isa().to_vec();
        let sa = ds.sa().to_vec();
        for (j, &p) in sa.iter().enumerate() {
            assert_eq!(isa[p], j);
        }
    }
}
