/// Fixed-width integer array packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedIntArray {
    words: Vec<u64>,
    width: u32,
    len: usize,
}

impl PackedIntArray {
    pub fn new(len: usize, width: u32) -> Self {
        assert!((1..=64).contains(&width), "width must be in 1..=64");
        let bits = len as u128 * width as u128;
        Self { words: vec![0; bits.div_ceil(64) as usize], width, len }
    }

    pub fn from_slice(values: &[usize], width: u32) -> Self {
        let mut a = Self::new(values.len(), width);
        for (i, &v) in values.iter().enumerate() {
            a.set(i, v as u64);
        }
        a
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Raw payload words; bits past `len * width` are zero.
    pub fn payload(&self) -> &[u64] {
        &self.words
    }

    fn mask(&self) -> u64 {
        if self.width == 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        let bit = i * self.width as usize;
        let (w, off) = (bit / 64, (bit % 64) as u32);
        let lo = self.words[w] >> off;
        let value = if off + self.width > 64 { lo | (self.words[w + 1] << (64 - off)) } else { lo };
        value & self.mask()
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u64) {
        debug_assert!(i < self.len);
        let mask = self.mask();
        assert!(value & !mask == 0, "{value} does not fit in {} bits", self.width);
        let bit = i * self.width as usize;
        let (w, off) = (bit / 64, (bit % 64) as u32);
        self.words[w] = (self.words[w] & !(mask << off)) | (value << off);
        if off + self.width > 64 {
            let spill = off + self.width - 64;
            let hi_mask = (1u64 << spill) - 1;
            self.words[w + 1] = (self.words[w + 1] & !hi_mask) | (value >> (64 - off));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn heap_bytes(&self) -> usize {
        self.words.len() * 8
    }
}
