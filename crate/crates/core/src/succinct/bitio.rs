use crate::error::{Error, Result};

/// Writes bits MSB-first into a growing byte buffer. The last byte is
/// zero-padded when the writer is finished.
#[derive(Debug, Default, Clone)]
pub struct BitWriter {
    bytes: Vec<u8>,
    // bits already used in the last byte of `bytes`, 0 means the byte is full
    used: u8,
    bits_written: u64,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Continues an existing byte buffer (starting at a byte boundary).
    pub fn with_prefix(bytes: Vec<u8>) -> Self {
        Self { bytes, used: 0, bits_written: 0 }
    }

    pub fn write_bit(&mut self, bit: bool) {
        if self.used == 0 {
            self.bytes.push(0);
        }
        if bit {
            *self.bytes.last_mut().unwrap() |= 0x80 >> self.used;
        }
        self.used = (self.used + 1) & 7;
        self.bits_written += 1;
    }

    /// Writes the `width` low bits of `value`, most significant first.
    pub fn write_bits(&mut self, value: u64, width: u32) {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || value >> width == 0, "{value} does not fit in {width} bits");
        let mut remaining = width;
        while remaining > 0 {
            if self.used == 0 {
                self.bytes.push(0);
            }
            let free = 8 - self.used as u32;
            let take = free.min(remaining);
            let chunk = ((value >> (remaining - take)) & ((1u64 << take) - 1)) as u8;
            *self.bytes.last_mut().unwrap() |= chunk << (free - take);
            self.used = ((self.used as u32 + take) & 7) as u8;
            remaining -= take;
        }
        self.bits_written += width as u64;
    }

    /// Writes a VByte-coded integer as a sequence of 8-bit groups.
    pub fn write_vbyte(&mut self, value: u64) {
        for b in crate::coders::vbyte_encode(value) {
            self.write_bits(b as u64, 8);
        }
    }

    /// Total number of payload bits written so far (excluding padding).
    pub fn bits_written(&self) -> u64 {
        self.bits_written
    }

    pub fn finish(self) -> Vec<u8> {
        self.bytes
    }
}

/// Reads bits MSB-first from a byte slice.
#[derive(Debug, Clone)]
pub struct BitReader<'a> {
    bytes: &'a [u8],
    pos: u64,
}

impl<'a> BitReader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Self { bytes, pos: 0 }
    }

    pub fn bits_remaining(&self) -> u64 {
        self.bytes.len() as u64 * 8 - self.pos
    }

    pub fn position(&self) -> u64 {
        self.pos
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        if self.pos >= self.bytes.len() as u64 * 8 {
            return Err(Error::UnexpectedEof);
        }
        let byte = self.bytes[(self.pos >> 3) as usize];
        let bit = byte & (0x80 >> (self.pos & 7)) != 0;
        self.pos += 1;
        Ok(bit)
    }

    pub fn read_bits(&mut self, width: u32) -> Result<u64> {
        debug_assert!(width <= 64);
        if (width as u64) > self.bits_remaining() {
            return Err(Error::UnexpectedEof);
        }
        let mut value = 0u64;
        let mut remaining = width;
        while remaining > 0 {
            let offset = (self.pos & 7) as u32;
            let avail = 8 - offset;
            let take = avail.min(remaining);
            let byte = self.bytes[(self.pos >> 3) as usize] as u64;
            let chunk = (byte >> (avail - take)) & ((1u64 << take) - 1);
            value = (value << take) | chunk;
            self.pos += take as u64;
            remaining -= take;
        }
        Ok(value)
    }

    pub fn read_vbyte(&mut self) -> Result<u64> {
        let mut value = 0u64;
        let mut shift = 0u32;
        loop {
            let b = self.read_bits(8)? as u8;
            if shift >= 64 {
                return Err(crate::error::corrupt("vbyte value overflows 64 bits"));
            }
            value |= ((b & 0x7f) as u64) << shift;
            if b & 0x80 == 0 {
                return Ok(value);
            }
            shift += 7;
        }
    }
}
