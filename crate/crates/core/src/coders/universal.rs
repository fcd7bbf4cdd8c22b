//! Elias-γ, Elias-δ, VByte and bit-compact integer codes.

use crate::error::{corrupt, Error, Result};
use crate::succinct::{bits_for, BitReader, BitWriter};

/// Elias-γ: `⌊lg v⌋` zero bits followed by the binary form of `v >= 1`.
pub fn write_gamma(w: &mut BitWriter, v: u64) {
    assert!(v >= 1, "gamma code is defined for v >= 1");
    let len = 64 - v.leading_zeros();
    w.write_bits(0, len - 1);
    w.write_bits(v, len);
}

pub fn read_gamma(r: &mut BitReader) -> Result<u64> {
    let mut zeros = 0u32;
    while !r.read_bit()? {
        zeros += 1;
        if zeros > 63 {
            return Err(corrupt("gamma prefix longer than 63 bits"));
        }
    }
    let rest = r.read_bits(zeros)?;
    Ok((1u64 << zeros) | rest)
}

/// Elias-δ: γ of the bit length, then the low `⌊lg v⌋` bits of `v >= 1`.
pub fn write_delta(w: &mut BitWriter, v: u64) {
    assert!(v >= 1, "delta code is defined for v >= 1");
    let len = 64 - v.leading_zeros();
    write_gamma(w, len as u64);
    let low = len - 1;
    w.write_bits(v & low_mask(low), low);
}

pub fn read_delta(r: &mut BitReader) -> Result<u64> {
    let len = read_gamma(r)?;
    if len > 64 {
        return Err(corrupt("delta length exceeds 64 bits"));
    }
    let low = (len - 1) as u32;
    let rest = r.read_bits(low)?;
    Ok(if low == 64 { rest } else { (1u64 << low) | rest })
}

fn low_mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// 7-bit groups, least significant first; the high bit marks continuation.
pub fn vbyte_encode(mut v: u64) -> Vec<u8> {
    let mut out = Vec::with_capacity(2);
    loop {
        let b = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(b);
            return out;
        }
        out.push(b | 0x80);
    }
}

pub fn vbyte_write(out: &mut Vec<u8>, v: u64) {
    out.extend(vbyte_encode(v));
}

/// Decodes one VByte value; returns it with the number of bytes consumed.
pub fn vbyte_decode(bytes: &[u8]) -> Result<(u64, usize)> {
    let mut v = 0u64;
    for (i, &b) in bytes.iter().enumerate() {
        if i >= 10 {
            return Err(corrupt("vbyte value overflows 64 bits"));
        }
        v |= ((b & 0x7f) as u64) << (7 * i);
        if b & 0x80 == 0 {
            return Ok((v, i + 1));
        }
    }
    Err(Error::Corrupt("unterminated vbyte sequence".into()))
}

/// Fixed-width code for `v < n` using `⌈lg n⌉` bits.
pub fn write_bit_compact(w: &mut BitWriter, v: u64, n: u64) {
    debug_assert!(v < n.max(1));
    w.write_bits(v, bits_for(n));
}

pub fn read_bit_compact(r: &mut BitReader, n: u64) -> Result<u64> {
    let v = r.read_bits(bits_for(n))?;
    if n > 0 && v >= n {
        return Err(corrupt(format!("bit-compact value {v} out of range 0..{n}")));
    }
    Ok(v)
}
