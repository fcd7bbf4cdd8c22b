//! Self-describing compressed files: `<canonical spec> '%' <body>`.

use crate::error::{Error, Result};
use crate::registry::Registry;
use crate::spec::AlgorithmSpec;
use crate::stats;
use std::io::Write;

pub const SEPARATOR: u8 = b'%';
/// The separator must appear within this many leading bytes.
pub const MAX_HEADER_LEN: usize = 4096;

pub fn write_header(spec: &AlgorithmSpec, out: &mut impl Write) -> Result<()> {
    let text = spec.to_string();
    if text.contains('%') {
        return Err(Error::Header("spec text contains `%`".into()));
    }
    out.write_all(text.as_bytes())?;
    out.write_all(&[SEPARATOR])?;
    Ok(())
}

/// Parses the header; returns the spec and the offset of the first body byte.
pub fn read_header(data: &[u8]) -> Result<(AlgorithmSpec, usize)> {
    let window = &data[..data.len().min(MAX_HEADER_LEN)];
    let sep = window
        .iter()
        .position(|&b| b == SEPARATOR)
        .ok_or_else(|| Error::Header(format!("no `%` separator within the first {MAX_HEADER_LEN} bytes")))?;
    if sep == 0 {
        return Err(Error::Header("empty spec".into()));
    }
    let text = std::str::from_utf8(&data[..sep]).map_err(|_| Error::Header("spec is not UTF-8".into()))?;
    let spec = AlgorithmSpec::parse(text).map_err(|e| Error::Header(e.to_string()))?;
    Ok((spec, sep + 1))
}

/// Compresses `input` with `spec` and prepends the canonical header.
pub fn compress_with_header(registry: &Registry, spec: &AlgorithmSpec, input: &[u8]) -> Result<Vec<u8>> {
    let cfg = registry.resolve(spec)?;
    let compressor = registry.build(&cfg)?;
    let mut out = Vec::new();
    write_header(&cfg.to_spec(), &mut out)?;
    let body = stats::phase("compress", || compressor.compress(input))?;
    out.extend_from_slice(&body);
    Ok(out)
}

/// Decompresses a file with header. An explicit `spec` overrides the
/// header's spec (the header is still skipped).
pub fn decompress_with_header(registry: &Registry, data: &[u8], spec: Option<&AlgorithmSpec>) -> Result<Vec<u8>> {
    let (header_spec, offset) = read_header(data)?;
    let spec = spec.unwrap_or(&header_spec);
    let compressor = registry.instantiate(spec)?;
    stats::phase("decompress", || compressor.decompress(&data[offset..]))
}
