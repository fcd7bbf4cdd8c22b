//! Shared inputs for the criterion benchmarks.

use tdc_core::generators::{fibonacci, random, repetitive, thue_morse};

/// Named benchmark inputs of roughly `size` bytes.
pub fn workloads(size: usize) -> Vec<(&'static str, Vec<u8>)> {
    let mut fib = fibonacci(40);
    fib.truncate(size);
    let mut tm = thue_morse(30);
    tm.truncate(size);
    vec![("random", random(size, 1)), ("repetitive", repetitive(size, 2)), ("fibonacci", fib), ("thue_morse", tm)]
}

/// Compressor specs compared in the end-to-end benchmark.
pub const SPECS: &[&str] = &[
    "bwt:rle:mtf:encode(huff)",
    "lzss_lcp(t=5,coder=bit)",
    "lcpcomp(t=5,heap)",
    "lcpcomp(t=5,arrays)",
    "lz78(bit)",
    "lzw(bit)",
    "lz78u(t=3)",
];
