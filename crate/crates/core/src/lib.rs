//! A modular lossless-compression framework.
//!
//! Compressors are selected at runtime by spec strings such as
//! `bwt:rle:mtf:encode(huff)` or `lcpcomp(t=5,arrays,scans(a=25))`, resolved
//! through a [`Registry`]. Compressed files start with the canonical spec
//! followed by `%`.

pub mod classic;
pub mod coders;
pub mod compressor;
pub mod error;
pub mod generators;
pub mod header;
pub mod lcpcomp;
pub mod lz78u;
pub mod registry;
pub mod spec;
pub mod stats;
pub mod succinct;
pub mod textds;

pub use compressor::{Compressor, Pipeline};
pub use error::{Error, Result};
pub use header::{compress_with_header, decompress_with_header, read_header, write_header};
pub use registry::{Config, Meta, Registry};
pub use spec::AlgorithmSpec;
pub use textds::{Text, TextDs};
