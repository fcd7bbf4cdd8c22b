//! Comparison suites loaded from TOML.
//!
//! ```toml
//! internal = ["bwt:rle:mtf:encode(huff)", "lcpcomp(t=5)"]
//! allow = ["gzip"]
//!
//! [[external]]
//! name = "gzip -9"
//! compress = ["gzip", "-9", "-c", "{input}"]
//! decompress = ["gzip", "-d", "-c", "{input}"]
//! ```
//!
//! `{input}` and `{output}` are replaced by file paths; a command without
//! `{output}` writes its result to stdout. External programs only run when
//! listed in `allow`.

use crate::compare::Entry;
use serde::Deserialize;
use std::path::Path;

/// Internal specs compared when no suite is given; covers every registered compressor.
pub const DEFAULT_SUITE: &[&str] = &[
    "bwt",
    "rle",
    "mtf",
    "bwt:rle",
    "bwtzip",
    "encode(huff)",
    "encode(sle)",
    "lz78(bit)",
    "lzw(bit)",
    "lzss_lcp(t=5,coder=bit)",
    "lcpcomp(t=5,heap,compact)",
    "lcpcomp(t=5,arrays,compact)",
    "lcpcomp(t=5,arrays,scans(a=25))",
    "lz78u(t=3,coder=bit,comp=buffering(huff))",
    "lz78u(t=3,coder=bit,comp=plain(huff))",
];

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    pub internal: Option<Vec<String>>,
    #[serde(default)]
    pub allow: Vec<String>,
    #[serde(default)]
    pub external: Vec<ExternalSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExternalSpec {
    pub name: String,
    pub compress: Vec<String>,
    pub decompress: Vec<String>,
}

impl Suite {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Entries in run order: internal first, then external.
    pub fn entries(&self) -> Vec<Entry> {
        let internal = match &self.internal {
            Some(list) => list.clone(),
            None => DEFAULT_SUITE.iter().map(|s| s.to_string()).collect(),
        };
        let mut out: Vec<Entry> = internal.into_iter().map(Entry::Internal).collect();
        for e in &self.external {
            let allowed = e.compress.first().is_some_and(|p| self.allow.contains(p))
                && e.decompress.first().is_some_and(|p| self.allow.contains(p));
            out.push(Entry::External {
                name: e.name.clone(),
                compress: e.compress.clone(),
                decompress: e.decompress.clone(),
                allowed,
            });
        }
        out
    }
}
