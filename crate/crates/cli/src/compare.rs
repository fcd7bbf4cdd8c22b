//! Side-by-side comparison of compressors on one input, with a sha256 check
//! of every roundtrip.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::Instant;
use tdc_core::stats::{self, Session};
use tdc_core::{compress_with_header, decompress_with_header, AlgorithmSpec, Registry};

#[derive(Debug, Clone)]
pub enum Entry {
    Internal(String),
    External { name: String, compress: Vec<String>, decompress: Vec<String>, allowed: bool },
}

impl Entry {
    pub fn name(&self) -> &str {
        match self {
            Entry::Internal(s) => s,
            Entry::External { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chk {
    Ok,
    Fail,
    Error,
}

impl Chk {
    fn label(&self) -> &'static str {
        match self {
            Chk::Ok => "OK",
            Chk::Fail => "FAIL",
            Chk::Error => "ERROR",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub compressor: String,
    pub compress_seconds: Option<f64>,
    /// Peak tracked heap bytes; absent for external programs or without the tracking allocator.
    pub compress_memory: Option<usize>,
    pub compressed_size: Option<usize>,
    /// Compressed size as a percentage of the input size.
    pub rate: Option<f64>,
    pub decompress_seconds: Option<f64>,
    pub decompress_memory: Option<usize>,
    pub chk: Chk,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub input_size: usize,
    pub input_sha256: String,
    pub rows: Vec<Row>,
}

pub fn sha256_hex(data: &[u8]) -> String {
    hex::encode(Sha256::digest(data))
}

/// Runs every entry in order. Failures end up in their row; the run continues.
pub fn run_compare(registry: &Registry, input_name: &str, input: &[u8], entries: &[Entry]) -> Report {
    let digest = sha256_hex(input);
    let rows = entries
        .iter()
        .map(|e| {
            let mut row = Row {
                compressor: e.name().to_string(),
                compress_seconds: None,
                compress_memory: None,
                compressed_size: None,
                rate: None,
                decompress_seconds: None,
                decompress_memory: None,
                chk: Chk::Error,
                error: None,
            };
            let outcome = match e {
                Entry::Internal(spec) => run_internal(registry, spec, input, &mut row),
                Entry::External { allowed: false, .. } => Err("program not in the allow list".to_string()),
                Entry::External { compress, decompress, .. } => run_external(compress, decompress, input, &mut row),
            };
            match outcome {
                Ok(output) => row.chk = if sha256_hex(&output) == digest { Chk::Ok } else { Chk::Fail },
                Err(msg) => row.error = Some(msg),
            }
            row
        })
        .collect();
    Report { input: input_name.to_string(), input_size: input.len(), input_sha256: digest, rows }
}

fn measured<T>(body: impl FnOnce() -> T) -> (T, f64, Option<usize>) {
    let session = Session::begin("compare");
    let start = Instant::now();
    let value = stats::phase("run", body);
    let seconds = start.elapsed().as_secs_f64();
    let report = session.finish();
    let memory = stats::memory_tracking_enabled().then(|| report.phases.first().map_or(0, |p| p.mem_peak));
    (value, seconds, memory)
}

fn rate(compressed: usize, input: usize) -> f64 {
    if input == 0 {
        0.0
    } else {
        compressed as f64 * 100.0 / input as f64
    }
}

fn run_internal(registry: &Registry, spec: &str, input: &[u8], row: &mut Row) -> Result<Vec<u8>, String> {
    let spec = AlgorithmSpec::parse(spec).map_err(|e| e.to_string())?;
    let (packed, t, m) = measured(|| compress_with_header(registry, &spec, input));
    let packed = packed.map_err(|e| e.to_string())?;
    row.compress_seconds = Some(t);
    row.compress_memory = m;
    row.compressed_size = Some(packed.len());
    row.rate = Some(rate(packed.len(), input.len()));
    let (output, t, m) = measured(|| decompress_with_header(registry, &packed, None));
    row.decompress_seconds = Some(t);
    row.decompress_memory = m;
    output.map_err(|e| e.to_string())
}

fn run_command(template: &[String], input: &Path, output: &Path) -> Result<(), String> {
    let (program, args) = template.split_first().ok_or("empty command")?;
    let mut to_file = false;
    let args: Vec<String> = args
        .iter()
        .map(|a| {
            if a.contains("{output}") {
                to_file = true;
            }
            a.replace("{input}", &input.to_string_lossy()).replace("{output}", &output.to_string_lossy())
        })
        .collect();
    let mut cmd = Command::new(program);
    cmd.args(&args).stdin(Stdio::null()).stderr(Stdio::piped());
    if !to_file {
        let file = std::fs::File::create(output).map_err(|e| e.to_string())?;
        cmd.stdout(file);
    } else {
        cmd.stdout(Stdio::null());
    }
    let result = cmd.output().map_err(|e| format!("{program}: {e}"))?;
    if !result.status.success() {
        let stderr = String::from_utf8_lossy(&result.stderr);
        return Err(format!("{program} exited with {}: {}", result.status, stderr.trim()));
    }
    Ok(())
}

fn run_external(compress: &[String], decompress: &[String], input: &[u8], row: &mut Row) -> Result<Vec<u8>, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let plain = dir.path().join("input");
    let packed = dir.path().join("packed");
    let restored = dir.path().join("restored");
    std::fs::write(&plain, input).map_err(|e| e.to_string())?;
    let start = Instant::now();
    run_command(compress, &plain, &packed)?;
    row.compress_seconds = Some(start.elapsed().as_secs_f64());
    let size = std::fs::metadata(&packed).map_err(|e| e.to_string())?.len() as usize;
    row.compressed_size = Some(size);
    row.rate = Some(rate(size, input.len()));
    let start = Instant::now();
    run_command(decompress, &packed, &restored)?;
    row.decompress_seconds = Some(start.elapsed().as_secs_f64());
    std::fs::read(&restored).map_err(|e| e.to_string())
}

fn human_bytes(bytes: usize) -> String {
    const UNITS: [&str; 4] = ["B", "KiB", "MiB", "GiB"];
    let mut v = bytes as f64;
    let mut unit = 0;
    while v >= 1024.0 && unit + 1 < UNITS.len() {
        v /= 1024.0;
        unit += 1;
    }
    if unit == 0 {
        format!("{bytes} B")
    } else {
        format!("{v:.1} {}", UNITS[unit])
    }
}

pub const COLUMNS: [&str; 7] = ["Compressor", "C Time", "C Memory", "C Rate", "D Time", "D Memory", "chk"];

impl Report {
    fn cells(row: &Row) -> [String; 7] {
        let dash = || "-".to_string();
        let secs = |s: Option<f64>| s.map_or_else(dash, |s| format!("{s:.3}s"));
        let mem = |m: Option<usize>| m.map_or_else(dash, human_bytes);
        [
            row.compressor.clone(),
            secs(row.compress_seconds),
            mem(row.compress_memory),
            row.rate.map_or_else(dash, |r| format!("{r:.2}%")),
            secs(row.decompress_seconds),
            mem(row.decompress_memory),
            row.chk.label().to_string(),
        ]
    }

    /// Aligned text table: name column left-aligned, figures right-aligned.
    pub fn table(&self) -> String {
        let rows: Vec<[String; 7]> = self.rows.iter().map(Self::cells).collect();
        let mut widths = COLUMNS.map(str::len);
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (c, w)) in cells.iter().zip(widths).enumerate() {
                if i > 0 {
                    s.push_str(" | ");
                }
                if i == 0 {
                    let _ = write!(s, "{c:<w$}");
                } else {
                    let _ = write!(s, "{c:>w$}");
                }
            }
            s.trim_end().to_string()
        };
        let mut out = line(&COLUMNS.map(String::from));
        out.push('\n');
        out.push_str(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("-+-"));
        out.push('\n');
        for r in &rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        for row in &self.rows {
            if let Some(e) = &row.error {
                let _ = writeln!(out, "{}: {e}", row.compressor);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialize")
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.chk == Chk::Ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_is_header_only() {
        let report = run_compare(&Registry::standard(), "x", b"abc", &[]);
        let table = report.table();
        assert_eq!(table.lines().count(), 2);
        assert!(table.starts_with("Compressor | C Time | C Memory | C Rate | D Time | D Memory | chk"));
    }

    #[test]
    fn internal_rows_pass() {
        let entries = [Entry::Internal("bwt:rle".into()), Entry::Internal("lcpcomp(t=2)".into())];
        let report = run_compare(&Registry::standard(), "x", b"aaababaaabaababa", &entries);
        assert!(report.all_passed(), "{}", report.table());
        assert!(report.rows.iter().all(|r| r.compressed_size.is_some()));
    }

    #[test]
    fn errors_stay_in_their_row() {
        let entries = [
            Entry::Internal("nope".into()),
            Entry::External { name: "x".into(), compress: vec![], decompress: vec![], allowed: false },
            Entry::Internal("bwt".into()),
        ];
        let report = run_compare(&Registry::standard(), "x", b"banana", &entries);
        let chks: Vec<&Chk> = report.rows.iter().map(|r| &r.chk).collect();
        assert_eq!(chks, [&Chk::Error, &Chk::Error, &Chk::Ok]);
        assert!(report.table().contains("nope: unknown compressor `nope`"));
    }

    #[test]
    fn sha256_known_vector() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn byte_units() {
        assert_eq!(human_bytes(12), "12 B");
        assert_eq!(human_bytes(1536), "1.5 KiB");
        assert_eq!(human_bytes(3 << 20), "3.0 MiB");
    }
}
