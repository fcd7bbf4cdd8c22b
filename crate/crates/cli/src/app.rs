//! Argument handling and job execution for the `tdc` binary.

use crate::compare::{run_compare, Entry};
use crate::suite::Suite;
use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use tdc_core::generators::generate_from_spec;
use tdc_core::stats::Session;
use tdc_core::{read_header, AlgorithmSpec, Registry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Data = 2,
}

#[derive(Debug, Parser)]
#[command(name = "tdc", version, about = "Modular lossless compression", args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    job: JobArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compress and decompress one input with several compressors and verify each roundtrip.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
struct JobArgs {
    /// Compressor spec, e.g. 'bwt:rle:mtf:encode(huff)'. With -d it overrides the header.
    #[arg(short = 'a', long = "algorithm", value_name = "SPEC")]
    algorithm: Option<String>,
    /// Output file (default: stdout).
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    output: Option<PathBuf>,
    /// Decompress instead of compress.
    #[arg(short = 'd', long = "decompress")]
    decompress: bool,
    /// Write the phase statistics as JSON to `<output>.stats.json` (stderr without -o).
    #[arg(long)]
    stats: bool,
    /// Use a generated string as input, e.g. 'fib(20)' or 'repetitive(n=1048576,seed=3)'.
    #[arg(long, value_name = "KIND(N)")]
    generate: Option<String>,
    /// Omit the header when compressing; decompression then needs -a.
    #[arg(long)]
    raw: bool,
    /// List the registered algorithms.
    #[arg(long)]
    list: bool,
    /// Input file (default: stdin).
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Internal compressor spec to include; repeatable. Replaces the default suite.
    #[arg(short = 'a', long = "algorithm", value_name = "SPEC")]
    algorithms: Vec<String>,
    /// TOML suite with internal specs and allow-listed external programs.
    #[arg(long, value_name = "FILE")]
    suite: Option<PathBuf>,
    /// Also write the report as JSON.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Use a generated string as input.
    #[arg(long, value_name = "KIND(N)")]
    generate: Option<String>,
    input: Option<PathBuf>,
}

struct Failure {
    code: ExitCode,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure { code: ExitCode::Usage, msg: msg.to_string() }
}

fn data(msg: impl std::fmt::Display) -> Failure {
    Failure { code: ExitCode::Data, msg: msg.to_string() }
}

type Outcome = Result<ExitCode, Failure>;

/// Parses `args` (including the program name) and runs the job.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { ExitCode::Usage } else { ExitCode::Success };
        }
    };
    let registry = Registry::standard();
    let outcome = match cli.command {
        Some(Command::Compare(args)) => compare(&registry, args, stdout),
        None => job(&registry, cli.job, stdout, stderr),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "tdc: {}", f.msg);
            f.code
        }
    }
}

fn read_input(registry: &Registry, path: Option<&Path>, generate: Option<&str>) -> Result<(String, Vec<u8>), Failure> {
    match (path, generate) {
        (Some(_), Some(_)) => Err(usage("give either an input file or --generate, not both")),
        (None, Some(g)) => Ok((g.to_string(), generate_from_spec(registry, g).map_err(usage)?)),
        (Some(p), None) => {
            let bytes = std::fs::read(p).map_err(|e| data(format!("{}: {e}", p.display())))?;
            Ok((p.display().to_string(), bytes))
        }
        (None, None) => {
            let mut bytes = Vec::new();
            std::io::stdin().read_to_end(&mut bytes).map_err(data)?;
            Ok(("<stdin>".to_string(), bytes))
        }
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| data(format!("{}: {e}", p.display()))),
        None => stdout.write_all(bytes).and_then(|_| stdout.flush()).map_err(data),
    }
}

fn parse_spec(text: &str) -> Result<AlgorithmSpec, Failure> {
    AlgorithmSpec::parse(text).map_err(usage)
}

fn list(registry: &Registry, stdout: &mut dyn Write) -> Outcome {
    let mut out = String::new();
    for m in registry.metas() {
        let params: Vec<String> = m
            .params
            .iter()
            .map(|p| match p.default {
                Some(d) => format!("{}={d}", p.name),
                None => p.name.to_string(),
            })
            .collect();
        out.push_str(&format!("{:<20} {:<12} ({}) {}\n", m.kind, m.id, params.join(","), m.doc));
    }
    for (alias, expansion) in registry.aliases() {
        out.push_str(&format!("{:<20} {alias:<12} = {expansion}\n", "alias"));
    }
    write_output(None, out.as_bytes(), stdout)?;
    Ok(ExitCode::Success)
}

fn job(registry: &Registry, args: JobArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    if args.list {
        return list(registry, stdout);
    }
    if args.decompress && args.generate.is_some() {
        return Err(usage("--generate cannot be combined with -d"));
    }
    let mode_compress = !args.decompress && (args.algorithm.is_some() || args.generate.is_none());
    let (_, input) = read_input(registry, args.input.as_deref(), args.generate.as_deref())?;
    if !args.decompress && !mode_compress {
        write_output(args.output.as_deref(), &input, stdout)?;
        return Ok(ExitCode::Success);
    }
    let spec = args.algorithm.as_deref().map(parse_spec).transpose()?;
    let session = args.stats.then(|| Session::begin(args.algorithm.clone().unwrap_or_else(|| "decompress".into())));
    let result = if args.decompress {
        decompress(registry, spec.as_ref(), args.raw, &input)
    } else {
        let spec = spec.ok_or_else(|| usage("compression needs -a SPEC"))?;
        compress(registry, &spec, args.raw, &input)
    };
    let output = result?;
    if let Some(session) = session {
        let json = session.finish().to_json();
        match &args.output {
            Some(p) => {
                let mut name = p.clone().into_os_string();
                name.push(".stats.json");
                std::fs::write(&name, json).map_err(data)?;
            }
            None => {
                let _ = writeln!(stderr, "{json}");
            }
        }
    }
    write_output(args.output.as_deref(), &output, stdout)?;
    Ok(ExitCode::Success)
}

fn compress(registry: &Registry, spec: &AlgorithmSpec, raw: bool, input: &[u8]) -> Result<Vec<u8>, Failure> {
    let cfg = registry.resolve(spec).map_err(usage)?;
    let compressor = registry.build(&cfg).map_err(usage)?;
    let mut out = Vec::new();
    if !raw {
        tdc_core::write_header(&cfg.to_spec(), &mut out).map_err(usage)?;
    }
    let body = tdc_core::stats::phase("compress", || compressor.compress(input)).map_err(data)?;
    out.extend_from_slice(&body);
    Ok(out)
}

fn decompress(registry: &Registry, spec: Option<&AlgorithmSpec>, raw: bool, input: &[u8]) -> Result<Vec<u8>, Failure> {
    let (spec, body) = if raw {
        (spec.cloned().ok_or_else(|| usage("--raw decompression needs -a SPEC"))?, input)
    } else {
        let (header, offset) = read_header(input).map_err(data)?;
        (spec.cloned().unwrap_or(header), &input[offset..])
    };
    let compressor = registry.instantiate(&spec).map_err(|e| if raw { usage(e) } else { data(e) })?;
    tdc_core::stats::phase("decompress", || compressor.decompress(body)).map_err(data)
}

fn compare(registry: &Registry, args: CompareArgs, stdout: &mut dyn Write) -> Outcome {
    let mut suite = match &args.suite {
        Some(p) => Suite::load(p).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        None => Suite::default(),
    };
    if !args.algorithms.is_empty() {
        suite.internal = Some(args.algorithms.clone());
    }
    let entries: Vec<Entry> = suite.entries();
    let (name, input) = read_input(registry, args.input.as_deref(), args.generate.as_deref())?;
    let report = run_compare(registry, &name, &input, &entries);
    if let Some(p) = &args.json {
        std::fs::write(p, report.to_json()).map_err(|e| data(format!("{}: {e}", p.display())))?;
    }
    write_output(None, report.table().as_bytes(), stdout)?;
    Ok(if report.all_passed() { ExitCode::Success } else { ExitCode::Data })
}
