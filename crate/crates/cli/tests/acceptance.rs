//! Acceptance suite: one check per criterion, run sequentially so that the
//! runtime budgets are measured without interference. Each criterion prints a
//! single PASS/FAIL line; the test fails if any criterion fails.

use proptest::prelude::*;
use proptest::test_runner::{Config as RunnerConfig, TestCaseError, TestRunner};
use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};
use tdc_core::classic::{lz78_factorize, lzss_factorize, Lz77Factor};
use tdc_core::coders::ALL_CODERS;
use tdc_core::generators::{fibonacci, random, repetitive, run_rich, thue_morse};
use tdc_core::lcpcomp::{factor_count, factorize_arrays, factorize_arrays_observed, factorize_heap, RefTriplet};
use tdc_core::lz78u::{factorize_offline, factorize_streaming, SuffixTree};
use tdc_core::stats::{PhaseStats, Session};
use tdc_core::succinct::{BitVector, RankSelect};
use tdc_core::textds::{DsFlags, StorageMode};
use tdc_core::{compress_with_header, decompress_with_header, AlgorithmSpec, Registry, Text, TextDs};

const RUNNING: &[u8] = b"aaababaaabaababa";
const MIB: usize = 1 << 20;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:.2?}, budget {budget:?}"))?;
    Ok(took)
}

fn ds_of(text: &[u8], flags: DsFlags) -> TextDs {
    let mut ds = TextDs::new(Text::new(text).expect("no sentinel in input"), StorageMode::Plain);
    ds.require(flags);
    ds
}

fn escaped_ds(input: &[u8]) -> TextDs {
    let mut ds = TextDs::new(Text::escaped(input), StorageMode::Plain);
    ds.require(DsFlags::SA | DsFlags::ISA | DsFlags::LCP);
    ds
}

fn show(c: u8) -> char {
    if c == 0 {
        '$'
    } else {
        c as char
    }
}

/// Literal runs as characters, references as `(src,len)`, both 1-based.
fn render_lz77(text: &[u8], factors: &[Lz77Factor]) -> String {
    factors
        .iter()
        .map(|f| match *f {
            Lz77Factor::Literal { pos, len } => text[pos..pos + len].iter().map(|&c| show(c)).collect(),
            Lz77Factor::Reference { src, len } => format!("({},{})", src + 1, len),
        })
        .collect::<Vec<String>>()
        .join(" ")
}

fn render_lcpcomp(text: &[u8], sorted: &[RefTriplet]) -> String {
    let mut parts = Vec::new();
    let mut d = 0;
    for t in sorted {
        if t.pos > d {
            parts.push(text[d..t.pos].iter().map(|&c| show(c)).collect());
        }
        parts.push(format!("({},{})", t.src + 1, t.len));
        d = t.pos + t.len;
    }
    if d < text.len() {
        parts.push(text[d..].iter().map(|&c| show(c)).collect());
    }
    parts.join(" ")
}

fn lz78u_tuples(text: &[u8], offline: bool) -> Vec<(usize, String)> {
    let ds = ds_of(text, DsFlags::SA | DsFlags::ISA | DsFlags::LCP);
    let st = SuffixTree::build(&ds);
    let parse = if offline { factorize_offline(&st, &ds) } else { factorize_streaming(&st, &ds) };
    parse.factors.iter().map(|f| (f.reference, f.label(ds.bytes()).iter().map(|&c| show(c)).collect())).collect()
}

fn golden_vectors() -> Outcome {
    let start = Instant::now();
    let ds = ds_of(RUNNING, DsFlags::SA | DsFlags::ISA | DsFlags::LCP | DsFlags::BWT);
    let sa: Vec<usize> = ds.sa().to_vec().iter().map(|&p| p + 1).collect();
    ensure(sa == [17, 16, 7, 1, 8, 11, 2, 14, 5, 9, 12, 3, 15, 6, 10, 13, 4], || format!("SA {sa:?}"))?;
    let isa: Vec<usize> = ds.isa().to_vec().iter().map(|&r| r + 1).collect();
    ensure(isa == [4, 7, 12, 17, 9, 14, 3, 5, 10, 15, 6, 11, 16, 8, 13, 2, 1], || format!("ISA {isa:?}"))?;
    let lcp = ds.lcp().to_vec();
    ensure(lcp == [0, 0, 1, 5, 2, 4, 6, 1, 3, 4, 3, 5, 0, 2, 3, 2, 4], || format!("LCP {lcp:?}"))?;
    let bwt: String = ds.bwt().iter().map(|&c| show(c)).collect();
    ensure(bwt == "abb$ababbaaaaaaaa", || format!("BWT {bwt}"))?;

    let mut ds = ds_of(RUNNING, DsFlags::SA);
    let lzss = render_lz77(ds.bytes().to_vec().as_slice(), &lzss_factorize(&mut ds, 2));
    ensure(lzss == "a (1,2) b (3,3) (2,4) (3,5) $", || format!("lzss_lcp: {lzss}"))?;

    let text: Vec<u8> = ds.bytes().to_vec();
    let heap = factorize_heap(&mut ds_of(RUNNING, DsFlags::SA), 2);
    let shown = render_lcpcomp(&text, &heap.sorted());
    ensure(shown == "a (11,6) a (5,2) (8,4) ba$", || format!("lcpcomp heap: {shown}"))?;
    let mut rows = Vec::new();
    let arrays = factorize_arrays_observed(&mut ds_of(RUNNING, DsFlags::SA), 2, |lcp| rows.push(lcp.to_vec()));
    let shown = render_lcpcomp(&text, &arrays.sorted());
    ensure(shown == "a (11,6) a (5,2) (8,4) ba$", || format!("lcpcomp arrays: {shown}"))?;
    let want_rows: [[usize; 17]; 3] = [
        [0, 0, 0, 1, 2, 4, 0, 1, 0, 4, 3, 0, 0, 0, 3, 2, 0],
        [0, 0, 0, 1, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ];
    ensure(rows == want_rows, || format!("LCP evolution {rows:?}"))?;

    let lz78: Vec<String> = lz78_factorize(&text).iter().map(|f| format!("({},{})", f.reference, show(f.ext))).collect();
    let lz78 = lz78.join(" ");
    ensure(lz78 == "(0,a) (1,a) (0,b) (1,b) (2,a) (3,a) (4,a) (6,$)", || format!("LZ78 {lz78}"))?;

    for offline in [false, true] {
        let t: Vec<String> = lz78u_tuples(RUNNING, offline).iter().map(|(r, s)| format!("({r},{s})")).collect();
        let t = t.join(" ");
        ensure(t == "(0,a) (1,a) (0,ba) (3,a) (1,ba) (5,ba) (0,$)", || format!("LZ78U offline={offline}: {t}"))?;
    }
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("arrays, factorizations and LCP evolution exact in {took:.2?}"))
}

fn naive_sa_lcp(t: &[u8]) -> (Vec<usize>, Vec<usize>) {
    let mut sa: Vec<usize> = (0..t.len()).collect();
    sa.sort_by(|&a, &b| t[a..].cmp(&t[b..]));
    let mut lcp = vec![0; t.len()];
    for i in 1..t.len() {
        lcp[i] = t[sa[i - 1]..].iter().zip(&t[sa[i]..]).take_while(|(a, b)| a == b).count();
    }
    (sa, lcp)
}

/// Substituted lengths in order: each round takes the longest remaining
/// repeat, recomputed from scratch over all positions.
fn greedy_lengths(s: &[u8], theta: usize) -> Vec<usize> {
    let mut t = s.to_vec();
    t.push(0);
    let n = t.len();
    let (sa, _) = naive_sa_lcp(&t);
    let mut remaining = vec![true; n];
    let mut out = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for i in 1..n {
            let (p, q) = (sa[i], sa[i - 1]);
            if !remaining[p] {
                continue;
            }
            let lcp = t[p..].iter().zip(&t[q..]).take_while(|(a, b)| a == b).count();
            let run = remaining[p..].iter().take_while(|&&r| r).count();
            let key = lcp.min(run);
            if key >= theta && best.is_none_or(|(bl, bp)| (key, p) > (bl, bp)) {
                best = Some((key, p));
            }
        }
        let Some((len, pos)) = best else { break };
        remaining[pos..pos + len].iter_mut().for_each(|r| *r = false);
        out.push(len);
    }
    out
}

fn naive_lz78(t: &[u8]) -> Vec<(usize, u8)> {
    let mut dict: HashMap<&[u8], usize> = HashMap::new();
    let mut out = Vec::new();
    let mut i = 0;
    while i < t.len() {
        let mut len = 0;
        while i + len + 1 < t.len() && dict.contains_key(&t[i..i + len + 1]) {
            len += 1;
        }
        let reference = if len == 0 { 0 } else { dict[&t[i..i + len]] };
        out.push((reference, t[i + len]));
        dict.insert(&t[i..i + len + 1], out.len());
        i += len + 1;
    }
    out
}

/// LZ78U by definition: extend the longest previous factor by one character,
/// then keep extending while the current string has a single right extension
/// among its occurrences.
fn naive_lz78u(t: &[u8]) -> Vec<(usize, Vec<u8>)> {
    let occurrences = |s: &[u8]| -> Vec<usize> { (0..=t.len() - s.len()).filter(|&q| &t[q..q + s.len()] == s).collect() };
    let mut factors: Vec<&[u8]> = Vec::new();
    let mut out = Vec::new();
    let mut i = 0;
    while i < t.len() {
        let (y, plen) = factors
            .iter()
            .enumerate()
            .filter(|(_, f)| t[i..].starts_with(f))
            .map(|(k, f)| (k + 1, f.len()))
            .max_by_key(|&(_, l)| l)
            .unwrap_or((0, 0));
        let mut m = plen + 1;
        if occurrences(&t[i..i + m]).len() > 1 {
            loop {
                let mut ext: Vec<u8> =
                    occurrences(&t[i..i + m]).into_iter().filter(|&q| q + m < t.len()).map(|q| t[q + m]).collect();
                ext.sort_unstable();
                ext.dedup();
                if ext.len() != 1 {
                    break;
                }
                m += 1;
            }
        }
        factors.push(&t[i..i + m]);
        out.push((y, t[i + plen..i + m].to_vec()));
        i += m;
    }
    out
}

fn oracle_case(sigma: u8, s: &[u8], bits: &[bool]) -> Result<(), String> {
    let ds = ds_of(s, DsFlags::SA | DsFlags::ISA | DsFlags::LCP);
    let t = ds.bytes().to_vec();
    let (sa, lcp) = naive_sa_lcp(&t);
    ensure(ds.sa().to_vec() == sa, || format!("SA mismatch on {s:?}"))?;
    ensure(ds.lcp().to_vec() == lcp, || format!("LCP mismatch on {s:?}"))?;

    let rs = RankSelect::new(BitVector::from_bits(bits.iter().copied()));
    let mut ones = 0;
    for (i, &b) in bits.iter().enumerate() {
        ensure(rs.rank1(i).unwrap() == ones, || format!("rank1({i}) on {bits:?}"))?;
        if b {
            ones += 1;
            ensure(rs.select1(ones).unwrap() == i + 1, || format!("select1({ones}) on {bits:?}"))?;
        }
    }
    ensure(rs.rank1(bits.len()).unwrap() == ones && rs.select1(ones + 1).is_err(), || "rank/select bounds".into())?;

    let short = &s[..s.len().min(64)];
    for theta in [1, 2, 3] {
        let f = factorize_heap(&mut ds_of(short, DsFlags::SA), theta);
        let got: Vec<usize> = f.triplets.iter().map(|t| t.len).collect();
        let want = greedy_lengths(short, theta);
        ensure(got == want, || format!("lcpcomp lengths on {short:?} theta {theta}: {got:?} vs {want:?}"))?;
    }

    let lz78: Vec<(usize, u8)> = lz78_factorize(&t).iter().map(|f| (f.reference, f.ext)).collect();
    ensure(lz78 == naive_lz78(&t), || format!("LZ78 mismatch on {s:?}"))?;

    let st = SuffixTree::build(&ds);
    let parse = factorize_streaming(&st, &ds);
    let got: Vec<(usize, Vec<u8>)> = parse.factors.iter().map(|f| (f.reference, f.label(&t).to_vec())).collect();
    ensure(got == naive_lz78u(&t), || format!("LZ78U mismatch on {s:?} (sigma {sigma})"))?;
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let strings = prop_oneof![Just(2u8), Just(4u8), Just(26u8)].prop_flat_map(|sigma| {
        (
            Just(sigma),
            proptest::collection::vec(0..sigma, 0..=256).prop_map(|v| v.into_iter().map(|c| b'a' + c).collect::<Vec<u8>>()),
            proptest::collection::vec(any::<bool>(), 0..=700),
        )
    });
    let cases = 1000;
    let mut runner = TestRunner::new(RunnerConfig { cases, failure_persistence: None, ..RunnerConfig::default() });
    runner
        .run(&strings, |(sigma, s, bits)| oracle_case(sigma, &s, &bits).map_err(TestCaseError::fail))
        .map_err(|e| e.to_string())?;
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!("{cases} random strings agree with the naive oracles in {took:.2?}"))
}

fn utf8_samples() -> Vec<u8> {
    let mut s = String::new();
    for _ in 0..40 {
        s.push_str("Grüße aus Köln, 東京の天気は晴れ, Ελληνικά κείμενα, русский текст, emoji 🎉🚀✨. ");
    }
    s.into_bytes()
}

fn corpus() -> Vec<(&'static str, Vec<u8>)> {
    vec![
        ("empty", Vec::new()),
        ("one byte", b"x".to_vec()),
        ("run 1e5", vec![b'a'; 100_000]),
        ("fib(25)", fibonacci(25)),
        ("thue_morse(14)", thue_morse(14)),
        ("utf-8", utf8_samples()),
        ("binary edges", [0u8, 0xff, 0, 0, 0xff, 0xff, 1, 0xfe, 0].repeat(50)),
        ("random 1MiB", random(MIB, 11)),
        ("repetitive 1MiB", repetitive(MIB, 12)),
    ]
}

fn roundtrip_specs() -> Vec<String> {
    let mut specs: Vec<String> = ["bwt", "rle", "mtf", "bwt:rle", "bwt:rle:mtf:encode(huff)"].map(String::from).to_vec();
    for c in ALL_CODERS.map(|c| c.id()) {
        specs.push(format!("encode({c})"));
        specs.push(format!("lz78({c})"));
        specs.push(format!("lzw({c})"));
        specs.push(format!("lzss_lcp(t=3,coder={c})"));
        specs.push(format!("lcpcomp(coder={c},t=5,comp=heap)"));
        specs.push(format!("lcpcomp(coder={c},t=5,comp=arrays)"));
        specs.push(format!("lz78u(coder={c},comp=buffering(huff))"));
        specs.push(format!("lz78u(coder=bit,comp=buffering({c}))"));
        specs.push(format!("lz78u(coder={c},comp=plain(huff))"));
        specs.push(format!("lz78u(coder=bit,comp=plain({c}))"));
    }
    specs
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default()
}

/// Runs a library call, turning both errors and panics into messages.
fn guarded<T>(f: impl FnOnce() -> tdc_core::Result<T>) -> Result<T, String> {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r.map_err(|e| e.to_string()),
        Err(e) => Err(format!("panic: {}", panic_message(e))),
    }
}

fn find_stat(phases: &[PhaseStats], key: &str) -> Option<u64> {
    phases.iter().find_map(|p| p.stats.get(key).and_then(|v| v.as_u64()).or_else(|| find_stat(&p.sub, key)))
}

#[derive(Default)]
struct InvariantCounters {
    lcpcomp_runs: usize,
    double_decreases: u64,
    double_delays: u64,
    resolved_streams: usize,
}

fn roundtrip_suite(counters: &mut InvariantCounters) -> Outcome {
    let start = Instant::now();
    let reg = Registry::standard();
    let specs = roundtrip_specs();
    let scans: Vec<AlgorithmSpec> = [1, 6, 25, 60]
        .iter()
        .map(|a| AlgorithmSpec::parse(&format!("lcpcomp(dec=scans(a={a}))")).unwrap())
        .collect();
    let mut runs = 0;
    for (name, input) in corpus() {
        for spec_text in &specs {
            let spec = AlgorithmSpec::parse(spec_text).unwrap();
            let is_lcpcomp = spec.name == "lcpcomp";
            let context = |e: String| format!("{spec_text} on {name}: {e}");
            let session = Session::begin(spec_text.clone());
            let packed = guarded(|| compress_with_header(&reg, &spec, &input)).map_err(context)?;
            let stats = session.finish();
            let out = guarded(|| decompress_with_header(&reg, &packed, None)).map_err(context)?;
            ensure(out == input, || format!("{spec_text} on {name}: roundtrip differs"))?;
            runs += 1;
            if is_lcpcomp {
                counters.lcpcomp_runs += 1;
                counters.double_decreases += find_stat(&stats.phases, "double_decreases").ok_or("missing counter")?;
                counters.double_delays += find_stat(&stats.phases, "double_delays").ok_or("missing counter")?;
                counters.resolved_streams += 1;
                let coder = reg.resolve(&spec).unwrap().algo("coder").canonical();
                for s in &scans {
                    // same body, same coder, different decompression strategy
                    let mut over = s.clone();
                    over.args.push(AlgorithmSpec::parse(&format!("x(coder={coder})")).unwrap().args.remove(0));
                    let via = decompress_with_header(&reg, &packed, Some(&over))
                        .map_err(|e| format!("{over} on {name}: {e}"))?;
                    ensure(via == out, || format!("{over} on {name}: differs from compact"))?;
                    counters.resolved_streams += 1;
                }
            }
        }
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!("{runs} roundtrips ({} specs x {} inputs) identical in {took:.2?}", specs.len(), runs / specs.len()))
}

fn key_update_invariants(counters: &InvariantCounters) -> Outcome {
    ensure(counters.lcpcomp_runs > 0, || "no lcpcomp runs recorded".into())?;
    ensure(counters.double_decreases == 0, || format!("{} double decrease_key events", counters.double_decreases))?;
    ensure(counters.double_delays == 0, || format!("{} double bucket moves", counters.double_delays))?;
    Ok(format!(
        "0 double decreases over {} lcpcomp runs; {} streams resolved to a fixed point",
        counters.lcpcomp_runs, counters.resolved_streams
    ))
}

fn lzss_counts(factors: &[Lz77Factor]) -> (usize, usize) {
    (factors.len(), factors.iter().filter(|f| f.is_reference()).count())
}

fn factor_count_dominance() -> Outcome {
    let thetas = [4, 8, 12, 16, 20, 22];
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut refs_only_violations = 0;
    for seed in 0..10u64 {
        let input = repetitive(MIB, 100 + seed);
        for theta in thetas {
            let mut ds = escaped_ds(&input);
            let n = ds.len();
            let (lzss_total, lzss_refs) = lzss_counts(&lzss_factorize(&mut ds, theta));
            let f = factorize_arrays(&mut escaped_ds(&input), theta);
            let lcp_total = factor_count(n, &f.sorted());
            if lcp_total > lzss_total {
                violations.push(format!("seed {seed} theta {theta}: {lcp_total} > {lzss_total}"));
            }
            if f.triplets.len() > lzss_refs {
                refs_only_violations += 1;
            }
            checked += 1;
        }
    }
    let summary = format!(
        "lcpcomp exceeds lzss_lcp in {}/{checked} (file, theta) pairs counting references plus literal runs, \
         {refs_only_violations}/{checked} counting references only",
        violations.len()
    );
    if violations.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; first: {}", violations[0]))
    }
}

fn pipeline_quality() -> Outcome {
    let reg = Registry::standard();
    let size = |spec: &str, input: &[u8]| compress_with_header(&reg, &AlgorithmSpec::parse(spec).unwrap(), input).map(|v| v.len());
    let mut k = 1;
    while run_rich(k + 1).len() <= 2 * MIB {
        k += 1;
    }
    let mut report = Vec::new();
    for (name, input) in [("repetitive", repetitive(MIB, 21)), ("run_rich", run_rich(k))] {
        ensure(input.len() >= MIB / 2, || format!("{name} input too small"))?;
        let pipeline = size("bwt:rle:mtf:encode(huff)", &input).map_err(|e| e.to_string())?;
        let plain = size("encode(huff)", &input).map_err(|e| e.to_string())?;
        ensure(pipeline < plain, || format!("{name}: pipeline {pipeline} >= encode(huff) {plain}"))?;
        report.push(format!("{name} {} B: {pipeline} < {plain}", input.len()));
    }
    Ok(report.join("; "))
}

fn lz78u_equality() -> Outcome {
    let mut inputs = corpus();
    inputs.push(("running example", RUNNING.to_vec()));
    inputs.push(("run_rich(8)", run_rich(8)));
    let mut factors = 0;
    for (name, input) in &inputs {
        let ds = escaped_ds(input);
        let st = SuffixTree::build(&ds);
        let a = factorize_streaming(&st, &ds);
        let b = factorize_offline(&st, &ds);
        ensure(a.factors == b.factors, || format!("{name}: factor lists differ"))?;
        ensure(a.nodes == b.nodes, || format!("{name}: factor nodes differ"))?;
        factors += a.factors.len();
    }
    Ok(format!("{} inputs, {factors} factors identical", inputs.len()))
}

fn cli_contract() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = dir.path();
    std::fs::write(p.join("ex.txt"), RUNNING).map_err(|e| e.to_string())?;
    let tdc = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_tdc")).args(args).current_dir(p).output().unwrap();
    for (spec, prefix) in [("bwt", "bwt%"), ("bwt:rle", "bwt:rle%")] {
        let out = tdc(&["-a", spec, "-o", "z.tdc", "ex.txt"]);
        ensure(out.status.success(), || format!("-a {spec} failed"))?;
        let file = std::fs::read(p.join("z.tdc")).map_err(|e| e.to_string())?;
        ensure(file.starts_with(prefix.as_bytes()), || format!("-a {spec}: header {:?}", String::from_utf8_lossy(&file)))?;
    }
    let out = tdc(&["compare", "--generate", "repetitive(n=262144,seed=5)", "--json", "r.json"]);
    let table = String::from_utf8_lossy(&out.stdout).to_string();
    ensure(out.status.success(), || format!("compare failed:\n{table}"))?;
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(p.join("r.json")).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let rows = json["rows"].as_array().ok_or("rows missing")?;
    let reg = Registry::standard();
    for id in reg.compressor_ids() {
        let covered = rows.iter().any(|r| {
            let name = r["compressor"].as_str().unwrap_or("");
            let mut cur = AlgorithmSpec::parse(name).ok();
            let mut hit = false;
            while let Some(s) = cur {
                hit |= s.name == id;
                cur = s.next.map(|b| *b);
            }
            hit && r["chk"] == "ok"
        });
        ensure(covered, || format!("no passing chk row for {id}:\n{table}"))?;
    }
    ensure(table.lines().skip(2).all(|l| l.ends_with("OK")), || table.clone())?;
    Ok(format!("headers bwt%/bwt:rle%; {} compare rows all chk OK", rows.len()))
}

fn report(number: usize, title: &str, run: impl FnOnce() -> Outcome) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| Err(format!("panic: {}", panic_message(e))));
    match outcome {
        Ok(detail) => {
            println!("criterion {number} PASS  {title}: {detail}");
            true
        }
        Err(why) => {
            println!("criterion {number} FAIL  {title}: {why}");
            false
        }
    }
}

#[test]
fn acceptance_criteria() {
    let mut counters = InvariantCounters::default();
    let results = [
        report(1, "golden vectors", golden_vectors),
        report(2, "oracle equivalence", oracle_equivalence),
        report(3, "roundtrip suite", || roundtrip_suite(&mut counters)),
        report(4, "key-update and cycle invariants", || key_update_invariants(&counters)),
        report(5, "factor-count dominance", factor_count_dominance),
        report(6, "pipeline quality", pipeline_quality),
        report(7, "streaming/offline LZ78U equality", lz78u_equality),
        report(8, "CLI contract", cli_contract),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
