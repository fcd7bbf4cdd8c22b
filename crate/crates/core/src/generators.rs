//! Deterministic test-string generators.

use crate::error::{Error, Result};
use crate::registry::{Config, Meta, Registry, GENERATOR};
use crate::spec::AlgorithmSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn register(reg: &mut Registry) {
    reg.register(Meta::new(GENERATOR, "fib", "k-th Fibonacci word over {a,b}").int("n", &["k"], None));
    reg.register(Meta::new(GENERATOR, "thue_morse", "k-th Thue-Morse word over {a,b}").int("n", &["k"], None));
    reg.register(Meta::new(GENERATOR, "run_rich", "k-th run-rich word over {a,b}").int("n", &["k"], None));
    reg.register(
        Meta::new(GENERATOR, "random", "n uniformly random bytes")
            .int("n", &[], None)
            .int("seed", &["s"], Some("0")),
    );
    reg.register(
        Meta::new(GENERATOR, "repetitive", "n bytes of mutated copies of earlier text")
            .int("n", &[], None)
            .int("seed", &["s"], Some("0")),
    );
}

/// F1 = "b", F2 = "a", Fk = F(k-1) F(k-2).
pub fn fibonacci(k: usize) -> Vec<u8> {
    assert!(k >= 1);
    if k == 1 {
        return b"b".to_vec();
    }
    let (mut prev, mut cur) = (b"b".to_vec(), b"a".to_vec());
    for _ in 2..k {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// The k-th doubling of 0 -> 01, 1 -> 10 starting from "a"; length 2^(k-1).
pub fn thue_morse(k: usize) -> Vec<u8> {
    assert!(k >= 1);
    let mut t = vec![b'a'];
    for _ in 1..k {
        let flipped: Vec<u8> = t.iter().map(|&c| if c == b'a' { b'b' } else { b'a' }).collect();
        t.extend(flipped);
    }
    t
}

/// Binary words rich in runs: tau(1) = 0110 and tau(k) = mu(tau(k-1)) with
/// the morphism mu(0) = 0110, mu(1) = 010, mapped to {a,b}. Every image
/// starts with a square, so runs accumulate at every level.
pub fn run_rich(k: usize) -> Vec<u8> {
    assert!(k >= 1);
    let mut t = b"abba".to_vec();
    for _ in 1..k {
        let mut next = Vec::with_capacity(t.len() * 4);
        for &c in &t {
            next.extend_from_slice(if c == b'a' { b"abba" } else { b"aba" });
        }
        t = next;
    }
    t
}

/// `n` uniformly random bytes (including 0x00 and 0xFF).
pub fn random(n: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![0u8; n];
    rng.fill(out.as_mut_slice());
    out
}

/// Highly repetitive text: a short random seed over lowercase letters
/// followed by copies of earlier substrings with sparse point mutations.
pub fn repetitive(n: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = n.clamp(1, 2048);
    let mut out: Vec<u8> = (0..base).map(|_| rng.gen_range(b'a'..=b'z')).collect();
    while out.len() < n {
        let len = rng.gen_range(32..=4096).min(n - out.len()).min(out.len());
        let src = rng.gen_range(0..=out.len() - len);
        for i in 0..len {
            let c = if rng.gen_ratio(1, 500) { rng.gen_range(b'a'..=b'z') } else { out[src + i] };
            out.push(c);
        }
    }
    out.truncate(n);
    out
}

/// Runs a resolved generator configuration.
pub fn generate(cfg: &Config) -> Result<Vec<u8>> {
    let n = cfg.int("n") as usize;
    let bad = |msg: &str| Error::Param { id: cfg.id.clone(), msg: msg.into() };
    match cfg.id.as_str() {
        "fib" if (1..=60).contains(&n) => Ok(fibonacci(n)),
        "thue_morse" if (1..=40).contains(&n) => Ok(thue_morse(n)),
        "run_rich" if (1..=20).contains(&n) => Ok(run_rich(n)),
        "fib" | "thue_morse" | "run_rich" => Err(bad("index out of supported range")),
        "random" => Ok(random(n, cfg.int("seed"))),
        "repetitive" => Ok(repetitive(n, cfg.int("seed"))),
        other => Err(Error::UnknownAlgorithm { kind: GENERATOR.into(), id: other.into() }),
    }
}

/// Parses `kind(args)` and generates the string.
pub fn generate_from_spec(registry: &Registry, text: &str) -> Result<Vec<u8>> {
    let spec = AlgorithmSpec::parse(text)?;
    generate(&registry.resolve_as(&spec, GENERATOR)?)
}
