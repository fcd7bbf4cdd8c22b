//! Typed algorithm registry: resolves parsed specs against declared
//! parameters, fills defaults and instantiates compressors.

use crate::compressor::{Compressor, Pipeline};
use crate::error::{Error, Result};
use crate::spec::{AlgorithmSpec, Arg, ArgValue};
use std::collections::BTreeMap;

pub const COMPRESSOR: &str = "compressor";
pub const CODER: &str = "coder";
pub const LCPCOMP_STRATEGY: &str = "lcpcomp_strategy";
pub const LCPCOMP_DEC: &str = "lcpcomp_dec";
pub const LZ78U_STRATEGY: &str = "lz78u_strategy";
pub const GENERATOR: &str = "generator";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamKind {
    Int,
    Str,
    /// A nested algorithm of the given type.
    Algo(&'static str),
}

#[derive(Debug, Clone)]
pub struct Param {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub kind: ParamKind,
    /// Default value in spec syntax.
    pub default: Option<&'static str>,
}

/// Declaration of a registered algorithm: its type, identifier and
/// parameters.
#[derive(Debug, Clone)]
pub struct Meta {
    pub kind: &'static str,
    pub id: &'static str,
    pub doc: &'static str,
    pub params: Vec<Param>,
}

impl Meta {
    pub fn new(kind: &'static str, id: &'static str, doc: &'static str) -> Self {
        Self { kind, id, doc, params: Vec::new() }
    }

    fn param(mut self, name: &'static str, aliases: &'static [&'static str], kind: ParamKind, default: Option<&'static str>) -> Self {
        assert!(
            self.params.iter().all(|p| p.name != name && !p.aliases.contains(&name)),
            "duplicate parameter {name} in {}",
            self.id
        );
        self.params.push(Param { name, aliases, kind, default });
        self
    }

    pub fn int(self, name: &'static str, aliases: &'static [&'static str], default: Option<&'static str>) -> Self {
        self.param(name, aliases, ParamKind::Int, default)
    }

    pub fn string(self, name: &'static str, default: Option<&'static str>) -> Self {
        self.param(name, &[], ParamKind::Str, default)
    }

    pub fn algo(self, name: &'static str, aliases: &'static [&'static str], kind: &'static str, default: Option<&'static str>) -> Self {
        self.param(name, aliases, ParamKind::Algo(kind), default)
    }

    fn find(&self, key: &str) -> Option<usize> {
        self.params.iter().position(|p| p.name == key || p.aliases.contains(&key))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(u64),
    Str(String),
    Algo(Config),
}

/// A fully resolved algorithm: every declared parameter has a value, in
/// declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub kind: String,
    pub id: String,
    pub params: Vec<(String, Value)>,
    pub next: Option<Box<Config>>,
}

impl Config {
    fn get(&self, name: &str) -> &Value {
        &self.params.iter().find(|(k, _)| k == name).unwrap_or_else(|| panic!("`{}` has no parameter `{name}`", self.id)).1
    }

    pub fn int(&self, name: &str) -> u64 {
        match self.get(name) {
            Value::Int(v) => *v,
            other => panic!("parameter {name} is not an integer: {other:?}"),
        }
    }

    pub fn str(&self, name: &str) -> &str {
        match self.get(name) {
            Value::Str(s) => s,
            other => panic!("parameter {name} is not a string: {other:?}"),
        }
    }

    pub fn algo(&self, name: &str) -> &Config {
        match self.get(name) {
            Value::Algo(c) => c,
            other => panic!("parameter {name} is not an algorithm: {other:?}"),
        }
    }

    /// The canonical spec tree: all parameters named, in declaration order.
    pub fn to_spec(&self) -> AlgorithmSpec {
        AlgorithmSpec {
            name: self.id.clone(),
            args: self
                .params
                .iter()
                .map(|(k, v)| Arg {
                    key: Some(k.clone()),
                    value: match v {
                        Value::Int(i) => ArgValue::Int(*i),
                        Value::Str(s) => ArgValue::Str(s.clone()),
                        Value::Algo(c) => ArgValue::Algo(c.to_spec()),
                    },
                })
                .collect(),
            next: self.next.as_ref().map(|n| Box::new(n.to_spec())),
        }
    }

    pub fn canonical(&self) -> String {
        self.to_spec().to_string()
    }
}

pub type BuildFn = fn(&Config) -> Result<Box<dyn Compressor>>;

struct Entry {
    meta: Meta,
    build: Option<BuildFn>,
}

/// All known algorithms, keyed by (type, identifier). Immutable once built
/// and safe to share between threads.
pub struct Registry {
    entries: BTreeMap<(&'static str, &'static str), Entry>,
    aliases: BTreeMap<&'static str, &'static str>,
}

impl Default for Registry {
    fn default() -> Self {
        Self::standard()
    }
}

impl Registry {
    pub fn empty() -> Self {
        Self { entries: BTreeMap::new(), aliases: BTreeMap::new() }
    }

    /// Registry holding every algorithm shipped with this crate.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        crate::coders::register(&mut r);
        crate::classic::register(&mut r);
        crate::lcpcomp::register(&mut r);
        crate::lz78u::register(&mut r);
        crate::generators::register(&mut r);
        r.register_alias("bwtzip", "bwt:rle:mtf:encode(huff)");
        r
    }

    pub fn register(&mut self, meta: Meta) {
        let key = (meta.kind, meta.id);
        assert!(!self.entries.contains_key(&key), "duplicate registration of {}:{}", meta.kind, meta.id);
        self.entries.insert(key, Entry { meta, build: None });
    }

    pub fn register_compressor(&mut self, meta: Meta, build: BuildFn) {
        assert_eq!(meta.kind, COMPRESSOR);
        let key = (meta.kind, meta.id);
        assert!(!self.entries.contains_key(&key), "duplicate registration of {}", meta.id);
        self.entries.insert(key, Entry { meta, build: Some(build) });
    }

    /// Registers a compressor name that expands to a spec text.
    pub fn register_alias(&mut self, name: &'static str, expansion: &'static str) {
        self.aliases.insert(name, expansion);
    }

    pub fn meta(&self, kind: &str, id: &str) -> Option<&Meta> {
        self.entries.iter().find(|((k, i), _)| *k == kind && *i == id).map(|(_, e)| &e.meta)
    }

    pub fn metas(&self) -> impl Iterator<Item = &Meta> {
        self.entries.values().map(|e| &e.meta)
    }

    pub fn aliases(&self) -> impl Iterator<Item = (&str, &str)> {
        self.aliases.iter().map(|(a, b)| (*a, *b))
    }

    /// Resolves a compressor spec (possibly a `:` chain).
    pub fn resolve(&self, spec: &AlgorithmSpec) -> Result<Config> {
        self.resolve_as(spec, COMPRESSOR)
    }

    /// Resolves `spec` as an algorithm of type `kind`.
    pub fn resolve_as(&self, spec: &AlgorithmSpec, kind: &str) -> Result<Config> {
        let mut cfg = self.resolve_node(spec, kind)?;
        if let Some(next) = &spec.next {
            if kind != COMPRESSOR {
                return Err(Error::Param {
                    id: spec.name.clone(),
                    msg: format!("a `:` chain is only allowed between compressors, not for type {kind}"),
                });
            }
            let rest = self.resolve_as(next, kind)?;
            // an alias may itself expand to a chain; append to its tail
            let mut tail = &mut cfg;
            while tail.next.is_some() {
                tail = tail.next.as_mut().unwrap();
            }
            tail.next = Some(Box::new(rest));
        }
        Ok(cfg)
    }

    fn resolve_node(&self, spec: &AlgorithmSpec, kind: &str) -> Result<Config> {
        let node = AlgorithmSpec { next: None, ..spec.clone() };
        if kind == COMPRESSOR {
            if let Some(&expansion) = self.aliases.get(spec.name.as_str()) {
                if !spec.args.is_empty() {
                    return Err(Error::Param { id: spec.name.clone(), msg: "aliases take no arguments".into() });
                }
                return self.resolve_as(&AlgorithmSpec::parse(expansion)?, COMPRESSOR);
            }
            // a coder used directly acts as a compressor through `encode`
            if self.meta(COMPRESSOR, &spec.name).is_none() && self.meta(CODER, &spec.name).is_some() {
                let wrapped = AlgorithmSpec {
                    name: "encode".into(),
                    args: vec![Arg { key: Some("coder".into()), value: ArgValue::Algo(node) }],
                    next: None,
                };
                return self.resolve_node(&wrapped, COMPRESSOR);
            }
        }
        let meta = self.meta(kind, &spec.name).ok_or_else(|| Error::UnknownAlgorithm {
            kind: kind.to_string(),
            id: spec.name.clone(),
        })?;
        let perr = |msg: String| Error::Param { id: spec.name.clone(), msg };

        let mut bound: Vec<Option<Value>> = vec![None; meta.params.len()];
        for arg in &spec.args {
            let slot = match &arg.key {
                Some(key) => {
                    let i = meta.find(key).ok_or_else(|| perr(format!("unknown parameter `{key}`")))?;
                    if bound[i].is_some() {
                        return Err(perr(format!("parameter `{}` given twice", meta.params[i].name)));
                    }
                    i
                }
                None => (0..meta.params.len())
                    .find(|&i| bound[i].is_none() && self.accepts(&meta.params[i].kind, &arg.value))
                    .ok_or_else(|| perr(format!("no parameter accepts positional argument `{}`", arg.value)))?,
            };
            bound[slot] = Some(self.resolve_value(&meta.params[slot], &arg.value).map_err(|e| match e {
                Error::Param { .. } | Error::UnknownAlgorithm { .. } => e,
                other => perr(other.to_string()),
            })?);
        }
        let mut params = Vec::with_capacity(meta.params.len());
        for (p, v) in meta.params.iter().zip(bound) {
            let v = match v {
                Some(v) => v,
                None => {
                    let text = p.default.ok_or_else(|| perr(format!("missing required parameter `{}`", p.name)))?;
                    let value = match &p.kind {
                        ParamKind::Int => ArgValue::Int(text.parse().expect("integer default")),
                        ParamKind::Str => ArgValue::Str(text.to_string()),
                        ParamKind::Algo(_) => ArgValue::Algo(AlgorithmSpec::parse(text)?),
                    };
                    self.resolve_value(p, &value)?
                }
            };
            params.push((p.name.to_string(), v));
        }
        Ok(Config { kind: kind.to_string(), id: meta.id.to_string(), params, next: None })
    }

    fn accepts(&self, kind: &ParamKind, value: &ArgValue) -> bool {
        match (kind, value) {
            (ParamKind::Int, ArgValue::Int(_)) => true,
            (ParamKind::Str, ArgValue::Str(_)) => true,
            (ParamKind::Algo(t), ArgValue::Algo(a)) => {
                self.meta(t, &a.name).is_some()
                    || (*t == COMPRESSOR && (self.aliases.contains_key(a.name.as_str()) || self.meta(CODER, &a.name).is_some()))
            }
            _ => false,
        }
    }

    fn resolve_value(&self, param: &Param, value: &ArgValue) -> Result<Value> {
        let mismatch = |want: &str| Error::Param {
            id: param.name.to_string(),
            msg: format!("expected {want}, got `{value}`"),
        };
        match (&param.kind, value) {
            (ParamKind::Int, ArgValue::Int(v)) => Ok(Value::Int(*v)),
            (ParamKind::Int, _) => Err(mismatch("an integer")),
            (ParamKind::Str, ArgValue::Str(s)) => {
                if s.contains('%') || s.contains('"') {
                    return Err(mismatch("a string without `%` or quotes"));
                }
                Ok(Value::Str(s.clone()))
            }
            (ParamKind::Str, _) => Err(mismatch("a quoted string")),
            (ParamKind::Algo(t), ArgValue::Algo(a)) => Ok(Value::Algo(self.resolve_as(a, t)?)),
            (ParamKind::Algo(t), _) => Err(mismatch(&format!("an algorithm of type {t}"))),
        }
    }

    /// Builds a runnable compressor (a pipeline for chained specs).
    pub fn build(&self, cfg: &Config) -> Result<Box<dyn Compressor>> {
        let mut stages = Vec::new();
        let mut cur = Some(cfg);
        while let Some(c) = cur {
            let entry = self
                .entries
                .get(&(COMPRESSOR, c.id.as_str()))
                .filter(|_| c.kind == COMPRESSOR)
                .ok_or_else(|| Error::UnknownAlgorithm { kind: COMPRESSOR.into(), id: c.id.clone() })?;
            let build = entry.build.expect("compressor entries carry a build function");
            let single = Config { next: None, ..c.clone() };
            stages.push(build(&single)?);
            cur = c.next.as_deref();
        }
        Ok(if stages.len() == 1 { stages.pop().unwrap() } else { Box::new(Pipeline::new(stages)) })
    }

    /// Parses, resolves and builds in one step.
    pub fn instantiate(&self, spec: &AlgorithmSpec) -> Result<Box<dyn Compressor>> {
        self.build(&self.resolve(spec)?)
    }

    /// Compressor identifiers, including aliases.
    pub fn compressor_ids(&self) -> Vec<&'static str> {
        let mut ids: Vec<&'static str> =
            self.entries.keys().filter(|(k, _)| *k == COMPRESSOR).map(|(_, id)| *id).collect();
        ids.extend(self.aliases.keys().copied());
        ids
    }

    pub fn ids_of(&self, kind: &str) -> Vec<&'static str> {
        self.entries.keys().filter(|(k, _)| *k == kind).map(|(_, id)| *id).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolve(s: &str) -> Result<Config> {
        Registry::standard().resolve(&AlgorithmSpec::parse(s).unwrap())
    }

    #[test]
    fn metas_have_unique_params() {
        let r = Registry::standard();
        for m in r.metas() {
            let mut names: Vec<&str> = m.params.iter().flat_map(|p| std::iter::once(p.name).chain(p.aliases.iter().copied())).collect();
            names.sort();
            let before = names.len();
            names.dedup();
            assert_eq!(before, names.len(), "{}", m.id);
        }
    }

    #[test]
    fn plain_identifiers() {
        assert_eq!(resolve("bwt").unwrap().canonical(), "bwt");
        assert_eq!(resolve("bwt:rle").unwrap().canonical(), "bwt:rle");
        assert_eq!(resolve("encode(huff)").unwrap().canonical(), "encode(coder=huff)");
    }

    #[test]
    fn defaults_are_filled() {
        let c = resolve("lzss_lcp").unwrap();
        assert_eq!(c.int("threshold"), 2);
        assert_eq!(c.algo("coder").id, "bit");
        let c = resolve("lzss_lcp(threshold=7)").unwrap();
        assert_eq!(c.int("threshold"), 7);
    }

    #[test]
    fn positional_binding_by_type() {
        let c = resolve("lcpcomp(t=5,arrays,scans(a=25))").unwrap();
        assert_eq!(c.int("threshold"), 5);
        assert_eq!(c.algo("comp").id, "arrays");
        assert_eq!(c.algo("dec").id, "scans");
        assert_eq!(c.algo("dec").int("alpha"), 25);
        let again = resolve(&c.canonical()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn aliases_and_coders_as_compressors() {
        assert_eq!(resolve("bwtzip").unwrap().canonical(), "bwt:rle:mtf:encode(coder=huff)");
        assert_eq!(resolve("huff").unwrap().canonical(), "encode(coder=huff)");
        assert_eq!(resolve("bwtzip:rle").unwrap().canonical(), "bwt:rle:mtf:encode(coder=huff):rle");
    }

    #[test]
    fn resolution_errors() {
        assert!(matches!(resolve("nope"), Err(Error::UnknownAlgorithm { .. })));
        assert!(matches!(resolve("lzss_lcp(threshold=huff)"), Err(Error::Param { .. })));
        assert!(matches!(resolve("lzss_lcp(coder=3)"), Err(Error::Param { .. })));
        // `arrays` is an lcpcomp strategy, not a coder
        assert!(resolve("lzss_lcp(coder=arrays)").is_err());
        assert!(matches!(resolve("lzss_lcp(bogus=1)"), Err(Error::Param { .. })));
        assert!(matches!(resolve("lzss_lcp(threshold=1,threshold=2)"), Err(Error::Param { .. })));
        assert!(resolve("encode(coder=bit:huff)").is_err());
    }
}
