//! The textual algorithm grammar.
//!
//! ```text
//! chain := node (':' chain)?
//! node  := IDENT ('(' (arg (',' arg)*)? ')')?
//! arg   := (IDENT '=')? value
//! value := INTEGER | '"' chars '"' | chain
//! ```
//!
//! `a:b:c` is right-associative: `a` with `next = b:c`. Whitespace outside
//! quoted strings is ignored.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArgValue {
    Int(u64),
    Str(String),
    Algo(AlgorithmSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arg {
    pub key: Option<String>,
    pub value: ArgValue,
}

/// A parsed algorithm identifier with arguments, optionally chained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmSpec {
    pub name: String,
    pub args: Vec<Arg>,
    pub next: Option<Box<AlgorithmSpec>>,
}

impl AlgorithmSpec {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), args: Vec::new(), next: None }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        p.skip_ws();
        if p.at_end() {
            return Err(p.error("empty algorithm spec"));
        }
        let spec = p.chain()?;
        p.skip_ws();
        if !p.at_end() {
            let msg = if p.peek() == Some(b')') { "unbalanced `)`" } else { "unexpected trailing input" };
            return Err(p.error(msg));
        }
        Ok(spec)
    }

    /// Number of `:`-chained stages.
    pub fn stages(&self) -> usize {
        1 + self.next.as_ref().map_or(0, |n| n.stages())
    }

    pub fn is_valid_ident(s: &str) -> bool {
        let mut it = s.bytes();
        matches!(it.next(), Some(c) if c.is_ascii_alphabetic() || c == b'_')
            && it.all(|c| c.is_ascii_alphanumeric() || c == b'_')
    }
}

impl std::str::FromStr for AlgorithmSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for ArgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgValue::Int(v) => write!(f, "{v}"),
            ArgValue::Str(s) => write!(f, "\"{s}\""),
            ArgValue::Algo(a) => write!(f, "{a}"),
        }
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, arg) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                if let Some(k) = &arg.key {
                    write!(f, "{k}=")?;
                }
                write!(f, "{}", arg.value)?;
            }
            f.write_str(")")?;
        }
        if let Some(next) = &self.next {
            write!(f, ":{next}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.pos += 1,
            None => return Err(self.error("expected identifier, found end of input")),
            Some(_) => return Err(self.error("expected identifier")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn chain(&mut self) -> Result<AlgorithmSpec> {
        let mut node = self.node()?;
        if self.eat(b':') {
            self.skip_ws();
            if self.at_end() || matches!(self.peek(), Some(b')' | b',')) {
                return Err(self.error("trailing `:` without a right operand"));
            }
            node.next = Some(Box::new(self.chain()?));
        }
        Ok(node)
    }

    fn node(&mut self) -> Result<AlgorithmSpec> {
        let name = self.ident()?;
        let mut args = Vec::new();
        if self.eat(b'(') {
            if !self.eat(b')') {
                loop {
                    args.push(self.arg()?);
                    if self.eat(b',') {
                        continue;
                    }
                    if self.eat(b')') {
                        break;
                    }
                    return Err(self.error(if self.at_end() { "unbalanced `(`" } else { "expected `,` or `)`" }));
                }
            }
        }
        Ok(AlgorithmSpec { name, args, next: None })
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        match self.peek() {
            Some(b',') | Some(b')') => return Err(self.error("empty argument")),
            None => return Err(self.error("unbalanced `(`")),
            _ => {}
        }
        // `key = value` needs one token of lookahead past the identifier
        let save = self.pos;
        if matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
            let key = self.ident()?;
            if self.eat(b'=') {
                let value = self.value()?;
                return Ok(Arg { key: Some(key), value });
            }
            self.pos = save;
        }
        Ok(Arg { key: None, value: self.value()? })
    }

    fn value(&mut self) -> Result<ArgValue> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                digits.parse().map(ArgValue::Int).map_err(|_| self.error("integer out of range"))
            }
            Some(b'"') => {
                self.pos += 1;
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c != b'"') {
                    self.pos += 1;
                }
                if self.at_end() {
                    return Err(self.error("unterminated string"));
                }
                let s = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                self.pos += 1;
                Ok(ArgValue::Str(s))
            }
            Some(b',') | Some(b')') => Err(self.error("empty argument")),
            None => Err(self.error("expected a value")),
            _ => self.chain().map(ArgValue::Algo),
        }
    }
}
