//! Reader for ideal files.
//!
//! ```text
//! # comment
//! ring 101 [a,b,c] grevlex
//! I = a*b - c^2, \
//!     b^2 - 3*a*c
//! ```
//!
//! The order is one of `lex`, `grlex`, `grevlex` or `weight w1,...,wn <tiebreak>`.
//! A trailing backslash continues a statement on the next line.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, TieBreak, WeightVector};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingContext};

/// A parsed ideal file: the ring and the ideals in declaration order.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Ring,
    pub ideals: Vec<(String, Vec<Polynomial>)>,
}

impl IdealFile {
    pub fn ideal(&self, name: &str) -> Option<&[Polynomial]> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g.as_slice())
    }

    /// Renders the file back into the input grammar.
    pub fn to_text(&self) -> String {
        let mut out = self.ring.header();
        out.push('\n');
        for (name, gens) in &self.ideals {
            out.push_str(&format_ideal(name, gens));
            out.push('\n');
        }
        out
    }
}

pub fn format_ideal(name: &str, gens: &[Polynomial]) -> String {
    if gens.is_empty() {
        return format!("{name} = 0");
    }
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("{name} = {}", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Name(String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Statement {
    tokens: Vec<Token>,
    /// position just past the last token, for "unexpected end" errors
    end: (usize, usize),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Statement>> {
    let mut statements = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut end = (1, 1);
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = content.trim_end();
        let (body, continued) = match trimmed.strip_suffix('\\') {
            Some(b) => (b, true),
            None => (trimmed, false),
        };
        let chars: Vec<char> = body.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                current.push(Token { tok: Tok::Int(s), line, column });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                current.push(Token { tok: Tok::Name(s), line, column });
            } else if "[]=,+-*^()".contains(c) {
                current.push(Token { tok: Tok::Sym(c), line, column });
                i += 1;
            } else {
                return Err(syntax(line, column, format!("unexpected character `{c}`")));
            }
        }
        end = (line, chars.len() + 1);
        if !continued && !current.is_empty() {
            statements.push(Statement {
                tokens: std::mem::take(&mut current),
                end,
            });
        }
    }
    if !current.is_empty() {
        statements.push(Statement { tokens: current, end });
    }
    Ok(statements)
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (l, c) = self.here();
        syntax(l, c, message)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn expect_name(&mut self) -> Result<(&'a str, usize, usize)> {
        match self.peek() {
            Some(Token { tok: Tok::Name(n), line, column }) => {
                self.pos += 1;
                Ok((n.as_str(), *line, *column))
            }
            _ => Err(self.error("expected a name")),
        }
    }

    fn expect_u64(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Token { tok: Tok::Int(s), line, column }) => {
                self.pos += 1;
                s.parse::<u64>()
                    .map_err(|_| syntax(*line, *column, format!("integer `{s}` is too large")))
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }
}

fn parse_tiebreak(cur: &mut Cursor) -> Result<TieBreak> {
    let (name, line, column) = cur.expect_name()?;
    match name {
        "lex" => Ok(TieBreak::Lex),
        "grlex" => Ok(TieBreak::GrLex),
        "grevlex" => Ok(TieBreak::GrevLex),
        other => Err(syntax(line, column, format!("unknown tiebreak order `{other}`"))),
    }
}

fn parse_ring(cur: &mut Cursor) -> Result<Ring> {
    let p = cur.expect_u64()?;
    cur.expect_sym('[')?;
    let mut names = Vec::new();
    loop {
        let (n, line, column) = cur.expect_name()?;
        if names.iter().any(|m: &String| m == n) {
            return Err(syntax(line, column, format!("variable `{n}` declared twice")));
        }
        names.push(n.to_string());
        if cur.eat_sym(']') {
            break;
        }
        cur.expect_sym(',')?;
    }
    let (oname, line, column) = cur.expect_name()?;
    let order = match oname {
        "lex" => MonomialOrder::Lex,
        "grlex" => MonomialOrder::GrLex,
        "grevlex" => MonomialOrder::GrevLex,
        "weight" => {
            let close = if cur.eat_sym('[') {
                Some(']')
            } else if cur.eat_sym('(') {
                Some(')')
            } else {
                None
            };
            let mut ws = Vec::new();
            loop {
                ws.push(cur.expect_u64()?);
                if !cur.eat_sym(',') {
                    break;
                }
            }
            if let Some(c) = close {
                cur.expect_sym(c)?;
            }
            let tiebreak = parse_tiebreak(cur)?;
            let weights = WeightVector::new(ws).map_err(|_| syntax(line, column, "weights must be positive"))?;
            MonomialOrder::Weight { weights, tiebreak }
        }
        other => return Err(syntax(line, column, format!("unknown monomial order `{other}`"))),
    };
    if !cur.at_end() {
        return Err(cur.error("unexpected token after ring declaration"));
    }
    if p >= crate::field::MAX_CHARACTERISTIC || !crate::field::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    RingContext::new(p, names, order)
}

fn reduce_int(ring: &Ring, digits: &str) -> Scalar {
    let field = ring.field();
    let p = field.characteristic() as u64;
    let v = digits
        .bytes()
        .fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
    field.from_u64(v)
}

fn parse_term(cur: &mut Cursor, ring: &Ring) -> Result<(Scalar, Monomial)> {
    let field = ring.field();
    let mut coeff = Scalar::ONE;
    let mut mono = ring.one();
    loop {
        match cur.next() {
            Some(Token { tok: Tok::Int(s), .. }) => {
                coeff = field.mul(coeff, reduce_int(ring, s));
            }
            Some(Token { tok: Tok::Name(n), line, column }) => {
                let idx = ring.variable_index(n).ok_or_else(|| Error::UnknownVariable {
                    name: n.clone(),
                    line: *line,
                    column: *column,
                })?;
                let e = if cur.eat_sym('^') { cur.expect_u64()? } else { 1 };
                if e > u16::MAX as u64 / 2 {
                    return Err(syntax(*line, *column, "exponent too large"));
                }
                let mut exps = mono.exponents().to_vec();
                exps[idx] += e as u16;
                mono = Monomial::from_exponents(&exps);
            }
            Some(t) => return Err(syntax(t.line, t.column, "expected a variable or integer")),
            None => return Err(syntax(cur.end.0, cur.end.1, "unexpected end of statement")),
        }
        if !cur.eat_sym('*') {
            return Ok((coeff, mono));
        }
    }
}

fn parse_poly(cur: &mut Cursor, ring: &Ring) -> Result<Polynomial> {
    let field = ring.field();
    let mut terms = Vec::new();
    let mut negate = if cur.eat_sym('-') {
        true
    } else {
        cur.eat_sym('+');
        false
    };
    loop {
        let (c, m) = parse_term(cur, ring)?;
        terms.push((if negate { field.neg(c) } else { c }, m));
        if cur.eat_sym('+') {
            negate = false;
        } else if cur.eat_sym('-') {
            negate = true;
        } else {
            break;
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parses an ideal file. Zero generators are kept out of the generator lists.
pub fn parse_input(text: &str) -> Result<IdealFile> {
    let statements = tokenize(text)?;
    let mut ring: Option<Ring> = None;
    let mut ideals: Vec<(String, Vec<Polynomial>)> = Vec::new();
    for st in &statements {
        let mut cur = Cursor {
            tokens: &st.tokens,
            pos: 0,
            end: st.end,
        };
        let (head, line, column) = cur.expect_name()?;
        if head == "ring" && !matches!(cur.peek(), Some(Token { tok: Tok::Sym('='), .. })) {
            if ring.is_some() {
                return Err(syntax(line, column, "ring declared twice"));
            }
            ring = Some(parse_ring(&mut cur)?);
            continue;
        }
        let r = ring
            .as_ref()
            .ok_or_else(|| syntax(line, column, "ideal declared before the ring"))?;
        cur.expect_sym('=')?;
        if ideals.iter().any(|(n, _)| n == head) {
            return Err(Error::DuplicateIdeal(head.to_string()));
        }
        let mut gens = Vec::new();
        loop {
            let f = parse_poly(&mut cur, r)?;
            if !f.is_zero() {
                gens.push(f);
            }
            if !cur.eat_sym(',') {
                break;
            }
        }
        if !cur.at_end() {
            return Err(cur.error("expected `,` or end of statement"));
        }
        ideals.push((head.to_string(), gens));
    }
    let ring = ring.ok_or_else(|| syntax(1, 1, "missing ring declaration"))?;
    Ok(IdealFile { ring, ideals })
}
