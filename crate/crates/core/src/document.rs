//! Text format for ideals.
//!
//! ```text
//! # comment
//! ring 4                      # or: ring 3: a, b, c
//! label remark-j              # optional
//! components = (x1,x2),(x1^2,x3^2),(x2,x4),(x3,x4)
//! ```
//!
//! Statements are separated by newlines or `;`. The body is either
//! `ideal = m1, m2, ...` with monomials like `x1^2*x3`, or a component list.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{
    irreducible_decomposition, irredundantize, minimalize, Decomposition, IrreducibleComponent, Monomial,
    MonomialIdeal, Ring,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Ideal(MonomialIdeal),
    /// Components as written, possibly redundant.
    Components(Decomposition),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub label: Option<String>,
    pub body: Body,
}

impl IdealDocument {
    pub fn ring(&self) -> &Ring {
        match &self.body {
            Body::Ideal(i) => i.ring(),
            Body::Components(d) => d.ring(),
        }
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        match &self.body {
            Body::Ideal(i) => Ok(i.clone()),
            Body::Components(d) => d.ideal(),
        }
    }

    /// Irredundant decomposition. A component list keeps its order with the
    /// superfluous components dropped.
    pub fn decomposition(&self) -> Result<Decomposition> {
        match &self.body {
            Body::Ideal(i) => irreducible_decomposition(i),
            Body::Components(d) => Ok(irredundantize(d)),
        }
    }
}

impl fmt::Display for IdealDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring();
        if ring.has_default_names() {
            writeln!(f, "ring {}", ring.n())?;
        } else {
            writeln!(f, "ring {}: {}", ring.n(), ring.names().join(", "))?;
        }
        if let Some(label) = &self.label {
            writeln!(f, "label {label}")?;
        }
        match &self.body {
            Body::Ideal(i) => writeln!(f, "ideal = {}", i.fmt_gens()),
            Body::Components(d) => writeln!(f, "components = {}", d.fmt_components()),
        }
    }
}

#[derive(Clone, Copy)]
struct Ch {
    c: char,
    line: usize,
    col: usize,
}

fn statements(text: &str) -> Vec<Vec<Ch>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut comment = false;
    for (l, line) in text.split('\n').enumerate() {
        for (k, c) in line.chars().enumerate() {
            if comment {
                break;
            }
            match c {
                '#' => comment = true,
                ';' => out.push(std::mem::take(&mut current)),
                _ => current.push(Ch { c, line: l + 1, col: k + 1 }),
            }
        }
        comment = false;
        out.push(std::mem::take(&mut current));
    }
    out.into_iter().filter(|s| s.iter().any(|ch| !ch.c.is_whitespace())).collect()
}

struct Cursor<'a> {
    chars: &'a [Ch],
    pos: usize,
    /// Position just past the statement, for end-of-statement errors.
    end: (usize, usize),
}

impl<'a> Cursor<'a> {
    fn new(chars: &'a [Ch]) -> Self {
        let last = chars.last().map(|c| (c.line, c.col + 1)).unwrap_or((1, 1));
        Cursor { chars, pos: 0, end: last }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].c.is_whitespace() {
            self.pos += 1;
        }
    }

    fn here(&self) -> (usize, usize) {
        self.chars.get(self.pos).map(|c| (c.line, c.col)).unwrap_or(self.end)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse { line, col, msg: msg.into() }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// Identifier `[A-Za-z_][A-Za-z0-9_]*` with its start position.
    fn ident(&mut self) -> Result<(String, usize, usize)> {
        self.skip_ws();
        let (line, col) = self.here();
        let start = self.pos;
        while let Some(ch) = self.chars.get(self.pos) {
            let ok = if self.pos == start {
                ch.c.is_ascii_alphabetic() || ch.c == '_'
            } else {
                ch.c.is_ascii_alphanumeric() || ch.c == '_'
            };
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a name"));
        }
        Ok((self.chars[start..self.pos].iter().map(|c| c.c).collect(), line, col))
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.c).collect();
        digits.parse().map_err(|_| {
            let c = self.chars[start];
            Error::Parse { line: c.line, col: c.col, msg: "number too large".into() }
        })
    }

    fn rest(&mut self) -> String {
        self.skip_ws();
        let s: String = self.chars[self.pos..].iter().map(|c| c.c).collect();
        self.pos = self.chars.len();
        s.trim_end().to_string()
    }
}

/// `name` or `name^e`, resolved against the ring.
fn factor(cur: &mut Cursor, ring: &Ring) -> Result<(usize, u32, usize, usize)> {
    let (name, line, col) = cur.ident()?;
    let j = ring.index_of(&name).ok_or(Error::UndeclaredVariable { name, line, col })?;
    let e = if cur.eat('^') { cur.number()? } else { 1 };
    Ok((j, e, line, col))
}

fn monomial(cur: &mut Cursor, ring: &Ring) -> Result<Monomial> {
    let mut exps = vec![0u32; ring.n()];
    if cur.peek() == Some('1') {
        cur.number()?;
        return Ok(Monomial::new(exps));
    }
    loop {
        let (j, e, ..) = factor(cur, ring)?;
        exps[j] = exps[j]
            .checked_add(e)
            .ok_or_else(|| cur.error("exponent too large"))?;
        if !cur.eat('*') {
            return Ok(Monomial::new(exps));
        }
    }
}

fn component(cur: &mut Cursor, ring: &Ring) -> Result<IrreducibleComponent> {
    cur.expect('(')?;
    let mut powers = vec![0u32; ring.n()];
    loop {
        let (j, e, line, col) = factor(cur, ring)?;
        if e == 0 {
            return Err(Error::ZeroExponent { line, col });
        }
        if powers[j] != 0 {
            return Err(Error::Parse { line, col, msg: format!("variable `{}` repeated in a component", ring.name(j)) });
        }
        powers[j] = e;
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(')')?;
    IrreducibleComponent::new(powers)
}

pub fn parse_ideal(text: &str) -> Result<IdealDocument> {
    let stmts = statements(text);
    let Some(first) = stmts.first() else {
        return Err(Error::Parse { line: 1, col: 1, msg: "empty document".into() });
    };
    let mut cur = Cursor::new(first);
    let (kw, line, col) = cur.ident()?;
    if kw != "ring" {
        return Err(Error::Parse { line, col, msg: "the document must start with `ring N`".into() });
    }
    let n = cur.number()? as usize;
    let ring = if cur.eat(':') {
        let mut names = Vec::new();
        loop {
            names.push(cur.ident()?.0);
            if !cur.eat(',') {
                break;
            }
        }
        if names.len() != n {
            return Err(cur.error(format!("{} names given for {n} variables", names.len())));
        }
        Ring::with_names(names)
    } else {
        Ring::new(n)
    }
    .map_err(|e| Error::Parse { line, col, msg: e.to_string() })?;
    cur.expect_end()?;

    let mut label = None;
    let mut body: Option<Body> = None;
    for stmt in &stmts[1..] {
        let mut cur = Cursor::new(stmt);
        let (kw, line, col) = cur.ident()?;
        let duplicate = |what: &str| Error::Parse { line, col, msg: format!("duplicate {what} statement") };
        match kw.as_str() {
            "label" => {
                if label.is_some() {
                    return Err(duplicate("label"));
                }
                let text = cur.rest();
                if text.is_empty() {
                    return Err(cur.error("empty label"));
                }
                label = Some(text);
            }
            "ideal" | "components" => {
                if body.is_some() {
                    return Err(duplicate("ideal or components"));
                }
                cur.expect('=')?;
                if kw == "ideal" {
                    let mut gens = Vec::new();
                    loop {
                        gens.push(monomial(&mut cur, &ring)?);
                        if !cur.eat(',') {
                            break;
                        }
                    }
                    cur.expect_end()?;
                    body = Some(Body::Ideal(minimalize(&ring, gens)?));
                } else {
                    let mut comps = Vec::new();
                    loop {
                        comps.push(component(&mut cur, &ring)?);
                        if !cur.eat(',') {
                            break;
                        }
                    }
                    cur.expect_end()?;
                    body = Some(Body::Components(Decomposition::new(ring.clone(), comps)?));
                }
            }
            "ring" => return Err(duplicate("ring")),
            other => {
                return Err(Error::Parse { line, col, msg: format!("unknown statement `{other}`") });
            }
        }
    }
    let body = body.ok_or_else(|| {
        let (line, col) = Cursor::new(stmts.last().unwrap()).end;
        Error::Parse { line, col, msg: "missing `ideal = ...` or `components = ...`".into() }
    })?;
    Ok(IdealDocument { label, body })
}
