//! Line-oriented text format for rings, module presentations and witnesses.
//!
//! ```text
//! # comment
//! ring p=32003 vars=x,y,z
//! seed 42                      # optional
//! check tensor a=0             # optional, witnesses only
//! module M
//! shifts 0,1
//! relations
//! [x^2, x*y - 3*z^2]
//! ```
//!
//! `shifts` lists the degrees of the generators (the twists `a_k` of
//! `⊕ R(-a_k)`); omitting the line means a single generator in degree 0.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::algebra::{Column, FieldSpec, FreeModule, Monomial, Polynomial, Presentation, Ring, RingSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckSpec {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusFile {
    pub ring: Ring,
    pub seed: Option<u64>,
    pub instance: Option<String>,
    pub recipe: Option<String>,
    pub check: Option<CheckSpec>,
    pub modules: Vec<(String, Presentation)>,
}

impl CorpusFile {
    pub fn new(ring: Ring) -> Self {
        CorpusFile { ring, seed: None, instance: None, recipe: None, check: None, modules: Vec::new() }
    }

    pub fn module(&self, name: &str) -> Option<&Presentation> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col0: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col0 + self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| Error::parse(self.line, self.col0 + start + 1, "integer out of range"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(start).is_some_and(|c| c.is_ascii_alphabetic()) {
            return None;
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }
}

struct PolyParser<'a, 'r> {
    cur: Cursor<'a>,
    ring: &'r RingSpec,
}

impl PolyParser<'_, '_> {
    fn expr(&mut self) -> Result<Polynomial> {
        let f = self.ring.field();
        let mut acc = if self.cur.eat(b'-') { self.term()?.neg(f) } else { self.term()? };
        loop {
            if self.cur.eat(b'+') {
                acc = acc.add(&self.term()?, f);
            } else if self.cur.eat(b'-') {
                acc = acc.sub(&self.term()?, f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let f = self.ring.field();
        let mut acc = self.power()?;
        while self.cur.eat(b'*') {
            acc = acc.mul(&self.power()?, f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.cur.eat(b'^') {
            let e = self.cur.integer()?;
            if e > 255 {
                return Err(self.cur.err("exponent too large"));
            }
            return Ok(base.pow(e as u32, self.ring.field()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let f = self.ring.field();
        match self.cur.peek() {
            Some(b'(') => {
                self.cur.pos += 1;
                let e = self.expr()?;
                if !self.cur.eat(b')') {
                    return Err(self.cur.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'-') => {
                self.cur.pos += 1;
                Ok(self.atom()?.neg(f))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.cur.integer()?;
                Ok(Polynomial::constant((v % f.characteristic() as u64) as i64, f))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.cur.pos;
                let name = self.cur.ident().expect("alphabetic");
                match self.ring.var_names().iter().position(|v| v == name) {
                    Some(i) => Ok(Polynomial::term(Monomial::var(i), 1)),
                    None => Err(Error::parse(self.cur.line, self.cur.col0 + start + 1, format!("unknown variable {name}"))),
                }
            }
            Some(c) => Err(self.cur.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.cur.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial expression: integers, variables, `+ - * ^` and parentheses.
pub fn parse_polynomial(ring: &RingSpec, text: &str) -> Result<Polynomial> {
    parse_poly_at(ring, text, 1, 0)
}

fn parse_poly_at(ring: &RingSpec, text: &str, line: usize, col0: usize) -> Result<Polynomial> {
    let mut p = PolyParser { cur: Cursor { src: text.as_bytes(), pos: 0, line, col0 }, ring };
    let out = p.expr()?;
    if p.cur.peek().is_some() {
        return Err(p.cur.err("trailing input"));
    }
    Ok(out)
}

/// Parses a bracketed vector `[p1, p2, ...]` located at `col0` on `line`.
fn parse_vector(ring: &RingSpec, text: &str, line: usize, col0: usize) -> Result<Column> {
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    if !body.starts_with('[') || !body.ends_with(']') {
        return Err(Error::parse(line, col0 + trimmed_start + 1, "expected a bracketed vector"));
    }
    let inner = &body[1..body.len() - 1];
    let inner_col = col0 + trimmed_start + 1;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(parse_poly_at(ring, &inner[start..i], line, inner_col + start)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(parse_poly_at(ring, &inner[start..], line, inner_col + start)?);
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

struct PendingModule {
    name: String,
    line: usize,
    shifts: Option<Vec<i64>>,
    relations: Vec<(usize, Column)>,
}

fn finish_module(ring: &Ring, pm: PendingModule) -> Result<(String, Presentation)> {
    let twists = pm.shifts.unwrap_or_else(|| vec![0]);
    let ambient = FreeModule::new(ring.clone(), twists);
    for (line, col) in &pm.relations {
        if col.len() != ambient.rank() {
            return Err(Error::parse(
                *line,
                1,
                format!("vector has {} entries but module {} has {} generators", col.len(), pm.name, ambient.rank()),
            ));
        }
    }
    let (lines, cols): (Vec<usize>, Vec<Column>) = pm.relations.into_iter().unzip();
    let m = Presentation::new(ambient, cols).map_err(|e| match e {
        Error::NonHomogeneousRelation { column, first, second } => Error::parse(
            lines[column],
            1,
            format!("relation is not homogeneous (degrees {first} and {second})"),
        ),
        other => Error::parse(pm.line, 1, other.to_string()),
    })?;
    Ok((pm.name, m))
}

pub fn parse_corpus(text: &str) -> Result<CorpusFile> {
    let mut ring: Option<Ring> = None;
    let mut file: Option<CorpusFile> = None;
    let mut pending: Option<PendingModule> = None;
    let mut in_relations = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        let content = line.trim();
        if content.is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest_col = indent + keyword.len() + 1;

        if content.starts_with('[') {
            let (Some(r), Some(pm)) = (&ring, pending.as_mut()) else {
                return Err(Error::parse(lineno, indent + 1, "vector outside of a module block"));
            };
            if !in_relations {
                return Err(Error::parse(lineno, indent + 1, "vector before `relations`"));
            }
            let col = parse_vector(r, line, lineno, 0)?;
            pm.relations.push((lineno, col));
            continue;
        }

        match keyword {
            "ring" => {
                if ring.is_some() {
                    return Err(Error::parse(lineno, 1, "duplicate ring header"));
                }
                let mut p = None;
                let mut vars = None;
                for tok in rest.split_whitespace() {
                    match tok.split_once('=') {
                        Some(("p", v)) => p = Some(v),
                        Some(("vars", v)) => vars = Some(v),
                        _ => return Err(Error::parse(lineno, rest_col, format!("unknown ring attribute {tok:?}"))),
                    }
                }
                let field = match p {
                    None => FieldSpec::default(),
                    Some(v) => {
                        let p: u64 = v.parse().map_err(|_| Error::parse(lineno, rest_col, "bad characteristic"))?;
                        FieldSpec::new(p).map_err(|e| Error::parse(lineno, rest_col, e.to_string()))?
                    }
                };
                let vars = vars.ok_or_else(|| Error::parse(lineno, rest_col, "missing vars="))?;
                let names = vars.split(',').map(|s| s.trim().to_string()).collect();
                let r = RingSpec::new(field, names).map_err(|e| Error::parse(lineno, rest_col, e.to_string()))?;
                file = Some(CorpusFile::new(r.clone()));
                ring = Some(r);
            }
            _ if ring.is_none() => {
                return Err(Error::parse(lineno, indent + 1, "expected `ring` header first"));
            }
            "seed" => {
                let v = rest.trim().parse().map_err(|_| Error::parse(lineno, rest_col, "bad seed"))?;
                file.as_mut().expect("ring").seed = Some(v);
            }
            "instance" => file.as_mut().expect("ring").instance = Some(rest.trim().to_string()),
            "recipe" => file.as_mut().expect("ring").recipe = Some(rest.trim().to_string()),
            "check" => {
                let mut toks = rest.split_whitespace();
                let name = toks.next().ok_or_else(|| Error::parse(lineno, rest_col, "missing check name"))?;
                let mut params = BTreeMap::new();
                for t in toks {
                    let (k, v) = t
                        .split_once('=')
                        .ok_or_else(|| Error::parse(lineno, rest_col, format!("expected key=value, got {t:?}")))?;
                    params.insert(k.to_string(), v.to_string());
                }
                file.as_mut().expect("ring").check = Some(CheckSpec { name: name.to_string(), params });
            }
            "module" => {
                if let Some(pm) = pending.take() {
                    let m = finish_module(ring.as_ref().expect("ring"), pm)?;
                    file.as_mut().expect("ring").modules.push(m);
                }
                let name = rest.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(Error::parse(lineno, rest_col, "expected a module name"));
                }
                if file.as_ref().expect("ring").module(name).is_some() {
                    return Err(Error::parse(lineno, rest_col, format!("duplicate module {name}")));
                }
                pending = Some(PendingModule { name: name.to_string(), line: lineno, shifts: None, relations: Vec::new() });
                in_relations = false;
            }
            "shifts" => {
                let pm = pending.as_mut().ok_or_else(|| Error::parse(lineno, 1, "`shifts` outside of a module block"))?;
                let mut shifts = Vec::new();
                for tok in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    shifts.push(tok.parse().map_err(|_| Error::parse(lineno, rest_col, format!("bad shift {tok:?}")))?);
                }
                pm.shifts = Some(shifts);
            }
            "relations" => {
                if pending.is_none() {
                    return Err(Error::parse(lineno, 1, "`relations` outside of a module block"));
                }
                in_relations = true;
            }
            other => return Err(Error::parse(lineno, indent + 1, format!("unknown directive {other:?}"))),
        }
    }
    let mut file = file.ok_or_else(|| Error::parse(1, 1, "missing `ring` header"))?;
    if let Some(pm) = pending {
        let m = finish_module(&file.ring, pm)?;
        file.modules.push(m);
    }
    Ok(file)
}

pub fn render_module(out: &mut String, name: &str, m: &Presentation) {
    let ring = m.ring();
    let _ = writeln!(out, "module {name}");
    let shifts: Vec<String> = m.ambient().twists().iter().map(i64::to_string).collect();
    let _ = writeln!(out, "shifts {}", shifts.join(","));
    let _ = writeln!(out, "relations");
    for col in m.relations() {
        let entries: Vec<String> = col.iter().map(|p| ring.format_poly(p)).collect();
        let _ = writeln!(out, "[{}]", entries.join(", "));
    }
}

pub fn render_corpus(file: &CorpusFile) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "ring p={} vars={}",
        file.ring.field().characteristic(),
        file.ring.var_names().join(",")
    );
    if let Some(s) = file.seed {
        let _ = writeln!(out, "seed {s}");
    }
    if let Some(i) = &file.instance {
        let _ = writeln!(out, "instance {i}");
    }
    if let Some(r) = &file.recipe {
        let _ = writeln!(out, "recipe {r}");
    }
    if let Some(c) = &file.check {
        let mut line = format!("check {}", c.name);
        for (k, v) in &c.params {
            let _ = write!(line, " {k}={v}");
        }
        let _ = writeln!(out, "{line}");
    }
    for (name, m) in &file.modules {
        render_module(&mut out, name, m);
    }
    out
}
