//! The line-oriented algebra file format.
//!
//! ```text
//! # K<X,Y>/(X^2, Y^2, YX - 2XY) over GF(5)
//! field GF 5
//! vertex e
//! arrow X e e
//! arrow Y e e
//! rel X^2
//! rel Y^2
//! rel Y*X - 2*X*Y
//! ```
//!
//! Words multiply in traversal order: `a*b` is "a then b" and is the zero
//! relation term when target(a) != source(b). Optional directives: `weight
//! <arrow> <n>`, `order <id>...` (every vertex and arrow, vertices first),
//! `truncate <n>`.

use crate::algebra::{compose, Item, PathSum, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Parse the textual format into a validated presentation.
pub fn parse(text: &str) -> Result<Presentation> {
    let mut field: Option<Field> = None;
    let mut quiver = Quiver::new();
    let mut weights: Vec<(String, u64, usize)> = Vec::new();
    let mut order: Option<(Vec<String>, usize)> = None;
    let mut truncate_level: Option<u32> = None;
    let mut rel_sources: Vec<(String, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = match content.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (content, ""),
        };
        match head {
            "field" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                field = Some(match toks.as_slice() {
                    ["Q"] => Field::rational(),
                    ["GF", p] => {
                        let p: u32 = p.parse().map_err(|_| err(line, 7, "bad prime"))?;
                        Field::prime(p)?
                    }
                    _ => return Err(err(line, 7, "expected `Q` or `GF <p>`")),
                });
            }
            "vertex" => {
                for name in rest.split_whitespace() {
                    quiver.add_vertex(name)?;
                }
            }
            "arrow" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                match toks.as_slice() {
                    [name, s, t] => {
                        quiver.add_arrow(name, s, t)?;
                    }
                    _ => return Err(err(line, 7, "expected `arrow <name> <source> <target>`")),
                }
            }
            "weight" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                match toks.as_slice() {
                    [name, w] => {
                        let w: u64 = w.parse().map_err(|_| err(line, 8, "bad weight"))?;
                        weights.push((name.to_string(), w, line));
                    }
                    _ => return Err(err(line, 8, "expected `weight <arrow> <n>`")),
                }
            }
            "order" => {
                order = Some((rest.split_whitespace().map(str::to_string).collect(), line));
            }
            "truncate" => {
                let n: u32 = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(line, 10, "bad truncation level"))?;
                truncate_level = Some(n);
            }
            "rel" => {
                rel_sources.push((rest.to_string(), line));
            }
            other => {
                return Err(err(line, 1, &format!("unknown directive `{other}`")));
            }
        }
    }

    let field = field.ok_or_else(|| err(1, 1, "missing `field` directive"))?;
    let mut pres = Presentation::new(field, quiver);
    for (name, w, line) in weights {
        let a = pres
            .quiver
            .arrow_id(&name)
            .map_err(|_| err(line, 8, &format!("unknown arrow `{name}`")))?;
        pres.weights[a] = w;
    }
    if let Some((names, line)) = order {
        let mut items = Vec::new();
        for name in names {
            items.push(
                pres.quiver
                    .item(&name)
                    .map_err(|_| err(line, 7, &format!("unknown id `{name}`")))?,
            );
        }
        pres.base_order = Some(items);
    }
    pres.truncate_level = truncate_level;
    for (src, line) in rel_sources {
        let sum = parse_expr(&src, &pres.quiver, &field, line)?;
        pres.relations.push(sum);
    }
    pres.validated()
}

fn err(line: usize, col: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(src: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, col));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n: i64 = s
                    .parse()
                    .map_err(|_| err(line, col, "integer literal out of range"))?;
                out.push((Tok::Num(n), col));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(err(line, col, &format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    quiver: &'a Quiver,
    field: &'a Field,
    line: usize,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|(_, c)| *c)
            .unwrap_or(1)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<PathSum> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := '-'? factor ('*' factor)*
    fn term(&mut self) -> Result<PathSum> {
        let mut negate = false;
        while self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = !negate;
        }
        let start_col = self.col();
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        if acc.is_zero() {
            return Err(err(
                self.line,
                start_col,
                "relation term is zero: the paths do not compose",
            ));
        }
        if negate {
            acc = acc.neg();
        }
        Ok(acc)
    }

    // factor := atom ('^' INT)?
    fn factor(&mut self) -> Result<PathSum> {
        let base_col = self.col();
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Num(n)) if n >= 1 => {
                    let mut acc = base.clone();
                    for _ in 1..n {
                        acc = acc.mul(&base);
                        if acc.is_zero() {
                            return Err(err(
                                self.line,
                                base_col,
                                "relation term is zero: the paths do not compose",
                            ));
                        }
                    }
                    Ok(acc)
                }
                _ => Err(err(self.line, col, "expected a positive exponent")),
            }
        } else {
            Ok(base)
        }
    }

    // atom := INT ('/' INT)? | IDENT | '(' expr ')'
    fn atom(&mut self) -> Result<PathSum> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => {
                let scalar = if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dcol = self.col();
                    match self.bump() {
                        Some(Tok::Num(d)) if d != 0 => self
                            .field
                            .from_ratio(n, d)
                            .map_err(|_| err(self.line, dcol, "denominator is zero in GF(p)"))?,
                        _ => return Err(err(self.line, dcol, "expected a nonzero denominator")),
                    }
                } else {
                    self.field.from_i64(n)
                };
                // A bare scalar acts by scaling; represent it over every
                // vertex so that s * w = scaled w for any word w.
                let mut sum = PathSum::zero();
                for v in 0..self.quiver.n_vertices() {
                    sum.add_term(self.quiver.trivial_path(v), scalar.clone());
                }
                if sum.is_zero() {
                    // Zero scalar: surface as zero-term error at the caller.
                    return Ok(PathSum::zero());
                }
                Ok(sum)
            }
            Some(Tok::Ident(name)) => match self.quiver.item(&name) {
                Ok(Item::Vertex(v)) => {
                    Ok(PathSum::from_path(self.quiver.trivial_path(v), self.field))
                }
                Ok(Item::Arrow(a)) => Ok(PathSum::from_path(self.quiver.arrow_path(a), self.field)),
                Err(_) => Err(err(self.line, col, &format!("unknown id `{name}`"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(self.line, self.col(), "expected `)`")),
                }
            }
            _ => Err(err(self.line, col, "expected a scalar, id, or `(`")),
        }
    }
}

fn parse_expr(src: &str, quiver: &Quiver, field: &Field, line: usize) -> Result<PathSum> {
    let toks = tokenize(src, line)?;
    if toks.is_empty() {
        return Err(err(line, 1, "empty relation"));
    }
    let mut p = ExprParser {
        toks,
        pos: 0,
        quiver,
        field,
        line,
    };
    let sum = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(line, p.col(), "trailing tokens in relation"));
    }
    Ok(sum)
}

/// Canonical text for a presentation; `parse(print(p)) == p`.
pub fn print(pres: &Presentation) -> String {
    let mut out = String::new();
    match pres.field.characteristic() {
        0 => out.push_str("field Q\n"),
        p => out.push_str(&format!("field GF {p}\n")),
    }
    let vnames: Vec<&str> = (0..pres.quiver.n_vertices())
        .map(|v| pres.quiver.vertex_name(v))
        .collect();
    out.push_str(&format!("vertex {}\n", vnames.join(" ")));
    for a in pres.quiver.arrows() {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            a.name,
            pres.quiver.vertex_name(a.source),
            pres.quiver.vertex_name(a.target)
        ));
    }
    for (i, w) in pres.weights.iter().enumerate() {
        if *w != 1 {
            out.push_str(&format!("weight {} {}\n", pres.quiver.arrow(i).name, w));
        }
    }
    if let Some(order) = &pres.base_order {
        let names: Vec<&str> = order
            .iter()
            .map(|item| match item {
                Item::Vertex(v) => pres.quiver.vertex_name(*v),
                Item::Arrow(a) => pres.quiver.arrow(*a).name.as_str(),
            })
            .collect();
        out.push_str(&format!("order {}\n", names.join(" ")));
    }
    if let Some(n) = pres.truncate_level {
        out.push_str(&format!("truncate {n}\n"));
    }
    for rel in &pres.relations {
        out.push_str(&format!("rel {}\n", rel.display(&pres.quiver)));
    }
    out
}

/// Compose a list of named arrows into a relation word, for generators.
pub fn word(quiver: &Quiver, names: &[&str]) -> Result<PathSum> {
    let field = Field::rational();
    let mut acc: Option<crate::algebra::Path> = None;
    for name in names {
        let a = quiver.arrow_id(name)?;
        let ap = quiver.arrow_path(a);
        acc = Some(match acc {
            None => ap,
            Some(p) => compose(&p, &ap)
                .ok_or_else(|| Error::Internal(format!("word does not compose at `{name}`")))?,
        });
    }
    let p = acc.ok_or_else(|| Error::Internal("empty word".to_string()))?;
    Ok(PathSum::from_path(p, &field))
}
