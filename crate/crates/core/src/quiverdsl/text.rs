//! The `.qv` text format.
//!
//! ```text
//! quiver NAME { vertices: namelist ; arrows: arrowdecl* (relations: reldecl*)? }
//! arrowdecl ::= NAME ":" NAME "->" NAME ";"
//! reldecl   ::= ("-")? term (("+"|"-") term)* ";"
//! term      ::= (RATIONAL "*")? NAME ("*" NAME)*
//! ```
//!
//! Vertex names in `namelist` are separated by commas or whitespace. `#`
//! starts a comment running to the end of the line.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::model::{Arrow, BoundQuiver, Quiver, Relation};
use super::{check, DslError, ValidationError};
use crate::polyring::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    LBrace,
    RBrace,
    Colon,
    Semi,
    Comma,
    Arrow,
    Star,
    Plus,
    Minus,
    Slash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, DslError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
            continue;
        }
        let tok = if c.is_alphanumeric() || c == '_' {
            let mut w = String::new();
            while chars.peek().is_some_and(|&c| c.is_alphanumeric() || c == '_') {
                w.push(bump(&mut chars).unwrap());
            }
            Tok::Word(w)
        } else {
            bump(&mut chars);
            match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ':' => Tok::Colon,
                ';' => Tok::Semi,
                ',' => Tok::Comma,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                '/' => Tok::Slash,
                '-' => {
                    if chars.peek() == Some(&'>') {
                        bump(&mut chars);
                        Tok::Arrow
                    } else {
                        Tok::Minus
                    }
                }
                other => {
                    return Err(DslError::Syntax {
                        line: l,
                        column: col,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

/// A relation term before name resolution.
struct RawTerm {
    coeff: Rational,
    path: Vec<String>,
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

fn is_numeric(w: &str) -> bool {
    w.chars().all(|c| c.is_ascii_digit())
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> DslError {
        let t = &self.toks[self.pos];
        DslError::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), DslError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn word(&mut self, what: &str) -> Result<String, DslError> {
        match self.peek().clone() {
            Tok::Word(w) => {
                self.next();
                Ok(w)
            }
            other => Err(self.error(format!("expected {what}, found {}", other.describe()))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), DslError> {
        match self.peek() {
            Tok::Word(w) if w == kw => {
                self.next();
                Ok(())
            }
            other => Err(self.error(format!("expected `{kw}`, found {}", other.describe()))),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Word(w) if w == kw) && *self.peek_at(1) == Tok::Colon
    }

    fn term(&mut self, sign: bool) -> Result<RawTerm, DslError> {
        let mut coeff = Rational::one();
        if let Tok::Word(w) = self.peek().clone() {
            if is_numeric(&w) && matches!(self.peek_at(1), Tok::Star | Tok::Slash) {
                self.next();
                let numer: BigInt = w.parse().expect("digits");
                let denom = if *self.peek() == Tok::Slash {
                    self.next();
                    let d = self.word("denominator")?;
                    if !is_numeric(&d) {
                        return Err(self.error("denominator must be a positive integer"));
                    }
                    let d: BigInt = d.parse().expect("digits");
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff = Rational::new(numer, denom);
                self.expect(Tok::Star)?;
            }
        }
        let mut path = vec![self.word("arrow name")?];
        while *self.peek() == Tok::Star {
            self.next();
            path.push(self.word("arrow name")?);
        }
        if sign {
            coeff = -coeff;
        }
        Ok(RawTerm { coeff, path })
    }

    fn reldecl(&mut self) -> Result<Vec<RawTerm>, DslError> {
        let mut terms = Vec::new();
        let mut neg = false;
        if *self.peek() == Tok::Minus {
            self.next();
            neg = true;
        }
        terms.push(self.term(neg)?);
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    terms.push(self.term(false)?);
                }
                Tok::Minus => {
                    self.next();
                    terms.push(self.term(true)?);
                }
                Tok::Semi => {
                    self.next();
                    return Ok(terms);
                }
                other => {
                    return Err(self.error(format!(
                        "expected `+`, `-` or `;` in relation, found {}",
                        other.describe()
                    )))
                }
            }
        }
    }

    fn quiver(&mut self) -> Result<(String, Vec<String>, Vec<(String, String, String)>, Vec<Vec<RawTerm>>), DslError> {
        self.keyword("quiver")?;
        let name = self.word("quiver name")?;
        self.expect(Tok::LBrace)?;
        self.keyword("vertices")?;
        self.expect(Tok::Colon)?;
        let mut vertices = Vec::new();
        loop {
            match self.peek() {
                Tok::Word(_) => vertices.push(self.word("vertex name")?),
                Tok::Comma => {
                    self.next();
                }
                Tok::Semi => {
                    self.next();
                    break;
                }
                other => {
                    return Err(self.error(format!("expected vertex name, found {}", other.describe())))
                }
            }
        }
        self.keyword("arrows")?;
        self.expect(Tok::Colon)?;
        let mut arrows = Vec::new();
        while !self.at_keyword("relations") && *self.peek() != Tok::RBrace {
            let a = self.word("arrow name")?;
            self.expect(Tok::Colon)?;
            let s = self.word("source vertex")?;
            self.expect(Tok::Arrow)?;
            let t = self.word("target vertex")?;
            self.expect(Tok::Semi)?;
            arrows.push((a, s, t));
        }
        let mut relations = Vec::new();
        if self.at_keyword("relations") {
            self.next();
            self.next();
            while *self.peek() != Tok::RBrace {
                relations.push(self.reldecl()?);
            }
        }
        self.expect(Tok::RBrace)?;
        if *self.peek() != Tok::Eof {
            return Err(self.error(format!("unexpected {} after quiver", self.peek().describe())));
        }
        Ok((name, vertices, arrows, relations))
    }
}

/// Resolve names into a structural bound quiver (no semantic checks).
pub(crate) fn resolve(
    name: String,
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<Vec<(Rational, Vec<String>)>>,
) -> Result<BoundQuiver, ValidationError> {
    let vidx = |v: &str| {
        vertices
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| ValidationError::UnknownVertex(v.to_string()))
    };
    let arrows = arrows
        .into_iter()
        .map(|(a, s, t)| {
            Ok(Arrow {
                source: vidx(&s)?,
                target: vidx(&t)?,
                name: a,
            })
        })
        .collect::<Result<Vec<_>, ValidationError>>()?;
    let quiver = Quiver::new(vertices, arrows)?;
    let mut rels = Vec::with_capacity(relations.len());
    for (ri, terms) in relations.into_iter().enumerate() {
        let mut resolved = Vec::with_capacity(terms.len());
        for (c, names) in terms {
            let idx = names
                .iter()
                .map(|a| {
                    quiver
                        .arrow_index(a)
                        .ok_or_else(|| ValidationError::UnknownArrow(a.clone()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let path = quiver.path(idx).ok_or_else(|| ValidationError::NotComposable {
                relation: ri,
                path: names.join("*"),
            })?;
            resolved.push((c, path));
        }
        let rel = Relation::new(resolved);
        if rel.terms().is_empty() {
            return Err(ValidationError::EmptyRelation { relation: ri });
        }
        rels.push(rel);
    }
    Ok(BoundQuiver::new(name, quiver, rels))
}

/// Parse and validate a `.qv` description.
pub fn parse_quiver(text: &str) -> Result<BoundQuiver, DslError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let (name, vertices, arrows, relations) = p.quiver()?;
    let relations = relations
        .into_iter()
        .map(|r| r.into_iter().map(|t| (t.coeff, t.path)).collect())
        .collect();
    let bq = resolve(name, vertices, arrows, relations).map_err(DslError::Validation)?;
    check(&bq)?;
    Ok(bq)
}

pub(crate) fn relation_text(rel: &Relation, q: &Quiver) -> String {
    let mut out = String::new();
    for (k, (c, path)) in rel.terms().iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&path.display(q));
    }
    out
}

/// Render a bound quiver in the `.qv` format; `parse_quiver` reads it back
/// to an equal value.
pub fn emit_text(bq: &BoundQuiver) -> String {
    let q = &bq.quiver;
    let mut out = format!("quiver {} {{\n", bq.name);
    out.push_str(&format!("  vertices: {};\n", q.vertices().join(", ")));
    out.push_str("  arrows:\n");
    for a in q.arrows() {
        out.push_str(&format!(
            "    {}: {} -> {};\n",
            a.name,
            q.vertices()[a.source],
            q.vertices()[a.target]
        ));
    }
    if !bq.relations.is_empty() {
        out.push_str("  relations:\n");
        for r in &bq.relations {
            out.push_str(&format!("    {};\n", relation_text(r, q)));
        }
    }
    out.push_str("}\n");
    out
}
