//! Formula text format.
//!
//! ```text
//! formula := 'forall' IDENT formula | 'exists' IDENT formula | disj
//! disj    := conj ('|' conj)*
//! conj    := unary ('&' unary)*
//! unary   := '~' unary | '(' formula ')' | atom
//! atom    := term ('=' | '!=') term
//! term    := '1' | lit+
//! lit     := '@'? IDENT ('^-1')?
//! ```
//!
//! Identifiers are `[a-z A-Z] [a-z A-Z 0-9 _]*`; `@name` is a model constant,
//! a bare name is a variable; words are juxtaposed letters with `^-1` for
//! inverses. Quantifiers reach as far right as possible. Rendering always
//! parenthesizes junctions, so `parse(render(f)) == f` structurally.

use super::{Formula, Lit, LogicError, Node, Term};

pub fn render(node: &Node) -> String {
    match node {
        Node::Forall(v, f) => format!("forall {v} {}", render(f)),
        Node::Exists(v, f) => format!("exists {v} {}", render(f)),
        Node::And(fs) => {
            let parts: Vec<String> = fs.iter().map(render_guarded).collect();
            format!("({})", parts.join(" & "))
        }
        Node::Or(fs) => {
            let parts: Vec<String> = fs.iter().map(render_guarded).collect();
            format!("({})", parts.join(" | "))
        }
        Node::Not(f) => format!("~{}", render_guarded(f)),
        Node::Eq(a, b) => format!("{} = {}", render_term(a), render_term(b)),
        Node::Ne(a, b) => format!("{} != {}", render_term(a), render_term(b)),
    }
}

/// Quantifier scope runs as far right as possible, so quantified formulas are
/// parenthesized whenever something could follow them.
fn render_guarded(node: &Node) -> String {
    match node {
        Node::Forall(..) | Node::Exists(..) => format!("({})", render(node)),
        _ => render(node),
    }
}

fn render_term(t: &Term) -> String {
    if t.0.is_empty() {
        return "1".to_string();
    }
    let parts: Vec<String> =
        t.0.iter()
            .map(|lit| match lit {
                Lit::Var(v, false) => v.clone(),
                Lit::Var(v, true) => format!("{v}^-1"),
                Lit::Const(c, false) => format!("@{c}"),
                Lit::Const(c, true) => format!("@{c}^-1"),
            })
            .collect();
    parts.join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Forall,
    Exists,
    And,
    Or,
    Not,
    LParen,
    RParen,
    Eq,
    Ne,
    One,
    Inv,
    At,
    Ident(String),
}

fn lex(text: &str) -> Result<Vec<Tok>, LogicError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '&' => {
                out.push(Tok::And);
                i += 1;
            }
            '|' => {
                out.push(Tok::Or);
                i += 1;
            }
            '~' => {
                out.push(Tok::Not);
                i += 1;
            }
            '@' => {
                out.push(Tok::At);
                i += 1;
            }
            '=' => {
                out.push(Tok::Eq);
                i += 1;
            }
            '!' => {
                if chars.get(i + 1) == Some(&'=') {
                    out.push(Tok::Ne);
                    i += 2;
                } else {
                    return Err(LogicError::Parse("stray `!`".to_string()));
                }
            }
            '1' => {
                out.push(Tok::One);
                i += 1;
            }
            '^' => {
                if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'1') {
                    out.push(Tok::Inv);
                    i += 3;
                } else {
                    return Err(LogicError::Parse("only `^-1` exponents are allowed".into()));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                match word.as_str() {
                    "forall" => out.push(Tok::Forall),
                    "exists" => out.push(Tok::Exists),
                    _ => out.push(Tok::Ident(word)),
                }
            }
            other => return Err(LogicError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), LogicError> {
        match self.bump() {
            Some(found) if found == t => Ok(()),
            found => Err(LogicError::Parse(format!(
                "expected {t:?}, found {found:?}"
            ))),
        }
    }

    fn formula(&mut self) -> Result<Node, LogicError> {
        match self.peek() {
            Some(Tok::Forall) | Some(Tok::Exists) => {
                let forall = self.bump() == Some(Tok::Forall);
                let var = match self.bump() {
                    Some(Tok::Ident(v)) => v,
                    other => {
                        return Err(LogicError::Parse(format!(
                            "expected variable after quantifier, found {other:?}"
                        )))
                    }
                };
                let body = Box::new(self.formula()?);
                Ok(if forall {
                    Node::Forall(var, body)
                } else {
                    Node::Exists(var, body)
                })
            }
            _ => self.disj(),
        }
    }

    fn disj(&mut self) -> Result<Node, LogicError> {
        let first = self.conj()?;
        let mut parts = vec![first];
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            parts.push(self.conj()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Node::Or(parts)
        })
    }

    fn conj(&mut self) -> Result<Node, LogicError> {
        let first = self.unary()?;
        let mut parts = vec![first];
        while self.peek() == Some(&Tok::And) {
            self.bump();
            parts.push(self.unary()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Node::And(parts)
        })
    }

    fn unary(&mut self) -> Result<Node, LogicError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.bump();
                Ok(Node::Not(Box::new(self.unary()?)))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            // quantifier scope extends as far right as possible
            Some(Tok::Forall) | Some(Tok::Exists) => self.formula(),
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Node, LogicError> {
        let lhs = self.term()?;
        match self.bump() {
            Some(Tok::Eq) => Ok(Node::Eq(lhs, self.term()?)),
            Some(Tok::Ne) => Ok(Node::Ne(lhs, self.term()?)),
            other => Err(LogicError::Parse(format!(
                "expected `=` or `!=`, found {other:?}"
            ))),
        }
    }

    fn term(&mut self) -> Result<Term, LogicError> {
        if self.peek() == Some(&Tok::One) {
            self.bump();
            return Ok(Term::one());
        }
        let mut lits = Vec::new();
        loop {
            let constant = if self.peek() == Some(&Tok::At) {
                self.bump();
                true
            } else {
                false
            };
            match self.peek() {
                Some(Tok::Ident(_)) => {
                    let Some(Tok::Ident(name)) = self.bump() else {
                        unreachable!()
                    };
                    let inv = if self.peek() == Some(&Tok::Inv) {
                        self.bump();
                        true
                    } else {
                        false
                    };
                    lits.push(if constant {
                        Lit::Const(name, inv)
                    } else {
                        Lit::Var(name, inv)
                    });
                }
                other => {
                    if constant {
                        return Err(LogicError::Parse(format!(
                            "expected constant name after `@`, found {other:?}"
                        )));
                    }
                    break;
                }
            }
        }
        if lits.is_empty() {
            return Err(LogicError::Parse("expected a term".to_string()));
        }
        Ok(Term(lits))
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let node = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(LogicError::Parse(format!(
            "trailing tokens from position {}",
            p.pos
        )));
    }
    Ok(Formula::new(node))
}
