//! First-order formulas over the group language: syntax trees whose atoms
//! compare group words in variables and constants, emitters for the three
//! explicit formula families used in this toolkit, and brute-force Tarskian
//! evaluation over finite permutation-group models.
//!
//! Formulas are emitted in their source shape with no simplification, so
//! structural tests can count conjuncts; quantifier-prefix classification
//! prenexes a copy of the formula (renaming bound variables apart) and reads
//! off the block pattern.

mod emit;
mod eval;
mod parse;

pub use emit::{emit_chi, emit_finite_g, emit_gamma};
pub use eval::{evaluate, FiniteGroupModel, DEFAULT_BUDGET};
pub use parse::parse_formula;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("evaluation budget exceeded")]
    BudgetExceeded,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("subgroup list must be nonempty")]
    EmptySubgroupList,
    #[error("theta must have exactly one free variable, found {0}")]
    ThetaArity(usize),
    #[error("arity mismatch: {0} target variables vs {1} words")]
    ArityMismatch(usize, usize),
    #[error("word letter {0} out of range")]
    LetterRange(i32),
    #[error("formula parse error: {0}")]
    Parse(String),
}

/// One letter of a group word: a variable or constant, possibly inverted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lit {
    Var(String, bool),
    Const(String, bool),
}

impl Lit {
    fn inverted(&self) -> Lit {
        match self {
            Lit::Var(v, inv) => Lit::Var(v.clone(), !inv),
            Lit::Const(c, inv) => Lit::Const(c.clone(), !inv),
        }
    }
}

/// Group word; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Term(pub Vec<Lit>);

impl Term {
    pub fn one() -> Term {
        Term(Vec::new())
    }

    pub fn var(name: &str) -> Term {
        Term(vec![Lit::Var(name.to_string(), false)])
    }

    pub fn inverse(&self) -> Term {
        Term(self.0.iter().rev().map(Lit::inverted).collect())
    }

    pub fn concat(&self, other: &Term) -> Term {
        let mut lits = self.0.clone();
        lits.extend_from_slice(&other.0);
        Term(lits)
    }

    /// Free reduction: cancel adjacent mutually inverse letters.
    pub fn freely_reduced(&self) -> Term {
        let mut out: Vec<Lit> = Vec::new();
        for lit in &self.0 {
            if out.last() == Some(&lit.inverted()) {
                out.pop();
            } else {
                out.push(lit.clone());
            }
        }
        Term(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Forall(String, Box<Node>),
    Exists(String, Box<Node>),
    And(Vec<Node>),
    Or(Vec<Node>),
    Not(Box<Node>),
    Eq(Term, Term),
    Ne(Term, Term),
}

/// Smart constructors keeping one-element junctions out of the tree, so that
/// printing and reparsing is structurally the identity.
pub fn and_of(mut parts: Vec<Node>) -> Node {
    match parts.len() {
        0 => Node::Eq(Term::one(), Term::one()),
        1 => parts.pop().unwrap(),
        _ => Node::And(parts),
    }
}

pub fn or_of(mut parts: Vec<Node>) -> Node {
    match parts.len() {
        0 => Node::Ne(Term::one(), Term::one()),
        1 => parts.pop().unwrap(),
        _ => Node::Or(parts),
    }
}

/// Quantifier-prefix classes; read off the prenex form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixClass {
    QuantifierFree,
    Universal,
    Existential,
    AE,
    EA,
    EAE,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    pub node: Node,
}

impl Formula {
    pub fn new(node: Node) -> Formula {
        Formula { node }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        collect_free(&self.node, &mut bound, &mut out);
        out
    }

    /// Quantifier blocks of the prenex normal form (bound variables renamed
    /// apart, quantifiers pulled out of the boolean skeleton).
    pub fn prefix_class(&self) -> PrefixClass {
        let mut fresh = 0usize;
        let renamed = rename_apart(&self.node, &std::collections::HashMap::new(), &mut fresh);
        let prefix = pull_prefix(&renamed);
        let mut blocks: Vec<QKind> = Vec::new();
        for k in prefix {
            if blocks.last() != Some(&k) {
                blocks.push(k);
            }
        }
        match blocks.as_slice() {
            [] => PrefixClass::QuantifierFree,
            [QKind::All] => PrefixClass::Universal,
            [QKind::Ex] => PrefixClass::Existential,
            [QKind::All, QKind::Ex] => PrefixClass::AE,
            [QKind::Ex, QKind::All] => PrefixClass::EA,
            [QKind::Ex, QKind::All, QKind::Ex] => PrefixClass::EAE,
            _ => PrefixClass::Other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum QKind {
    All,
    Ex,
}

/// Give every bound variable a fresh name, so quantifiers can be pulled out
/// of conjunctions and disjunctions without capture.
fn rename_apart(
    node: &Node,
    map: &std::collections::HashMap<String, String>,
    fresh: &mut usize,
) -> Node {
    let rename_term = |t: &Term, map: &std::collections::HashMap<String, String>| -> Term {
        Term(
            t.0.iter()
                .map(|lit| match lit {
                    Lit::Var(v, inv) => {
                        Lit::Var(map.get(v).cloned().unwrap_or_else(|| v.clone()), *inv)
                    }
                    c => c.clone(),
                })
                .collect(),
        )
    };
    match node {
        Node::Forall(v, f) | Node::Exists(v, f) => {
            *fresh += 1;
            let nv = format!("q{fresh}");
            let mut inner = map.clone();
            inner.insert(v.clone(), nv.clone());
            let body = Box::new(rename_apart(f, &inner, fresh));
            if matches!(node, Node::Forall(..)) {
                Node::Forall(nv, body)
            } else {
                Node::Exists(nv, body)
            }
        }
        Node::And(fs) => Node::And(fs.iter().map(|f| rename_apart(f, map, fresh)).collect()),
        Node::Or(fs) => Node::Or(fs.iter().map(|f| rename_apart(f, map, fresh)).collect()),
        Node::Not(f) => Node::Not(Box::new(rename_apart(f, map, fresh))),
        Node::Eq(a, b) => Node::Eq(rename_term(a, map), rename_term(b, map)),
        Node::Ne(a, b) => Node::Ne(rename_term(a, map), rename_term(b, map)),
    }
}

/// Quantifier sequence of the prenex form: after renaming apart, quantifiers
/// pull out of And/Or in left-to-right order and flip through Not.
fn pull_prefix(node: &Node) -> Vec<QKind> {
    fn walk(node: &Node, polarity: bool, out: &mut Vec<QKind>) {
        match node {
            Node::Forall(_, f) => {
                out.push(if polarity { QKind::All } else { QKind::Ex });
                walk(f, polarity, out);
            }
            Node::Exists(_, f) => {
                out.push(if polarity { QKind::Ex } else { QKind::All });
                walk(f, polarity, out);
            }
            Node::And(fs) | Node::Or(fs) => {
                for f in fs {
                    walk(f, polarity, out);
                }
            }
            Node::Not(f) => walk(f, !polarity, out),
            Node::Eq(..) | Node::Ne(..) => {}
        }
    }
    let mut out = Vec::new();
    walk(node, true, &mut out);
    out
}

fn collect_free(node: &Node, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
    match node {
        Node::Forall(v, f) | Node::Exists(v, f) => {
            bound.push(v.clone());
            collect_free(f, bound, out);
            bound.pop();
        }
        Node::And(fs) | Node::Or(fs) => {
            for f in fs {
                collect_free(f, bound, out);
            }
        }
        Node::Not(f) => collect_free(f, bound, out),
        Node::Eq(a, b) | Node::Ne(a, b) => {
            for t in [a, b] {
                for lit in &t.0 {
                    if let Lit::Var(v, _) = lit {
                        if !bound.contains(v) {
                            out.insert(v.clone());
                        }
                    }
                }
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render(&self.node))
    }
}
