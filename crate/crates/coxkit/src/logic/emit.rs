//! Emitters for the three explicit formula families. Formulas come out in
//! source shape: exponents expanded into repeated letters, no simplification,
//! conjunct and disjunct counts exactly as displayed.

use super::{and_of, or_of, Formula, Lit, LogicError, Node, Term};
use crate::permgrp::Presentation;

fn x_name(i: usize) -> String {
    format!("x{}", i + 1)
}

/// Signed generator word -> term in the variables `x1..xn`.
fn word_term(word: &[i32], ngens: usize) -> Result<Term, LogicError> {
    let mut lits = Vec::with_capacity(word.len());
    for &l in word {
        if l == 0 || l.unsigned_abs() as usize > ngens {
            return Err(LogicError::LetterRange(l));
        }
        lits.push(Lit::Var(x_name(l.unsigned_abs() as usize - 1), l < 0));
    }
    Ok(Term(lits))
}

/// `chi(x): forall y [x, y^m] = 1`, the universal formula defining the
/// translation subgroup of a split crystallographic group whose point group
/// has order `m`. The commutator is `x^-1 (y^m)^-1 x y^m`, expanded.
pub fn emit_chi(m: usize) -> Formula {
    assert!(m >= 1);
    let mut lits = vec![Lit::Var("x".into(), true)];
    for _ in 0..m {
        lits.push(Lit::Var("y".into(), true));
    }
    lits.push(Lit::Var("x".into(), false));
    for _ in 0..m {
        lits.push(Lit::Var("y".into(), false));
    }
    Formula::new(Node::Forall(
        "y".into(),
        Box::new(Node::Eq(Term(lits), Term::one())),
    ))
}

/// The universal formula `Finite_G(x1..xn)` attached to a finite presentation
/// and a list of finite-subgroup representatives (each given by words for its
/// elements): it holds at a tuple iff sending the generators there extends to
/// an endomorphism that is injective on finite subgroups and maps
/// non-conjugate finite subgroups to non-conjugate ones.
///
/// Shape: the relator block, one `w != 1` conjunct per nontrivial subgroup
/// element word (identity words drop out), and a `forall g` block with one
/// conjunct per ordered pair of distinct representatives of equal order.
pub fn emit_finite_g(
    p: &Presentation,
    subgroup_words: &[Vec<Vec<i32>>],
) -> Result<Formula, LogicError> {
    if subgroup_words.is_empty() {
        return Err(LogicError::EmptySubgroupList);
    }
    let n = p.ngens;
    let mut conjuncts: Vec<Node> = Vec::new();
    for r in &p.relators {
        conjuncts.push(Node::Eq(word_term(r, n)?, Term::one()));
    }
    for subgroup in subgroup_words {
        for w in subgroup {
            let t = word_term(w, n)?;
            if !t.freely_reduced().0.is_empty() {
                conjuncts.push(Node::Ne(t, Term::one()));
            }
        }
    }
    let g = Term::var("g");
    let mut pair_conjuncts: Vec<Node> = Vec::new();
    for (i, fi) in subgroup_words.iter().enumerate() {
        for (j, fj) in subgroup_words.iter().enumerate() {
            if i == j || fi.len() != fj.len() {
                continue;
            }
            // exists an element of F_i whose g-conjugate avoids all of F_j
            let mut avoid_all: Vec<Node> = Vec::new();
            for wi in fi {
                let conj = g.concat(&word_term(wi, n)?).concat(&g.inverse());
                let mut inner: Vec<Node> = Vec::new();
                for wj in fj {
                    inner.push(Node::Ne(conj.clone(), word_term(wj, n)?));
                }
                avoid_all.push(and_of(inner));
            }
            pair_conjuncts.push(or_of(avoid_all));
        }
    }
    if !pair_conjuncts.is_empty() {
        conjuncts.push(Node::Forall("g".into(), Box::new(and_of(pair_conjuncts))));
    }
    Ok(Formula::new(and_of(conjuncts)))
}

/// The formula `gamma(z1..zm)` asserting the existence of an endomorphism
/// carrying the generator tuple to a witness for `z = w(x)`, preserving the
/// `theta`-defined subgroup, and keeping the listed finite subgroups pairwise
/// non-conjugate:
///
/// `exists x forall g ( z = w(x) & relators & theta(h_i(x)) & non-conjugacy )`
///
/// When `theta` is universal the result is an EA-formula; the prefix tag is
/// computed on the prenex normal form (theta's quantifiers pulled out of the
/// conjunction after renaming apart).
pub fn emit_gamma(
    p: &Presentation,
    target_words: &[Vec<i32>],
    z_arity: usize,
    theta: &Formula,
    subgroup_words: &[Vec<Vec<i32>>],
    hom_gen_words: &[Vec<i32>],
) -> Result<Formula, LogicError> {
    if z_arity != target_words.len() {
        return Err(LogicError::ArityMismatch(z_arity, target_words.len()));
    }
    let theta_free = theta.free_vars();
    if theta_free.len() != 1 {
        return Err(LogicError::ThetaArity(theta_free.len()));
    }
    let theta_var = theta_free.into_iter().next().unwrap();
    let n = p.ngens;

    let mut conjuncts: Vec<Node> = Vec::new();
    for (t, w) in target_words.iter().enumerate() {
        conjuncts.push(Node::Eq(
            Term::var(&format!("z{}", t + 1)),
            word_term(w, n)?,
        ));
    }
    for r in &p.relators {
        conjuncts.push(Node::Eq(word_term(r, n)?, Term::one()));
    }
    let mut fresh = 0usize;
    for h in hom_gen_words {
        let inst = substitute(&theta.node, &theta_var, &word_term(h, n)?, &mut fresh);
        conjuncts.push(inst);
    }
    let g = Term::var("g");
    for (i, fi) in subgroup_words.iter().enumerate() {
        for (j, fj) in subgroup_words.iter().enumerate() {
            if i == j || fi.len() != fj.len() {
                continue;
            }
            let mut avoid_all: Vec<Node> = Vec::new();
            for wi in fi {
                let conj = g.concat(&word_term(wi, n)?).concat(&g.inverse());
                let mut inner: Vec<Node> = Vec::new();
                for wj in fj {
                    inner.push(Node::Ne(conj.clone(), word_term(wj, n)?));
                }
                avoid_all.push(and_of(inner));
            }
            conjuncts.push(or_of(avoid_all));
        }
    }

    let mut body = Node::Forall("g".into(), Box::new(and_of(conjuncts)));
    for i in (0..n).rev() {
        body = Node::Exists(x_name(i), Box::new(body));
    }
    Ok(Formula::new(body))
}

/// Substitute `term` for the free variable `var` in `node`, renaming the
/// bound variables of `node` apart so nothing in `term` is captured.
fn substitute(node: &Node, var: &str, term: &Term, fresh: &mut usize) -> Node {
    fn subst_term(t: &Term, var: &str, replacement: &Term) -> Term {
        let mut out = Vec::new();
        for lit in &t.0 {
            match lit {
                Lit::Var(v, inv) if v == var => {
                    let piece = if *inv {
                        replacement.inverse()
                    } else {
                        replacement.clone()
                    };
                    out.extend(piece.0);
                }
                other => out.push(other.clone()),
            }
        }
        Term(out)
    }
    match node {
        Node::Forall(v, f) | Node::Exists(v, f) => {
            *fresh += 1;
            let nv = format!("t{fresh}");
            let renamed = rename_var(f, v, &nv);
            let body = Box::new(substitute(&renamed, var, term, fresh));
            if matches!(node, Node::Forall(..)) {
                Node::Forall(nv, body)
            } else {
                Node::Exists(nv, body)
            }
        }
        Node::And(fs) => Node::And(fs.iter().map(|f| substitute(f, var, term, fresh)).collect()),
        Node::Or(fs) => Node::Or(fs.iter().map(|f| substitute(f, var, term, fresh)).collect()),
        Node::Not(f) => Node::Not(Box::new(substitute(f, var, term, fresh))),
        Node::Eq(a, b) => Node::Eq(subst_term(a, var, term), subst_term(b, var, term)),
        Node::Ne(a, b) => Node::Ne(subst_term(a, var, term), subst_term(b, var, term)),
    }
}

fn rename_var(node: &Node, from: &str, to: &str) -> Node {
    let ren_term = |t: &Term| -> Term {
        Term(
            t.0.iter()
                .map(|lit| match lit {
                    Lit::Var(v, inv) if v == from => Lit::Var(to.to_string(), *inv),
                    other => other.clone(),
                })
                .collect(),
        )
    };
    match node {
        Node::Forall(v, f) | Node::Exists(v, f) => {
            if v == from {
                // inner binder shadows; leave untouched
                node.clone()
            } else {
                let body = Box::new(rename_var(f, from, to));
                if matches!(node, Node::Forall(..)) {
                    Node::Forall(v.clone(), body)
                } else {
                    Node::Exists(v.clone(), body)
                }
            }
        }
        Node::And(fs) => Node::And(fs.iter().map(|f| rename_var(f, from, to)).collect()),
        Node::Or(fs) => Node::Or(fs.iter().map(|f| rename_var(f, from, to)).collect()),
        Node::Not(f) => Node::Not(Box::new(rename_var(f, from, to))),
        Node::Eq(a, b) => Node::Eq(ren_term(a), ren_term(b)),
        Node::Ne(a, b) => Node::Ne(ren_term(a), ren_term(b)),
    }
}
