//! The reflection representation of a Coxeter matrix over `Z[2cos(pi/L)]`,
//! used as an exact word-problem oracle.
//!
//! Generator `s` acts by `e_s -> -e_s` and `e_t -> e_t + 2cos(pi/m_st) e_s`
//! for `t != s`, with the degenerate convention `2cos(pi/inf) = 2`. The
//! representation is faithful, so two words are equal in the group iff their
//! matrices agree; equality is matrix comparison, not rewriting, at the cost
//! of one matrix multiplication per letter (fine for desk-scale words).

use thiserror::Error;

use crate::diagram::{CoxeterMatrix, Label};
use crate::exact::{CycMatrix, RealCyclotomic};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TitsError {
    #[error("construction self-check failed: {0}")]
    CheckFailed(String),
    #[error("word letter {0} out of range 1..={1}")]
    LetterRange(usize, usize),
    #[error("bad word: {0}")]
    BadWord(String),
}

/// Word in the Coxeter generators, stored as 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<usize>);

impl Word {
    /// Parse 1-based space-separated indices, e.g. `"1 2 1"`; empty is the
    /// identity.
    pub fn parse(text: &str, ngens: usize) -> Result<Word, TitsError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| TitsError::BadWord(format!("bad letter `{tok}`")))?;
            if v == 0 || v > ngens {
                return Err(TitsError::LetterRange(v, ngens));
            }
            letters.push(v - 1);
        }
        Ok(Word(letters))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn pow(&self, e: usize) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() * e);
        for _ in 0..e {
            letters.extend_from_slice(&self.0);
        }
        Word(letters)
    }
}

/// Faithful reflection representation of a Coxeter matrix; generator matrices
/// live over `Z[2cos(pi/L)]` with `L` the lcm of the finite labels.
#[derive(Debug)]
pub struct ReflectionRep {
    matrix: CoxeterMatrix,
    conductor: u64,
    gens: Vec<CycMatrix>,
}

pub fn build_rep(m: &CoxeterMatrix) -> Result<ReflectionRep, TitsError> {
    let n = m.n();
    let conductor = m.conductor();
    let mut gens = Vec::with_capacity(n);
    for s in 0..n {
        let mut mat = CycMatrix::identity(n, conductor);
        mat[(s, s)] = RealCyclotomic::from_int(conductor, -1);
        for t in 0..n {
            if t == s {
                continue;
            }
            let c = match m.label(s, t) {
                Label::Finite(2) => continue, // coefficient 0
                Label::Finite(label) => RealCyclotomic::two_cos_pi_over(conductor, label as u64),
                Label::Infinity => RealCyclotomic::from_int(conductor, 2),
            };
            mat[(s, t)] = c;
        }
        gens.push(mat);
    }
    let rep = ReflectionRep {
        matrix: m.clone(),
        conductor,
        gens,
    };
    // involutions
    for (s, g) in rep.gens.iter().enumerate() {
        if !g.mul(g).is_identity() {
            return Err(TitsError::CheckFailed(format!(
                "sigma_{} is not an involution",
                s + 1
            )));
        }
    }
    // products have order exactly m_st for finite labels
    for s in 0..n {
        for t in s + 1..n {
            if let Label::Finite(order) = m.label(s, t) {
                let prod = rep.gens[s].mul(&rep.gens[t]);
                if !prod.pow(order as usize).is_identity() {
                    return Err(TitsError::CheckFailed(format!(
                        "(sigma_{} sigma_{})^{} != 1",
                        s + 1,
                        t + 1,
                        order
                    )));
                }
                for p in 2..=order {
                    if order % p == 0 && prod.pow((order / p) as usize).is_identity() {
                        return Err(TitsError::CheckFailed(format!(
                            "sigma_{} sigma_{} has order dividing {}",
                            s + 1,
                            t + 1,
                            order / p
                        )));
                    }
                }
            }
        }
    }
    Ok(rep)
}

impl ReflectionRep {
    pub fn coxeter_matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn word_matrix(&self, w: &Word) -> Result<CycMatrix, TitsError> {
        let n = self.matrix.n();
        let mut acc = CycMatrix::identity(n, self.conductor);
        for &l in &w.0 {
            if l >= n {
                return Err(TitsError::LetterRange(l + 1, n));
            }
            acc = acc.mul(&self.gens[l]);
        }
        Ok(acc)
    }
}

/// Words are equal in the group iff their matrices agree (faithfulness).
pub fn words_equal(rep: &ReflectionRep, w1: &Word, w2: &Word) -> Result<bool, TitsError> {
    Ok(rep.word_matrix(w1)? == rep.word_matrix(w2)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderResult {
    Finite(usize),
    ExceedsBound,
}

/// Smallest `k <= bound` with `w^k = 1`, if any. No attempt is made to certify
/// infinite order past the bound.
pub fn element_order(
    rep: &ReflectionRep,
    w: &Word,
    bound: usize,
) -> Result<OrderResult, TitsError> {
    assert!(bound >= 1);
    let m = rep.word_matrix(w)?;
    let mut acc = m.clone();
    for k in 1..=bound {
        if acc.is_identity() {
            return Ok(OrderResult::Finite(k));
        }
        acc = acc.mul(&m);
    }
    Ok(OrderResult::ExceedsBound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn delta333() -> ReflectionRep {
        let m = parse_diagram("verts 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").unwrap();
        build_rep(&m).unwrap()
    }

    #[test]
    fn triangle_rep_is_integral() {
        // 2cos(pi/3) = 1, so the matrices live over Z
        let rep = delta333();
        assert_eq!(rep.conductor(), 3);
    }

    #[test]
    fn single_vertex_rep() {
        let m = parse_diagram("verts 1").unwrap();
        let rep = build_rep(&m).unwrap();
        let s1 = Word(vec![0]);
        assert_eq!(
            element_order(&rep, &s1, 10).unwrap(),
            OrderResult::Finite(2)
        );
    }

    #[test]
    fn label_four_needs_sqrt2() {
        let m = parse_diagram("verts 2\nedge 1 2 4").unwrap();
        let rep = build_rep(&m).unwrap();
        assert_eq!(rep.conductor(), 4);
        let st = Word(vec![0, 1]);
        assert_eq!(
            element_order(&rep, &st, 10).unwrap(),
            OrderResult::Finite(4)
        );
    }

    #[test]
    fn braid_relation_in_triangle() {
        // s1 s2 s1 = s2 s1 s2 follows from (s1 s2)^3 = 1
        let rep = delta333();
        let w1 = Word::parse("1 2 1", 3).unwrap();
        let w2 = Word::parse("2 1 2", 3).unwrap();
        assert!(words_equal(&rep, &w1, &w2).unwrap());
    }

    #[test]
    fn involutions_and_empty_word() {
        let rep = delta333();
        assert!(words_equal(&rep, &Word(vec![]), &Word(vec![0, 0])).unwrap());
    }

    #[test]
    fn g_commutes_with_s1() {
        // g = (s3 s1 s2)^2 spans the infinite part of Cent(s1)
        let rep = delta333();
        let g = Word::parse("3 1 2", 3).unwrap().pow(2);
        let s1 = Word(vec![0]);
        assert!(words_equal(&rep, &g.concat(&s1), &s1.concat(&g)).unwrap());
    }

    #[test]
    fn generator_product_orders() {
        let rep = delta333();
        assert_eq!(
            element_order(&rep, &Word(vec![0, 1]), 10).unwrap(),
            OrderResult::Finite(3)
        );
        for s in 0..3 {
            assert_eq!(
                element_order(&rep, &Word(vec![s]), 10).unwrap(),
                OrderResult::Finite(2)
            );
        }
    }

    #[test]
    fn translation_exceeds_bound() {
        // t1 = (s1 s2)(s2 s3)^2 generates part of the Z^2 translation lattice
        let rep = delta333();
        let t1 = Word::parse("1 2", 3)
            .unwrap()
            .concat(&Word::parse("2 3", 3).unwrap().pow(2));
        assert_eq!(
            element_order(&rep, &t1, 100).unwrap(),
            OrderResult::ExceedsBound
        );
    }

    #[test]
    fn defining_relators_trivial() {
        let m = parse_diagram("verts 3\nedge 1 2 4\nedge 2 3 5").unwrap();
        let rep = build_rep(&m).unwrap();
        for s in 0..3 {
            for t in 0..3 {
                if let Label::Finite(ord) = m.label(s, t) {
                    let w = Word(vec![s, t]).pow(ord as usize);
                    assert!(words_equal(&rep, &w, &Word(vec![])).unwrap());
                }
            }
        }
    }

    #[test]
    fn equality_is_a_congruence_on_samples() {
        let rep = delta333();
        let u1 = Word::parse("1 2 1", 3).unwrap();
        let u2 = Word::parse("2 1 2", 3).unwrap();
        let v1 = Word::parse("1 3 1", 3).unwrap();
        let v2 = Word::parse("3 1 3", 3).unwrap();
        assert!(words_equal(&rep, &v1, &v2).unwrap());
        assert!(words_equal(&rep, &u1.concat(&v1), &u2.concat(&v2)).unwrap());
    }

    #[test]
    fn infinite_label_rep_builds() {
        let m = parse_diagram("verts 2\nedge 1 2 inf").unwrap();
        let rep = build_rep(&m).unwrap();
        assert_eq!(
            element_order(&rep, &Word(vec![0, 1]), 50).unwrap(),
            OrderResult::ExceedsBound
        );
    }
}
