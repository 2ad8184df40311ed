//! Finite-quotient fingerprints: homomorphism and epimorphism counts from a
//! finitely presented group into every catalogue group up to an order bound.
//!
//! Two groups with the same set of finite quotients (isomorphic profinite
//! completions) have equal fingerprints at every bound, so fingerprint
//! comparison is the implementable surrogate for profinite comparison. The
//! converse is false in principle, and the order bound is capped at 31 (the
//! 51 groups of order 32 are deliberately out), so the tool only ever
//! reports equality up to the bound, never "same profinite completion".

mod catalog;

pub use catalog::{CatalogEntry, SmallGroupCatalog, CATALOG_BOUND, CENSUS};

use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::crysto::CrystGroup;
use crate::permgrp::{hom_count, PermError, Presentation};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ProfiniteError {
    #[error("fingerprint bounds differ: {0} vs {1}")]
    BoundMismatch(usize, usize),
    #[error("bound {0} exceeds the catalogue bound {CATALOG_BOUND}")]
    BoundTooLarge(usize),
    #[error("catalogue error: {0}")]
    Catalog(String),
    #[error("fingerprint parse error: {0}")]
    Parse(String),
    #[error("translation vector entry out of i64 range")]
    VectorTooLarge,
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FingerprintEntry {
    pub order: usize,
    pub id: String,
    pub homs: u64,
    pub epis: u64,
}

/// Hom/epi counts into every catalogue group of order <= bound, ordered by
/// (order, catalogue position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub bound: usize,
    pub entries: Vec<FingerprintEntry>,
}

pub fn fingerprint(p: &Presentation, bound: usize) -> Result<Fingerprint, ProfiniteError> {
    if bound > CATALOG_BOUND {
        return Err(ProfiniteError::BoundTooLarge(bound));
    }
    let cat = SmallGroupCatalog::get();
    let mut entries = Vec::new();
    for entry in cat.up_to(bound) {
        let (homs, epis) = hom_count(p, &entry.group)?;
        entries.push(FingerprintEntry {
            order: entry.order,
            id: entry.id.clone(),
            homs,
            epis,
        });
    }
    Ok(Fingerprint { bound, entries })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompareResult {
    Equal,
    FirstDifference {
        id: String,
        left: (u64, u64),
        right: (u64, u64),
    },
}

/// Entrywise comparison; the first differing entry (in catalogue order) is
/// reported.
pub fn compare(f1: &Fingerprint, f2: &Fingerprint) -> Result<CompareResult, ProfiniteError> {
    if f1.bound != f2.bound {
        return Err(ProfiniteError::BoundMismatch(f1.bound, f2.bound));
    }
    for (a, b) in f1.entries.iter().zip(&f2.entries) {
        debug_assert_eq!(a.id, b.id);
        if (a.homs, a.epis) != (b.homs, b.epis) {
            return Ok(CompareResult::FirstDifference {
                id: a.id.clone(),
                left: (a.homs, a.epis),
                right: (b.homs, b.epis),
            });
        }
    }
    Ok(CompareResult::Equal)
}

impl Fingerprint {
    pub fn entry(&self, id: &str) -> Option<&FingerprintEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Line format: a `fingerprint bound B` header, then one
    /// `order id homs epis` record per catalogue group.
    pub fn parse(text: &str) -> Result<Fingerprint, ProfiniteError> {
        let mut bound: Option<usize> = None;
        let mut entries = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["fingerprint", "bound", b] => {
                    bound = Some(
                        b.parse()
                            .map_err(|_| ProfiniteError::Parse(format!("bad bound `{b}`")))?,
                    );
                }
                [order, id, homs, epis] => {
                    let parse_u64 = |s: &str| {
                        s.parse::<u64>()
                            .map_err(|_| ProfiniteError::Parse(format!("bad number `{s}`")))
                    };
                    entries.push(FingerprintEntry {
                        order: parse_u64(order)? as usize,
                        id: id.to_string(),
                        homs: parse_u64(homs)?,
                        epis: parse_u64(epis)?,
                    });
                }
                _ => return Err(ProfiniteError::Parse(format!("bad line `{line}`"))),
            }
        }
        Ok(Fingerprint {
            bound: bound.ok_or_else(|| ProfiniteError::Parse("missing header".into()))?,
            entries,
        })
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fingerprint bound {}", self.bound)?;
        for e in &self.entries {
            writeln!(f, "{} {} {} {}", e.order, e.id, e.homs, e.epis)?;
        }
        Ok(())
    }
}

/// Finite presentation of a split crystallographic group `Z^n x| G0`.
///
/// Generators: the lattice basis `a_1..a_n`, then one generator per point
/// group generator. Relators: lattice commutators, the conjugation action
/// `p a_i p^-1 = (rho(p) e_i as an a-word)`, and the point group's
/// Cayley-graph relators lifted with their translation corrections.
pub fn presentation_of_cryst(g: &CrystGroup) -> Result<Presentation, ProfiniteError> {
    use crate::permgrp::cayley_presentation;

    let n = g.rank();
    let point_gens = g.point_group().gens().len();
    let a = |i: usize| (i + 1) as i32; // lattice generator letters
    let p = |k: usize| (n + k + 1) as i32; // point generator letters

    let mut relators: Vec<Vec<i32>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            relators.push(vec![a(i), a(j), -a(i), -a(j)]);
        }
    }
    // a-word for an integer vector (the lattice generators commute)
    let a_word = |v: &[num_bigint::BigInt]| -> Result<Vec<i32>, ProfiniteError> {
        let mut w = Vec::new();
        for (i, x) in v.iter().enumerate() {
            let count = i64::try_from(x.abs()).map_err(|_| ProfiniteError::VectorTooLarge)?;
            let letter = if x.is_negative() { -a(i) } else { a(i) };
            for _ in 0..count {
                w.push(letter);
            }
        }
        Ok(w)
    };
    for (k, pg) in g.point_group().gens().iter().enumerate() {
        let rho = g.rho(pg);
        for i in 0..n {
            // p a_i p^-1 * (rho(p) e_i)^-1
            let mut rel = vec![p(k), a(i), -p(k)];
            let col: Vec<num_bigint::BigInt> = (0..n).map(|r| rho[(r, i)].clone()).collect();
            let mut w = a_word(&col)?;
            w.reverse();
            for l in &mut w {
                *l = -*l;
            }
            rel.extend(w);
            relators.push(rel);
        }
    }
    // lifted point-group relators: r(p) is a pure translation (v_r, 1); kill
    // it with the inverse a-word
    let point_pres = cayley_presentation(g.point_group())?;
    for r in &point_pres.relators {
        let mut elem = g.identity();
        for &l in r {
            let gen = &g.point_group().gens()[(l.unsigned_abs() - 1) as usize];
            let ge = crate::crysto::CrystElement {
                v: vec![num_bigint::BigInt::from(0); n],
                g: gen.clone(),
            };
            let factor = if l > 0 { ge } else { g.inverse(&ge) };
            elem = g.multiply(&elem, &factor);
        }
        debug_assert!(elem.g.is_identity(), "point relator has nontrivial image");
        let mut rel: Vec<i32> = r
            .iter()
            .map(|&l| {
                if l > 0 {
                    p(l as usize - 1)
                } else {
                    -p(l.unsigned_abs() as usize - 1)
                }
            })
            .collect();
        let mut w = a_word(&elem.v)?;
        w.reverse();
        for l in &mut w {
            *l = -*l;
        }
        rel.extend(w);
        relators.push(rel);
    }
    Presentation::new(n + point_gens, relators).map_err(ProfiniteError::Perm)
}
