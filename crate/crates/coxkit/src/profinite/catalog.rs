//! The small-groups catalogue: every isomorphism class of order <= 31,
//! built from the checked-in construction table.
//!
//! Correctness does not rest on the construction names: the census test pins
//! the number of entries of each order to the classical count, and the
//! pairwise non-isomorphism test (backtracking, exact) rules out duplicates.
//! Since there are exactly as many classes as census slots, those two checks
//! certify completeness.

use std::sync::OnceLock;

use crate::permgrp::{Perm, PermGroup};

use super::ProfiniteError;

pub const CATALOG_BOUND: usize = 31;

/// Classical census: number of isomorphism classes per order 1..=31.
pub const CENSUS: [usize; 31] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1,
];

#[derive(Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub order: usize,
    pub name: String,
    pub group: PermGroup,
}

#[derive(Debug)]
pub struct SmallGroupCatalog {
    pub entries: Vec<CatalogEntry>,
}

impl SmallGroupCatalog {
    /// The shared catalogue instance, parsed from the checked-in table.
    pub fn get() -> &'static SmallGroupCatalog {
        static CATALOG: OnceLock<SmallGroupCatalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            parse_catalog(include_str!("catalog.txt")).expect("checked-in catalogue parses")
        })
    }

    pub fn by_id(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn up_to(&self, bound: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order <= bound)
    }
}

fn parse_catalog(text: &str) -> Result<SmallGroupCatalog, ProfiniteError> {
    let mut entries = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split('|').collect();
        if parts.len() != 4 {
            return Err(ProfiniteError::Catalog(format!("bad line `{line}`")));
        }
        let order: usize = parts[1]
            .parse()
            .map_err(|_| ProfiniteError::Catalog(format!("bad order in `{line}`")))?;
        let group = build(parts[3])?;
        let got = group.order();
        if got != order {
            return Err(ProfiniteError::Catalog(format!(
                "{}: construction `{}` has order {got}, expected {order}",
                parts[0], parts[3]
            )));
        }
        entries.push(CatalogEntry {
            id: parts[0].to_string(),
            order,
            name: parts[2].to_string(),
            group,
        });
    }
    // census counts are asserted on every load; pairwise non-isomorphism is
    // the (slower) test-suite half of the certification
    for order in 1..=CATALOG_BOUND {
        let count = entries.iter().filter(|e| e.order == order).count();
        if count != CENSUS[order - 1] {
            return Err(ProfiniteError::Catalog(format!(
                "census mismatch at order {order}: {count} entries, expected {}",
                CENSUS[order - 1]
            )));
        }
    }
    Ok(SmallGroupCatalog { entries })
}

/// Build a construction expression: atoms joined by `x`.
fn build(expr: &str) -> Result<PermGroup, ProfiniteError> {
    let mut acc: Option<PermGroup> = None;
    for atom in split_atoms(expr) {
        let g = build_atom(atom.trim())?;
        acc = Some(match acc {
            None => g,
            Some(prev) => prev.direct_product(&g),
        });
    }
    let g = acc.ok_or_else(|| ProfiniteError::Catalog("empty construction".into()))?;
    g.elements()
        .map_err(|e| ProfiniteError::Catalog(format!("closure failed: {e}")))?;
    Ok(g)
}

/// Split on `x` separators, but not inside `mc(...)` parentheses.
fn split_atoms(expr: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    let bytes = expr.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'x' if depth == 0 => {
                out.push(&expr[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&expr[start..]);
    out
}

fn build_atom(atom: &str) -> Result<PermGroup, ProfiniteError> {
    let bad = || ProfiniteError::Catalog(format!("unknown construction `{atom}`"));
    if let Some(n) = atom.strip_prefix('c').and_then(|s| s.parse::<usize>().ok()) {
        return Ok(cyclic(n));
    }
    if let Some(n) = atom.strip_prefix('d').and_then(|s| s.parse::<usize>().ok()) {
        if n % 2 != 0 || n < 6 {
            return Err(bad());
        }
        return Ok(dihedral(n / 2));
    }
    if let Some(n) = atom.strip_prefix('q').and_then(|s| s.parse::<usize>().ok()) {
        if n % 4 != 0 || n < 8 {
            return Err(bad());
        }
        let m = n / 2;
        return Ok(metacyclic(m, 2, m - 1, m / 2));
    }
    if let Some(args) = atom.strip_prefix("mc(").and_then(|s| s.strip_suffix(')')) {
        let nums: Result<Vec<usize>, _> = args.split(',').map(|t| t.trim().parse()).collect();
        let nums = nums.map_err(|_| bad())?;
        if nums.len() != 4 {
            return Err(bad());
        }
        return Ok(metacyclic(nums[0], nums[1], nums[2], nums[3]));
    }
    match atom {
        "s3" => Ok(PermGroup::symmetric(3)),
        "s4" => Ok(PermGroup::symmetric(4)),
        "a4" => Ok(PermGroup::new(
            4,
            vec![
                Perm::parse(4, "(1 2 3)").unwrap(),
                Perm::parse(4, "(1 2)(3 4)").unwrap(),
            ],
        )
        .unwrap()),
        "sl23" => Ok(sl2_f3()),
        "heis3" => Ok(heisenberg3()),
        "k4c4" => Ok(PermGroup::new(
            8,
            vec![
                Perm::parse(8, "(1 2)").unwrap(),
                Perm::parse(8, "(1 3)(2 4)(5 6 7 8)").unwrap(),
            ],
        )
        .unwrap()),
        "pauli16" => Ok(pauli16()),
        // Z3 x| D4 with the rotation inverting and the reflection fixing
        "z3d4" => Ok(PermGroup::new(
            7,
            vec![
                Perm::parse(7, "(1 2 3)").unwrap(),
                Perm::parse(7, "(2 3)(4 5 6 7)").unwrap(),
                Perm::parse(7, "(5 7)").unwrap(),
            ],
        )
        .unwrap()),
        "gd9" => Ok(PermGroup::new(
            6,
            vec![
                Perm::parse(6, "(1 2 3)").unwrap(),
                Perm::parse(6, "(4 5 6)").unwrap(),
                Perm::parse(6, "(2 3)(5 6)").unwrap(),
            ],
        )
        .unwrap()),
        _ => Err(bad()),
    }
}

fn cyclic(n: usize) -> PermGroup {
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let cyc: Vec<usize> = (1..=n).collect();
    PermGroup::new(n, vec![Perm::from_cycles(n, &[cyc]).unwrap()]).unwrap()
}

/// Dihedral group of order 2m on m points.
fn dihedral(m: usize) -> PermGroup {
    let rot = Perm::from_cycles(m, &[(1..=m).collect()]).unwrap();
    let refl = Perm::from_images((0..m as u8).map(|i| (m as u8 - 1) - i).collect()).unwrap();
    PermGroup::new(m, vec![rot, refl]).unwrap()
}

/// `< a, b | a^m, b^s = a^t, b a b^-1 = a^k >` acting on itself from the
/// left, elements indexed as `a^i b^j -> i + m j`. Requires `k^s = 1 (mod m)`
/// and `t (k - 1) = 0 (mod m)` for the collected form to be consistent.
fn metacyclic(m: usize, s: usize, k: usize, t: usize) -> PermGroup {
    assert!(m >= 1 && s >= 1);
    assert_eq!(k.pow(s as u32) % m, 1 % m, "k^s must be 1 mod m");
    assert_eq!((t * (k + m - 1)) % m, 0, "t(k-1) must be 0 mod m");
    let degree = m * s;
    let idx = |i: usize, j: usize| i + m * j;
    let mut a_img = vec![0u8; degree];
    let mut b_img = vec![0u8; degree];
    for i in 0..m {
        for j in 0..s {
            // left multiplication: a * a^i b^j = a^(i+1) b^j
            a_img[idx(i, j)] = idx((i + 1) % m, j) as u8;
            // b * a^i b^j = a^(i k) b^(j+1), folding b^s = a^t
            let ik = (i * k) % m;
            b_img[idx(i, j)] = if j + 1 < s {
                idx(ik, j + 1) as u8
            } else {
                idx((ik + t) % m, 0) as u8
            };
        }
    }
    PermGroup::new(
        degree,
        vec![
            Perm::from_images(a_img).unwrap(),
            Perm::from_images(b_img).unwrap(),
        ],
    )
    .unwrap()
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
fn sl2_f3() -> PermGroup {
    let vectors: Vec<(u8, u8)> = (0..3u8)
        .flat_map(|a| (0..3u8).map(move |b| (a, b)))
        .filter(|&(a, b)| a != 0 || b != 0)
        .collect();
    let point_of = |v: (u8, u8)| vectors.iter().position(|&w| w == v).unwrap() as u8;
    let act = |m: [[u8; 2]; 2]| -> Perm {
        let img: Vec<u8> = vectors
            .iter()
            .map(|&(a, b)| {
                let na = (m[0][0] * a + m[0][1] * b) % 3;
                let nb = (m[1][0] * a + m[1][1] * b) % 3;
                point_of((na, nb))
            })
            .collect();
        Perm::from_images(img).unwrap()
    };
    // S = [[0,-1],[1,0]], T = [[1,1],[0,1]]
    PermGroup::new(8, vec![act([[0, 2], [1, 0]]), act([[1, 1], [0, 1]])]).unwrap()
}

/// The Heisenberg group over F_3 (extraspecial of order 27, exponent 3)
/// acting on F_3^2 by (u, v) -> (u+1, v) and (u, v) -> (u, v+u).
fn heisenberg3() -> PermGroup {
    let idx = |u: u8, v: u8| (3 * u + v) as usize;
    let mut alpha = vec![0u8; 9];
    let mut beta = vec![0u8; 9];
    for u in 0..3u8 {
        for v in 0..3u8 {
            alpha[idx(u, v)] = idx((u + 1) % 3, v) as u8;
            beta[idx(u, v)] = idx(u, (v + u) % 3) as u8;
        }
    }
    PermGroup::new(
        9,
        vec![
            Perm::from_images(alpha).unwrap(),
            Perm::from_images(beta).unwrap(),
        ],
    )
    .unwrap()
}

/// The central product D4 o Z4 = Q8 o Z4 of order 16, via its left-regular
/// representation: elements are pairs (q, c^e) with q in Q8, e in {0,1},
/// and c^2 identified with -1.
fn pauli16() -> PermGroup {
    // Q8 element = (sign, axis) with axes 1, i, j, k
    type Q = (u8, u8);
    fn q_mul((s1, a1): Q, (s2, a2): Q) -> Q {
        let sign = s1 ^ s2;
        match (a1, a2) {
            (0, a) => (sign, a),
            (a, 0) => (sign, a),
            (a, b) if a == b => (sign ^ 1, 0),
            (1, 2) => (sign, 3),
            (2, 1) => (sign ^ 1, 3),
            (2, 3) => (sign, 1),
            (3, 2) => (sign ^ 1, 1),
            (3, 1) => (sign, 2),
            (1, 3) => (sign ^ 1, 2),
            _ => unreachable!(),
        }
    }
    type E = (Q, u8);
    fn mul(((q1, e1), (q2, e2)): (E, E)) -> E {
        let mut q = q_mul(q1, q2);
        let esum = e1 + e2;
        if esum >= 2 {
            q.0 ^= 1; // c^2 = -1
        }
        (q, esum % 2)
    }
    let elems: Vec<E> = (0..16u8)
        .map(|n| (((n >> 3) & 1, (n >> 1) & 3), n & 1))
        .collect();
    let index_of = |e: E| elems.iter().position(|&f| f == e).unwrap() as u8;
    let regular = |g: E| -> Perm {
        Perm::from_images(elems.iter().map(|&h| index_of(mul((g, h)))).collect()).unwrap()
    };
    // generators i, j, c (the group is 3-generated: G/Frattini = Z2^3)
    PermGroup::new(
        16,
        vec![
            regular(((0, 1), 0)),
            regular(((0, 2), 0)),
            regular(((0, 0), 1)),
        ],
    )
    .unwrap()
}
