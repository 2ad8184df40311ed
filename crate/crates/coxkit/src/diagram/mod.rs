//! Coxeter matrices and diagrams: the text DSL, classification of components
//! against the spherical and affine catalogues, enumeration of special
//! spherical subgroups, and odd-subgraph centralizer ranks.

mod classify;
mod parse;
mod verify;

pub use classify::{
    classify, classify_triangle, ClassificationResult, ComponentType, Family, GlobalType,
};
pub use parse::parse_diagram;
pub use verify::{verify_brink, verify_classification};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("line {line}: duplicate edge {i} {j} with conflicting labels")]
    ConflictingEdge { line: usize, i: usize, j: usize },
    #[error("line {line}: off-diagonal label must be >= 2 or inf")]
    LabelRange { line: usize },
    #[error("invalid Coxeter matrix: {0}")]
    Invalid(String),
    #[error("triangle labels must be finite")]
    InfiniteTriangleLabel,
}

/// Edge label of a Coxeter diagram. `Infinity` orders above every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 1)
    }

    pub fn is_even_or_infinite(self) -> bool {
        !self.is_odd()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

/// Symmetric matrix of labels `m_ij` with `m_ii = 1` and `m_ij >= 2` off the
/// diagonal; vertices are 0-based indices internally, 1-based in the DSL.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    m: Vec<Label>,
}

impl CoxeterMatrix {
    /// All-commuting matrix (every off-diagonal label 2).
    pub fn right_angled_free(n: usize) -> CoxeterMatrix {
        let mut m = vec![Label::Finite(2); n * n];
        for i in 0..n {
            m[i * n + i] = Label::Finite(1);
        }
        CoxeterMatrix { n, m }
    }

    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize, Label)],
    ) -> Result<CoxeterMatrix, DiagramError> {
        let mut mat = CoxeterMatrix::right_angled_free(n);
        for &(i, j, l) in edges {
            if i >= n || j >= n || i == j {
                return Err(DiagramError::Invalid(format!("bad edge ({i}, {j})")));
            }
            if matches!(l, Label::Finite(m) if m < 2) {
                return Err(DiagramError::Invalid(format!("label {l} below 2")));
            }
            mat.m[i * n + j] = l;
            mat.m[j * n + i] = l;
        }
        Ok(mat)
    }

    /// Triangle diagram with labels `m12 = p`, `m13 = q`, `m23 = r`.
    pub fn triangle(p: Label, q: Label, r: Label) -> CoxeterMatrix {
        CoxeterMatrix::from_edges(3, &[(0, 1, p), (0, 2, q), (1, 2, r)]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.m[i * self.n + j]
    }

    /// Pairs `(i, j)`, `i < j`, with `m_ij != 2` (the diagram's edges).
    pub fn edges(&self) -> Vec<(usize, usize, Label)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let l = self.label(i, j);
                if l != Label::Finite(2) {
                    out.push((i, j, l));
                }
            }
        }
        out
    }

    /// True iff every off-diagonal label is even or infinite.
    pub fn is_even(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.label(i, j).is_even_or_infinite()))
    }

    /// Induced matrix on a vertex subset (indices keep the subset's order).
    pub fn induced(&self, subset: &[usize]) -> CoxeterMatrix {
        let k = subset.len();
        let mut m = Vec::with_capacity(k * k);
        for &i in subset {
            for &j in subset {
                m.push(self.label(i, j));
            }
        }
        CoxeterMatrix { n: k, m }
    }

    /// Relabel vertices: vertex `i` of the result is vertex `perm[i]` of self.
    pub fn permuted(&self, perm: &[usize]) -> CoxeterMatrix {
        assert_eq!(perm.len(), self.n);
        self.induced(perm)
    }

    /// Connected components of the diagram (edges are labels != 2), each as a
    /// sorted vertex list, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in 0..self.n {
                    if !seen[w] && self.label(v, w) != Label::Finite(2) && v != w {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Least common multiple of all finite labels (at least 1); this is the
    /// conductor of the exact ring carrying the reflection representation.
    pub fn conductor(&self) -> u64 {
        let mut l = 1u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if let Label::Finite(m) = self.label(i, j) {
                    l = num_integer::lcm(l, m as u64);
                }
            }
        }
        l
    }
}

/// Centralizer rank data at a generator: the commuting generator set and the
/// free rank `k = e - v + 1` of the odd component through `s` (the first
/// Betti number of that component). Only this combinatorial quantity is
/// computed; no generators of the free part are produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerRank {
    pub generator: usize,
    /// `{s} ∪ {t : m_st = 2}`, sorted.
    pub commuting: Vec<usize>,
    /// Connected component of `s` in the odd-label subgraph, sorted.
    pub odd_component: Vec<usize>,
    pub edges: usize,
    pub vertices: usize,
    pub rank: usize,
}

/// Rank data for the centralizer of generator `s` (0-based index).
pub fn centralizer_rank(m: &CoxeterMatrix, s: usize) -> CentralizerRank {
    assert!(s < m.n(), "generator index out of range");
    let n = m.n();
    let mut commuting: Vec<usize> = (0..n)
        .filter(|&t| t == s || m.label(s, t) == Label::Finite(2))
        .collect();
    commuting.sort_unstable();

    // component of s in the subgraph with odd finite labels only
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut comp = vec![s];
    let mut queue = vec![s];
    while let Some(v) = queue.pop() {
        for w in 0..n {
            if w != v && !seen[w] && m.label(v, w).is_odd() && m.label(v, w) != Label::Finite(1) {
                seen[w] = true;
                comp.push(w);
                queue.push(w);
            }
        }
    }
    comp.sort_unstable();
    let vertices = comp.len();
    let mut edges = 0;
    for (a, &i) in comp.iter().enumerate() {
        for &j in comp.iter().skip(a + 1) {
            if m.label(i, j).is_odd() {
                edges += 1;
            }
        }
    }
    CentralizerRank {
        generator: s,
        commuting,
        odd_component: comp,
        edges,
        vertices,
        rank: edges + 1 - vertices,
    }
}

/// All vertex subsets whose induced diagram is globally spherical, including
/// the empty set; sorted by size, then lexicographically. Full 2^n scan with
/// the per-component verdict memoized; exponential by design, fine for the
/// desk-scale diagrams (n <= ~20) this crate targets.
pub fn special_spherical_subgroups(m: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = m.n();
    assert!(n <= 24, "subset scan capped at 24 vertices");
    let mut cache: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let induced = m.induced(&subset);
        let spherical = induced.components().into_iter().all(|comp| {
            let key: Vec<usize> = comp.iter().map(|&i| subset[i]).collect();
            if let Some(&v) = cache.get(&key) {
                return v;
            }
            let v = matches!(
                classify::classify_component(&induced.induced(&comp)),
                ComponentType::Spherical(_)
            );
            cache.insert(key, v);
            v
        });
        if spherical {
            out.push(subset);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
