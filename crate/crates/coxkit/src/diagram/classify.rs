//! Classification of Coxeter diagrams by labeled-graph isomorphism against
//! hard-coded spherical and affine catalogues. No Gram-matrix signature work:
//! the catalogues are finite families parameterized by the vertex count, and
//! matching is a small backtracking search, fine at desk scale.

use std::fmt;

use super::{CoxeterMatrix, DiagramError, Label};

/// Irreducible diagram families. `I2(m)` carries its label; `AffA(1)` is the
/// infinite-dihedral diagram (one edge labelled inf).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
    AffA(usize),
    AffB(usize),
    AffC(usize),
    AffD(usize),
    AffE(usize),
    AffF4,
    AffG2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::E(n) => write!(f, "E{n}"),
            Family::F4 => write!(f, "F4"),
            Family::H(n) => write!(f, "H{n}"),
            Family::I2(m) => write!(f, "I2({m})"),
            Family::AffA(n) => write!(f, "A~{n}"),
            Family::AffB(n) => write!(f, "B~{n}"),
            Family::AffC(n) => write!(f, "C~{n}"),
            Family::AffD(n) => write!(f, "D~{n}"),
            Family::AffE(n) => write!(f, "E~{n}"),
            Family::AffF4 => write!(f, "F~4"),
            Family::AffG2 => write!(f, "G~2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentType {
    Spherical(Family),
    Affine(Family),
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalType {
    Spherical,
    Affine,
    Other,
}

impl fmt::Display for GlobalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalType::Spherical => write!(f, "Spherical"),
            GlobalType::Affine => write!(f, "Affine"),
            GlobalType::Other => write!(f, "Other"),
        }
    }
}

/// Component decomposition with one type tag per connected component.
/// Globally: Spherical iff all components are, Affine iff all are spherical
/// or affine with at least one affine, Other otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub components: Vec<(Vec<usize>, ComponentType)>,
    pub global: GlobalType,
}

pub fn classify(m: &CoxeterMatrix) -> ClassificationResult {
    let mut components = Vec::new();
    for comp in m.components() {
        let t = classify_component(&m.induced(&comp));
        components.push((comp, t));
    }
    let global = if components
        .iter()
        .all(|(_, t)| matches!(t, ComponentType::Spherical(_)))
    {
        GlobalType::Spherical
    } else if components
        .iter()
        .all(|(_, t)| !matches!(t, ComponentType::Other))
    {
        GlobalType::Affine
    } else {
        GlobalType::Other
    };
    ClassificationResult { components, global }
}

/// Triangle-group trichotomy: spherical, affine or other according to
/// `1/p + 1/q + 1/r` compared with 1, decided in exact integer arithmetic.
pub fn classify_triangle(p: Label, q: Label, r: Label) -> Result<GlobalType, DiagramError> {
    let (p, q, r) = match (p.finite(), q.finite(), r.finite()) {
        (Some(p), Some(q), Some(r)) => (p as u128, q as u128, r as u128),
        _ => return Err(DiagramError::InfiniteTriangleLabel),
    };
    assert!(p >= 2 && q >= 2 && r >= 2);
    let lhs = q * r + p * r + p * q;
    let rhs = p * q * r;
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => GlobalType::Spherical,
        std::cmp::Ordering::Equal => GlobalType::Affine,
        std::cmp::Ordering::Less => GlobalType::Other,
    })
}

/// Classify one connected diagram against the catalogues.
pub(super) fn classify_component(c: &CoxeterMatrix) -> ComponentType {
    let k = c.n();
    for (family, candidate) in spherical_candidates(k, c) {
        if labeled_isomorphic(c, &candidate) {
            return ComponentType::Spherical(family);
        }
    }
    for (family, candidate) in affine_candidates(k) {
        if labeled_isomorphic(c, &candidate) {
            return ComponentType::Affine(family);
        }
    }
    ComponentType::Other
}

fn l3() -> Label {
    Label::Finite(3)
}

/// Path on `labels.len() + 1` vertices with the given consecutive labels.
fn path(labels: &[Label]) -> CoxeterMatrix {
    let n = labels.len() + 1;
    let edges: Vec<(usize, usize, Label)> = labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (i, i + 1, l))
        .collect();
    CoxeterMatrix::from_edges(n, &edges).unwrap()
}

/// Star of simple edges with arms of the given lengths from a center vertex.
fn star(arms: &[usize]) -> CoxeterMatrix {
    let n = 1 + arms.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next, l3()));
            prev = next;
            next += 1;
        }
    }
    CoxeterMatrix::from_edges(n, &edges).unwrap()
}

/// Cycle on n vertices, all labels 3.
fn cycle(n: usize) -> CoxeterMatrix {
    let edges: Vec<(usize, usize, Label)> = (0..n).map(|i| (i, (i + 1) % n, l3())).collect();
    CoxeterMatrix::from_edges(n, &edges).unwrap()
}

/// Fork of two simple edges, then a path with the given labels:
/// vertices 0,1 both joined to 2, then 2-3-... labelled by `tail`.
fn forked_path(tail: &[Label]) -> CoxeterMatrix {
    let n = 3 + tail.len();
    let mut edges = vec![(0, 2, l3()), (1, 2, l3())];
    for (i, &l) in tail.iter().enumerate() {
        edges.push((2 + i, 3 + i, l));
    }
    CoxeterMatrix::from_edges(n, &edges).unwrap()
}

/// Forks at both ends of a simple path on `total` vertices (total >= 5).
fn double_fork(total: usize) -> CoxeterMatrix {
    let mid = total - 4; // path vertices between the forks
    let mut edges = vec![(0, 2, l3()), (1, 2, l3())];
    for i in 0..mid.saturating_sub(1) {
        edges.push((2 + i, 3 + i, l3()));
    }
    let last_mid = 2 + mid - 1;
    edges.push((last_mid, total - 2, l3()));
    edges.push((last_mid, total - 1, l3()));
    CoxeterMatrix::from_edges(total, &edges).unwrap()
}

fn spherical_candidates(k: usize, c: &CoxeterMatrix) -> Vec<(Family, CoxeterMatrix)> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    if k == 1 {
        out.push((Family::A(1), CoxeterMatrix::right_angled_free(1)));
        return out;
    }
    // A_k: simple path
    out.push((Family::A(k), path(&vec![l3(); k - 1])));
    // B_k (k >= 2): path with one 4 at the end
    {
        let mut labels = vec![l3(); k - 1];
        labels[k - 2] = Label::Finite(4);
        out.push((Family::B(k), path(&labels)));
    }
    // D_k (k >= 4): fork plus simple path
    if k >= 4 {
        out.push((Family::D(k), forked_path(&vec![l3(); k - 3])));
    }
    // E6, E7, E8: star with arms (2,2,1), (3,2,1), (4,2,1)
    match k {
        6 => out.push((Family::E(6), star(&[2, 2, 1]))),
        7 => out.push((Family::E(7), star(&[3, 2, 1]))),
        8 => out.push((Family::E(8), star(&[4, 2, 1]))),
        _ => {}
    }
    if k == 4 {
        out.push((Family::F4, path(&[l3(), Label::Finite(4), l3()])));
        out.push((Family::H(4), path(&[Label::Finite(5), l3(), l3()])));
    }
    if k == 3 {
        out.push((Family::H(3), path(&[Label::Finite(5), l3()])));
    }
    // I2(m), m >= 5 finite: take the label straight from the component
    if k == 2 {
        if let Label::Finite(m) = c.label(0, 1) {
            if m >= 5 {
                out.push((Family::I2(m), path(&[Label::Finite(m)])));
            }
        }
    }
    out
}

fn affine_candidates(k: usize) -> Vec<(Family, CoxeterMatrix)> {
    let mut out = Vec::new();
    if k == 2 {
        out.push((Family::AffA(1), path(&[Label::Infinity])));
    }
    if k >= 3 {
        // A~n is the (n+1)-cycle
        out.push((Family::AffA(k - 1), cycle(k)));
    }
    if k >= 4 {
        // B~n (n >= 3): fork at one end, a 4 at the other
        let mut tail = vec![l3(); k - 3];
        tail[k - 4] = Label::Finite(4);
        out.push((Family::AffB(k - 1), forked_path(&tail)));
    }
    if k >= 3 {
        // C~n (n >= 2): path with a 4 at both ends
        let mut labels = vec![l3(); k - 1];
        labels[0] = Label::Finite(4);
        labels[k - 2] = Label::Finite(4);
        out.push((Family::AffC(k - 1), path(&labels)));
    }
    if k >= 5 {
        out.push((Family::AffD(k - 1), double_fork(k)));
    }
    match k {
        7 => out.push((Family::AffE(6), star(&[2, 2, 2]))),
        8 => out.push((Family::AffE(7), star(&[3, 3, 1]))),
        9 => out.push((Family::AffE(8), star(&[5, 2, 1]))),
        _ => {}
    }
    if k == 5 {
        out.push((Family::AffF4, path(&[l3(), l3(), Label::Finite(4), l3()])));
    }
    if k == 3 {
        out.push((Family::AffG2, path(&[Label::Finite(6), l3()])));
    }
    out
}

/// Backtracking labeled-graph isomorphism on vertex-label-multiset signatures.
fn labeled_isomorphic(a: &CoxeterMatrix, b: &CoxeterMatrix) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    let sig = |m: &CoxeterMatrix, v: usize| -> Vec<Label> {
        let mut s: Vec<Label> = (0..n).filter(|&w| w != v).map(|w| m.label(v, w)).collect();
        s.sort_unstable();
        s
    };
    let sig_a: Vec<Vec<Label>> = (0..n).map(|v| sig(a, v)).collect();
    let sig_b: Vec<Vec<Label>> = (0..n).map(|v| sig(b, v)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(a, b, &sig_a, &sig_b, &mut map, &mut used, 0)
}

fn backtrack(
    a: &CoxeterMatrix,
    b: &CoxeterMatrix,
    sig_a: &[Vec<Label>],
    sig_b: &[Vec<Label>],
    map: &mut [usize],
    used: &mut [bool],
    v: usize,
) -> bool {
    let n = a.n();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] || sig_a[v] != sig_b[w] {
            continue;
        }
        if (0..v).all(|u| a.label(v, u) == b.label(w, map[u])) {
            map[v] = w;
            used[w] = true;
            if backtrack(a, b, sig_a, sig_b, map, used, v + 1) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
    }
    false
}
