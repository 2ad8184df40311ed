//! Report builders for the classification and centralizer-rank sections of
//! `verify-paper`.

use super::{
    centralizer_rank, classify, classify_triangle, ComponentType, CoxeterMatrix, Family,
    GlobalType, Label,
};
use crate::report::VerificationReport;

fn l(m: u32) -> Label {
    Label::Finite(m)
}

fn path_labels(labels: &[Label]) -> CoxeterMatrix {
    let edges: Vec<(usize, usize, Label)> = labels
        .iter()
        .enumerate()
        .map(|(i, &lab)| (i, i + 1, lab))
        .collect();
    CoxeterMatrix::from_edges(labels.len() + 1, &edges).unwrap()
}

fn cycle_all_3(n: usize) -> CoxeterMatrix {
    let edges: Vec<(usize, usize, Label)> = (0..n).map(|i| (i, (i + 1) % n, l(3))).collect();
    CoxeterMatrix::from_edges(n, &edges).unwrap()
}

/// Every member of the implemented affine catalogue must classify as its own
/// family, the (3,3,3) triangle as affine A~2, and the (2,3,7) triangle as
/// neither spherical nor affine.
pub fn verify_classification() -> VerificationReport {
    let mut report = VerificationReport::new("classification");

    let triangle = CoxeterMatrix::triangle(l(3), l(3), l(3));
    let r = classify(&triangle);
    report.check(
        "triangle-333-is-affine-a2",
        r.global == GlobalType::Affine
            && r.components.len() == 1
            && r.components[0].1 == ComponentType::Affine(Family::AffA(2)),
        format!("classified as {:?}", r.components[0].1),
    );

    let hyp = CoxeterMatrix::triangle(l(2), l(3), l(7));
    report.check(
        "triangle-237-is-other",
        classify(&hyp).global == GlobalType::Other
            && classify_triangle(l(2), l(3), l(7)).unwrap() == GlobalType::Other,
        "1/2 + 1/3 + 1/7 < 1",
    );

    // affine self-consistency for every family, n up to 10
    let mut families: Vec<(String, CoxeterMatrix, ComponentType)> = Vec::new();
    families.push((
        "A~1".into(),
        path_labels(&[Label::Infinity]),
        ComponentType::Affine(Family::AffA(1)),
    ));
    for n in 2..=10 {
        families.push((
            format!("A~{n}"),
            cycle_all_3(n + 1),
            ComponentType::Affine(Family::AffA(n)),
        ));
    }
    for n in 3..=10 {
        let mut tail = vec![l(3); n - 2];
        tail[n - 3] = l(4);
        let mut edges = vec![(0, 2, l(3)), (1, 2, l(3))];
        for (i, &lab) in tail.iter().enumerate() {
            edges.push((2 + i, 3 + i, lab));
        }
        families.push((
            format!("B~{n}"),
            CoxeterMatrix::from_edges(n + 1, &edges).unwrap(),
            ComponentType::Affine(Family::AffB(n)),
        ));
    }
    for n in 2..=10 {
        let mut labels = vec![l(3); n];
        labels[0] = l(4);
        labels[n - 1] = l(4);
        families.push((
            format!("C~{n}"),
            path_labels(&labels),
            ComponentType::Affine(Family::AffC(n)),
        ));
    }
    for n in 4..=10 {
        let total = n + 1;
        let mid: usize = total - 4;
        let mut edges = vec![(0, 2, l(3)), (1, 2, l(3))];
        for i in 0..mid.saturating_sub(1) {
            edges.push((2 + i, 3 + i, l(3)));
        }
        let last_mid = 2 + mid - 1;
        edges.push((last_mid, total - 2, l(3)));
        edges.push((last_mid, total - 1, l(3)));
        families.push((
            format!("D~{n}"),
            CoxeterMatrix::from_edges(total, &edges).unwrap(),
            ComponentType::Affine(Family::AffD(n)),
        ));
    }
    let star = |arms: &[usize]| -> CoxeterMatrix {
        let total = 1 + arms.iter().sum::<usize>();
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next, l(3)));
                prev = next;
                next += 1;
            }
        }
        CoxeterMatrix::from_edges(total, &edges).unwrap()
    };
    families.push((
        "E~6".into(),
        star(&[2, 2, 2]),
        ComponentType::Affine(Family::AffE(6)),
    ));
    families.push((
        "E~7".into(),
        star(&[3, 3, 1]),
        ComponentType::Affine(Family::AffE(7)),
    ));
    families.push((
        "E~8".into(),
        star(&[5, 2, 1]),
        ComponentType::Affine(Family::AffE(8)),
    ));
    families.push((
        "F~4".into(),
        path_labels(&[l(3), l(3), l(4), l(3)]),
        ComponentType::Affine(Family::AffF4),
    ));
    families.push((
        "G~2".into(),
        path_labels(&[l(6), l(3)]),
        ComponentType::Affine(Family::AffG2),
    ));

    let mut bad: Vec<String> = Vec::new();
    let total = families.len();
    for (name, matrix, expected) in families {
        let got = classify(&matrix);
        if got.components.len() != 1 || got.components[0].1 != expected {
            bad.push(format!("{name} -> {:?}", got.components[0].1));
        }
    }
    report.check(
        "affine-catalogue-self-consistent",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{total} affine diagrams (all families, n <= 10) classify as themselves")
        } else {
            format!("misclassified: {}", bad.join(", "))
        },
    );
    report
}

/// The centralizer-rank facts: `k = 1` on the affine type-A cycles, commuting
/// set `{s1}` in the (3,3,3) triangle, and `k = 0` everywhere on even
/// diagrams.
pub fn verify_brink() -> VerificationReport {
    let mut report = VerificationReport::new("brink");

    let triangle = CoxeterMatrix::triangle(l(3), l(3), l(3));
    let r = centralizer_rank(&triangle, 0);
    report.check(
        "a2-rank-at-s1",
        r.commuting == vec![0] && r.rank == 1 && r.edges == 3 && r.vertices == 3,
        format!(
            "commuting {{s1}}, odd component the whole triangle, e={}, v={}, k={}",
            r.edges, r.vertices, r.rank
        ),
    );

    let mut cycles_ok = true;
    let mut detail = Vec::new();
    for n in 3..=8 {
        let m = cycle_all_3(n + 1);
        let r = centralizer_rank(&m, n);
        detail.push(format!("A~{n}: k={}", r.rank));
        if r.rank != 1 || r.odd_component.len() != n + 1 {
            cycles_ok = false;
        }
    }
    report.check("affine-cycles-rank-1", cycles_ok, detail.join(", "));

    let even_diagrams: Vec<CoxeterMatrix> = vec![
        CoxeterMatrix::right_angled_free(4),
        path_labels(&[l(4), l(4), l(4)]),
        CoxeterMatrix::from_edges(4, &[(0, 1, Label::Infinity), (1, 2, l(4)), (1, 3, l(6))])
            .unwrap(),
        CoxeterMatrix::from_edges(
            5,
            &[
                (0, 1, l(2)),
                (1, 2, l(8)),
                (2, 3, Label::Infinity),
                (3, 4, l(4)),
                (0, 4, l(6)),
            ],
        )
        .unwrap(),
    ];
    let mut even_ok = true;
    for m in &even_diagrams {
        if !m.is_even() {
            even_ok = false;
        }
        for s in 0..m.n() {
            let r = centralizer_rank(m, s);
            if r.rank != 0 || r.odd_component != vec![s] {
                even_ok = false;
            }
        }
    }
    report.check(
        "even-diagrams-rank-0",
        even_ok,
        format!(
            "{} even diagrams, every generator has a singleton odd component",
            even_diagrams.len()
        ),
    );
    report
}
