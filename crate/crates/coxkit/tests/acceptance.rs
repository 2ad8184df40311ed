//! Acceptance suite: one test per criterion, exact arithmetic throughout,
//! each printing a pass line on completion. Expected values tagged as derived
//! were computed with the independent oracles in this file (naive
//! homomorphism counting by exhaustive tuple enumeration, brute-force
//! commutation checks, endomorphism search by multiplication-table
//! extension), which share no code with the library paths they check.

use std::collections::HashMap;

use coxkit::crysto::{build_affine_an, verify_a2_phi, verify_wlog};
use coxkit::diagram::{verify_brink, verify_classification};
use coxkit::exact::{adjugate, commutant_dimension, smith_normal_form, IntMatrix, QMatrix};
use coxkit::logic::{
    emit_chi, emit_finite_g, emit_gamma, evaluate, parse_formula, FiniteGroupModel, PrefixClass,
};
use coxkit::permgrp::{
    cayley_presentation, closure, eval_word, extend_homomorphism, hom_count, Perm, PermGroup,
    Presentation,
};
use coxkit::profinite::{compare, fingerprint, CompareResult, SmallGroupCatalog};
use coxkit::rng::SplitMix64;
use coxkit::titsrep::{build_rep, element_order, words_equal, OrderResult, Word};

const SEED: u64 = 0xC0C0;

#[test]
fn criterion_1_classification() {
    let report = verify_classification();
    println!("{report}");
    assert!(report.passed(), "{report}");
    println!("criterion 1 (classification): PASS");
}

#[test]
fn criterion_2_brink_rank() {
    let report = verify_brink();
    println!("{report}");
    assert!(report.passed(), "{report}");
    println!("criterion 2 (Brink rank): PASS");
}

#[test]
fn criterion_3_word_problem() {
    let m = coxkit::diagram::parse_diagram("verts 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").unwrap();
    let rep = build_rep(&m).unwrap();

    // g = (s3 s1 s2)^2 commutes with s1
    let g = Word::parse("3 1 2", 3).unwrap().pow(2);
    let s1 = Word(vec![0]);
    assert!(words_equal(&rep, &g.concat(&s1), &s1.concat(&g)).unwrap());

    // s1 s2 has order 3
    assert_eq!(
        element_order(&rep, &Word(vec![0, 1]), 10).unwrap(),
        OrderResult::Finite(3)
    );

    // t1, t2 commute and generate a rank-2 translation lattice in the model
    let model = build_affine_an(2).unwrap();
    let t1 = model.t1.clone().unwrap();
    let t2 = model.t2.clone().unwrap();
    assert!(t1.is_pure_translation() && t2.is_pure_translation());
    assert_eq!(
        model.group.multiply(&t1, &t2),
        model.group.multiply(&t2, &t1)
    );
    let det = &t1.v[0] * &t2.v[1] - &t1.v[1] * &t2.v[0];
    assert!(!num_traits::Zero::is_zero(&det), "lattice must have rank 2");
    // the words also have unbounded order in the reflection representation
    let t1_word = Word::parse("1 2", 3)
        .unwrap()
        .concat(&Word::parse("2 3", 3).unwrap().pow(2));
    assert_eq!(
        element_order(&rep, &t1_word, 100).unwrap(),
        OrderResult::ExceedsBound
    );
    println!("criterion 3 (word problem): PASS");
}

#[test]
fn criterion_4_a2_endomorphism() {
    let report = verify_a2_phi();
    println!("{report}");
    assert!(report.passed(), "{report}");
    println!("criterion 4 (A~2 endomorphism phi = 4id on translations): PASS");
}

#[test]
fn criterion_5_amalgam_suite() {
    let report = coxkit::amalgam::verify_section_3_5(SEED);
    println!("{report}");
    assert!(report.passed(), "{report}");
    // all ten named checks must be present and passing (one is a documented skip)
    let expected = [
        "b-swaps-e2-e3",
        "b-commutes-e1-e4",
        "x-acts-e1e2-y-acts-e3e4",
        "sigma-induces-e1e3-e2e4",
        "ad-u-on-C-equals-sigma",
        "sigma-bar-well-defined",
        "bxy-acts-as-4-cycle",
        "bxy5-acts-as-bxy",
        "sigma-bar-swaps-x-y",
        "sigma-bar-preserves-nontriviality",
        "y-cycle-type-obstruction",
        "b-factors-distinct-trivial-center",
        "theta-u-conjugation-identity",
    ];
    for name in expected {
        assert!(
            report.checks.iter().any(|c| c.name == name),
            "missing check {name}"
        );
    }
    println!("criterion 5 (amalgam suite, 10 checks): PASS");
}

#[test]
fn criterion_6_complement_swap_suite() {
    let report = verify_wlog(SEED, 50);
    println!("{report}");
    assert!(report.passed(), "{report}");
    println!("criterion 6 (complement swap, 50 instances + negative case): PASS");
}

#[test]
fn criterion_7_fingerprints() {
    // Z/4 vs Z/2 x Z/2 differ; the Z/4 entry has epi counts 2 vs 0
    let z4 = Presentation::new(1, vec![vec![1, 1, 1, 1]]).unwrap();
    let klein = Presentation::new(2, vec![vec![1, 1], vec![2, 2], vec![1, 2, -1, -2]]).unwrap();
    let f_z4 = fingerprint(&z4, 4).unwrap();
    let f_klein = fingerprint(&klein, 4).unwrap();
    assert!(matches!(
        compare(&f_z4, &f_klein).unwrap(),
        CompareResult::FirstDifference { .. }
    ));
    assert_eq!(f_z4.entry("4.1").unwrap().epis, 2);
    assert_eq!(f_klein.entry("4.1").unwrap().epis, 0);

    // identical presentations give Equal
    assert_eq!(
        compare(&f_z4, &fingerprint(&z4, 4).unwrap()).unwrap(),
        CompareResult::Equal
    );

    // >= 10 random Tietze-transformed pairs give Equal (bound 8 keeps the
    // search desk-scale)
    let mut rng = SplitMix64::new(SEED);
    let bases: Vec<Presentation> = vec![
        Presentation::new(1, vec![vec![1, 1, 1, 1]]).unwrap(), // Z4
        Presentation::new(2, vec![vec![1, 1], vec![2, 2], vec![1, 2, -1, -2]]).unwrap(), // V4
        Presentation::new(2, vec![vec![1, 1], vec![2, 2], vec![1, 2, 1, 2, 1, 2]]).unwrap(), // S3
        Presentation::new(1, vec![vec![1; 6]]).unwrap(),       // Z6
        Presentation::new(2, vec![vec![1; 4], vec![2, 2], vec![1, 2, 1, 2]]).unwrap(), // D4
        Presentation::new(2, vec![vec![1, 1, 1], vec![2; 4], vec![2, 1, -2, 1]]).unwrap(), // Dic3
    ];
    let mut pairs_checked = 0;
    for round in 0..12 {
        let base = &bases[round % bases.len()];
        let transformed = tietze_transform(base, &mut rng);
        let fb = fingerprint(base, 8).unwrap();
        let ft = fingerprint(&transformed, 8).unwrap();
        assert_eq!(
            compare(&fb, &ft).unwrap(),
            CompareResult::Equal,
            "Tietze pair {round} diverged: {base:?} vs {transformed:?}"
        );
        // entrywise sanity: epis never exceed homs, trivial target gets 1 epi
        for e in &fb.entries {
            assert!(e.epis <= e.homs);
            if e.id == "1.1" {
                assert_eq!(e.epis, 1);
            }
        }
        pairs_checked += 1;
    }
    assert!(pairs_checked >= 10);

    // hom multiplicativity over all catalogue pairs with product order <= 31
    let cat = SmallGroupCatalog::get();
    let probes: Vec<Presentation> = vec![
        Presentation::new(1, vec![vec![1, 1]]).unwrap(),
        Presentation::new(2, vec![vec![1, 1], vec![2, 2]]).unwrap(),
        Presentation::new(1, vec![vec![1; 6]]).unwrap(),
        Presentation::new(2, vec![vec![1, 1, 1], vec![2, 2], vec![1, 2, 1, 2]]).unwrap(), // S3
    ];
    let mut pair_count = 0;
    for (i, a) in cat.entries.iter().enumerate() {
        for b in cat.entries.iter().skip(i) {
            if a.order * b.order > 31 {
                continue;
            }
            pair_count += 1;
            let prod = a.group.direct_product(&b.group);
            for p in &probes {
                let (ha, _) = hom_count(p, &a.group).unwrap();
                let (hb, _) = hom_count(p, &b.group).unwrap();
                let (hp, _) = hom_count(p, &prod).unwrap();
                assert_eq!(
                    hp,
                    ha * hb,
                    "multiplicativity failed at {} x {}",
                    a.id,
                    b.id
                );
            }
        }
    }
    assert!(pair_count > 30, "expected a substantial pair census");

    // cross-check against the naive oracle on every catalogue target of
    // order <= 12
    for entry in cat.up_to(12) {
        for p in bases.iter().chain(&probes) {
            let fast = hom_count(p, &entry.group).unwrap();
            let slow = naive_hom_count(p, &entry.group);
            assert_eq!(fast, slow, "oracle mismatch at {} for {p:?}", entry.id);
        }
    }
    println!("criterion 7 (fingerprints): PASS");
}

#[test]
fn criterion_8_formulas() {
    // round trips through the parser
    for f in [
        emit_chi(1),
        emit_chi(6),
        emit_finite_g(
            &Presentation::new(1, vec![vec![1, 1]]).unwrap(),
            &[vec![vec![]], vec![vec![], vec![1]]],
        )
        .unwrap(),
        emit_gamma(
            &Presentation::new(2, vec![vec![1, 1], vec![2, 2]]).unwrap(),
            &[vec![1, 2]],
            1,
            &parse_formula("forall y v y = y v").unwrap(),
            &[vec![vec![]], vec![vec![], vec![1]]],
            &[vec![1]],
        )
        .unwrap(),
    ] {
        assert_eq!(parse_formula(&f.to_string()).unwrap(), f, "round trip");
    }
    // the gamma with universal theta is an EA-formula
    let theta = parse_formula("forall y v y = y v").unwrap();
    let gamma = emit_gamma(
        &Presentation::new(1, vec![vec![1, 1]]).unwrap(),
        &[vec![1]],
        1,
        &theta,
        &[vec![vec![]]],
        &[vec![1]],
    )
    .unwrap();
    assert_eq!(gamma.prefix_class(), PrefixClass::EA);

    // chi agreement with the commutation oracle over S3. Note: every y in S3
    // satisfies y^6 = 1, so chi(6) is true at every element (the commutator
    // [x, y^6] is identically trivial); the center identity is exact at m = 1.
    let s3 = PermGroup::symmetric(3);
    let model = FiniteGroupModel::new(s3);
    let elems = model.group.elements().unwrap().list.clone();
    for m in [1usize, 6] {
        let f = emit_chi(m);
        for e in &elems {
            let oracle = elems.iter().all(|y| {
                let mut ym = Perm::identity(3);
                for _ in 0..m {
                    ym = ym.mul(y);
                }
                e.mul(&ym) == ym.mul(e)
            });
            let mut env = HashMap::new();
            env.insert("x".to_string(), e.clone());
            assert_eq!(evaluate(&f, &model, &env, 1_000_000).unwrap(), oracle);
        }
    }
    let chi1 = emit_chi(1);
    for e in &elems {
        let mut env = HashMap::new();
        env.insert("x".to_string(), e.clone());
        assert_eq!(
            evaluate(&chi1, &model, &env, 1_000_000).unwrap(),
            e.is_identity(),
            "chi(1) must hold exactly on the (trivial) center of S3"
        );
    }

    // Finite_G semantics vs the endomorphism-search oracle on every
    // catalogue group of order <= 24 with at most 2 stored generators
    let cat = SmallGroupCatalog::get();
    let mut groups_checked = 0;
    for entry in cat.up_to(24) {
        if entry.group.gens().len() > 2 {
            continue;
        }
        check_finite_g_against_oracle(&entry.group, &entry.id);
        groups_checked += 1;
    }
    assert!(groups_checked >= 30, "checked {groups_checked} groups");
    println!("criterion 8 (formulas, {groups_checked} oracle groups): PASS");
}

#[test]
fn criterion_9_exact_algebra() {
    // SNF invariants on 1000 random matrices up to 6x6, entries in [-9, 9]
    let mut rng = SplitMix64::new(SEED);
    for _ in 0..1000 {
        let rows = 1 + rng.below(6);
        let cols = 1 + rng.below(6);
        let a = IntMatrix::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| rng.range_i64(-9, 9)).collect())
                .collect(),
        );
        let r = smith_normal_form(&a);
        assert_eq!(r.u.mul(&a).mul(&r.v), r.s);
        assert!(r.s.is_diagonal());
        assert_eq!(num_traits::Signed::abs(&r.u.det()), 1.into());
        assert_eq!(num_traits::Signed::abs(&r.v.det()), 1.into());
        let n = rows.min(cols);
        for i in 0..n {
            assert!(!num_traits::Signed::is_negative(&r.s[(i, i)]));
            if i + 1 < n && !num_traits::Zero::is_zero(&r.s[(i, i)]) {
                assert!(num_traits::Zero::is_zero(
                    &(r.s[(i + 1, i + 1)].clone() % &r.s[(i, i)])
                ));
            }
        }
    }

    // adjugate identity including singular cases
    for _ in 0..300 {
        let n = 1 + rng.below(5);
        let a = IntMatrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| rng.range_i64(-5, 5)).collect())
                .collect(),
        );
        let (b, d) = adjugate(&a);
        let mut di = IntMatrix::zero(n, n);
        for i in 0..n {
            di[(i, i)] = d.clone();
        }
        assert_eq!(a.mul(&b), di);
    }
    let singular = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]);
    let (b, d) = adjugate(&singular);
    assert!(num_traits::Zero::is_zero(&d));
    assert_eq!(singular.mul(&b), IntMatrix::zero(2, 2));

    // commutant dimensions: 1 for the S3 root representation, 2 for the swap
    let r12 = QMatrix::from_rows_i64(vec![vec![-1, 1], vec![0, 1]]);
    let r23 = QMatrix::from_rows_i64(vec![vec![1, 0], vec![1, -1]]);
    assert_eq!(commutant_dimension(&[r12, r23]), 1);
    let swap = QMatrix::from_rows_i64(vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(commutant_dimension(&[swap]), 2);
    println!("criterion 9 (exact algebra): PASS");
}

// ---------------------------------------------------------------------------
// independent oracles and corpus generators
// ---------------------------------------------------------------------------

/// Naive homomorphism counting: every tuple enumerated by an odometer, every
/// relator checked, epimorphisms detected by closure. No candidate filtering,
/// no relator scheduling; independent of the library search path.
fn naive_hom_count(p: &Presentation, q: &PermGroup) -> (u64, u64) {
    let elems = q.elements().unwrap().list.clone();
    let qn = elems.len();
    let degree = q.degree();
    if p.ngens == 0 {
        return (1, if qn == 1 { 1 } else { 0 });
    }
    let mut odometer = vec![0usize; p.ngens];
    let mut homs = 0;
    let mut epis = 0;
    loop {
        let images: Vec<Perm> = odometer.iter().map(|&i| elems[i].clone()).collect();
        if p.relators
            .iter()
            .all(|r| eval_word(degree, &images, r).is_identity())
        {
            homs += 1;
            if closure(degree, images, qn + 1).unwrap().order() == qn {
                epis += 1;
            }
        }
        let mut pos = 0;
        loop {
            if pos == p.ngens {
                return (homs, epis);
            }
            odometer[pos] += 1;
            if odometer[pos] < qn {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

/// Random Tietze transformations preserving the presented group: add a
/// redundant generator with its defining relator, adjoin a conjugated
/// relator, or adjoin a product of two relators.
fn tietze_transform(base: &Presentation, rng: &mut SplitMix64) -> Presentation {
    let mut ngens = base.ngens;
    let mut relators = base.relators.clone();
    let ops = 1 + rng.below(3);
    for _ in 0..ops {
        match rng.below(3) {
            0 => {
                // new generator equal to a random word in the old ones
                let len = 1 + rng.below(3);
                let mut w: Vec<i32> = Vec::new();
                for _ in 0..len {
                    let g = 1 + rng.below(ngens) as i32;
                    w.push(if rng.chance(1, 2) { g } else { -g });
                }
                ngens += 1;
                let mut rel = vec![ngens as i32];
                for &l in w.iter().rev() {
                    rel.push(-l);
                }
                relators.push(rel);
            }
            1 if !relators.is_empty() => {
                // conjugate of an existing relator
                let r = relators[rng.below(relators.len())].clone();
                let u = 1 + rng.below(ngens) as i32;
                let mut rel = vec![u];
                rel.extend(&r);
                rel.push(-u);
                relators.push(rel);
            }
            _ if relators.len() >= 2 => {
                let a = relators[rng.below(relators.len())].clone();
                let b = relators[rng.below(relators.len())].clone();
                let mut rel = a;
                rel.extend(b);
                relators.push(rel);
            }
            _ => {}
        }
    }
    Presentation::new(ngens, relators).unwrap()
}

/// Evaluate Finite_G over the group itself at every generator-image tuple and
/// compare with the direct endomorphism-search oracle.
fn check_finite_g_against_oracle(q: &PermGroup, id: &str) {
    let degree = q.degree();
    let elems = q.elements().unwrap();
    let qn = elems.list.len();
    let pres = cayley_presentation(q).unwrap();
    let reps = q.subgroup_conjugacy_representatives().unwrap();

    // element words along the Cayley tree (positive letters only)
    let words_of = |sub: &PermGroup| -> Vec<Vec<i32>> {
        sub.elements()
            .unwrap()
            .list
            .iter()
            .map(|e| {
                elems
                    .word_for(elems.position(e).unwrap())
                    .into_iter()
                    .map(|l| l as i32 + 1)
                    .collect()
            })
            .collect()
    };
    let subgroup_words: Vec<Vec<Vec<i32>>> = reps.iter().map(words_of).collect();
    let formula = emit_finite_g(&pres, &subgroup_words).unwrap();
    let model = FiniteGroupModel::new(PermGroup::new(degree, q.gens().to_vec()).unwrap());

    let ngens = q.gens().len();
    let mut odometer = vec![0usize; ngens];
    loop {
        let images: Vec<Perm> = odometer.iter().map(|&i| elems.list[i].clone()).collect();
        let mut env = HashMap::new();
        for (i, img) in images.iter().enumerate() {
            env.insert(format!("x{}", i + 1), img.clone());
        }
        let by_formula = evaluate(&formula, &model, &env, 200_000_000).unwrap();
        let by_oracle = endo_oracle(q, &reps, &images);
        assert_eq!(
            by_formula, by_oracle,
            "Finite_G disagrees with the oracle on {id} at images {images:?}"
        );
        let mut pos = 0;
        loop {
            if pos == ngens {
                return;
            }
            odometer[pos] += 1;
            if odometer[pos] < qn {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

/// Does `gens -> images` extend to an endomorphism that is injective on the
/// finite subgroups and maps non-conjugate subgroups to non-conjugate ones?
fn endo_oracle(q: &PermGroup, reps: &[PermGroup], images: &[Perm]) -> bool {
    let Some(pairs) = extend_homomorphism(q.gens(), images, q.order() + 1).unwrap() else {
        return false;
    };
    let phi: HashMap<&Perm, &Perm> = pairs.iter().map(|(a, b)| (a, b)).collect();
    // injective on every representative subgroup
    for rep in reps {
        for h in &rep.elements().unwrap().list {
            if !h.is_identity() && phi[h].is_identity() {
                return false;
            }
        }
    }
    // pairwise non-conjugate images
    let image_groups: Vec<PermGroup> = reps
        .iter()
        .map(|rep| {
            let imgs: Vec<Perm> = rep
                .elements()
                .unwrap()
                .list
                .iter()
                .map(|h| phi[h].clone())
                .collect();
            closure(q.degree(), imgs, q.order() + 1).unwrap()
        })
        .collect();
    for i in 0..image_groups.len() {
        for j in 0..image_groups.len() {
            if i != j
                && reps[i].order() == reps[j].order()
                && q.are_conjugate_subgroups(&image_groups[i], &image_groups[j])
                    .unwrap()
            {
                return false;
            }
        }
    }
    true
}
