//! Consistency checks across module boundaries: the same group realized
//! through different routes must produce identical answers.

use coxkit::crysto::build_affine_an;
use coxkit::diagram::parse_diagram;
use coxkit::permgrp::Presentation;
use coxkit::profinite::{compare, fingerprint, presentation_of_cryst, CompareResult};
use coxkit::rng::SplitMix64;
use coxkit::titsrep::{build_rep, words_equal, Word};

/// The (3,3,3) triangle presentation and the crystallographic model
/// `Z^2 x| S3` present the same group, so their finite-quotient fingerprints
/// agree entrywise.
#[test]
fn triangle_presentation_matches_crystallographic_presentation() {
    let triangle = Presentation::new(
        3,
        vec![
            vec![1, 1],
            vec![2, 2],
            vec![3, 3],
            vec![1, 2, 1, 2, 1, 2],
            vec![2, 3, 2, 3, 2, 3],
            vec![3, 1, 3, 1, 3, 1],
        ],
    )
    .unwrap();
    let model = build_affine_an(2).unwrap();
    let from_cryst = presentation_of_cryst(&model.group).unwrap();
    let f1 = fingerprint(&triangle, 8).unwrap();
    let f2 = fingerprint(&from_cryst, 8).unwrap();
    assert_eq!(compare(&f1, &f2).unwrap(), CompareResult::Equal);
}

/// Word equality decided in the reflection representation agrees with
/// equality of the corresponding elements of the crystallographic model
/// (both are faithful for the triangle group).
#[test]
fn reflection_rep_and_cryst_model_agree_on_the_word_problem() {
    let m = parse_diagram("verts 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").unwrap();
    let rep = build_rep(&m).unwrap();
    let model = build_affine_an(2).unwrap();

    let mut rng = SplitMix64::new(0xABCDE);
    let mut agreements = 0;
    let mut equal_pairs = 0;
    for _ in 0..300 {
        let len1 = rng.below(9);
        let len2 = rng.below(9);
        let w1: Vec<usize> = (0..len1).map(|_| rng.below(3)).collect();
        let w2: Vec<usize> = (0..len2).map(|_| rng.below(3)).collect();
        let by_rep = words_equal(&rep, &Word(w1.clone()), &Word(w2.clone())).unwrap();
        let by_model = model.word(&w1) == model.word(&w2);
        assert_eq!(by_rep, by_model, "disagreement at {w1:?} vs {w2:?}");
        agreements += 1;
        if by_rep {
            equal_pairs += 1;
        }
    }
    assert_eq!(agreements, 300);
    // sanity: the corpus is not vacuous (some random pairs do coincide)
    assert!(equal_pairs > 0, "corpus never produced an equal pair");
}

/// The distinguished translations of the model match the reflection
/// representation: their defining words commute there as well.
#[test]
fn model_translations_commute_in_the_reflection_representation() {
    let m = parse_diagram("verts 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").unwrap();
    let rep = build_rep(&m).unwrap();
    let t1 = Word::parse("1 2", 3)
        .unwrap()
        .concat(&Word::parse("2 3", 3).unwrap().pow(2));
    let t2 = Word::parse("2 3", 3)
        .unwrap()
        .concat(&Word::parse("3 1", 3).unwrap().pow(2));
    assert!(words_equal(&rep, &t1.concat(&t2), &t2.concat(&t1)).unwrap());
}
