//! The specific amalgam `G = A *_C B` with `A = S6 x S6`, `B = S4 x S3 x S5`
//! and `C = (Z/2)^4` generated by four commuting transpositions, together
//! with its verification suite.
//!
//! Point layout. `A` lives on 12 points, the factors `A1`, `A2` on 1-6 and
//! 7-12; `B` lives on its own 12 points with `B1 = S4` on 1-4, `B2 = S3` on
//! 5-7 and `B3 = S5` on 8-12. The edge group embeds as
//! `e1 = (1 2), e2 = (3 4)` in `A1`, `e3 = (1 2), e4 = (3 4)` in `A2` (global
//! points 7 8 / 9 10), and as `e2 = (1 2), e3 = (3 4)` in `B1`, `e1 = (5 6)`
//! in `B2`, `e4 = (8 9)` in `B3`.

use super::{define_endo, make_amalgam, AmalgamElement, AmalgamError, Factor, FinAmalgam};
use crate::permgrp::{closure, cycle_type, is_isomorphic_small, Perm, PermGroup};
use crate::report::VerificationReport;
use crate::rng::SplitMix64;

/// The amalgam with its distinguished elements.
pub struct PaperG {
    pub amalgam: FinAmalgam,
    /// abstract generators `e1..e4` of the edge group (degree 8)
    pub e_abstract: Vec<Perm>,
    /// `e1..e4` as elements of `A` (degree 12)
    pub e_in_a: Vec<Perm>,
    /// `e1..e4` as elements of `B` (degree 12)
    pub e_in_b: Vec<Perm>,
    pub x: Perm,
    pub y: Perm,
    pub b: Perm,
    /// the point swap implementing the factor-exchange automorphism of `A`
    pub tau: Perm,
}

fn adjacent_transpositions(degree: usize, lo: usize, hi: usize) -> Vec<Perm> {
    (lo..hi)
        .map(|i| Perm::from_cycles(degree, &[vec![i, i + 1]]).unwrap())
        .collect()
}

pub fn build_paper_g() -> Result<PaperG, AmalgamError> {
    // A = S6 x S6 on points 1-6 and 7-12
    let mut a_gens = adjacent_transpositions(12, 1, 6);
    a_gens.extend(adjacent_transpositions(12, 7, 12));
    let a = PermGroup::new(12, a_gens).unwrap();

    // B = S4 x S3 x S5 on points 1-4, 5-7, 8-12
    let mut b_gens = adjacent_transpositions(12, 1, 4);
    b_gens.extend(adjacent_transpositions(12, 5, 7));
    b_gens.extend(adjacent_transpositions(12, 8, 12));
    let b = PermGroup::new(12, b_gens).unwrap();

    // C = (Z/2)^4 on 8 points
    let c_gens: Vec<Perm> = (0..4)
        .map(|k| Perm::from_cycles(8, &[vec![2 * k + 1, 2 * k + 2]]).unwrap())
        .collect();
    let c = PermGroup::new(8, c_gens.clone()).unwrap();

    let e_in_a: Vec<Perm> = [vec![1, 2], vec![3, 4], vec![7, 8], vec![9, 10]]
        .iter()
        .map(|cyc| Perm::from_cycles(12, std::slice::from_ref(cyc)).unwrap())
        .collect();
    let e_in_b: Vec<Perm> = [vec![5, 6], vec![1, 2], vec![3, 4], vec![8, 9]]
        .iter()
        .map(|cyc| Perm::from_cycles(12, std::slice::from_ref(cyc)).unwrap())
        .collect();

    let amalgam = make_amalgam(a, b, c, &e_in_a, &e_in_b)?;
    Ok(PaperG {
        amalgam,
        e_abstract: c_gens,
        e_in_a,
        e_in_b,
        x: Perm::parse(12, "(1 3)(2 4)(5 6)").unwrap(),
        y: Perm::parse(12, "(7 9)(8 10)(11 12)").unwrap(),
        b: Perm::parse(12, "(1 3)(2 4)").unwrap(),
        tau: Perm::parse(12, "(1 7)(2 8)(3 9)(4 10)(5 11)(6 12)").unwrap(),
    })
}

impl PaperG {
    /// The factor-exchange automorphism of `A`: conjugation by the point swap.
    pub fn sigma(&self, a_elem: &Perm) -> Perm {
        self.tau.mul(a_elem).mul(&self.tau.inv())
    }

    /// `u = b x y b` as a reduced element of the amalgam.
    pub fn u(&self) -> AmalgamElement {
        self.amalgam.normalize(&[
            (Factor::B, self.b.clone()),
            (Factor::A, self.x.clone()),
            (Factor::A, self.y.clone()),
            (Factor::B, self.b.clone()),
        ])
    }

    /// Conjugation action of a group element on the set `{e1..e4}`, as the
    /// index map `i -> j` with `w e_i w^-1 = e_j`; `None` if some conjugate
    /// leaves the set.
    pub fn action_on_e(&self, w: &AmalgamElement) -> Option<Vec<usize>> {
        let g = &self.amalgam;
        let mut out = Vec::with_capacity(4);
        let winv = g.inverse(w);
        for i in 0..4 {
            let conj = g.multiply(&g.multiply(w, &g.embed_c(&self.e_abstract[i])), &winv);
            let j = (0..4).find(|&j| conj == g.embed_c(&self.e_abstract[j]))?;
            out.push(j);
        }
        Some(out)
    }
}

/// Restriction of a permutation moving only `lo..=hi` (1-based) to that range.
fn restrict(p: &Perm, lo: usize, hi: usize) -> Perm {
    let img: Vec<u8> = (lo - 1..hi)
        .map(|i| (p.apply(i) - (lo - 1)) as u8)
        .collect();
    Perm::from_images(img).unwrap()
}

/// The ten named checks from the construction of the endomorphism exchanging
/// `x` and `y`, plus the normal-form bookkeeping they rely on. The one claim
/// that needs machinery beyond this crate ("B is not contained in the image")
/// is reported as skipped.
pub fn verify_section_3_5(seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("amalgam");
    let pg = match build_paper_g() {
        Ok(pg) => pg,
        Err(e) => {
            report.check("build-paper-g", false, format!("construction failed: {e}"));
            return report;
        }
    };
    report.check(
        "build-paper-g",
        true,
        "embeddings verified; |A| = 518400, |B| = 17280, |C| = 16",
    );
    let g = &pg.amalgam;

    // (1) b swaps e2 and e3 by conjugation, inside B
    let binv = pg.b.inv();
    let ok1 = pg.b.mul(&pg.e_in_b[1]).mul(&binv) == pg.e_in_b[2]
        && pg.b.mul(&pg.e_in_b[2]).mul(&binv) == pg.e_in_b[1];
    report.check(
        "b-swaps-e2-e3",
        ok1,
        "b e2 b^-1 = e3 and b e3 b^-1 = e2 in B",
    );

    // (2) b commutes with e1 and e4
    let ok2 = pg.b.mul(&pg.e_in_b[0]) == pg.e_in_b[0].mul(&pg.b)
        && pg.b.mul(&pg.e_in_b[3]) == pg.e_in_b[3].mul(&pg.b);
    report.check("b-commutes-e1-e4", ok2, "disjoint supports in B2 and B3");

    // (3) x acts as (e1 e2), y acts as (e3 e4), inside A
    let xinv = pg.x.inv();
    let yinv = pg.y.inv();
    let ok3 = pg.x.mul(&pg.e_in_a[0]).mul(&xinv) == pg.e_in_a[1]
        && pg.x.mul(&pg.e_in_a[1]).mul(&xinv) == pg.e_in_a[0]
        && pg.y.mul(&pg.e_in_a[2]).mul(&yinv) == pg.e_in_a[3]
        && pg.y.mul(&pg.e_in_a[3]).mul(&yinv) == pg.e_in_a[2];
    report.check(
        "x-acts-e1e2-y-acts-e3e4",
        ok3,
        "x e1 x^-1 = e2, x e2 x^-1 = e1, y e3 y^-1 = e4, y e4 y^-1 = e3",
    );

    // (4) sigma restricted to C induces (e1 e3)(e2 e4)
    let ok4 = (0..4).all(|i| pg.sigma(&pg.e_in_a[i]) == pg.e_in_a[[2, 3, 0, 1][i]]);
    report.check(
        "sigma-induces-e1e3-e2e4",
        ok4,
        "sigma permutes E as (e1 e3)(e2 e4)",
    );

    // (5) ad(u) restricted to C coincides with sigma, and the endomorphism
    // (sigma on A, ad(u) on B) passes the relator checker
    let u = pg.u();
    report.check(
        "u-normal-form-length-3",
        u.len() == 3,
        format!(
            "u = b x y b reduces to length {} (x y merges into one A-syllable)",
            u.len()
        ),
    );
    let ad_u_on_c = pg.action_on_e(&u);
    let ok5a = ad_u_on_c == Some(vec![2, 3, 0, 1]);
    report.check(
        "ad-u-on-C-equals-sigma",
        ok5a,
        format!("ad(u) permutes E as {ad_u_on_c:?}, expected (e1 e3)(e2 e4)"),
    );
    let images_a: Vec<AmalgamElement> = g
        .factor(Factor::A)
        .gens()
        .iter()
        .map(|s| g.embed(Factor::A, &pg.sigma(s)))
        .collect();
    let uinv = g.inverse(&u);
    let images_b: Vec<AmalgamElement> = g
        .factor(Factor::B)
        .gens()
        .iter()
        .map(|s| g.multiply(&g.multiply(&u, &g.embed(Factor::B, s)), &uinv))
        .collect();
    let endo = match define_endo(g, images_a, images_b) {
        Ok(endo) => {
            report.check(
                "sigma-bar-well-defined",
                true,
                "relator check and C-agreement pass",
            );
            Some(endo)
        }
        Err(e) => {
            report.check("sigma-bar-well-defined", false, format!("{e}"));
            None
        }
    };

    // (6) bxy acts on E as the 4-cycle (e3 e4 e2 e1), and (bxy)^5 acts as bxy
    let bxy = g.normalize(&[
        (Factor::B, pg.b.clone()),
        (Factor::A, pg.x.clone()),
        (Factor::A, pg.y.clone()),
    ]);
    let act = pg.action_on_e(&bxy);
    // (e3 e4 e2 e1): e1 -> e3, e3 -> e4, e4 -> e2, e2 -> e1
    let ok6a = act == Some(vec![2, 0, 3, 1]);
    let act5 = pg.action_on_e(&g.pow(&bxy, 5));
    let ok6b = act5 == act && act.is_some();
    report.check(
        "bxy-acts-as-4-cycle",
        ok6a,
        format!("bxy permutes E as {act:?}, expected the 4-cycle (e3 e4 e2 e1)"),
    );
    report.check(
        "bxy5-acts-as-bxy",
        ok6b,
        "the 4-cycle has order 4, so 5th power repeats",
    );

    // (7) sigma-bar preserves nontriviality of short reduced forms; swaps x, y
    if let Some(endo) = &endo {
        let x_elem = g.embed(Factor::A, &pg.x);
        let y_elem = g.embed(Factor::A, &pg.y);
        let swaps = endo.apply(&x_elem) == y_elem && endo.apply(&y_elem) == x_elem;
        report.check(
            "sigma-bar-swaps-x-y",
            swaps,
            "sigma-bar(x) = y and sigma-bar(y) = x",
        );

        let mut rng = SplitMix64::new(seed);
        let ae = g.factor(Factor::A).elements().unwrap();
        let be = g.factor(Factor::B).elements().unwrap();
        let mut failures = 0usize;
        let corpus = 200;
        for _ in 0..corpus {
            let len = 1 + rng.below(4);
            let mut factor = if rng.chance(1, 2) {
                Factor::A
            } else {
                Factor::B
            };
            let mut seq = Vec::with_capacity(len);
            for _ in 0..len {
                // raw element outside the edge group, so the form is reduced
                let raw = loop {
                    let pool = match factor {
                        Factor::A => &ae.list,
                        Factor::B => &be.list,
                    };
                    let cand = pool[rng.below(pool.len())].clone();
                    if g.embed(factor, &cand).len() == 1 {
                        break cand;
                    }
                };
                seq.push((factor, raw));
                factor = factor.other();
            }
            let elem = g.normalize(&seq);
            debug_assert_eq!(elem.len(), len);
            if endo.apply(&elem).is_identity() {
                failures += 1;
            }
        }
        report.check(
            "sigma-bar-preserves-nontriviality",
            failures == 0,
            format!("{corpus} seeded reduced forms of length <= 4, {failures} mapped to 1 (injectivity evidence, not proof)"),
        );
    } else {
        report.skip("sigma-bar-swaps-x-y", "sigma-bar was rejected");
        report.skip(
            "sigma-bar-preserves-nontriviality",
            "sigma-bar was rejected",
        );
    }

    // (8) the cycle-type obstruction: no conjugate of y lies in C
    let y_in_a2 = restrict(&pg.y, 7, 12);
    let ok8a = cycle_type(&y_in_a2) == vec![2, 2, 2];
    let allowed = [
        vec![1, 1, 1, 1, 1, 1],
        vec![2, 1, 1, 1, 1],
        vec![2, 2, 1, 1],
    ];
    let e3 = restrict(&pg.e_in_a[2], 7, 12);
    let e4 = restrict(&pg.e_in_a[3], 7, 12);
    let c_part = [Perm::identity(6), e3.clone(), e4.clone(), e3.mul(&e4)];
    let ok8b = c_part.iter().all(|p| allowed.contains(&cycle_type(p)));
    report.check(
        "y-cycle-type-obstruction",
        ok8a && ok8b,
        "y has type [2,2,2] in A2 = S6 while <e3, e4> only realizes [1^6], [2,1^4], [2,2,1^2]",
    );

    // (9) B1, B2, B3 pairwise non-isomorphic with trivial centers
    let b1 = closure(12, adjacent_transpositions(12, 1, 4), 100).unwrap();
    let b2 = closure(12, adjacent_transpositions(12, 5, 7), 100).unwrap();
    let b3 = closure(12, adjacent_transpositions(12, 8, 12), 1000).unwrap();
    let mut ok9 = true;
    let mut detail9 = Vec::new();
    for (name, grp) in [("B1", &b1), ("B2", &b2), ("B3", &b3)] {
        let z = grp.center().unwrap().order();
        if z != 1 {
            ok9 = false;
        }
        detail9.push(format!("{name}: order {}, center {z}", grp.order()));
    }
    for (na, ga, nb, gb) in [
        ("B1", &b1, "B2", &b2),
        ("B1", &b1, "B3", &b3),
        ("B2", &b2, "B3", &b3),
    ] {
        if is_isomorphic_small(ga, gb).unwrap() {
            ok9 = false;
            detail9.push(format!("{na} ~ {nb} unexpectedly"));
        }
    }
    report.check("b-factors-distinct-trivial-center", ok9, detail9.join("; "));

    // (10) u b u^-1 y x u b u^-1 acts on E exactly as (bxy)^5 b
    let b_elem = g.embed(Factor::B, &pg.b);
    let ubu = g.multiply(&g.multiply(&u, &b_elem), &uinv);
    let w1 = g.multiply(
        &g.multiply(
            &ubu,
            &g.multiply(&g.embed(Factor::A, &pg.y), &g.embed(Factor::A, &pg.x)),
        ),
        &ubu,
    );
    let w2 = g.multiply(&g.pow(&bxy, 5), &b_elem);
    let a1 = pg.action_on_e(&w1);
    let a2 = pg.action_on_e(&w2);
    report.check(
        "theta-u-conjugation-identity",
        a1 == a2 && a1.is_some(),
        format!("u b u^-1 y x u b u^-1 acts on E as {a1:?}; (bxy)^5 b acts as {a2:?}"),
    );

    report.skip(
        "b-not-in-image-of-sigma-bar",
        "deciding membership in the image requires machinery outside this toolkit; \
         the nontriviality corpus above is the implemented evidence",
    );
    report
}
