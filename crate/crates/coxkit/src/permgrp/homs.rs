use std::collections::HashMap;

use super::group::{closure, PermGroup};
use super::perm::Perm;
use super::PermError;

/// Finite presentation: `ngens` generators, relators as words whose letters
/// are signed 1-based generator indices (`-k` is the inverse of generator k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ngens: usize,
    pub relators: Vec<Vec<i32>>,
}

impl Presentation {
    pub fn new(ngens: usize, relators: Vec<Vec<i32>>) -> Result<Presentation, PermError> {
        for r in &relators {
            for &l in r {
                if l == 0 || l.unsigned_abs() as usize > ngens {
                    return Err(PermError::Parse(format!(
                        "relator letter {l} out of range for {ngens} generators"
                    )));
                }
            }
        }
        Ok(Presentation { ngens, relators })
    }

    /// Text format: `gens N` then one `rel <letters>` line per relator, with
    /// signed 1-based letters, e.g. `rel 1 2 -1 -2`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Presentation, PermError> {
        let mut ngens: Option<usize> = None;
        let mut relators = Vec::new();
        for (lno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            match it.next() {
                Some("gens") => {
                    let n = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| PermError::Parse(format!("line {}: bad gens", lno + 1)))?;
                    ngens = Some(n);
                }
                Some("rel") => {
                    let word: Result<Vec<i32>, _> = it
                        .map(|s| {
                            s.parse::<i32>().map_err(|_| {
                                PermError::Parse(format!("line {}: bad letter `{s}`", lno + 1))
                            })
                        })
                        .collect();
                    relators.push(word?);
                }
                Some(tok) => {
                    return Err(PermError::Parse(format!(
                        "line {}: unknown directive `{tok}`",
                        lno + 1
                    )))
                }
                None => {}
            }
        }
        let ngens = ngens.ok_or_else(|| PermError::Parse("missing `gens N` line".to_string()))?;
        Presentation::new(ngens, relators)
    }

    pub fn render(&self) -> String {
        let mut out = format!("gens {}\n", self.ngens);
        for r in &self.relators {
            out.push_str("rel");
            for l in r {
                out.push_str(&format!(" {l}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Evaluate a signed word at the given generator images.
pub fn eval_word(degree: usize, images: &[Perm], word: &[i32]) -> Perm {
    let mut acc = Perm::identity(degree);
    for &l in word {
        let g = &images[(l.unsigned_abs() - 1) as usize];
        acc = if l > 0 { acc.mul(g) } else { acc.mul(&g.inv()) };
    }
    acc
}

/// Checks whether `gens[i] -> images[i]` extends to a homomorphism of the
/// group generated by `gens`, by reconstructing the multiplication table:
/// images are assigned along a Cayley spanning tree and every Cayley edge is
/// verified. On success returns the elements paired with their images.
pub fn extend_homomorphism(
    gens: &[Perm],
    images: &[Perm],
    bound: usize,
) -> Result<Option<Vec<(Perm, Perm)>>, PermError> {
    assert_eq!(gens.len(), images.len());
    let src_degree = gens.first().map_or(1, Perm::degree);
    let dst_degree = images.first().map_or(1, Perm::degree);
    let id = Perm::identity(src_degree);
    let mut list = vec![(id.clone(), Perm::identity(dst_degree))];
    let mut index: HashMap<Perm, u32> = HashMap::new();
    index.insert(id, 0);
    let mut cursor = 0;
    while cursor < list.len() {
        for (gi, g) in gens.iter().enumerate() {
            let next = list[cursor].0.mul(g);
            let next_img = list[cursor].1.mul(&images[gi]);
            match index.get(&next) {
                Some(&i) => {
                    if list[i as usize].1 != next_img {
                        return Ok(None);
                    }
                }
                None => {
                    if list.len() >= bound {
                        return Err(PermError::BoundExceeded {
                            partial: list.len() + 1,
                        });
                    }
                    index.insert(next.clone(), list.len() as u32);
                    list.push((next, next_img));
                }
            }
        }
        cursor += 1;
    }
    Ok(Some(list))
}

/// Homomorphism and epimorphism counts from a finite presentation into a
/// finite group: tuples of generator images satisfying every relator, and
/// among those the tuples whose images generate all of `q`.
///
/// Generators are tried most-constrained first (by occurrence count in the
/// relators) and candidate images are filtered by order divisibility when a
/// relator is a pure power of a single generator.
pub fn hom_count(p: &Presentation, q: &PermGroup) -> Result<(u64, u64), PermError> {
    let elems = q.elements()?;
    let qn = elems.list.len();
    let degree = q.degree();

    // generator order: most relator occurrences first
    let mut occ = vec![0usize; p.ngens];
    for r in &p.relators {
        for &l in r {
            occ[(l.unsigned_abs() - 1) as usize] += 1;
        }
    }
    let mut gen_order: Vec<usize> = (0..p.ngens).collect();
    gen_order.sort_by_key(|&g| std::cmp::Reverse(occ[g]));
    let mut slot_of_gen = vec![0usize; p.ngens];
    for (slot, &g) in gen_order.iter().enumerate() {
        slot_of_gen[g] = slot;
    }

    // pure-power relators constrain candidate orders
    let mut exponent: Vec<Option<u64>> = vec![None; p.ngens];
    for r in &p.relators {
        let support: Vec<usize> = {
            let mut s: Vec<usize> = r.iter().map(|l| (l.unsigned_abs() - 1) as usize).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        if support.len() == 1 {
            let e: i64 = r.iter().map(|&l| if l > 0 { 1i64 } else { -1 }).sum();
            if e != 0 {
                let e = e.unsigned_abs();
                let g = support[0];
                exponent[g] = Some(match exponent[g] {
                    Some(prev) => num_integer::gcd(prev, e),
                    None => e,
                });
            }
        }
    }
    let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(p.ngens);
    for slot in 0..p.ngens {
        let g = gen_order[slot];
        let cands: Vec<u32> = (0..qn as u32)
            .filter(|&i| match exponent[g] {
                Some(e) => (elems.list[i as usize].order() as u64).divides(e),
                None => true,
            })
            .collect();
        candidates.push(cands);
    }

    // a relator can be checked once every generator in it has been assigned
    let mut check_at: Vec<Vec<&Vec<i32>>> = vec![Vec::new(); p.ngens.max(1)];
    for r in &p.relators {
        if r.is_empty() {
            continue;
        }
        let last = r
            .iter()
            .map(|l| slot_of_gen[(l.unsigned_abs() - 1) as usize])
            .max()
            .unwrap();
        check_at[last].push(r);
    }

    if p.ngens == 0 {
        let ok = p.relators.iter().all(|r| r.is_empty());
        let homs = if ok { 1 } else { 0 };
        let epis = if ok && qn == 1 { 1 } else { 0 };
        return Ok((homs, epis));
    }

    let mut assigned: Vec<Perm> = vec![Perm::identity(degree); p.ngens];
    let mut homs = 0u64;
    let mut epis = 0u64;
    let mut stack: Vec<usize> = vec![0]; // candidate cursor per slot
    while !stack.is_empty() {
        let slot = stack.len() - 1;
        let cursor = stack[slot];
        if cursor >= candidates[slot].len() {
            stack.pop();
            continue;
        }
        stack[slot] += 1;
        let cand = candidates[slot][cursor];
        assigned[gen_order[slot]] = elems.list[cand as usize].clone();
        let ok = check_at[slot]
            .iter()
            .all(|r| eval_word(degree, &assigned, r).is_identity());
        if !ok {
            continue;
        }
        if slot + 1 == p.ngens {
            homs += 1;
            let img = closure(degree, assigned.clone(), qn + 1)?;
            if img.order() == qn {
                epis += 1;
            }
        } else {
            stack.push(0);
        }
    }
    Ok((homs, epis))
}

trait Divides {
    fn divides(&self, e: u64) -> bool;
}

impl Divides for u64 {
    fn divides(&self, e: u64) -> bool {
        e.is_multiple_of(*self)
    }
}

/// Defining relators read off the Cayley graph: one relator per non-tree
/// edge `(g, s)`, namely `word(g) s word(g*s)^-1`. This presents the group
/// (the multiplication table is reconstructible from these relators), at the
/// price of redundancy; fine for the small point groups it is used on.
pub fn cayley_presentation(g: &PermGroup) -> Result<Presentation, PermError> {
    let elems = g.elements()?;
    let ngens = g.gens().len();
    let mut relators: Vec<Vec<i32>> = Vec::new();
    for (idx, e) in elems.list.iter().enumerate() {
        for (gi, gen) in g.gens().iter().enumerate() {
            let target = e.mul(gen);
            let tidx = elems.position(&target).unwrap();
            if elems.tree[tidx] == (idx as u32, gi as u8) && tidx != 0 {
                continue; // tree edge
            }
            let mut word: Vec<i32> = elems
                .word_for(idx)
                .into_iter()
                .map(|l| l as i32 + 1)
                .collect();
            word.push(gi as i32 + 1);
            for l in elems.word_for(tidx).into_iter().rev() {
                word.push(-(l as i32 + 1));
            }
            relators.push(word);
        }
    }
    Presentation::new(ngens, relators)
}

/// Isomorphism test for small materialized groups: backtracking search for
/// generator images, pruned by element-order statistics and by extending the
/// partial map through the multiplication table at every step.
pub fn is_isomorphic_small(g1: &PermGroup, g2: &PermGroup) -> Result<bool, PermError> {
    let e1 = g1.elements()?;
    let e2 = g2.elements()?;
    let n = e1.list.len();
    if n != e2.list.len() {
        return Ok(false);
    }
    let mut orders1: Vec<usize> = e1.list.iter().map(Perm::order).collect();
    let orders2: Vec<usize> = e2.list.iter().map(Perm::order).collect();
    let mut sorted2 = orders2.clone();
    orders1.sort_unstable();
    sorted2.sort_unstable();
    if orders1 != sorted2 {
        return Ok(false);
    }

    // small generating sequence for g1
    let mut gens: Vec<Perm> = Vec::new();
    loop {
        let have = closure(g1.degree(), gens.clone(), n + 1)?;
        if have.order() == n {
            break;
        }
        let have_elems = have.elements()?;
        let next = e1
            .list
            .iter()
            .find(|p| !have_elems.contains(p))
            .expect("closure smaller than group but no element missing")
            .clone();
        gens.push(next);
    }
    if gens.is_empty() {
        return Ok(true); // both trivial
    }

    let gen_orders: Vec<usize> = gens.iter().map(Perm::order).collect();
    let mut images: Vec<Perm> = Vec::new();
    search(&gens, &gen_orders, &orders2, e2, &mut images, n)
}

fn search(
    gens: &[Perm],
    gen_orders: &[usize],
    orders2: &[usize],
    e2: &super::group::Elements,
    images: &mut Vec<Perm>,
    n: usize,
) -> Result<bool, PermError> {
    let k = images.len();
    if k == gens.len() {
        if let Some(pairs) = extend_homomorphism(gens, images, n + 1)? {
            if pairs.len() == n {
                let mut img_set: Vec<&Perm> = pairs.iter().map(|(_, i)| i).collect();
                img_set.sort_unstable();
                img_set.dedup();
                return Ok(img_set.len() == n);
            }
        }
        return Ok(false);
    }
    for (i, cand) in e2.list.iter().enumerate() {
        if orders2[i] != gen_orders[k] {
            continue;
        }
        images.push(cand.clone());
        // prune: partial map must already be consistent
        let partial = extend_homomorphism(&gens[..=k], images, n + 1)?;
        let viable = match partial {
            Some(pairs) => {
                // injective on the subgroup generated so far
                let mut img: Vec<&Perm> = pairs.iter().map(|(_, i)| i).collect();
                img.sort_unstable();
                img.dedup();
                img.len() == pairs.len()
            }
            None => false,
        };
        if viable && search(gens, gen_orders, orders2, e2, images, n)? {
            return Ok(true);
        }
        images.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::symmetric(3)
    }

    #[test]
    fn hom_count_involution_into_s3() {
        // <s | s^2> -> S3: identity and the 3 transpositions; none generate S3
        let p = Presentation::new(1, vec![vec![1, 1]]).unwrap();
        assert_eq!(hom_count(&p, &s3()).unwrap(), (4, 0));
    }

    #[test]
    fn hom_count_into_trivial_group() {
        let p = Presentation::new(1, vec![vec![1, 1]]).unwrap();
        let t = PermGroup::trivial(1);
        assert_eq!(hom_count(&p, &t).unwrap(), (1, 1));
    }

    #[test]
    fn hom_count_infinite_dihedral_into_z2() {
        // <a,b | a^2, b^2> -> Z/2: all four image pairs work, three are onto
        let p = Presentation::new(2, vec![vec![1, 1], vec![2, 2]]).unwrap();
        let z2 = closure(2, vec![Perm::parse(2, "(1 2)").unwrap()], 10).unwrap();
        assert_eq!(hom_count(&p, &z2).unwrap(), (4, 3));
    }

    #[test]
    fn hom_count_no_generators() {
        let p = Presentation::new(0, vec![]).unwrap();
        assert_eq!(hom_count(&p, &s3()).unwrap(), (1, 0));
        let t = PermGroup::trivial(1);
        assert_eq!(hom_count(&p, &t).unwrap(), (1, 1));
    }

    #[test]
    fn hom_count_multiplicative_over_product() {
        let p = Presentation::new(2, vec![vec![1, 1], vec![2, 2, 2]]).unwrap();
        let a = s3();
        let b = closure(4, vec![Perm::parse(4, "(1 2 3 4)").unwrap()], 10).unwrap();
        let prod = a.direct_product(&b);
        let (ha, _) = hom_count(&p, &a).unwrap();
        let (hb, _) = hom_count(&p, &b).unwrap();
        let (hp, _) = hom_count(&p, &prod).unwrap();
        assert_eq!(hp, ha * hb);
    }

    #[test]
    fn cayley_presentation_presents_the_group() {
        let g = s3();
        let p = cayley_presentation(&g).unwrap();
        // every relator must evaluate to the identity at the original gens
        for r in &p.relators {
            assert!(eval_word(3, g.gens(), r).is_identity());
        }
        // and the presented group has the same hom counts into small targets
        let z2 = closure(2, vec![Perm::parse(2, "(1 2)").unwrap()], 10).unwrap();
        // S3 -> Z2: sign map and trivial map on (s, 3-cycle) images: 2 homs
        assert_eq!(hom_count(&p, &z2).unwrap().0, 2);
    }

    #[test]
    fn iso_small_examples() {
        let s4a = PermGroup::symmetric(4);
        // S4 acting on shifted points
        let s4b = closure(
            6,
            vec![
                Perm::parse(6, "(3 4)").unwrap(),
                Perm::parse(6, "(3 4 5 6)").unwrap(),
            ],
            100,
        )
        .unwrap();
        assert!(is_isomorphic_small(&s4a, &s4b).unwrap());

        let z4 = closure(4, vec![Perm::parse(4, "(1 2 3 4)").unwrap()], 10).unwrap();
        let v4 = closure(
            4,
            vec![
                Perm::parse(4, "(1 2)").unwrap(),
                Perm::parse(4, "(3 4)").unwrap(),
            ],
            10,
        )
        .unwrap();
        assert!(!is_isomorphic_small(&z4, &v4).unwrap());

        let s3a = s3();
        let s5 = PermGroup::symmetric(5);
        assert!(!is_isomorphic_small(&s3a, &s4a).unwrap());
        assert!(!is_isomorphic_small(&s3a, &s5).unwrap());
        assert!(!is_isomorphic_small(&s4a, &s5).unwrap());
    }

    #[test]
    fn presentation_text_round_trip() {
        let p = Presentation::new(2, vec![vec![1, 1], vec![2, 2], vec![1, 2, -1, -2]]).unwrap();
        let q = Presentation::parse(&p.render()).unwrap();
        assert_eq!(p, q);
    }
}
