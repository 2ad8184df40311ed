use std::collections::HashMap;
use std::sync::OnceLock;

use super::perm::{cycle_type, Perm};
use super::PermError;

/// Default closure bound; groups past this size are out of desk scale.
pub const DEFAULT_BOUND: usize = 2_000_000;

/// Materialized element set of a group, in breadth-first order from the
/// identity, together with the spanning tree of the Cayley graph used to
/// decompose elements into generator words.
#[derive(Debug)]
pub struct Elements {
    pub list: Vec<Perm>,
    pub index: HashMap<Perm, u32>,
    /// `tree[i] = (parent, gen)` with `list[i] = list[parent] * gens[gen]`;
    /// entry 0 (the identity) is `(0, 0)` and unused.
    pub tree: Vec<(u32, u8)>,
}

impl Elements {
    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Word in the group generators for the element at `idx` (tree path).
    /// Only available for groups materialized by closure, not for groups
    /// constructed from an explicit element set.
    pub fn word_for(&self, idx: usize) -> Vec<u8> {
        assert_eq!(
            self.tree.len(),
            self.list.len(),
            "no Cayley tree: group was built from an explicit element set"
        );
        let mut word = Vec::new();
        let mut cur = idx as u32;
        while cur != 0 {
            let (parent, gen) = self.tree[cur as usize];
            word.push(gen);
            cur = parent;
        }
        word.reverse();
        word
    }
}

/// Finite permutation group given by generators, with a lazily materialized
/// element set. Once materialized the group is immutable and shareable.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elems: OnceLock<Elements>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup, PermError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup {
            degree,
            gens,
            elems: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    /// Full symmetric group on `1..=degree` via `(1 2)` and an n-cycle.
    pub fn symmetric(degree: usize) -> PermGroup {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::from_cycles(degree, &[vec![1, 2]]).unwrap());
        }
        if degree >= 3 {
            gens.push(Perm::from_cycles(degree, &[(1..=degree).collect()]).unwrap());
        }
        PermGroup::new(degree, gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    /// Breadth-first closure of the generators, stopping with an error if more
    /// than `bound` elements appear.
    pub fn materialize(&self, bound: usize) -> Result<&Elements, PermError> {
        if let Some(e) = self.elems.get() {
            return Ok(e);
        }
        let id = Perm::identity(self.degree);
        let mut list = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut tree = vec![(0u32, 0u8)];
        let mut cursor = 0usize;
        while cursor < list.len() {
            for (gi, g) in self.gens.iter().enumerate() {
                // right-multiplication keeps tree words in generator order
                let next = list[cursor].mul(g);
                if !index.contains_key(&next) {
                    if list.len() >= bound {
                        return Err(PermError::BoundExceeded {
                            partial: list.len() + 1,
                        });
                    }
                    index.insert(next.clone(), list.len() as u32);
                    tree.push((cursor as u32, gi as u8));
                    list.push(next);
                }
            }
            cursor += 1;
        }
        let _ = self.elems.set(Elements { list, index, tree });
        Ok(self.elems.get().unwrap())
    }

    /// Materialize with the default desk-scale bound.
    pub fn elements(&self) -> Result<&Elements, PermError> {
        self.materialize(DEFAULT_BOUND)
    }

    /// Group order. Panics if the group exceeds the default bound; use
    /// [`PermGroup::materialize`] for explicit control.
    pub fn order(&self) -> usize {
        self.elements()
            .expect("group exceeds desk-scale bound")
            .list
            .len()
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, PermError> {
        Ok(p.degree() == self.degree && self.elements()?.contains(p))
    }

    /// Construct with an already-known element set (no closure run).
    fn from_element_list(degree: usize, gens: Vec<Perm>, list: Vec<Perm>) -> PermGroup {
        let mut index = HashMap::new();
        for (i, p) in list.iter().enumerate() {
            index.insert(p.clone(), i as u32);
        }
        let g = PermGroup {
            degree,
            gens,
            elems: OnceLock::new(),
        };
        // no Cayley tree for explicit element sets; word_for refuses to run
        let _ = g.elems.set(Elements {
            list,
            index,
            tree: Vec::new(),
        });
        g
    }

    /// Center `{z : zg = gz for all g}` as a new group on the same points.
    pub fn center(&self) -> Result<PermGroup, PermError> {
        let elems = self.elements()?;
        let central: Vec<Perm> = elems
            .list
            .iter()
            .filter(|z| self.gens.iter().all(|g| z.mul(g) == g.mul(z)))
            .cloned()
            .collect();
        Ok(PermGroup::from_element_list(
            self.degree,
            central.clone(),
            central,
        ))
    }

    /// Centralizer of `g`, which must lie in the group.
    pub fn centralizer_element(&self, g: &Perm) -> Result<PermGroup, PermError> {
        let elems = self.elements()?;
        if !elems.contains(g) {
            return Err(PermError::ElementNotInGroup);
        }
        let cent: Vec<Perm> = elems
            .list
            .iter()
            .filter(|h| h.mul(g) == g.mul(h))
            .cloned()
            .collect();
        Ok(PermGroup::from_element_list(
            self.degree,
            cent.clone(),
            cent,
        ))
    }

    fn check_subgroup(&self, h: &PermGroup) -> Result<(), PermError> {
        if h.degree != self.degree {
            return Err(PermError::DegreeMismatch(self.degree, h.degree));
        }
        let elems = self.elements()?;
        for p in &h.elements()?.list {
            if !elems.contains(p) {
                return Err(PermError::NotASubgroup);
            }
        }
        Ok(())
    }

    /// Whether some `g` in the group conjugates `h1` onto `h2`. Brute force
    /// over the group after pruning by order and element cycle types.
    pub fn are_conjugate_subgroups(
        &self,
        h1: &PermGroup,
        h2: &PermGroup,
    ) -> Result<bool, PermError> {
        self.check_subgroup(h1)?;
        self.check_subgroup(h2)?;
        let e1 = h1.elements()?;
        let e2 = h2.elements()?;
        if e1.list.len() != e2.list.len() {
            return Ok(false);
        }
        let mut types1: Vec<Vec<usize>> = e1.list.iter().map(cycle_type).collect();
        let mut types2: Vec<Vec<usize>> = e2.list.iter().map(cycle_type).collect();
        types1.sort();
        types2.sort();
        if types1 != types2 {
            return Ok(false);
        }
        for g in &self.elements()?.list {
            let ginv = g.inv();
            if e1.list.iter().all(|h| e2.contains(&g.mul(h).mul(&ginv))) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Direct product on disjoint point sets; `self` keeps its points,
    /// `other` is shifted past them. Use [`PermGroup::embed_left`] /
    /// [`PermGroup::embed_right`] to map elements of the factors in.
    pub fn direct_product(&self, other: &PermGroup) -> PermGroup {
        let degree = self.degree + other.degree;
        let mut gens: Vec<Perm> = self.gens.iter().map(|g| g.extended(degree)).collect();
        gens.extend(other.gens.iter().map(|g| g.shifted(self.degree, degree)));
        PermGroup::new(degree, gens).unwrap()
    }

    pub fn embed_left(&self, other_degree: usize, p: &Perm) -> Perm {
        p.extended(self.degree + other_degree)
    }

    pub fn embed_right(&self, other: &PermGroup, p: &Perm) -> Perm {
        p.shifted(self.degree, self.degree + other.degree)
    }

    /// Subgroup of the same ambient points generated by `gens`.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup, PermError> {
        PermGroup::new(self.degree, gens)
    }

    /// All subgroups up to conjugacy, smallest order first. Built bottom-up by
    /// extending known subgroups one generator at a time; intended for the
    /// small groups (order <= a few hundred) used in formula semantics tests.
    pub fn subgroup_conjugacy_representatives(&self) -> Result<Vec<PermGroup>, PermError> {
        let elems = self.elements()?;
        let mut all: Vec<Vec<Perm>> = Vec::new();
        let mut seen: HashMap<Vec<Perm>, ()> = HashMap::new();
        let trivial = vec![Perm::identity(self.degree)];
        seen.insert(trivial.clone(), ());
        all.push(trivial);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let base = all[i].clone();
            for x in &elems.list {
                if base.contains(x) {
                    continue;
                }
                let mut gens: Vec<Perm> =
                    base.iter().filter(|p| !p.is_identity()).cloned().collect();
                gens.push(x.clone());
                let sub = self.subgroup(gens)?;
                let mut sorted = sub.elements()?.list.clone();
                sorted.sort();
                if !seen.contains_key(&sorted) {
                    seen.insert(sorted.clone(), ());
                    all.push(sorted);
                    frontier.push(all.len() - 1);
                }
            }
        }
        all.sort_by_key(|s| s.len());
        // keep one representative per conjugacy class
        let mut reps: Vec<PermGroup> = Vec::new();
        'outer: for set in all {
            let cand = PermGroup::from_element_list(self.degree, set.clone(), set);
            for r in &reps {
                if r.order() == cand.order() && self.are_conjugate_subgroups(r, &cand)? {
                    continue 'outer;
                }
            }
            reps.push(cand);
        }
        Ok(reps)
    }
}

/// Closure of a generator list into a fully materialized group.
pub fn closure(degree: usize, gens: Vec<Perm>, bound: usize) -> Result<PermGroup, PermError> {
    let g = PermGroup::new(degree, gens)?;
    g.materialize(bound)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::symmetric(3)
    }

    #[test]
    fn closure_s3() {
        // oracle: brute-force closure of {(1 2), (1 2 3)} has 6 elements
        let g = s3();
        assert_eq!(g.order(), 6);
        let e = g.elements().unwrap();
        // closed under product and inverse, identity present
        for a in &e.list {
            assert!(e.contains(&a.inv()));
            for b in &e.list {
                assert!(e.contains(&a.mul(b)));
            }
        }
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn bound_exceeded_reports_partial() {
        let g = PermGroup::symmetric(5);
        match g.materialize(10) {
            Err(PermError::BoundExceeded { partial }) => assert!(partial > 10),
            other => panic!("expected bound error, got {other:?}"),
        }
    }

    #[test]
    fn center_of_s3_is_trivial_and_abelian_is_everything() {
        assert_eq!(s3().center().unwrap().order(), 1);
        let c = closure(
            8,
            (0..4)
                .map(|k| Perm::from_cycles(8, &[vec![2 * k + 1, 2 * k + 2]]).unwrap())
                .collect(),
            100,
        )
        .unwrap();
        // (Z/2)^4 is abelian: the center is the whole group
        assert_eq!(c.center().unwrap().order(), 16);
    }

    #[test]
    fn centralizer_in_a_product_is_the_product_of_centralizers() {
        let g1 = s3();
        let g2 = PermGroup::symmetric(4);
        let prod = g1.direct_product(&g2);
        let samples = [
            ("(1 2 3)", "(1 2)(3 4)"),
            ("(1 2)", "(1 2 3 4)"),
            ("()", "(2 3 4)"),
            ("(1 3)", "()"),
        ];
        for (w1, w2) in samples {
            let a = Perm::parse(3, w1).unwrap();
            let b = Perm::parse(4, w2).unwrap();
            let combined = g1.embed_left(4, &a).mul(&g1.embed_right(&g2, &b));
            let cent = prod.centralizer_element(&combined).unwrap();
            let c1 = g1.centralizer_element(&a).unwrap();
            let c2 = g2.centralizer_element(&b).unwrap();
            assert_eq!(cent.order(), c1.order() * c2.order());
            // and every element factors through the two centralizers
            for z in &cent.elements().unwrap().list {
                let left: Vec<u8> = z.images()[..3].to_vec();
                let right: Vec<u8> = z.images()[3..].iter().map(|&p| p - 3).collect();
                assert!(c1.contains(&Perm::from_images(left).unwrap()).unwrap());
                assert!(c2.contains(&Perm::from_images(right).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn centralizer_in_s3() {
        let g = s3();
        let c3 = Perm::parse(3, "(1 2 3)").unwrap();
        assert_eq!(g.centralizer_element(&c3).unwrap().order(), 3);
        assert_eq!(
            g.centralizer_element(&Perm::identity(3)).unwrap().order(),
            6
        );
        let z3 = closure(3, vec![c3], 10).unwrap();
        assert!(matches!(
            z3.centralizer_element(&Perm::parse(3, "(1 2)").unwrap()),
            Err(PermError::ElementNotInGroup)
        ));
    }

    #[test]
    fn conjugate_subgroups_in_s3_and_s4() {
        let g3 = s3();
        let h1 = g3.subgroup(vec![Perm::parse(3, "(1 2)").unwrap()]).unwrap();
        let h2 = g3.subgroup(vec![Perm::parse(3, "(1 3)").unwrap()]).unwrap();
        assert!(g3.are_conjugate_subgroups(&h1, &h1).unwrap());
        assert!(g3.are_conjugate_subgroups(&h1, &h2).unwrap());

        let g4 = PermGroup::symmetric(4);
        let k1 = g4.subgroup(vec![Perm::parse(4, "(1 2)").unwrap()]).unwrap();
        let k2 = g4
            .subgroup(vec![Perm::parse(4, "(1 2)(3 4)").unwrap()])
            .unwrap();
        assert!(!g4.are_conjugate_subgroups(&k1, &k2).unwrap());
    }

    #[test]
    fn direct_product_and_embeddings() {
        let a = s3();
        let b = PermGroup::symmetric(4);
        let p = a.direct_product(&b);
        assert_eq!(p.degree(), 7);
        assert_eq!(p.order(), 6 * 24);
        let x = a.embed_left(4, &Perm::parse(3, "(1 2)").unwrap());
        let y = a.embed_right(&b, &Perm::parse(4, "(1 2 3 4)").unwrap());
        // disjoint supports commute
        assert_eq!(x.mul(&y), y.mul(&x));
        assert!(p.contains(&x.mul(&y)).unwrap());
    }

    #[test]
    fn subgroup_conjugacy_is_an_equivalence() {
        let g = PermGroup::symmetric(4);
        let subs: Vec<PermGroup> = [
            vec!["(1 2)"],
            vec!["(1 3)"],
            vec!["(1 2)(3 4)"],
            vec!["(1 2 3)"],
            vec!["(1 2 3 4)"],
            vec!["(1 2)", "(3 4)"],
        ]
        .iter()
        .map(|gens| {
            g.subgroup(gens.iter().map(|s| Perm::parse(4, s).unwrap()).collect())
                .unwrap()
        })
        .collect();
        for a in &subs {
            assert!(g.are_conjugate_subgroups(a, a).unwrap());
            for b in &subs {
                assert_eq!(
                    g.are_conjugate_subgroups(a, b).unwrap(),
                    g.are_conjugate_subgroups(b, a).unwrap()
                );
                for c in &subs {
                    if g.are_conjugate_subgroups(a, b).unwrap()
                        && g.are_conjugate_subgroups(b, c).unwrap()
                    {
                        assert!(g.are_conjugate_subgroups(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_type_is_conjugation_invariant() {
        let g = PermGroup::symmetric(5);
        let elems = g.elements().unwrap();
        for (i, x) in elems.list.iter().enumerate().step_by(7) {
            for h in elems.list.iter().skip(i % 3).step_by(11) {
                assert_eq!(cycle_type(&x.conj(h)), cycle_type(x));
            }
        }
    }

    #[test]
    fn subgroup_classes_of_s3() {
        // S3 has 4 subgroup conjugacy classes: 1, Z2, Z3, S3
        let reps = s3().subgroup_conjugacy_representatives().unwrap();
        let orders: Vec<usize> = reps.iter().map(|r| r.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }
}
