//! Amalgamated products `A *_C B` of finite permutation groups, with reduced
//! normal forms and endomorphisms given by generator images.
//!
//! Elements are stored as `c * t1 * t2 * ... * tk` where `c` lies in the
//! abstract edge group `C`, the syllables `t_i` are non-identity coset
//! representatives alternating between the two factors, and the
//! representative of a coset `C x` is its lexicographically least element
//! (image-array order), so the identity represents the trivial coset and
//! normal forms are deterministic. Uniqueness of this form is the normal form
//! theorem for amalgams; equality of elements is literal equality of forms.

mod paper_g;

pub use paper_g::{build_paper_g, verify_section_3_5, PaperG};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::permgrp::{extend_homomorphism, Elements, Perm, PermError, PermGroup, DEFAULT_BOUND};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AmalgamError {
    #[error("embedding of C into {0} is not injective")]
    NotInjective(&'static str),
    #[error("embedding of C into {0} is not a homomorphism")]
    NotHomomorphism(&'static str),
    #[error("generator images violate a relator of {factor}: {relator}")]
    RelatorViolated {
        factor: &'static str,
        relator: String,
    },
    #[error("induced maps disagree on C at generator {0}")]
    DisagreeOnC(usize),
    #[error("embedded image lies outside the factor group")]
    ImageOutsideFactor,
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    A,
    B,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::A => Factor::B,
            Factor::B => Factor::A,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::A => write!(f, "A"),
            Factor::B => write!(f, "B"),
        }
    }
}

/// Reduced normal form `c * t1 * ... * tk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmalgamElement {
    pub c: Perm,
    pub syllables: Vec<(Factor, Perm)>,
}

impl AmalgamElement {
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.c.is_identity() && self.syllables.is_empty()
    }

    pub fn first_factor(&self) -> Option<Factor> {
        self.syllables.first().map(|&(f, _)| f)
    }

    pub fn last_factor(&self) -> Option<Factor> {
        self.syllables.last().map(|&(f, _)| f)
    }
}

impl fmt::Display for AmalgamElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[c: {}", self.c)?;
        for (factor, t) in &self.syllables {
            write!(f, " | {factor}: {t}")?;
        }
        write!(f, "]")
    }
}

/// `A *_C B` with both factors and the edge group materialized, and the
/// embeddings of `C` stored as full element maps.
#[derive(Debug)]
pub struct FinAmalgam {
    a: PermGroup,
    b: PermGroup,
    c: PermGroup,
    /// abstract C element -> its image in A (resp. B)
    into_a: HashMap<Perm, Perm>,
    into_b: HashMap<Perm, Perm>,
}

/// Build the amalgam; the embeddings are given by the images of the
/// generators of `C` and are verified to be injective homomorphisms landing
/// inside the factors.
pub fn make_amalgam(
    a: PermGroup,
    b: PermGroup,
    c: PermGroup,
    embed_a: &[Perm],
    embed_b: &[Perm],
) -> Result<FinAmalgam, AmalgamError> {
    assert_eq!(embed_a.len(), c.gens().len(), "one image per C generator");
    assert_eq!(embed_b.len(), c.gens().len(), "one image per C generator");
    let c_order = c.elements()?.list.len();
    let build_map = |factor: &PermGroup,
                     images: &[Perm],
                     name: &'static str|
     -> Result<HashMap<Perm, Perm>, AmalgamError> {
        if c.gens().is_empty() {
            let mut map = HashMap::new();
            map.insert(Perm::identity(c.degree()), Perm::identity(factor.degree()));
            return Ok(map);
        }
        let pairs = extend_homomorphism(c.gens(), images, DEFAULT_BOUND)?
            .ok_or(AmalgamError::NotHomomorphism(name))?;
        let mut distinct: Vec<&Perm> = pairs.iter().map(|(_, i)| i).collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != c_order {
            return Err(AmalgamError::NotInjective(name));
        }
        let felems = factor.elements()?;
        for (_, img) in &pairs {
            if !felems.contains(img) {
                return Err(AmalgamError::ImageOutsideFactor);
            }
        }
        Ok(pairs.into_iter().collect())
    };
    let into_a = build_map(&a, embed_a, "A")?;
    let into_b = build_map(&b, embed_b, "B")?;
    a.elements()?;
    b.elements()?;
    Ok(FinAmalgam {
        a,
        b,
        c,
        into_a,
        into_b,
    })
}

impl FinAmalgam {
    pub fn factor(&self, f: Factor) -> &PermGroup {
        match f {
            Factor::A => &self.a,
            Factor::B => &self.b,
        }
    }

    pub fn edge_group(&self) -> &PermGroup {
        &self.c
    }

    pub fn embed_c_into(&self, f: Factor, c_elem: &Perm) -> &Perm {
        let map = match f {
            Factor::A => &self.into_a,
            Factor::B => &self.into_b,
        };
        map.get(c_elem).expect("element not in the edge group")
    }

    pub fn identity(&self) -> AmalgamElement {
        AmalgamElement {
            c: Perm::identity(self.c.degree()),
            syllables: Vec::new(),
        }
    }

    /// The element of the amalgam represented by `c` in the edge group.
    pub fn embed_c(&self, c_elem: &Perm) -> AmalgamElement {
        AmalgamElement {
            c: c_elem.clone(),
            syllables: Vec::new(),
        }
    }

    /// The element represented by `x` in factor `f`.
    pub fn embed(&self, f: Factor, x: &Perm) -> AmalgamElement {
        self.left_mul_raw(f, x, &self.identity())
    }

    /// The transversal of `embed(C)` in a factor: one representative per
    /// coset, each the lexicographically least element of its coset, with the
    /// identity representing the trivial coset.
    pub fn transversal(&self, f: Factor) -> Result<Vec<Perm>, AmalgamError> {
        let elems = self.factor(f).elements()?;
        let mut reps: Vec<Perm> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for x in &elems.list {
            if seen.contains(x) {
                continue;
            }
            let (_, t) = self.coset_factor(f, x);
            for c in &self.c.elements()?.list {
                seen.insert(self.embed_c_into(f, c).mul(&t));
            }
            reps.push(t);
        }
        reps.sort();
        Ok(reps)
    }

    /// Factor `x` as `embed(c) * t` with `t` the lexicographically least
    /// element of the coset `embed(C) x`; returns `(c, t)` with `c` abstract.
    fn coset_factor(&self, f: Factor, x: &Perm) -> (Perm, Perm) {
        let ce = self.c.elements().expect("edge group materialized");
        let mut best: Option<(usize, Perm)> = None;
        for (i, cc) in ce.list.iter().enumerate() {
            let cand = self.embed_c_into(f, cc).mul(x);
            match &best {
                Some((_, cur)) if *cur <= cand => {}
                _ => best = Some((i, cand)),
            }
        }
        let (ci, t) = best.expect("edge group is nonempty");
        (ce.list[ci].inv(), t)
    }

    /// Left-multiply a raw factor element onto a normal form.
    fn left_mul_raw(&self, f: Factor, r: &Perm, e: &AmalgamElement) -> AmalgamElement {
        debug_assert!(
            self.factor(f)
                .elements()
                .map(|fe| fe.contains(r))
                .unwrap_or(false),
            "raw element does not lie in factor {f}"
        );
        let c_in_f = self.embed_c_into(f, &e.c);
        if e.first_factor() == Some(f) {
            let combined = r.mul(c_in_f).mul(&e.syllables[0].1);
            let (c, t) = self.coset_factor(f, &combined);
            let mut syllables = Vec::with_capacity(e.syllables.len());
            if !t.is_identity() {
                syllables.push((f, t));
            }
            syllables.extend_from_slice(&e.syllables[1..]);
            AmalgamElement { c, syllables }
        } else {
            let combined = r.mul(c_in_f);
            let (c, t) = self.coset_factor(f, &combined);
            let mut syllables = Vec::with_capacity(e.syllables.len() + 1);
            if !t.is_identity() {
                syllables.push((f, t));
            }
            syllables.extend_from_slice(&e.syllables);
            AmalgamElement { c, syllables }
        }
    }

    /// Reduced normal form of a product of raw factor elements.
    pub fn normalize(&self, seq: &[(Factor, Perm)]) -> AmalgamElement {
        let mut acc = self.identity();
        for (f, r) in seq.iter().rev() {
            acc = self.left_mul_raw(*f, r, &acc);
        }
        acc
    }

    pub fn multiply(&self, e1: &AmalgamElement, e2: &AmalgamElement) -> AmalgamElement {
        let mut acc = e2.clone();
        for (f, t) in e1.syllables.iter().rev() {
            acc = self.left_mul_raw(*f, t, &acc);
        }
        if !e1.c.is_identity() {
            let c_in_a = self.embed_c_into(Factor::A, &e1.c).clone();
            acc = self.left_mul_raw(Factor::A, &c_in_a, &acc);
        }
        acc
    }

    pub fn inverse(&self, e: &AmalgamElement) -> AmalgamElement {
        let mut seq: Vec<(Factor, Perm)> = e
            .syllables
            .iter()
            .rev()
            .map(|(f, t)| (*f, t.inv()))
            .collect();
        seq.push((Factor::A, self.embed_c_into(Factor::A, &e.c.inv()).clone()));
        self.normalize(&seq)
    }

    pub fn conj(&self, e: &AmalgamElement, by: &AmalgamElement) -> AmalgamElement {
        self.multiply(&self.multiply(by, e), &self.inverse(by))
    }

    pub fn pow(&self, e: &AmalgamElement, n: usize) -> AmalgamElement {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.multiply(&acc, e);
        }
        acc
    }
}

/// Endomorphism of the amalgam determined by images of the factor generators.
#[derive(Debug)]
pub struct AmalgamEndo<'g> {
    amalgam: &'g FinAmalgam,
    images_a: Vec<AmalgamElement>,
    images_b: Vec<AmalgamElement>,
}

/// Verify that generator images define an endomorphism and return it.
///
/// The relator check reconstructs each factor's multiplication table: images
/// are propagated along the Cayley spanning tree and every Cayley edge is
/// checked, which is exactly the Cayley-graph defining presentation of the
/// factor. Afterward the two induced maps must agree on the edge group.
pub fn define_endo<'g>(
    g: &'g FinAmalgam,
    images_a: Vec<AmalgamElement>,
    images_b: Vec<AmalgamElement>,
) -> Result<AmalgamEndo<'g>, AmalgamError> {
    assert_eq!(
        images_a.len(),
        g.a.gens().len(),
        "one image per A generator"
    );
    assert_eq!(
        images_b.len(),
        g.b.gens().len(),
        "one image per B generator"
    );
    let table_a = check_factor_relators(g, Factor::A, &images_a, "A")?;
    let table_b = check_factor_relators(g, Factor::B, &images_b, "B")?;
    // agreement on C
    let ae = g.a.elements()?;
    let be = g.b.elements()?;
    for (ci, _) in g.c.gens().iter().enumerate() {
        let cgen = &g.c.gens()[ci];
        let via_a = &table_a[ae.position(g.embed_c_into(Factor::A, cgen)).unwrap()];
        let via_b = &table_b[be.position(g.embed_c_into(Factor::B, cgen)).unwrap()];
        if via_a != via_b {
            return Err(AmalgamError::DisagreeOnC(ci + 1));
        }
    }
    Ok(AmalgamEndo {
        amalgam: g,
        images_a,
        images_b,
    })
}

/// Propagate images along the Cayley tree of one factor and verify every
/// multiplication-table edge; returns the image of every factor element.
fn check_factor_relators(
    g: &FinAmalgam,
    f: Factor,
    images: &[AmalgamElement],
    name: &'static str,
) -> Result<Vec<AmalgamElement>, AmalgamError> {
    let elems = g.factor(f).elements()?;
    let gens = g.factor(f).gens();
    let mut table: Vec<AmalgamElement> = Vec::with_capacity(elems.list.len());
    table.push(g.identity());
    for idx in 1..elems.list.len() {
        let (parent, gen) = elems.tree[idx];
        let img = g.multiply(&table[parent as usize], &images[gen as usize]);
        table.push(img);
    }
    for (idx, e) in elems.list.iter().enumerate() {
        for (gi, gen) in gens.iter().enumerate() {
            let target = elems.position(&e.mul(gen)).unwrap();
            if g.multiply(&table[idx], &images[gi]) != table[target] {
                return Err(AmalgamError::RelatorViolated {
                    factor: name,
                    relator: render_relator(elems, idx, gi, target),
                });
            }
        }
    }
    Ok(table)
}

fn render_relator(elems: &Elements, idx: usize, gen: usize, target: usize) -> String {
    let mut parts: Vec<String> = elems
        .word_for(idx)
        .into_iter()
        .map(|l| format!("g{}", l + 1))
        .collect();
    parts.push(format!("g{}", gen + 1));
    for l in elems.word_for(target).into_iter().rev() {
        parts.push(format!("g{}^-1", l + 1));
    }
    parts.join(" ")
}

impl AmalgamEndo<'_> {
    fn image_of_factor_elem(&self, f: Factor, x: &Perm) -> AmalgamElement {
        let elems = self.amalgam.factor(f).elements().expect("materialized");
        let images = match f {
            Factor::A => &self.images_a,
            Factor::B => &self.images_b,
        };
        let idx = elems.position(x).expect("element lies in the factor");
        let mut acc = self.amalgam.identity();
        for l in elems.word_for(idx) {
            acc = self.amalgam.multiply(&acc, &images[l as usize]);
        }
        acc
    }

    /// Apply by substituting generator images and renormalizing.
    pub fn apply(&self, e: &AmalgamElement) -> AmalgamElement {
        let c_in_a = self.amalgam.embed_c_into(Factor::A, &e.c).clone();
        let mut acc = self.image_of_factor_elem(Factor::A, &c_in_a);
        for (f, t) in &e.syllables {
            let img = self.image_of_factor_elem(*f, t);
            acc = self.amalgam.multiply(&acc, &img);
        }
        acc
    }
}
