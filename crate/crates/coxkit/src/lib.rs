//! Exact-arithmetic toolkit for Coxeter groups, split crystallographic groups
//! and amalgamated products of finite groups.
//!
//! Everything here computes with exact integers, rationals or elements of the
//! real cyclotomic ring `Z[2cos(pi/L)]`; there is no floating point anywhere.
//! The main pieces:
//!
//! * [`diagram`] — Coxeter matrices, a small diagram DSL, classification of
//!   components against the spherical and affine catalogues, special spherical
//!   subgroups and odd-subgraph centralizer ranks.
//! * [`exact`] — the ring `Z[2cos(pi/L)]` with exact sign determination,
//!   integer Smith normal form, adjugates and rational commutant dimensions.
//! * [`titsrep`] — the reflection representation of a Coxeter matrix over
//!   [`exact`], giving an exact word-problem and bounded element-order oracle.
//! * [`permgrp`] — a brute-force finite permutation group engine: closures,
//!   centers, centralizers, subgroup conjugacy, cycle types and
//!   homomorphism/epimorphism counting from finite presentations.
//! * [`crysto`] — split crystallographic groups `Z^n ⋊ G0`, the affine
//!   Coxeter models on root lattices, and the complement-swap automorphism.
//! * [`amalgam`] — reduced normal forms in amalgamated products of finite
//!   permutation groups, endomorphisms from generator images, and the
//!   `S6xS6 *_C S4xS3xS5` verification suite.
//! * [`logic`] — first-order formulas over the group language, emitters for
//!   the chi / Finite_G / gamma formulas, and brute-force evaluation over
//!   finite models.
//! * [`profinite`] — a catalogue of all groups of order <= 31 and
//!   finite-quotient fingerprints (hom/epi counts) with comparison.
//!
//! The `coxkit` binary exposes all of this on the command line; see the
//! repository README for the file formats and the `verify-paper` entry point.

pub mod amalgam;
pub mod crysto;
pub mod diagram;
pub mod exact;
pub mod logic;
pub mod permgrp;
pub mod profinite;
pub mod report;
pub mod rng;
pub mod titsrep;
