//! Numerical semigroups: membership, Apéry sets and the invariants derived
//! from them.
//!
//! Everything is driven by the Apéry table of an element `a`: the least
//! semigroup element in every residue class modulo `a`. It is computed by a
//! Dijkstra relaxation on the residue graph with nodes `0..a` and an edge
//! `r -> (r + g) mod a` of weight `g` for every generator `g`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Least reachable value in every residue class modulo `modulus`, using the
/// given step sizes. Unreachable classes are `None`.
fn residue_distances(modulus: i64, steps: &[i64]) -> Vec<Option<i64>> {
    debug_assert!(modulus > 0);
    let size = modulus as usize;
    let mut dist: Vec<Option<i64>> = vec![None; size];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((w, r))) = heap.pop() {
        if dist[r] != Some(w) {
            continue;
        }
        for &g in steps {
            let next = w.checked_add(g).expect("semigroup element overflows i64");
            let s = ((r as i64 + g) % modulus) as usize;
            if dist[s].is_none_or(|d| next < d) {
                dist[s] = Some(next);
                heap.push(Reverse((next, s)));
            }
        }
    }
    dist
}

/// Table of the least semigroup element in each residue class modulo an
/// element `a` of the semigroup, i.e. the Apéry set `Ap(S, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyTable {
    modulus: i64,
    entries: Vec<i64>,
}

impl AperyTable {
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// `entries()[r]` is the least element congruent to `r`.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entry(&self, residue: usize) -> i64 {
        self.entries[residue]
    }

    pub fn contains_element(&self, x: i64) -> bool {
        x >= 0 && x >= self.entries[x.rem_euclid(self.modulus) as usize]
    }

    pub fn max(&self) -> i64 {
        *self.entries.iter().max().expect("Apéry table is never empty")
    }

    pub fn sum(&self) -> i128 {
        self.entries.iter().map(|&w| w as i128).sum()
    }

    pub fn to_set(&self) -> BTreeSet<i64> {
        self.entries.iter().copied().collect()
    }

    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }
}

/// A numerical semigroup given by its minimal system of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    /// Apéry table with respect to the multiplicity; backs membership.
    apery: AperyTable,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing the list to the
    /// minimal generating system.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let d = gcd_all(gens);
        if d != 1 {
            return Err(Error::NotCoprime(d));
        }
        let generators = minimal_generators(gens);
        let m = generators[0];
        let apery = AperyTable {
            modulus: m,
            entries: residue_distances(m, &generators)
                .into_iter()
                .map(|d| d.expect("coprime generators reach every residue"))
                .collect(),
        };
        Ok(NumericalSemigroup { generators, apery })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.apery.contains_element(x)
    }

    /// `a <=_S b` iff `b - a` lies in the semigroup.
    pub fn sg_leq(&self, a: i64, b: i64) -> bool {
        b.checked_sub(a).is_some_and(|d| self.contains(d))
    }

    /// Apéry set with respect to a positive element `a`.
    pub fn apery(&self, a: i64) -> Result<AperyTable> {
        if a <= 0 || !self.contains(a) {
            return Err(Error::NotInSemigroup(a));
        }
        if a == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        let entries = residue_distances(a, &self.generators)
            .into_iter()
            .map(|d| d.expect("coprime generators reach every residue"))
            .collect();
        Ok(AperyTable { modulus: a, entries })
    }

    /// Apéry set with respect to the multiplicity.
    pub fn apery_multiplicity(&self) -> &AperyTable {
        &self.apery
    }

    pub fn frobenius(&self) -> i64 {
        self.apery.max() - self.multiplicity()
    }

    /// Number of gaps, via Selmer's formula `(Σ w)/m - (m - 1)/2`.
    pub fn genus(&self) -> i64 {
        let m = self.multiplicity() as i128;
        let twice = 2 * self.apery.sum() - m * (m - 1);
        debug_assert_eq!(twice % (2 * m), 0);
        (twice / (2 * m)) as i64
    }

    /// Elements of `Ap(S, m)` that are maximal for `<=_S`.
    ///
    /// `w` is maximal iff `w + g` leaves the Apéry set for every generator
    /// `g`: anything above `w` in the order is reached through some generator
    /// step, and Apéry sets are closed downwards.
    pub fn maximal_apery_elements(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let mut out: Vec<i64> = self
            .apery
            .entries
            .iter()
            .copied()
            .filter(|&w| self.generators.iter().all(|&g| self.contains(w + g - m)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn pseudo_frobenius(&self) -> SemigroupInvariants {
        let m = self.multiplicity();
        let pseudo_frobenius: Vec<i64> = self.maximal_apery_elements().into_iter().map(|w| w - m).collect();
        SemigroupInvariants {
            frobenius: self.frobenius(),
            genus: self.genus(),
            cm_type: pseudo_frobenius.len(),
            pseudo_frobenius,
        }
    }

    /// All gaps in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius()).filter(|&x| !self.contains(x)).collect()
    }
}

/// Sorts, deduplicates and drops every generator lying in the monoid spanned
/// by the smaller ones.
fn minimal_generators(gens: &[i64]) -> Vec<i64> {
    let mut sorted: Vec<i64> = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut kept: Vec<i64> = Vec::with_capacity(sorted.len());
    for g in sorted {
        let redundant = match kept.first() {
            None => false,
            Some(&m) => {
                let dist = residue_distances(m, &kept);
                dist[(g % m) as usize].is_some_and(|d| d <= g)
            }
        };
        if !redundant {
            kept.push(g);
        }
    }
    kept
}

/// Frobenius number, genus, pseudo-Frobenius numbers and Cohen-Macaulay type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupInvariants {
    pub frobenius: i64,
    pub genus: i64,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub cm_type: usize,
}

/// Semigroup generated by two arithmetic sequences with a common difference.
#[derive(Debug, Clone)]
pub struct Concatenation {
    /// The sequence as written, `a, a+d, ..., b, b+d, ...`.
    pub sequence: Vec<i64>,
    pub semigroup: NumericalSemigroup,
    /// Whether the sequence is already the minimal generating system.
    pub is_minimal: bool,
}

pub fn concat_semigroup(a: i64, d: i64, len1: usize, b: i64, len2: usize) -> Result<Concatenation> {
    for (name, v) in [("a", a), ("d", d), ("b", b)] {
        if v <= 0 {
            return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
        }
    }
    if len1 == 0 || len2 == 0 {
        return Err(Error::InvalidParameter("sequence lengths must be positive".into()));
    }
    let g = gcd(a, d);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let sequence: Vec<i64> = (0..len1 as i64)
        .map(|k| a + k * d)
        .chain((0..len2 as i64).map(|k| b + k * d))
        .collect();
    let semigroup = NumericalSemigroup::new(&sequence)?;
    let mut as_set = sequence.clone();
    as_set.sort_unstable();
    as_set.dedup();
    let is_minimal = as_set.len() == sequence.len() && as_set == semigroup.generators();
    Ok(Concatenation {
        sequence,
        semigroup,
        is_minimal,
    })
}
