//! Defining ideals of monomial curves and their minimal number of
//! generators.
//!
//! μ is obtained without any Gröbner minimalization: the minimal generators
//! of degree `s` number one less than the connected components of the
//! factorization graph of `s`, and by graded Nakayama every such degree
//! already occurs among the degrees of any homogeneous generating set.

mod factor;
mod lattice;
mod toric;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use factor::{factorizations, factorizations_bounded, FactorizationGraph};
pub use lattice::lattice_kernel_basis;
pub use toric::{generate_same_ideal, toric_ideal_generators, ToricStrategy};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{gastinger_check_with, Binomial, QuotientDim};

/// A binomial set known to generate the whole defining ideal, established by
/// Gastinger's test on the variable of least weight.
#[derive(Debug, Clone)]
pub struct CertifiedSet {
    generators: Vec<i64>,
    binomials: Vec<Binomial>,
    zero_var: usize,
    quotient_count: u64,
}

impl CertifiedSet {
    pub fn certify(generators: &[i64], binomials: Vec<Binomial>, budget: &Budget) -> Result<Self> {
        let zero_var = generators
            .iter()
            .enumerate()
            .min_by_key(|&(_, &g)| g)
            .map(|(i, _)| i)
            .ok_or(Error::EmptyGenerators)?;
        let outcome = gastinger_check_with(&binomials, generators, zero_var, budget)?;
        if !outcome.certified {
            let count = match outcome.count {
                QuotientDim::Finite(c) => c.to_string(),
                QuotientDim::Infinite => "infinite".to_string(),
            };
            return Err(Error::NotCertified(format!(
                "quotient by x{zero_var} has dimension {count}, expected {}",
                generators[zero_var]
            )));
        }
        Ok(CertifiedSet {
            generators: generators.to_vec(),
            binomials,
            zero_var,
            quotient_count: generators[zero_var] as u64,
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn binomials(&self) -> &[Binomial] {
        &self.binomials
    }

    pub fn zero_var(&self) -> usize {
        self.zero_var
    }

    pub fn quotient_count(&self) -> u64 {
        self.quotient_count
    }

    /// Weighted degrees of the binomials, in order. Certification guarantees
    /// every binomial is homogeneous.
    pub fn degrees(&self) -> Vec<i64> {
        self.binomials
            .iter()
            .map(|b| {
                b.homogeneous_degree(&self.generators)
                    .expect("certified binomials are homogeneous")
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub generating_set: Vec<String>,
    /// Degree -> number of minimal generators in that degree (nonzero only).
    pub betti_degrees: BTreeMap<i64, usize>,
    pub mu: usize,
}

fn graphs_by_degree(set: &CertifiedSet, budget: &Budget) -> Result<BTreeMap<i64, FactorizationGraph>> {
    let mut out = BTreeMap::new();
    for d in set.degrees() {
        if let std::collections::btree_map::Entry::Vacant(slot) = out.entry(d) {
            slot.insert(FactorizationGraph::new(&set.generators, d, budget)?);
        }
    }
    Ok(out)
}

pub fn mu_and_betti_degrees(set: &CertifiedSet, budget: &Budget) -> Result<PresentationReport> {
    let graphs = graphs_by_degree(set, budget)?;
    let betti_degrees: BTreeMap<i64, usize> = graphs
        .iter()
        .filter(|(_, g)| g.betti_count() > 0)
        .map(|(&d, g)| (d, g.betti_count()))
        .collect();
    Ok(PresentationReport {
        generating_set: set.binomials.iter().map(|b| b.to_string()).collect(),
        mu: betti_degrees.values().sum(),
        betti_degrees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTally {
    pub candidates: usize,
    pub required: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub mu: usize,
    pub candidate_size: usize,
    pub per_degree: BTreeMap<i64, DegreeTally>,
}

/// A certified set is minimal iff, degree by degree, it has exactly as many
/// elements as the factorization graph has components minus one.
pub fn minimality_check(set: &CertifiedSet, budget: &Budget) -> Result<MinimalityReport> {
    let graphs = graphs_by_degree(set, budget)?;
    let mut per_degree: BTreeMap<i64, DegreeTally> = BTreeMap::new();
    for d in set.degrees() {
        per_degree
            .entry(d)
            .or_insert_with(|| DegreeTally {
                candidates: 0,
                required: graphs[&d].betti_count(),
            })
            .candidates += 1;
    }
    let mu: usize = graphs.values().map(FactorizationGraph::betti_count).sum();
    let minimal = mu == set.binomials.len() && per_degree.values().all(|t| t.candidates == t.required);
    Ok(MinimalityReport {
        minimal,
        mu,
        candidate_size: set.binomials.len(),
        per_degree,
    })
}
