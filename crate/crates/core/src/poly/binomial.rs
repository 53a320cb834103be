use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Monomial, TermOrder};

/// A monomial `lead`, or a pure-difference binomial `lead - tail`.
///
/// Binomials built through [`Binomial::from_terms`] have `lead > tail` under
/// the order they were built with. The zero polynomial is represented by
/// `None` wherever an operation can produce it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    lead: Monomial,
    tail: Option<Monomial>,
}

impl Binomial {
    pub fn monomial(m: Monomial) -> Self {
        Binomial { lead: m, tail: None }
    }

    /// `a - b` oriented by `order`; `None` when `a == b`.
    pub fn from_terms(a: Monomial, b: Monomial, order: &TermOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, tail: Some(b) }),
            Ordering::Less => Some(Binomial { lead: b, tail: Some(a) }),
        }
    }

    /// `x^{v+} - x^{v-}` for a lattice vector `v`; `None` for `v = 0`.
    pub fn from_lattice_vector(v: &[i64], order: &TermOrder) -> Option<Self> {
        let plus = Monomial::positive_part(v);
        let neg: Vec<i64> = v.iter().map(|&c| -c).collect();
        let minus = Monomial::positive_part(&neg);
        Self::from_terms(plus, minus, order)
    }

    /// Unoriented constructor, keeps `a` in the lead slot. Used for
    /// generator lists written out by hand.
    pub fn raw(a: Monomial, b: Option<Monomial>) -> Self {
        Binomial { lead: a, tail: b }
    }

    pub(crate) fn from_parts(a: Option<Monomial>, b: Option<Monomial>, order: &TermOrder) -> Option<Self> {
        match (a, b) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(Binomial::monomial(m)),
            (Some(a), Some(b)) => Self::from_terms(a, b, order),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> Option<&Monomial> {
        self.tail.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.tail.is_none()
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        std::iter::once(&self.lead).chain(self.tail.as_ref())
    }

    /// Re-orients the binomial so that its lead is the larger term under `order`.
    pub fn oriented(&self, order: &TermOrder) -> Binomial {
        match &self.tail {
            None => self.clone(),
            Some(t) => {
                Self::from_terms(self.lead.clone(), t.clone(), order).expect("a binomial never has two equal terms")
            }
        }
    }

    /// Weighted degree when both terms share it.
    pub fn homogeneous_degree(&self, weights: &[i64]) -> Option<i64> {
        let d = self.lead.weighted_degree(weights);
        match &self.tail {
            Some(t) if t.weighted_degree(weights) != d => None,
            _ => Some(d),
        }
    }

    pub fn is_homogeneous(&self, weights: &[i64]) -> bool {
        self.homogeneous_degree(weights).is_some()
    }

    /// The pair `(u, v)` with `self = x^u - x^v`, as a lattice vector `u - v`.
    pub fn to_lattice_vector(&self) -> Vec<i64> {
        let zero = Monomial::one(self.nvars());
        let t = self.tail.as_ref().unwrap_or(&zero);
        self.lead
            .exponents()
            .iter()
            .zip(t.exponents())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// Divides both terms by the largest common power of `x_var`.
    pub(crate) fn saturate_var(&self, var: usize, order: &TermOrder) -> Binomial {
        let k = self.terms().map(|m| m.exp(var)).min().unwrap_or(0);
        if k == 0 {
            return self.clone();
        }
        let mut lead = self.lead.clone();
        lead.exponents_mut()[var] -= k;
        let tail = self.tail.clone().map(|mut t| {
            t.exponents_mut()[var] -= k;
            t
        });
        Binomial::from_parts(Some(lead), tail, order).expect("division keeps the terms distinct")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tail {
            None => write!(f, "{}", self.lead),
            Some(t) => write!(f, "{} - {}", self.lead, t),
        }
    }
}
