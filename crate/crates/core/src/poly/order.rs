use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order.
///
/// `priority` lists the variables from most to least significant. Weighted
/// orders compare `Σ w_i e_i` first and break ties either lexicographically
/// or reverse-lexicographically along `priority`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TermOrder {
    Lex {
        priority: Vec<usize>,
    },
    WeightedLex {
        weights: Vec<i64>,
        priority: Vec<usize>,
    },
    /// Ties go to the monomial with the smaller exponent in the last
    /// variable of `priority`, then the one before it, and so on.
    WeightedRevLex {
        weights: Vec<i64>,
        priority: Vec<usize>,
    },
}

impl TermOrder {
    /// Lex with `x0 > x1 > ... > x_{n-1}`.
    pub fn lex(nvars: usize) -> Self {
        TermOrder::Lex {
            priority: (0..nvars).collect(),
        }
    }

    pub fn lex_with_priority(priority: Vec<usize>) -> Self {
        TermOrder::Lex { priority }
    }

    pub fn weighted_lex(weights: Vec<i64>) -> Self {
        let priority = (0..weights.len()).collect();
        TermOrder::WeightedLex { weights, priority }
    }

    /// Weighted reverse lex in which `smallest` is the least significant
    /// variable. For homogeneous `f`, `x_smallest` divides the leading term of
    /// `f` iff it divides `f`.
    pub fn weighted_revlex(weights: Vec<i64>, smallest: usize) -> Self {
        let mut priority: Vec<usize> = (0..weights.len()).filter(|&i| i != smallest).collect();
        priority.push(smallest);
        TermOrder::WeightedRevLex { weights, priority }
    }

    pub fn nvars(&self) -> usize {
        match self {
            TermOrder::Lex { priority } => priority.len(),
            TermOrder::WeightedLex { priority, .. } | TermOrder::WeightedRevLex { priority, .. } => priority.len(),
        }
    }

    /// Weights used to grade S-pairs: the order's own weights, or all ones.
    pub(crate) fn sugar_weights(&self) -> Vec<i64> {
        match self {
            TermOrder::Lex { priority } => vec![1; priority.len()],
            TermOrder::WeightedLex { weights, .. } | TermOrder::WeightedRevLex { weights, .. } => weights.clone(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let n = self.nvars();
        for m in [a, b] {
            if m.nvars() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without dimension checks.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex { priority } => lex(priority, a, b),
            TermOrder::WeightedLex { weights, priority } => a
                .weighted_degree(weights)
                .cmp(&b.weighted_degree(weights))
                .then_with(|| lex(priority, a, b)),
            TermOrder::WeightedRevLex { weights, priority } => a
                .weighted_degree(weights)
                .cmp(&b.weighted_degree(weights))
                .then_with(|| {
                    for &v in priority.iter().rev() {
                        match a.exp(v).cmp(&b.exp(v)) {
                            Ordering::Equal => continue,
                            other => return other.reverse(),
                        }
                    }
                    Ordering::Equal
                }),
        }
    }
}

fn lex(priority: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in priority {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}
