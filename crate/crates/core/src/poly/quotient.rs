//! Standard monomials and Gastinger's generation criterion.
//!
//! For a subideal `J` of the defining ideal `I` of a monomial curve with
//! coprime weights `a_0, ..., a_p`, `J = I` exactly when
//! `dim_k k[x] / (J + (x_i)) = a_i` for one (equivalently every) `i`. The
//! dimension is the number of monomials outside the leading ideal of
//! `J + (x_i)`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{buchberger_bounded, Binomial, GroebnerBasis, Monomial, TermOrder};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::semigroup::gcd_all;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

/// Number of monomials divisible by none of `leads`.
pub fn quotient_dimension(leads: &[Monomial]) -> QuotientDim {
    let Some(first) = leads.first() else {
        return QuotientDim::Infinite;
    };
    let nvars = first.nvars();
    if leads.iter().any(Monomial::is_one) {
        return QuotientDim::Finite(0);
    }
    // x_i^k is only divisible by pure powers of x_i.
    let mut bounded = vec![false; nvars];
    for l in leads {
        if let Some((v, _)) = l.as_pure_power() {
            bounded[v] = true;
        }
    }
    if bounded.iter().any(|b| !b) {
        return QuotientDim::Infinite;
    }

    // Standard monomials are closed under division: grow them from 1.
    let standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let one = Monomial::one(nvars);
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(one.clone());
    queue.push_back(one);
    while let Some(m) = queue.pop_front() {
        for v in 0..nvars {
            let mut next = m.clone();
            next.exponents_mut()[v] += 1;
            if !seen.contains(&next) && standard(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    QuotientDim::Finite(seen.len() as u64)
}

/// Minimal generators of the monomial ideal spanned by `monomials`.
pub fn minimal_monomials(monomials: &[Monomial]) -> BTreeSet<Monomial> {
    monomials
        .iter()
        .filter(|m| !monomials.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect()
}

/// Substitutes `x_v = 0` for every `v` in `vars`: terms involving one of them
/// vanish. `None` when both terms vanish.
pub fn project_to_zero(f: &Binomial, vars: &[usize]) -> Option<Binomial> {
    let survives = |m: &Monomial| !vars.iter().any(|&v| m.involves(v));
    let lead = Some(f.lead().clone()).filter(survives);
    let tail = f.tail().cloned().filter(survives);
    match (lead, tail) {
        (None, None) => None,
        (Some(m), None) | (None, Some(m)) => Some(Binomial::monomial(m)),
        (Some(a), Some(b)) => Some(Binomial::raw(a, Some(b))),
    }
}

#[derive(Debug, Clone)]
pub struct GastingerOutcome {
    /// True when the count equals the weight of the eliminated variable.
    pub certified: bool,
    pub count: QuotientDim,
    /// Reduced Gröbner basis of `J + (x_zero)` under lex `x0 > x1 > ...`.
    pub basis: GroebnerBasis,
}

impl GastingerOutcome {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.leading_monomials()
    }
}

/// Gastinger's test with the default work budget.
pub fn gastinger_check(j_gens: &[Binomial], weights: &[i64], zero_var: usize) -> Result<GastingerOutcome> {
    gastinger_check_with(j_gens, weights, zero_var, &Budget::default())
}

pub fn gastinger_check_with(
    j_gens: &[Binomial],
    weights: &[i64],
    zero_var: usize,
    budget: &Budget,
) -> Result<GastingerOutcome> {
    let nvars = weights.len();
    if zero_var >= nvars {
        return Err(Error::InvalidParameter(format!(
            "variable x{zero_var} does not exist in {nvars} variables"
        )));
    }
    if let Some(&w) = weights.iter().find(|&&w| w <= 0) {
        return Err(Error::NonPositiveGenerator(w));
    }
    let d = gcd_all(weights);
    if d != 1 {
        return Err(Error::NotCoprime(d));
    }
    for g in j_gens {
        if g.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                left: nvars,
                right: g.nvars(),
            });
        }
        // A pure-difference binomial lies in the defining ideal iff it is
        // homogeneous; the ideal contains no monomials.
        if g.is_monomial() || !g.is_homogeneous(weights) {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }

    let order = TermOrder::lex(nvars);
    let mut gens: Vec<Binomial> = vec![Binomial::monomial(Monomial::var_pow(nvars, zero_var, 1))];
    gens.extend(j_gens.iter().filter_map(|g| project_to_zero(g, &[zero_var])));
    let basis = buchberger_bounded(&gens, &order, budget)?;
    let count = quotient_dimension(&basis.leading_monomials());
    Ok(GastingerOutcome {
        certified: count == QuotientDim::Finite(weights[zero_var] as u64),
        count,
        basis,
    })
}
