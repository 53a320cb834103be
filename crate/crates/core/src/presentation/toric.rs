//! Generating sets of the defining ideal of a monomial curve.

use serde::{Deserialize, Serialize};

use super::lattice_kernel_basis;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{buchberger_bounded, Binomial, Monomial, TermOrder};
use crate::semigroup::gcd_all;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ToricStrategy {
    /// Saturate the lattice basis ideal by each variable in turn.
    #[default]
    Saturation,
    /// Eliminate `u` from `(x_j - u^{g_j})` with lex, `u` largest.
    Elimination,
}

/// A homogeneous binomial generating set of the kernel of `x_j -> t^{g_j}`,
/// oriented by lex `x0 > x1 > ...`.
pub fn toric_ideal_generators(gens: &[i64], strategy: ToricStrategy, budget: &Budget) -> Result<Vec<Binomial>> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
        return Err(Error::NonPositiveGenerator(g));
    }
    let d = gcd_all(gens);
    if d != 1 {
        return Err(Error::NotCoprime(d));
    }
    let mut out = match strategy {
        ToricStrategy::Saturation => by_saturation(gens, budget)?,
        ToricStrategy::Elimination => by_elimination(gens, budget)?,
    };
    let lex = TermOrder::lex(gens.len());
    out = out.iter().map(|g| g.oriented(&lex)).collect();
    out.sort_by(|a, b| {
        let (da, db) = (a.lead().weighted_degree(gens), b.lead().weighted_degree(gens));
        da.cmp(&db).then_with(|| lex.cmp(b.lead(), a.lead()))
    });
    out.dedup();
    Ok(out)
}

fn by_saturation(gens: &[i64], budget: &Budget) -> Result<Vec<Binomial>> {
    let e = gens.len();
    let start = TermOrder::weighted_revlex(gens.to_vec(), e - 1);
    let mut current: Vec<Binomial> = lattice_kernel_basis(gens)
        .iter()
        .filter_map(|v| Binomial::from_lattice_vector(v, &start))
        .collect();
    for var in 0..e {
        let order = TermOrder::weighted_revlex(gens.to_vec(), var);
        let gb = buchberger_bounded(&current, &order, budget)?;
        current = gb.elements().iter().map(|g| g.saturate_var(var, &order)).collect();
    }
    Ok(current)
}

fn by_elimination(gens: &[i64], budget: &Budget) -> Result<Vec<Binomial>> {
    let e = gens.len();
    let u = e;
    let order = TermOrder::lex_with_priority(std::iter::once(u).chain(0..e).collect());
    let start: Vec<Binomial> = gens
        .iter()
        .enumerate()
        .filter_map(|(j, &g)| {
            let exp = u32::try_from(g).ok()?;
            Binomial::from_terms(Monomial::var_pow(e + 1, j, 1), Monomial::var_pow(e + 1, u, exp), &order)
        })
        .collect();
    if start.len() != e {
        return Err(Error::InvalidParameter("generator too large for an exponent".into()));
    }
    let gb = buchberger_bounded(&start, &order, budget)?;
    let drop_u = |m: &Monomial| Monomial::new(m.exponents()[..e].iter().copied());
    Ok(gb
        .elements()
        .iter()
        .filter(|g| g.terms().all(|m| m.exp(u) == 0))
        .map(|g| Binomial::raw(drop_u(g.lead()), g.tail().map(drop_u)))
        .collect())
}

/// Whether two sets of binomials generate the same ideal: each reduces to
/// zero modulo a Gröbner basis of the other.
pub fn generate_same_ideal(a: &[Binomial], b: &[Binomial], order: &TermOrder, budget: &Budget) -> Result<bool> {
    let gb_a = buchberger_bounded(a, order, budget)?;
    if !b.iter().all(|f| gb_a.contains(f)) {
        return Ok(false);
    }
    let gb_b = buchberger_bounded(b, order, budget)?;
    Ok(a.iter().all(|f| gb_b.contains(f)))
}
