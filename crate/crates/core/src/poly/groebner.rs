//! Buchberger's algorithm for ideals generated by monomials and
//! pure-difference binomials.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::{Binomial, Monomial, TermOrder};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Which divisor to use when several basis elements can reduce a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReducerRule {
    /// First matching element in basis order.
    #[default]
    First,
    /// Last matching element in basis order.
    Last,
}

/// S-polynomial of two nonzero elements; `None` when it vanishes.
pub fn s_polynomial(f: &Binomial, g: &Binomial, order: &TermOrder) -> Option<Binomial> {
    let l = f.lead().lcm(g.lead());
    let a = f.tail().map(|t| t.mul_div(&l, f.lead()));
    let b = g.tail().map(|t| t.mul_div(&l, g.lead()));
    Binomial::from_parts(a, b, order)
}

/// Fully reduced remainder of `f` modulo `basis`, using the first matching
/// reducer. `None` is the zero polynomial.
pub fn normal_form(f: &Binomial, basis: &[Binomial], order: &TermOrder) -> Option<Binomial> {
    normal_form_by(f, basis, order, ReducerRule::First)
}

pub fn normal_form_by(f: &Binomial, basis: &[Binomial], order: &TermOrder, rule: ReducerRule) -> Option<Binomial> {
    let refs: Vec<&Binomial> = basis.iter().collect();
    reduce(f.oriented(order), &refs, order, rule)
}

fn find_reducer<'a>(m: &Monomial, basis: &[&'a Binomial], rule: ReducerRule) -> Option<&'a Binomial> {
    match rule {
        ReducerRule::First => basis.iter().find(|g| g.lead().divides(m)).copied(),
        ReducerRule::Last => basis.iter().rev().find(|g| g.lead().divides(m)).copied(),
    }
}

/// Replaces `m` by `m / lead(g) * tail(g)`; `None` if `g` is a monomial.
fn rewrite(m: &Monomial, g: &Binomial) -> Option<Monomial> {
    g.tail().map(|t| m.mul_div(t, g.lead()))
}

fn reduce(mut f: Binomial, basis: &[&Binomial], order: &TermOrder, rule: ReducerRule) -> Option<Binomial> {
    loop {
        if let Some(g) = find_reducer(f.lead(), basis, rule) {
            let new_lead = rewrite(f.lead(), g);
            f = Binomial::from_parts(new_lead, f.tail().cloned(), order)?;
            continue;
        }
        if let Some(t) = f.tail() {
            if let Some(g) = find_reducer(t, basis, rule) {
                let new_tail = rewrite(t, g);
                f = Binomial::from_parts(Some(f.lead().clone()), new_tail, order)?;
                continue;
            }
        }
        return Some(f);
    }
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Binomial>,
    order: TermOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lead().clone()).collect()
    }

    pub fn normal_form(&self, f: &Binomial) -> Option<Binomial> {
        normal_form(f, &self.elements, &self.order)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Binomial) -> bool {
        self.normal_form(f).is_none()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`. No work limit.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> GroebnerBasis {
    run(gens, order, u64::MAX).expect("an unlimited run cannot exceed its budget")
}

/// Like [`buchberger`], failing with [`Error::ResourceLimit`] once more than
/// `budget.max_spairs` S-pairs have been reduced.
pub fn buchberger_bounded(gens: &[Binomial], order: &TermOrder, budget: &Budget) -> Result<GroebnerBasis> {
    run(gens, order, budget.max_spairs)
}

struct Engine<'o> {
    order: &'o TermOrder,
    weights: Vec<i64>,
    basis: Vec<Binomial>,
    /// Elements whose lead is not divisible by a later element's lead. Only
    /// these are used as reducers.
    active: Vec<bool>,
    queue: BinaryHeap<Reverse<(i64, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl<'o> Engine<'o> {
    fn reducers(&self) -> Vec<&Binomial> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter_map(|(g, &a)| a.then_some(g))
            .collect()
    }

    fn insert(&mut self, h: Binomial) {
        let new = self.basis.len();
        for k in 0..new {
            if self.active[k] && h.lead().divides(self.basis[k].lead()) {
                self.active[k] = false;
            }
            let l = self.basis[k].lead().lcm(h.lead());
            self.queue.push(Reverse((l.weighted_degree(&self.weights), k, new)));
            self.pending.insert((k, new));
        }
        self.basis.push(h);
        self.active.push(true);
    }

    /// Buchberger's chain criterion: some `k` has a lead dividing the lcm and
    /// both `(i, k)` and `(j, k)` are already treated.
    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.basis[k].lead().divides(lcm)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }
}

fn run(gens: &[Binomial], order: &TermOrder, max_spairs: u64) -> Result<GroebnerBasis> {
    let mut engine = Engine {
        order,
        weights: order.sugar_weights(),
        basis: Vec::new(),
        active: Vec::new(),
        queue: BinaryHeap::new(),
        pending: HashSet::new(),
    };
    for g in gens {
        let reducers = engine.reducers();
        if let Some(h) = reduce(g.oriented(order), &reducers, order, ReducerRule::First) {
            engine.insert(h);
        }
    }

    let mut treated: u64 = 0;
    while let Some(Reverse((_, i, j))) = engine.queue.pop() {
        engine.pending.remove(&(i, j));
        let (fi, fj) = (&engine.basis[i], &engine.basis[j]);
        if fi.lead().is_coprime(fj.lead()) {
            continue;
        }
        let lcm = fi.lead().lcm(fj.lead());
        if engine.chain_criterion(i, j, &lcm) {
            continue;
        }
        treated += 1;
        if treated > max_spairs {
            return Err(Error::ResourceLimit(format!(
                "Buchberger exceeded {max_spairs} S-pairs"
            )));
        }
        let Some(s) = s_polynomial(fi, fj, engine.order) else {
            continue;
        };
        let reducers = engine.reducers();
        if let Some(h) = reduce(s, &reducers, order, ReducerRule::First) {
            engine.insert(h);
        }
    }

    Ok(GroebnerBasis {
        elements: auto_reduce(engine.basis, order),
        order: order.clone(),
        reduced: true,
    })
}

/// Minimalizes and tail-reduces a Gröbner basis; output sorted by lead.
fn auto_reduce(mut elements: Vec<Binomial>, order: &TermOrder) -> Vec<Binomial> {
    elements.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    let mut minimal: Vec<Binomial> = Vec::with_capacity(elements.len());
    for g in elements {
        // A divisor of a monomial never exceeds it, so divisors come first.
        if !minimal.iter().any(|h| h.lead().divides(g.lead())) {
            minimal.push(g);
        }
    }
    for idx in 0..minimal.len() {
        let others: Vec<&Binomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(k, h)| (k != idx).then_some(h))
            .collect();
        let reduced = reduce(minimal[idx].clone(), &others, order, ReducerRule::First)
            .expect("a minimal basis element keeps its irreducible lead");
        minimal[idx] = reduced;
    }
    minimal
}
