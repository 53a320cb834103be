//! Randomized properties, shared by the property suite and the acceptance
//! run. Each check returns `Err` with a description on failure.

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::Naive;
use semigroup_forge::poly::{
    buchberger_bounded, normal_form_by, s_polynomial, Binomial, Monomial, ReducerRule, TermOrder,
};
use semigroup_forge::{Budget, Error, NumericalSemigroup};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn semigroup_gens() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..50, 2..=5).prop_filter("coprime", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

/// Generators plus an element of the semigroup: a generator, or the sum of
/// two generators.
pub fn semigroup_and_element() -> impl Strategy<Value = (Vec<i64>, i64)> {
    semigroup_gens().prop_flat_map(|g| {
        let n = g.len();
        (Just(g), 0..n, prop::option::of(0..n)).prop_map(|(g, a, b)| {
            let x = g[a] + b.map_or(0, |b| g[b]);
            (g, x)
        })
    })
}

pub fn order(nvars: usize) -> impl Strategy<Value = TermOrder> {
    let perm = Just((0..nvars).collect::<Vec<usize>>()).prop_shuffle();
    let weights = prop::collection::vec(1i64..10, nvars);
    (0..3u8, perm, weights).prop_map(|(kind, priority, weights)| match kind {
        0 => TermOrder::Lex { priority },
        1 => TermOrder::WeightedLex { weights, priority },
        _ => TermOrder::WeightedRevLex { weights, priority },
    })
}

pub fn monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, nvars).prop_map(Monomial::new)
}

/// Weights and homogeneous binomials for them, built from the kernel
/// vectors `w_j e_i - w_i e_j`.
/// Weights together with lattice vectors in their kernel.
pub type System = (Vec<i64>, Vec<Vec<i64>>);

/// Input binomials and the Gröbner basis computed from them.
type Computed = (Vec<Binomial>, Vec<Binomial>);

pub fn homogeneous_system() -> impl Strategy<Value = System> {
    (3usize..=4)
        .prop_flat_map(|n| {
            let weights = prop::collection::vec(1i64..7, n);
            let combos = prop::collection::vec(prop::collection::vec(-1i64..=1, n * (n - 1) / 2), 1..=4);
            (weights, combos)
        })
        .prop_map(|(w, combos)| {
            let n = w.len();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let vectors = combos
                .iter()
                .map(|c| {
                    let mut v = vec![0i64; n];
                    for (&k, &(i, j)) in c.iter().zip(&pairs) {
                        v[i] += k * w[j];
                        v[j] -= k * w[i];
                    }
                    v
                })
                .collect();
            (w, vectors)
        })
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(TestCaseError::fail(format!($($msg)+)));
        }
    };
}

pub fn apery_size((gens, a): (Vec<i64>, i64)) -> Result<(), TestCaseError> {
    let s = NumericalSemigroup::new(&gens).unwrap();
    let ap = s.apery(a).unwrap();
    ensure!(
        ap.entries().len() as i64 == a,
        "{gens:?}: |Ap({a})| = {}",
        ap.entries().len()
    );
    ensure!(ap.to_set().len() as i64 == a, "{gens:?}: repeated Apéry entries");
    ensure!(ap.entry(0) == 0, "{gens:?}: entry 0");
    let naive = Naive::new(&gens);
    for (r, &w) in ap.entries().iter().enumerate() {
        ensure!(w.rem_euclid(a) == r as i64, "{gens:?}: entry {r} = {w}");
        ensure!(
            naive.contains(w) && !naive.contains(w - a),
            "{gens:?}: {w} not an Apéry element"
        );
    }
    Ok(())
}

pub fn membership(gens: Vec<i64>) -> Result<(), TestCaseError> {
    let s = NumericalSemigroup::new(&gens).unwrap();
    let naive = Naive::new(&gens);
    ensure!(
        s.frobenius() == naive.frobenius,
        "{gens:?}: F {} vs {}",
        s.frobenius(),
        naive.frobenius
    );
    for x in -3..=3 * naive.frobenius.max(1) {
        ensure!(s.contains(x) == naive.contains(x), "{gens:?}: membership of {x}");
    }
    Ok(())
}

pub fn pseudo_frobenius(gens: Vec<i64>) -> Result<(), TestCaseError> {
    let s = NumericalSemigroup::new(&gens).unwrap();
    let inv = s.pseudo_frobenius();
    let naive = Naive::new(&gens);
    ensure!(
        inv.pseudo_frobenius == naive.pseudo_frobenius(),
        "{gens:?}: PF {:?}",
        inv.pseudo_frobenius
    );
    ensure!(
        inv.pseudo_frobenius.last() == Some(&inv.frobenius),
        "{gens:?}: F not the largest PF"
    );
    for &p in &inv.pseudo_frobenius {
        ensure!(!s.contains(p), "{gens:?}: {p} in S");
        ensure!(gens.iter().all(|&g| s.contains(p + g)), "{gens:?}: {p} + g not in S");
    }
    Ok(())
}

pub fn genus(gens: Vec<i64>) -> Result<(), TestCaseError> {
    let s = NumericalSemigroup::new(&gens).unwrap();
    let naive = Naive::new(&gens);
    ensure!(
        s.genus() as usize == naive.gaps().len(),
        "{gens:?}: genus {}",
        s.genus()
    );
    Ok(())
}

const SPAIR_LIMIT: u64 = 20_000;

fn basis_for(vectors: &[Vec<i64>], order: &TermOrder) -> Result<Option<Computed>, TestCaseError> {
    let gens: Vec<Binomial> = vectors
        .iter()
        .filter_map(|v| Binomial::from_lattice_vector(v, order))
        .collect();
    let budget = Budget {
        max_spairs: SPAIR_LIMIT,
        ..Budget::default()
    };
    match buchberger_bounded(&gens, order, &budget) {
        Ok(gb) => Ok(Some((gens, gb.into_elements()))),
        Err(Error::ResourceLimit(_)) => Ok(None),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

/// Inputs and all S-polynomials of the output reduce to zero, and every
/// output element is homogeneous.
pub fn buchberger_confluence(((weights, vectors), order): (System, TermOrder)) -> Result<(), TestCaseError> {
    let Some((gens, basis)) = basis_for(&vectors, &order)? else {
        return Err(TestCaseError::reject("over budget"));
    };
    for g in &gens {
        ensure!(
            normal_form_by(g, &basis, &order, ReducerRule::First).is_none(),
            "input {g} does not reduce"
        );
    }
    for (i, f) in basis.iter().enumerate() {
        ensure!(f.is_homogeneous(&weights), "{f} not homogeneous for {weights:?}");
        for g in &basis[i + 1..] {
            if let Some(s) = s_polynomial(f, g, &order) {
                let nf = normal_form_by(&s, &basis, &order, ReducerRule::First);
                ensure!(nf.is_none(), "S({f}, {g}) reduces to {}", nf.unwrap());
            }
        }
    }
    Ok(())
}

/// Normal forms modulo a Gröbner basis do not depend on which reducer is
/// picked.
pub fn normal_form_confluence(
    (((_, vectors), order), a, b): ((System, TermOrder), Vec<u32>, Vec<u32>),
) -> Result<(), TestCaseError> {
    let Some((_, basis)) = basis_for(&vectors, &order)? else {
        return Err(TestCaseError::reject("over budget"));
    };
    let n = order.nvars();
    let a = Monomial::new(a.into_iter().cycle().take(n));
    let b = Monomial::new(b.into_iter().cycle().take(n));
    let Some(f) = Binomial::from_terms(a, b, &order) else {
        return Ok(());
    };
    let first = normal_form_by(&f, &basis, &order, ReducerRule::First);
    let last = normal_form_by(&f, &basis, &order, ReducerRule::Last);
    ensure!(first == last, "NF of {f}: {first:?} vs {last:?}");
    Ok(())
}

pub fn order_axioms((order, a, b, c): (TermOrder, Monomial, Monomial, Monomial)) -> Result<(), TestCaseError> {
    let ab = order.compare(&a, &b).unwrap();
    ensure!(
        ab == order.compare(&b, &a).unwrap().reverse(),
        "antisymmetry at {a}, {b}"
    );
    ensure!((ab == std::cmp::Ordering::Equal) == (a == b), "total order at {a}, {b}");
    let bc = order.cmp(&b, &c);
    if ab.is_lt() && bc.is_lt() {
        ensure!(order.cmp(&a, &c).is_lt(), "transitivity at {a} < {b} < {c}");
    }
    ensure!(
        order.cmp(&a.mul(&c), &b.mul(&c)) == ab,
        "multiplicativity at {a}, {b} times {c}"
    );
    ensure!(order.cmp(&Monomial::one(a.nvars()), &a).is_le(), "1 exceeds {a}");
    Ok(())
}
