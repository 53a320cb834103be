//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact; the only tolerances are the wall-clock limits
//! below.

mod common;

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{props, Naive};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use semigroup_forge::family::{
    closed_apery_e4, closed_apery_e5, closed_pf_e4, closed_pf_e5, family, q5_expected_leading_set, q5_generator_set,
};
use semigroup_forge::poly::{gastinger_check_with, minimal_monomials, Binomial, QuotientDim, TermOrder};
use semigroup_forge::presentation::{
    generate_same_ideal, minimality_check, mu_and_betti_degrees, toric_ideal_generators, CertifiedSet, ToricStrategy,
};
use semigroup_forge::{Budget, NumericalSemigroup};

const APERY_LIMIT_PER_N: Duration = Duration::from_secs(1);
const PF_LIMIT_PER_N: Duration = Duration::from_secs(1);
const GASTINGER_LIMIT_PER_N: Duration = Duration::from_secs(10);
const MINIMALITY_LIMIT_PER_N: Duration = Duration::from_secs(60);
const E4_MU_LIMIT_TOTAL: Duration = Duration::from_secs(300);
const STRATEGY_LIMIT_TOTAL: Duration = Duration::from_secs(60);
const FIXTURE_LIMIT_TOTAL: Duration = Duration::from_secs(1);
const PROPERTY_CASES: u32 = 1000;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let start = Instant::now();
    let out = f()?;
    let elapsed = start.elapsed();
    if elapsed > limit {
        return Err(format!("{what} took {elapsed:.2?}, limit {limit:.0?}"));
    }
    Ok(out)
}

fn expect<T: PartialEq + Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn apery_closed_forms() -> Check {
    let mut sizes = Vec::new();
    for (e, is) in [(4usize, 2..=7i64), (5, 2..=3)] {
        for i in is {
            let p = family(e, i).map_err(|e| e.to_string())?;
            timed(APERY_LIMIT_PER_N, &format!("n = {}", p.n), || {
                let closed = if e == 4 {
                    closed_apery_e4(&p)
                } else {
                    closed_apery_e5(&p)
                }
                .map_err(|e| e.to_string())?;
                let generic = p.semigroup().apery(p.m(0)).map_err(|e| e.to_string())?.to_set();
                let n = p.n;
                let want = if e == 4 { n * n + 2 * n } else { n * n + 3 * n + 1 };
                expect(&format!("e = {e}, n = {n} listed"), closed.listed as i64, want)?;
                expect(&format!("e = {e}, n = {n} distinct"), closed.values.len() as i64, want)?;
                expect(&format!("e = {e}, n = {n} set"), &closed.values, &generic)?;
                sizes.push(want);
                Ok(())
            })?;
        }
    }
    Ok(format!("sizes {sizes:?}"))
}

fn pseudo_frobenius_and_type() -> Check {
    // The brute-force confirmation at n = 8 comes first.
    let p8 = family(5, 2).map_err(|e| e.to_string())?;
    let brute: BTreeSet<i64> = Naive::new(&p8.generators).pseudo_frobenius().into_iter().collect();
    expect(
        "n = 8 generic PF vs brute force",
        p8.semigroup()
            .pseudo_frobenius()
            .pseudo_frobenius
            .into_iter()
            .collect::<BTreeSet<_>>(),
        brute,
    )?;

    let mut types = Vec::new();
    for (e, is) in [(4usize, 2..=7i64), (5, 2..=3)] {
        let mut row = Vec::new();
        for i in is {
            let p = family(e, i).map_err(|e| e.to_string())?;
            let t = timed(PF_LIMIT_PER_N, &format!("n = {}", p.n), || {
                let closed = if e == 4 { closed_pf_e4(&p) } else { closed_pf_e5(&p) }.map_err(|e| e.to_string())?;
                let inv = p.semigroup().pseudo_frobenius();
                let generic: BTreeSet<i64> = inv.pseudo_frobenius.iter().copied().collect();
                expect(&format!("e = {e}, n = {} PF", p.n), &closed.values, &generic)?;
                let want = if e == 4 { 2 * p.n } else { 3 * p.n / 2 + 3 } as usize;
                expect(&format!("e = {e}, n = {} type", p.n), inv.cm_type, want)?;
                Ok(inv.cm_type)
            })?;
            row.push(t);
        }
        if !row.windows(2).all(|w| w[0] < w[1]) {
            return Err(format!("types not strictly increasing for e = {e}: {row:?}"));
        }
        types.push(row);
    }
    Ok(format!("types e=4 {:?}, e=5 {:?}", types[0], types[1]))
}

fn q5_set(i: i64) -> Result<(Vec<i64>, Vec<Binomial>, i64), String> {
    let p = family(5, i).map_err(|e| e.to_string())?;
    let set = q5_generator_set(&p).map_err(|e| e.to_string())?;
    Ok((p.generators, set.into_iter().map(|l| l.binomial).collect(), p.n))
}

fn gastinger() -> Check {
    let mut counts = Vec::new();
    for (i, want) in [(2, 89u64), (3, 131)] {
        let count = timed(GASTINGER_LIMIT_PER_N, &format!("i = {i}"), || {
            let (gens, set, n) = q5_set(i)?;
            let out = gastinger_check_with(&set, &gens, 0, &Budget::default()).map_err(|e| e.to_string())?;
            expect(&format!("n = {n} count"), out.count, QuotientDim::Finite(want))?;
            if n == 8 {
                let p = family(5, i).map_err(|e| e.to_string())?;
                let expected = minimal_monomials(&q5_expected_leading_set(&p).map_err(|e| e.to_string())?);
                expect(
                    "n = 8 leading ideal",
                    minimal_monomials(&out.leading_monomials()),
                    expected,
                )?;
                expect("basis order", out.basis.order(), &TermOrder::lex(5))?;
            }
            Ok(want)
        })?;
        counts.push(count);
    }
    Ok(format!("standard monomials {counts:?}, leading ideal at n = 8 matches"))
}

fn minimality_e5() -> Check {
    let b = Budget::default();
    let mut mus = Vec::new();
    for (i, want) in [(2, 19usize), (3, 22)] {
        let mu = timed(MINIMALITY_LIMIT_PER_N, &format!("i = {i}"), || {
            let (gens, set, n) = q5_set(i)?;
            let c = CertifiedSet::certify(&gens, set, &b).map_err(|e| e.to_string())?;
            let rep = minimality_check(&c, &b).map_err(|e| e.to_string())?;
            expect(&format!("n = {n} minimal"), rep.minimal, true)?;
            expect(&format!("n = {n} mu"), rep.mu, want)?;
            if (rep.mu as i64) < n + 2 {
                return Err(format!("n = {n}: mu {} < n + 2", rep.mu));
            }
            Ok(rep.mu)
        })?;
        mus.push(mu);
    }
    Ok(format!("mu {mus:?}"))
}

fn mu_e4() -> Check {
    let b = Budget::default();
    timed(E4_MU_LIMIT_TOTAL, "all n", || {
        let mut mus = Vec::new();
        for i in 2..=4 {
            let p = family(4, i).map_err(|e| e.to_string())?;
            for strategy in [ToricStrategy::Saturation, ToricStrategy::Elimination] {
                let set = toric_ideal_generators(&p.generators, strategy, &b).map_err(|e| e.to_string())?;
                let c = CertifiedSet::certify(&p.generators, set, &b).map_err(|e| e.to_string())?;
                let mu = mu_and_betti_degrees(&c, &b).map_err(|e| e.to_string())?.mu;
                expect(&format!("n = {} {strategy:?}", p.n), mu as i64, 2 * (p.n + 1))?;
                if strategy == ToricStrategy::Saturation {
                    mus.push(mu);
                }
            }
        }
        Ok(format!("mu {mus:?} from both strategies"))
    })
}

fn strategies_agree() -> Check {
    let b = Budget::default();
    timed(STRATEGY_LIMIT_TOTAL, "all cases", || {
        let s54 = family(4, 2).map_err(|e| e.to_string())?.generators;
        let cases: Vec<Vec<i64>> = vec![vec![2, 3], vec![3, 4, 5], vec![4, 9, 11], s54];
        for gens in &cases {
            let a = toric_ideal_generators(gens, ToricStrategy::Saturation, &b).map_err(|e| e.to_string())?;
            let c = toric_ideal_generators(gens, ToricStrategy::Elimination, &b).map_err(|e| e.to_string())?;
            let order = TermOrder::weighted_lex(gens.clone());
            let same = generate_same_ideal(&a, &c, &order, &b).map_err(|e| e.to_string())?;
            expect(&format!("{gens:?}"), same, true)?;
        }
        Ok(format!("{} semigroups", cases.len()))
    })
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases: PROPERTY_CASES,
        max_global_rejects: 10_000,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, check).map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Check {
    let system = || {
        props::homogeneous_system().prop_flat_map(|s| {
            let n = s.0.len();
            (Just(s), props::order(n))
        })
    };
    run_property("|Ap(S, a)| = a", props::semigroup_and_element(), props::apery_size)?;
    run_property("membership", props::semigroup_gens(), props::membership)?;
    run_property("pseudo-Frobenius", props::semigroup_gens(), props::pseudo_frobenius)?;
    run_property("Selmer genus", props::semigroup_gens(), props::genus)?;
    run_property(
        "Buchberger confluence and homogeneity",
        system(),
        props::buchberger_confluence,
    )?;
    run_property(
        "normal form confluence",
        (
            system(),
            prop::collection::vec(0u32..6, 4),
            prop::collection::vec(0u32..6, 4),
        ),
        props::normal_form_confluence,
    )?;
    run_property(
        "term order axioms",
        (2usize..=5).prop_flat_map(|n| {
            (
                props::order(n),
                props::monomial(n),
                props::monomial(n),
                props::monomial(n),
            )
        }),
        props::order_axioms,
    )?;
    Ok(format!("7 properties x {PROPERTY_CASES} cases"))
}

fn classic_fixtures() -> Check {
    timed(FIXTURE_LIMIT_TOTAL, "fixtures", || {
        let s = NumericalSemigroup::new(&[2, 3]).map_err(|e| e.to_string())?;
        expect("F(<2,3>)", s.frobenius(), 1)?;
        let s = NumericalSemigroup::new(&[3, 4, 5]).map_err(|e| e.to_string())?;
        expect("PF(<3,4,5>)", s.pseudo_frobenius().pseudo_frobenius, vec![1, 2])?;
        let b = Budget::default();
        let set = toric_ideal_generators(&[3, 4, 5], ToricStrategy::default(), &b).map_err(|e| e.to_string())?;
        let c = CertifiedSet::certify(&[3, 4, 5], set, &b).map_err(|e| e.to_string())?;
        expect(
            "mu(<3,4,5>)",
            mu_and_betti_degrees(&c, &b).map_err(|e| e.to_string())?.mu,
            3,
        )?;
        Ok("F = 1, PF = {1, 2}, mu = 3".to_string())
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Apéry closed forms", apery_closed_forms),
        ("pseudo-Frobenius sets and type", pseudo_frobenius_and_type),
        ("Gastinger certification", gastinger),
        ("minimality and mu at e = 5", minimality_e5),
        ("mu at e = 4 from scratch", mu_e4),
        ("toric strategies agree", strategies_agree),
        ("property suites", property_suites),
        ("classic fixtures", classic_fixtures),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  criterion {}: {name}: {detail} ({elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}: {why} ({elapsed:.2?})", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
