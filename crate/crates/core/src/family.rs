//! The concatenation families `S(n, e)` and their closed-form invariants.
//!
//! For `e >= 4` and `i >= 2` put `n = i(e-3) + (e-1)` and
//!
//! ```text
//! m_j     = n^2 + (e-2)n + (e-4+j)   for 0 <= j <= e-3
//! m_{e-2} = n^2 + (e-1)n + (2e-7)
//! m_{e-1} = n^2 + (e-1)n + (2e-6)
//! ```
//!
//! For e = 4 and e = 5 the Apéry set with respect to `m_0`, the
//! pseudo-Frobenius set and (for e = 5) a minimal binomial generating set of
//! the defining ideal are known in closed form. This module evaluates those
//! formulas literally and [`verify_family`] compares them against the generic
//! engines without ever patching a disagreement.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{minimal_monomials, Binomial, Monomial, QuotientDim};
use crate::presentation::{
    minimality_check, mu_and_betti_degrees, toric_ideal_generators, CertifiedSet, ToricStrategy,
};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub e: usize,
    pub i: i64,
    /// Shift; only `q = 0` is constructed.
    pub q: i64,
    pub n: i64,
    pub generators: Vec<i64>,
}

impl FamilyParams {
    pub fn m(&self, j: usize) -> i64 {
        self.generators[j]
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(&self.generators).expect("family generators are coprime")
    }
}

pub fn family(e: usize, i: i64) -> Result<FamilyParams> {
    if e < 4 {
        return Err(Error::InvalidParameter(format!("e must be at least 4, got {e}")));
    }
    if i < 2 {
        return Err(Error::InvalidParameter(format!("i must be at least 2, got {i}")));
    }
    let ei = e as i64;
    let n = i * (ei - 3) + (ei - 1);
    let mut generators: Vec<i64> = (0..=ei - 3).map(|j| n * n + (ei - 2) * n + (ei - 4 + j)).collect();
    generators.push(n * n + (ei - 1) * n + (2 * ei - 7));
    generators.push(n * n + (ei - 1) * n + (2 * ei - 6));
    let s = NumericalSemigroup::new(&generators)?;
    if s.generators() != generators.as_slice() {
        return Err(Error::NotMinimal(generators));
    }
    Ok(FamilyParams {
        e,
        i,
        q: 0,
        n,
        generators,
    })
}

/// A set produced by evaluating a closed formula piece by piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormSet {
    /// Number of values produced, duplicates included.
    pub listed: usize,
    pub values: BTreeSet<i64>,
    /// Cardinality the formula is supposed to have.
    pub expected_count: usize,
}

impl ClosedFormSet {
    fn collect(values: Vec<i64>, expected_count: usize) -> Self {
        ClosedFormSet {
            listed: values.len(),
            values: values.into_iter().collect(),
            expected_count,
        }
    }

    /// All listed values distinct and of the expected number.
    pub fn is_consistent(&self) -> bool {
        self.listed == self.values.len() && self.values.len() == self.expected_count
    }
}

fn require_e(params: &FamilyParams, e: usize) -> Result<()> {
    if params.e != e {
        return Err(Error::WrongE {
            expected: e,
            actual: params.e,
        });
    }
    Ok(())
}

/// `Ap(S(n,4), m0) = A1 ∪ ... ∪ A5 ∪ {0}`.
pub fn closed_apery_e4(params: &FamilyParams) -> Result<ClosedFormSet> {
    require_e(params, 4)?;
    let n = params.n;
    let (m1, m2, m3) = (params.m(1), params.m(2), params.m(3));
    let mut v = vec![0];
    v.extend((1..=n).map(|r| r * m1));
    v.extend((1..=n).map(|r| r * m2));
    v.extend((1..n).map(|r| r * m3));
    for r in 1..n {
        v.extend((1..=n - r).map(|s| r * m1 + s * m3));
    }
    for r in 1..n {
        v.extend((1..=n - r).map(|s| r * m2 + s * m3));
    }
    Ok(ClosedFormSet::collect(v, params.m(0) as usize))
}

/// `PF(S(n,4)) = P1 ∪ P2 ∪ P3`, of size `2n`.
pub fn closed_pf_e4(params: &FamilyParams) -> Result<ClosedFormSet> {
    require_e(params, 4)?;
    let n = params.n;
    let base = (n - 1) * params.m(0) + n;
    let mut v = vec![base];
    v.extend((1..n).map(|k| base + k * (n + 1)));
    v.extend((1..=n).map(|t| base + (n - 1) * (n + 1) + t));
    Ok(ClosedFormSet::collect(v, 2 * n as usize))
}

/// `Ap(S(n,5), m0) = A1 ∪ ... ∪ A11`.
pub fn closed_apery_e5(params: &FamilyParams) -> Result<ClosedFormSet> {
    require_e(params, 5)?;
    let n = params.n;
    let h = n / 2;
    let (m1, m2, m3, m4) = (params.m(1), params.m(2), params.m(3), params.m(4));
    let mut v = vec![0, m1];
    v.extend((1..=h).map(|r| r * m2));
    v.extend((1..=n).map(|r| r * m3));
    v.extend((1..=n).map(|r| r * m4));
    v.extend((1..=h).map(|r| m1 + r * m2));
    v.extend((1..=h).map(|r| m3 + r * m2));
    for s in 1..h {
        v.extend((1..=h - s).map(|r| r * m2 + 2 * s * m4));
    }
    for s in 1..=h {
        v.extend((1..=h + 1 - s).map(|r| r * m2 + (2 * s - 1) * m4));
    }
    for k in 1..n {
        v.extend((1..=n - k).map(|r| r * m3 + (n - k - r + 1) * m4));
    }
    for s in 1..h {
        v.extend((1..=h - s).map(|r| r * m2 + m3 + 2 * s * m4));
    }
    for s in 1..h {
        v.extend((1..=h + 1 - s).map(|r| r * m2 + m3 + (2 * s - 1) * m4));
    }
    Ok(ClosedFormSet::collect(v, params.m(0) as usize))
}

/// `PF(S(n,5)) = P1 ∪ P2 ∪ P3`, of size `3n/2 + 3`.
pub fn closed_pf_e5(params: &FamilyParams) -> Result<ClosedFormSet> {
    require_e(params, 5)?;
    let n = params.n;
    let h = n / 2;
    let step = params.m(3) + n + 2;
    let base = h * params.m(0) + (n + 1);
    let mut v = vec![base];
    v.extend((1..h).map(|k| base + k * step));
    v.extend((0..=n + 2).map(|t| base + (h - 1) * step + (n + 1 + t)));
    Ok(ClosedFormSet::collect(v, (3 * n / 2 + 3) as usize))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledBinomial {
    pub label: String,
    pub binomial: Binomial,
}

fn mono(e: [i64; 5]) -> Monomial {
    Monomial::new(e.map(|x| u32::try_from(x).expect("exponent is nonnegative")))
}

/// The explicit generating set `f1, f2, g1, g2, ξ_t, η_k, l1, l2` of the
/// defining ideal of `S(n,5)`, of size `n + i + 9`.
pub fn q5_generator_set(params: &FamilyParams) -> Result<Vec<LabeledBinomial>> {
    require_e(params, 5)?;
    let (n, i) = (params.n, params.i);
    let mut raw: Vec<(String, Monomial, Monomial)> = vec![
        ("f1".into(), mono([0, 1, 0, 1, 0]), mono([1, 0, 0, 0, 1])),
        ("f2".into(), mono([0, 0, 1, 1, 0]), mono([0, 1, 0, 0, 1])),
        ("g1".into(), mono([0, 2, 0, 0, 0]), mono([1, 0, 1, 0, 0])),
        ("g2".into(), mono([0, 0, i + 3, 0, 0]), mono([i + 2, 0, 0, 1, 0])),
    ];
    for t in 0..=n + 1 {
        raw.push((
            format!("xi{t}"),
            mono([t, n + 2 - t, 0, 0, 0]),
            mono([0, 0, 0, t, n + 1 - t]),
        ));
    }
    for k in 0..=i {
        raw.push((
            format!("eta{k}"),
            mono([k + 1, 0, 0, n - 2 * k - 1, 0]),
            mono([0, 0, k + 2, 0, n - 2 * k - 2]),
        ));
    }
    raw.push(("l1".into(), mono([n + 1, 1, 0, 0, 0]), mono([0, 0, 1, 0, n])));
    raw.push(("l2".into(), mono([n + 2, 0, 0, 0, 0]), mono([0, 0, 1, 1, n - 1])));

    raw.into_iter()
        .map(|(label, a, b)| {
            if a == b {
                return Err(Error::NotHomogeneous(format!("{label} vanishes")));
            }
            // Kept in the written orientation; every consumer re-orients.
            let binomial = Binomial::raw(a, Some(b));
            if !binomial.is_homogeneous(&params.generators) {
                return Err(Error::NotHomogeneous(format!("{label}: {binomial}")));
            }
            Ok(LabeledBinomial { label, binomial })
        })
        .collect()
}

/// Leading monomials of the lex standard basis of `J + (x0)` for the e = 5
/// generating set: the set `G` written out for the count of standard
/// monomials, together with `x2*x3^2`, the one element the S-pairs add.
pub fn q5_expected_leading_set(params: &FamilyParams) -> Result<Vec<Monomial>> {
    require_e(params, 5)?;
    let (n, i) = (params.n, params.i);
    let mut g = vec![
        mono([1, 0, 0, 0, 0]),
        mono([0, 1, 0, 1, 0]),
        mono([0, 1, 0, 0, 1]),
        mono([0, 2, 0, 0, 0]),
        mono([0, 0, i + 3, 0, 0]),
        mono([0, 0, 0, 0, n + 1]),
        mono([0, 0, 1, 0, n]),
        mono([0, 0, 1, 1, n - 1]),
    ];
    g.extend((1..=n + 1).map(|t| mono([0, 0, 0, t, n + 1 - t])));
    g.extend((0..=i).map(|k| mono([0, 0, k + 2, 0, n - 2 * k - 2])));
    g.push(mono([0, 0, 1, 2, 0]));
    Ok(g)
}

/// Elements in one set but not the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub check: String,
    pub only_in_closed_form: Vec<i64>,
    pub only_in_computed: Vec<i64>,
}

fn compare_sets(check: &str, closed: &BTreeSet<i64>, computed: &BTreeSet<i64>) -> Option<Discrepancy> {
    let only_in_closed_form: Vec<i64> = closed.difference(computed).copied().collect();
    let only_in_computed: Vec<i64> = computed.difference(closed).copied().collect();
    if only_in_closed_form.is_empty() && only_in_computed.is_empty() {
        return None;
    }
    Some(Discrepancy {
        check: check.to_string(),
        only_in_closed_form,
        only_in_computed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub budget: Budget,
    /// Compute the ideal-theoretic part (certification, μ).
    pub ideal: bool,
    /// How e = 4 generating sets are produced from scratch.
    pub strategy: ToricStrategy,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: Budget::default(),
            ideal: true,
            strategy: ToricStrategy::Saturation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: FamilyParams,
    pub apery_size: usize,
    pub apery_match: bool,
    pub closed_apery_consistent: bool,
    pub pf_match: bool,
    pub closed_pf_consistent: bool,
    pub discrepancies: Vec<Discrepancy>,
    pub frobenius: i64,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub expected_type: usize,
    /// Where the binomial generating set comes from.
    pub candidate_source: Option<String>,
    pub candidate_size: Option<usize>,
    /// Gastinger count for the candidate; `None` if not computed or infinite.
    pub gastinger_count: Option<u64>,
    pub certified: Option<bool>,
    /// Only meaningful for the explicit e = 5 set.
    pub minimal: Option<bool>,
    pub mu: Option<usize>,
    pub expected_mu: usize,
    pub mu_at_least_n_plus_2: Option<bool>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Everything computed agrees with every closed form.
    pub fn all_match(&self) -> bool {
        self.apery_match
            && self.pf_match
            && self.closed_apery_consistent
            && self.closed_pf_consistent
            && self.cm_type == self.expected_type
            && self.certified != Some(false)
            && self.minimal != Some(false)
            && self.mu.is_none_or(|mu| mu == self.expected_mu)
    }
}

pub fn verify_family(e: usize, i: i64, opts: &VerifyOptions) -> Result<VerificationReport> {
    if e != 4 && e != 5 {
        return Err(Error::UnsupportedE(e));
    }
    let params = family(e, i)?;
    let n = params.n;
    let s = params.semigroup();
    let apery = s.apery(params.m(0))?;
    let invariants = s.pseudo_frobenius();
    let computed_apery = apery.to_set();
    let computed_pf: BTreeSet<i64> = invariants.pseudo_frobenius.iter().copied().collect();

    let (closed_apery, closed_pf, expected_mu) = if e == 4 {
        (
            closed_apery_e4(&params)?,
            closed_pf_e4(&params)?,
            (2 * (n + 1)) as usize,
        )
    } else {
        (closed_apery_e5(&params)?, closed_pf_e5(&params)?, (n + i + 9) as usize)
    };

    let mut discrepancies = Vec::new();
    discrepancies.extend(compare_sets("apery", &closed_apery.values, &computed_apery));
    discrepancies.extend(compare_sets("pseudo_frobenius", &closed_pf.values, &computed_pf));
    let apery_match = !discrepancies.iter().any(|d| d.check == "apery");
    let pf_match = !discrepancies.iter().any(|d| d.check == "pseudo_frobenius");

    let mut notes = Vec::new();
    for (name, set) in [("apery", &closed_apery), ("pseudo_frobenius", &closed_pf)] {
        if !set.is_consistent() {
            notes.push(format!(
                "closed-form {name} set lists {} values, {} distinct, expected {}",
                set.listed,
                set.values.len(),
                set.expected_count
            ));
        }
    }
    if e == 5 {
        let variant = n * n + 3 * n + 4;
        notes.push(format!(
            "m4 = n^2+4n+4 = {}; the variant n^2+3n+4 = {} is not used, it breaks the homogeneity of f1 and f2",
            params.m(4),
            variant
        ));
    }

    let mut report = VerificationReport {
        apery_size: apery.entries().len(),
        apery_match,
        closed_apery_consistent: closed_apery.is_consistent(),
        pf_match,
        closed_pf_consistent: closed_pf.is_consistent(),
        discrepancies,
        frobenius: invariants.frobenius,
        cm_type: invariants.cm_type,
        expected_type: closed_pf.expected_count,
        candidate_source: None,
        candidate_size: None,
        gastinger_count: None,
        certified: None,
        minimal: None,
        mu: None,
        expected_mu,
        mu_at_least_n_plus_2: None,
        notes,
        params,
    };
    if opts.ideal {
        verify_ideal(&mut report, opts)?;
    }
    Ok(report)
}

fn verify_ideal(report: &mut VerificationReport, opts: &VerifyOptions) -> Result<()> {
    let params = &report.params;
    let gens = params.generators.clone();
    let (source, candidate) = if params.e == 5 {
        let set = q5_generator_set(params)?;
        (
            "closed form".to_string(),
            set.into_iter().map(|l| l.binomial).collect::<Vec<_>>(),
        )
    } else {
        let name = match opts.strategy {
            ToricStrategy::Saturation => "saturation",
            ToricStrategy::Elimination => "elimination",
        };
        (
            name.to_string(),
            toric_ideal_generators(&gens, opts.strategy, &opts.budget)?,
        )
    };
    report.candidate_source = Some(source);
    report.candidate_size = Some(candidate.len());

    let outcome = crate::poly::gastinger_check_with(&candidate, &gens, 0, &opts.budget)?;
    report.gastinger_count = match outcome.count {
        QuotientDim::Finite(c) => Some(c),
        QuotientDim::Infinite => None,
    };
    report.certified = Some(outcome.certified);
    if params.e == 5 {
        let expected = minimal_monomials(&q5_expected_leading_set(params)?);
        let got = minimal_monomials(&outcome.leading_monomials());
        if expected != got {
            report.notes.push(format!(
                "leading ideal of J + (x0) differs from the expected set: expected {}, got {}",
                expected.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", "),
                got.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
            ));
        }
    }
    if !outcome.certified {
        return Ok(());
    }

    let certified = CertifiedSet::certify(&gens, candidate, &opts.budget)?;
    if params.e == 5 {
        let m = minimality_check(&certified, &opts.budget)?;
        report.minimal = Some(m.minimal);
        report.mu = Some(m.mu);
    } else {
        report.mu = Some(mu_and_betti_degrees(&certified, &opts.budget)?.mu);
    }
    report.mu_at_least_n_plus_2 = report.mu.map(|mu| mu as i64 >= params.n + 2);
    Ok(())
}
