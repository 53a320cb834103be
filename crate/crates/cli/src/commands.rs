//! The four subcommands, each producing a [`Report`] and an exit status.

use rayon::prelude::*;
use serde_json::{json, Value};

use semigroup_forge::family::{family, verify_family, VerificationReport, VerifyOptions};
use semigroup_forge::presentation::{mu_and_betti_degrees, toric_ideal_generators, CertifiedSet, ToricStrategy};
use semigroup_forge::{Budget, Error, NumericalSemigroup};

use crate::report::{Report, Row};

/// Process exit status, in increasing order of precedence for the
/// non-success cases handled by [`Outcome::merge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Ok,
    ResourceLimit,
    Mismatch,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Mismatch => 1,
            Outcome::ResourceLimit => 3,
        }
    }

    fn merge(self, other: Outcome) -> Outcome {
        self.max(other)
    }
}

/// A failure that prevents any output.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    ResourceLimit(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::ResourceLimit(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::ResourceLimit(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::ResourceLimit(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn columns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn strategy_name(s: ToricStrategy) -> &'static str {
    match s {
        ToricStrategy::Saturation => "saturation",
        ToricStrategy::Elimination => "elimination",
    }
}

pub fn invariants(gens: &[i64], show_apery: bool) -> Result<(Report, Outcome), Failure> {
    let s = NumericalSemigroup::new(gens)?;
    let inv = s.pseudo_frobenius();
    let mut row = Row::new();
    row.insert("generators".into(), json!(s.generators()));
    row.insert("multiplicity".into(), json!(s.multiplicity()));
    row.insert("embedding_dimension".into(), json!(s.embedding_dimension()));
    row.insert("frobenius".into(), json!(inv.frobenius));
    row.insert("genus".into(), json!(inv.genus));
    row.insert("pseudo_frobenius".into(), json!(inv.pseudo_frobenius));
    row.insert("type".into(), json!(inv.cm_type));
    let mut cols = vec![
        "generators",
        "multiplicity",
        "embedding_dimension",
        "frobenius",
        "genus",
        "pseudo_frobenius",
        "type",
    ];
    if show_apery {
        row.insert("apery".into(), json!(s.apery_multiplicity().entries()));
        cols.push("apery");
    }
    let report = Report {
        command: "invariants",
        params: json!({ "gens": gens, "show_apery": show_apery }),
        columns: columns(&cols),
        rows: vec![row],
        discrepancies: Vec::new(),
    };
    Ok((report, Outcome::Ok))
}

pub fn ideal(gens: &[i64], strategy: ToricStrategy, budget: &Budget) -> Result<(Report, Outcome), Failure> {
    let s = NumericalSemigroup::new(gens)?;
    let minimal = s.generators().to_vec();
    let set = toric_ideal_generators(&minimal, strategy, budget)?;
    let certified = CertifiedSet::certify(&minimal, set, budget)?;
    let presentation = mu_and_betti_degrees(&certified, budget)?;
    let betti: Vec<[i64; 2]> = presentation
        .betti_degrees
        .iter()
        .map(|(&d, &c)| [d, c as i64])
        .collect();
    let mut row = Row::new();
    row.insert("generators".into(), json!(minimal));
    row.insert("strategy".into(), json!(strategy_name(strategy)));
    row.insert("certified_by".into(), json!(format!("x{}", certified.zero_var())));
    row.insert("quotient_dimension".into(), json!(certified.quotient_count()));
    row.insert("generating_set_size".into(), json!(presentation.generating_set.len()));
    row.insert("generating_set".into(), json!(presentation.generating_set));
    row.insert("betti_degrees".into(), json!(betti));
    row.insert("mu".into(), json!(presentation.mu));
    let report = Report {
        command: "ideal",
        params: json!({
            "gens": gens,
            "strategy": strategy_name(strategy),
            "max_spairs": budget.max_spairs,
            "max_factorization_nodes": budget.max_factorization_nodes,
        }),
        columns: columns(&[
            "generators",
            "strategy",
            "certified_by",
            "quotient_dimension",
            "generating_set_size",
            "mu",
            "betti_degrees",
            "generating_set",
        ]),
        rows: vec![row],
        discrepancies: Vec::new(),
    };
    Ok((report, Outcome::Ok))
}

fn family_columns(e: usize) -> Vec<String> {
    let mut cols = vec!["e".to_string(), "i".to_string(), "n".to_string()];
    cols.extend((0..e).map(|j| format!("m{j}")));
    cols.extend(
        [
            "apery_size",
            "type",
            "mu",
            "mu_at_least_n_plus_2",
            "apery_match",
            "pf_match",
            "frobenius",
            "certified",
            "minimal",
            "candidate_source",
            "all_match",
            "error",
            "notes",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    cols
}

fn family_row(e: usize, i: i64, result: &Result<VerificationReport, Error>) -> Row {
    let mut row = Row::new();
    row.insert("e".into(), json!(e));
    row.insert("i".into(), json!(i));
    if let Ok(p) = family(e, i) {
        row.insert("n".into(), json!(p.n));
        for (j, m) in p.generators.iter().enumerate() {
            row.insert(format!("m{j}"), json!(m));
        }
    }
    match result {
        Ok(r) => {
            row.insert("apery_size".into(), json!(r.apery_size));
            row.insert("type".into(), json!(r.cm_type));
            row.insert("mu".into(), json!(r.mu));
            row.insert("mu_at_least_n_plus_2".into(), json!(r.mu_at_least_n_plus_2));
            row.insert("apery_match".into(), json!(r.apery_match));
            row.insert("pf_match".into(), json!(r.pf_match));
            row.insert("frobenius".into(), json!(r.frobenius));
            row.insert("certified".into(), json!(r.certified));
            row.insert("minimal".into(), json!(r.minimal));
            row.insert("candidate_source".into(), json!(r.candidate_source));
            row.insert("all_match".into(), json!(r.all_match()));
            row.insert("error".into(), Value::Null);
            row.insert("notes".into(), json!(r.notes.join("; ")));
        }
        Err(err) => {
            row.insert("error".into(), json!(err.to_string()));
        }
    }
    row
}

fn discrepancy_values(e: usize, r: &VerificationReport) -> Vec<Value> {
    r.discrepancies
        .iter()
        .map(|d| {
            json!({
                "e": e,
                "i": r.params.i,
                "n": r.params.n,
                "check": d.check,
                "only_in_closed_form": d.only_in_closed_form,
                "only_in_computed": d.only_in_computed,
            })
        })
        .collect()
}

pub struct FamilyRequest {
    pub e: usize,
    pub i_min: i64,
    pub i_max: i64,
    pub strategy: ToricStrategy,
    pub budget: Budget,
}

/// Verifies every `i` in the range, one independent row each.
pub fn family_table(command: &'static str, req: &FamilyRequest) -> Result<(Report, Outcome), Failure> {
    if req.e != 4 && req.e != 5 {
        return Err(Error::UnsupportedE(req.e).into());
    }
    if req.i_min < 2 || req.i_min > req.i_max {
        return Err(Failure::Invalid(format!(
            "i range {}..{} is empty or starts below 2",
            req.i_min, req.i_max
        )));
    }
    let opts = VerifyOptions {
        budget: req.budget,
        ideal: true,
        strategy: req.strategy,
    };
    let results: Vec<(i64, Result<VerificationReport, Error>)> = (req.i_min..=req.i_max)
        .into_par_iter()
        .map(|i| (i, verify_family(req.e, i, &opts)))
        .collect();

    let mut outcome = Outcome::Ok;
    let mut rows = Vec::with_capacity(results.len());
    let mut discrepancies = Vec::new();
    for (i, result) in &results {
        rows.push(family_row(req.e, *i, result));
        match result {
            Ok(r) => {
                if !r.all_match() {
                    outcome = outcome.merge(Outcome::Mismatch);
                }
                discrepancies.extend(discrepancy_values(req.e, r));
            }
            Err(Error::ResourceLimit(_)) => outcome = outcome.merge(Outcome::ResourceLimit),
            Err(other) => return Err(Failure::Invalid(other.to_string())),
        }
    }
    let report = Report {
        command,
        params: json!({
            "e": req.e,
            "i_min": req.i_min,
            "i_max": req.i_max,
            "strategy": strategy_name(req.strategy),
            "max_spairs": req.budget.max_spairs,
            "max_factorization_nodes": req.budget.max_factorization_nodes,
        }),
        columns: family_columns(req.e),
        rows,
        discrepancies,
    };
    Ok((report, outcome))
}
