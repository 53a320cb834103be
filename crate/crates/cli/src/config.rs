//! Resource budgets from defaults, the environment and flags.

use semigroup_forge::Budget;

pub const BUDGET_ENV: &str = "SEMIGROUP_FORGE_BUDGET";

/// Parses a budget override. Accepted forms are a bare S-pair count (`5000`)
/// or comma-separated `spairs=N` / `nodes=M` pairs. Unmentioned fields keep
/// their value from `base`.
pub fn parse_budget(spec: &str, base: Budget) -> Result<Budget, String> {
    let spec = spec.trim();
    let mut budget = base;
    if let Ok(n) = spec.parse::<u64>() {
        budget.max_spairs = positive("spairs", n)?;
        return Ok(budget);
    }
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value in budget, got {part:?}"))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| format!("budget value for {key:?} is not a nonnegative integer: {value:?}"))?;
        match key.trim() {
            "spairs" => budget.max_spairs = positive("spairs", value)?,
            "nodes" => budget.max_factorization_nodes = positive("nodes", value)?,
            other => return Err(format!("unknown budget key {other:?} (expected spairs or nodes)")),
        }
    }
    Ok(budget)
}

fn positive(key: &str, n: u64) -> Result<u64, String> {
    if n == 0 {
        Err(format!("budget {key} must be positive"))
    } else {
        Ok(n)
    }
}

/// Defaults, then the environment variable, then `--max-spairs`.
pub fn resolve_budget(env: Option<&str>, max_spairs: Option<u64>) -> Result<Budget, String> {
    let mut budget = Budget::default();
    if let Some(spec) = env {
        budget = parse_budget(spec, budget).map_err(|e| format!("{BUDGET_ENV}: {e}"))?;
    }
    if let Some(n) = max_spairs {
        budget.max_spairs = positive("--max-spairs", n)?;
    }
    Ok(budget)
}
