use serde::{Deserialize, Serialize};

/// Work limits for the potentially expensive computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// S-pairs that Buchberger's algorithm may reduce in a single run.
    pub max_spairs: u64,
    /// Search nodes a single factorization enumeration may visit.
    pub max_factorization_nodes: u64,
}

impl Budget {
    pub const DEFAULT_SPAIRS: u64 = 1_000_000;
    pub const DEFAULT_FACTORIZATION_NODES: u64 = 10_000_000;

    pub fn unlimited() -> Self {
        Budget {
            max_spairs: u64::MAX,
            max_factorization_nodes: u64::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_spairs: Self::DEFAULT_SPAIRS,
            max_factorization_nodes: Self::DEFAULT_FACTORIZATION_NODES,
        }
    }
}
