//! Fibers of the factorization map and their graphs.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};

/// All `v >= 0` with `Σ v_j g_j = s`, in lexicographic order.
pub fn factorizations(gens: &[i64], s: i64) -> Vec<Vec<u32>> {
    factorizations_bounded(gens, s, &Budget::unlimited()).expect("an unlimited enumeration cannot exceed its budget")
}

pub fn factorizations_bounded(gens: &[i64], s: i64, budget: &Budget) -> Result<Vec<Vec<u32>>> {
    if s < 0 || gens.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
        return Err(Error::NonPositiveGenerator(g));
    }
    let size = s as usize + 1;
    // reach[k][r]: r is a combination of gens[0..=k].
    let mut reach: Vec<Vec<bool>> = Vec::with_capacity(gens.len());
    for (k, &g) in gens.iter().enumerate() {
        let g = g as usize;
        let mut row = match k {
            0 => {
                let mut r = vec![false; size];
                r[0] = true;
                r
            }
            _ => reach[k - 1].clone(),
        };
        for r in g..size {
            if row[r - g] {
                row[r] = true;
            }
        }
        reach.push(row);
    }
    let mut search = Search {
        gens,
        reach: &reach,
        current: vec![0; gens.len()],
        out: Vec::new(),
        nodes: 0,
        max_nodes: budget.max_factorization_nodes,
    };
    if reach[gens.len() - 1][s as usize] {
        search.descend(gens.len() - 1, s)?;
    }
    let mut out = search.out;
    out.sort_unstable();
    Ok(out)
}

struct Search<'a> {
    gens: &'a [i64],
    reach: &'a [Vec<bool>],
    current: Vec<u32>,
    out: Vec<Vec<u32>>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    /// Assigns coefficients to `gens[0..=k]` so that they sum to `rest`,
    /// which is known to be reachable.
    fn descend(&mut self, k: usize, rest: i64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::ResourceLimit(format!(
                "factorization enumeration exceeded {} nodes",
                self.max_nodes
            )));
        }
        let g = self.gens[k];
        if k == 0 {
            self.current[0] = (rest / g) as u32;
            self.out.push(self.current.clone());
            self.current[0] = 0;
            return Ok(());
        }
        for c in 0..=rest / g {
            let r = rest - c * g;
            if self.reach[k - 1][r as usize] {
                self.current[k] = c as u32;
                self.descend(k - 1, r)?;
            }
        }
        self.current[k] = 0;
        Ok(())
    }
}

/// Factorizations of one element, joined when their supports meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationGraph {
    pub element: i64,
    pub factorizations: Vec<Vec<u32>>,
    /// Component label of every vertex, numbered from 0 in order of first
    /// appearance.
    pub component_of: Vec<usize>,
    pub component_count: usize,
}

impl FactorizationGraph {
    pub fn new(gens: &[i64], element: i64, budget: &Budget) -> Result<Self> {
        let factorizations = factorizations_bounded(gens, element, budget)?;
        let n = factorizations.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        // Two vertices are adjacent iff some variable is in both supports,
        // so joining everything through one representative per variable
        // yields the same components.
        for var in 0..gens.len() {
            let mut rep: Option<usize> = None;
            for (idx, f) in factorizations.iter().enumerate() {
                if f[var] == 0 {
                    continue;
                }
                match rep {
                    None => rep = Some(idx),
                    Some(r) => {
                        let (a, b) = (find(&mut parent, r), find(&mut parent, idx));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut component_of = Vec::with_capacity(n);
        let mut component_count = 0;
        for idx in 0..n {
            let root = find(&mut parent, idx);
            if label[root] == usize::MAX {
                label[root] = component_count;
                component_count += 1;
            }
            component_of.push(label[root]);
        }
        Ok(FactorizationGraph {
            element,
            factorizations,
            component_of,
            component_count,
        })
    }

    /// Pairs of vertices whose supports intersect.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let f = &self.factorizations;
        let mut out = Vec::new();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                if f[i].iter().zip(&f[j]).any(|(&a, &b)| a > 0 && b > 0) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of minimal generators of the defining ideal in this degree.
    pub fn betti_count(&self) -> usize {
        self.component_count.saturating_sub(1)
    }
}
