//! Brute-force reference implementations shared by the integration tests.
//! The oracles in this file never call into the library under test.

#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

/// `reach[x]` iff `x` is a nonnegative combination of `gens`, for `x <= bound`.
pub fn knapsack_table(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for x in 1..=bound as usize {
        reach[x] = gens.iter().any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    reach
}

/// Frobenius number by scanning for `min(gens)` consecutive members.
pub fn frobenius(gens: &[i64]) -> i64 {
    let m = *gens.iter().min().unwrap();
    let mut bound = 64 * m;
    loop {
        let reach = knapsack_table(gens, bound);
        let mut run = 0;
        for (x, &r) in reach.iter().enumerate() {
            run = if r { run + 1 } else { 0 };
            if run == m {
                return x as i64 - m;
            }
        }
        bound *= 2;
    }
}

pub struct Naive {
    pub gens: Vec<i64>,
    pub frobenius: i64,
    reach: Vec<bool>,
}

impl Naive {
    pub fn new(gens: &[i64]) -> Self {
        let frobenius = frobenius(gens);
        let bound = (frobenius + 1).max(0) + 4 * gens.iter().max().unwrap();
        Naive {
            gens: gens.to_vec(),
            frobenius,
            reach: knapsack_table(gens, bound),
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        match x {
            x if x < 0 => false,
            x if x > self.frobenius => true,
            x => self.reach[x as usize],
        }
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius).filter(|&x| !self.contains(x)).collect()
    }

    /// `{s in S : s - a not in S}` by definition.
    pub fn apery(&self, a: i64) -> BTreeSet<i64> {
        (0..=self.frobenius + a)
            .filter(|&s| self.contains(s) && !self.contains(s - a))
            .collect()
    }

    /// Gaps `x` with `x + s` in `S` for every nonzero `s` up to `F + 1`
    /// (larger `s` always land in `S`).
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let nonzero: Vec<i64> = (1..=self.frobenius + 1).filter(|&s| self.contains(s)).collect();
        let mut out: Vec<i64> = self
            .gaps()
            .into_iter()
            .filter(|&x| nonzero.iter().all(|&s| self.contains(x + s)))
            .collect();
        if self.frobenius < 0 {
            out.push(-1);
        }
        out
    }
}

/// Every `v >= 0` with `Σ v_j g_j = s`, by plain nested enumeration.
pub fn factorizations(gens: &[i64], s: i64) -> Vec<Vec<u32>> {
    fn go(gens: &[i64], k: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == gens.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut c = 0;
        while c * gens[k] <= left {
            cur.push(c as u32);
            go(gens, k + 1, left - c * gens[k], cur, out);
            cur.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    go(gens, 0, s, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of connected components of the graph on `facts` joining two
/// factorizations with a common nonzero coordinate.
pub fn components(facts: &[Vec<u32>]) -> usize {
    let n = facts.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(a) = stack.pop() {
            for b in 0..n {
                let linked = facts[a].iter().zip(&facts[b]).any(|(&x, &y)| x > 0 && y > 0);
                if !seen[b] && linked {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    count
}

/// Exact determinant by fraction-free elimination.
pub fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
