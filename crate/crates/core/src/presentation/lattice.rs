/// Basis of the integer kernel `{v : Σ v_j g_j = 0}` of a generator row.
///
/// The row is driven to `(0, .., ±gcd, .., 0)` by unimodular column steps
/// (a Euclidean Hermite reduction), tracking the transformation. The
/// transformed unit vectors that end on a zero entry form a lattice basis of
/// the kernel, which is then size-reduced pairwise to keep entries small.
pub fn lattice_kernel_basis(gens: &[i64]) -> Vec<Vec<i64>> {
    let e = gens.len();
    let mut vals: Vec<i128> = gens.iter().map(|&g| g as i128).collect();
    let mut rows: Vec<Vec<i128>> = (0..e).map(|i| (0..e).map(|j| i128::from(i == j)).collect()).collect();
    loop {
        let pivot = (0..e).filter(|&k| vals[k] != 0).min_by_key(|&k| vals[k].abs());
        let Some(p) = pivot else { break };
        let mut changed = false;
        for j in 0..e {
            if j == p || vals[j] == 0 {
                continue;
            }
            let q = vals[j] / vals[p];
            vals[j] -= q * vals[p];
            let pivot_row = rows[p].clone();
            for (x, y) in rows[j].iter_mut().zip(&pivot_row) {
                *x -= q * y;
            }
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let mut kernel: Vec<Vec<i128>> = (0..e).filter(|&k| vals[k] == 0).map(|k| rows[k].clone()).collect();
    size_reduce(&mut kernel);
    let mut out: Vec<Vec<i64>> = kernel
        .into_iter()
        .map(|v| {
            let sign = v.iter().find(|&&c| c != 0).map_or(1, |c| c.signum());
            v.into_iter()
                .map(|c| i64::try_from(c * sign).expect("kernel entry overflows i64"))
                .collect()
        })
        .collect();
    out.sort_by_key(|v| (v.iter().map(|&c| c as i128 * c as i128).sum::<i128>(), v.clone()));
    out
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Pairwise reduction `v_i -= round(<v_i, v_j> / <v_j, v_j>) v_j`, applied only
/// when it strictly shortens `v_i`, until nothing changes.
fn size_reduce(basis: &mut [Vec<i128>]) {
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let nj = dot(&basis[j], &basis[j]);
                let d = dot(&basis[i], &basis[j]);
                if nj == 0 || 2 * d.abs() <= nj {
                    continue;
                }
                // Nearest integer to d / nj, ties toward zero.
                let q = d.signum() * ((2 * d.abs() + nj - 1) / (2 * nj));
                let vj = basis[j].clone();
                for (x, y) in basis[i].iter_mut().zip(&vj) {
                    *x -= q * y;
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}
