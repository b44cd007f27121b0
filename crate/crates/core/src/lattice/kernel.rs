use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::sparse::SparseVec;
use crate::exec::Exec;

/// A basis of `{ y in Z^ncols : row . y = 0 for every row }`.
///
/// Starts from the unit vectors and, row by row, replaces the current
/// basis by unimodular combinations so that exactly one vector pairs
/// nontrivially with the row; that vector is dropped.
pub fn integer_kernel(rows: &[SparseVec], ncols: usize, exec: Exec) -> Vec<SparseVec> {
    let mut basis: Vec<SparseVec> = (0..ncols).map(SparseVec::unit).collect();
    for row in rows {
        if row.is_zero() || basis.is_empty() {
            continue;
        }
        let values: Vec<BigInt> = exec.map_range(basis.len(), |k| row.dot(&basis[k]));
        let mut active: Vec<usize> = (0..basis.len()).filter(|&k| !values[k].is_zero()).collect();
        if active.is_empty() {
            continue;
        }
        let mut values = values;
        // Euclid on the pairing values, always pivoting on the smallest one
        // (ties broken by sparsity) so unit pivots clear the row in one pass.
        let pivot = loop {
            let p = *active
                .iter()
                .min_by(|&&a, &&b| {
                    values[a]
                        .abs()
                        .cmp(&values[b].abs())
                        .then(basis[a].nnz().cmp(&basis[b].nnz()))
                })
                .expect("nonempty");
            if active.len() == 1 {
                break p;
            }
            let vp = values[p].clone();
            let pv = basis[p].clone();
            let others: Vec<usize> = active.iter().copied().filter(|&k| k != p).collect();
            let jobs: Vec<(usize, SparseVec, BigInt)> = others
                .iter()
                .map(|&k| (k, std::mem::take(&mut basis[k]), values[k].clone()))
                .collect();
            let updated = exec.map(jobs, |(k, vec, val)| {
                let q = val.div_floor(&vp);
                (k, vec.sub_scaled(&q, &pv), val - &q * &vp)
            });
            for (k, vec, val) in updated {
                basis[k] = vec;
                values[k] = val;
            }
            active.retain(|&k| !values[k].is_zero());
        };
        basis.swap_remove(pivot);
    }
    basis
}
