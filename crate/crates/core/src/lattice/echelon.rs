use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sparse::{ext_gcd, SparseVec};

/// A sublattice of `Z^dim` kept as rows in echelon form: row leads are
/// distinct and positive.
#[derive(Debug, Clone, Default)]
pub struct EchelonLattice {
    dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonLattice {
    pub fn new(dim: usize) -> Self {
        EchelonLattice {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in increasing order of their leading index.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Leading entries, all positive.
    pub fn pivot_values(&self) -> Vec<BigInt> {
        self.rows
            .values()
            .map(|r| r.leading().expect("nonzero row").1.clone())
            .collect()
    }

    /// True when every leading entry is 1; then the lattice is saturated
    /// and the non-pivot unit vectors complete a basis of `Z^dim`.
    pub fn has_unit_pivots(&self) -> bool {
        self.rows.values().all(|r| r.leading().expect("nonzero row").1.is_one())
    }

    /// Adds `v` to the generating set. Returns whether the rank grew.
    ///
    /// Rows are kept Hermite-reduced: entries above a pivot lie in
    /// `[0, pivot)`, which keeps coefficients from growing.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = v;
        let mut dirty = false;
        loop {
            let (p, a) = match v.leading() {
                None => {
                    if dirty {
                        self.normalize();
                    }
                    return false;
                }
                Some((p, a)) => (p, a.clone()),
            };
            debug_assert!(p < self.dim);
            let Some(row) = self.rows.get(&p) else {
                let v = if a.is_negative() { v.neg() } else { v };
                let v = self.reduce_tail(v, p);
                self.clear_column_above(p, &v);
                self.rows.insert(p, v);
                if dirty {
                    self.normalize();
                }
                return true;
            };
            let b = row.leading().expect("nonzero row").1.clone();
            if a.is_multiple_of(&b) {
                v = v.sub_scaled(&(&a / &b), row);
                continue;
            }
            let (g, s, t) = ext_gcd(&a, &b);
            let new_row = v.combine(&s, row, &t);
            let rest = v.combine(&(&b / &g), row, &-(&a / &g));
            self.rows.insert(p, new_row);
            dirty = true;
            v = rest;
        }
    }

    /// Reduces the entries of `v` at pivots after `p`.
    fn reduce_tail(&self, mut v: SparseVec, p: usize) -> SparseVec {
        use std::ops::Bound::{Excluded, Unbounded};
        for (&q, row) in self.rows.range((Excluded(p), Unbounded)) {
            if let Some(x) = v.get(q) {
                let b = row.leading().expect("nonzero row").1;
                let c = x.div_floor(b);
                if !c.is_zero() {
                    v = v.sub_scaled(&c, row);
                }
            }
        }
        v
    }

    /// Reduces column `p` of every row above, given the row `v` led at `p`.
    fn clear_column_above(&mut self, p: usize, v: &SparseVec) {
        let b = v.leading().expect("nonzero row").1.clone();
        for (_, row) in self.rows.range_mut(..p) {
            if let Some(x) = row.get(p) {
                let c = x.div_floor(&b);
                if !c.is_zero() {
                    *row = row.sub_scaled(&c, v);
                }
            }
        }
    }

    fn normalize(&mut self) {
        let pivots = self.pivots();
        for q in pivots {
            let row = self.rows[&q].clone();
            self.clear_column_above(q, &row);
        }
    }

    /// Expresses `v` in the rows: coefficients in row order, or `None`
    /// when `v` is outside the lattice.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<BigInt>> {
        let mut v = v.clone();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (&p, row) in &self.rows {
            let c = match v.get(p) {
                None => BigInt::zero(),
                Some(x) => {
                    let b = row.leading().expect("nonzero row").1;
                    if !x.is_multiple_of(b) {
                        return None;
                    }
                    x / b
                }
            };
            if !c.is_zero() {
                v = v.sub_scaled(&c, row);
            }
            if let Some((q, _)) = v.leading() {
                if q < p {
                    return None;
                }
            }
            coords.push(c);
        }
        v.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    /// `sum_i coords[i] * row_i`
    pub fn combination(&self, coords: &[BigInt]) -> SparseVec {
        assert_eq!(coords.len(), self.rows.len());
        let mut out = SparseVec::zero();
        for (c, row) in coords.iter().zip(self.rows.values()) {
            if !c.is_zero() {
                out = out.combine(&BigInt::one(), row, c);
            }
        }
        out
    }
}
