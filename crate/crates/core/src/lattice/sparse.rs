use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer vector stored as sorted `(index, nonzero value)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, BigInt)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, BigInt::one())],
        }
    }

    /// Builds from unsorted pairs; repeated indices are summed.
    pub fn from_pairs(mut pairs: Vec<(usize, BigInt)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, BigInt)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[BigInt]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn dot(&self, other: &SparseVec) -> BigInt {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = BigInt::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &a[i].1 * &b[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// `a * self + b * other`
    pub fn combine(&self, a: &BigInt, other: &SparseVec, b: &BigInt) -> SparseVec {
        let (x, y) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let take = match (x.get(i), y.get(j)) {
                (Some(p), Some(q)) => p.0.cmp(&q.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match take {
                std::cmp::Ordering::Less => {
                    if !a.is_zero() {
                        out.push((x[i].0, a * &x[i].1));
                    }
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    if !b.is_zero() {
                        out.push((y[j].0, b * &y[j].1));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a * &x[i].1 + b * &y[j].1;
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseVec { entries: out }
    }

    /// `self - q * other`
    pub fn sub_scaled(&self, q: &BigInt, other: &SparseVec) -> SparseVec {
        if q.is_zero() {
            return self.clone();
        }
        self.combine(&BigInt::one(), other, &-q)
    }

    pub fn scale(&self, c: &BigInt) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// Gcd of the entries, zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c))
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }
}

/// Returns `(g, s, t)` with `g = gcd(a, b) = s a + t b`, `g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(pairs.iter().map(|&(i, c)| (i, BigInt::from(c))).collect())
    }

    #[test]
    fn combine_and_dot() {
        let a = v(&[(0, 1), (3, 2)]);
        let b = v(&[(1, 5), (3, 1)]);
        assert_eq!(a.dot(&b), BigInt::from(2));
        assert_eq!(a.sub_scaled(&BigInt::from(2), &b), v(&[(0, 1), (1, -10)]));
        assert_eq!(a.combine(&BigInt::from(0), &b, &BigInt::from(1)), b);
        assert_eq!(v(&[(2, 1), (2, -1)]), SparseVec::zero());
        assert_eq!(v(&[(4, 6), (1, -4)]).content(), BigInt::from(2));
    }

    #[test]
    fn ext_gcd_signs() {
        for (a, b) in [(12, 18), (-12, 18), (0, -5), (7, 0), (-3, -9)] {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let (g, s, t) = ext_gcd(&a, &b);
            assert!(!g.is_negative());
            assert_eq!(&s * &a + &t * &b, g);
        }
    }
}
