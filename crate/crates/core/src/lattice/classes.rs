use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::echelon::EchelonLattice;
use super::kernel::integer_kernel;
use super::matrix::{invariant_factors, IntegerMatrix};
use super::sparse::SparseVec;
use super::LatticeError;
use crate::cohomology::Cochain;
use crate::exec::Exec;
use crate::graph::{QuadricGraph, Vertex};
use crate::poly::{Monomial, Polynomial};

/// Coordinates of degree-`d` cochains: vertex-major blocks, one slot per
/// monomial of degree `d`.
#[derive(Debug, Clone)]
pub struct CochainCoordinates {
    nvars: usize,
    num_vertices: usize,
    d: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl CochainCoordinates {
    pub fn new(g: &QuadricGraph, d: u32) -> Self {
        let monomials = Monomial::all_of_degree(g.nvars(), d);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        CochainCoordinates {
            nvars: g.nvars(),
            num_vertices: g.num_vertices(),
            d,
            monomials,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len() * self.num_vertices
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn slot(&self, v: Vertex, m: &Monomial) -> usize {
        (v - 1) * self.monomials.len() + self.index[m]
    }

    pub fn to_vector(&self, h: &Cochain) -> Result<SparseVec, LatticeError> {
        if h.num_vertices() != self.num_vertices || h.nvars() != self.nvars {
            return Err(LatticeError::ShapeMismatch);
        }
        let mut pairs = Vec::new();
        for (k, p) in h.values().iter().enumerate() {
            if !p.is_homogeneous_of(self.d) {
                return Err(LatticeError::DegreeMismatch {
                    expected: 2 * self.d,
                    vertex: k + 1,
                });
            }
            for (m, c) in p.terms() {
                pairs.push((self.slot(k + 1, m), c.clone()));
            }
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    pub fn to_cochain(&self, g: &QuadricGraph, v: &SparseVec) -> Cochain {
        let block = self.monomials.len();
        let mut values = vec![Vec::new(); self.num_vertices];
        for (i, c) in v.entries() {
            values[i / block].push((self.monomials[i % block].clone(), c.clone()));
        }
        Cochain::from_values(
            g,
            values
                .into_iter()
                .map(|t| Polynomial::from_terms(self.nvars, t))
                .collect(),
        )
    }
}

/// Linear conditions expressing `h(i) - h(j) in alpha(ij) * R_{d-1}` on
/// every edge.
///
/// With `alpha = c x_t + beta` and `c = +-1`, the multiples of `alpha` are
/// exactly the kernel of `x_t -> -c beta`, so the per-edge quotient
/// unknowns are eliminated by that substitution.
pub fn congruence_rows(
    g: &QuadricGraph,
    coords: &CochainCoordinates,
    exec: Exec,
) -> Result<Vec<SparseVec>, LatticeError> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let per_edge = exec.map(edges, |(i, j)| edge_rows(g, coords, i, j));
    let mut rows = Vec::new();
    for r in per_edge {
        rows.extend(r?);
    }
    Ok(rows)
}

fn edge_rows(
    g: &QuadricGraph,
    coords: &CochainCoordinates,
    i: Vertex,
    j: Vertex,
) -> Result<Vec<SparseVec>, LatticeError> {
    let alpha = g.alpha(i, j);
    let nv = g.nvars();
    let t = alpha
        .coeffs()
        .iter()
        .position(|c| c.abs() == 1)
        .ok_or(LatticeError::NonUnitAxial { tail: i, head: j })?;
    let c = alpha.coeffs()[t];
    // x_t -> -c * (alpha - c x_t)
    let image = Polynomial::from_terms(
        nv,
        alpha
            .coeffs()
            .iter()
            .enumerate()
            .filter(|&(s, &a)| s != t && a != 0)
            .map(|(s, &a)| (Monomial::var(nv, s + 1), BigInt::from(-c * a))),
    );
    let mut powers = vec![Polynomial::one(nv)];
    for k in 1..=coords.degree() as usize {
        powers.push(&powers[k - 1] * &image);
    }
    let mut by_target: HashMap<Monomial, Vec<(usize, BigInt)>> = HashMap::new();
    for m in coords.monomials() {
        let e = m.exponents();
        let mut rest = e.to_vec();
        rest[t] = 0;
        let sub = &powers[e[t] as usize] * &Polynomial::monomial(nv, Monomial::new(rest), 1);
        let (si, sj) = (coords.slot(i, m), coords.slot(j, m));
        for (target, coef) in sub.terms() {
            let entry = by_target.entry(target.clone()).or_default();
            entry.push((si, coef.clone()));
            entry.push((sj, -coef));
        }
    }
    let mut targets: Vec<_> = by_target.into_iter().collect();
    targets.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(targets
        .into_iter()
        .map(|(_, pairs)| SparseVec::from_pairs(pairs))
        .filter(|r| !r.is_zero())
        .collect())
}

/// The lattice of classes of cohomological degree `2d`.
#[derive(Debug, Clone)]
pub struct DegreeLattice {
    pub n: usize,
    pub d: u32,
    coords: CochainCoordinates,
    echelon: EchelonLattice,
    basis: Vec<Cochain>,
    torsion: Vec<BigInt>,
}

impl DegreeLattice {
    /// Cohomological degree `2d`.
    pub fn degree(&self) -> u32 {
        2 * self.d
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Cochain] {
        &self.basis
    }

    pub fn coordinates_space(&self) -> &CochainCoordinates {
        &self.coords
    }

    /// Smith invariants above 1 of the basis matrix; empty iff the
    /// lattice is saturated in the ambient coordinates.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Integer coordinates of `h` in [`Self::basis`].
    pub fn membership(&self, h: &Cochain) -> Result<Vec<BigInt>, LatticeError> {
        let v = self.coords.to_vector(h)?;
        self.echelon.coordinates(&v).ok_or(LatticeError::NotInLattice)
    }

    pub fn reconstruct(&self, g: &QuadricGraph, coords: &[BigInt]) -> Cochain {
        self.coords.to_cochain(g, &self.echelon.combination(coords))
    }
}

/// Computes the degree-`2d` classes from the edge congruences alone.
pub fn class_basis(g: &QuadricGraph, d: u32) -> Result<DegreeLattice, LatticeError> {
    class_basis_with(g, d, Exec::default())
}

pub fn class_basis_with(g: &QuadricGraph, d: u32, exec: Exec) -> Result<DegreeLattice, LatticeError> {
    let coords = CochainCoordinates::new(g, d);
    let rows = congruence_rows(g, &coords, exec)?;
    let kernel = integer_kernel(&rows, coords.len(), exec);
    let mut echelon = EchelonLattice::new(coords.len());
    for k in kernel {
        echelon.insert(k);
    }
    let torsion = if echelon.has_unit_pivots() {
        Vec::new()
    } else {
        let dense: Vec<Vec<BigInt>> = echelon.rows().map(|r| r.to_dense(coords.len())).collect();
        invariant_factors(&IntegerMatrix::from_rows(&dense))
            .into_iter()
            .filter(|x| !x.is_one())
            .collect()
    };
    let basis = echelon.rows().map(|r| coords.to_cochain(g, r)).collect();
    Ok(DegreeLattice {
        n: g.n(),
        d,
        coords,
        echelon,
        basis,
        torsion,
    })
}

/// Betti numbers of `Q_{2n}`: `b_{2i}`, `0 <= i <= 2n`.
pub fn betti_expected(n: usize) -> Vec<u64> {
    (0..=2 * n).map(|i| if i == n { 2 } else { 1 }).collect()
}

fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u64, |acc, k| acc * (a - k) / (k + 1))
}

/// `sum_i b_{2i} * C(d - i + n, n)`, the rank of the free module in
/// degree `2d`.
pub fn hilbert_rank_expected(n: usize, d: u32) -> u64 {
    let d = d as u64;
    let n64 = n as u64;
    betti_expected(n)
        .iter()
        .enumerate()
        .filter(|(i, _)| (*i as u64) <= d)
        .map(|(i, b)| b * binomial(d - i as u64 + n64, n64))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub d: u32,
    pub degree: u32,
    pub rank: usize,
    pub expected: u64,
    pub torsion: Vec<String>,
}

impl HilbertRow {
    pub fn matches(&self) -> bool {
        self.rank as u64 == self.expected && self.torsion.is_empty()
    }
}

pub fn hilbert_table(g: &QuadricGraph, max_d: u32, exec: Exec) -> Result<Vec<HilbertRow>, LatticeError> {
    (0..=max_d)
        .map(|d| {
            let l = class_basis_with(g, d, exec)?;
            Ok(HilbertRow {
                d,
                degree: 2 * d,
                rank: l.rank(),
                expected: hilbert_rank_expected(g.n(), d),
                torsion: l.torsion().iter().map(|x| x.to_string()).collect(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::cohomology::{is_class, make_m};

    #[test]
    fn expected_ranks() {
        let r: Vec<u64> = (0..=4).map(|d| hilbert_rank_expected(2, d)).collect();
        assert_eq!(r, vec![1, 4, 11, 23, 41]);
        assert_eq!(hilbert_rank_expected(2, 4), 15 + 10 + 2 * 6 + 3 + 1);
        assert_eq!(betti_expected(3).iter().sum::<u64>(), 8);
        for n in 1..=5 {
            assert_eq!(hilbert_rank_expected(n, 0), 1);
            assert_eq!(betti_expected(n).iter().sum::<u64>(), 2 * n as u64 + 2);
        }
    }

    #[test]
    fn small_degrees_n2() {
        let g = QuadricGraph::build(2).unwrap();
        let l0 = class_basis(&g, 0).unwrap();
        assert_eq!(l0.rank(), 1);
        assert_eq!(l0.basis()[0], Cochain::constant(&g, &Polynomial::one(3)));
        let l1 = class_basis(&g, 1).unwrap();
        assert_eq!(l1.rank(), 4);
        let l2 = class_basis(&g, 2).unwrap();
        assert_eq!(l2.rank(), 11);
        assert!(l2.torsion().is_empty());
        for b in l2.basis() {
            assert!(is_class(&g, b).is_ok());
        }
    }

    #[test]
    fn membership_examples() {
        let g = QuadricGraph::build(2).unwrap();
        let l1 = class_basis(&g, 1).unwrap();
        for (i, b) in l1.basis().iter().enumerate() {
            let c = l1.membership(b).unwrap();
            let mut e = vec![BigInt::zero(); l1.rank()];
            e[i] = BigInt::one();
            assert_eq!(c, e);
        }
        let h = make_m(&g, 1) + make_m(&g, 2);
        let c = l1.membership(&h).unwrap();
        assert_eq!(l1.reconstruct(&g, &c), h);
        let mut vals = vec![Polynomial::zero(3); 6];
        vals[0] = Polynomial::var(3, 1);
        let bad = Cochain::from_values(&g, vals);
        assert_eq!(l1.membership(&bad), Err(LatticeError::NotInLattice));
        assert!(matches!(
            l1.membership(&(&h * &h)),
            Err(LatticeError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = QuadricGraph::build(2).unwrap();
        let a = class_basis_with(&g, 3, Exec::Sequential).unwrap();
        let b = class_basis_with(&g, 3, Exec::Parallel).unwrap();
        assert_eq!(a.basis(), b.basis());
        assert_eq!(a.rank(), 23);
    }
}
