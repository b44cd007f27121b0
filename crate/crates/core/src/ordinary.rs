//! Ordinary cohomology of `Q_{2n}` as the quotient of the class lattice by
//! the ideal generated by `M_{i+1} - M_1`, equivalently by the positive
//! degree constants `iota(x_i)`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{
    iota, make_delta, make_m, star_sets_of_size, Cochain, CohomologyError, VertexSet,
};
use crate::exec::Exec;
use crate::graph::QuadricGraph;
use crate::lattice::{
    betti_expected, class_basis_with, invariant_factors, DegreeLattice, EchelonLattice,
    IntegerMatrix, LatticeError, SparseVec,
};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinaryError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("degree {0} is beyond the computed range")]
    DegreeOutOfRange(u32),
}

/// Quotient of the degree-`2d` classes by the ideal part.
#[derive(Debug, Clone)]
pub struct OrdinaryDegree {
    pub d: u32,
    pub lattice: DegreeLattice,
    /// Ideal part, in coordinates of `lattice.basis()`.
    pub ideal: EchelonLattice,
    pub quotient_rank: usize,
    /// Smith invariants above 1 of the ideal part; empty when the quotient
    /// is free.
    pub torsion: Vec<BigInt>,
    /// Basis classes that map to a basis of the quotient.
    pub quotient_basis: Vec<Cochain>,
}

impl OrdinaryDegree {
    /// Cohomological degree `2d`.
    pub fn degree(&self) -> u32 {
        2 * self.d
    }

    fn coords(&self, h: &Cochain) -> Result<SparseVec, OrdinaryError> {
        let c = self.lattice.membership(h)?;
        Ok(SparseVec::from_dense(&c))
    }

    /// Whether `h` lies in the ideal part.
    pub fn in_ideal(&self, h: &Cochain) -> Result<bool, OrdinaryError> {
        Ok(self.ideal.contains(&self.coords(h)?))
    }

    /// Whether `reps` together with the ideal part span the whole lattice.
    pub fn spans_quotient(&self, reps: &[Cochain]) -> Result<bool, OrdinaryError> {
        let mut l = self.ideal.clone();
        for r in reps {
            l.insert(self.coords(r)?);
        }
        Ok(l.rank() == self.lattice.rank() && l.has_unit_pivots())
    }
}

/// Class lattices and their ideal parts for `d = 0..=max_d`.
#[derive(Debug, Clone)]
pub struct OrdinaryContext {
    pub g: QuadricGraph,
    degrees: Vec<OrdinaryDegree>,
}

impl OrdinaryContext {
    pub fn new(g: &QuadricGraph, max_d: u32, exec: Exec) -> Result<Self, OrdinaryError> {
        let lattices: Vec<DegreeLattice> = (0..=max_d)
            .map(|d| class_basis_with(g, d, exec))
            .collect::<Result<_, _>>()?;
        let mut degrees = Vec::with_capacity(lattices.len());
        for (d, lattice) in lattices.iter().enumerate() {
            let lower = d.checked_sub(1).map(|e| &lattices[e]);
            degrees.push(quotient(g, lower, lattice.clone(), exec)?);
        }
        Ok(OrdinaryContext { g: g.clone(), degrees })
    }

    pub fn max_d(&self) -> u32 {
        self.degrees.len() as u32 - 1
    }

    pub fn degree(&self, d: u32) -> Result<&OrdinaryDegree, OrdinaryError> {
        self.degrees
            .get(d as usize)
            .ok_or(OrdinaryError::DegreeOutOfRange(d))
    }

    pub fn degrees(&self) -> &[OrdinaryDegree] {
        &self.degrees
    }

    /// Whether a homogeneous class is zero modulo the ideal.
    pub fn is_zero_mod_j(&self, h: &Cochain) -> Result<bool, OrdinaryError> {
        let d = match h.homogeneous_degree() {
            Some(None) => return Ok(true),
            Some(Some(d)) => d,
            None => {
                return Err(LatticeError::DegreeMismatch {
                    expected: 0,
                    vertex: 1,
                }
                .into())
            }
        };
        self.degree(d)?.in_ideal(h)
    }

    pub fn equal_mod_j(&self, a: &Cochain, b: &Cochain) -> Result<bool, OrdinaryError> {
        self.is_zero_mod_j(&(a - b))
    }
}

/// Generators `iota(x_i) * b` over the basis `b` of the degree below.
pub fn jspan_generators(g: &QuadricGraph, lower: &DegreeLattice) -> Vec<Cochain> {
    let mut out = Vec::new();
    for i in 1..=g.nvars() {
        let xi = Polynomial::var(g.nvars(), i);
        for b in lower.basis() {
            out.push(b.scale(&xi));
        }
    }
    out
}

fn quotient(
    g: &QuadricGraph,
    lower: Option<&DegreeLattice>,
    lattice: DegreeLattice,
    exec: Exec,
) -> Result<OrdinaryDegree, OrdinaryError> {
    let r = lattice.rank();
    let mut ideal = EchelonLattice::new(r);
    if let Some(lower) = lower {
        let gens = jspan_generators(g, lower);
        let coords = exec.map(gens, |h| lattice.membership(&h));
        for c in coords {
            ideal.insert(SparseVec::from_dense(&c?));
        }
    }
    let torsion = if ideal.has_unit_pivots() {
        Vec::new()
    } else {
        let dense: Vec<Vec<BigInt>> = ideal.rows().map(|row| row.to_dense(r)).collect();
        invariant_factors(&IntegerMatrix::from_rows(&dense))
            .into_iter()
            .filter(|x| !x.is_one())
            .collect()
    };
    let pivots = ideal.pivots();
    let quotient_basis = (0..r)
        .filter(|c| !pivots.contains(c))
        .map(|c| lattice.basis()[c].clone())
        .collect();
    Ok(OrdinaryDegree {
        d: lattice.d,
        quotient_rank: r - ideal.rank(),
        lattice,
        ideal,
        torsion,
        quotient_basis,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub n: usize,
    /// Quotient ranks for `d = 0..=2n`.
    pub betti: Vec<u64>,
    pub expected: Vec<u64>,
    pub torsion_free: bool,
    /// Quotient rank at `d = 2n+1`.
    pub above_top: u64,
}

impl BettiTable {
    pub fn matches(&self) -> bool {
        self.betti == self.expected && self.torsion_free && self.above_top == 0
    }
}

pub fn betti_table(ctx: &OrdinaryContext) -> Result<BettiTable, OrdinaryError> {
    let n = ctx.g.n();
    let top = 2 * n as u32;
    let mut betti = Vec::new();
    let mut torsion_free = true;
    for d in 0..=top + 1 {
        let q = ctx.degree(d)?;
        torsion_free &= q.torsion.is_empty();
        betti.push(q.quotient_rank as u64);
    }
    let above_top = betti.pop().expect("nonempty");
    Ok(BettiTable {
        n,
        betti,
        expected: betti_expected(n),
        torsion_free,
        above_top,
    })
}

/// Replaces the two largest members of `K` by their bars.
pub fn rewrite_delta_mod_j(g: &QuadricGraph, k: &VertexSet) -> Result<VertexSet, CohomologyError> {
    k.check_star(g)?;
    if k.len() != g.n() + 1 {
        return Err(CohomologyError::WrongSize {
            set: *k,
            expected: g.n() + 1,
            got: k.len(),
        });
    }
    let v = k.to_vec();
    let (a, b) = (v[v.len() - 2], v[v.len() - 1]);
    Ok(k.without(a).without(b).with(g.bar(a)).with(g.bar(b)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteCertificate {
    pub k: VertexSet,
    pub rewritten: VertexSet,
    pub holds: bool,
}

/// Certifies `Delta_K = Delta_{rewrite(K)}` modulo the ideal for every
/// admissible `K`.
pub fn rewrite_certificates(ctx: &OrdinaryContext) -> Result<Vec<RewriteCertificate>, OrdinaryError> {
    let g = &ctx.g;
    star_sets_of_size(g, g.n() + 1)
        .into_iter()
        .map(|k| {
            let r = rewrite_delta_mod_j(g, &k)?;
            let holds = ctx.equal_mod_j(&make_delta(g, &k)?, &make_delta(g, &r)?)?;
            Ok(RewriteCertificate {
                k,
                rewritten: r,
                holds,
            })
        })
        .collect()
}

/// Partition of the top-size admissible sets by the class of `Delta_K`
/// modulo the ideal.
pub fn delta_classes_mod_j(ctx: &OrdinaryContext) -> Result<Vec<Vec<VertexSet>>, OrdinaryError> {
    let g = &ctx.g;
    let mut classes: Vec<(Cochain, Vec<VertexSet>)> = Vec::new();
    for k in star_sets_of_size(g, g.n() + 1) {
        let dk = make_delta(g, &k)?;
        let mut placed = false;
        for (rep, members) in classes.iter_mut() {
            if ctx.equal_mod_j(rep, &dk)? {
                members.push(k);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((dk, vec![k]));
        }
    }
    Ok(classes.into_iter().map(|(_, m)| m).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub n: usize,
    /// `"x^2 = 0"` for odd `n`, `"x(c^n - x) = 0"` for even `n`.
    pub rule: String,
    pub sets_checked: usize,
    pub products_checked: usize,
    pub all_hold: bool,
    /// Whether `Delta_K^2` vanishes modulo the ideal, for every `K`.
    pub square_vanishes: bool,
}

/// For every admissible `K` of size `n+1`: `Delta_K^2` (odd `n`) or
/// `Delta_K (M_i^n - Delta_K)` for every vertex `i` (even `n`) lies in the
/// ideal.
pub fn parity_check(ctx: &OrdinaryContext, exec: Exec) -> Result<ParityReport, OrdinaryError> {
    let g = &ctx.g;
    let n = g.n();
    let sets = star_sets_of_size(g, n + 1);
    let ms: Vec<Cochain> = g.vertices().map(|i| make_m(g, i).pow(n as u32)).collect();
    let results = exec.map(sets.clone(), |k| -> Result<(usize, bool, bool), OrdinaryError> {
        let dk = make_delta(g, &k)?;
        let sq = &dk * &dk;
        let sq_zero = ctx.is_zero_mod_j(&sq)?;
        if n % 2 == 1 {
            return Ok((1, sq_zero, sq_zero));
        }
        let mut ok = true;
        for m in &ms {
            ok &= ctx.is_zero_mod_j(&(&dk * &(m - &dk)))?;
        }
        Ok((ms.len(), ok, sq_zero))
    });
    let mut products = 0;
    let mut all_hold = true;
    let mut square_vanishes = true;
    for r in results {
        let (c, ok, sq) = r?;
        products += c;
        all_hold &= ok;
        square_vanishes &= sq;
    }
    Ok(ParityReport {
        n,
        rule: if n % 2 == 1 {
            "x^2 = 0".into()
        } else {
            "x(c^n - x) = 0".into()
        },
        sets_checked: sets.len(),
        products_checked: products,
        all_hold,
        square_vanishes,
    })
}

/// The two admissible sets used for the `x` class: `{n+2..2n+2}` and the
/// alternative `{1..n+1}`.
pub fn presentation_sets(n: usize) -> [VertexSet; 2] {
    [
        VertexSet::from_vertices(&(n + 2..=2 * n + 2).collect::<Vec<_>>()),
        VertexSet::from_vertices(&(1..=n + 1).collect::<Vec<_>>()),
    ]
}

/// With `c = M_1` and `x = Delta_K`: the two presentation relations hold
/// modulo the ideal, `x^2` is nonzero for even `n`, and the monomials
/// `c^d`, `c^n, x`, `c^{d-n} x` give a basis of each quotient.
pub fn presentation_check(ctx: &OrdinaryContext, k: &VertexSet) -> Result<Vec<NamedCheck>, OrdinaryError> {
    let g = &ctx.g;
    let n = g.n();
    let c = make_m(g, 1);
    let x = make_delta(g, k)?;
    let two = Cochain::constant(g, &Polynomial::constant(g.nvars(), 2));
    let mut out = Vec::new();
    let first = c.pow(n as u32 + 1) - &two * &(&c * &x);
    out.push(NamedCheck {
        name: format!("c^{} - 2cx = 0", n + 1),
        holds: ctx.is_zero_mod_j(&first)?,
    });
    let sq = &x * &x;
    if n.is_multiple_of(2) {
        let rel = &sq - &(&c.pow(n as u32) * &x);
        out.push(NamedCheck {
            name: format!("x^2 - c^{}x = 0", n),
            holds: ctx.is_zero_mod_j(&rel)?,
        });
        out.push(NamedCheck {
            name: "x^2 != 0".into(),
            holds: !ctx.is_zero_mod_j(&sq)?,
        });
    } else {
        out.push(NamedCheck {
            name: "x^2 = 0".into(),
            holds: ctx.is_zero_mod_j(&sq)?,
        });
    }
    let mut basis_ok = true;
    for d in 0..=2 * n as u32 {
        let reps: Vec<Cochain> = if d < n as u32 {
            vec![c.pow(d)]
        } else if d == n as u32 {
            vec![c.pow(d), x.clone()]
        } else {
            vec![&c.pow(d - n as u32) * &x]
        };
        basis_ok &= ctx.degree(d)?.spans_quotient(&reps)?;
    }
    out.push(NamedCheck {
        name: "c^d, {c^n, x}, c^(d-n) x span each quotient".into(),
        holds: basis_ok,
    });
    Ok(out)
}

/// `M_v - M_1` lies in the ideal for every vertex `v`.
pub fn m_classes_collapse(ctx: &OrdinaryContext) -> Result<bool, OrdinaryError> {
    let g = &ctx.g;
    let m1 = make_m(g, 1);
    for v in g.vertices() {
        if !ctx.equal_mod_j(&make_m(g, v), &m1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrdinaryReport {
    pub n: usize,
    pub betti: BettiTable,
    pub presentation: Vec<NamedCheck>,
    pub presentation_alternative: Vec<NamedCheck>,
    pub parity: ParityReport,
    pub rewrites: Vec<RewriteCertificate>,
    pub m_classes_collapse: bool,
    /// `"x² ≡ 0"` or `"x² ≡ c^n x, x² ≢ 0"`.
    pub verdict: String,
}

impl OrdinaryReport {
    pub fn all_pass(&self) -> bool {
        self.betti.matches()
            && self.presentation.iter().all(|c| c.holds)
            && self.presentation_alternative.iter().all(|c| c.holds)
            && self.parity.all_hold
            && self.rewrites.iter().all(|r| r.holds)
            && self.m_classes_collapse
    }
}

pub fn ordinary_report(g: &QuadricGraph, exec: Exec) -> Result<OrdinaryReport, OrdinaryError> {
    let n = g.n();
    let ctx = OrdinaryContext::new(g, 2 * n as u32 + 1, exec)?;
    let [k, alt] = presentation_sets(n);
    let parity = parity_check(&ctx, exec)?;
    let verdict = if parity.square_vanishes {
        "x² ≡ 0".to_string()
    } else {
        format!("x² ≡ c^{}x, x² ≢ 0", n)
    };
    Ok(OrdinaryReport {
        n,
        betti: betti_table(&ctx)?,
        presentation: presentation_check(&ctx, &k)?,
        presentation_alternative: presentation_check(&ctx, &alt)?,
        parity,
        rewrites: rewrite_certificates(&ctx)?,
        m_classes_collapse: m_classes_collapse(&ctx)?,
        verdict,
    })
}

/// `iota(x_1), ..., iota(x_{n+1})`.
pub fn degree_one_constants(g: &QuadricGraph) -> Vec<Cochain> {
    (1..=g.nvars())
        .map(|i| iota(g, &Polynomial::var(g.nvars(), i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v)
    }

    #[test]
    fn rewrite_examples() {
        let g = QuadricGraph::build(2).unwrap();
        assert_eq!(rewrite_delta_mod_j(&g, &vs(&[3, 5, 6])).unwrap(), vs(&[1, 2, 3]));
        assert_eq!(rewrite_delta_mod_j(&g, &vs(&[2, 4, 6])).unwrap(), vs(&[1, 2, 3]));
        assert!(rewrite_delta_mod_j(&g, &vs(&[1, 2])).is_err());
        for k in star_sets_of_size(&g, 3) {
            let twice = rewrite_delta_mod_j(&g, &rewrite_delta_mod_j(&g, &k).unwrap()).unwrap();
            assert_eq!(twice.len(), 3);
            assert!(twice.has_property_star(&g));
        }
    }

    #[test]
    fn low_degree_quotients_n2() {
        let g = QuadricGraph::build(2).unwrap();
        let ctx = OrdinaryContext::new(&g, 2, Exec::Sequential).unwrap();
        assert_eq!(ctx.degree(0).unwrap().quotient_rank, 1);
        let q1 = ctx.degree(1).unwrap();
        assert_eq!(q1.ideal.rank(), 3);
        assert_eq!(q1.quotient_rank, 1);
        assert_eq!(ctx.degree(2).unwrap().quotient_rank, 2);
        for c in degree_one_constants(&g) {
            assert!(ctx.is_zero_mod_j(&c).unwrap());
        }
        assert!(!ctx.is_zero_mod_j(&make_m(&g, 1)).unwrap());
        assert!(m_classes_collapse(&ctx).unwrap());
    }
}
