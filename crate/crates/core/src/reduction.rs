//! Canonical decomposition of classes
//! `h = g_1 + g_2 M_1 + g_3 M_1 M_2 + ... + g_{n+1} M_1...M_n
//!      + g_{n+2} Delta_{n+2..2n+2} + ... + g_{2n+2} Delta_{2n+2}`
//! with polynomial coefficients acting through `iota`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{make_delta, make_m, Cochain, VertexSet};
use crate::graph::{QuadricGraph, Vertex};
use crate::poly::{LinearForm, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("not a class: residual {residual} at vertex {vertex} is not divisible by {divisor}")]
    NotAClass {
        vertex: Vertex,
        divisor: String,
        residual: String,
    },
    #[error("cochain lives on a graph with {got} vertices over {got_vars} variables, expected {expected} and {expected_vars}")]
    ShapeMismatch {
        expected: usize,
        got: usize,
        expected_vars: usize,
        got_vars: usize,
    },
    #[error("canonical form needs {expected} coefficients in each list, got {got_poly} and {got_delta}")]
    WrongLength {
        expected: usize,
        got_poly: usize,
        got_delta: usize,
    },
    #[error("coefficient {index}: {source}")]
    Coefficient { index: usize, source: PolyError },
}

/// Coefficients of the canonical decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    /// Coefficients of `1, M_1, M_1 M_2, ..., M_1...M_n`.
    pub g_poly: Vec<Polynomial>,
    /// Coefficients of `Delta_{n+2..2n+2}, Delta_{n+3..2n+2}, ..., Delta_{2n+2}`.
    pub g_delta: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalFormJson {
    pub g_poly: Vec<String>,
    pub g_delta: Vec<String>,
}

impl CanonicalForm {
    pub fn zero(n: usize) -> Self {
        CanonicalForm {
            n,
            g_poly: vec![Polynomial::zero(n + 1); n + 1],
            g_delta: vec![Polynomial::zero(n + 1); n + 1],
        }
    }

    /// `g_1, ..., g_{2n+2}` in sweep order.
    pub fn coefficients(&self) -> impl Iterator<Item = &Polynomial> {
        self.g_poly.iter().chain(&self.g_delta)
    }

    /// Coefficient `g_s`, `1 <= s <= 2n+2`.
    pub fn coefficient(&self, s: usize) -> &Polynomial {
        if s <= self.n + 1 {
            &self.g_poly[s - 1]
        } else {
            &self.g_delta[s - self.n - 2]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients().all(Polynomial::is_zero)
    }

    pub fn to_json(&self) -> CanonicalFormJson {
        CanonicalFormJson {
            g_poly: self.g_poly.iter().map(|p| p.to_string()).collect(),
            g_delta: self.g_delta.iter().map(|p| p.to_string()).collect(),
        }
    }

    pub fn from_json(n: usize, json: &CanonicalFormJson) -> Result<Self, ReductionError> {
        if json.g_poly.len() != n + 1 || json.g_delta.len() != n + 1 {
            return Err(ReductionError::WrongLength {
                expected: n + 1,
                got_poly: json.g_poly.len(),
                got_delta: json.g_delta.len(),
            });
        }
        let parse = |offset: usize, texts: &[String]| -> Result<Vec<Polynomial>, ReductionError> {
            texts
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    Polynomial::parse(n + 1, t).map_err(|source| ReductionError::Coefficient {
                        index: offset + i + 1,
                        source,
                    })
                })
                .collect()
        };
        Ok(CanonicalForm {
            n,
            g_poly: parse(0, &json.g_poly)?,
            g_delta: parse(n + 1, &json.g_delta)?,
        })
    }

    /// Basis element names in sweep order: `1`, `M_1`, `M_1*M_2`, ...,
    /// `Delta_{n+2..2n+2}`, ..., `Delta_{2n+2}`.
    pub fn basis_names(n: usize) -> Vec<String> {
        let mut out = vec!["1".to_string()];
        for s in 2..=n + 1 {
            out.push(
                (1..s)
                    .map(|j| format!("M_{}", j))
                    .collect::<Vec<_>>()
                    .join("*"),
            );
        }
        for s in n + 2..=2 * n + 2 {
            let set: Vec<String> = (s..=2 * n + 2).map(|v| v.to_string()).collect();
            out.push(format!("Delta_{{{}}}", set.join(",")));
        }
        out
    }

    /// The same decomposition with every coefficient rewritten in the
    /// generators through `x_i = M_{i+1} - M_1`.
    pub fn m_word_coefficients(&self) -> Vec<String> {
        self.coefficients().map(m_word).collect()
    }
}

fn m_word(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in p.terms().rev() {
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = format!("(M_{} - M_1)", i + 2);
            factors.push(if e == 1 { base } else { format!("{}^{}", base, e) });
        }
        let neg = c < &BigInt::from(0);
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if abs != BigInt::from(1) {
                out.push_str(&format!("{}*", abs));
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

impl fmt::Display for CanonicalForm {
    /// One line per nonzero term, `h = (g_1) + (g_2)*M_1 + ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Self::basis_names(self.n);
        let mut first = true;
        write!(f, "h =")?;
        for (p, name) in self.coefficients().zip(&names) {
            if p.is_zero() {
                continue;
            }
            let lead = if first { " " } else { "\n  + " };
            first = false;
            if name == "1" {
                write!(f, "{}({})", lead, p)?;
            } else {
                write!(f, "{}({})*{}", lead, p, name)?;
            }
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

/// Precomputed basis cochains and sweep divisors for one graph.
#[derive(Debug, Clone)]
pub struct Reducer<'g> {
    g: &'g QuadricGraph,
    basis: Vec<Cochain>,
    divisors: Vec<Vec<LinearForm>>,
}

impl<'g> Reducer<'g> {
    pub fn new(g: &'g QuadricGraph) -> Self {
        let n = g.n();
        let mut basis = vec![Cochain::constant(g, &Polynomial::one(g.nvars()))];
        let mut divisors = vec![Vec::new()];
        let mut prod = basis[0].clone();
        for s in 2..=n + 1 {
            prod = &prod * &make_m(g, s - 1);
            basis.push(prod.clone());
        }
        for s in n + 2..=2 * n + 2 {
            let k = VertexSet::from_vertices(&(s..=2 * n + 2).collect::<Vec<_>>());
            basis.push(make_delta(g, &k).expect("tail sets have property (*)"));
        }
        for s in 2..=2 * n + 2 {
            divisors.push((1..s).filter(|&j| g.is_edge(s, j)).map(|j| g.alpha(s, j)).collect());
        }
        Reducer { g, basis, divisors }
    }

    pub fn graph(&self) -> &QuadricGraph {
        self.g
    }

    /// Basis cochains in sweep order; `basis()[s-1]` vanishes below vertex `s`.
    pub fn basis(&self) -> &[Cochain] {
        &self.basis
    }

    /// The linear forms whose product divides the residual at vertex `s`.
    pub fn divisors(&self, s: Vertex) -> &[LinearForm] {
        &self.divisors[s - 1]
    }

    fn check_shape(&self, h: &Cochain) -> Result<(), ReductionError> {
        if h.num_vertices() != self.g.num_vertices() || h.nvars() != self.g.nvars() {
            return Err(ReductionError::ShapeMismatch {
                expected: self.g.num_vertices(),
                got: h.num_vertices(),
                expected_vars: self.g.nvars(),
                got_vars: h.nvars(),
            });
        }
        Ok(())
    }

    /// Sweeps vertices `1, ..., 2n+2`, dividing the residual at each vertex
    /// by the value there of the next basis element.
    pub fn reduce(&self, h: &Cochain) -> Result<CanonicalForm, ReductionError> {
        self.check_shape(h)?;
        let g = self.g;
        let total = g.num_vertices();
        let mut coeffs: Vec<Polynomial> = Vec::with_capacity(total);
        for s in 1..=total {
            // residual at s only; earlier basis elements are evaluated lazily
            let mut r = h.value(s).clone();
            for (t, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let b = self.basis[t].value(s);
                if !b.is_zero() {
                    r -= &(c * b);
                }
            }
            let gs = if r.is_zero() {
                Polynomial::zero(g.nvars())
            } else {
                r.divide_exact_product(&self.divisors[s - 1]).map_err(|_| {
                    ReductionError::NotAClass {
                        vertex: s,
                        divisor: self.divisors[s - 1]
                            .iter()
                            .map(|a| format!("({})", a))
                            .collect::<Vec<_>>()
                            .join("*"),
                        residual: r.to_string(),
                    }
                })?
            };
            coeffs.push(gs);
        }
        let n = g.n();
        let g_delta = coeffs.split_off(n + 1);
        Ok(CanonicalForm {
            n,
            g_poly: coeffs,
            g_delta,
        })
    }

    pub fn evaluate(&self, cf: &CanonicalForm) -> Result<Cochain, ReductionError> {
        let n = self.g.n();
        if cf.n != n || cf.g_poly.len() != n + 1 || cf.g_delta.len() != n + 1 {
            return Err(ReductionError::WrongLength {
                expected: n + 1,
                got_poly: cf.g_poly.len(),
                got_delta: cf.g_delta.len(),
            });
        }
        if let Some(p) = cf.coefficients().find(|p| p.nvars() != self.g.nvars()) {
            return Err(ReductionError::ShapeMismatch {
                expected: self.g.num_vertices(),
                got: self.g.num_vertices(),
                expected_vars: self.g.nvars(),
                got_vars: p.nvars(),
            });
        }
        let mut out = Cochain::zero(self.g);
        for (c, b) in cf.coefficients().zip(&self.basis) {
            if !c.is_zero() {
                out = out + b.scale(c);
            }
        }
        Ok(out)
    }

    /// Zero test through the decomposition.
    pub fn is_zero(&self, h: &Cochain) -> Result<bool, ReductionError> {
        Ok(self.reduce(h)?.is_zero())
    }
}

pub fn reduce(g: &QuadricGraph, h: &Cochain) -> Result<CanonicalForm, ReductionError> {
    Reducer::new(g).reduce(h)
}

pub fn evaluate(g: &QuadricGraph, cf: &CanonicalForm) -> Result<Cochain, ReductionError> {
    Reducer::new(g).evaluate(cf)
}

pub fn is_zero(g: &QuadricGraph, h: &Cochain) -> Result<bool, ReductionError> {
    Reducer::new(g).is_zero(h)
}

/// Restriction of a class to vertex `v`.
pub fn localize(g: &QuadricGraph, h: &Cochain, v: Vertex) -> Result<Polynomial, ReductionError> {
    if let Err(e) = crate::cohomology::is_class(g, h) {
        return Err(ReductionError::NotAClass {
            vertex: e.tail,
            divisor: e.modulus,
            residual: e.difference,
        });
    }
    Ok(h.value(v).clone())
}

/// The `n+1` indices `i` whose `M_i(v)` form a basis of the linear forms.
///
/// `[n+2] \ {v}` for `v <= n+2` and `[n+2] \ {bar v}` for `v >= n+3`.
pub fn localization_basis(g: &QuadricGraph, v: Vertex) -> Vec<Vertex> {
    let n = g.n();
    let skip = if v <= n + 2 { v } else { g.bar(v) };
    (1..=n + 2).filter(|&i| i != skip).collect()
}

/// Rows `M_i(v)` for `i` in `indices`, as integer coefficient vectors.
pub fn localization_matrix(g: &QuadricGraph, v: Vertex, indices: &[Vertex]) -> Vec<Vec<i64>> {
    indices
        .iter()
        .map(|&i| {
            make_m(g, i)
                .value(v)
                .to_linear_form()
                .map(|l| l.coeffs().to_vec())
                .unwrap_or_else(|| vec![0; g.nvars()])
        })
        .collect()
}

pub fn localization_determinant(g: &QuadricGraph, v: Vertex) -> BigInt {
    crate::graph::determinant(&localization_matrix(g, v, &localization_basis(g, v)))
}
