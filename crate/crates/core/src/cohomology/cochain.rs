use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{QuadricGraph, Vertex};
use crate::poly::{PolyError, Polynomial};

/// A vertex-indexed family of polynomials `h: V -> Z[x1..x_{n+1}]`.
///
/// It represents a class in the graph equivariant cohomology exactly when
/// every edge congruence holds, see [`is_class`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    nvars: usize,
    /// `values[v - 1]`
    values: Vec<Polynomial>,
}

/// First edge on which `h(i) - h(j)` is not divisible by `alpha(ij)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("congruence fails on edge {tail}-{head}: {difference} is not divisible by {modulus}")]
pub struct CongruenceViolation {
    pub tail: Vertex,
    pub head: Vertex,
    pub difference: String,
    pub modulus: String,
}

#[derive(Debug, Error)]
pub enum CochainJsonError {
    #[error("missing value for vertex {0}")]
    MissingVertex(Vertex),
    #[error("unexpected vertex {0}")]
    UnexpectedVertex(Vertex),
    #[error("vertex {0}: {1}")]
    Poly(Vertex, PolyError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Cochain {
    pub fn zero(g: &QuadricGraph) -> Self {
        Cochain {
            nvars: g.nvars(),
            values: vec![Polynomial::zero(g.nvars()); g.num_vertices()],
        }
    }

    /// The constant cochain `iota(p)`.
    pub fn constant(g: &QuadricGraph, p: &Polynomial) -> Self {
        assert_eq!(p.nvars(), g.nvars());
        Cochain {
            nvars: g.nvars(),
            values: vec![p.clone(); g.num_vertices()],
        }
    }

    pub fn from_values(g: &QuadricGraph, values: Vec<Polynomial>) -> Self {
        assert_eq!(values.len(), g.num_vertices(), "one value per vertex");
        assert!(values.iter().all(|p| p.nvars() == g.nvars()));
        Cochain {
            nvars: g.nvars(),
            values,
        }
    }

    pub fn from_fn(g: &QuadricGraph, mut f: impl FnMut(Vertex) -> Polynomial) -> Self {
        let values = g.vertices().map(&mut f).collect();
        Self::from_values(g, values)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_vertices(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, v: Vertex) -> &Polynomial {
        &self.values[v - 1]
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Polynomial::is_zero)
    }

    /// Vertices with a nonzero value.
    pub fn support(&self) -> Vec<Vertex> {
        (1..=self.values.len())
            .filter(|&v| !self.values[v - 1].is_zero())
            .collect()
    }

    /// Multiplies every vertex value by `p`, i.e. `iota(p) * self`.
    pub fn scale(&self, p: &Polynomial) -> Cochain {
        Cochain {
            nvars: self.nvars,
            values: self.values.iter().map(|h| h * p).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Cochain {
        Cochain {
            nvars: self.nvars,
            values: self.values.iter().map(|h| h.scale(c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Cochain {
        Cochain {
            nvars: self.nvars,
            values: self.values.iter().map(|h| h.pow(e)).collect(),
        }
    }

    /// Common polynomial degree of all nonzero values. `Some(None)` for the
    /// zero cochain, `None` when inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<Option<u32>> {
        let mut deg = None;
        for p in &self.values {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        Some(deg)
    }

    /// True when zero or every value is homogeneous of polynomial degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.values.iter().all(|p| p.is_homogeneous_of(d))
    }

    pub fn homogeneous_component(&self, d: u32) -> Cochain {
        Cochain {
            nvars: self.nvars,
            values: self.values.iter().map(|p| p.homogeneous_component(d)).collect(),
        }
    }

    /// `{"1": "poly", "2": "poly", ...}`
    pub fn to_json(&self) -> BTreeMap<Vertex, String> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, p)| (i + 1, p.to_string()))
            .collect()
    }

    pub fn from_json(g: &QuadricGraph, map: &BTreeMap<Vertex, String>) -> Result<Self, CochainJsonError> {
        if let Some(&v) = map.keys().find(|&&v| v < 1 || v > g.num_vertices()) {
            return Err(CochainJsonError::UnexpectedVertex(v));
        }
        let mut values = Vec::with_capacity(g.num_vertices());
        for v in g.vertices() {
            let text = map.get(&v).ok_or(CochainJsonError::MissingVertex(v))?;
            let p = Polynomial::parse(g.nvars(), text).map_err(|e| CochainJsonError::Poly(v, e))?;
            values.push(p);
        }
        Ok(Self::from_values(g, values))
    }

    pub fn from_json_str(g: &QuadricGraph, s: &str) -> Result<Self, CochainJsonError> {
        let map: BTreeMap<Vertex, String> = serde_json::from_str(s)?;
        Self::from_json(g, &map)
    }

    fn zip_with(&self, other: &Cochain, f: impl Fn(&Polynomial, &Polynomial) -> Polynomial) -> Cochain {
        assert_eq!(self.values.len(), other.values.len(), "cochains on different graphs");
        assert_eq!(self.nvars, other.nvars, "cochains over different rings");
        Cochain {
            nvars: self.nvars,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

/// Checks `h(i) - h(j) = 0 mod alpha(ij)` on every edge, in lexicographic
/// edge order, and returns the first violation.
pub fn is_class(g: &QuadricGraph, h: &Cochain) -> Result<(), CongruenceViolation> {
    assert_eq!(h.num_vertices(), g.num_vertices());
    for (i, j) in g.edges() {
        let diff = h.value(i) - h.value(j);
        if diff.is_zero() {
            continue;
        }
        let a = g.alpha(i, j);
        if diff.divide_exact_linear(&a).is_err() {
            return Err(CongruenceViolation {
                tail: i,
                head: j,
                difference: diff.to_string(),
                modulus: a.to_string(),
            });
        }
    }
    Ok(())
}

impl Add<&Cochain> for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&Cochain> for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&Cochain> for &Cochain {
    type Output = Cochain;
    fn mul(self, rhs: &Cochain) -> Cochain {
        self.zip_with(rhs, |a, b| {
            if a.is_zero() || b.is_zero() {
                Polynomial::zero(a.nvars())
            } else {
                a * b
            }
        })
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Cochain> for Cochain {
            type Output = Cochain;
            fn $method(self, rhs: Cochain) -> Cochain {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cochain> for Cochain {
            type Output = Cochain;
            fn $method(self, rhs: &Cochain) -> Cochain {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cochain> for &Cochain {
            type Output = Cochain;
            fn $method(self, rhs: Cochain) -> Cochain {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        Cochain {
            nvars: self.nvars,
            values: self.values.iter().map(|p| -p).collect(),
        }
    }
}

impl Neg for Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        -&self
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str(")")
    }
}
