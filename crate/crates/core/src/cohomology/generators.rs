use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::{Cochain, CohomologyError};
use crate::graph::{QuadricGraph, Vertex};
use crate::poly::Polynomial;

/// A subset of the vertices `1..=2n+2`, stored as a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn from_vertices(vs: &[Vertex]) -> Self {
        let mut s = VertexSet(0);
        for &v in vs {
            s.insert(v);
        }
        s
    }

    /// All vertices of `g`.
    pub fn full(g: &QuadricGraph) -> Self {
        VertexSet((1u64 << g.num_vertices()) - 1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!((1..=64).contains(&v), "vertex {} out of range", v);
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: Vertex) {
        if (1..=64).contains(&v) {
            self.0 &= !(1 << (v - 1));
        }
    }

    pub fn with(mut self, v: Vertex) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: Vertex) -> Self {
        self.remove(v);
        self
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> {
        let bits = self.0;
        (1..=64).filter(move |v| bits & (1 << (v - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn complement(&self, g: &QuadricGraph) -> VertexSet {
        VertexSet(!self.0 & VertexSet::full(g).0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The image under the bar involution.
    pub fn bar(&self, g: &QuadricGraph) -> VertexSet {
        VertexSet::from_vertices(&self.iter().map(|v| g.bar(v)).collect::<Vec<_>>())
    }

    /// No bar pair `{i, bar i}` inside the set; equivalently the full
    /// subgraph on it is complete.
    pub fn has_property_star(&self, g: &QuadricGraph) -> bool {
        self.iter().all(|v| !self.contains(g.bar(v)))
    }

    fn check_range(&self, g: &QuadricGraph) -> Result<(), CohomologyError> {
        match self.iter().find(|&v| v > g.num_vertices()) {
            Some(v) => Err(CohomologyError::VertexOutOfRange(v)),
            None => Ok(()),
        }
    }

    /// Errors unless the set is nonempty, in range, and has property (*).
    pub fn check_star(&self, g: &QuadricGraph) -> Result<(), CohomologyError> {
        self.check_range(g)?;
        if self.is_empty() {
            return Err(CohomologyError::EmptySet);
        }
        if !self.has_property_star(g) {
            return Err(CohomologyError::PropertyStar(*self));
        }
        Ok(())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        f.write_str("}")
    }
}

impl FromStr for VertexSet {
    type Err = String;

    /// Comma-separated 1-based vertices, optionally in braces: `2,3,6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = VertexSet::empty();
        if inner.trim().is_empty() {
            return Ok(set);
        }
        for part in inner.split(',') {
            let v: Vertex = part
                .trim()
                .parse()
                .map_err(|_| format!("invalid vertex '{}'", part.trim()))?;
            if v == 0 || v > 64 {
                return Err(format!("vertex {} out of range", v));
            }
            set.insert(v);
        }
        Ok(set)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

/// Every nonempty vertex set with property (*), ordered by size and then
/// lexicographically.
pub fn star_sets(g: &QuadricGraph) -> Vec<VertexSet> {
    let pairs = g.n() + 1;
    let mut out = Vec::new();
    let total = 3usize.pow(pairs as u32);
    for code in 1..total {
        let mut c = code;
        let mut s = VertexSet::empty();
        for i in 1..=pairs {
            match c % 3 {
                1 => s.insert(i),
                2 => s.insert(g.bar(i)),
                _ => {}
            }
            c /= 3;
        }
        out.push(s);
    }
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    out
}

pub fn star_sets_of_size(g: &QuadricGraph, k: usize) -> Vec<VertexSet> {
    star_sets(g).into_iter().filter(|s| s.len() == k).collect()
}

/// The constant class `iota(p)`.
pub fn iota(g: &QuadricGraph, p: &Polynomial) -> Cochain {
    Cochain::constant(g, p)
}

/// `M_v`: zero at `v`, `alpha(jv)` at `j != v, bar v`, and
/// `x_n - x_{n+1} - 2 f(bar v)` at `bar v`.
pub fn make_m(g: &QuadricGraph, v: Vertex) -> Cochain {
    assert!(g.vertices().contains(&v), "vertex {} out of range", v);
    let vb = g.bar(v);
    Cochain::from_fn(g, |j| {
        if j == v {
            Polynomial::zero(g.nvars())
        } else if j == vb {
            g.bar_sum() - g.f(vb).scale(&BigInt::from(2))
        } else {
            g.alpha(j, v).to_polynomial()
        }
    })
}

/// `X(k) = x_n - x_{n+1} - 2 f(k)`.
pub fn make_x(g: &QuadricGraph) -> Cochain {
    let two = BigInt::from(2);
    Cochain::from_fn(g, |k| g.bar_sum() - g.f(k).scale(&two))
}

/// The Thom class `Delta_K`: at `j` in `K` the product of `alpha(jk)` over
/// `k` outside `K` and different from `bar j`; zero off `K`.
pub fn make_delta(g: &QuadricGraph, k: &VertexSet) -> Result<Cochain, CohomologyError> {
    k.check_star(g)?;
    Ok(Cochain::from_fn(g, |j| {
        if !k.contains(j) {
            return Polynomial::zero(g.nvars());
        }
        let jb = g.bar(j);
        g.vertices()
            .filter(|&m| !k.contains(m) && m != jb)
            .fold(Polynomial::one(g.nvars()), |acc, m| &acc * &g.alpha(j, m).to_polynomial())
    }))
}

/// A ring generator, indexed without the overloading of `G_J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorId {
    M(Vertex),
    Delta(VertexSet),
}

impl GeneratorId {
    /// Resolves an index set `J`: `V \ {v}` names `M_v`, a set with
    /// property (*) names `Delta_J`.
    pub fn from_index_set(g: &QuadricGraph, j: &VertexSet) -> Result<Self, CohomologyError> {
        let comp = j.complement(g);
        if j.is_subset(&VertexSet::full(g)) && comp.len() == 1 {
            return Ok(GeneratorId::M(comp.iter().next().expect("one element")));
        }
        match j.check_star(g) {
            Ok(()) => Ok(GeneratorId::Delta(*j)),
            Err(_) => Err(CohomologyError::InvalidIndexSet(*j)),
        }
    }

    /// The index set `J` with `G_J` equal to this generator; the generator
    /// vanishes off `J`.
    pub fn index_set(&self, g: &QuadricGraph) -> VertexSet {
        match self {
            GeneratorId::M(v) => VertexSet::full(g).without(*v),
            GeneratorId::Delta(k) => *k,
        }
    }

    /// Cohomological degree.
    pub fn degree(&self, g: &QuadricGraph) -> usize {
        match self {
            GeneratorId::M(_) => 2,
            GeneratorId::Delta(k) => 4 * g.n() + 2 - 2 * k.len(),
        }
    }

    pub fn cochain(&self, g: &QuadricGraph) -> Result<Cochain, CohomologyError> {
        match self {
            GeneratorId::M(v) => {
                if !g.vertices().contains(v) {
                    return Err(CohomologyError::VertexOutOfRange(*v));
                }
                Ok(make_m(g, *v))
            }
            GeneratorId::Delta(k) => make_delta(g, k),
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::M(v) => write!(f, "M_{}", v),
            GeneratorId::Delta(k) => write!(f, "Delta_{}", k),
        }
    }
}

/// `M_1, ..., M_{2n+2}` followed by every `Delta_K`.
pub fn all_generators(g: &QuadricGraph) -> Vec<GeneratorId> {
    g.vertices()
        .map(GeneratorId::M)
        .chain(star_sets(g).into_iter().map(GeneratorId::Delta))
        .collect()
}
