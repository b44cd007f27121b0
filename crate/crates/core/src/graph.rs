//! The GKM graph of the even-dimensional quadric `Q_{2n}`.
//!
//! Vertices are `1..=2n+2`, the bar involution is `v -> 2n+3-v`, and the
//! edges are all pairs except the bar pairs (the complete graph minus a
//! perfect matching). The axial function is given by a vertex labelling `f`
//! through `alpha(ij) = f(j) - f(i)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{LinearForm, PolyError, Polynomial};

/// A vertex label in `1..=2n+2`.
pub type Vertex = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("n must be at least 1, got {0}")]
    InvalidN(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {0}-{1} has no axial function value")]
    MissingEdge(Vertex, Vertex),
    #[error("missing value f({0})")]
    MissingVertexValue(Vertex),
    #[error("axial value on {0}-{1} is not a linear form")]
    NotLinear(Vertex, Vertex),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricGraph {
    n: usize,
    /// `f[v - 1]`
    f: Vec<Polynomial>,
    /// `alpha(i, j)` for `i < j`; the reverse orientation is the negation.
    alpha: BTreeMap<(Vertex, Vertex), LinearForm>,
}

impl QuadricGraph {
    /// Builds `Q_{2n}` with `f(j) = x_{j-1} - x_{n+1}` for `j <= n+2` and
    /// `f(j) = x_n - x_{2n+2-j}` for `j >= n+3` (with `x_0 = 0`).
    pub fn build(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidN(n));
        }
        let m = n + 1;
        let x = |i: usize| {
            if i == 0 {
                Polynomial::zero(m)
            } else {
                Polynomial::var(m, i)
            }
        };
        let f: Vec<Polynomial> = (1..=2 * n + 2)
            .map(|j| {
                if j <= n + 2 {
                    x(j - 1) - x(n + 1)
                } else {
                    x(n) - x(2 * n + 2 - j)
                }
            })
            .collect();
        let mut alpha = BTreeMap::new();
        for i in 1..=2 * n + 2 {
            for j in i + 1..=2 * n + 2 {
                if i + j != 2 * n + 3 {
                    let diff = &f[j - 1] - &f[i - 1];
                    let form = diff.to_linear_form().expect("f is linear");
                    alpha.insert((i, j), form);
                }
            }
        }
        Ok(QuadricGraph { n, f, alpha })
    }

    /// Assembles a graph from explicit data, e.g. a deserialized fixture.
    /// Only the shape is checked here; use [`validate`] for the lemmas.
    pub fn from_parts(
        n: usize,
        f: Vec<Polynomial>,
        alpha: BTreeMap<(Vertex, Vertex), LinearForm>,
    ) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidN(n));
        }
        let nv = 2 * n + 2;
        if f.len() != nv {
            return Err(GraphError::MissingVertexValue(f.len() + 1));
        }
        for p in &f {
            if p.nvars() != n + 1 {
                return Err(PolyError::VariableMismatch(n + 1, p.nvars()).into());
            }
        }
        let mut canon = BTreeMap::new();
        for ((i, j), form) in alpha {
            if i < 1 || i > nv {
                return Err(GraphError::VertexOutOfRange(i));
            }
            if j < 1 || j > nv {
                return Err(GraphError::VertexOutOfRange(j));
            }
            if i == j || i + j == 2 * n + 3 {
                return Err(GraphError::NotAnEdge(i, j));
            }
            if form.nvars() != n + 1 {
                return Err(PolyError::VariableMismatch(n + 1, form.nvars()).into());
            }
            let (key, val) = if i < j { ((i, j), form) } else { ((j, i), -&form) };
            if canon.insert(key, val).is_some() {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
        }
        for i in 1..=nv {
            for j in i + 1..=nv {
                if i + j != 2 * n + 3 && !canon.contains_key(&(i, j)) {
                    return Err(GraphError::MissingEdge(i, j));
                }
            }
        }
        Ok(QuadricGraph {
            n,
            f,
            alpha: canon,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of polynomial variables, `n + 1`.
    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.n + 2
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.num_vertices()
    }

    pub fn bar(&self, v: Vertex) -> Vertex {
        debug_assert!(v >= 1 && v <= self.num_vertices());
        2 * self.n + 3 - v
    }

    pub fn is_edge(&self, i: Vertex, j: Vertex) -> bool {
        let nv = self.num_vertices();
        i != j && (1..=nv).contains(&i) && (1..=nv).contains(&j) && i + j != 2 * self.n + 3
    }

    /// Unordered edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.alpha.keys().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.alpha.len()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let b = self.bar(v);
        self.vertices().filter(move |&w| w != v && w != b)
    }

    pub fn f(&self, v: Vertex) -> &Polynomial {
        &self.f[v - 1]
    }

    /// `alpha(ij)` on the directed edge from `i` to `j`.
    ///
    /// Panics if `ij` is not an edge.
    pub fn alpha(&self, i: Vertex, j: Vertex) -> LinearForm {
        self.try_alpha(i, j)
            .unwrap_or_else(|| panic!("{}-{} is not an edge", i, j))
    }

    pub fn try_alpha(&self, i: Vertex, j: Vertex) -> Option<LinearForm> {
        if i < j {
            self.alpha.get(&(i, j)).cloned()
        } else {
            self.alpha.get(&(j, i)).map(|a| -a)
        }
    }

    /// Overwrites `alpha(ij)` (and hence `alpha(ji)`). Intended for building
    /// deliberately broken fixtures.
    pub fn set_alpha(&mut self, i: Vertex, j: Vertex, form: LinearForm) -> Result<(), GraphError> {
        if !self.is_edge(i, j) {
            return Err(GraphError::NotAnEdge(i, j));
        }
        if i < j {
            self.alpha.insert((i, j), form);
        } else {
            self.alpha.insert((j, i), -&form);
        }
        Ok(())
    }

    /// `x_n - x_{n+1}`.
    pub fn bar_sum(&self) -> Polynomial {
        let m = self.nvars();
        Polynomial::var(m, self.n) - Polynomial::var(m, self.n + 1)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            f: self
                .vertices()
                .map(|v| (v, self.f(v).to_string()))
                .collect(),
            alpha: self
                .alpha
                .iter()
                .map(|(&(i, j), form)| AlphaJson {
                    edge: [i, j],
                    value: form.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self, GraphError> {
        let n = json.n;
        if n < 1 {
            return Err(GraphError::InvalidN(n));
        }
        let m = n + 1;
        let mut f = Vec::with_capacity(2 * n + 2);
        for v in 1..=2 * n + 2 {
            let text = json.f.get(&v).ok_or(GraphError::MissingVertexValue(v))?;
            f.push(Polynomial::parse(m, text)?);
        }
        let mut alpha = BTreeMap::new();
        for a in &json.alpha {
            let [i, j] = a.edge;
            let p = Polynomial::parse(m, &a.value)?;
            let form = p.to_linear_form().ok_or(GraphError::NotLinear(i, j))?;
            let key = (i, j);
            if alpha.insert(key, form).is_some() {
                return Err(GraphError::DuplicateEdge(i, j));
            }
        }
        Self::from_parts(n, f, alpha)
    }

    pub fn from_json_str(s: &str) -> Result<Self, GraphError> {
        let json: GraphJson = serde_json::from_str(s)?;
        Self::from_json(&json)
    }

    /// Graphviz rendering with `f` on the nodes and `alpha(ij)`, `i < j`, on
    /// the edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph Q{} {{", 2 * self.n).unwrap();
        for v in self.vertices() {
            writeln!(out, "  {} [label=\"{}\\n{}\"];", v, v, self.f(v)).unwrap();
        }
        for (&(i, j), form) in &self.alpha {
            writeln!(out, "  {} -- {} [label=\"{}\"];", i, j, form).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub f: BTreeMap<Vertex, String>,
    pub alpha: Vec<AlphaJson>,
}

/// `alpha` on the edge oriented `edge[0] -> edge[1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaJson {
    pub edge: [Vertex; 2],
    pub value: String,
}

/// The labelling `alpha~(ij) = x_j - x_i` of the non-effective action, with
/// `x_k := -x_{bar k}` for `k >= n+2`. Keys are `(i, j)` with `i < j`.
pub fn noneffective_axial(n: usize) -> BTreeMap<(Vertex, Vertex), LinearForm> {
    let m = n + 1;
    let x = |k: usize| {
        if k <= m {
            LinearForm::var(m, k)
        } else {
            -&LinearForm::var(m, 2 * n + 3 - k)
        }
    };
    let mut out = BTreeMap::new();
    for i in 1..=2 * n + 2 {
        for j in i + 1..=2 * n + 2 {
            if i + j != 2 * n + 3 {
                out.insert((i, j), &x(j) - &x(i));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct EffectivizeReport {
    pub n: usize,
    pub holds: bool,
    /// `(j, substituted label, effective alpha(1j))` for every neighbour `j`
    /// of vertex 1.
    pub labels: Vec<(Vertex, LinearForm, LinearForm)>,
    /// Determinant of the images of the replaced basis vectors.
    pub determinant: BigInt,
    /// Index of the lattice spanned by the non-effective labels at vertex 1.
    pub noneffective_index: BigInt,
}

/// Applies the basis change `x_i - x_1 -> x_{i-1}` (`i = 2..n+1`),
/// `-x_{n+1} - x_1 -> x_{n+1}` to the non-effective labels around vertex 1
/// and compares with the effective axial function.
pub fn effectivize_check(n: usize) -> Result<EffectivizeReport, GraphError> {
    let g = QuadricGraph::build(n)?;
    let m = n + 1;
    let tilde = noneffective_axial(n);

    // Columns: x_{k+1} - x_1 for k = 1..n, then -x_{n+1} - x_1.
    let mut basis: Vec<Vec<i64>> = (1..=n)
        .map(|k| (&LinearForm::var(m, k + 1) - &LinearForm::var(m, 1)).coeffs().to_vec())
        .collect();
    basis.push((&(-&LinearForm::var(m, m)) - &LinearForm::var(m, 1)).coeffs().to_vec());
    let basis_images: Vec<Vec<i64>> = (1..=m).map(|k| LinearForm::var(m, k).coeffs().to_vec()).collect();

    let mut holds = true;
    let mut labels = Vec::new();
    for j in g.neighbors(1) {
        let v = tilde.get(&(1, j)).expect("1j is an edge");
        let coords = solve_rational(&basis, v.coeffs());
        let image = coords.and_then(|c| {
            let mut out = vec![0i64; m];
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_integer() {
                    return None;
                }
                let ck: i64 = num_traits::ToPrimitive::to_i64(&ck.to_integer())?;
                for (o, b) in out.iter_mut().zip(&basis_images[k]) {
                    *o += ck * b;
                }
            }
            Some(LinearForm::new(out))
        });
        let eff = g.alpha(1, j);
        match image {
            Some(img) => {
                holds &= img == eff;
                labels.push((j, img, eff));
            }
            None => {
                holds = false;
                labels.push((j, LinearForm::zero(m), eff));
            }
        }
    }
    let determinant = determinant(&basis_images);
    holds &= determinant.abs().is_one();
    let noneffective_index = determinant_of_columns(&basis).abs();
    Ok(EffectivizeReport {
        n,
        holds,
        labels,
        determinant,
        noneffective_index,
    })
}

/// Solves `sum_k c_k * cols[k] = target` over the rationals, if the
/// columns are independent and a solution exists.
fn solve_rational(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let k = cols.len();
    // Augmented matrix, row-major: rows x (k + 1).
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| BigRational::from_integer(c[r].into())).collect();
            row.push(BigRational::from_integer(target[r].into()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return None;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for c in 0..=k {
            a[pivot_row][c] = &a[pivot_row][c] * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..=k {
                    let delta = &factor * &a[pivot_row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if (pivot_row..rows).any(|r| !a[r][k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][k].clone()).collect())
}

/// Determinant of a square matrix given by rows, via fraction-free
/// elimination.
pub(crate) fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "square matrix expected");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

fn determinant_of_columns(cols: &[Vec<i64>]) -> BigInt {
    let n = cols.len();
    let rows: Vec<Vec<i64>> = (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    determinant(&rows)
}

/// Rank over the rationals of a small integer matrix given by rows.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if !a[i][c].is_zero() {
                let factor = &a[i][c] / &a[r][c];
                for k in c..ncols {
                    let delta = &factor * &a[r][k];
                    a[i][k] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            cases: 0,
            passed: true,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(witness());
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks the structural invariants and the basic identities of `f` and
/// `alpha` on every applicable index tuple.
pub fn validate(g: &QuadricGraph) -> ValidationReport {
    let n = g.n();
    let m = g.nvars();
    let nv = g.num_vertices();
    let bar_sum = g.bar_sum();
    let mut checks = Vec::new();

    let mut shape = Check::new("structure");
    shape.record(nv == 2 * n + 2, || format!("{} vertices", nv));
    let expected_edges = nv * (nv - 1) / 2 - (n + 1);
    shape.record(g.num_edges() == expected_edges, || {
        format!("{} edges, expected {}", g.num_edges(), expected_edges)
    });
    for v in g.vertices() {
        let b = g.bar(v);
        shape.record(b != v && g.bar(b) == v, || format!("bar is not an involution at {}", v));
        let deg = g.neighbors(v).count();
        shape.record(deg == 2 * n, || format!("vertex {} has degree {}", v, deg));
    }
    checks.push(shape);

    let mut def = Check::new("alpha(ij) = f(j) - f(i)");
    let mut anti = Check::new("alpha(ij) = -alpha(ji)");
    let mut unit = Check::new("alpha primitive with unit coefficients");
    for i in g.vertices() {
        for j in g.neighbors(i) {
            let a = g.alpha(i, j);
            let diff = g.f(j) - g.f(i);
            def.record(a.to_polynomial() == diff, || {
                format!("alpha({},{}) = {} but f({}) - f({}) = {}", i, j, a, j, i, diff)
            });
            anti.record(a == -&g.alpha(j, i), || format!("edge {}-{}", i, j));
            unit.record(a.is_primitive() && a.has_unit_coefficients(), || {
                format!("alpha({},{}) = {}", i, j, a)
            });
        }
    }
    checks.extend([def, anti, unit]);

    let mut lem_f = Check::new("f(i) + f(bar i) = x_n - x_{n+1}");
    for i in g.vertices() {
        let s = g.f(i) + g.f(g.bar(i));
        lem_f.record(s == bar_sum, || format!("i = {}: sum is {}", i, s));
    }
    checks.push(lem_f);

    let mut lem_bar = Check::new("alpha(ij) = -alpha(bar i bar j)");
    let mut lem_sum = Check::new("alpha(ij) + alpha(i bar j) = x_n - x_{n+1} - 2f(i)");
    for i in g.vertices() {
        let target = &bar_sum - &g.f(i).scale(&BigInt::from(2));
        for j in g.neighbors(i) {
            let a = g.alpha(i, j);
            let b = g.alpha(g.bar(i), g.bar(j));
            lem_bar.record(a == -&b, || format!("i = {}, j = {}", i, j));
            let s = (&a + &g.alpha(i, g.bar(j))).to_polynomial();
            lem_sum.record(s == target, || format!("i = {}, j = {}: {} vs {}", i, j, s, target));
        }
    }
    checks.extend([lem_bar, lem_sum]);

    let mut pair = Check::new("axial functions at a vertex pairwise non-proportional");
    let mut three = Check::new("three-independence");
    for i in g.vertices() {
        let nb: Vec<Vertex> = g.neighbors(i).collect();
        let forms: Vec<LinearForm> = nb.iter().map(|&j| g.alpha(i, j)).collect();
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                pair.record(!forms[a].is_proportional(&forms[b]), || {
                    format!("vertex {}: {} and {}", i, nb[a], nb[b])
                });
                if m < 3 {
                    continue;
                }
                for c in b + 1..nb.len() {
                    let rows = vec![
                        forms[a].coeffs().to_vec(),
                        forms[b].coeffs().to_vec(),
                        forms[c].coeffs().to_vec(),
                    ];
                    three.record(rank(&rows) == 3, || {
                        format!("vertex {}: {}, {}, {}", i, nb[a], nb[b], nb[c])
                    });
                }
            }
        }
    }
    checks.extend([pair, three]);

    ValidationReport { n, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(3, s).unwrap()
    }

    #[test]
    fn n2_vertex_labels() {
        let g = QuadricGraph::build(2).unwrap();
        let want = ["-x3", "x1 - x3", "x2 - x3", "0", "x2 - x1", "x2"];
        for (v, w) in g.vertices().zip(want) {
            assert_eq!(g.f(v), &p(w), "f({})", v);
        }
    }

    #[test]
    fn n2_axial_around_vertex_one() {
        let g = QuadricGraph::build(2).unwrap();
        assert_eq!(g.alpha(1, 2).to_polynomial(), p("x1"));
        assert_eq!(g.alpha(1, 3).to_polynomial(), p("x2"));
        assert_eq!(g.alpha(1, 4).to_polynomial(), p("x3"));
        assert_eq!(g.alpha(1, 5).to_polynomial(), p("x2 - x1 + x3"));
        assert_eq!(g.alpha(5, 1).to_polynomial(), -p("x2 - x1 + x3"));
        assert!(g.try_alpha(1, 6).is_none());
    }

    #[test]
    fn counts() {
        for (n, nv, ne) in [(1, 4, 4), (2, 6, 12), (3, 8, 24), (4, 10, 40)] {
            let g = QuadricGraph::build(n).unwrap();
            assert_eq!(g.num_vertices(), nv);
            assert_eq!(g.num_edges(), ne);
        }
        assert!(matches!(QuadricGraph::build(0), Err(GraphError::InvalidN(0))));
    }

    #[test]
    fn noneffective_labels() {
        let t = noneffective_axial(2);
        assert_eq!(t[&(1, 2)].to_polynomial(), p("x2 - x1"));
        assert_eq!(t[&(1, 4)].to_polynomial(), p("-x3 - x1"));
        assert_eq!(t.len(), 12);
    }

    #[test]
    fn effectivize_holds() {
        for n in 1..=4 {
            let r = effectivize_check(n).unwrap();
            assert!(r.holds, "n = {}: {:?}", n, r);
            assert!(r.determinant.abs().is_one());
            assert_eq!(r.noneffective_index, BigInt::from(2));
        }
        let r = effectivize_check(2).unwrap();
        let subs: Vec<String> = r.labels.iter().map(|l| l.1.to_string()).collect();
        assert_eq!(subs, ["x1", "x2", "x3", "-x1 + x2 + x3"]);
    }

    #[test]
    fn lemma_instances_n2() {
        let g = QuadricGraph::build(2).unwrap();
        assert_eq!(g.f(1) + g.f(6), p("x2 - x3"));
        let s = (&g.alpha(1, 2) + &g.alpha(1, 5)).to_polynomial();
        assert_eq!(s, p("x2 + x3"));
        assert_eq!(s, g.bar_sum() - g.f(1).scale(&BigInt::from(2)));
        let rows: Vec<Vec<i64>> = [2, 3, 4].iter().map(|&j| g.alpha(1, j).coeffs().to_vec()).collect();
        assert_eq!(rank(&rows), 3);
    }

    #[test]
    fn validate_passes_small_n() {
        for n in 1..=4 {
            let g = QuadricGraph::build(n).unwrap();
            let r = validate(&g);
            assert!(r.all_passed(), "n = {}: {:?}", n, r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn validate_reports_sign_flip() {
        let mut g = QuadricGraph::build(2).unwrap();
        let a = g.alpha(2, 4);
        g.set_alpha(2, 4, -&a).unwrap();
        let r = validate(&g);
        assert!(!r.all_passed());
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"alpha(ij) = f(j) - f(i)"));
        assert!(r.failures().all(|c| c.witness.is_some()));
    }

    #[test]
    fn json_round_trip() {
        let g = QuadricGraph::build(3).unwrap();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(QuadricGraph::from_json_str(&s).unwrap(), g);
    }

    #[test]
    fn dot_counts() {
        let dot = QuadricGraph::build(2).unwrap().to_dot();
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert_eq!(dot.matches("[label=\"").count(), 18);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[vec![1, 2], vec![3, 4]]), BigInt::from(-2));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![2, 0, 0], vec![0, 3, 0], vec![1, 1, 1]]), BigInt::from(6));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }
}
