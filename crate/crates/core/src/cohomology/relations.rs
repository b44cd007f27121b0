use super::{is_class, make_delta, make_m, make_x, Cochain, CohomologyError, GeneratorId, VertexSet};
use crate::graph::{QuadricGraph, Vertex};
use crate::poly::{elementary_symmetric, Polynomial};

/// Both sides of an identity between cochains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub lhs: Cochain,
    pub rhs: Cochain,
    pub equal: bool,
}

impl RelationCheck {
    fn new(lhs: Cochain, rhs: Cochain) -> Self {
        let equal = lhs == rhs;
        RelationCheck { lhs, rhs, equal }
    }

    /// `lhs - rhs`, the defect the identity claims to vanish.
    pub fn defect(&self) -> Cochain {
        &self.lhs - &self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation1Outcome {
    /// The index sets have a common vertex, so the relation says nothing.
    NotApplicable,
    Checked { product: Cochain, zero: bool },
}

impl Relation1Outcome {
    pub fn holds(&self) -> bool {
        match self {
            Relation1Outcome::NotApplicable => true,
            Relation1Outcome::Checked { zero, .. } => *zero,
        }
    }
}

/// The product of `G_J` over a collection with empty common intersection
/// of the index sets `J` must vanish.
pub fn verify_relation1(g: &QuadricGraph, gens: &[GeneratorId]) -> Result<Relation1Outcome, CohomologyError> {
    let common = gens
        .iter()
        .fold(VertexSet::full(g), |acc, j| acc.intersection(&j.index_set(g)));
    if gens.is_empty() || !common.is_empty() {
        return Ok(Relation1Outcome::NotApplicable);
    }
    let mut product: Option<Cochain> = None;
    for id in gens {
        let c = id.cochain(g)?;
        product = Some(match product {
            None => c,
            Some(p) => &p * &c,
        });
    }
    let product = product.expect("nonempty collection");
    let zero = product.is_zero();
    Ok(Relation1Outcome::Checked { product, zero })
}

/// `M_v + M_{bar v}` against `M_w + M_{bar w}`.
pub fn verify_relation2(g: &QuadricGraph, v: Vertex, w: Vertex) -> RelationCheck {
    let lhs = make_m(g, v) + make_m(g, g.bar(v));
    let rhs = make_m(g, w) + make_m(g, g.bar(w));
    RelationCheck::new(lhs, rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation3 {
    pub check: RelationCheck,
    /// The bar pair disjoint from `I`, smaller vertex first.
    pub pair: (Vertex, Vertex),
}

/// `prod_{i in I} M_i = Delta_{(I + a)^c} + Delta_{(I + bar a)^c}` where
/// `{a, bar a}` is the unique bar pair missing from `I`.
pub fn verify_relation3(g: &QuadricGraph, set: &VertexSet) -> Result<Relation3, CohomologyError> {
    set.check_star(g)?;
    if set.len() != g.n() {
        return Err(CohomologyError::WrongSize {
            set: *set,
            expected: g.n(),
            got: set.len(),
        });
    }
    let a = (1..=g.n() + 1)
        .find(|&i| !set.contains(i) && !set.contains(g.bar(i)))
        .expect("a set of size n with property (*) misses exactly one bar pair");
    let ab = g.bar(a);
    let lhs = set
        .iter()
        .map(|i| make_m(g, i))
        .reduce(|acc, m| &acc * &m)
        .expect("n >= 1");
    let k1 = set.with(a).complement(g);
    let k2 = set.with(ab).complement(g);
    let rhs = make_delta(g, &k1)? + make_delta(g, &k2)?;
    Ok(Relation3 {
        check: RelationCheck::new(lhs, rhs),
        pair: (a.min(ab), a.max(ab)),
    })
}

/// `Delta_K * M_i = Delta_{K \ {i}}` for `i` in `K`, `|K| >= 2`.
pub fn verify_relation4(g: &QuadricGraph, k: &VertexSet, i: Vertex) -> Result<RelationCheck, CohomologyError> {
    k.check_star(g)?;
    if !k.contains(i) {
        return Err(CohomologyError::NotMember(i, *k));
    }
    if k.len() < 2 {
        return Err(CohomologyError::Singleton(*k, i));
    }
    let lhs = &make_delta(g, k)? * &make_m(g, i);
    let rhs = make_delta(g, &k.without(i))?;
    Ok(RelationCheck::new(lhs, rhs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductFormula {
    pub check: RelationCheck,
    pub intersection: VertexSet,
    /// Vertices outside `K` and `H`, feeding the symmetric functions.
    pub outside: VertexSet,
    /// `sum_i (-1)^i X^i S_{k-i}(M_v | v outside)`; `None` when `K` and `H`
    /// are disjoint.
    pub factor: Option<Cochain>,
    pub factor_text: String,
}

/// `Delta_K * Delta_H = Delta_{K cap H} * sum_{i=0}^{k} (-1)^i X^i
/// S_{k-i}(M_v | v not in K cup H)` with `k = |K cap H| - 1` and
/// `Delta_{empty} = 0`.
pub fn product_formula(g: &QuadricGraph, k: &VertexSet, h: &VertexSet) -> Result<ProductFormula, CohomologyError> {
    for s in [k, h] {
        s.check_star(g)?;
        if s.len() != g.n() + 1 {
            return Err(CohomologyError::WrongSize {
                set: *s,
                expected: g.n() + 1,
                got: s.len(),
            });
        }
    }
    let lhs = &make_delta(g, k)? * &make_delta(g, h)?;
    let inter = k.intersection(h);
    let outside = k.union(h).complement(g);
    if inter.is_empty() {
        return Ok(ProductFormula {
            check: RelationCheck::new(lhs, Cochain::zero(g)),
            intersection: inter,
            outside,
            factor: None,
            factor_text: "0".to_string(),
        });
    }
    let deg = inter.len() - 1;
    let ms: Vec<Cochain> = outside.iter().map(|v| make_m(g, v)).collect();
    let x = make_x(g);
    let factor = Cochain::from_fn(g, |p| {
        let inputs: Vec<Polynomial> = ms.iter().map(|m| m.value(p).clone()).collect();
        let xp = x.value(p);
        let mut acc = Polynomial::zero(g.nvars());
        for i in 0..=deg {
            let s = elementary_symmetric(g.nvars(), deg - i, &inputs).expect("|outside| = k + 1");
            let term = &xp.pow(i as u32) * &s;
            if i % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    });
    let rhs = &make_delta(g, &inter)? * &factor;
    Ok(ProductFormula {
        check: RelationCheck::new(lhs, rhs),
        intersection: inter,
        outside,
        factor_text: product_formula_factor_text(deg, &outside.to_vec()),
        factor: Some(factor),
    })
}

/// Symbolic form of `sum_{i=0}^{k} (-1)^i X^i S_{k-i}(M_v | v in outside)`,
/// e.g. `M_1 + M_4 - X`.
pub fn product_formula_factor_text(k: usize, outside: &[Vertex]) -> String {
    fn subsets(items: &[Vertex], size: usize) -> Vec<Vec<Vertex>> {
        if size == 0 {
            return vec![vec![]];
        }
        if items.len() < size {
            return vec![];
        }
        let mut with: Vec<Vec<Vertex>> = subsets(&items[1..], size - 1)
            .into_iter()
            .map(|mut s| {
                s.insert(0, items[0]);
                s
            })
            .collect();
        with.extend(subsets(&items[1..], size));
        with
    }

    let mut out = String::new();
    for i in 0..=k {
        for s in subsets(outside, k - i) {
            let mut factors: Vec<String> = Vec::new();
            match i {
                0 => {}
                1 => factors.push("X".into()),
                _ => factors.push(format!("X^{}", i)),
            }
            factors.extend(s.iter().map(|v| format!("M_{}", v)));
            let mono = if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            };
            let neg = i % 2 == 1;
            match (out.is_empty(), neg) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(&mono);
        }
    }
    out
}

/// Given a degree-2 class `a` agreeing with `M_v` away from `{v, bar v}`,
/// reports whether `a = M_v` everywhere.
pub fn uniqueness_probe_m(g: &QuadricGraph, v: Vertex, a: &Cochain) -> Result<bool, CohomologyError> {
    if let Err(e) = is_class(g, a) {
        return Err(CohomologyError::Precondition(e.to_string()));
    }
    let m = make_m(g, v);
    let vb = g.bar(v);
    if let Some(j) = g
        .vertices()
        .find(|&j| j != v && j != vb && a.value(j) != m.value(j))
    {
        return Err(CohomologyError::Precondition(format!(
            "value at {} is {}, M_{}({}) = {}",
            j,
            a.value(j),
            v,
            j,
            m.value(j)
        )));
    }
    Ok(a == &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{iota, star_sets, star_sets_of_size};

    fn vs(v: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(v)
    }

    #[test]
    fn relation1_examples() {
        let g = QuadricGraph::build(2).unwrap();
        let out = verify_relation1(&g, &[GeneratorId::Delta(vs(&[1])), GeneratorId::M(1)]).unwrap();
        assert!(matches!(out, Relation1Outcome::Checked { zero: true, .. }));
        assert_eq!(
            verify_relation1(&g, &[GeneratorId::M(1)]).unwrap(),
            Relation1Outcome::NotApplicable
        );
        let out = verify_relation1(
            &g,
            &[GeneratorId::Delta(vs(&[1, 2])), GeneratorId::Delta(vs(&[4, 5]))],
        )
        .unwrap();
        assert!(matches!(out, Relation1Outcome::Checked { zero: true, .. }));
        // Delta_{1,2} M_1 is supported on {2}: not a relation instance.
        let out = verify_relation1(&g, &[GeneratorId::Delta(vs(&[1, 2])), GeneratorId::M(1)]).unwrap();
        assert_eq!(out, Relation1Outcome::NotApplicable);
    }

    #[test]
    fn relation3_examples() {
        let g = QuadricGraph::build(2).unwrap();
        let r = verify_relation3(&g, &vs(&[1, 4])).unwrap();
        assert_eq!(r.pair, (2, 5));
        assert!(r.check.equal);
        let expected = make_delta(&g, &vs(&[2, 3, 6])).unwrap() + make_delta(&g, &vs(&[3, 5, 6])).unwrap();
        assert_eq!(r.check.rhs, expected);
        assert_eq!(r.check.lhs, make_m(&g, 4) * make_m(&g, 1));

        let g3 = QuadricGraph::build(3).unwrap();
        let r = verify_relation3(&g3, &vs(&[1, 2, 3])).unwrap();
        assert!(r.check.equal);
        let expected =
            make_delta(&g3, &vs(&[5, 6, 7, 8])).unwrap() + make_delta(&g3, &vs(&[4, 6, 7, 8])).unwrap();
        assert_eq!(r.check.rhs, expected);

        assert!(matches!(
            verify_relation3(&g, &vs(&[1])),
            Err(CohomologyError::WrongSize { .. })
        ));
        assert!(matches!(
            verify_relation3(&g, &vs(&[1, 6])),
            Err(CohomologyError::PropertyStar(_))
        ));
    }

    #[test]
    fn relation3_exhaustive_n2() {
        let g = QuadricGraph::build(2).unwrap();
        let sets = star_sets_of_size(&g, 2);
        assert_eq!(sets.len(), 12);
        for i in sets {
            assert!(verify_relation3(&g, &i).unwrap().check.equal, "{}", i);
        }
    }

    #[test]
    fn relation4_examples() {
        let g = QuadricGraph::build(2).unwrap();
        let r = verify_relation4(&g, &vs(&[2, 3, 6]), 3).unwrap();
        assert!(r.equal);
        assert_eq!(r.rhs, make_delta(&g, &vs(&[2, 6])).unwrap());
        assert!(verify_relation4(&g, &vs(&[1, 2]), 2).unwrap().equal);
        assert_eq!(
            verify_relation4(&g, &vs(&[1, 2]), 3),
            Err(CohomologyError::NotMember(3, vs(&[1, 2])))
        );
        assert_eq!(
            verify_relation4(&g, &vs(&[1]), 1),
            Err(CohomologyError::Singleton(vs(&[1]), 1))
        );
    }

    #[test]
    fn product_formula_worked_instance() {
        let g = QuadricGraph::build(2).unwrap();
        let r = product_formula(&g, &vs(&[2, 3, 6]), &vs(&[3, 5, 6])).unwrap();
        assert!(r.check.equal);
        assert_eq!(r.factor_text, "M_1 + M_4 - X");
        assert_eq!(r.intersection, vs(&[3, 6]));
        let expected = make_m(&g, 1) + make_m(&g, 4) - make_x(&g);
        assert_eq!(r.factor.as_ref().unwrap(), &expected);
        // A(3) = A(6) = -x2
        let mx2 = -Polynomial::var(3, 2);
        assert_eq!(expected.value(3), &mx2);
        assert_eq!(expected.value(6), &mx2);
    }

    #[test]
    fn product_formula_disjoint_and_square() {
        let g = QuadricGraph::build(2).unwrap();
        let k = vs(&[1, 2, 3]);
        let r = product_formula(&g, &k, &k.complement(&g)).unwrap();
        assert!(r.check.lhs.is_zero() && r.check.equal);
        let r = product_formula(&g, &k, &k).unwrap();
        assert!(r.check.equal);
        assert_eq!(
            r.factor_text,
            "M_4*M_5 + M_4*M_6 + M_5*M_6 - X*M_4 - X*M_5 - X*M_6 + X^2"
        );
        assert!(product_formula(&g, &vs(&[1, 2]), &k).is_err());
    }

    #[test]
    fn product_formula_exhaustive_n2() {
        let g = QuadricGraph::build(2).unwrap();
        let top = star_sets_of_size(&g, 3);
        assert_eq!(top.len(), 8);
        for k in &top {
            for h in &top {
                assert!(product_formula(&g, k, h).unwrap().check.equal, "{} {}", k, h);
            }
        }
    }

    #[test]
    fn factor_text_small_cases() {
        assert_eq!(product_formula_factor_text(0, &[3]), "1");
        assert_eq!(product_formula_factor_text(1, &[1, 4]), "M_1 + M_4 - X");
        assert_eq!(
            product_formula_factor_text(2, &[1, 2, 3]),
            "M_1*M_2 + M_1*M_3 + M_2*M_3 - X*M_1 - X*M_2 - X*M_3 + X^2"
        );
    }

    #[test]
    fn uniqueness_probe_basic() {
        let g = QuadricGraph::build(2).unwrap();
        let m = make_m(&g, 3);
        assert_eq!(uniqueness_probe_m(&g, 3, &m), Ok(true));
        let shifted = &m + &iota(&g, &Polynomial::var(3, 1));
        assert!(matches!(
            uniqueness_probe_m(&g, 3, &shifted),
            Err(CohomologyError::Precondition(_))
        ));
    }

    #[test]
    fn relation2_all_pairs() {
        let g = QuadricGraph::build(3).unwrap();
        for v in g.vertices() {
            for w in g.vertices() {
                let r = verify_relation2(&g, v, w);
                assert!(r.equal && r.defect().is_zero());
            }
        }
        assert!(star_sets(&g).len() > 0);
    }
}
