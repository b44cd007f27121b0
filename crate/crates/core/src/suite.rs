//! Exhaustive verification suites over one graph, shared by the CLI and
//! the acceptance tests.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cohomology::{
    all_generators, is_class, make_delta, make_m, product_formula, star_sets, star_sets_of_size,
    verify_relation2, verify_relation3, verify_relation4, Cochain, GeneratorId, VertexSet,
};
use crate::exec::Exec;
use crate::graph::{validate, QuadricGraph};
use crate::poly::Polynomial;
use crate::reduction::Reducer;
use crate::words::WordSampler;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// First failing case.
    pub witness: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Collects `(ok, witness)` outcomes in case order.
struct Tally {
    name: String,
    cases: usize,
    failures: usize,
    witness: Option<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            failures: 0,
            witness: None,
            start: Instant::now(),
        }
    }

    fn record(&mut self, outcome: Result<(), String>) {
        self.cases += 1;
        if let Err(w) = outcome {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(w);
            }
        }
    }

    fn extend(&mut self, outcomes: impl IntoIterator<Item = Result<(), String>>) {
        for o in outcomes {
            self.record(o);
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            witness: self.witness,
            elapsed: self.start.elapsed(),
        }
    }
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

/// Structural checks and the identities of `f` and `alpha`.
pub fn graph_suite(g: &QuadricGraph) -> SuiteResult {
    let mut t = Tally::new("graph lemmas");
    let report = validate(g);
    for c in &report.checks {
        t.cases += c.cases.saturating_sub(1);
        t.record(check(c.passed, || {
            format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())
        }));
    }
    t.finish()
}

/// Generators are classes; `x_i = M_{i+1} - M_1`; `f = -M_{n+2}`.
pub fn generator_suite(g: &QuadricGraph, exec: Exec) -> SuiteResult {
    let mut t = Tally::new("generators");
    let n = g.n();
    let gens = all_generators(g);
    t.extend(exec.map(gens, |id| {
        let h = id.cochain(g).map_err(|e| format!("{}: {}", id, e))?;
        is_class(g, &h).map_err(|e| format!("{}: {}", id, e))
    }));
    for i in 1..=n + 1 {
        let lhs = make_m(g, i + 1) - make_m(g, 1);
        let rhs = Cochain::constant(g, &Polynomial::var(g.nvars(), i));
        t.record(check(lhs == rhs, || format!("x{} != M_{} - M_1", i, i + 1)));
    }
    let f = Cochain::from_fn(g, |v| g.f(v).clone());
    t.record(check(f == -make_m(g, n + 2), || format!("f != -M_{}", n + 2)));
    t.finish()
}

/// Products over collections of at most `max_size` distinct generators
/// whose index sets have empty common intersection vanish.
pub fn relation1_suite(g: &QuadricGraph, max_size: usize, exec: Exec) -> SuiteResult {
    let mut t = Tally::new("relation 1");
    let gens: Vec<(GeneratorId, VertexSet, Cochain)> = all_generators(g)
        .into_iter()
        .map(|id| {
            let c = id.cochain(g).expect("valid generator");
            (id, id.index_set(g), c)
        })
        .collect();
    let full = VertexSet::full(g);
    let m = gens.len();
    // first index of each collection, the rest enumerated inside the job
    let outcomes = exec.map_range(m, |a| {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, VertexSet, Cochain, Vec<usize>)> =
            vec![(a, gens[a].1.intersection(&full), gens[a].2.clone(), vec![a])];
        while let Some((last, inter, prod, members)) = stack.pop() {
            if inter.is_empty() {
                out.push(check(prod.is_zero(), || {
                    let names: Vec<String> = members.iter().map(|&k| gens[k].0.to_string()).collect();
                    format!("{} != 0", names.join("*"))
                }));
                continue;
            }
            if members.len() == max_size {
                continue;
            }
            for b in last + 1..m {
                let mut next = members.clone();
                next.push(b);
                stack.push((b, inter.intersection(&gens[b].1), &prod * &gens[b].2, next));
            }
        }
        out
    });
    for o in outcomes {
        t.extend(o);
    }
    t.finish()
}

pub fn relation2_suite(g: &QuadricGraph) -> SuiteResult {
    let mut t = Tally::new("relation 2");
    for v in g.vertices() {
        for w in g.vertices() {
            let r = verify_relation2(g, v, w);
            t.record(check(r.equal, || format!("M_{0} + M_bar{0} != M_{1} + M_bar{1}", v, w)));
        }
    }
    t.finish()
}

pub fn relation3_suite(g: &QuadricGraph, exec: Exec) -> SuiteResult {
    let mut t = Tally::new("relation 3");
    t.extend(exec.map(star_sets_of_size(g, g.n()), |i| match verify_relation3(g, &i) {
        Ok(r) => check(r.check.equal, || format!("I = {}", i)),
        Err(e) => Err(format!("I = {}: {}", i, e)),
    }));
    t.finish()
}

pub fn relation4_suite(g: &QuadricGraph, exec: Exec) -> SuiteResult {
    let mut t = Tally::new("relation 4");
    let cases: Vec<(VertexSet, usize)> = star_sets(g)
        .into_iter()
        .filter(|k| k.len() >= 2)
        .flat_map(|k| k.iter().map(move |i| (k, i)))
        .collect();
    t.extend(exec.map(cases, |(k, i)| match verify_relation4(g, &k, i) {
        Ok(r) => check(r.equal, || format!("Delta_{} * M_{}", k, i)),
        Err(e) => Err(format!("Delta_{} * M_{}: {}", k, i, e)),
    }));
    t.finish()
}

/// All ordered pairs `(K, H)` of admissible sets of size `n+1`.
pub fn product_suite(g: &QuadricGraph, exec: Exec) -> SuiteResult {
    let mut t = Tally::new("product formula");
    let top = star_sets_of_size(g, g.n() + 1);
    let pairs: Vec<(VertexSet, VertexSet)> = top
        .iter()
        .flat_map(|k| top.iter().map(move |h| (*k, *h)))
        .collect();
    t.extend(exec.map(pairs, |(k, h)| match product_formula(g, &k, &h) {
        Ok(r) => check(r.check.equal, || format!("K = {}, H = {}", k, h)),
        Err(e) => Err(format!("K = {}, H = {}: {}", k, h, e)),
    }));
    t.finish()
}

/// Every relation defect reduces to the zero canonical form.
pub fn defect_reduction_suite(g: &QuadricGraph, exec: Exec) -> SuiteResult {
    let mut t = Tally::new("relation defects reduce to zero");
    let r = Reducer::new(g);
    let mut defects: Vec<(String, Cochain)> = Vec::new();
    for v in g.vertices() {
        for w in g.vertices() {
            defects.push((format!("relation 2 ({}, {})", v, w), verify_relation2(g, v, w).defect()));
        }
    }
    for i in star_sets_of_size(g, g.n()) {
        if let Ok(rel) = verify_relation3(g, &i) {
            defects.push((format!("relation 3 I = {}", i), rel.check.defect()));
        }
    }
    for k in star_sets(g).into_iter().filter(|k| k.len() >= 2) {
        for i in k.iter() {
            if let Ok(rel) = verify_relation4(g, &k, i) {
                defects.push((format!("relation 4 K = {}, i = {}", k, i), rel.defect()));
            }
        }
    }
    let top = star_sets_of_size(g, g.n() + 1);
    for k in &top {
        for h in &top {
            if let Ok(p) = product_formula(g, k, h) {
                defects.push((format!("product K = {}, H = {}", k, h), p.check.defect()));
            }
        }
    }
    t.extend(exec.map(defects, |(name, d)| match r.reduce(&d) {
        Ok(cf) => check(cf.is_zero(), || format!("{}: nonzero canonical form", name)),
        Err(e) => Err(format!("{}: {}", name, e)),
    }));
    t.finish()
}

/// `evaluate(reduce(h)) = h` on seeded random sums of generator words.
pub fn round_trip_suite(g: &QuadricGraph, count: usize, max_degree: usize, seed: u64, exec: Exec) -> SuiteResult {
    let mut t = Tally::new("reduce/evaluate round trip");
    let mut sampler = WordSampler::new(g, seed);
    let sums: Vec<_> = (0..count).map(|_| sampler.sum(max_degree)).collect();
    let r = Reducer::new(g);
    t.extend(exec.map(sums, |s| {
        let h = s.cochain(g);
        match r.reduce(&h).and_then(|cf| r.evaluate(&cf)) {
            Ok(back) => check(back == h, || format!("{}", s)),
            Err(e) => Err(format!("{}: {}", s, e)),
        }
    }));
    t.finish()
}

fn vs(v: &[usize]) -> VertexSet {
    VertexSet::from_vertices(v)
}

/// The specific instances quoted for `n = 2` and `n = 3`.
pub fn named_instances_suite(g: &QuadricGraph) -> SuiteResult {
    let mut t = Tally::new("named instances");
    let n = g.n();
    let d = |k: &[usize]| make_delta(g, &vs(k)).expect("admissible");
    let m = |v| make_m(g, v);
    if n == 2 {
        t.record(check((d(&[1]) * m(1)).is_zero(), || "Delta_{1} M_1 != 0".into()));
        t.record(check(m(4) * m(1) == d(&[2, 3, 6]) + d(&[3, 5, 6]), || {
            "M_4 M_1 != Delta_{2,3,6} + Delta_{3,5,6}".into()
        }));
        t.record(check(d(&[2, 3, 6]) * m(3) == d(&[2, 6]), || {
            "Delta_{2,3,6} M_3 != Delta_{2,6}".into()
        }));
        let p = product_formula(g, &vs(&[2, 3, 6]), &vs(&[3, 5, 6]));
        t.record(match p {
            Ok(p) => check(p.check.equal && p.factor_text == "M_1 + M_4 - X", || {
                format!("Delta_{{2,3,6}} Delta_{{3,5,6}}: factor {}", p.factor_text)
            }),
            Err(e) => Err(e.to_string()),
        });
    }
    if n == 3 {
        t.record(check(m(1) * m(2) * m(3) == d(&[5, 6, 7, 8]) + d(&[4, 6, 7, 8]), || {
            "M_1 M_2 M_3 != Delta_{5,6,7,8} + Delta_{4,6,7,8}".into()
        }));
    }
    t.finish()
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// Runs every suite. Algebraic suites are skipped when the graph itself
/// fails validation, since their failures would only echo it.
pub fn verify_all(g: &QuadricGraph, seed: u64, exec: Exec) -> VerifyReport {
    let graph = graph_suite(g);
    let mut suites = vec![graph];
    if suites[0].passed() {
        suites.push(generator_suite(g, exec));
        suites.push(relation1_suite(g, 3, exec));
        suites.push(relation2_suite(g));
        suites.push(relation3_suite(g, exec));
        suites.push(relation4_suite(g, exec));
        suites.push(product_suite(g, exec));
        suites.push(named_instances_suite(g));
        suites.push(defect_reduction_suite(g, exec));
        suites.push(round_trip_suite(g, 50, 12, seed, exec));
    }
    VerifyReport { n: g.n(), suites }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_n2() {
        let g = QuadricGraph::build(2).unwrap();
        let r = verify_all(&g, 1, Exec::default());
        for s in &r.suites {
            assert!(s.passed(), "{}: {:?}", s.name, s.witness);
            assert!(s.cases > 0, "{}", s.name);
        }
    }

    #[test]
    fn corrupted_graph_is_caught() {
        let mut g = QuadricGraph::build(2).unwrap();
        let a = g.alpha(1, 2);
        g.set_alpha(1, 2, -&a).unwrap();
        let r = verify_all(&g, 1, Exec::Sequential);
        assert!(!r.all_passed());
        assert!(r.suites[0].witness.is_some());
    }
}
