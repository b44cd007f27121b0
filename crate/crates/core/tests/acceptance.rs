//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails or exceeds its time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quadric_gkm::cohomology::{iota, make_delta, make_m, product_formula, Cochain, VertexSet};
use quadric_gkm::graph::validate;
use quadric_gkm::lattice::{class_basis, hilbert_table};
use quadric_gkm::ordinary::ordinary_report;
use quadric_gkm::reduction::{localization_determinant, Reducer};
use quadric_gkm::suite::{
    defect_reduction_suite, named_instances_suite, product_suite, relation1_suite, relation2_suite,
    relation3_suite, relation4_suite, round_trip_suite, SuiteResult,
};
use quadric_gkm::{Exec, LinearForm, Monomial, Polynomial, QuadricGraph};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_ok(r: SuiteResult, n: usize) -> Result<usize, String> {
    ensure(r.passed(), || {
        format!("n={} {}: {} failures, {}", n, r.name, r.failures, r.witness.clone().unwrap_or_default())
    })?;
    Ok(r.cases)
}

fn graph(n: usize) -> QuadricGraph {
    QuadricGraph::build(n).expect("n >= 1")
}

fn p(g: &QuadricGraph, s: &str) -> Polynomial {
    Polynomial::parse(g.nvars(), s).expect("literal")
}

fn set(vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vs)
}

/// Product of linear factors written as text.
fn prod(g: &QuadricGraph, factors: &[&str]) -> Polynomial {
    factors.iter().fold(Polynomial::one(g.nvars()), |acc, f| &acc * &p(g, f))
}

fn expect_values(g: &QuadricGraph, h: &Cochain, want: &[Polynomial], what: &str) -> Result<(), String> {
    for (v, w) in g.vertices().zip(want) {
        ensure(h.value(v) == w, || format!("{}({}) = {}, expected {}", what, v, h.value(v), w))?;
    }
    Ok(())
}

fn graph_fidelity() -> Outcome {
    let g = graph(2);
    let f = ["-x3", "x1 - x3", "x2 - x3", "0", "x2 - x1", "x2"];
    for (v, want) in g.vertices().zip(f) {
        ensure(g.f(v) == &p(&g, want), || format!("f({}) = {}, expected {}", v, g.f(v), want))?;
    }
    for (j, want) in [(2, "x1"), (3, "x2"), (4, "x3"), (5, "x2 - x1 + x3")] {
        let a = g.alpha(1, j).to_polynomial();
        ensure(a == p(&g, want), || format!("alpha(1,{}) = {}, expected {}", j, a, want))?;
    }
    let mut cases = 0;
    for n in 2..=4 {
        let r = validate(&graph(n));
        if let Some(c) = r.failures().next() {
            return Err(format!("n={} {}: {}", n, c.name, c.witness.clone().unwrap_or_default()));
        }
        cases += r.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    Ok(format!("f and alpha match at n=2; {} lemma cases at n=2,3,4", cases))
}

fn generator_fidelity() -> Outcome {
    let g = graph(2);
    let m6: Vec<Polynomial> = ["x2 + x3", "x2 - x1 + x3", "x3", "x2", "x1", "0"]
        .iter()
        .map(|s| p(&g, s))
        .collect();
    expect_values(&g, &make_m(&g, 6), &m6, "M_6")?;
    let zero = Polynomial::zero(g.nvars());
    let k = make_delta(&g, &set(&[1, 2, 3])).map_err(|e| e.to_string())?;
    expect_values(
        &g,
        &k,
        &[
            prod(&g, &["x3", "x2 - x1 + x3"]),
            prod(&g, &["x3 - x1", "x2 - x1 + x3"]),
            prod(&g, &["x3", "x3 - x1"]),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        "Delta_{1,2,3}",
    )?;
    let l = make_delta(&g, &set(&[1, 2])).map_err(|e| e.to_string())?;
    expect_values(
        &g,
        &l,
        &[
            prod(&g, &["x2", "x3", "x2 - x1 + x3"]),
            prod(&g, &["x2 - x1", "x3 - x1", "x2 - x1 + x3"]),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero,
        ],
        "Delta_{1,2}",
    )?;
    for n in 2..=4 {
        let g = graph(n);
        let m1 = make_m(&g, 1);
        for i in 1..=g.nvars() {
            let x = iota(&g, &Polynomial::var(g.nvars(), i));
            ensure(x == &make_m(&g, i + 1) - &m1, || format!("n={}: x_{} != M_{} - M_1", n, i, i + 1))?;
        }
        let f = Cochain::from_fn(&g, |v| g.f(v).clone());
        ensure(f == -make_m(&g, n + 2), || format!("n={}: f != -M_{}", n, n + 2))?;
    }
    Ok("n=2 generator values match; x_i = M_{i+1} - M_1 and f = -M_{n+2} at n=2,3,4".into())
}

fn relations(exec: Exec) -> Outcome {
    let mut counts = Vec::new();
    for n in 2..=3 {
        let g = graph(n);
        let total = suite_ok(relation1_suite(&g, 3, exec), n)?
            + suite_ok(relation2_suite(&g), n)?
            + suite_ok(relation3_suite(&g, exec), n)?
            + suite_ok(relation4_suite(&g, exec), n)?
            + suite_ok(named_instances_suite(&g), n)?;
        counts.push(format!("n={}: {} cases", n, total));
    }
    Ok(counts.join(", "))
}

fn product(exec: Exec) -> Outcome {
    let g = graph(2);
    let pf = product_formula(&g, &set(&[2, 3, 6]), &set(&[3, 5, 6])).map_err(|e| e.to_string())?;
    ensure(pf.check.equal, || "Delta_{2,3,6} Delta_{3,5,6} instance fails".into())?;
    ensure(pf.intersection == set(&[3, 6]), || format!("intersection {}", pf.intersection))?;
    ensure(pf.factor_text == "M_1 + M_4 - X", || format!("factor {}", pf.factor_text))?;
    let mut counts = Vec::new();
    for (n, pairs) in [(2, 64), (3, 256)] {
        let cases = suite_ok(product_suite(&graph(n), exec), n)?;
        ensure(cases == pairs, || format!("n={}: {} pairs, expected {}", n, cases, pairs))?;
        counts.push(format!("{} pairs at n={}", cases, n));
    }
    Ok(format!("worked instance holds; {}", counts.join(", ")))
}

fn additive(exec: Exec) -> Outcome {
    let mut out = Vec::new();
    for n in 2..=3 {
        let g = graph(n);
        let max_d = 2 * n as u32 + 2;
        let rows = hilbert_table(&g, max_d, exec).map_err(|e| e.to_string())?;
        for r in &rows {
            ensure(r.matches(), || {
                format!("n={} d={}: rank {} expected {} torsion {:?}", n, r.d, r.rank, r.expected, r.torsion)
            })?;
        }
        let r = Reducer::new(&g);
        let mut round = 0;
        for d in 0..=max_d {
            let lat = class_basis(&g, d).map_err(|e| e.to_string())?;
            for b in lat.basis() {
                let cf = r.reduce(b).map_err(|e| format!("n={} d={}: {}", n, d, e))?;
                ensure(&r.evaluate(&cf).map_err(|e| e.to_string())? == b, || {
                    format!("n={} d={}: basis element does not round-trip", n, d)
                })?;
                round += 1;
            }
        }
        let defects = suite_ok(defect_reduction_suite(&g, exec), n)?;
        let ranks: Vec<String> = rows.iter().map(|r| r.rank.to_string()).collect();
        out.push(format!(
            "n={} ranks {} (no torsion), {} basis round trips, {} defects",
            n,
            ranks.join(","),
            round,
            defects
        ));
    }
    Ok(out.join("; "))
}

fn ordinary(exec: Exec) -> Outcome {
    let want: [(usize, &[u64], &[&str], &str); 2] = [
        (2, &[1, 1, 2, 1, 1], &["c^3 - 2cx = 0", "x^2 - c^2x = 0", "x^2 != 0"], "x² ≡ c^2x, x² ≢ 0"),
        (3, &[1, 1, 1, 2, 1, 1, 1], &["c^4 - 2cx = 0", "x^2 = 0"], "x² ≡ 0"),
    ];
    let mut out = Vec::new();
    for (n, betti, relations, verdict) in want {
        let r = ordinary_report(&graph(n), exec).map_err(|e| e.to_string())?;
        ensure(r.betti.betti == betti, || format!("n={}: Betti {:?}", n, r.betti.betti))?;
        ensure(r.betti.torsion_free, || format!("n={}: torsion", n))?;
        for name in relations {
            let c = r.presentation.iter().find(|c| c.name == *name);
            ensure(c.is_some_and(|c| c.holds), || format!("n={}: {} not verified", n, name))?;
        }
        ensure(r.presentation_alternative.iter().all(|c| c.holds), || format!("n={}: alternative x fails", n))?;
        ensure(r.parity.all_hold, || format!("n={}: parity {} fails", n, r.parity.rule))?;
        ensure(r.verdict == verdict, || format!("n={}: verdict {}", n, r.verdict))?;
        ensure(r.all_pass(), || format!("n={}: report has a failing check", n))?;
        out.push(format!("n={} Betti {:?}, {}, parity over {} sets", n, betti, verdict, r.parity.sets_checked));
    }
    Ok(out.join("; "))
}

fn random_form(rng: &mut ChaCha8Rng, nvars: usize) -> LinearForm {
    loop {
        let c: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-5..=5)).collect();
        if c.iter().any(|&x| x != 0) {
            return LinearForm::new(c);
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> Polynomial {
    let terms = rng.gen_range(0..=6);
    Polynomial::from_terms(
        nvars,
        (0..terms).map(|_| {
            let deg = rng.gen_range(0..=5u32);
            let mut e = vec![0u32; nvars];
            for _ in 0..deg {
                e[rng.gen_range(0..nvars)] += 1;
            }
            (Monomial::new(e), BigInt::from(rng.gen_range(-20i64..=20)))
        }),
    )
}

fn properties(exec: Exec) -> Outcome {
    let mut words = 0;
    for n in 2..=3 {
        words += suite_ok(round_trip_suite(&graph(n), 200, 12, 0x5eed + n as u64, exec), n)?;
    }
    ensure(words >= 400, || format!("only {} words", words))?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pairs = 1000;
    for k in 0..pairs {
        let nvars = rng.gen_range(1..=5);
        let q = random_poly(&mut rng, nvars);
        let ell = random_form(&mut rng, nvars);
        let got = (&q * &ell.to_polynomial()).divide_exact_linear(&ell);
        ensure(got.as_ref() == Ok(&q), || format!("pair {}: ({}) * ({}) / ({}) gave {:?}", k, q, ell, ell, got))?;
    }

    let mut vertices = 0;
    for n in 2..=4 {
        let g = graph(n);
        for v in g.vertices() {
            let det = localization_determinant(&g, v);
            ensure(det.abs() == BigInt::from(1), || format!("n={} vertex {}: det {}", n, v, det))?;
            vertices += 1;
        }
    }
    Ok(format!(
        "{} word round trips, {} division pairs, {} unimodular localizations",
        words, pairs, vertices
    ))
}

fn main() -> ExitCode {
    let exec = Exec::default();
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome>)> = vec![
        ("graph fidelity", 1, Box::new(graph_fidelity)),
        ("generator fidelity", 1, Box::new(generator_fidelity)),
        ("relations 1-4", 30, Box::new(move || relations(exec))),
        ("product formula", 120, Box::new(move || product(exec))),
        ("additive structure", 300, Box::new(move || additive(exec))),
        ("ordinary cohomology", 300, Box::new(move || ordinary(exec))),
        ("property suites", 300, Box::new(move || properties(exec))),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(*limit);
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("over time budget; {}", d)),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {}: {} [{:.2}s / {}s] {}",
            i + 1,
            name,
            status,
            elapsed.as_secs_f64(),
            limit,
            detail
        );
    }
    if failed == 0 {
        println!("acceptance: all 7 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} of 7 criteria fail", failed);
        ExitCode::FAILURE
    }
}
