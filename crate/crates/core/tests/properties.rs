use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use quadric_gkm::cohomology::{all_generators, is_class};
use quadric_gkm::lattice::class_basis;
use quadric_gkm::poly::{elementary_symmetric, PolyError};
use quadric_gkm::reduction::{CanonicalForm, Reducer};
use quadric_gkm::words::WordSampler;
use quadric_gkm::{LinearForm, Monomial, Polynomial, QuadricGraph};

const NV: usize = 3;

fn arb_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..=max_deg, nvars), -9i64..=9);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().filter_map(|(mut e, c)| {
                // clip to total degree max_deg
                while e.iter().sum::<u32>() > max_deg {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    e[i] -= 1;
                }
                (c != 0).then(|| (Monomial::new(e), BigInt::from(c)))
            }),
        )
    })
}

fn arb_form(nvars: usize) -> impl Strategy<Value = LinearForm> {
    prop::collection::vec(-4i64..=4, nvars)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(LinearForm::new)
}

fn eval(p: &Polynomial, pt: &[BigInt]) -> BigInt {
    p.terms()
        .map(|(m, c)| {
            m.exponents()
                .iter()
                .zip(pt)
                .fold(c.clone(), |acc, (&e, x)| acc * x.pow(e))
        })
        .sum()
}

/// Integer points on the hyperplane `ell = 0`: combinations of
/// `c_t e_i - c_i e_t`, which span it over the rationals.
fn hyperplane_point(ell: &LinearForm, weights: &[i64]) -> Vec<BigInt> {
    let c = ell.coeffs();
    let t = c.iter().position(|&x| x != 0).unwrap();
    let mut pt = vec![BigInt::zero(); c.len()];
    for (i, &w) in weights.iter().enumerate().take(c.len()) {
        if i == t {
            continue;
        }
        pt[i] += BigInt::from(w * c[t]);
        pt[t] -= BigInt::from(w * c[i]);
    }
    pt
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn division_is_left_inverse_of_multiplication(p in arb_poly(NV, 4, 6), ell in arb_form(NV)) {
        let prod = &p * &ell.to_polynomial();
        prop_assert_eq!(prod.divide_exact_linear(&ell).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    /// Divisible by a primitive form iff the polynomial vanishes on its
    /// hyperplane (Gauss's lemma); sampled at many integer points.
    #[test]
    fn divisibility_matches_hyperplane_vanishing(
        p in arb_poly(NV, 3, 5),
        q in arb_poly(NV, 2, 3),
        ell in arb_form(NV).prop_filter("primitive", |l| l.is_primitive()),
        mix in any::<bool>(),
        weights in prop::collection::vec(prop::collection::vec(-50i64..=50, NV), 12),
    ) {
        // half the cases are multiples, half are generic
        let p = if mix { &q * &ell.to_polynomial() } else { p };
        let vanishes = weights.iter().all(|w| eval(&p, &hyperplane_point(&ell, w)).is_zero());
        match p.divide_exact_linear(&ell) {
            Ok(quot) => {
                prop_assert!(vanishes);
                prop_assert_eq!(&quot * &ell.to_polynomial(), p);
            }
            Err(PolyError::NotDivisible(_)) => prop_assert!(!vanishes),
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn ring_axioms(a in arb_poly(NV, 3, 4), b in arb_poly(NV, 3, 4), c in arb_poly(NV, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(NV), a.clone());
        prop_assert_eq!(-(-a.clone()), a.clone());
        prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn parse_display_round_trip(a in arb_poly(NV, 4, 6)) {
        prop_assert_eq!(Polynomial::parse(NV, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn elementary_symmetric_matches_subset_sum(
        inputs in prop::collection::vec(arb_poly(2, 2, 3), 0..6),
        j in 0usize..7,
    ) {
        let got = elementary_symmetric(2, j, &inputs);
        if j > inputs.len() {
            prop_assert!(got.is_err());
            return Ok(());
        }
        let mut want = Polynomial::zero(2);
        for mask in 0u32..(1 << inputs.len()) {
            if mask.count_ones() as usize != j {
                continue;
            }
            let prod = (0..inputs.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(Polynomial::one(2), |acc, i| &acc * &inputs[i]);
            want += &prod;
        }
        prop_assert_eq!(got.unwrap(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn random_words_round_trip(n in 2usize..=3, seed in any::<u64>()) {
        let g = QuadricGraph::build(n).unwrap();
        let r = Reducer::new(&g);
        let mut s = WordSampler::new(&g, seed);
        let h = s.sum(12).cochain(&g);
        prop_assert!(is_class(&g, &h).is_ok());
        let cf = r.reduce(&h).unwrap();
        prop_assert_eq!(r.evaluate(&cf).unwrap(), h);
    }

    /// Any coefficient tuple evaluates to a class and is recovered exactly.
    #[test]
    fn canonical_form_is_unique(
        n in 2usize..=3,
        coeffs in prop::collection::vec(arb_poly(4, 2, 3), 8),
    ) {
        let g = QuadricGraph::build(n).unwrap();
        let nv = g.nvars();
        let fit = |p: &Polynomial| {
            Polynomial::from_terms(nv, p.terms().map(|(m, c)| {
                (Monomial::new(m.exponents()[..nv].to_vec()), c.clone())
            }))
        };
        let mut cf = CanonicalForm::zero(n);
        for (slot, p) in cf.g_poly.iter_mut().chain(cf.g_delta.iter_mut()).zip(&coeffs) {
            *slot = fit(p);
        }
        let r = Reducer::new(&g);
        let h = r.evaluate(&cf).unwrap();
        prop_assert!(is_class(&g, &h).is_ok());
        prop_assert_eq!(r.reduce(&h).unwrap(), cf);
    }
}

#[test]
fn generator_products_lie_in_oracle_lattice() {
    let g = QuadricGraph::build(2).unwrap();
    let gens: Vec<_> = all_generators(&g)
        .into_iter()
        .map(|id| (id.degree(&g) / 2, id.cochain(&g).unwrap()))
        .collect();
    let lattices: Vec<_> = (0..=4).map(|d| class_basis(&g, d).unwrap()).collect();
    let mut checked = 0;
    for (da, a) in &gens {
        for (db, b) in &gens {
            let d = da + db;
            if d > 4 {
                continue;
            }
            let h = a * b;
            let lat = &lattices[d];
            let coords = lat.membership(&h).expect("product of classes is a class");
            assert_eq!(lat.reconstruct(&g, &coords), h);
            checked += 1;
        }
    }
    assert!(checked > 100, "{}", checked);
}

#[test]
fn oracle_basis_round_trips_through_reduce() {
    for n in 2..=3 {
        let g = QuadricGraph::build(n).unwrap();
        let r = Reducer::new(&g);
        for d in 0..=(n as u32 + 1) {
            let lat = class_basis(&g, d).unwrap();
            for b in lat.basis() {
                let cf = r.reduce(b).unwrap();
                assert_eq!(&r.evaluate(&cf).unwrap(), b, "n={} d={}", n, d);
            }
        }
    }
}

#[test]
fn non_class_is_rejected_with_edge() {
    let g = QuadricGraph::build(2).unwrap();
    let mut values: Vec<Polynomial> = g.vertices().map(|_| Polynomial::zero(g.nvars())).collect();
    values[0] = Polynomial::var(g.nvars(), 2);
    let h = quadric_gkm::Cochain::from_values(&g, values);
    let err = Reducer::new(&g).reduce(&h).unwrap_err();
    assert!(err.to_string().contains("vertex"), "{}", err);
    assert!(is_class(&g, &h).is_err());
}
