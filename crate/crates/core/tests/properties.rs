use hnfield::chromatic::audit::{check_certificate, UnsatCheck};
use hnfield::chromatic::{brute_force_chi, chi_exact};
use hnfield::exact::{
    biquad_val_ramified, quad_val_ramified, quad_val_split, rat_val, BiQuadElem, HalfVal, QuadElem,
    Rat,
};
use hnfield::geometry::{build_fp_graph, fp_index, fp_vector, DiagForm, UGraph};
use hnfield::numtheory::{int_val, legendre};
use hnfield::reduction::class_representative;
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (
        -500i64..=500,
        prop::sample::select(vec![1i64, 2, 3, 4, 6, 8, 9, 11, 12, 27, 121]),
    )
        .prop_map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
}

fn quad(m: i64) -> impl Strategy<Value = QuadElem> {
    (rat(), rat()).prop_map(move |(a, b)| QuadElem::new(m, a, b).unwrap())
}

fn biquad() -> impl Strategy<Value = BiQuadElem> {
    [rat(), rat(), rat(), rat()].prop_map(|c| BiQuadElem::new(3, 11, c).unwrap())
}

fn axioms<T: Clone>(
    x: &T,
    y: &T,
    v: impl Fn(&T) -> HalfVal,
    add: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
) -> Result<(), TestCaseError> {
    let (vx, vy) = (v(x), v(y));
    prop_assert_eq!(v(&mul(x, y)), vx + vy);
    prop_assert!(v(&add(x, y)) >= vx.min(vy));
    Ok(())
}

fn random_graph(n: usize, bits: &[bool]) -> UGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits[k] {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    UGraph::from_edges(n, edges).unwrap()
}

fn graph() -> impl Strategy<Value = UGraph> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| random_graph(n, &b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_valuation_axioms(x in rat(), y in rat(), p in prop::sample::select(vec![2u64, 3, 11])) {
        axioms(&x, &y, |r| rat_val(r, p).unwrap(), |a, b| a + b, |a, b| a * b)?;
    }

    #[test]
    fn ramified_valuation_axioms(x in quad(3), y in quad(3)) {
        axioms(&x, &y, |r| quad_val_ramified(r, 3).unwrap(), |a, b| a.clone() + b.clone(), |a, b| a.clone() * b.clone())?;
    }

    #[test]
    fn split_valuation_axioms(x in quad(7), y in quad(7)) {
        axioms(&x, &y, |r| quad_val_split(r, 3, Some(2)).unwrap(), |a, b| a.clone() + b.clone(), |a, b| a.clone() * b.clone())?;
    }

    #[test]
    fn biquad_valuation_axioms(x in biquad(), y in biquad()) {
        axioms(&x, &y, |r| biquad_val_ramified(r, 11, Some(5)).unwrap(), |a, b| a.clone() + b.clone(), |a, b| a.clone() * b.clone())?;
    }

    #[test]
    fn norm_is_multiplicative(x in quad(-5), y in quad(-5)) {
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
    }

    #[test]
    fn biquad_norm_and_associativity(x in biquad(), y in biquad(), z in biquad()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
    }

    #[test]
    fn legendre_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000, p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 83, 101])) {
        let lab = legendre(a * b, p).unwrap();
        prop_assert_eq!(lab, legendre(a, p).unwrap() * legendre(b, p).unwrap());
    }

    #[test]
    fn class_representative_laws(r in rat(), s in rat(), p in prop::sample::select(vec![2u64, 3, 11])) {
        let c = class_representative(&r, p);
        let diff = &r - &c;
        prop_assert_eq!(int_val(diff.denom(), p), 0);
        prop_assert_eq!(class_representative(&c, p), c.clone());
        // adding an integral number keeps the class
        let shift = Rat::from_integer(s.numer().clone());
        let shift = if int_val(s.denom(), p) == 0 { s.clone() } else { shift };
        prop_assert_eq!(class_representative(&(&r + &shift), p), c);
    }

    #[test]
    fn chi_matches_brute_force(g in graph()) {
        prop_assert_eq!(chi_exact(&g).chi, brute_force_chi(&g).unwrap());
    }

    #[test]
    fn certificates_audit(g in graph()) {
        let cert = chi_exact(&g);
        let report = check_certificate(&g, &cert.to_json(), UnsatCheck::Rerun { node_budget: 1 << 24 }).unwrap();
        prop_assert_eq!(report.chi, cert.chi);
        prop_assert_ne!(report.unsat_confirmed, Some(false));
    }

    #[test]
    fn dimacs_round_trip(g in graph()) {
        let back = UGraph::from_dimacs(&g.to_dimacs()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fp_graph_translation_invariant(
        p in prop::sample::select(vec![3u64, 5, 7]),
        form in prop::sample::select(vec!["1,1", "1,-1", "1,1,1"]),
        seed in any::<u64>(),
    ) {
        let form: DiagForm = form.parse().unwrap();
        let d = form.dim();
        let g = build_fp_graph(p, &form).unwrap();
        let t = fp_vector(seed as usize % g.n(), p, d);
        let shift = |i: usize| {
            let v: Vec<u64> = fp_vector(i, p, d).iter().zip(&t).map(|(a, b)| (a + b) % p).collect();
            fp_index(&v, p)
        };
        for &(a, b) in g.edges() {
            prop_assert!(g.adjacent(shift(a), shift(b)));
        }
    }
}
