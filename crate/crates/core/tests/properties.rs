use std::sync::Arc;

use hopfgal::comodule::{is_galois, ComoduleAlgebra};
use hopfgal::constructions::{
    group_algebra, h2_classes, taft_galois_object, taft_hopf, FiniteAbelianGroup, GroupTwoCocycle, TaftParams,
};
use hopfgal::homotopy::{eval_endpoint, reflect, taft_homotopy_witness};
use hopfgal::json::{comodule_from_json, comodule_to_json, hopf_from_json, hopf_to_json};
use hopfgal::scalars::{Field, Scalar, UniPoly};
use hopfgal::twisting::{twist_comodule, verify_cocycle};
use proptest::prelude::*;

fn f7() -> Field {
    Field::prime(7).unwrap()
}

fn poly(field: &Field, cs: &[i64]) -> UniPoly {
    UniPoly::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
}

/// `σ · ∂μ` with `∂μ(g,h) = μ(g)μ(h)/μ(gh)` and `μ(1) = 1`.
fn times_coboundary(sigma: &GroupTwoCocycle, mu: &[Scalar]) -> GroupTwoCocycle {
    let g = sigma.group();
    let n = g.order();
    let values = (0..n * n)
        .map(|ij| {
            let (a, b) = (ij / n, ij % n);
            sigma.value(a, b).mul(&mu[a]).mul(&mu[b]).div(&mu[g.mul(a, b)]).unwrap()
        })
        .collect();
    GroupTwoCocycle::new(g.clone(), values).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms_mod_p(a in -50i64..50, b in -50i64..50, c in -50i64..50, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let f = Field::prime(p).unwrap();
        let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclotomic_arithmetic(a in prop::collection::vec(-4i64..4, 4), b in prop::collection::vec(-4i64..4, 4)) {
        let f = Field::cyclotomic(8).unwrap();
        let z = f.zeta().unwrap();
        let elt = |cs: &[i64]| cs.iter().enumerate().fold(f.zero(), |acc, (k, &c)| acc.add(&f.from_i64(c).mul(&z.pow(k as u32))));
        let (x, y) = (elt(&a), elt(&b));
        prop_assert!(z.pow(8).is_one());
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        if !x.is_zero() {
            prop_assert_eq!(y.mul(&x).div(&x).unwrap(), y);
        }
    }

    #[test]
    fn polynomial_evaluation_is_multiplicative(p in prop::collection::vec(0i64..7, 0..5), q in prop::collection::vec(0i64..7, 0..5), c in 0i64..7) {
        let f = f7();
        let (p, q, c) = (poly(&f, &p), poly(&f, &q), f.from_i64(c));
        prop_assert_eq!(p.mul(&q).eval(&c), p.eval(&c).mul(&q.eval(&c)));
        prop_assert_eq!(p.add(&q).eval(&c), p.eval(&c).add(&q.eval(&c)));
    }

    #[test]
    fn polynomial_text_round_trip(p in prop::collection::vec(-3i64..3, 0..6)) {
        let f = Field::rational();
        let p = poly(&f, &p);
        prop_assert_eq!(UniPoly::parse(&f, &p.to_text('t'), 't').unwrap(), p);
    }

    #[test]
    fn group_algebras_are_hopf(inv in prop::collection::vec(2u64..5, 1..3), p in prop::sample::select(vec![5u64, 7])) {
        let g = FiniteAbelianGroup::new(inv).unwrap();
        let h = group_algebra(&g, &Field::prime(p).unwrap());
        prop_assert!(h.verify().passed());
        let back = hopf_from_json(&hopf_to_json(&h), h.name()).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn taft_objects_are_galois_and_round_trip(r in 1i64..7, s in 0i64..7) {
        let f = f7();
        let q = f.from_i64(2);
        let h = Arc::new(taft_hopf(3, &q, &f).unwrap());
        let a = taft_galois_object(&TaftParams::new(3, q, f.from_i64(r), f.from_i64(s)).unwrap(), &h).unwrap();
        prop_assert!(is_galois(&a).unwrap().is_galois());
        let back: ComoduleAlgebra = comodule_from_json(&comodule_to_json(&a), a.name(), None).unwrap();
        prop_assert_eq!(back.algebra(), a.algebra());
        prop_assert_eq!(back.coaction_table(), a.coaction_table());
    }

    #[test]
    fn cohomologous_twists(mu in prop::collection::vec(1i64..7, 2), k in 0usize..3) {
        let f = f7();
        let g = FiniteAbelianGroup::cyclic(3);
        let h = Arc::new(group_algebra(&g, &f));
        let mut m = vec![f.one()];
        m.extend(mu.iter().map(|&x| f.from_i64(x)));
        let sigma = times_coboundary(&h2_classes(&g, &f).unwrap()[k], &m);
        let hs = sigma.to_hopf_cocycle(&h).unwrap();
        prop_assert!(verify_cocycle(hs.values(), &h).passed());
        let a = ComoduleAlgebra::regular(&h).unwrap();
        let t = twist_comodule(&a, &hs).unwrap();
        prop_assert!(t.verify().passed());
        prop_assert!(is_galois(&t).unwrap().is_galois());
        let back = twist_comodule(&t, &hs.inverse_cocycle().unwrap()).unwrap();
        prop_assert_eq!(back.algebra().table(), a.algebra().table());
    }

    #[test]
    fn reflection_is_an_involution(r in 1i64..7, s in 0i64..7) {
        let f = f7();
        let w = taft_homotopy_witness(3, &f.from_i64(2), &f, &f.from_i64(r), &f.from_i64(s)).unwrap();
        let rr = reflect(&reflect(&w));
        prop_assert_eq!(rr.algebra(), w.algebra());
        prop_assert_eq!(rr.coaction_table(), w.coaction_table());
        let (e0, e1) = (eval_endpoint(&reflect(&w), 0), eval_endpoint(&w, 1));
        prop_assert_eq!(e0.algebra(), e1.algebra());
    }
}
