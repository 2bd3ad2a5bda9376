use std::sync::Arc;
use std::time::Instant;

use hopfgal::constructions::{
    cyclic_group_algebra, kg_galois_object, taft_galois_object, taft_hopf, uq_sl2_pipeline, FiniteAbelianGroup,
    TaftParams,
};
use hopfgal::comodule::ComoduleAlgebra;
use hopfgal::homotopy::*;
use hopfgal::hopf::{Algebra, LinMap};
use hopfgal::scalars::{Field, SVec, UniPoly};
use hopfgal::Error;

fn f7() -> Field {
    Field::prime(7).unwrap()
}

#[test]
fn taft_witness_n3_over_f7() {
    let f = f7();
    let (q, r, s) = (f.from_i64(2), f.from_i64(3), f.from_i64(5));
    let w = taft_homotopy_witness(3, &q, &f, &r, &s).unwrap();
    let start = Instant::now();
    let v = verify_poly_galois(&w).unwrap();
    eprintln!("81×81 determinant: {:?}", start.elapsed());
    assert!(v.is_galois(), "{:?}", v.axioms);
    assert_eq!(v.coinvariant_rank, 1);
    // oracle: scalar determinants at every point of F7
    let m = poly_canonical_matrix(&w).unwrap();
    let det = m.determinant().unwrap();
    for c in f.elements().unwrap() {
        assert_eq!(m.eval(&c).determinant().unwrap(), det.eval(&c));
    }

    let h = w.hopf().clone();
    let a1 = taft_galois_object(&TaftParams::new(3, q.clone(), r.clone(), s.clone()).unwrap(), &h).unwrap();
    let a0 = taft_galois_object(&TaftParams::new(3, q.clone(), r.clone(), f.zero()).unwrap(), &h).unwrap();
    let verdict = verify_homotopy_witness(&w, &a0, &a1).unwrap();
    assert!(verdict.passed());
    assert!(verdict.endpoints.iter().all(|e| e.tables_equal));

    // endpoint 0 against A_{1,0}: 3 is not a cube class of 1 in F7
    let wrong = taft_galois_object(&TaftParams::new(3, q, f.one(), f.zero()).unwrap(), &h).unwrap();
    let bad = verify_homotopy_witness(&w, &wrong, &a1).unwrap();
    assert!(!bad.endpoints[0].matched());
    assert!(bad.endpoints[1].matched());
}

#[test]
fn endpoints_commute_with_construction() {
    let f = f7();
    let (q, r, s) = (f.from_i64(2), f.from_i64(1), f.from_i64(1));
    let w = taft_homotopy_witness(3, &q, &f, &r, &s).unwrap();
    for i in 0..2u8 {
        let si = if i == 0 { f.zero() } else { s.clone() };
        let a = taft_galois_object(&TaftParams::new(3, q.clone(), r.clone(), si).unwrap(), w.hopf()).unwrap();
        let e = eval_endpoint(&w, i);
        assert!(e.verify().passed());
        assert_eq!(e.algebra().table(), a.algebra().table());
        assert_eq!(e.coaction_table(), a.coaction_table());
    }
}

#[test]
fn reflection_swaps_endpoints() {
    let f = f7();
    let w = taft_homotopy_witness(3, &f.from_i64(2), &f, &f.from_i64(3), &f.from_i64(5)).unwrap();
    let rw = reflect(&w);
    for i in 0..2u8 {
        let a = eval_endpoint(&w, i);
        let b = eval_endpoint(&rw, 1 - i);
        assert_eq!(a.algebra().table(), b.algebra().table());
        assert_eq!(a.coaction_table(), b.coaction_table());
    }
}

#[test]
fn zero_s_is_constant_witness() {
    let f = f7();
    let q = f.from_i64(2);
    let w = taft_homotopy_witness(3, &q, &f, &f.from_i64(3), &f.zero()).unwrap();
    let a = taft_galois_object(&TaftParams::new(3, q, f.from_i64(3), f.zero()).unwrap(), w.hopf()).unwrap();
    assert_eq!(w.algebra().table(), constant_witness(&a).algebra().table());
}

#[test]
fn constant_witness_of_kc3_object() {
    let f = f7();
    let h = Arc::new(cyclic_group_algebra(3, &f));
    let a = kg_galois_object(3, &f.from_i64(3), &h).unwrap();
    let w = constant_witness(&a);
    let v = verify_poly_galois(&w).unwrap();
    assert!(v.is_galois());
    let det = v.determinant.unwrap();
    assert!(!det.contains('t'), "{det}");
    let verdict = verify_homotopy_witness(&w, &a, &a).unwrap();
    assert!(verdict.passed());
    assert_eq!(verdict.endpoints[0].iso, Some(LinMap::identity(3, f.one())));
}

#[test]
fn doctored_witness_reports_axiom_failure() {
    let f = f7();
    let w = taft_homotopy_witness(3, &f.from_i64(2), &f, &f.one(), &f.one()).unwrap();
    // δ(b) scaled by t breaks counitality
    let t = UniPoly::t(&f);
    let mut coaction = w.coaction_table().to_vec();
    coaction[1] = coaction[1].scaled(&t);
    let bad = ComoduleAlgebra::over_ground_field("doctored", w.algebra().clone(), w.hopf().clone(), coaction)
        .unwrap();
    let v = verify_poly_galois(&bad).unwrap();
    assert!(!v.axioms.passed());
    assert!(!v.is_galois());
}

#[test]
fn non_galois_witness_has_non_unit_determinant() {
    // k[t][u]/(u³ − t) with δ(u) = u ⊗ g: a comodule algebra whose fibre at
    // t = 0 is k[u]/(u³), which is not Galois
    let f = f7();
    let h = Arc::new(cyclic_group_algebra(3, &f));
    let t = UniPoly::t(&f);
    let one = UniPoly::constant(f.one());
    let alg = Algebra::from_fn(&f, vec!["1".into(), "u".into(), "u^2".into()], SVec::basis(0, one.clone()), |i, j| {
        let k = i + j;
        if k < 3 { SVec::basis(k, one.clone()) } else { SVec::basis(k - 3, t.clone()) }
    })
    .unwrap();
    let coaction = (0..3).map(|i| SVec::basis(i * 3 + i, one.clone())).collect();
    let w = ComoduleAlgebra::over_ground_field("k[u]/(u³−t)", alg, h, coaction).unwrap();
    assert!(w.verify().passed());
    match verify_poly_galois(&w) {
        Err(Error::NonUnitDeterminant(msg)) => assert!(msg.contains('t'), "{msg}"),
        other => panic!("expected NonUnitDeterminant, got {other:?}"),
    }
}

#[test]
fn determinant_invariant_under_permutation() {
    let f = Field::prime(5).unwrap();
    let w = taft_homotopy_witness(2, &f.from_i64(4), &f, &f.from_i64(2), &f.from_i64(3)).unwrap();
    let m = poly_canonical_matrix(&w).unwrap();
    let det = m.determinant().unwrap();
    assert!(det.is_unit());
    // reverse the column order: a permutation of sign (-1)^(n(n-1)/2)
    let n = m.cols();
    let mut p = m.clone();
    for i in 0..m.rows() {
        for j in 0..n {
            p[(i, j)] = m[(i, n - 1 - j)].clone();
        }
    }
    let dp = p.determinant().unwrap();
    let sign = if (n * (n - 1) / 2).is_multiple_of(2) { det.clone() } else { det.neg() };
    assert_eq!(dp, sign);
}

#[test]
fn taft_h9_graded_homotopy() {
    let f = f7();
    let h = Arc::new(taft_hopf(3, &f.from_i64(2), &f).unwrap());
    let fam = graded_hopf_homotopy(&h).unwrap();
    assert_eq!(fam.maps.len(), 3);
    // Φ₀ keeps exactly the group-likes g^k
    let kept: Vec<usize> = (0..9).filter(|&i| !fam.maps[0].image(i).is_zero()).collect();
    assert_eq!(kept, vec![0, 3, 6]);
    let rep = verify_hopf_homotopy(&fam);
    assert!(rep.passed(), "{rep}");
    assert_eq!(fam.sum(), LinMap::identity(9, f.one()));
}

#[test]
fn trivially_graded_group_algebra() {
    let f = f7();
    let h = Arc::new(cyclic_group_algebra(3, &f).with_grading(vec![0; 3]).unwrap());
    let fam = graded_hopf_homotopy(&h).unwrap();
    assert_eq!(fam.maps, vec![LinMap::identity(3, f.one())]);
    assert!(verify_hopf_homotopy(&fam).passed());
    let ungraded = Arc::new(cyclic_group_algebra(3, &f));
    assert!(matches!(graded_hopf_homotopy(&ungraded), Err(Error::NotGraded(_))));
}

#[test]
fn small_quantum_group_lambda_zero_graded_homotopy() {
    let f = f7();
    let sq = uq_sl2_pipeline(3, &f.from_i64(2), &f, &f.zero()).unwrap();
    let h = Arc::new(sq.quotient.hopf.clone());
    let fam = graded_hopf_homotopy(&h).unwrap();
    assert!(verify_hopf_homotopy(&fam).passed());
}

#[test]
fn broken_family_fails_condition_b() {
    let f = f7();
    let h = Arc::new(taft_hopf(3, &f.from_i64(2), &f).unwrap());
    let mut fam = graded_hopf_homotopy(&h).unwrap();
    // move x from degree 1 into degree 0 only for Φ₁ images: Φ₁(x) = g
    fam.maps[1].images[1] = SVec::basis(3, f.one());
    let rep = verify_hopf_homotopy(&fam);
    let failed: Vec<&str> = rep.checks.iter().filter(|c| c.status != hopfgal::report::Status::Pass).map(|c| c.name.as_str()).collect();
    assert!(failed.iter().any(|n| n.starts_with("(b)")), "{rep}");
}

#[test]
fn constant_homotopy_of_a_hopf_map() {
    let f = f7();
    let h = Arc::new(taft_hopf(3, &f.from_i64(2), &f).unwrap());
    let id = LinMap::identity(9, f.one());
    let fam = HopfHomotopyFamily { source: h.clone(), target: h, maps: vec![id.clone()], phi: id.clone(), psi: id };
    assert!(verify_hopf_homotopy(&fam).passed());
}

#[test]
fn truncated_polynomial_homotopy() {
    let f = f7();
    let (r, deg) = monomial_algebra(&f, &[0, 1, 2], 3).unwrap();
    let th = graded_algebra_homotopy(&r, &deg).unwrap();
    assert!(th.verify().passed());
    assert_eq!(th.theta.image(1), &SVec::basis(1, UniPoly::t(&f)));
    assert_eq!(th.endpoint(0), th.alpha);
    assert_eq!(th.endpoint(1), LinMap::identity(3, f.one()));
}

#[test]
fn ground_field_homotopy_is_inclusion() {
    let f = f7();
    let (r, deg) = monomial_algebra(&f, &[0], 1).unwrap();
    let th = graded_algebra_homotopy(&r, &deg).unwrap();
    assert!(th.verify().passed());
    assert_eq!(th.theta.image(0), &SVec::basis(0, UniPoly::constant(f.one())));
}

#[test]
fn schanuel_adjacent_truncation() {
    let f = Field::prime(2).unwrap();
    let (r, deg) = monomial_algebra(&f, &[0, 2, 3, 4, 5], 6).unwrap();
    let th = graded_algebra_homotopy(&r, &deg).unwrap();
    assert!(th.verify().passed());
    assert!(monomial_algebra(&f, &[0, 2, 3], 6).is_err());
}

#[test]
fn char_p_group_homotopies() {
    let f2 = Field::prime(2).unwrap();
    for g in [FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(4), FiniteAbelianGroup::new(vec![2, 2]).unwrap()] {
        let th = char_p_group_homotopy(&g, &f2).unwrap();
        let rep = th.verify();
        assert!(rep.passed(), "{}: {rep}", g.name());
        // [0]θ sends everything to 1
        assert!(th.endpoint(0).images.iter().all(|v| *v == SVec::basis(0, f2.one())));
    }
    assert!(matches!(char_p_group_homotopy(&FiniteAbelianGroup::cyclic(3), &f2), Err(Error::CharMismatch(_))));
    assert!(matches!(char_p_group_homotopy(&FiniteAbelianGroup::cyclic(2), &f7()), Err(Error::CharMismatch(_))));
}

#[test]
fn char_p_theta_of_generator() {
    let f2 = Field::prime(2).unwrap();
    let th = char_p_group_homotopy(&FiniteAbelianGroup::cyclic(2), &f2).unwrap();
    // θ(g) = (1 + t)·1 + t·g in char 2
    let t = UniPoly::t(&f2);
    let one_plus_t = UniPoly::constant(f2.one()).add(&t);
    let want = SVec::from_terms([(0, one_plus_t), (1, t)]);
    assert_eq!(th.theta.image(1), &want);
}
