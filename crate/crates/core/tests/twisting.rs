use std::sync::Arc;

use hopfgal::comodule::{cotensor, is_galois, ComoduleAlgebra};
use hopfgal::constructions::{
    group_algebra, h2_group_cohomology, taft_hopf, twisted_group_algebra, FiniteAbelianGroup, GroupTwoCocycle,
};
use hopfgal::hopf::{tensor_hopf, LinMap};
use hopfgal::scalars::Field;
use hopfgal::twisting::{quantum_double, twist_comodule, twist_hopf, verify_cocycle, HopfTwoCocycle, SkewPairing};

fn cases() -> Vec<(FiniteAbelianGroup, Field)> {
    vec![
        (FiniteAbelianGroup::cyclic(2), Field::prime(5).unwrap()),
        (FiniteAbelianGroup::cyclic(3), Field::prime(7).unwrap()),
        (FiniteAbelianGroup::new(vec![2, 2]).unwrap(), Field::prime(5).unwrap()),
    ]
}

#[test]
fn regular_twist_is_twisted_group_algebra() {
    for (g, f) in cases() {
        let h = Arc::new(group_algebra(&g, &f));
        let a = ComoduleAlgebra::regular(&h).unwrap();
        for rep in h2_group_cohomology(&g, &f).unwrap().representatives {
            let sigma = rep.to_hopf_cocycle(&h).unwrap();
            assert!(verify_cocycle(sigma.values(), &h).passed());
            // the product on A^σ uses σ⁻¹
            let inv = rep.inverse().to_hopf_cocycle(&h).unwrap();
            let t = twist_comodule(&a, &inv).unwrap();
            let k = twisted_group_algebra(&rep, &f).unwrap();
            assert_eq!(t.algebra().table(), k.algebra().table(), "{}", g.name());
        }
    }
}

#[test]
fn group_algebra_twist_unchanged() {
    for (g, f) in cases() {
        let h = Arc::new(group_algebra(&g, &f));
        for rep in h2_group_cohomology(&g, &f).unwrap().representatives {
            let sigma = rep.to_hopf_cocycle(&h).unwrap();
            let hs = sigma.twisted_hopf().unwrap();
            assert_eq!(hs.algebra().table(), h.algebra().table());
            assert_eq!(hs.coalgebra(), h.coalgebra());
        }
    }
}

#[test]
fn twist_involution_and_galois() {
    for (g, f) in cases() {
        let h = Arc::new(group_algebra(&g, &f));
        let reps = h2_group_cohomology(&g, &f).unwrap().representatives;
        let mut objects = vec![ComoduleAlgebra::regular(&h).unwrap()];
        for rep in &reps {
            objects.push(twisted_group_algebra(rep, &f).unwrap());
        }
        for a in &objects {
            for rep in &reps {
                let sigma = rep.to_hopf_cocycle(&h).unwrap();
                let t = twist_comodule(a, &sigma).unwrap();
                assert!(t.verify().passed());
                assert!(is_galois(&t).unwrap().is_galois());
                let back = twist_comodule(&t, &sigma.inverse_cocycle().unwrap()).unwrap();
                assert_eq!(back.algebra().table(), a.algebra().table());
                assert_eq!(back.coaction_table(), a.coaction_table());
            }
        }
    }
}

#[test]
fn trivial_cocycle_twist_is_identity() {
    let f = Field::prime(7).unwrap();
    let h = Arc::new(taft_hopf(3, &f.from_i64(2), &f).unwrap());
    let e = HopfTwoCocycle::trivial(h.clone());
    let t = twist_hopf(&h, &e).unwrap();
    assert_eq!(t.algebra().table(), h.algebra().table());
}

#[test]
fn double_of_trivial_pairing_is_tensor_product() {
    let f = Field::prime(7).unwrap();
    let u = Arc::new(taft_hopf(3, &f.from_i64(2), &f).unwrap());
    let a = Arc::new(group_algebra(&FiniteAbelianGroup::cyclic(3), &f));
    let tau = SkewPairing::trivial(u.clone(), a.clone());
    let (_, d) = quantum_double(&tau).unwrap();
    let t = tensor_hopf(&u, &a).unwrap();
    assert_eq!(d.algebra().table(), t.algebra().table());
    assert_eq!(d.coalgebra(), t.coalgebra());
}

#[test]
fn cotensor_with_the_grouplikes_of_h9() {
    use hopfgal::constructions::{cyclic_group_algebra, kg_galois_object, taft_galois_object, TaftParams};
    use hopfgal::scalars::SVec;
    let f = Field::prime(7).unwrap();
    let q = f.from_i64(2);
    let h = Arc::new(taft_hopf(3, &q, &f).unwrap());
    let k = Arc::new(cyclic_group_algebra(3, &f));
    let phi = LinMap::new(3, 9, (0..3).map(|i| SVec::basis(3 * i, f.one())).collect()).unwrap();
    let a = taft_galois_object(&TaftParams::new(3, q, f.from_i64(3), f.from_i64(5)).unwrap(), &h).unwrap();
    let c = cotensor(&a, &k, &phi).unwrap();
    assert_eq!(c.algebra.algebra().dim(), 3);
    assert!(c.algebra.verify().passed());
    // a^i ↦ a^i ⊗ g^i
    let ar = kg_galois_object(3, &f.from_i64(3), &k).unwrap();
    let images = (0..3).map(|i| c.subspace.coordinates(&SVec::basis((3 * i) * 3 + i, f.one())).unwrap()).collect();
    let iso = LinMap::new(3, 3, images).unwrap();
    let rep = hopfgal::comodule::comodule_isomorphism_check(&iso, &ar, &c.algebra);
    assert!(rep.passed(), "{rep}");
}

#[test]
fn group_cocycle_rejects_bad_tables() {
    let f = Field::prime(5).unwrap();
    let g = FiniteAbelianGroup::cyclic(2);
    assert!(GroupTwoCocycle::new(g.clone(), vec![f.one(), f.one(), f.one(), f.zero()]).is_err());
    assert!(GroupTwoCocycle::new(g, vec![f.from_i64(2), f.one(), f.one(), f.one()]).is_err());
}
