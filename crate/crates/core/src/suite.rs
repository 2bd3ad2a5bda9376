//! The ten acceptance checks, shared by the CLI and the test suite.
//!
//! Each criterion returns a [`Report`]; timing is kept next to it in
//! [`CriterionRun`] and never enters the report body.

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::comodule::{comodule_isomorphism_check, cotensor, is_galois, iso_search_small, ComoduleAlgebra};
use crate::constructions::{
    borel_halves, classify_kcn_galois, cyclic_group_algebra, graded_twist, group_algebra, h2_classes, h2_group_cohomology,
    kg_galois_object, schanuel_suite, taft_galois_object, taft_hopf, twisted_group_algebra, uq_sl2_pipeline,
    FiniteAbelianGroup, TaftParams,
};
use crate::error::{Error, Result};
use crate::homotopy::{
    char_p_group_homotopy, graded_hopf_homotopy, taft_homotopy_witness, verify_homotopy_witness, verify_hopf_homotopy,
    verify_poly_galois,
};
use crate::hopf::{verify_hopf_map, Algebra, HopfAlgebra, LinMap};
use crate::par;
use crate::report::{Report, Status};
use crate::scalars::{Field, SVec, Scalar};
use crate::twisting::{
    central_grouplike_test, linking_relation_check, quotient_linking_check, twist_comodule, verify_cocycle,
};

/// Knobs for a suite run.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Damage one entry of the built-in `H₉` multiplication table before the
    /// axiom checks, so the suite has something to catch.
    pub corrupt: bool,
}

pub struct Criterion {
    pub name: &'static str,
    pub title: &'static str,
    run: fn(&SuiteOptions) -> Result<Report>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionRun {
    pub name: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub report: Report,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { name: "axioms", title: "Hopf axioms on the built-in corpus", run: axioms },
    Criterion { name: "taft-galois-sweep", title: "all 42 A_{r,s} are H₉-Galois objects", run: taft_sweep },
    Criterion { name: "kcn-classification", title: "k[C_N]-Galois objects up to isomorphism", run: kcn_classes },
    Criterion { name: "h2-cohomology", title: "H²(C₃, U(𝔽₇)) against the classification", run: h2_consistency },
    Criterion { name: "taft-cotensor", title: "A_{r,s} □ k[C₃] ≅ A_r", run: taft_cotensor },
    Criterion { name: "twist-laws", title: "twist involution and Galois preservation", run: twist_laws },
    Criterion { name: "graded-twist", title: "cotensor with degree 0 commutes with twisting", run: graded_twist_cotensor },
    Criterion { name: "quantum-double", title: "linking relation and central group-likes", run: double_checks },
    Criterion { name: "homotopy", title: "polynomial witnesses and Hopf homotopies", run: homotopies },
    Criterion { name: "schanuel", title: "char 2 idempotent matrix and unit certificate", run: schanuel },
];

/// Criteria whose name matches the glob `filter`, in suite order.
pub fn select(filter: Option<&str>) -> Result<Vec<&'static Criterion>> {
    let Some(pat) = filter else { return Ok(CRITERIA.iter().collect()) };
    let p = glob::Pattern::new(pat).map_err(|e| Error::BadParams(format!("filter {pat:?}: {e}")))?;
    Ok(CRITERIA.iter().filter(|c| p.matches(c.name)).collect())
}

/// Runs one criterion. A construction error becomes a failed check.
pub fn run(c: &Criterion, opts: &SuiteOptions) -> CriterionRun {
    let start = Instant::now();
    let report = (c.run)(opts).unwrap_or_else(|e| {
        let mut r = Report::new();
        r.fail("construction", e.to_string());
        r
    });
    CriterionRun { name: c.name, title: c.title, status: report.status(), report, elapsed: start.elapsed() }
}

pub fn run_all(filter: Option<&str>, opts: &SuiteOptions) -> Result<Vec<CriterionRun>> {
    Ok(select(filter)?.into_iter().map(|c| run(c, opts)).collect())
}

fn f(p: u64) -> Field {
    Field::prime(p).expect("prime")
}

/// `"check: witness"` for the first failing check of `r`.
fn summary(r: &Report) -> Option<String> {
    r.first_failure().map(|c| match &c.witness {
        Some(w) => format!("{}: {w}", c.name),
        None => c.name.clone(),
    })
}

fn corrupted(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let a = h.algebra();
    let mut mult = a.table().to_vec();
    // g·x ↦ 2·g·x
    let gx = 3 * h.dim() + 1;
    mult[gx] = mult[gx].scaled(&h.field().from_i64(2));
    let alg = Algebra::new(a.field(), a.labels().to_vec(), mult, a.unit().clone())?;
    HopfAlgebra::new(h.name(), alg, h.coalgebra().clone(), h.antipode().clone())
}

fn axioms(opts: &SuiteOptions) -> Result<Report> {
    let mut objects: Vec<(String, HopfAlgebra)> = Vec::new();
    for field in [f(5), f(7), Field::rational()] {
        for n in 1..=8 {
            objects.push((format!("k[C{n}]/{}", field.spec().short_name()), cyclic_group_algebra(n, &field)));
        }
    }
    let f7 = f(7);
    let q = f7.from_i64(2);
    let h9 = taft_hopf(3, &q, &f7)?;
    objects.push(("H9/p7".into(), if opts.corrupt { corrupted(&h9)? } else { h9 }));
    let qi = Field::cyclotomic(4)?;
    let i = qi.primitive_root_of_unity(4)?;
    objects.push(("H16/Q(i)".into(), taft_hopf(4, &i, &qi)?));
    let (u, a, _) = borel_halves(3, &q, &f7)?;
    objects.push(("U(N=3)".into(), u));
    objects.push(("A(N=3)".into(), a));
    let sq = uq_sl2_pipeline(3, &q, &f7, &f7.from_i64(2))?;
    objects.push(("D(N=3)".into(), sq.double.as_ref().clone()));
    objects.push(("u_q(sl2)".into(), sq.quotient.hopf.clone()));

    let mut rep = Report::new();
    let verdicts = par::map_slice(&objects, |(_, h)| h.verify());
    for ((name, h), v) in objects.iter().zip(verdicts) {
        rep.record(format!("{name} (dim {})", h.dim()), summary(&v));
    }
    rep.record("dim D = 81", (sq.double.dim() != 81).then(|| sq.double.dim().to_string()));
    rep.record("dim u_q = 27", (sq.quotient.hopf.dim() != 27).then(|| sq.quotient.hopf.dim().to_string()));
    Ok(rep)
}

/// `(r, s)` for `r ∈ U(𝔽₇)`, `s ∈ 𝔽₇`, in residue order.
fn taft_params() -> Vec<(Scalar, Scalar)> {
    let f7 = f(7);
    let units = f7.units().expect("finite");
    let elems = f7.elements().expect("finite");
    units.iter().flat_map(|r| elems.iter().map(move |s| (r.clone(), s.clone()))).collect()
}

fn taft_sweep(_: &SuiteOptions) -> Result<Report> {
    let f7 = f(7);
    let q = f7.from_i64(2);
    let h = Arc::new(taft_hopf(3, &q, &f7)?);
    let params = taft_params();
    let results = par::map_slice(&params, |(r, s)| -> Result<Option<String>> {
        let a = taft_galois_object(&TaftParams::new(3, q.clone(), r.clone(), s.clone())?, &h)?;
        if let Some(w) = summary(&a.verify()) {
            return Ok(Some(w));
        }
        let v = is_galois(&a)?;
        Ok((!v.coinvariants_equal_base || v.coinvariants_dim != 1 || v.canonical_rank != 81).then(|| {
            format!("coinvariants {} (= k: {}), canonical rank {}", v.coinvariants_dim, v.coinvariants_equal_base, v.canonical_rank)
        }))
    });
    let mut rep = Report::new();
    for ((r, s), res) in params.iter().zip(results) {
        rep.record(format!("A_{{{r},{s}}}"), res?);
    }
    rep.record("42 objects", (params.len() != 42).then(|| params.len().to_string()));
    Ok(rep)
}

fn residues(class: &[Scalar]) -> Vec<u64> {
    class.iter().map(|s| s.residue().unwrap_or(0)).collect()
}

fn kcn_classes(_: &SuiteOptions) -> Result<Report> {
    let mut rep = Report::new();
    let c7 = classify_kcn_galois(&f(7), 3)?;
    let got: Vec<Vec<u64>> = c7.classes.iter().map(|c| residues(c)).collect();
    let want = vec![vec![1, 6], vec![2, 5], vec![3, 4]];
    rep.record("𝔽₇, N = 3: 3 classes", (c7.classes.len() != 3 || !c7.matches_formula()).then(|| format!("{got:?}")));
    rep.record("𝔽₇, N = 3: {1,6} {2,5} {3,4}", (got != want).then(|| format!("{got:?}")));
    let c5 = classify_kcn_galois(&f(5), 2)?;
    let got5: Vec<Vec<u64>> = c5.classes.iter().map(|c| residues(c)).collect();
    rep.record("𝔽₅, N = 2: 2 classes", (c5.classes.len() != 2 || !c5.matches_formula()).then(|| format!("{got5:?}")));
    Ok(rep)
}

fn h2_consistency(_: &SuiteOptions) -> Result<Report> {
    let mut rep = Report::new();
    let f7 = f(7);
    let g = FiniteAbelianGroup::cyclic(3);
    let h2 = h2_group_cohomology(&g, &f7)?;
    rep.record("H²(C₃, U(𝔽₇)) ≅ ℤ/3", (h2.invariants != [3]).then(|| format!("invariants {:?}", h2.invariants)));
    let classes = classify_kcn_galois(&f7, 3)?.classes;
    let h = Arc::new(cyclic_group_algebra(3, &f7));
    let mut hit = Vec::new();
    for (j, sigma) in h2_classes(&g, &f7)?.iter().enumerate() {
        let tw = twisted_group_algebra(sigma, &f7)?;
        let mut found = None;
        for (ci, class) in classes.iter().enumerate() {
            let ar = kg_galois_object(3, &class[0], &h)?;
            if let Some(iso) = iso_search_small(&tw, &ar)? {
                if comodule_isomorphism_check(&iso, &tw, &ar).passed() {
                    found = Some(ci);
                    break;
                }
            }
        }
        let cls = found.map(|ci| residues(&classes[ci]));
        rep.record(format!("k_σ^{j}[C₃] lies in a class"), found.is_none().then(|| "no isomorphic A_r".into()));
        if let Some(c) = cls {
            rep.pass(format!("σ^{j} ↦ {c:?}"), None);
        }
        hit.extend(found);
    }
    let mut distinct = hit.clone();
    distinct.sort_unstable();
    distinct.dedup();
    rep.record("classes hit bijectively", (distinct.len() != 3 || hit.len() != 3).then(|| format!("{hit:?}")));
    Ok(rep)
}

fn taft_cotensor(_: &SuiteOptions) -> Result<Report> {
    let f7 = f(7);
    let q = f7.from_i64(2);
    let h = Arc::new(taft_hopf(3, &q, &f7)?);
    let k = Arc::new(cyclic_group_algebra(3, &f7));
    // g^i ↦ g^i
    let phi = LinMap::new(3, 9, (0..3).map(|i| SVec::basis(3 * i, f7.one())).collect())?;
    let mut rep = Report::new();
    rep.record("k[C₃] → H₉ is a Hopf map", summary(&verify_hopf_map(&phi, &k, &h)));
    let params = taft_params();
    let results = par::map_slice(&params, |(r, s)| -> Result<Option<String>> {
        let a = taft_galois_object(&TaftParams::new(3, q.clone(), r.clone(), s.clone())?, &h)?;
        let c = cotensor(&a, &k, &phi)?;
        if c.algebra.dim() != 3 {
            return Ok(Some(format!("dimension {}", c.algebra.dim())));
        }
        let ar = kg_galois_object(3, r, &k)?;
        // a^i ↦ a^i ⊗ g^i
        let images = (0..3)
            .map(|i| c.subspace.coordinates(&SVec::basis(3 * i * 3 + i, f7.one())).ok_or_else(|| Error::Internal("a⊗g outside the cotensor".into())))
            .collect::<Result<_>>()?;
        let iso = LinMap::new(3, 3, images)?;
        Ok(summary(&comodule_isomorphism_check(&iso, &ar, &c.algebra)))
    });
    for ((r, s), res) in params.iter().zip(results) {
        rep.record(format!("A_{{{r},{s}}} □ k[C₃]"), res?);
    }
    Ok(rep)
}

fn twist_laws(_: &SuiteOptions) -> Result<Report> {
    let cases = [
        (FiniteAbelianGroup::cyclic(2), f(5)),
        (FiniteAbelianGroup::cyclic(3), f(7)),
        (FiniteAbelianGroup::new(vec![2, 2])?, f(5)),
    ];
    let mut rep = Report::new();
    for (g, field) in &cases {
        let h = Arc::new(group_algebra(g, field));
        let classes = h2_classes(g, field)?;
        let mut objects = vec![ComoduleAlgebra::regular(&h)?];
        for c in &classes {
            objects.push(twisted_group_algebra(c, field)?);
        }
        for (j, c) in classes.iter().enumerate() {
            let sigma = c.to_hopf_cocycle(&h)?;
            let mut bad = summary(&verify_cocycle(sigma.values(), &h));
            let back = sigma.inverse_cocycle()?;
            for a in &objects {
                if bad.is_some() {
                    break;
                }
                let t = twist_comodule(a, &sigma)?;
                if let Some(w) = summary(&t.verify()) {
                    bad = Some(format!("{}^σ: {w}", a.name()));
                } else if !is_galois(&t)?.is_galois() {
                    bad = Some(format!("{}^σ is not Galois", a.name()));
                } else {
                    let tt = twist_comodule(&t, &back)?;
                    if tt.algebra().table() != a.algebra().table() || tt.coaction_table() != a.coaction_table() {
                        bad = Some(format!("(A^σ)^σ⁻¹ ≠ A for A = {}", a.name()));
                    }
                }
            }
            rep.record(format!("k[{}]/{}, class {j}", g.name(), field.spec().short_name()), bad);
        }
    }
    Ok(rep)
}

fn graded_twist_cotensor(_: &SuiteOptions) -> Result<Report> {
    let f7 = f(7);
    let q = f7.from_i64(2);
    let gt = graded_twist(3, &q, &f7, &f7.from_i64(2))?;
    let sigma = &gt.descended.cocycle;
    let h = sigma.hopf().clone();
    let hs = sigma.twisted_hopf()?;
    let sq = &gt.graded;
    // K = [1 ⊗ g], spanning degree 0 with its powers
    let g = sq.datum.a_roles[0].grouplike;
    let kk = gt.descended.quotient.projection.apply(&sq.u.one().tensor(&sq.a.basis(g), sq.a.dim()));
    let powers: Vec<SVec<Scalar>> = std::iter::successors(Some(h.one()), |p| Some(h.mul(p, &kk))).take(3).collect();
    let kc3 = Arc::new(cyclic_group_algebra(3, &f7));
    let phi = LinMap::new(3, h.dim(), powers.clone())?;

    let mut rep = Report::new();
    rep.record("k[C₃] → u⁰ is a Hopf map", summary(&verify_hopf_map(&phi, &kc3, &h)));
    rep.record("k[C₃] → (u⁰)^σ is a Hopf map", summary(&verify_hopf_map(&phi, &kc3, &hs)));
    rep.record("σ trivial on degree 0", (!sigma.trivial_on(&powers)).then(|| "σ(K^i, ·) ≠ ε".into()));
    if let Some(grading) = h.grading() {
        let bad = powers.iter().flat_map(|p| p.indices()).find(|&i| grading[i] != 0);
        rep.record("K^i in degree 0", bad.map(|i| h.labels()[i].clone()));
    }

    let a = ComoduleAlgebra::regular(&h)?;
    let at = twist_comodule(&a, sigma)?;
    rep.record(
        "A^σ differs from A",
        (at.algebra().table() == a.algebra().table()).then(|| "σ acts trivially, the comparison is vacuous".into()),
    );
    let c0 = cotensor(&a, &kc3, &phi)?;
    let c1 = cotensor(&at, &kc3, &phi)?;
    rep.pass(format!("dim A □_H K = {}", c0.algebra.dim()), None);
    rep.record(
        "same subspace of A ⊗ K",
        (c0.subspace.basis != c1.subspace.basis).then(|| format!("dims {} and {}", c0.algebra.dim(), c1.algebra.dim())),
    );
    let bad = (c0.algebra.algebra().table() != c1.algebra.algebra().table()).then(|| {
        let d = c0.algebra.dim();
        let k = (0..d * d).find(|&k| c0.algebra.algebra().table()[k] != c1.algebra.algebra().table()[k]).unwrap_or(0);
        format!("products of basis vectors {} and {} differ", k / d, k % d)
    });
    rep.record("equal multiplication tables", bad);
    Ok(rep)
}

fn double_checks(_: &SuiteOptions) -> Result<Report> {
    let f7 = f(7);
    let q = f7.from_i64(2);
    let lambda = q.inv()?.sub(&q);
    let sq = uq_sl2_pipeline(3, &q, &f7, &lambda)?;
    let (datum, tau) = (&sq.datum, &sq.pairing);
    let mut rep = Report::new();
    rep.record("λ = q⁻¹ − q = 2", (lambda != f7.from_i64(2)).then(|| lambda.to_string()));
    rep.record(
        "E u − η(y) u E = τ(u, E)(1 − y ⊗ K) in D",
        (!linking_relation_check(&sq.double, datum, tau, 0, 0)?).then(|| "relation fails".into()),
    );
    rep.record(
        "EF − FE = λ(K⁻¹ − K) in u_q",
        (!quotient_linking_check(&sq.quotient, datum, tau, std::slice::from_ref(&lambda), 0, 0)?)
            .then(|| "relation fails".into()),
    );
    let mut central = Vec::new();
    let mut bad = None;
    for &y in &datum.u_group {
        for &g in &datum.a_group {
            match central_grouplike_test(&sq.double, datum, tau, y, g) {
                Ok(true) => central.push(format!("{}⊗{}", sq.u.labels()[y], sq.a.labels()[g])),
                Ok(false) => {}
                Err(e) => bad = bad.or(Some(e.to_string())),
            }
        }
    }
    let pairs = datum.u_group.len() * datum.a_group.len();
    rep.record(format!("character criterion = commutant on {pairs} pairs"), bad);
    rep.record("9 pairs", (pairs != 9).then(|| pairs.to_string()));
    rep.pass("(y, g) with y ⊗ g⁻¹ central", Some(central.join(", ")));
    rep.record("dim u_q = 27", (sq.quotient.hopf.dim() != 27).then(|| sq.quotient.hopf.dim().to_string()));
    Ok(rep)
}

fn homotopies(_: &SuiteOptions) -> Result<Report> {
    let f7 = f(7);
    let q = f7.from_i64(2);
    let mut rep = Report::new();
    let params = taft_params();
    let results = par::map_slice(&params, |(r, s)| -> Result<Option<String>> {
        let w = taft_homotopy_witness(3, &q, &f7, r, s)?;
        let v = verify_poly_galois(&w)?;
        if !v.is_galois() {
            return Ok(Some(summary(&v.axioms).unwrap_or_else(|| "not Galois over k[t]".into())));
        }
        let h = w.hopf();
        let a0 = taft_galois_object(&TaftParams::new(3, q.clone(), r.clone(), f7.zero())?, h)?;
        let a1 = taft_galois_object(&TaftParams::new(3, q.clone(), r.clone(), s.clone())?, h)?;
        Ok(summary(&verify_homotopy_witness(&w, &a0, &a1)?.report()))
    });
    for ((r, s), res) in params.iter().zip(results) {
        rep.record(format!("A_{{{r},0}} ∼ A_{{{r},{s}}}"), res?);
    }

    let h9 = Arc::new(taft_hopf(3, &q, &f7)?);
    let fam = graded_hopf_homotopy(&h9)?;
    rep.extend("H₉", verify_hopf_homotopy(&fam));
    // ιπ keeps g^i and kills g^i x^j for j > 0
    let iota_pi = (0..9).find(|&i| *fam.phi.image(i) != if i % 3 == 0 { h9.basis(i) } else { SVec::new() });
    rep.record("H₉.[0]Φ = ιπ", iota_pi.map(|i| h9.labels()[i].clone()));
    rep.record("H₉.[1]Φ = id", (fam.psi != LinMap::identity(9, f7.one())).then(|| "ψ ≠ id".into()));

    let f2 = f(2);
    for n in [2u64, 4] {
        let g = FiniteAbelianGroup::cyclic(n);
        let name = format!("k[C{n}]/p2");
        let hom = char_p_group_homotopy(&g, &f2)?;
        let kgt = hom.source.map_coeffs(|c| crate::scalars::UniPoly::constant(c.clone()));
        let th = hom.theta.image(g.generator(0));
        let order = (kgt.pow(th, n as usize) != *kgt.unit()).then(|| format!("θ(g)^{n} ≠ 1"));
        rep.record(format!("{name}.θ(g)^{n} = 1"), order);
        rep.extend(&name, hom.verify());
    }
    Ok(rep)
}

fn schanuel(_: &SuiteOptions) -> Result<Report> {
    schanuel_suite(&f(2))
}
