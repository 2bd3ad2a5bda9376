//! Homotopies `θ: R → S[t]` of commutative algebra maps.

use crate::constructions::FiniteAbelianGroup;
use crate::error::{Error, Result};
use crate::hopf::{show, Algebra, FinAlgebra, LinMap};
use crate::par;
use crate::report::Report;
use crate::scalars::{Field, SVec, Scalar, UniPoly};

/// `θ` on the basis of `R`, with the maps `α`, `β` it should connect.
#[derive(Clone, Debug)]
pub struct AlgebraHomotopy {
    pub source: FinAlgebra,
    pub target: FinAlgebra,
    pub theta: LinMap<UniPoly>,
    pub alpha: LinMap,
    pub beta: LinMap,
}

fn is_algebra_map(f: &LinMap, src: &FinAlgebra, tgt: &FinAlgebra) -> Option<String> {
    let d = src.dim();
    if f.apply(src.unit()) != *tgt.unit() {
        return Some("f(1) ≠ 1".into());
    }
    par::first_some(d, |x| {
        (0..d).find_map(|y| {
            (f.apply(src.mul_basis(x, y)) != tgt.mul(f.image(x), f.image(y)))
                .then(|| format!("not multiplicative on ({}, {})", src.labels()[x], src.labels()[y]))
        })
    })
}

impl AlgebraHomotopy {
    /// `[i]θ`.
    pub fn endpoint(&self, i: u8) -> LinMap {
        self.theta.map_coeffs(|p| p.eval_endpoint(i))
    }

    /// `θ` multiplicative and unital over `k[t]`, `[0]θ = α`, `[1]θ = β`, and
    /// both endpoints algebra maps.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new();
        let (r, s) = (&self.source, &self.target);
        let st: Algebra<UniPoly> = s.map_coeffs(|c| UniPoly::constant(c.clone()));
        let lift = |v: &SVec<Scalar>| v.map_coeffs(|c| UniPoly::constant(c.clone()));
        let d = r.dim();
        let l = r.labels();
        let mult = par::first_some(d, |x| {
            (0..d).find_map(|y| {
                let lhs = self.theta.apply(&lift(r.mul_basis(x, y)));
                let rhs = st.mul(self.theta.image(x), self.theta.image(y));
                (lhs != rhs).then(|| format!("θ({0}·{1}) ≠ θ({0})θ({1})", l[x], l[y]))
            })
        });
        rep.record("θ multiplicative", mult);
        let unit = (self.theta.apply(&lift(r.unit())) != lift(s.unit())).then(|| "θ(1) ≠ 1".to_string());
        rep.record("θ unital", unit);
        for (i, want, name) in [(0u8, &self.alpha, "α"), (1, &self.beta, "β")] {
            let e = self.endpoint(i);
            let bad = (0..d).find(|&x| e.image(x) != want.image(x)).map(|x| {
                format!("[{i}]θ({}) = {}", l[x], show(e.image(x), s.labels()))
            });
            rep.record(format!("[{i}]θ = {name}"), bad);
            rep.record(format!("{name} algebra map"), is_algebra_map(want, r, s));
        }
        rep
    }
}

/// `k[x]` restricted to the exponents in `exps`, truncated at `x^cutoff = 0`.
/// The exponent set must be closed under sums below the cutoff.
pub fn monomial_algebra(field: &Field, exps: &[usize], cutoff: usize) -> Result<(FinAlgebra, Vec<usize>)> {
    if exps.first() != Some(&0) || exps.windows(2).any(|w| w[0] >= w[1]) || exps.iter().any(|&e| e >= cutoff) {
        return Err(Error::BadParams("exponents must start at 0, increase and stay below the cutoff".into()));
    }
    let pos = |e: usize| exps.iter().position(|&x| x == e);
    for &a in exps {
        for &b in exps {
            if a + b < cutoff && pos(a + b).is_none() {
                return Err(Error::BadParams(format!("x^{} missing from the exponent set", a + b)));
            }
        }
    }
    let labels = exps
        .iter()
        .map(|&e| match e {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{e}"),
        })
        .collect();
    let alg = Algebra::from_fn(field, labels, SVec::basis(0, field.one()), |i, j| {
        pos(exps[i] + exps[j]).map_or(SVec::new(), |k| SVec::basis(k, field.one()))
    })?;
    Ok((alg, exps.to_vec()))
}

/// `θ(x) = tⁿ x` on `R(n)`, connecting `ιπ` to the identity.
pub fn graded_algebra_homotopy(r: &FinAlgebra, degrees: &[usize]) -> Result<AlgebraHomotopy> {
    let d = r.dim();
    if degrees.len() != d {
        return Err(Error::ShapeMismatch("grading length".into()));
    }
    if !r.is_commutative() {
        return Err(Error::NotCommutative(format!("algebra of dimension {d}")));
    }
    let l = r.labels();
    if let Some(k) = r.unit().indices().find(|&k| degrees[k] != 0) {
        return Err(Error::NotGraded(format!("unit has component {} in positive degree", l[k])));
    }
    for i in 0..d {
        for j in 0..d {
            if let Some(k) = r.mul_basis(i, j).indices().find(|&k| degrees[k] != degrees[i] + degrees[j]) {
                return Err(Error::NotGraded(format!("{}·{} has component {}", l[i], l[j], l[k])));
            }
        }
    }
    let one = r.field().one();
    let theta = LinMap {
        src: d,
        tgt: d,
        images: (0..d).map(|i| SVec::basis(i, UniPoly::monomial(one.clone(), degrees[i]))).collect(),
    };
    let alpha = LinMap {
        src: d,
        tgt: d,
        images: (0..d).map(|i| if degrees[i] == 0 { SVec::basis(i, one.clone()) } else { SVec::new() }).collect(),
    };
    Ok(AlgebraHomotopy { source: r.clone(), target: r.clone(), theta, alpha, beta: LinMap::identity(d, one) })
}

/// `θ(g_i) = 1 + t(g_i − 1)` on `k[G]` for an abelian `p`-group in
/// characteristic `p`, connecting `g ↦ 1` to the identity.
pub fn char_p_group_homotopy(g: &FiniteAbelianGroup, field: &Field) -> Result<AlgebraHomotopy> {
    let p = field.characteristic();
    let is_p_power = |mut n: u64| {
        while p > 1 && n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    };
    if p == 0 || !g.invariants().iter().all(|&n| is_p_power(n)) {
        return Err(Error::CharMismatch(format!("{} is not a {p}-group", g.name())));
    }
    let d = g.order();
    let words: Vec<Vec<u64>> = (0..d).map(|i| g.exponents(i)).collect();
    let labels = g.labels();
    let kg: FinAlgebra = Algebra::from_fn(field, labels, SVec::basis(0, field.one()), |a, b| {
        SVec::basis(g.mul(a, b), field.one())
    })?;
    let kgt: Algebra<UniPoly> = kg.map_coeffs(|c| UniPoly::constant(c.clone()));
    let one_t = kgt.unit().clone();
    let t = UniPoly::t(field);
    // 1 + t(g_i − 1)
    let gens: Vec<SVec<UniPoly>> = (0..g.invariants().len())
        .map(|i| {
            let gi: SVec<UniPoly> = SVec::basis(g.generator(i), UniPoly::constant(field.one()));
            one_t.sum(&gi.difference(&one_t).scaled(&t))
        })
        .collect();
    for (i, &n) in g.invariants().iter().enumerate() {
        if kgt.pow(&gens[i], n as usize) != one_t {
            return Err(Error::Internal(format!("θ(g_{i})^{n} ≠ 1")));
        }
    }
    let images = words
        .iter()
        .map(|w| {
            w.iter().enumerate().fold(one_t.clone(), |acc, (i, &e)| kgt.mul(&acc, &kgt.pow(&gens[i], e as usize)))
        })
        .collect();
    let theta = LinMap { src: d, tgt: d, images };
    let alpha = LinMap { src: d, tgt: d, images: vec![SVec::basis(0, field.one()); d] };
    Ok(AlgebraHomotopy { source: kg.clone(), target: kg, theta, alpha, beta: LinMap::identity(d, field.one()) })
}
