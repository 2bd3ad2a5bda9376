//! Taft algebras, their Galois objects `A_{r,s}`, and the `k[C_N]`-Galois
//! objects `A_r`.

use std::sync::Arc;

use crate::comodule::{iso_search_small, ComoduleAlgebra, Presentation};
use crate::error::{Error, Result};
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra};
use crate::scalars::{Coeff, Field, SVec, Scalar};

use super::groups::{group_algebra, FiniteAbelianGroup};

/// Label of `x^k y^n`.
pub(crate) fn word_label(x: &str, k: usize, y: &str, n: usize) -> String {
    let part = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{e}"),
    };
    let l = format!("{}{}", part(x, k), part(y, n));
    if l.is_empty() {
        "1".into()
    } else {
        l
    }
}

/// Checks that `q` has multiplicative order exactly `n`.
pub fn check_root(q: &Scalar, n: u64) -> Result<()> {
    if q.multiplicative_order() != Some(n) {
        return Err(Error::NoSuchRoot { order: n, field: q.field().spec().short_name() });
    }
    Ok(())
}

/// `H_{N²} = ⟨g, x | g^N = 1, x^N = 0, g x g⁻¹ = q x⟩`, basis `g^k x^n` at
/// index `k N + n`, graded by `n`.
pub fn taft_hopf(n: usize, q: &Scalar, field: &Field) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::BadParams("Taft algebra needs N ≥ 2".into()));
    }
    check_root(q, n as u64)?;
    let one = field.one();
    let qinv = q.inv()?;
    let labels: Vec<String> = (0..n * n).map(|i| word_label("g", i / n, "x", i % n)).collect();
    let d = n * n;
    // (g^a x^b)(g^c x^d) = q^{-bc} g^{a+c} x^{b+d}
    let mult = (0..d * d)
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let (a, b, c, e) = (i / n, i % n, j / n, j % n);
            if b + e >= n {
                SVec::new()
            } else {
                SVec::basis(((a + c) % n) * n + b + e, qinv.pow((b * c) as u32))
            }
        })
        .collect();
    let algebra = Algebra::new(field, labels.clone(), mult, SVec::basis(0, one.clone()))?;
    let hh = algebra.tensor(&algebra);
    let dg = SVec::basis(n * d + n, one.clone());
    // Δ(x) = 1⊗x + x⊗g
    let dx = SVec::from_terms([(1, one.clone()), (d + n, one.clone())]);
    let comult = (0..d)
        .map(|i| {
            let (k, e) = (i / n, i % n);
            let gk = (0..k).fold(hh.unit().clone(), |acc, _| hh.mul(&acc, &dg));
            (0..e).fold(gk, |acc, _| hh.mul(&acc, &dx))
        })
        .collect();
    let counit = SVec::from_terms((0..n).map(|k| (k * n, one.clone())));
    let coalgebra = Coalgebra::new(field, labels, comult, counit)?;
    let grouplikes = (0..n).map(|k| SVec::basis(k * n, one.clone())).collect();
    let grading = (0..d).map(|i| i % n).collect();
    HopfAlgebra::from_bialgebra(format!("H_{}", d), algebra, coalgebra)?
        .with_grading(grading)
        .map(|h| h.with_grouplikes(grouplikes))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaftParams {
    pub n: usize,
    pub q: Scalar,
    pub r: Scalar,
    pub s: Scalar,
}

impl TaftParams {
    pub fn new(n: usize, q: Scalar, r: Scalar, s: Scalar) -> Result<Self> {
        check_root(&q, n as u64)?;
        if r.is_zero() {
            return Err(Error::BadParams("r must be a unit".into()));
        }
        Ok(Self { n, q, r, s })
    }
}

/// Multiplication and coaction tables of `A_{r,s}` over any coefficient ring
/// containing the field; `h` is the Taft algebra with matching `N, q`.
pub fn taft_galois_tables<R: Coeff>(
    n: usize,
    q: &Scalar,
    r: &R,
    s: &R,
    h: &HopfAlgebra,
) -> Result<(Algebra<R>, Vec<SVec<R>>)> {
    let field = h.field();
    let d = n * n;
    let one = R::lift(&field.one());
    let qinv = q.inv()?;
    let rpow = |e: usize| (0..e).fold(one.clone(), |acc, _| acc.mul(r));
    let spow = |e: usize| (0..e).fold(one.clone(), |acc, _| acc.mul(s));
    let labels: Vec<String> = (0..d).map(|i| word_label("a", i / n, "b", i % n)).collect();
    // (a^i b^j)(a^k b^l) = q^{-jk} a^{i+k} b^{j+l}, a^N = r, b^N = s
    let mult = (0..d * d)
        .map(|ij| {
            let (x, y) = (ij / d, ij % d);
            let (i, j, k, l) = (x / n, x % n, y / n, y % n);
            let c = R::lift(&qinv.pow((j * k) as u32)).mul(&rpow((i + k) / n)).mul(&spow((j + l) / n));
            SVec::from_terms([(((i + k) % n) * n + (j + l) % n, c)])
        })
        .collect();
    let algebra = Algebra::new(field, labels, mult, SVec::basis(0, one.clone()))?;
    let hl = h.algebra().map_coeffs(R::lift);
    let dh = h.dim();
    // δ(a) = a ⊗ g, δ(b) = 1 ⊗ x + b ⊗ g
    let da = SVec::basis(n * dh + n, one.clone());
    let db = SVec::from_terms([(1, one.clone()), (dh + n, one.clone())]);
    let unit = SVec::basis(0, one.clone());
    let coaction = (0..d)
        .map(|i| {
            let (k, e) = (i / n, i % n);
            let ak = (0..k).fold(unit.clone(), |acc, _| algebra.tensor_mul(&hl, &acc, &da));
            (0..e).fold(ak, |acc, _| algebra.tensor_mul(&hl, &acc, &db))
        })
        .collect();
    Ok((algebra, coaction))
}

/// Generators `a, b` with words `a^k b^n`.
pub fn taft_presentation(n: usize) -> Presentation {
    Presentation {
        generators: vec![n, 1],
        words: (0..n * n).map(|i| [vec![0; i / n], vec![1; i % n]].concat()).collect(),
    }
}

/// `A_{r,s}` over `h = taft_hopf(N, q)`.
pub fn taft_galois_object(p: &TaftParams, h: &Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
    if h.dim() != p.n * p.n {
        return Err(Error::ShapeMismatch("Taft algebra dimension".into()));
    }
    let (algebra, coaction) = taft_galois_tables(p.n, &p.q, &p.r, &p.s, h)?;
    ComoduleAlgebra::over_ground_field(format!("A_{{{},{}}}", p.r, p.s), algebra, h.clone(), coaction)?
        .with_presentation(taft_presentation(p.n))
}

/// `A_r = k⟨a | a^N = r⟩` over `k[C_N]` with `δ(a) = a ⊗ g`.
pub fn kg_galois_object(n: usize, r: &Scalar, h: &Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
    if r.is_zero() {
        return Err(Error::BadParams("r must be a unit".into()));
    }
    if h.dim() != n {
        return Err(Error::ShapeMismatch("group algebra dimension".into()));
    }
    let field = h.field();
    let one = field.one();
    let labels = (0..n).map(|k| word_label("a", k, "", 0)).collect();
    let mult = (0..n * n).map(|ij| SVec::basis((ij / n + ij % n) % n, r.pow(((ij / n + ij % n) / n) as u32))).collect();
    let algebra = Algebra::new(field, labels, mult, SVec::basis(0, one.clone()))?;
    let coaction = (0..n).map(|k| SVec::basis(k * n + k, one.clone())).collect();
    let pres = Presentation { generators: vec![1 % n], words: (0..n).map(|k| vec![0; k]).collect() };
    let ca = ComoduleAlgebra::over_ground_field(format!("A_{r}"), algebra, h.clone(), coaction)?;
    if n == 1 {
        // a = r·1 has no separate basis vector
        return Ok(ca);
    }
    ca.with_presentation(pres)
}

/// `k[C_N]` with the labels used by [`kg_galois_object`].
pub fn cyclic_group_algebra(n: usize, field: &Field) -> HopfAlgebra {
    group_algebra(&FiniteAbelianGroup::cyclic(n as u64), field)
}

#[derive(Clone, Debug)]
pub struct Classification {
    /// Classes of `U(k)`, each sorted by residue, ordered by first element.
    pub classes: Vec<Vec<Scalar>>,
    /// `|U(k) / U(k)^N|`.
    pub expected: usize,
}

impl Classification {
    pub fn matches_formula(&self) -> bool {
        self.classes.len() == self.expected
    }
}

/// Partitions `U(k)` by isomorphism of `A_r` as `k[C_N]`-comodule algebras.
pub fn classify_kcn_galois(field: &Field, n: usize) -> Result<Classification> {
    let units = field.units().ok_or_else(|| Error::BadParams("classification needs a finite field".into()))?;
    let h = Arc::new(cyclic_group_algebra(n, field));
    let objects: Vec<ComoduleAlgebra> = units.iter().map(|r| kg_galois_object(n, r, &h)).collect::<Result<_>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, a) in objects.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = &objects[class[0]];
            let iso = if n == 1 { Some(()) } else { iso_search_small(rep, a)?.map(|_| ()) };
            if iso.is_some() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    let nth_powers: std::collections::HashSet<Scalar> = units.iter().map(|u| u.pow(n as u32)).collect();
    Ok(Classification {
        classes: classes.into_iter().map(|c| c.into_iter().map(|i| units[i].clone()).collect()).collect(),
        expected: units.len() / nth_powers.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::is_galois;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn h9_axioms_and_grading() {
        let f = f7();
        let h = taft_hopf(3, &f.from_i64(2), &f).unwrap();
        assert_eq!(h.dim(), 9);
        let rep = h.verify();
        assert!(rep.passed(), "{rep}");
        assert_eq!(h.labels()[4], "gx");
    }

    #[test]
    fn wrong_root_rejected() {
        let f = f7();
        assert!(matches!(taft_hopf(3, &f.from_i64(3), &f), Err(Error::NoSuchRoot { .. })));
    }

    #[test]
    fn galois_object_basics() {
        let f = f7();
        let h = Arc::new(taft_hopf(3, &f.from_i64(2), &f).unwrap());
        let p = TaftParams::new(3, f.from_i64(2), f.from_i64(3), f.from_i64(5)).unwrap();
        let a = taft_galois_object(&p, &h).unwrap();
        assert!(a.verify().passed(), "{}", a.verify());
        let b = a.algebra().basis(1);
        assert_eq!(a.mul(&a.mul(&b, &b), &b), SVec::basis(0, f.from_i64(5)));
        let v = is_galois(&a).unwrap();
        assert!(v.is_galois());
        assert_eq!(v.canonical_rank, 81);
        assert_eq!(v.coinvariants_dim, 1);
    }

    #[test]
    fn classification_f5() {
        let c = classify_kcn_galois(&Field::prime(5).unwrap(), 2).unwrap();
        let res: Vec<Vec<u64>> = c.classes.iter().map(|c| c.iter().map(|x| x.residue().unwrap()).collect()).collect();
        assert_eq!(res, vec![vec![1, 4], vec![2, 3]]);
        assert!(c.matches_formula());
    }
}
