//! Comodule algebras over `k[t]` as single-step homotopy witnesses.

use std::sync::Arc;

use serde::Serialize;

use crate::comodule::{comodule_isomorphism_check, iso_search_small, ComoduleAlgebra};
use crate::constructions::{taft_galois_tables, taft_hopf, taft_presentation};
use crate::error::{Error, Result};
use crate::hopf::LinMap;
use crate::par;
use crate::report::Report;
use crate::scalars::{Field, PolyMatrix, SVec, Scalar, UniPoly};

/// An `H[t]`-comodule algebra free over `k[t]`, with `H` defined over `k`.
/// The base is `k[t]`.
pub type PolyComoduleAlgebra = ComoduleAlgebra<UniPoly>;

/// Extends scalars from `k` to `k[t]`: the constant witness `A[t]`.
pub fn constant_witness(a: &ComoduleAlgebra) -> PolyComoduleAlgebra {
    a.map_coeffs(|c| UniPoly::constant(c.clone())).with_name(format!("{}[t]", a.name()))
}

/// `[i]_* A`: every table specialized at `t = i`.
pub fn eval_endpoint(pca: &PolyComoduleAlgebra, i: u8) -> ComoduleAlgebra {
    pca.map_coeffs(|p| p.eval_endpoint(i)).with_name(format!("[{i}]_*{}", pca.name()))
}

/// The substitution `t ↦ 1 − t`, which swaps the two endpoints.
pub fn reflect(pca: &PolyComoduleAlgebra) -> PolyComoduleAlgebra {
    let f = pca.field();
    let s = UniPoly::constant(f.one()).sub(&UniPoly::t(f));
    pca.map_coeffs(|p| p.compose(&s)).with_name(format!("{}(1−t)", pca.name()))
}

/// `x ⊗ y ↦ x y₀ ⊗ y₁` on `A ⊗_{k[t]} A → A ⊗_{k[t]} H[t]`, as a square
/// matrix over `k[t]` (rows index `A ⊗ H`).
pub fn poly_canonical_matrix(pca: &PolyComoduleAlgebra) -> Result<PolyMatrix> {
    let (d, dh) = (pca.dim(), pca.hopf().dim());
    let field = pca.field();
    if d != dh {
        return Err(Error::NonUnitDeterminant(format!("canonical map is {}×{}, not square", d * dh, d * d)));
    }
    let alg = pca.algebra();
    let cols: Vec<SVec<UniPoly>> = par::map_range(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let mut out = SVec::new();
        for (kh, c) in pca.coaction_basis(y).iter() {
            let (k, h) = (kh / dh, kh % dh);
            for (m, u) in alg.mul_basis(x, k).iter() {
                out.add_term(m * dh + h, c.mul(u));
            }
        }
        out
    });
    let mut m = PolyMatrix::zeros(field, d * dh, d * d);
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col.iter() {
            m[(i, j)] = c.clone();
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyGaloisVerdict {
    pub axioms: Report,
    /// Dimension over `k(t)` of the kernel of `a ↦ δ(a) − a ⊗ 1`.
    pub coinvariant_rank: usize,
    /// The unit spans the coinvariants and is primitive, so the `k[t]`-lattice
    /// of coinvariants is `k[t]·1`.
    pub coinvariants_equal_base: bool,
    /// Determinant of the canonical map; absent when the axioms fail.
    pub determinant: Option<String>,
}

impl PolyGaloisVerdict {
    pub fn is_galois(&self) -> bool {
        self.axioms.passed() && self.coinvariants_equal_base && self.determinant.is_some()
    }
}

/// Axioms over `k[t]`, coinvariants `k[t]`, and the canonical map certified
/// bijective by a determinant in `k \ {0}`.
pub fn verify_poly_galois(pca: &PolyComoduleAlgebra) -> Result<PolyGaloisVerdict> {
    let axioms = pca.verify();
    let field = pca.field();
    let (d, dh) = (pca.dim(), pca.hopf().dim());
    if !axioms.passed() {
        return Ok(PolyGaloisVerdict { axioms, coinvariant_rank: 0, coinvariants_equal_base: false, determinant: None });
    }
    if pca.base_dim() != 1 || *pca.inclusion().image(0) != *pca.algebra().unit() {
        return Err(Error::BadParams("polynomial witnesses need base k[t]".into()));
    }
    let unit = pca.hopf().one().map_coeffs(|c| UniPoly::constant(c.clone()));
    let mut coinv = PolyMatrix::zeros(field, d * dh, d);
    for j in 0..d {
        let col = pca.coaction_basis(j).difference(&pca.algebra().basis(j).tensor(&unit, dh));
        for (i, c) in col.iter() {
            coinv[(i, j)] = c.clone();
        }
    }
    let coinvariant_rank = d - coinv.rank();
    // δ(1) = 1 ⊗ 1 is part of the axioms, and 1 has a unit coordinate
    let primitive = pca.algebra().unit().iter().any(|(_, c)| c.is_unit());
    let coinvariants_equal_base = coinvariant_rank == 1 && primitive;
    let det = poly_canonical_matrix(pca)?.determinant()?;
    if !det.is_unit() {
        return Err(Error::NonUnitDeterminant(format!("det = {}", det.to_text('t'))));
    }
    Ok(PolyGaloisVerdict { axioms, coinvariant_rank, coinvariants_equal_base, determinant: Some(det.to_text('t')) })
}

/// How one endpoint was matched.
#[derive(Clone, Debug, PartialEq)]
pub struct EndpointMatch {
    pub tables_equal: bool,
    /// An isomorphism `[i]_*A → A_i`, identity if the tables agree.
    pub iso: Option<LinMap>,
}

impl EndpointMatch {
    pub fn matched(&self) -> bool {
        self.iso.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct WitnessVerdict {
    pub endpoints: [EndpointMatch; 2],
}

impl WitnessVerdict {
    pub fn passed(&self) -> bool {
        self.endpoints.iter().all(EndpointMatch::matched)
    }

    pub fn report(&self) -> Report {
        let mut rep = Report::new();
        for (i, e) in self.endpoints.iter().enumerate() {
            let how = if e.tables_equal { "equal tables" } else { "isomorphism found" };
            match e.matched() {
                true => rep.pass(format!("[{i}]_*A ≅ A_{i}"), Some(how.to_string())),
                false => rep.fail(format!("[{i}]_*A ≅ A_{i}"), "no isomorphism"),
            }
        }
        rep
    }
}

fn same_tables(x: &ComoduleAlgebra, y: &ComoduleAlgebra) -> bool {
    x.algebra().table() == y.algebra().table()
        && x.algebra().unit() == y.algebra().unit()
        && x.coaction_table() == y.coaction_table()
        && x.inclusion() == y.inclusion()
        && x.hopf().as_ref() == y.hopf().as_ref()
}

fn match_endpoint(e: &ComoduleAlgebra, target: &ComoduleAlgebra) -> Result<EndpointMatch> {
    if same_tables(e, target) {
        let id = LinMap::identity(e.dim(), e.field().one());
        return Ok(EndpointMatch { tables_equal: true, iso: Some(id) });
    }
    let iso = iso_search_small(e, target)?;
    if let Some(f) = &iso {
        if !comodule_isomorphism_check(f, e, target).passed() {
            return Err(Error::Internal("iso search returned a non-isomorphism".into()));
        }
    }
    Ok(EndpointMatch { tables_equal: false, iso })
}

/// Compares `[0]_*A` with `a0` and `[1]_*A` with `a1`: equal tables first,
/// then isomorphism search.
pub fn verify_homotopy_witness(
    pca: &PolyComoduleAlgebra,
    a0: &ComoduleAlgebra,
    a1: &ComoduleAlgebra,
) -> Result<WitnessVerdict> {
    let e0 = match_endpoint(&eval_endpoint(pca, 0), a0)?;
    let e1 = match_endpoint(&eval_endpoint(pca, 1), a1)?;
    Ok(WitnessVerdict { endpoints: [e0, e1] })
}

/// `A_{r, s·t}` over `k[t]`: `a^N = r`, `b^N = s t`, `b a = q⁻¹ a b`, with the
/// coaction of the Taft Galois objects.
pub fn taft_homotopy_witness(n: usize, q: &Scalar, field: &Field, r: &Scalar, s: &Scalar) -> Result<PolyComoduleAlgebra> {
    if r.is_zero() {
        return Err(Error::BadParams("r must be a unit".into()));
    }
    let h = Arc::new(taft_hopf(n, q, field)?);
    let rp = UniPoly::constant(r.clone());
    let st = UniPoly::monomial(s.clone(), 1);
    let (algebra, coaction) = taft_galois_tables(n, q, &rp, &st, &h)?;
    ComoduleAlgebra::over_ground_field(format!("A_{{{r},{s}t}}"), algebra, h, coaction)?
        .with_presentation(taft_presentation(n))
}
