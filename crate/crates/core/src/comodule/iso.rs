//! Isomorphism search between small comodule algebras over a finite field.

use std::sync::Arc;

use super::algebra::{comodule_isomorphism_check, ComoduleAlgebra};
use crate::error::{Error, Result};
use crate::hopf::LinMap;
use crate::scalars::{Matrix, SVec, Scalar};

/// Upper bound on enumerated candidate maps.
pub const SEARCH_LIMIT: u64 = 1_000_000;

/// Affine space `v0 + span(dirs)` of admissible images of one generator.
struct GeneratorSpace {
    v0: SVec<Scalar>,
    dirs: Vec<SVec<Scalar>>,
}

/// Products of generator words in `src`, as columns. Errors if they do not
/// form a basis.
fn word_basis(src: &ComoduleAlgebra) -> Result<Matrix> {
    let pres = src.presentation().ok_or_else(|| Error::BadParams(format!("{} has no presentation", src.name())))?;
    let alg = src.algebra();
    let cols: Vec<SVec<Scalar>> = pres
        .words
        .iter()
        .map(|w| w.iter().fold(alg.unit().clone(), |acc, &g| alg.mul(&acc, &alg.basis(pres.generators[g]))))
        .collect();
    let m = Matrix::from_columns(src.field(), src.dim(), &cols);
    if m.rank() != src.dim() {
        return Err(Error::BadParams(format!("words of {} do not span", src.name())));
    }
    Ok(m)
}

/// Extends generator images to a linear map via the word basis.
fn extend(src: &ComoduleAlgebra, dst: &ComoduleAlgebra, winv: &Matrix, images: &[SVec<Scalar>]) -> LinMap {
    let pres = src.presentation().unwrap();
    let alg = dst.algebra();
    let word_images: Vec<SVec<Scalar>> = pres
        .words
        .iter()
        .map(|w| w.iter().fold(alg.unit().clone(), |acc, &g| alg.mul(&acc, &images[g])))
        .collect();
    // e_i = Σ_j winv[j][i] W_j
    let d = src.dim();
    let out = (0..d)
        .map(|i| {
            let mut v = SVec::new();
            for (j, wj) in word_images.iter().enumerate() {
                let c = &winv[(j, i)];
                if !c.is_zero() {
                    v.add_scaled(wj, c);
                }
            }
            v
        })
        .collect();
    LinMap { src: d, tgt: dst.dim(), images: out }
}

/// Admissible images of generator `gi` given the images of earlier ones.
fn generator_space(
    src: &ComoduleAlgebra,
    dst: &ComoduleAlgebra,
    gi: usize,
    known: &dyn Fn(usize) -> Option<SVec<Scalar>>,
) -> Result<Option<GeneratorSpace>> {
    let pres = src.presentation().unwrap();
    let x = pres.generators[gi];
    let dh = src.hopf().dim();
    let field = src.field();
    let d2 = dst.dim();
    // δ'(v) - Σ_self c v⊗h = Σ_other c f(e_j)⊗h
    let mut cols: Vec<SVec<Scalar>> = (0..d2).map(|k| dst.coaction_basis(k).clone()).collect();
    let mut rhs = SVec::new();
    for (jh, c) in src.coaction_basis(x).iter() {
        let (j, h) = (jh / dh, jh % dh);
        if j == x {
            for (k, col) in cols.iter_mut().enumerate() {
                col.add_term(k * dh + h, c.neg());
            }
        } else {
            let fj = known(j).ok_or_else(|| {
                Error::BadParams(format!("coaction of generator {} involves undetermined {}", src.labels()[x], src.labels()[j]))
            })?;
            for (k, u) in fj.iter() {
                rhs.add_term(k * dh + h, c.mul(u));
            }
        }
    }
    let nrows = d2 * dh;
    let m = Matrix::from_columns(field, nrows, &cols);
    let b = Matrix::from_columns(field, nrows, &[rhs]);
    let Some(sol) = m.solve(&b)? else {
        return Ok(None);
    };
    let v0 = SVec::from_dense(&sol.column(0));
    let dirs = m.kernel_basis().iter().map(|v| SVec::from_dense(v)).collect();
    Ok(Some(GeneratorSpace { v0, dirs }))
}

/// Searches for a comodule algebra isomorphism `src → dst` determined by
/// generator images. Generators are processed in order; the coaction of each
/// may involve only itself and basis vectors whose words use earlier
/// generators.
pub fn iso_search_small(src: &ComoduleAlgebra, dst: &ComoduleAlgebra) -> Result<Option<LinMap>> {
    if src.dim() != dst.dim() || !same_hopf(src, dst) {
        return Ok(None);
    }
    let elems = src
        .field()
        .elements()
        .ok_or_else(|| Error::SearchSpaceTooLarge("isomorphism search needs a finite field".into()))?;
    let p = elems.len() as u64;
    let w = word_basis(src)?;
    let winv = w.inverse()?;
    let pres = src.presentation().unwrap().clone();
    let ng = pres.generators.len();

    // Determine each generator's affine space; earlier generators enter only
    // through their fixed particular solution when later spaces depend on
    // them, so spaces are recomputed per choice below.
    let words_using = |j: usize, upto: usize| pres.words[j].iter().all(|&g| g < upto);
    let space_for = |gi: usize, chosen: &[SVec<Scalar>]| -> Result<Option<GeneratorSpace>> {
        let known = |j: usize| -> Option<SVec<Scalar>> {
            if !words_using(j, gi) {
                return None;
            }
            let alg = dst.algebra();
            // f(e_j) where e_j is spanned by a word in earlier generators
            let wj = pres.words[j].iter().fold(alg.unit().clone(), |acc, &g| alg.mul(&acc, &chosen[g]));
            let srcw = pres.words[j]
                .iter()
                .fold(src.algebra().unit().clone(), |acc, &g| src.algebra().mul(&acc, &src.algebra().basis(pres.generators[g])));
            // srcw = c · e_j
            let (k, c) = srcw.first()?;
            if k != j || srcw.len() != 1 {
                return None;
            }
            Some(wj.scaled(&c.inv().ok()?))
        };
        generator_space(src, dst, gi, &known)
    };

    // size estimate from the spaces with all earlier generators at v0
    let mut probe: Vec<SVec<Scalar>> = Vec::new();
    let mut total: f64 = 1.0;
    for gi in 0..ng {
        match space_for(gi, &probe)? {
            None => return Ok(None),
            Some(s) => {
                total *= (p as f64).powi(s.dirs.len() as i32);
                probe.push(s.v0);
            }
        }
    }
    if total > SEARCH_LIMIT as f64 {
        return Err(Error::SearchSpaceTooLarge(format!("{total} candidate maps")));
    }

    // depth-first enumeration in lexicographic order
    fn points(space: &GeneratorSpace, elems: &[Scalar]) -> Vec<SVec<Scalar>> {
        let p = elems.len() as u64;
        let m = space.dirs.len();
        (0..p.pow(m as u32))
            .map(|mut n| {
                let mut v = space.v0.clone();
                for d in &space.dirs {
                    v.add_scaled(d, &elems[(n % p) as usize]);
                    n /= p;
                }
                v
            })
            .collect()
    }

    fn dfs(
        gi: usize,
        chosen: &mut Vec<SVec<Scalar>>,
        ng: usize,
        elems: &[Scalar],
        space_for: &dyn Fn(usize, &[SVec<Scalar>]) -> Result<Option<GeneratorSpace>>,
        finish: &dyn Fn(&[SVec<Scalar>]) -> Option<LinMap>,
    ) -> Result<Option<LinMap>> {
        if gi == ng {
            return Ok(finish(chosen));
        }
        let Some(space) = space_for(gi, chosen)? else {
            return Ok(None);
        };
        for v in points(&space, elems) {
            chosen.push(v);
            if let Some(f) = dfs(gi + 1, chosen, ng, elems, space_for, finish)? {
                return Ok(Some(f));
            }
            chosen.pop();
        }
        Ok(None)
    }

    let finish = |images: &[SVec<Scalar>]| -> Option<LinMap> {
        let f = extend(src, dst, &winv, images);
        comodule_isomorphism_check(&f, src, dst).passed().then_some(f)
    };
    let mut chosen = Vec::new();
    dfs(0, &mut chosen, ng, &elems, &space_for, &finish)
}

fn same_hopf(a: &ComoduleAlgebra, b: &ComoduleAlgebra) -> bool {
    Arc::ptr_eq(a.hopf(), b.hopf()) || a.hopf().as_ref() == b.hopf().as_ref()
}
