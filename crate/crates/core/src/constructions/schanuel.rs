//! The char-2 Schanuel data over `R = k[x², x³] ⊂ k[x]`: the idempotent
//! matrix `M_t` over `k[x][t]`, its specializations, `P_a² = R` for `a = x`,
//! and the non-seminormality witness.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::{Field, Matrix, Scalar, UniPoly};

/// Polynomial in `x` and `t`, keyed by `(deg_x, deg_t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2 {
    field: Field,
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl Poly2 {
    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(field: &Field, c: i64, dx: usize, dt: usize) -> Self {
        let mut p = Self::zero(field);
        p.add_term((dx, dt), field.from_i64(c));
        p
    }

    pub fn one(field: &Field) -> Self {
        Self::monomial(field, 1, 0, 0)
    }

    fn add_term(&mut self, k: (usize, usize), c: Scalar) {
        let v = self.terms.get(&k).map_or(c.clone(), |x| x.add(&c));
        if v.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.neg());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(&self.field);
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &o.terms {
                r.add_term((a + d, b + e), c.mul(f));
            }
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `t := i`, giving a polynomial in `x`.
    pub fn at_t(&self, i: i64) -> UniPoly {
        let ti = self.field.from_i64(i);
        let mut coeffs = vec![self.field.zero(); self.terms.keys().map(|k| k.0 + 1).max().unwrap_or(0)];
        for ((dx, dt), c) in &self.terms {
            coeffs[*dx] = coeffs[*dx].add(&c.mul(&ti.pow(*dt as u32)));
        }
        UniPoly::new(&self.field, coeffs)
    }

    /// Whether the polynomial lies in `R[t]`, i.e. has no `x¹` terms.
    pub fn in_r_t(&self) -> bool {
        self.terms.keys().all(|k| k.0 != 1)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((dx, dt), c)| {
                let mono = |v: &str, e: usize| match e {
                    0 => String::new(),
                    1 => v.to_string(),
                    _ => format!("{v}^{e}"),
                };
                let m = format!("{}{}", mono("x", *dx), mono("t", *dt));
                match (m.is_empty(), c.is_one()) {
                    (true, _) => c.to_string(),
                    (false, true) => m,
                    (false, false) => format!("{c}{m}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

pub type Mat2 = [[Poly2; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `M_t` with `a = x`: entries `1 − a⁴t⁴`, `a²t² + a³t³`,
/// `(1 + a²t²)(a²t² − a³t³)`, `a⁴t⁴`.
pub fn schanuel_matrix(field: &Field) -> Mat2 {
    let m = |c, dx, dt| Poly2::monomial(field, c, dx, dt);
    let one = Poly2::one(field);
    [
        [one.sub(&m(1, 4, 4)), m(1, 2, 2).add(&m(1, 3, 3))],
        [one.add(&m(1, 2, 2)).mul(&m(1, 2, 2).sub(&m(1, 3, 3))), m(1, 4, 4)],
    ]
}

/// Polynomials in `x` as coefficient vectors up to degree `deg`.
fn dense(p: &UniPoly, deg: usize, field: &Field) -> Vec<Scalar> {
    (0..=deg).map(|k| if k < p.coeffs().len() { p.coeff(k) } else { field.zero() }).collect()
}

/// Coefficients `c_i ∈ R` of degree ≤ `bound` with `Σ c_i p_i = 1`, found by
/// linear elimination over `k`.
pub fn unit_certificate(gens: &[UniPoly], bound: usize, field: &Field) -> Result<Option<Vec<UniPoly>>> {
    // R has the monomial basis x^k, k ≠ 1
    let r_basis: Vec<usize> = (0..=bound).filter(|&k| k != 1).collect();
    let top = gens.iter().filter_map(UniPoly::degree).max().unwrap_or(0) + bound;
    let mut cols = Vec::new();
    for g in gens {
        for &k in &r_basis {
            let prod = g.mul(&UniPoly::monomial(field.one(), k));
            cols.push(dense(&prod, top, field));
        }
    }
    let rows = top + 1;
    let m = Matrix::from_rows(field, (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())?;
    let mut rhs = vec![vec![field.zero()]; rows];
    rhs[0][0] = field.one();
    let Some(sol) = m.solve(&Matrix::from_rows(field, rhs)?)? else {
        return Ok(None);
    };
    let nb = r_basis.len();
    Ok(Some(
        (0..gens.len())
            .map(|i| {
                let mut coeffs = vec![field.zero(); bound + 1];
                for (q, &k) in r_basis.iter().enumerate() {
                    coeffs[k] = sol[(i * nb + q, 0)].clone();
                }
                UniPoly::new(field, coeffs)
            })
            .collect(),
    ))
}

fn show_matrix(m: &[[UniPoly; 2]; 2]) -> String {
    format!(
        "[[{}, {}], [{}, {}]]",
        m[0][0].to_text('x'),
        m[0][1].to_text('x'),
        m[1][0].to_text('x'),
        m[1][1].to_text('x')
    )
}

pub fn schanuel_suite(field: &Field) -> Result<Report> {
    if field.characteristic() != 2 {
        return Err(Error::CharMismatch(format!("Schanuel suite needs characteristic 2, got {}", field.characteristic())));
    }
    let mut rep = Report::new();
    let mt = schanuel_matrix(field);
    let sq = mat_mul(&mt, &mt);
    let idem = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).find(|&(i, j)| sq[i][j] != mt[i][j]);
    rep.record(
        "M_t² = M_t",
        idem.map(|(i, j)| format!("entry ({i},{j}): {} ≠ {}", sq[i][j], mt[i][j])),
    );
    let in_rt = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).find(|&(i, j)| !mt[i][j].in_r_t());
    rep.record("entries of M_t lie in R[t]", in_rt.map(|(i, j)| format!("entry ({i},{j}) = {}", mt[i][j])));
    let at = |i: i64| -> [[UniPoly; 2]; 2] {
        [[mt[0][0].at_t(i), mt[0][1].at_t(i)], [mt[1][0].at_t(i), mt[1][1].at_t(i)]]
    };
    let m0 = at(0);
    let p = |s: &str| UniPoly::parse(field, s, 'x').expect("literal");
    let diag = [[p("1"), p("0")], [p("0"), p("0")]];
    rep.record("M_0 = diag(1,0)", (m0 != diag).then(|| show_matrix(&m0)));
    let m1 = at(1);
    // 1 − a⁴, a² + a³, (1 + a²)(a² − a³), a⁴ at a = x
    let one = p("1");
    let expect = [
        [one.sub(&p("x^4")), p("x^2").add(&p("x^3"))],
        [one.add(&p("x^2")).mul(&p("x^2").sub(&p("x^3"))), p("x^4")],
    ];
    rep.record("M_1 specialization", (m1 != expect).then(|| show_matrix(&m1)));
    // P_a² = R: the products of 1 + x and x² lie in R and 1 is an R-combination
    let gens = [p("1+x").pow(2), p("1+x").mul(&p("x^2")), p("x^4")];
    let in_r = |q: &UniPoly| q.coeffs().len() < 2 || q.coeff(1).is_zero();
    let outside = gens.iter().find(|g| !in_r(g));
    rep.record("P_a² ⊂ R", outside.map(|g| format!("{} ∉ R", g.to_text('x'))));
    match unit_certificate(&gens, 4, field)? {
        Some(c) => {
            let sum = c.iter().zip(&gens).fold(UniPoly::zero(field), |acc, (ci, g)| acc.add(&ci.mul(g)));
            let w = c
                .iter()
                .zip(&gens)
                .map(|(ci, g)| format!("({})·({})", ci.to_text('x'), g.to_text('x')))
                .collect::<Vec<_>>()
                .join(" + ");
            if sum == one && c.iter().all(in_r) {
                rep.pass("1 ∈ R·P_a²", Some(format!("1 = {w}")));
            } else {
                rep.fail("1 ∈ R·P_a²", format!("certificate does not check: {w}"));
            }
        }
        None => rep.fail("1 ∈ R·P_a²", "no combination with coefficients of degree ≤ 4"),
    }
    let (x, x2, x3) = (p("x"), p("x^2"), p("x^3"));
    let witness = !in_r(&x) && in_r(&x2) && in_r(&x3);
    rep.record("non-seminormal: x ∉ R, x², x³ ∈ R", (!witness).then(|| "membership pattern differs".to_string()));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_over_f2() {
        let rep = schanuel_suite(&Field::prime(2).unwrap()).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn odd_characteristic_rejected() {
        assert!(schanuel_suite(&Field::prime(3).unwrap()).is_err());
    }

    // trace 1 and determinant 0, so idempotent in every characteristic
    #[test]
    fn idempotent_over_q() {
        let f = Field::rational();
        let m = schanuel_matrix(&f);
        assert_eq!(mat_mul(&m, &m), m);
        let det = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
        assert!(det.is_zero());
    }

    #[test]
    fn certificate_shape() {
        let f = Field::prime(2).unwrap();
        let p = |s: &str| UniPoly::parse(&f, s, 'x').unwrap();
        let gens = [p("1+x^2"), p("x^2+x^3"), p("x^4")];
        let c = unit_certificate(&gens, 4, &f).unwrap().unwrap();
        let sum = c.iter().zip(&gens).fold(UniPoly::zero(&f), |a, (ci, g)| a.add(&ci.mul(g)));
        assert_eq!(sum, p("1"));
        // x alone never reaches 1 with coefficients in R
        assert!(unit_certificate(&[p("x^2")], 4, &f).unwrap().is_none());
    }
}
