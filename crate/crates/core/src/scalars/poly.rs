//! Dense univariate polynomials over a field.

use std::fmt;

use super::field::{Field, Scalar};
use super::sparse::Coeff;
use crate::error::{Error, Result};

/// A polynomial `c0 + c1 t + ...` with coefficients in a field.
///
/// The coefficient vector never has trailing zeros; the zero polynomial
/// has an empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: &Field, coeffs: Vec<Scalar>) -> Self {
        let mut p = Self { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Self::new(&field, vec![c])
    }

    /// The monomial `c t^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(&field, coeffs)
    }

    /// The indeterminate `t`.
    pub fn t(field: &Field) -> Self {
        Self::monomial(field.one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Nonzero constant polynomials are exactly the units of `k[t]`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluation at the endpoints `t = 0` and `t = 1`.
    pub fn eval_endpoint(&self, i: u8) -> Scalar {
        match i {
            0 => self.coeff(0),
            _ => self.coeffs.iter().fold(self.field.zero(), |a, c| a.add(c)),
        }
    }

    /// Substitutes `t := other` (composition).
    pub fn compose(&self, other: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect();
        UniPoly::new(&self.field, coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { field: self.field.clone(), coeffs: self.coeffs.iter().map(Scalar::neg).collect() }
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return UniPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::constant(self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; errors on division by the zero polynomial.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::ZeroDivision)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(&self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dj));
            }
            q[k] = c;
        }
        Ok((UniPoly::new(&self.field, q), UniPoly::new(&self.field, r)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.coeffs.is_empty() {
            return Err(Error::Internal(format!("inexact polynomial division {self} / {d}")));
        }
        Ok(q)
    }

    /// Parses `3+2t^2`, `-t`, `1/2*t`, `(1+z)t` style text over `field`,
    /// with variable letter `var`.
    pub fn parse(field: &Field, text: &str, var: char) -> Result<UniPoly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut acc = UniPoly::zero(field);
        for (neg, term) in split_top_level(&s)? {
            let err = || Error::Parse(format!("bad polynomial term `{term}`"));
            let (coef_text, power) = match term.rfind(var) {
                Some(pos) if !term[pos..].contains(')') => {
                    let rest = &term[pos + var.len_utf8()..];
                    let k: usize = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse().map_err(|_| err())?
                    };
                    (term[..pos].trim_end_matches('*').to_string(), k)
                }
                _ => (term.clone(), 0),
            };
            let coef = if coef_text.is_empty() {
                field.one()
            } else if let Some(inner) = coef_text.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
                field.parse(inner)?
            } else {
                field.parse(&coef_text)?
            };
            let mut m = UniPoly::monomial(coef, power);
            if neg {
                m = m.neg();
            }
            acc = acc.add(&m);
        }
        Ok(acc)
    }

    /// Text form with variable letter `var`.
    pub fn to_text(&self, var: char) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut cs = c.to_string();
            let composite = matches!(c, Scalar::Cyc(..)) && (cs.contains('+') || cs[1..].contains('-'));
            if composite {
                cs = format!("({cs})");
            }
            let negative = !composite && cs.starts_with('-');
            if !out.is_empty() {
                out.push(if negative { '-' } else { '+' });
            } else if negative {
                out.push('-');
            }
            let body = if negative { cs[1..].to_string() } else { cs };
            match k {
                0 => out.push_str(&body),
                _ => {
                    if body != "1" {
                        out.push_str(&body);
                    }
                    out.push(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

/// Splits at top-level `+`/`-` signs, ignoring signs inside brackets or
/// directly after `^`, `/`, `*`.
fn split_top_level(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let is_sign = matches!(ch, '+' | '-') && depth == 0;
        if is_sign && prev.is_none() {
            neg = ch == '-';
        } else if is_sign && !matches!(prev, Some('^') | Some('/') | Some('*')) {
            if cur.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() || depth != 0 {
        return Err(Error::Parse(format!("malformed polynomial `{s}`")));
    }
    out.push((neg, cur));
    Ok(out)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('t'))
    }
}

impl Coeff for UniPoly {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        UniPoly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        UniPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn lift(s: &Scalar) -> Self {
        UniPoly::constant(s.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn endpoints() {
        let f = f7();
        let p = UniPoly::parse(&f, "1+2t+t^2", 't').unwrap();
        assert_eq!(p.eval_endpoint(0), f.from_i64(1));
        // sum of coefficients
        assert_eq!(p.eval_endpoint(1), f.from_i64(4));
        assert_eq!(UniPoly::zero(&f).eval_endpoint(1), f.zero());
    }

    #[test]
    fn text_round_trip() {
        let f = f7();
        let p = UniPoly::parse(&f, "3+2t^2", 't').unwrap();
        assert_eq!(p.to_text('t'), "3+2t^2");
        let q = UniPoly::parse(&Field::rational(), "-1/2t+t^3", 't').unwrap();
        assert_eq!(q.to_text('t'), "-1/2t+t^3");
        assert_eq!(UniPoly::parse(&Field::rational(), &q.to_text('t'), 't').unwrap(), q);
    }

    #[test]
    fn division() {
        let f = Field::rational();
        let a = UniPoly::parse(&f, "t^2-1", 't').unwrap();
        let b = UniPoly::parse(&f, "t-1", 't').unwrap();
        assert_eq!(a.exact_div(&b).unwrap(), UniPoly::parse(&f, "t+1", 't').unwrap());
        assert!(b.exact_div(&a).is_err());
    }

    #[test]
    fn reflection_swaps_endpoints() {
        let f = f7();
        let p = UniPoly::parse(&f, "5t+3t^3", 't').unwrap();
        let refl = UniPoly::parse(&f, "1-t", 't').unwrap();
        let r = p.compose(&refl);
        assert_eq!(r.eval_endpoint(0), p.eval_endpoint(1));
        assert_eq!(r.eval_endpoint(1), p.eval_endpoint(0));
    }
}
