//! Coefficient fields: the rationals, prime fields and cyclotomic fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
    Cyclotomic { n: u64 },
}

impl FieldSpec {
    /// Short textual name: `q`, `p7`, `cyc4`.
    pub fn short_name(&self) -> String {
        match self {
            FieldSpec::Rational => "q".into(),
            FieldSpec::Prime { p } => format!("p{p}"),
            FieldSpec::Cyclotomic { n } => format!("cyc{n}"),
        }
    }

    /// Parses the short names produced by [`FieldSpec::short_name`].
    pub fn parse_short(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = s.strip_prefix("cyc") {
            let n = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad cyclotomic field `{s}`")))?;
            return Ok(FieldSpec::Cyclotomic { n });
        }
        if let Some(rest) = s.strip_prefix('p') {
            let p = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime field `{s}`")))?;
            return Ok(FieldSpec::Prime { p });
        }
        Err(Error::Parse(format!("unknown field `{s}`")))
    }
}

/// Data shared by all elements of `Q(zeta_n)`: the monic polynomial `Phi_n`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicCtx {
    n: u64,
    /// Coefficients of `Phi_n`, ascending, monic, length `phi(n) + 1`.
    modulus: Vec<BigRational>,
}

impl CyclotomicCtx {
    fn new(n: u64) -> Self {
        Self { n, modulus: cyclotomic_polynomial(n).into_iter().map(BigRational::from_integer).collect() }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        while c.len() > d {
            let lead = c.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for (i, m) in self.modulus[..d].iter().enumerate() {
                c[shift + i] -= &lead * m;
            }
        }
        c.resize(d, BigRational::zero());
        c
    }
}

/// Integer coefficients of the n-th cyclotomic polynomial, ascending.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_int_poly_div(&num, &div);
        }
    }
    num
}

fn exact_int_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let qlen = rem.len() - dd;
    let mut quo = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = &rem[i + dd] / &lead;
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quo
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum FieldKind {
    Rational,
    Prime(u64),
    Cyclotomic(Arc<CyclotomicCtx>),
}

/// A field context. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    kind: FieldKind,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        let kind = match *spec {
            FieldSpec::Rational => FieldKind::Rational,
            FieldSpec::Prime { p } => {
                if !is_prime(p) || p > u32::MAX as u64 {
                    return Err(Error::NonPrimeModulus(p));
                }
                FieldKind::Prime(p)
            }
            FieldSpec::Cyclotomic { n } => {
                if n == 0 {
                    return Err(Error::BadParams("cyclotomic order must be positive".into()));
                }
                FieldKind::Cyclotomic(Arc::new(CyclotomicCtx::new(n)))
            }
        };
        Ok(Self { kind })
    }

    pub fn rational() -> Self {
        Self { kind: FieldKind::Rational }
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(&FieldSpec::Prime { p })
    }

    pub fn cyclotomic(n: u64) -> Result<Self> {
        Self::new(&FieldSpec::Cyclotomic { n })
    }

    pub fn spec(&self) -> FieldSpec {
        match &self.kind {
            FieldKind::Rational => FieldSpec::Rational,
            FieldKind::Prime(p) => FieldSpec::Prime { p: *p },
            FieldKind::Cyclotomic(c) => FieldSpec::Cyclotomic { n: c.n },
        }
    }

    /// Characteristic: `p` for prime fields, 0 otherwise.
    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::Prime(p) => p,
            _ => 0,
        }
    }

    /// Number of elements for finite fields.
    pub fn size(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Prime(p) => Some(p),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match &self.kind {
            FieldKind::Rational => Scalar::Rat(BigRational::from_integer(n.into())),
            FieldKind::Prime(p) => Scalar::Mod { v: n.rem_euclid(*p as i64) as u64, p: *p },
            FieldKind::Cyclotomic(ctx) => {
                let mut c = vec![BigRational::zero(); ctx.degree()];
                c[0] = BigRational::from_integer(n.into());
                Scalar::Cyc(ctx.clone(), c)
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// The distinguished generator `z = zeta_n` of a cyclotomic field.
    pub fn zeta(&self) -> Option<Scalar> {
        match &self.kind {
            FieldKind::Cyclotomic(ctx) => {
                let mut c = vec![BigRational::zero(); ctx.degree()];
                if ctx.degree() == 1 {
                    // Q(zeta_1) = Q(zeta_2) = Q; zeta is 1 resp. -1.
                    c[0] = -ctx.modulus[0].clone();
                } else {
                    c[1] = BigRational::one();
                }
                Some(Scalar::Cyc(ctx.clone(), c))
            }
            _ => None,
        }
    }

    /// All elements of a finite field in canonical order `0, 1, ..., p-1`.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self.kind {
            FieldKind::Prime(p) => Some((0..p).map(|v| Scalar::Mod { v, p }).collect()),
            _ => None,
        }
    }

    /// Nonzero elements (the unit group) of a finite field, ascending.
    pub fn units(&self) -> Option<Vec<Scalar>> {
        self.elements().map(|e| e.into_iter().skip(1).collect())
    }

    /// A primitive `n`-th root of unity, chosen deterministically: the smallest
    /// residue for prime fields and the lowest power of `z` for cyclotomic fields.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Scalar> {
        if n == 0 {
            return Err(Error::NoSuchRoot { order: n, field: self.spec().short_name() });
        }
        let none = || Error::NoSuchRoot { order: n, field: self.spec().short_name() };
        match &self.kind {
            FieldKind::Prime(p) => {
                if (p - 1) % n != 0 {
                    return Err(none());
                }
                for v in 1..*p {
                    let x = Scalar::Mod { v, p: *p };
                    if x.multiplicative_order() == Some(n) {
                        return Ok(x);
                    }
                }
                Err(none())
            }
            FieldKind::Rational => match n {
                1 => Ok(self.one()),
                2 => Ok(self.from_i64(-1)),
                _ => Err(none()),
            },
            FieldKind::Cyclotomic(ctx) => {
                let m = ctx.n;
                if n == 1 {
                    return Ok(self.one());
                }
                if n == 2 {
                    return Ok(self.from_i64(-1));
                }
                if m % n != 0 {
                    return Err(none());
                }
                Ok(self.zeta().unwrap().pow((m / n) as u32))
            }
        }
    }

    /// Parses the textual scalar forms: `a/b`, `n`, and `c0+c1*z+c2*z^2`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        match &self.kind {
            FieldKind::Rational => Ok(Scalar::Rat(parse_rational(&s)?)),
            FieldKind::Prime(_) => {
                let r = parse_rational(&s)?;
                let n = self.from_bigint(r.numer());
                let d = self.from_bigint(r.denom());
                n.div(&d)
            }
            FieldKind::Cyclotomic(_) => {
                let z = self.zeta().unwrap();
                let mut acc = self.zero();
                for (sign, term) in split_terms(&s)? {
                    let (coef, power) = parse_monomial(&term, 'z')?;
                    let mut v = self.from_rational(&coef).mul(&z.pow(power));
                    if sign {
                        v = v.neg();
                    }
                    acc = acc.add(&v);
                }
                Ok(acc)
            }
        }
    }

    fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &self.kind {
            FieldKind::Prime(p) => {
                let pb = BigInt::from(*p);
                let r = ((n % &pb) + &pb) % &pb;
                let v: u64 = r.try_into().unwrap();
                Scalar::Mod { v, p: *p }
            }
            _ => self.from_rational(&BigRational::from_integer(n.clone())),
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Scalar {
        match &self.kind {
            FieldKind::Rational => Scalar::Rat(r.clone()),
            FieldKind::Prime(_) => {
                let n = self.from_bigint(r.numer());
                let d = self.from_bigint(r.denom());
                n.div(&d).expect("denominator divisible by the characteristic")
            }
            FieldKind::Cyclotomic(ctx) => {
                let mut c = vec![BigRational::zero(); ctx.degree()];
                c[0] = r.clone();
                Scalar::Cyc(ctx.clone(), c)
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| err())?;
            let d: BigInt = d.parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(Error::ZeroDivision);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

/// Splits `a+b-c` into signed terms; `true` marks a negated term.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        // a sign directly after `^` or `/` belongs to the number
        let binary = matches!(ch, '+' | '-') && !matches!(prev, None | Some('^') | Some('/') | Some('*'));
        if binary {
            if cur.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if prev.is_none() && ch == '-' {
            neg = true;
        } else if prev.is_none() && ch == '+' {
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((neg, cur));
    Ok(out)
}

/// Parses `c`, `c*v`, `c*v^k`, `cv^k`, `v`, `v^k` for a variable letter `v`.
pub(crate) fn parse_monomial(term: &str, var: char) -> Result<(BigRational, u32)> {
    let err = || Error::Parse(format!("bad term `{term}`"));
    match term.find(var) {
        None => Ok((parse_rational(term)?, 0)),
        Some(pos) => {
            let coef_part = term[..pos].trim_end_matches('*');
            let coef = if coef_part.is_empty() { BigRational::one() } else { parse_rational(coef_part)? };
            let rest = &term[pos + var.len_utf8()..];
            let power = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(err)?.parse().map_err(|_| err())?
            };
            Ok((coef, power))
        }
    }
}

/// An exact field element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
    Cyc(Arc<CyclotomicCtx>, Vec<BigRational>),
}

impl std::hash::Hash for CyclotomicCtx {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
    }
}

fn mismatch() -> ! {
    panic!("arithmetic between scalars of different fields")
}

impl Scalar {
    pub fn field(&self) -> Field {
        let kind = match self {
            Scalar::Rat(_) => FieldKind::Rational,
            Scalar::Mod { p, .. } => FieldKind::Prime(*p),
            Scalar::Cyc(ctx, _) => FieldKind::Cyclotomic(ctx.clone()),
        };
        Field { kind }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
            Scalar::Cyc(_, c) => c.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
            Scalar::Cyc(_, c) => c[0].is_one() && c[1..].iter().all(Zero::is_zero),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                Scalar::Mod { v: (a + b) % p, p: *p }
            }
            (Scalar::Cyc(ctx, a), Scalar::Cyc(c2, b)) if ctx.n == c2.n => {
                Scalar::Cyc(ctx.clone(), a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => mismatch(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { v, p } => Scalar::Mod { v: (p - v) % p, p: *p },
            Scalar::Cyc(ctx, a) => Scalar::Cyc(ctx.clone(), a.iter().map(|x| -x).collect()),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                Scalar::Mod { v: (a * b) % p, p: *p }
            }
            (Scalar::Cyc(ctx, a), Scalar::Cyc(c2, b)) if ctx.n == c2.n => {
                let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyc(ctx.clone(), ctx.reduce(prod))
            }
            _ => mismatch(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod { v, p } => Scalar::Mod { v: mod_pow(*v, p - 2, *p), p: *p },
            Scalar::Cyc(ctx, a) => Scalar::Cyc(ctx.clone(), cyc_inverse(ctx, a)),
        })
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; errors for negative powers of zero.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    /// Order in the unit group, searched up to a bound of 10^6.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = self.field().one();
        let mut x = self.clone();
        for k in 1..=1_000_000u64 {
            if x == one {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// Residue as an integer for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { v, .. } => Some(*v),
            _ => None,
        }
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

type QPoly = Vec<BigRational>;

fn qtrim(mut a: QPoly) -> QPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn qdivrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let b = qtrim(b.clone());
    let mut r = qtrim(a.clone());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r = qtrim(r);
    }
    (q, r)
}

fn qmul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(out)
}

fn qsub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qtrim(out)
}

/// Inverse modulo `Phi_n` by the extended Euclidean algorithm over `Q[x]`.
fn cyc_inverse(ctx: &CyclotomicCtx, a: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (ctx.modulus.clone(), qtrim(a.to_vec()));
    let (mut t0, mut t1): (QPoly, QPoly) = (vec![], vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = qdivrem(&r0, &r1);
        let t2 = qsub(&t0, &qmul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is a nonzero constant since Phi_n is irreducible
    let c = r0[0].clone();
    let inv: QPoly = t0.iter().map(|x| x / &c).collect();
    ctx.reduce(inv)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { v, .. } => write!(f, "{v}"),
            Scalar::Cyc(_, c) => {
                let mut first = true;
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let neg = x.is_negative();
                    let abs = x.abs();
                    if neg {
                        write!(f, "-")?;
                    } else if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match k {
                        0 => write!(f, "{abs}")?,
                        _ => {
                            if !abs.is_one() {
                                write!(f, "{abs}*")?;
                            }
                            if k == 1 {
                                write!(f, "z")?;
                            } else {
                                write!(f, "z^{k}")?;
                            }
                        }
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        assert!(f.from_i64(3).mul(&f.from_i64(5)).is_one());
        assert_eq!(f.from_i64(3).inv().unwrap(), f.from_i64(5));
        assert!(matches!(Field::prime(9), Err(Error::NonPrimeModulus(9))));
        assert!(matches!(f.zero().inv(), Err(Error::ZeroDivision)));
    }

    #[test]
    fn gaussian_rationals() {
        let f = Field::cyclotomic(4).unwrap();
        let i = f.zeta().unwrap();
        assert_eq!(i.mul(&i), f.from_i64(-1));
        let x = f.parse("1/2+3*z").unwrap();
        assert!(x.mul(&x.inv().unwrap()).is_one());
        assert_eq!(x.to_string(), "1/2+3*z");
        assert_eq!(f.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn rational_fractions() {
        let f = Field::rational();
        let a = f.parse("2/3").unwrap();
        let b = f.parse("1/6").unwrap();
        assert_eq!(a.add(&b), f.parse("5/6").unwrap());
    }

    #[test]
    fn cyclotomic_polynomials() {
        let phi12: Vec<i64> = cyclotomic_polynomial(12).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(phi12, vec![1, 0, -1, 0, 1]);
        let phi9: Vec<i64> = cyclotomic_polynomial(9).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(phi9, vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        let f7 = Field::prime(7).unwrap();
        // brute force: 2^3 = 8 = 1 mod 7 and 2 != 1
        assert_eq!(f7.primitive_root_of_unity(3).unwrap(), f7.from_i64(2));
        assert_eq!(f7.primitive_root_of_unity(6).unwrap(), f7.from_i64(3));
        assert!(matches!(f7.primitive_root_of_unity(4), Err(Error::NoSuchRoot { .. })));
        let q = Field::rational();
        assert_eq!(q.primitive_root_of_unity(2).unwrap(), q.from_i64(-1));
        let c12 = Field::cyclotomic(12).unwrap();
        let w = c12.primitive_root_of_unity(4).unwrap();
        assert_eq!(w.multiplicative_order(), Some(4));
        assert!(c12.primitive_root_of_unity(5).is_err());
    }

    #[test]
    fn parse_signed_terms() {
        let f = Field::cyclotomic(3).unwrap();
        let z = f.zeta().unwrap();
        assert_eq!(f.parse("-1-z").unwrap(), z.mul(&z));
        let p = Field::prime(5).unwrap();
        assert_eq!(p.parse("1/2").unwrap(), p.from_i64(3));
        assert_eq!(p.parse("-1").unwrap(), p.from_i64(4));
    }
}
