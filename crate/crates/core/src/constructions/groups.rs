//! Finite abelian groups, group algebras and twisted group algebras.

use std::sync::Arc;

use crate::comodule::{ComoduleAlgebra, Presentation};
use crate::error::{Error, Result};
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra, LinMap};
use crate::scalars::{Field, SVec, Scalar};
use crate::twisting::{BilinearForm, HopfTwoCocycle};

/// `ℤ/n₁ × … × ℤ/n_r`; elements are indexed in mixed radix with the first
/// factor varying slowest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariants: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(invariants: Vec<u64>) -> Result<Self> {
        if invariants.contains(&0) {
            return Err(Error::BadParams("invariant factors must be positive".into()));
        }
        Ok(Self { invariants })
    }

    pub fn cyclic(n: u64) -> Self {
        Self { invariants: vec![n] }
    }

    pub fn trivial() -> Self {
        Self { invariants: Vec::new() }
    }

    /// Parses `"3"`, `"2x2"` or `"1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let inv = text
            .split(['x', ','])
            .map(|s| s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("group {text:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(inv.into_iter().filter(|&n| n != 1).collect())
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn order(&self) -> usize {
        self.invariants.iter().product::<u64>() as usize
    }

    pub fn exponents(&self, mut i: usize) -> Vec<u64> {
        let mut e = vec![0; self.invariants.len()];
        for (k, &n) in self.invariants.iter().enumerate().rev() {
            e[k] = (i % n as usize) as u64;
            i /= n as usize;
        }
        e
    }

    pub fn index(&self, e: &[u64]) -> usize {
        self.invariants.iter().zip(e).fold(0, |acc, (&n, &x)| acc * n as usize + (x % n) as usize)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let (a, b) = (self.exponents(i), self.exponents(j));
        self.index(&a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn inv(&self, i: usize) -> usize {
        let a = self.exponents(i);
        self.index(&a.iter().zip(&self.invariants).map(|(x, n)| (n - x) % n).collect::<Vec<_>>())
    }

    /// Index of the `k`-th standard generator.
    pub fn generator(&self, k: usize) -> usize {
        let mut e = vec![0; self.invariants.len()];
        e[k] = 1;
        self.index(&e)
    }

    /// Order of the element `i`.
    pub fn element_order(&self, i: usize) -> u64 {
        let mut x = i;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, i);
            n += 1;
        }
        n
    }

    fn generator_name(&self, k: usize) -> String {
        if self.invariants.len() == 1 {
            "g".into()
        } else {
            format!("g{}", k + 1)
        }
    }

    pub fn label(&self, i: usize) -> String {
        let parts: Vec<String> = self
            .exponents(i)
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(k, &x)| if x == 1 { self.generator_name(k) } else { format!("{}^{x}", self.generator_name(k)) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order()).map(|i| self.label(i)).collect()
    }

    pub fn name(&self) -> String {
        if self.invariants.is_empty() {
            "1".into()
        } else {
            self.invariants.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("×")
        }
    }

    /// Generator word for every element, as positions into the generators.
    fn words(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|i| self.exponents(i).iter().enumerate().flat_map(|(k, &x)| std::iter::repeat_n(k, x as usize)).collect())
            .collect()
    }
}

pub fn group_algebra(g: &FiniteAbelianGroup, field: &Field) -> HopfAlgebra {
    let n = g.order();
    let one = field.one();
    let labels = g.labels();
    let mult = (0..n * n).map(|ij| SVec::basis(g.mul(ij / n, ij % n), one.clone())).collect();
    let algebra = Algebra::new(field, labels.clone(), mult, SVec::basis(0, one.clone())).expect("group table");
    let comult = (0..n).map(|i| SVec::basis(i * n + i, one.clone())).collect();
    let counit = SVec::from_terms((0..n).map(|i| (i, one.clone())));
    let coalgebra = Coalgebra::new(field, labels, comult, counit).expect("group coalgebra");
    let antipode = LinMap { src: n, tgt: n, images: (0..n).map(|i| SVec::basis(g.inv(i), one.clone())).collect() };
    let grouplikes = (0..n).map(|i| SVec::basis(i, one.clone())).collect();
    HopfAlgebra::new(format!("k[{}]", g.name()), algebra, coalgebra, antipode)
        .expect("group algebra shapes")
        .with_grouplikes(grouplikes)
}

/// A normalized 2-cocycle `G × G → U(k)` for the trivial action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTwoCocycle {
    group: FiniteAbelianGroup,
    /// `values[g * |G| + h] = σ(g, h)`.
    values: Vec<Scalar>,
}

impl GroupTwoCocycle {
    pub fn new(group: FiniteAbelianGroup, values: Vec<Scalar>) -> Result<Self> {
        let n = group.order();
        if values.len() != n * n {
            return Err(Error::ShapeMismatch(format!("cocycle table needs {} entries", n * n)));
        }
        let c = Self { group, values };
        c.check()?;
        Ok(c)
    }

    pub fn trivial(group: FiniteAbelianGroup, field: &Field) -> Self {
        let n = group.order();
        Self { group, values: vec![field.one(); n * n] }
    }

    fn check(&self) -> Result<()> {
        let g = &self.group;
        let n = g.order();
        if let Some(i) = (0..n).find(|&i| !self.value(0, i).is_one() || !self.value(i, 0).is_one()) {
            return Err(Error::BadParams(format!("cocycle not normalized at {}", g.label(i))));
        }
        if let Some(i) = (0..n * n).find(|&i| self.values[i].is_zero()) {
            return Err(Error::BadParams(format!("cocycle vanishes at {}", i)));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.value(a, b).mul(self.value(g.mul(a, b), c));
                    let rhs = self.value(b, c).mul(self.value(a, g.mul(b, c)));
                    if lhs != rhs {
                        return Err(Error::BadParams(format!(
                            "cocycle identity fails at ({}, {}, {})",
                            g.label(a),
                            g.label(b),
                            g.label(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn value(&self, g: usize, h: usize) -> &Scalar {
        &self.values[g * self.group.order() + h]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Self {
        Self { group: self.group.clone(), values: self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn inverse(&self) -> Self {
        Self { group: self.group.clone(), values: self.values.iter().map(|a| a.inv().expect("unit")).collect() }
    }

    /// The bilinear extension to a Hopf 2-cocycle on `k[G]`.
    pub fn to_hopf_cocycle(&self, hopf: &Arc<HopfAlgebra>) -> Result<HopfTwoCocycle> {
        let n = self.group.order();
        if hopf.dim() != n {
            return Err(Error::ShapeMismatch(format!("{} is not k[{}]", hopf.name(), self.group.name())));
        }
        let sigma = BilinearForm::from_fn(n, n, |g, h| self.value(g, h).clone());
        let inverse = BilinearForm::from_fn(n, n, |g, h| self.value(g, h).inv().expect("unit"));
        HopfTwoCocycle::with_inverse(hopf.clone(), sigma, inverse)
    }
}

/// `k_σ[G]` with `u_g u_h = σ(g,h) u_{gh}` and `δ(u_g) = u_g ⊗ g`.
pub fn twisted_group_algebra(sigma: &GroupTwoCocycle, field: &Field) -> Result<ComoduleAlgebra> {
    let g = sigma.group();
    let n = g.order();
    let hopf = Arc::new(group_algebra(g, field));
    if sigma.values.first().is_some_and(|v| v.field() != *field) {
        return Err(Error::FieldMismatch("cocycle values".into()));
    }
    let labels = g.labels().iter().map(|l| format!("u_{l}")).collect();
    let mult = (0..n * n).map(|ij| SVec::basis(g.mul(ij / n, ij % n), sigma.values[ij].clone())).collect();
    let algebra = Algebra::new(field, labels, mult, SVec::basis(0, field.one()))?;
    let coaction = (0..n).map(|i| SVec::basis(i * n + i, field.one())).collect();
    let presentation =
        Presentation { generators: (0..g.invariants().len()).map(|k| g.generator(k)).collect(), words: g.words() };
    ComoduleAlgebra::over_ground_field(format!("k_σ[{}]", g.name()), algebra, hopf, coaction)?
        .with_presentation(presentation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_roundtrip() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.index(&g.exponents(i)), i);
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
        assert_eq!(g.label(g.generator(1)), "g2");
        assert_eq!(g.element_order(g.generator(1)), 4);
    }

    #[test]
    fn group_algebras_pass_axioms() {
        for (inv, p) in [(vec![3], 7), (vec![2, 2], 5), (vec![], 7), (vec![8], 5)] {
            let g = FiniteAbelianGroup::new(inv).unwrap();
            let h = group_algebra(&g, &Field::prime(p).unwrap());
            assert_eq!(h.dim(), g.order());
            assert!(h.verify().passed(), "{}", h.verify());
        }
    }

    #[test]
    fn twisted_orientation() {
        let f = Field::prime(5).unwrap();
        let g = FiniteAbelianGroup::cyclic(2);
        let sigma = GroupTwoCocycle::new(g, vec![f.one(), f.one(), f.one(), f.from_i64(2)]).unwrap();
        let a = twisted_group_algebra(&sigma, &f).unwrap();
        let ug = a.algebra().basis(1);
        assert_eq!(a.mul(&ug, &ug), SVec::basis(0, f.from_i64(2)));
        assert!(a.verify().passed());
    }

    #[test]
    fn rejects_non_cocycle() {
        let f = Field::prime(7).unwrap();
        let g = FiniteAbelianGroup::cyclic(3);
        let mut v = vec![f.one(); 9];
        v[4] = f.from_i64(2);
        assert!(GroupTwoCocycle::new(g, v).is_err());
    }
}
