//! Generator roles for the Borel halves of a small quantum group.

use crate::hopf::{HopfAlgebra, Vector};
use crate::report::Report;
use crate::scalars::Scalar;

/// A skew-primitive generator `x` with `Δ(x) = g ⊗ x + x ⊗ 1` and
/// `h x h⁻¹ = χ(h) x` for the registered group-likes `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRole {
    /// Basis index of `x`.
    pub element: usize,
    /// Basis index of `g`.
    pub grouplike: usize,
    /// `χ` on the group, in the order of [`BorelDatum::a_group`] or
    /// [`BorelDatum::u_group`].
    pub character: Vec<Scalar>,
}

/// Roles `(a_j, g_j, χ_j)` in `A` and `(u_i, y_i, η_i)` in `U`. Only rank 1
/// is instantiated but the type holds any number of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelDatum {
    pub n: usize,
    pub q: Scalar,
    /// Basis indices of the group-likes of `A`, identity first.
    pub a_group: Vec<usize>,
    pub u_group: Vec<usize>,
    pub a_roles: Vec<GeneratorRole>,
    pub u_roles: Vec<GeneratorRole>,
}

/// Values `c` with `h x S(h) = c x` for every `h` in `group`, if `x` is an
/// eigenvector of all of them.
pub fn conjugation_character(hopf: &HopfAlgebra, x: usize, group: &[usize]) -> Option<Vec<Scalar>> {
    let xv = hopf.basis(x);
    group
        .iter()
        .map(|&g| {
            let v = hopf.mul(&hopf.mul(&hopf.basis(g), &xv), hopf.antipode().image(g));
            match v.first() {
                None => Some(hopf.field().zero()),
                Some((i, c)) if i == x && v.len() == 1 => Some(c.clone()),
                _ => None,
            }
        })
        .collect()
}

fn check_roles(rep: &mut Report, side: &str, hopf: &HopfAlgebra, group: &[usize], roles: &[GeneratorRole]) {
    let d = hopf.dim();
    let l = hopf.labels();
    for (j, r) in roles.iter().enumerate() {
        let x = hopf.basis(r.element);
        let expect: Vector = hopf.basis(r.grouplike).tensor(&x, d).sum(&x.tensor(&hopf.one(), d));
        rep.record(
            format!("{side}{j}.skew-primitive"),
            (hopf.comult(&x) != expect).then(|| format!("Δ({x}) ≠ {g}⊗{x} + {x}⊗1", x = l[r.element], g = l[r.grouplike])),
        );
        let chi = conjugation_character(hopf, r.element, group);
        rep.record(
            format!("{side}{j}.character"),
            (chi.as_ref() != Some(&r.character)).then(|| format!("conjugation on {} is not the registered character", l[r.element])),
        );
        let at_own = group.iter().position(|&g| g == r.grouplike).map(|p| &r.character[p]);
        rep.record(
            format!("{side}{j}.χ(g) ≠ 1"),
            at_own.is_none_or(|c| c.is_one()).then(|| format!("character at {} is 1 or unregistered", l[r.grouplike])),
        );
    }
}

impl BorelDatum {
    /// The skew-primitivity, character and non-degeneracy conditions on
    /// both sides.
    pub fn verify(&self, u: &HopfAlgebra, a: &HopfAlgebra) -> Report {
        let mut rep = Report::new();
        check_roles(&mut rep, "A", a, &self.a_group, &self.a_roles);
        check_roles(&mut rep, "U", u, &self.u_group, &self.u_roles);
        rep
    }
}
