//! `H²(G, U(k))` for a finite abelian group acting trivially on the units of
//! a finite field, via integer Smith normal form.

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::groups::{FiniteAbelianGroup, GroupTwoCocycle};
use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

type IMat = Vec<Vec<BigInt>>;

/// `u * a * v = diag(d)` with `u`, `v` unimodular; inverses are tracked.
struct Smith {
    diag: Vec<BigInt>,
    u_inv: IMat,
    v: IMat,
    v_inv: IMat,
}

fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// row_i += c row_j, applied to `m`.
fn row_add(m: &mut IMat, i: usize, j: usize, c: &BigInt) {
    let rj = m[j].clone();
    for (x, y) in m[i].iter_mut().zip(rj) {
        *x += c * y;
    }
}

fn col_add(m: &mut IMat, i: usize, j: usize, c: &BigInt) {
    for row in m.iter_mut() {
        let y = row[j].clone();
        row[i] += c * y;
    }
}

fn col_swap(m: &mut IMat, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

fn smith(mut a: IMat, rows: usize, cols: usize) -> Smith {
    // row ops on a are recorded in u_inv as inverse column ops; column ops in
    // v directly and in v_inv as inverse row ops
    let mut u_inv = identity(rows);
    let mut v = identity(cols);
    let mut v_inv = identity(cols);
    let r_add = |a: &mut IMat, u_inv: &mut IMat, i: usize, j: usize, c: &BigInt| {
        row_add(a, i, j, c);
        col_add(u_inv, j, i, &-c);
    };
    let c_add = |a: &mut IMat, v: &mut IMat, v_inv: &mut IMat, i: usize, j: usize, c: &BigInt| {
        col_add(a, i, j, c);
        col_add(v, i, j, c);
        row_add(v_inv, j, i, &-c);
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: nonzero entry of least absolute value in the trailing block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        col_swap(&mut u_inv, t, pi);
        col_swap(&mut a, t, pj);
        col_swap(&mut v, t, pj);
        v_inv.swap(t, pj);
        let mut clean = true;
        for i in t + 1..rows {
            let qt = a[i][t].div_floor(&a[t][t]);
            if !qt.is_zero() {
                r_add(&mut a, &mut u_inv, i, t, &-qt);
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            let qt = a[t][j].div_floor(&a[t][t]);
            if !qt.is_zero() {
                c_add(&mut a, &mut v, &mut v_inv, j, t, &-qt);
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // divisibility: fold an offending row into row t and retry
        let p = a[t][t].clone();
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p))) {
            r_add(&mut a, &mut u_inv, t, i, &BigInt::one());
            continue;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for row in u_inv.iter_mut() {
                row[t] = -row[t].clone();
            }
        }
        t += 1;
    }
    let diag = (0..rows.min(cols)).map(|i| a[i][i].clone()).collect();
    Smith { diag, u_inv, v, v_inv }
}

/// Invariant factors (all > 1) and one representative cocycle per cyclic
/// summand.
#[derive(Clone, Debug)]
pub struct SecondCohomology {
    pub invariants: Vec<u64>,
    pub representatives: Vec<GroupTwoCocycle>,
}

impl SecondCohomology {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }
}

/// Linear conditions on the additive table `f(g,h)` (index `g*n+h`):
/// the cocycle identity and normalization.
fn cocycle_conditions(g: &FiniteAbelianGroup) -> IMat {
    let n = g.order();
    let mut rows = Vec::new();
    let row = |terms: &[(usize, i64)]| {
        let mut r = vec![BigInt::zero(); n * n];
        for &(k, c) in terms {
            r[k] += c;
        }
        r
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // f(b,c) - f(ab,c) + f(a,bc) - f(a,b)
                let r = row(&[(b * n + c, 1), (g.mul(a, b) * n + c, -1), (a * n + g.mul(b, c), 1), (a * n + b, -1)]);
                if r.iter().any(|x| !x.is_zero()) {
                    rows.push(r);
                }
            }
        }
    }
    for a in 0..n {
        rows.push(row(&[(a, 1)]));
        rows.push(row(&[(a * n, 1)]));
    }
    rows
}

/// Columns `(dc)(g,h) = c(g) + c(h) - c(gh)` for `c = δ_x`, `x ≠ 1`.
fn coboundary_generators(g: &FiniteAbelianGroup) -> Vec<Vec<BigInt>> {
    let n = g.order();
    (1..n)
        .map(|x| {
            let mut col = vec![BigInt::zero(); n * n];
            for a in 0..n {
                for b in 0..n {
                    let v = (a == x) as i64 + (b == x) as i64 - (g.mul(a, b) == x) as i64;
                    col[a * n + b] += v;
                }
            }
            col
        })
        .collect()
}

fn units_data(field: &Field) -> Result<(u64, Scalar)> {
    let size = field
        .size()
        .ok_or_else(|| Error::BadParams(format!("H² needs a finite field, got {}", field.spec().short_name())))?;
    let m = size - 1;
    let omega = field
        .units()
        .unwrap()
        .into_iter()
        .find(|u| u.multiplicative_order() == Some(m))
        .ok_or_else(|| Error::Internal("no generator of the unit group".into()))?;
    Ok((m, omega))
}

pub fn h2_group_cohomology(g: &FiniteAbelianGroup, field: &Field) -> Result<SecondCohomology> {
    let (m, omega) = units_data(field)?;
    let n = g.order();
    let nn = n * n;
    let mb = BigInt::from(m);
    // Z̃ = {x : C x ∈ mℤ}; with U C V = D, x = V y and d_i y_i ∈ mℤ
    let c = cocycle_conditions(g);
    let rows = c.len();
    let s = smith(c, rows, nn);
    let scale: Vec<BigInt> = (0..nn)
        .map(|i| match s.diag.get(i) {
            Some(d) if !d.is_zero() => &mb / d.gcd(&mb),
            _ => BigInt::one(),
        })
        .collect();
    // B̃ = coboundaries + mℤⁿ in the basis Zb = V·diag(scale): Y = diag(scale)⁻¹ V⁻¹ B
    let mut gens = coboundary_generators(g);
    for i in 0..nn {
        let mut e = vec![BigInt::zero(); nn];
        e[i] = mb.clone();
        gens.push(e);
    }
    let ncols = gens.len();
    let mut y = vec![vec![BigInt::zero(); ncols]; nn];
    for (j, col) in gens.iter().enumerate() {
        for i in 0..nn {
            let v: BigInt = (0..nn).map(|k| &s.v_inv[i][k] * &col[k]).sum();
            let (q, r) = v.div_rem(&scale[i]);
            if !r.is_zero() {
                return Err(Error::Internal("coboundary outside the cocycle lattice".into()));
            }
            y[i][j] = q;
        }
    }
    let t = smith(y, nn, ncols);
    let mut invariants = Vec::new();
    let mut representatives = Vec::new();
    for (i, d) in t.diag.iter().enumerate() {
        let d = d.abs();
        if d.is_one() {
            continue;
        }
        let order = d.to_u64().ok_or_else(|| Error::Internal("unbounded cohomology".into()))?;
        invariants.push(order);
        // Zb · u_inv[:, i], reduced mod m
        let zcol: Vec<BigInt> = (0..nn).map(|k| &t.u_inv[k][i] * &scale[k]).collect();
        let x: Vec<u64> = (0..nn)
            .map(|r| {
                let v: BigInt = (0..nn).map(|k| &s.v[r][k] * &zcol[k]).sum();
                v.mod_floor(&mb).to_u64().unwrap()
            })
            .collect();
        let values = x.iter().map(|&e| omega.pow(e as u32)).collect();
        representatives.push(GroupTwoCocycle::new(g.clone(), values)?);
    }
    Ok(SecondCohomology { invariants, representatives })
}

/// Every class of `H²(G, U(k))` as a product of powers of the representatives.
pub fn h2_classes(g: &FiniteAbelianGroup, field: &Field) -> Result<Vec<GroupTwoCocycle>> {
    let h2 = h2_group_cohomology(g, field)?;
    let mut out = vec![GroupTwoCocycle::trivial(g.clone(), field)];
    for (rep, &n) in h2.representatives.iter().zip(&h2.invariants) {
        let mut next = Vec::new();
        for c in &out {
            let mut acc = c.clone();
            for _ in 0..n {
                next.push(acc.clone());
                acc = acc.mul(rep);
            }
        }
        out = next;
    }
    Ok(out)
}

/// `|H²|` by enumerating normalized additive cocycles modulo coboundaries.
/// Only for tiny inputs.
pub fn h2_order_by_enumeration(g: &FiniteAbelianGroup, field: &Field) -> Result<u64> {
    let (m, _) = units_data(field)?;
    let n = g.order();
    let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let total = m.checked_pow(free.len() as u32).filter(|&t| t <= 5_000_000).ok_or(Error::SearchSpaceTooLarge(
        "enumeration oracle limited to 5e6 tables".into(),
    ))?;
    let mut cocycles = 0u64;
    let mut f = vec![0u64; n * n];
    for mut code in 0..total {
        for &(a, b) in &free {
            f[a * n + b] = code % m;
            code /= m;
        }
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    (f[a * n + b] + f[g.mul(a, b) * n + c]) % m == (f[b * n + c] + f[a * n + g.mul(b, c)]) % m
                })
            })
        });
        cocycles += ok as u64;
    }
    // normalized coboundaries: images of c with c(1) = 0
    let mut seen = std::collections::BTreeSet::new();
    let cm = m.pow((n - 1) as u32);
    for mut code in 0..cm {
        let mut c = vec![0u64; n];
        for v in c.iter_mut().skip(1) {
            *v = code % m;
            code /= m;
        }
        let b: Vec<u64> = (0..n * n).map(|ab| (c[ab / n] + c[ab % n] + m - c[g.mul(ab / n, ab % n)]) % m).collect();
        seen.insert(b);
    }
    Ok(cocycles / seen.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(inv: Vec<u64>, p: u64, expect: &[u64]) {
        let g = FiniteAbelianGroup::new(inv).unwrap();
        let f = Field::prime(p).unwrap();
        let h = h2_group_cohomology(&g, &f).unwrap();
        assert_eq!(h.invariants, expect);
        if let Ok(n) = h2_order_by_enumeration(&g, &f) {
            assert_eq!(h.order(), n);
        }
    }

    #[test]
    fn known_groups() {
        check(vec![3], 7, &[3]);
        check(vec![2, 2], 5, &[2, 2, 2]);
        check(vec![2], 5, &[2]);
        check(vec![], 7, &[]);
        check(vec![3], 5, &[]);
        check(vec![2, 2], 7, &[2, 2, 2]);
        check(vec![4], 5, &[4]);
    }

    #[test]
    fn representatives_are_independent_classes() {
        let f = Field::prime(5).unwrap();
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let h = h2_group_cohomology(&g, &f).unwrap();
        assert_eq!(h.representatives.len(), 3);
        assert!(h2_order_by_enumeration(&g, &f).is_ok());
    }

    #[test]
    fn rationals_rejected() {
        assert!(h2_group_cohomology(&FiniteAbelianGroup::cyclic(2), &Field::rational()).is_err());
    }
}
