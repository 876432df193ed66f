//! Closed forms for the Eulerian quasisymmetric functions: the composition formula, the
//! recurrence, the generating function, the power-sum expansion and the character tables
//! of the representations V_{(n),j}.

use num_integer::Integer;

use super::table::{q_lambda, to_h, LAMBDA_CAP, NJK_CAP};
use crate::combinatorics::{partitions, Partition};
use crate::error::{check_cap, Error, Result};
use crate::poly::{eulerian_poly, q_int_of, Coef, MPoly, TruncatedSeries, Var};
use crate::symfunc::{SymBasis, SymElem};

fn t() -> MPoly {
    MPoly::var(Var::T)
}

fn r() -> MPoly {
    MPoly::var(Var::R)
}

/// t[k−1]_t = t + t² + ⋯ + t^{k−1}.
fn t_bracket(k: usize) -> MPoly {
    &t() * &q_int_of(k - 1, &t())
}

fn h(n: usize) -> SymElem {
    if n == 0 {
        SymElem::one(SymBasis::H)
    } else {
        SymElem::h(n as u32)
    }
}

/// Compositions of n with every part at least 2.
fn compositions_ge2(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 2..=n {
        for mut rest in compositions_ge2(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Q_n(t, r) = Σ r^{k_0} h_{k_0} Π h_{k_i} t[k_i − 1]_t over k_0 ≥ 0 and compositions
/// (k_1, …, k_m) of n − k_0 into parts ≥ 2.
pub fn q_closed_form(n: usize) -> Result<SymElem> {
    check_cap("n", n, LAMBDA_CAP)?;
    let mut out = SymElem::zero(SymBasis::H);
    for k0 in 0..=n {
        for comp in compositions_ge2(n - k0) {
            let mut c = r().pow(k0 as u32);
            let mut parts = vec![k0 as u32];
            for &k in &comp {
                c = &c * &t_bracket(k);
                parts.push(k as u32);
            }
            out.add_term(Partition::new(parts), &c);
        }
    }
    Ok(out)
}

/// Q_0, …, Q_n from Q_n = r^n h_n + Σ_{k ≤ n−2} Q_k h_{n−k} t[n−k−1]_t.
pub fn q_recurrence(n: usize) -> Result<Vec<SymElem>> {
    check_cap("n", n, LAMBDA_CAP)?;
    let mut qs: Vec<SymElem> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut q = h(m).scale(&r().pow(m as u32));
        for k in 0..m.saturating_sub(1) {
            q = q.add(&qs[k].mul(&h(m - k))?.scale(&t_bracket(m - k)))?;
        }
        qs.push(q);
    }
    Ok(qs)
}

/// H(xz) as a series: h_k x^k z^k.
fn h_series(order: usize, x: &MPoly) -> TruncatedSeries<SymElem> {
    TruncatedSeries::from_coeffs((0..=order).map(|k| h(k).scale(&x.pow(k as u32))).collect(), order)
}

/// (1 − t) H(rz) / (H(zt) − t H(z)), grade by grade through z^order.
pub fn generating_quotient(order: usize) -> Result<Vec<SymElem>> {
    check_cap("n", order, NJK_CAP)?;
    let one_minus_t = &MPoly::one() - &t();
    let num = h_series(order, &r()).scale(&SymElem::constant(one_minus_t, SymBasis::H));
    let den = h_series(order, &t()).sub(&h_series(order, &MPoly::one()).scale(&SymElem::constant(t(), SymBasis::H)));
    Ok(num.div(&den)?.coeffs().to_vec())
}

/// H(rz) / (1 − Σ_{n ≥ 2} t[n−1]_t h_n z^n), grade by grade through z^order.
pub fn generating_geometric(order: usize) -> Result<Vec<SymElem>> {
    check_cap("n", order, NJK_CAP)?;
    let mut den = vec![SymElem::one(SymBasis::H)];
    den.extend((1..=order).map(|n| {
        if n < 2 {
            SymElem::zero(SymBasis::H)
        } else {
            h(n).scale(&-&t_bracket(n))
        }
    }));
    let den = TruncatedSeries::from_coeffs(den, order);
    Ok(h_series(order, &r()).mul(&den.recip()?).coeffs().to_vec())
}

/// Σ_j Q_{n,j} t^j = Σ_{λ ⊢ n} z_λ^{-1} A_{ℓ(λ)}(t) Π [λ_i]_t p_λ.
pub fn q_power_sum(n: usize) -> Result<SymElem> {
    check_cap("n", n, LAMBDA_CAP)?;
    let mut out = SymElem::zero(SymBasis::P);
    for lambda in partitions(n) {
        let mut c = eulerian_poly(lambda.len());
        for &part in lambda.parts() {
            c = &c * &q_int_of(part as usize, &t());
        }
        let zl = Coef::new(1.into(), lambda.z());
        out.add_term(lambda, &c.scale(&zl));
    }
    Ok(out)
}

/// F(t)_m: keep only the terms a_i t^i with gcd(m, i) = 1.
pub fn erase(f: &MPoly, m: u32) -> MPoly {
    let mut out = MPoly::zero();
    for (e, c) in f.terms() {
        let i = e[Var::T as usize];
        if i >= 0 && (i as u32).gcd(&m) == 1 {
            out.add_term(*e, c.clone());
        }
    }
    out
}

/// G_λ(t) = (t A_{k−1}(t) Π [λ_i]_t)_{g(λ)} with k = ℓ(λ) and g(λ) the gcd of the parts.
pub fn g_lambda(lambda: &Partition) -> MPoly {
    let k = lambda.len();
    let mut f = &t() * &eulerian_poly(k.saturating_sub(1));
    for &part in lambda.parts() {
        f = &f * &q_int_of(part as usize, &t());
    }
    erase(&f, lambda.gcd())
}

/// Character values χ_λ(V_{(n),j}) = z_λ [p_λ] Q_{(n),j} for j = 0..n−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub n: usize,
    /// Rows in the order: fewer parts first, then lexicographically decreasing.
    pub rows: Vec<(Partition, Vec<i64>)>,
}

impl CharTable {
    pub fn value(&self, lambda: &Partition, j: usize) -> Option<i64> {
        self.rows
            .iter()
            .find(|(l, _)| l == lambda)
            .and_then(|(_, v)| v.get(j).copied())
    }
}

pub fn char_table(n: usize) -> Result<CharTable> {
    check_cap("n", n, LAMBDA_CAP)?;
    let mut rows: Vec<(Partition, Vec<i64>)> = partitions(n).into_iter().map(|l| (l, Vec::new())).collect();
    rows.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then(b.cmp(a)));
    let cycle = Partition::new(vec![n as u32]);
    for j in 0..n.max(1) {
        let q = to_h(&q_lambda(&cycle, j as u32)?)?;
        let values = q.character_values(n)?;
        for (l, row) in rows.iter_mut() {
            let c = &values.iter().find(|(m, _)| m == l).expect("every partition").1;
            let v = c.as_i64().ok_or_else(|| Error::NonIntegral(c.to_string()))?;
            row.push(v);
        }
    }
    Ok(CharTable { n, rows })
}

/// The coefficient of t^j of a polynomial in t, as an integer.
pub fn t_coeff_i64(f: &MPoly, j: usize) -> Option<i64> {
    f.coeff_of(Var::T, j as i16).as_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eulerian::table::q_n_tr;

    #[test]
    fn closed_form_small() {
        assert!(q_closed_form(0).unwrap().is_one());
        let q2 = q_closed_form(2).unwrap();
        let want = SymElem::h(2).scale(&(&r().pow(2) + &t()));
        assert_eq!(q2, want);
    }

    #[test]
    fn closed_form_recurrence_and_definition_agree() {
        let rec = q_recurrence(6).unwrap();
        for n in 0..=6 {
            let closed = q_closed_form(n).unwrap();
            assert_eq!(closed, rec[n], "n={n}");
            assert_eq!(closed, to_h(&q_n_tr(n).unwrap()).unwrap(), "n={n}");
        }
    }

    #[test]
    fn both_generating_function_forms_agree() {
        let a = generating_quotient(6).unwrap();
        let b = generating_geometric(6).unwrap();
        for n in 0..=6 {
            assert!(a[n].equals(&b[n]).unwrap(), "n={n}");
        }
    }

    #[test]
    fn erasure_example() {
        let f = MPoly::from_int(1) + t() + MPoly::term(2, &[(Var::T, 2)]) + MPoly::term(3, &[(Var::T, 3)]);
        assert_eq!(erase(&f, 2), t() + MPoly::term(3, &[(Var::T, 3)]));
    }

    #[test]
    fn power_sum_low_degree() {
        assert_eq!(q_power_sum(1).unwrap(), SymElem::p(1));
        let two = q_power_sum(2).unwrap().to_basis(SymBasis::H).unwrap();
        assert_eq!(two, SymElem::h(2).scale(&(&MPoly::one() + &t())));
        assert_eq!(Partition::new(vec![2, 1, 1]).z(), 4.into());
    }

    #[test]
    fn small_character_tables() {
        let t4 = char_table(4).unwrap();
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(t4.value(&p("2,1,1"), 1), Some(1));
        assert_eq!(t4.value(&p("2,1,1"), 2), Some(2));
        let t5 = char_table(5).unwrap();
        assert_eq!(t5.value(&p("5"), 1), Some(1));
        assert_eq!(t5.value(&p("5"), 2), Some(1));
        assert_eq!(t4.rows[0].0, p("4"));
        assert_eq!(t4.rows.last().unwrap().0, p("1,1,1,1"));
    }
}
