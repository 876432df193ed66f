//! Generating-function and q-polynomial identities for the (maj, des, exc, fix)
//! enumerators, each checked coefficientwise against brute-force enumeration.

use super::enumerators::joint_enumerator_filtered;
use super::mpoly::{int, unit_exps, MPoly, Var};
use super::qanalog::{gauss, gauss_table, pochhammer, q_int_of, q_multinomial};
use super::series::{cap_exp_q_series, exp_q_series, QExpSeries, TruncatedSeries};
use crate::combinatorics::{all_perms, Permutation, Stat};
use crate::error::{check_cap, Result, DEFAULT_PERM_CAP};
use crate::report::{Item, Report};

const MAJ_EXC: [(Stat, Var); 2] = [(Stat::Maj, Var::Q), (Stat::Exc, Var::T)];
const MAJ_EXC_FIX: [(Stat, Var); 3] = [(Stat::Maj, Var::Q), (Stat::Exc, Var::T), (Stat::Fix, Var::R)];
const COMAJ_EXC: [(Stat, Var); 2] = [(Stat::Comaj, Var::Q), (Stat::Exc, Var::T)];
const COMAJ_EXC_FIX: [(Stat, Var); 3] = [(Stat::Comaj, Var::Q), (Stat::Exc, Var::T), (Stat::Fix, Var::R)];

fn v(x: Var) -> MPoly {
    MPoly::var(x)
}

fn mono(pows: &[(Var, i16)]) -> MPoly {
    MPoly::term(1, pows)
}

fn mismatch(lhs: &MPoly, rhs: &MPoly) -> String {
    format!("lhs = {lhs}; rhs = {rhs}")
}

fn derangement(p: &Permutation) -> bool {
    Stat::Fix.eval(p) == 0
}

/// Compares the coefficients of a q-exponential series with enumerators, grade by grade.
fn compare_grades(
    report: &mut Report,
    id: &str,
    rhs: &QExpSeries,
    lhs: impl Fn(usize) -> MPoly,
) {
    for n in 0..=rhs.order() {
        let l = lhs(n);
        let r = rhs.coeff(n);
        report.push(Item::check(id, &l == r, || mismatch(&l, r)).param("n", n));
    }
}

/// (1 − x) e(z) / (e(zx) − x e(z)) with e = exp_q or Exp_q, numerator argument scaled by `r`.
fn exc_quotient(e: &QExpSeries, x: &MPoly, r: &MPoly) -> Result<QExpSeries> {
    let one_minus_x = &MPoly::one() - x;
    let num = e.rescale(r).scale(&one_minus_x);
    let den = e.rescale(x).sub(&e.scale(x));
    num.div(&den)
}

/// The (maj, exc) exponential generating function, through z^{n_max}.
pub fn verify_maj_exc_egf(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, DEFAULT_PERM_CAP)?;
    let mut report = Report::new("maj-exc-egf");
    let tq = mono(&[(Var::T, 1), (Var::Q, 1)]);
    let rhs = exc_quotient(&exp_q_series(n_max), &tq, &MPoly::one())?;
    compare_grades(&mut report, "maj-exc", &rhs, |n| {
        joint_enumerator_filtered(n, &MAJ_EXC, |_| true)
    });
    Ok(report)
}

/// The (maj, exc, fix) refinement and its comajor-index companion, through z^{n_max}.
pub fn verify_maj_exc_fix_egf(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, DEFAULT_PERM_CAP)?;
    let mut report = Report::new("maj-exc-fix-egf");
    let tq = mono(&[(Var::T, 1), (Var::Q, 1)]);
    let rhs = exc_quotient(&exp_q_series(n_max), &tq, &v(Var::R))?;
    compare_grades(&mut report, "maj-exc-fix", &rhs, |n| {
        joint_enumerator_filtered(n, &MAJ_EXC_FIX, |_| true)
    });
    let t_over_q = mono(&[(Var::T, 1), (Var::Q, -1)]);
    let rhs = exc_quotient(&cap_exp_q_series(n_max), &t_over_q, &v(Var::R))?;
    compare_grades(&mut report, "comaj-exc-fix", &rhs, |n| {
        joint_enumerator_filtered(n, &COMAJ_EXC_FIX, |_| true)
    });
    Ok(report)
}

/// Coefficients in p of a polynomial, as a truncated series.
fn p_series(f: &MPoly, order: usize) -> TruncatedSeries<MPoly> {
    let coeffs = (0..=order).map(|m| f.coeff_of(Var::P, m as i16)).collect();
    TruncatedSeries::from_coeffs(coeffs, order)
}

/// Coefficients in z of a polynomial, as a truncated series.
fn z_series(f: &MPoly, order: usize) -> TruncatedSeries<MPoly> {
    let coeffs = (0..=order).map(|m| f.coeff_of(Var::Z, m as i16)).collect();
    TruncatedSeries::from_coeffs(coeffs, order)
}

/// The Foata–Han identity for the (maj, des, exc, fix) enumerator, through z^{nz} p^{np}.
pub fn verify_foata_han(nz: usize, np: usize) -> Result<Report> {
    check_cap("n", nz, DEFAULT_PERM_CAP)?;
    let mut report = Report::new("foata-han");
    let stats = [
        (Stat::Maj, Var::Q),
        (Stat::Des, Var::P),
        (Stat::Exc, Var::T),
        (Stat::Fix, Var::R),
    ];
    let p = v(Var::P);
    let z = v(Var::Z);

    // lhs[n] = A_n / (p;q)_{n+1}, truncated at p^np
    let lhs: Vec<MPoly> = (0..=nz)
        .map(|n| {
            let a = joint_enumerator_filtered(n, &stats, |_| true);
            let inv = p_series(&pochhammer(&p, n + 1), np).recip()?;
            let prod = p_series(&a, np).mul(&inv);
            Ok(sum_graded(prod.coeffs(), Var::P))
        })
        .collect::<Result<_>>()?;

    // rhs[n] = Σ_{m ≤ np} p^m [z^n] R_m(z)
    let mut rhs = vec![MPoly::zero(); nz + 1];
    let tq = mono(&[(Var::T, 1), (Var::Q, 1)]);
    let ztq = &z * &tq;
    for m in 0..=np {
        let zq = pochhammer(&z, m);
        let ztqq = pochhammer(&ztq, m);
        let num = &(&(&MPoly::one() - &tq) * &zq) * &ztqq;
        let den = &(&zq - &(&tq * &ztqq)) * &pochhammer(&(&z * &v(Var::R)), m + 1);
        let rm = z_series(&num, nz).div(&z_series(&den, nz))?;
        let pm = mono(&[(Var::P, m as i16)]);
        for (n, c) in rm.coeffs().iter().enumerate() {
            rhs[n] += &(c * &pm);
        }
    }
    for n in 0..=nz {
        report.push(
            Item::check("coefficient", lhs[n] == rhs[n], || mismatch(&lhs[n], &rhs[n]))
                .param("n", n)
                .param("pmax", np),
        );
    }
    Ok(report)
}

fn sum_graded(coeffs: &[MPoly], var: Var) -> MPoly {
    let mut out = MPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        out += &c.shift(&unit_exps(var, k as i16));
    }
    out
}

/// tq[k]_{tq}.
fn excedance_block(k: usize) -> MPoly {
    let tq = mono(&[(Var::T, 1), (Var::Q, 1)]);
    &tq * &q_int_of(k, &tq)
}

/// Compositions (k_0 ≥ 0; k_1, …, k_m ≥ 2) of n.
fn block_compositions(n: usize) -> Vec<Vec<usize>> {
    fn tail(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for k in 2..=rest {
            acc.push(k);
            tail(rest - k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for k0 in 0..=n {
        let mut acc = vec![k0];
        tail(n - k0, &mut acc, &mut out);
    }
    out
}

/// The Gaussian-binomial recurrence and the q-multinomial closed form for
/// A_n^{maj,exc,fix}.
pub fn verify_fix_recurrence(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, DEFAULT_PERM_CAP)?;
    let mut report = Report::new("fix-recurrence");
    let a: Vec<MPoly> = (0..=n_max)
        .map(|n| joint_enumerator_filtered(n, &MAJ_EXC_FIX, |_| true))
        .collect();
    for n in 0..=n_max {
        let row = gauss_table(n);
        let mut rec = mono(&[(Var::R, n as i16)]);
        for k in 0..n.saturating_sub(1) {
            rec += &(&(&row[k] * &a[k]) * &excedance_block(n - k - 1));
        }
        report.push(Item::check("recurrence", rec == a[n], || mismatch(&a[n], &rec)).param("n", n));

        let mut closed = MPoly::zero();
        for comp in block_compositions(n) {
            let mut term = &q_multinomial(&comp) * &mono(&[(Var::R, comp[0] as i16)]);
            for &k in &comp[1..] {
                term = &term * &excedance_block(k - 1);
            }
            closed += &term;
        }
        report.push(
            Item::check("closed-form", closed == a[n], || mismatch(&a[n], &closed)).param("n", n),
        );
    }
    Ok(report)
}

/// Fixed-point and derangement formulas for (maj, exc) and (comaj, exc).
pub fn verify_derangement_formulas(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, DEFAULT_PERM_CAP)?;
    let mut report = Report::new("derangement-formulas");
    for (label, stats, comaj) in [("maj", MAJ_EXC, false), ("comaj", COMAJ_EXC, true)] {
        let der: Vec<MPoly> = (0..=n_max)
            .map(|n| joint_enumerator_filtered(n, &stats, derangement))
            .collect();
        let all: Vec<MPoly> = (0..=n_max)
            .map(|n| joint_enumerator_filtered(n, &stats, |_| true))
            .collect();
        for n in 0..=n_max {
            let perms: Vec<Permutation> = all_perms(n).collect();
            for k in 0..=n {
                let lhs = super::enumerators::enumerate_over(
                    perms.iter().filter(|p| Stat::Fix.eval(p) == k as u32),
                    &stats,
                );
                let mut rhs = &gauss(n, k)? * &der[n - k];
                if comaj {
                    rhs = rhs.shift(&unit_exps(Var::Q, choose2(k)));
                }
                report.push(
                    Item::check(format!("{label}-fix"), lhs == rhs, || mismatch(&lhs, &rhs))
                        .param("n", n)
                        .param("k", k),
                );
            }
            let mut alt = MPoly::zero();
            for k in 0..=n {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let mut term = (&gauss(n, k)? * &all[n - k]).scale(&int(sign));
                if !comaj {
                    term = term.shift(&unit_exps(Var::Q, choose2(k)));
                }
                alt += &term;
            }
            report.push(
                Item::check(format!("{label}-derangements"), alt == der[n], || {
                    mismatch(&der[n], &alt)
                })
                .param("n", n),
            );
        }
    }
    Ok(report)
}

fn choose2(k: usize) -> i16 {
    (k * k.saturating_sub(1) / 2) as i16
}

/// Coefficients of t^0..=t^deg, each a polynomial in the other variables.
pub fn t_coefficients(f: &MPoly, var: Var) -> Vec<MPoly> {
    let lo = f.min_degree(var).unwrap_or(0).min(0);
    let hi = f.max_degree(var).unwrap_or(0);
    assert!(lo >= 0, "negative powers of {}", var.name());
    (0..=hi).map(|j| f.coeff_of(var, j)).collect()
}

/// c_j = c_{d−j} for all j, where d is twice the center of symmetry.
pub fn is_symmetric_about(coeffs: &[MPoly], twice_center: usize) -> bool {
    let get = |j: isize| -> MPoly {
        if j < 0 || j as usize >= coeffs.len() {
            MPoly::zero()
        } else {
            coeffs[j as usize].clone()
        }
    };
    let top = coeffs.len().max(twice_center + 1) as isize;
    (0..top).all(|j| get(j) == get(twice_center as isize - j))
}

/// c_{j} − c_{j−1} has nonnegative coefficients for every j up to the center.
pub fn is_unimodal_to_center(coeffs: &[MPoly], twice_center: usize) -> bool {
    let get = |j: usize| coeffs.get(j).cloned().unwrap_or_else(MPoly::zero);
    (1..=twice_center / 2).all(|j| (&get(j) - &get(j - 1)).is_nonnegative())
}

/// The cycle-type involution i ↦ n+1−i: a_{λ,j}(q,p) = a_{λ,n−k−j}(1/q, q^n p), and the
/// resulting q-symmetry a_{λ,j}(q,p) = q^{2j+k−n} a_{λ,j}(1/q, q^n p).
pub fn verify_cycle_type_reversal(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, DEFAULT_PERM_CAP)?;
    let mut report = Report::new("cycle-type-reversal");
    let stats = [(Stat::Maj, Var::Q), (Stat::Des, Var::P), (Stat::Exc, Var::T)];
    for n in 1..=n_max {
        let perms: Vec<Permutation> = all_perms(n).collect();
        for lambda in crate::combinatorics::partitions(n) {
            let a = super::enumerators::enumerate_over(
                perms.iter().filter(|p| p.cycle_type() == lambda),
                &stats,
            );
            let k = lambda.multiplicity(1);
            let twisted = a
                .subst_monomial(Var::Q, &unit_exps(Var::Q, -1))
                .subst_monomial(Var::P, &[n as i16, 1, 0, 0, 0]);
            for j in 0..n {
                let lhs = a.coeff_of(Var::T, j as i16);
                let ok1 = n >= k + j && {
                    let rhs = twisted.coeff_of(Var::T, (n - k - j) as i16);
                    lhs == rhs
                };
                let ok1 = ok1 || (n < k + j && lhs.is_zero());
                report.push(
                    Item::check("reversal", ok1, || format!("lambda={lambda} j={j}"))
                        .param("lambda", lambda.to_string())
                        .param("j", j),
                );
                let shift = 2 * j as i16 + k as i16 - n as i16;
                let rhs = twisted.coeff_of(Var::T, j as i16).shift(&unit_exps(Var::Q, shift));
                report.push(
                    Item::check("q-symmetry", lhs == rhs, || mismatch(&lhs, &rhs))
                        .param("lambda", lambda.to_string())
                        .param("j", j),
                );
            }
        }
    }
    Ok(report)
}

/// t-symmetry and t-unimodality of the fixed-point refined (q,p)-Eulerian polynomials
/// A_{n,k}(q, p, t/q), and of their p = 1 and full-sum specializations.
pub fn verify_qp_eulerian_symmetry(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, DEFAULT_PERM_CAP)?;
    let mut report = Report::new("qp-eulerian-symmetry");
    let stats = [(Stat::Maj, Var::Q), (Stat::Des, Var::P), (Stat::Exc, Var::T)];
    let mut t_over_q = unit_exps(Var::T, 1);
    t_over_q[Var::Q as usize] = -1;
    let twist = |f: &MPoly| f.subst_monomial(Var::T, &t_over_q);
    let p_to_one = |f: &MPoly| f.eval_var(Var::P, &int(1));
    for n in 1..=n_max {
        let perms: Vec<Permutation> = all_perms(n).collect();
        let mut total = MPoly::zero();
        for k in 0..=n {
            let a = super::enumerators::enumerate_over(
                perms.iter().filter(|p| Stat::Fix.eval(p) == k as u32),
                &stats,
            );
            total += &a;
            if a.is_zero() {
                continue;
            }
            let tw = twist(&a);
            let c = t_coefficients(&tw, Var::T);
            report.push(
                Item::check("symmetric", is_symmetric_about(&c, n - k), || {
                    format!("A_{{{n},{k}}}(q,p,t/q) = {tw}")
                })
                .param("n", n)
                .param("k", k),
            );
            if k == 0 {
                report.push(
                    Item::check("unimodal-derangements", is_unimodal_to_center(&c, n), || {
                        tw.to_string()
                    })
                    .param("n", n),
                );
            }
            let c1 = t_coefficients(&p_to_one(&tw), Var::T);
            report.push(
                Item::check(
                    "p1-symmetric-unimodal",
                    is_symmetric_about(&c1, n - k) && is_unimodal_to_center(&c1, n - k),
                    || tw.to_string(),
                )
                .param("n", n)
                .param("k", k),
            );
        }
        let c = t_coefficients(&p_to_one(&twist(&total)), Var::T);
        report.push(
            Item::check(
                "p1-total-symmetric-unimodal",
                is_symmetric_about(&c, n - 1) && is_unimodal_to_center(&c, n - 1),
                || total.to_string(),
            )
            .param("n", n),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maj_exc_egf_small() {
        assert!(verify_maj_exc_egf(6).unwrap().all_ok());
        assert!(verify_maj_exc_fix_egf(5).unwrap().all_ok());
    }

    #[test]
    fn foata_han_small() {
        let r = verify_foata_han(4, 3).unwrap();
        assert!(r.all_ok(), "{r}");
    }

    #[test]
    fn foata_han_p_zero_t_zero_is_r_power() {
        // only the identity has no descents, and with t = 0 only fixed points remain
        let a = joint_enumerator_filtered(
            4,
            &[(Stat::Maj, Var::Q), (Stat::Des, Var::P), (Stat::Exc, Var::T), (Stat::Fix, Var::R)],
            |_| true,
        );
        let spec = a.eval_var(Var::P, &int(0)).eval_var(Var::T, &int(0));
        assert_eq!(spec, mono(&[(Var::R, 4)]));
    }

    #[test]
    fn recurrences_and_derangements() {
        assert!(verify_fix_recurrence(6).unwrap().all_ok());
        let r = verify_derangement_formulas(6).unwrap();
        assert!(r.all_ok(), "{r}");
    }

    #[test]
    fn symmetry_suites() {
        let r = verify_cycle_type_reversal(6).unwrap();
        assert!(r.all_ok(), "{r}");
        let r = verify_qp_eulerian_symmetry(6).unwrap();
        assert!(r.all_ok(), "{r}");
    }

    #[test]
    fn block_compositions_of_four() {
        // k0 = 4; k0 = 2 with (2); k0 = 1 with (3); k0 = 0 with (4), (2,2)
        assert_eq!(block_compositions(4).len(), 5);
    }
}
