//! Verification suites for the Eulerian quasisymmetric functions. Every item compares
//! exact coefficients; conjectures report "verified to bound" or a counterexample.

use std::collections::BTreeMap;

use super::formulas::{
    char_table, g_lambda, generating_geometric, generating_quotient, q_closed_form, q_power_sum,
    q_recurrence,
};
use super::table::{exc_table, q_lambda, q_lambda_t, q_n_tr, q_nj, q_njk, to_h, LAMBDA_CAP, NJK_CAP};
use crate::bijections::{banner_weights, ornament_weights};
use crate::combinatorics::{all_perms, partitions, Partition, Permutation, Stat};
use crate::error::{check_cap, Result};
use crate::poly::{
    eulerian_numbers, exp_q_series, gauss, int, pochhammer, q_int_of, unit_exps, enumerate_over, MPoly,
    TruncatedSeries, Var,
};
use crate::report::{Item, Report, Status};
use crate::symfunc::{MonoPoly, QSymElem, SymBasis, SymElem};

fn t() -> MPoly {
    MPoly::var(Var::T)
}

fn h(n: usize) -> SymElem {
    if n == 0 {
        SymElem::one(SymBasis::H)
    } else {
        SymElem::h(n as u32)
    }
}

fn e(n: usize) -> SymElem {
    if n == 0 {
        SymElem::one(SymBasis::E)
    } else {
        SymElem::e(n as u32)
    }
}

fn t_bracket(k: usize) -> MPoly {
    &t() * &q_int_of(k - 1, &t())
}

/// The coefficient of t^j in every coefficient.
fn t_part(f: &SymElem, j: usize) -> SymElem {
    f.map_coeffs(|c| c.coeff_of(Var::T, j as i16))
}

/// Expansion of a homogeneous symmetric function with integer coefficients in x_1..x_m.
fn monomials(f: &SymElem, m: usize) -> Result<MonoPoly> {
    if f.is_zero() {
        return Ok(MonoPoly::zero(m));
    }
    QSymElem::from_sym(f)?.monomial_expansion(m)
}

/// The symmetric function of degree n whose expansion in n variables is `f`; the m-basis
/// coefficients are read off the monomials x^λ.
fn lift(f: &MonoPoly) -> SymElem {
    let mut out = SymElem::zero(SymBasis::M);
    for (exps, &c) in f.terms() {
        if exps.windows(2).all(|w| w[0] >= w[1]) {
            let lambda = Partition::new(exps.iter().map(|&x| x as u32).collect());
            out.add_term(lambda, &MPoly::from_int(c));
        }
    }
    out
}

fn neq<T: std::fmt::Display>(a: &T, b: &T) -> String {
    format!("lhs = {a}; rhs = {b}")
}

fn by_cycle_type<'a>(perms: &'a [Permutation], lambda: &Partition) -> impl Iterator<Item = &'a Permutation> + 'a {
    let lambda = lambda.clone();
    perms.iter().filter(move |p| p.cycle_type() == lambda)
}

/// Every word of length n over [m], in lexicographic order.
fn words(n: usize, m: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (m as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut w = vec![0u32; n];
        for x in w.iter_mut().rev() {
            *x = (code % m as u64) as u32 + 1;
            code /= m as u64;
        }
        w
    })
}

fn descents(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

/// Σ_j Q_{n,j,k} t^j grouped by k, or Σ_j Q_{n,j} t^j for `None`, in the h basis.
fn q_t_poly(n: usize, k: Option<usize>) -> Result<SymElem> {
    let f = q_n_tr(n)?;
    let g = to_h(&f)?;
    Ok(match k {
        Some(k) => g.map_coeffs(|c| c.coeff_of(Var::R, k as i16)),
        None => g.map_coeffs(|c| c.eval_var(Var::R, &int(1))),
    })
}

/// (maj, exc, fix) exponential generating function and its r = 1 case, recovered from the
/// symmetric one by stable principal specialization; then a_{n,j,k}(q,1) and a_{λ,j}(q,1)
/// from the individual Q's.
pub fn verify_stable_specialization(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("stable-specialization");
    let rhs = generating_quotient(n_max)?;
    let tq = MPoly::term(1, &[(Var::T, 1), (Var::Q, 1)]);
    let e = exp_q_series(n_max);
    let one_minus = &MPoly::one() - &tq;
    let egf = e
        .rescale(&MPoly::var(Var::R))
        .scale(&one_minus)
        .div(&e.rescale(&tq).sub(&e.scale(&tq)))?;
    let mut tq_exps = unit_exps(Var::T, 1);
    tq_exps[Var::Q as usize] = 1;
    for n in 0..=n_max {
        let spec = if n == 0 {
            rhs[0].coeff(&Partition::empty())
        } else {
            rhs[n].stable_spec_numerator()?.subst_monomial(Var::T, &tq_exps)
        };
        let want = egf.coeff(n);
        report.push(Item::check("exc-fix-egf", &spec == want, || neq(&spec, want)).param("n", n));
        let one = int(1);
        let (a, b) = (spec.eval_var(Var::R, &one), want.eval_var(Var::R, &one));
        report.push(Item::check("exc-egf", a == b, || neq(&a, &b)).param("n", n));
    }
    for n in 0..=n_max.min(7) {
        let perms: Vec<Permutation> = all_perms(n).collect();
        for k in 0..=n {
            for j in 0..n.max(1) {
                let a = enumerate_over(
                    perms.iter().filter(|p| Stat::Exc.eval(p) == j as u32 && Stat::Fix.eval(p) == k as u32),
                    &[(Stat::Maj, Var::Q)],
                );
                let q = q_njk(n, j as u32, k)?;
                let s = q.stable_spec_numerator()?.shift(&unit_exps(Var::Q, j as i16));
                report.push(
                    Item::check("fixed-points", a == s, || neq(&a, &s))
                        .param("n", n)
                        .param("j", j)
                        .param("k", k),
                );
            }
        }
        for lambda in partitions(n) {
            for j in 0..n.max(1) {
                let a = enumerate_over(
                    by_cycle_type(&perms, &lambda).filter(|p| Stat::Exc.eval(p) == j as u32),
                    &[(Stat::Maj, Var::Q)],
                );
                let q = q_lambda(&lambda, j as u32)?;
                let s = q.stable_spec_numerator()?.shift(&unit_exps(Var::Q, j as i16));
                report.push(
                    Item::check("cycle-type", a == s, || neq(&a, &s))
                        .param("lambda", lambda.to_string())
                        .param("j", j),
                );
            }
        }
    }
    Ok(report)
}

/// Σ_{m ≤ order} p^m Σ_i q^{im+j} Λ_m(f_i), with f_i paired with its shift i.
fn nonstable_sum(fs: &[(usize, QSymElem)], j: usize, order: usize) -> MPoly {
    let mut out = MPoly::zero();
    for m in 0..=order {
        for (i, f) in fs {
            let spec = f.principal_spec_m(m);
            let shift = [(i * m + j) as i16, m as i16, 0, 0, 0];
            out += &spec.shift(&shift);
        }
    }
    out
}

/// The nonstable principal specialization of Q_{(λ,1^k),j} and of Q_{n,j,k}.
pub fn verify_nonstable_specialization(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    let mut report = Report::new("nonstable-specialization");
    let stats = [(Stat::Maj, Var::Q), (Stat::Des, Var::P)];
    let p = MPoly::var(Var::P);
    for n in 1..=n_max {
        let perms: Vec<Permutation> = all_perms(n).collect();
        let den = pochhammer(&p, n + 1);
        for full in partitions(n) {
            let k = full.multiplicity(1);
            let lambda = full.without_ones();
            for j in 0..n {
                let a = enumerate_over(
                    by_cycle_type(&perms, &full).filter(|p| Stat::Exc.eval(p) == j as u32),
                    &stats,
                );
                let fs = (0..=k)
                    .map(|i| Ok((i, q_lambda(&lambda.with_ones(k - i), j as u32)?)))
                    .collect::<Result<Vec<_>>>()?;
                let rhs = (&den * &nonstable_sum(&fs, j, n)).truncate(Var::P, n as i16);
                report.push(
                    Item::check("cycle-type", a == rhs, || neq(&a, &rhs))
                        .param("lambda", full.to_string())
                        .param("j", j),
                );
            }
        }
        for k in 0..=n {
            for j in 0..n {
                let a = enumerate_over(
                    perms
                        .iter()
                        .filter(|p| Stat::Exc.eval(p) == j as u32 && Stat::Fix.eval(p) == k as u32),
                    &stats,
                );
                let fs = (0..=k)
                    .map(|i| Ok((i, q_njk(n - i, j as u32, k - i)?)))
                    .collect::<Result<Vec<_>>>()?;
                let rhs = (&den * &nonstable_sum(&fs, j, n)).truncate(Var::P, n as i16);
                report.push(
                    Item::check("fixed-points", a == rhs, || neq(&a, &rhs))
                        .param("n", n)
                        .param("j", j)
                        .param("k", k),
                );
            }
        }
    }
    Ok(report)
}

/// The generating function Σ Q_{n,j,k} t^j r^k z^n in both closed forms, grade by grade in
/// the h basis.
pub fn verify_symmetric_generating_function(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("symmetric-generating-function");
    let quotient = generating_quotient(n_max)?;
    let geometric = generating_geometric(n_max)?;
    for n in 0..=n_max {
        let q = to_h(&q_n_tr(n)?)?;
        let a = quotient[n].to_basis(SymBasis::H)?;
        let b = geometric[n].to_basis(SymBasis::H)?;
        report.push(Item::check("quotient-form", q == a, || neq(&q, &a)).param("n", n));
        report.push(Item::check("geometric-form", q == b, || neq(&q, &b)).param("n", n));
        report.push(Item::check("forms-agree", a == b, || neq(&a, &b)).param("n", n));
    }
    Ok(report)
}

/// The composition formula, the recurrence in n, Q_{n,j,k} = h_k Q_{n−k,j,0}, and the
/// recurrence for Q_{n,j,0}.
pub fn verify_closed_form(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("closed-form");
    let rec = q_recurrence(n_max)?;
    for n in 0..=n_max {
        let def = to_h(&q_n_tr(n)?)?;
        let closed = q_closed_form(n)?;
        report.push(Item::check("composition-formula", def == closed, || neq(&def, &closed)).param("n", n));
        report.push(Item::check("recurrence", def == rec[n], || neq(&def, &rec[n])).param("n", n));
    }
    let q0 = |n: usize, j: usize| -> Result<SymElem> { to_h(&q_njk(n, j as u32, 0)?) };
    for n in 0..=n_max {
        for k in 0..=n {
            for j in 0..n.max(1) {
                let lhs = to_h(&q_njk(n, j as u32, k)?)?;
                let rhs = h(k).mul(&q0(n - k, j)?)?;
                report.push(
                    Item::check("fixed-point-factor", lhs == rhs, || neq(&lhs, &rhs))
                        .param("n", n)
                        .param("j", j)
                        .param("k", k),
                );
            }
        }
        if n >= 2 {
            for j in 0..n {
                let lhs = q0(n, j)?;
                let mut rhs = SymElem::zero(SymBasis::H);
                for m in 0..=n - 2 {
                    // j + m − n < i < j
                    let lo = (j + m + 1).saturating_sub(n);
                    for i in lo..j {
                        rhs = rhs.add(&q0(m, i)?.mul(&h(n - m))?)?;
                    }
                }
                report.push(
                    Item::check("derangement-recurrence", lhs == rhs, || neq(&lhs, &rhs))
                        .param("n", n)
                        .param("j", j),
                );
            }
        }
    }
    Ok(report)
}

/// Q_def, the ornament enumeration and the banner enumeration give the same polynomial in
/// x_1..x_n for every λ ⊢ n and every j.
pub fn verify_ornament_banner_agreement(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    let mut report = Report::new("ornament-banner-agreement");
    for n in 1..=n_max {
        let banners = banner_weights(n, n as u32);
        for lambda in partitions(n) {
            let orn = ornament_weights(&lambda, n as u32);
            for j in 0..n {
                let def = q_lambda(&lambda, j as u32)?.monomial_expansion(n)?;
                let o = orn.get(j).cloned().unwrap_or_else(|| MonoPoly::zero(n));
                let b = banners
                    .get(&(lambda.clone(), j))
                    .cloned()
                    .unwrap_or_else(|| MonoPoly::zero(n));
                let item = |id: &str, x: &MonoPoly, y: &MonoPoly| {
                    Item::check(id, x == y, || neq(x, y))
                        .param("lambda", lambda.to_string())
                        .param("j", j)
                };
                report.push(item("ornaments", &def, &o));
                report.push(item("banners", &def, &b));
            }
        }
    }
    Ok(report)
}

/// The coefficient of x_1⋯x_n in Q_{λ,j} counts permutations of type λ with j excedances;
/// for n-cycles that is an Eulerian number.
pub fn verify_dimensions(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, LAMBDA_CAP)?;
    let mut report = Report::new("dimensions");
    for n in 1..=n_max {
        let table = exc_table(n)?;
        let mut counts: BTreeMap<(Partition, u32), i64> = BTreeMap::new();
        for (l, j, _, c) in table.entries() {
            *counts.entry((l.clone(), j)).or_default() += c;
        }
        let top = vec![1u8; n];
        for lambda in partitions(n) {
            for j in 0..n as u32 {
                let q = q_lambda(&lambda, j)?;
                let dim = q.monomial_expansion(n)?.coeff(&top);
                let want = counts.get(&(lambda.clone(), j)).copied().unwrap_or(0);
                report.push(
                    Item::check("multilinear-coefficient", dim == want, || format!("{dim} vs {want}"))
                        .param("lambda", lambda.to_string())
                        .param("j", j),
                );
                if lambda.len() == 1 && j >= 1 {
                    let a = eulerian_numbers(n - 1)[j as usize - 1];
                    report.push(
                        Item::check("cycle-eulerian", dim == a, || format!("{dim} vs {a}"))
                            .param("n", n)
                            .param("j", j),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Σ_j Q_{n,j} t^j against its power-sum expansion.
pub fn verify_power_sum_expansion(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("power-sum-expansion");
    for n in 1..=n_max {
        let def = q_t_poly(n, None)?.to_basis(SymBasis::P)?;
        let ps = q_power_sum(n)?;
        report.push(Item::check("power-sums", def == ps, || neq(&def, &ps)).param("n", n));
    }
    Ok(report)
}

/// Character values of V_{(n),j} against the coefficients of G_λ(t). A conjecture: each n
/// is reported verified to bound or with the first counterexample. Classes with a fixed
/// point are a theorem and are also reported separately. Starts at n = 2: for n = 1,
/// G_(1) = t while Q_{(1),0} = h_1.
pub fn verify_character_conjecture(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, LAMBDA_CAP)?;
    let mut report = Report::new("character-conjecture");
    for n in 2..=n_max {
        let table = char_table(n)?;
        let mut bad = None;
        for (lambda, row) in &table.rows {
            let g = g_lambda(lambda);
            for (j, &v) in row.iter().enumerate() {
                let want = g.coeff_of(Var::T, j as i16);
                let ok = want == MPoly::from_int(v);
                if !ok && bad.is_none() {
                    bad = Some(format!("lambda={lambda} j={j}: character {v}, G gives {want}"));
                }
                if lambda.multiplicity(1) > 0 {
                    report.push(
                        Item::check("classes-with-fixed-points", ok, || format!("{v} vs {want}"))
                            .param("lambda", lambda.to_string())
                            .param("j", j),
                    );
                }
            }
        }
        let item = match bad {
            None => Item::new("conjecture", Status::VerifiedToBound),
            Some(w) => Item::new("conjecture", Status::Counterexample).with_witness(w),
        };
        report.push(item.param("n", n));
    }
    Ok(report)
}

/// Schur positivity of Q_{λ,j} and of Q_{λ,j} − Q_{λ,j−1} for 1 ≤ j ≤ (n−k)/2, for all
/// λ ⊢ n ≤ `all_max` and for λ = (n) with n ≤ `cycle_max`.
pub fn verify_schur_positivity_conjecture(all_max: usize, cycle_max: usize) -> Result<Report> {
    check_cap("n", all_max.max(cycle_max), LAMBDA_CAP)?;
    let mut report = Report::new("schur-positivity-conjecture");
    let top = all_max.max(cycle_max);
    for n in 1..=top {
        let types: Vec<Partition> = if n <= all_max {
            partitions(n)
        } else {
            vec![Partition::new(vec![n as u32])]
        };
        for lambda in types {
            let k = lambda.multiplicity(1);
            let qs = (0..n)
                .map(|j| to_h(&q_lambda(&lambda, j as u32)?)?.to_basis(SymBasis::S))
                .collect::<Result<Vec<SymElem>>>()?;
            let mut bad = None;
            for (j, q) in qs.iter().enumerate() {
                if !q.is_positive() {
                    bad = Some(format!("Q_{{{lambda},{j}}} = {q}"));
                    break;
                }
                if j >= 1 && 2 * j <= n - k {
                    let d = q.sub(&qs[j - 1])?;
                    if !d.is_positive() {
                        bad = Some(format!("Q_{{{lambda},{j}}} - Q_{{{lambda},{}}} = {d}", j - 1));
                        break;
                    }
                }
            }
            let item = match bad {
                None => Item::new("schur-unimodal", Status::VerifiedToBound),
                Some(w) => Item::new("schur-unimodal", Status::Counterexample).with_witness(w),
            };
            report.push(item.param("lambda", lambda.to_string()));
        }
    }
    Ok(report)
}

/// Σ_j Q_{λ,j} t^j = Π_i h_{m_i}[Σ_j Q_{(i),j} t^j], and its sum over λ ⊢ n.
pub fn verify_plethysm_formula(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("plethysm-formula");
    let mut cycles: Vec<SymElem> = vec![SymElem::one(SymBasis::H)];
    for i in 1..=n_max {
        cycles.push(to_h(&q_lambda_t(&Partition::new(vec![i as u32]))?)?);
    }
    for n in 1..=n_max {
        let mut total = SymElem::zero(SymBasis::H);
        for lambda in partitions(n) {
            let lhs = to_h(&q_lambda_t(&lambda)?)?;
            let mut rhs = SymElem::one(SymBasis::H);
            for (part, mult) in lambda.multiplicities() {
                rhs = rhs.mul(&SymElem::plethysm_h(mult as u32, &cycles[part as usize])?)?;
            }
            let rhs = rhs.to_basis(SymBasis::H)?;
            report.push(Item::check("cycle-type", lhs == rhs, || neq(&lhs, &rhs)).param("lambda", lambda.to_string()));
            total = total.add(&rhs)?;
        }
        let all = q_t_poly(n, None)?;
        report.push(Item::check("sum-over-types", all == total, || neq(&all, &total)).param("n", n));
    }
    Ok(report)
}

/// A^{maj,exc}_{(λ,μ)} = [m+n choose m]_q A_λ A_μ when λ and μ share no part.
pub fn verify_product_formula(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, LAMBDA_CAP)?;
    let mut report = Report::new("product-formula");
    let stats = [(Stat::Maj, Var::Q), (Stat::Exc, Var::T)];
    let mut a: BTreeMap<Partition, MPoly> = BTreeMap::new();
    for n in 0..=n_max {
        let perms: Vec<Permutation> = all_perms(n).collect();
        for lambda in partitions(n) {
            let v = enumerate_over(by_cycle_type(&perms, &lambda), &stats);
            a.insert(lambda, v);
        }
    }
    for (lambda, al) in &a {
        for (mu, am) in &a {
            let (m, n) = (lambda.size(), mu.size());
            if m == 0 || n == 0 || m + n > n_max || lambda > mu {
                continue;
            }
            if lambda.parts().iter().any(|p| mu.parts().contains(p)) {
                continue;
            }
            let lhs = &a[&lambda.union(mu)];
            let rhs = &(&gauss(m + n, m)? * al) * am;
            report.push(
                Item::check("disjoint-parts", lhs == &rhs, || neq(lhs, &rhs))
                    .param("lambda", lambda.to_string())
                    .param("mu", mu.to_string()),
            );
        }
    }
    Ok(report)
}

/// Q_{(2^a,1^b),a} = h_a[h_2] h_b, and the generating function over types with parts ≤ 2.
pub fn verify_involution_types(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("involution-types");
    for n in 0..=n_max {
        let mut series = SymElem::zero(SymBasis::H);
        let mut sum = SymElem::zero(SymBasis::H);
        for a in 0..=n / 2 {
            let b = n - 2 * a;
            let lambda = Partition::new([vec![2; a], vec![1; b]].concat());
            let pl = SymElem::plethysm_h(a as u32, &SymElem::h(2))?;
            let pl = if a == 0 { SymElem::one(SymBasis::H) } else { pl };
            let rhs = pl.mul(&h(b))?.to_basis(SymBasis::H)?;
            let lhs = to_h(&q_lambda(&lambda, a as u32)?)?;
            report.push(
                Item::check("plethysm", lhs == rhs, || neq(&lhs, &rhs))
                    .param("lambda", lambda.to_string()),
            );
            series = series.add(&rhs.scale(&t().pow(a as u32)))?;
            sum = sum.add(&to_h(&q_lambda_t(&lambda)?)?)?;
        }
        report.push(Item::check("generating-function", sum == series, || neq(&sum, &series)).param("n", n));
    }
    Ok(report)
}

/// Grade-by-grade series 1 / (1 − Σ_{i ≥ 2} c(i) e_i z^i) in the e basis.
fn e_geometric(order: usize, c: impl Fn(usize) -> MPoly) -> Result<Vec<SymElem>> {
    let mut den = vec![SymElem::one(SymBasis::E)];
    den.extend((1..=order).map(|i| {
        if i < 2 {
            SymElem::zero(SymBasis::E)
        } else {
            e(i).scale(&-&c(i))
        }
    }));
    let den = TruncatedSeries::from_coeffs(den, order);
    Ok(den.recip()?.coeffs().to_vec())
}

/// Distinct rearrangements of a sorted word.
fn rearrangements(sorted: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Weakly increasing words of length n over [m].
fn multisets(n: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, m: u32, lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=m {
            cur.push(v);
            rec(n, m, v, cur, out);
            cur.pop();
        }
    }
    rec(n, m, 1, &mut cur, &mut out);
    out
}

/// Multiset derangements: the generating function against direct enumeration of 2 × n
/// arrays, d_{n,j} = ωQ_{n,j,0}, and its two principal specializations.
pub fn verify_multiset_derangements(enum_max: usize, n_max: usize) -> Result<Report> {
    check_cap("n", enum_max.max(n_max), NJK_CAP)?;
    let mut report = Report::new("multiset-derangements");
    let d = e_geometric(enum_max.max(n_max), t_bracket)?;
    for n in 1..=enum_max {
        let mut by_j: Vec<MonoPoly> = vec![MonoPoly::zero(n); n];
        for top in multisets(n, n as u32) {
            for bottom in rearrangements(&top) {
                if top.iter().zip(&bottom).any(|(a, b)| a == b) {
                    continue;
                }
                let j = top.iter().zip(&bottom).filter(|(a, b)| a < b).count();
                by_j[j].add_word(top.iter().copied(), 1);
            }
        }
        for (j, direct) in by_j.iter().enumerate() {
            let series = monomials(&t_part(&d[n], j), n)?;
            report.push(
                Item::check("arrays", *direct == series, || neq(direct, &series))
                    .param("n", n)
                    .param("j", j),
            );
        }
    }
    for n in 1..=n_max {
        let perms: Vec<Permutation> = all_perms(n).filter(|p| Stat::Fix.eval(p) == 0).collect();
        for j in 0..n {
            let dj = t_part(&d[n], j).to_basis(SymBasis::H)?;
            let q = q_njk(n, j as u32, 0)?;
            let wq = to_h(&q)?.omega()?;
            report.push(
                Item::check("omega-q", dj == wq, || neq(&dj, &wq))
                    .param("n", n)
                    .param("j", j),
            );
            let fq = to_h(&q.omega())?;
            report.push(
                Item::check("complemented-exd", dj == fq, || neq(&dj, &fq))
                    .param("n", n)
                    .param("j", j),
            );
            let with_j: Vec<&Permutation> = perms.iter().filter(|p| Stat::Exc.eval(p) == j as u32).collect();
            let mut stable = MPoly::zero();
            let mut p_form = MPoly::zero();
            for p in &with_j {
                let c = (Stat::Comaj.eval(p) + j as u32) as i16;
                stable += &MPoly::term(1, &[(Var::Q, c)]);
                let pd = (n as u32 - Stat::Des.eval(p) + 1) as i16;
                p_form += &MPoly::term(1, &[(Var::Q, c), (Var::P, pd)]);
            }
            let dq = QSymElem::from_sym(&dj)?;
            let spec = dq.stable_spec_numerator()?;
            report.push(
                Item::check("stable-specialization", spec == stable, || neq(&spec, &stable))
                    .param("n", n)
                    .param("j", j),
            );
            let order = n + 1;
            let ps = (&pochhammer(&MPoly::var(Var::P), n + 1) * &dq.spec_p_series(order)).truncate(Var::P, order as i16);
            report.push(
                Item::check("p-specialization", ps == p_form, || neq(&ps, &p_form))
                    .param("n", n)
                    .param("j", j),
            );
        }
    }
    Ok(report)
}

/// Words with no equal adjacent letters: the descent generating function, Q_{n,j} = ωY_{n,j},
/// and Y_{n,j} = ω Σ wt(B) over banners with j bars.
pub fn verify_no_adjacent_repeats(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("no-adjacent-repeats");
    // (1 − t)E(z) / (E(zt) − tE(z))
    let e_series = |x: &MPoly| {
        TruncatedSeries::from_coeffs((0..=n_max).map(|k| e(k).scale(&x.pow(k as u32))).collect(), n_max)
    };
    let scalar = |c: MPoly| SymElem::constant(c, SymBasis::E);
    let num = e_series(&MPoly::one()).scale(&scalar(&MPoly::one() - &t()));
    let den = e_series(&t()).sub(&e_series(&MPoly::one()).scale(&scalar(t())));
    let rhs = num.div(&den)?;
    for n in 1..=n_max {
        let mut y: Vec<MonoPoly> = vec![MonoPoly::zero(n); n];
        for w in words(n, n as u32) {
            if w.windows(2).any(|p| p[0] == p[1]) {
                continue;
            }
            y[descents(&w)].add_word(w.iter().copied(), 1);
        }
        let banners = banner_weights(n, n as u32);
        let q = q_t_poly(n, None)?;
        for (j, yj) in y.iter().enumerate() {
            let series = monomials(&t_part(rhs.coeff(n), j), n)?;
            report.push(
                Item::check("generating-function", *yj == series, || neq(yj, &series))
                    .param("n", n)
                    .param("j", j),
            );
            let wq = monomials(&t_part(&q, j).omega()?, n)?;
            report.push(
                Item::check("omega-q", *yj == wq, || neq(yj, &wq))
                    .param("n", n)
                    .param("j", j),
            );
            let mut bw = MonoPoly::zero(n);
            for ((_, bars), w) in &banners {
                if *bars == j {
                    bw.add(w);
                }
            }
            let wb = monomials(&lift(&bw).omega()?, n)?;
            report.push(
                Item::check("banner-reciprocity", *yj == wb, || neq(yj, &wb))
                    .param("n", n)
                    .param("j", j),
            );
        }
    }
    Ok(report)
}

/// Words with no double descents and no final descent, weighted by t^des (1+t)^{n−1−2des},
/// against the generating function of the Q_{n,j}.
pub fn verify_gessel_words(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("gessel-words");
    for n in 1..=n_max {
        let mut by_j: Vec<MonoPoly> = vec![MonoPoly::zero(n); n];
        for w in words(n, n as u32) {
            let double = w.windows(3).any(|p| p[0] > p[1] && p[1] > p[2]);
            if double || (n >= 2 && w[n - 2] > w[n - 1]) {
                continue;
            }
            let d = descents(&w);
            let free = n - 1 - 2 * d;
            for i in 0..=free {
                let c = crate::combinatorics::binomial(free as u64, i as u64) as i64;
                by_j[d + i].add_word(w.iter().copied(), c);
            }
        }
        let q = q_t_poly(n, None)?;
        for (j, lhs) in by_j.iter().enumerate() {
            let rhs = monomials(&t_part(&q, j), n)?;
            report.push(
                Item::check("words", *lhs == rhs, || neq(lhs, &rhs))
                    .param("n", n)
                    .param("j", j),
            );
        }
    }
    Ok(report)
}

fn twice_center_ok(coeffs: &[SymElem], twice_center: usize) -> Result<(bool, bool)> {
    let get = |j: isize| -> SymElem {
        if j < 0 || j as usize >= coeffs.len() {
            SymElem::zero(SymBasis::H)
        } else {
            coeffs[j as usize].clone()
        }
    };
    let top = coeffs.len().max(twice_center + 1) as isize;
    let symmetric = (0..top).all(|j| get(j) == get(twice_center as isize - j));
    let mut unimodal = true;
    for j in 1..=(twice_center / 2) as isize {
        unimodal &= get(j).sub(&get(j - 1))?.to_basis(SymBasis::H)?.is_positive();
    }
    Ok((symmetric, unimodal))
}

/// h-positivity of Q_{n,j,k} and Q_{n,j}; t-symmetry and h-unimodality of their
/// t-generating polynomials with centers (n−k)/2 and (n−1)/2.
pub fn verify_h_positivity_unimodality(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("h-positivity-unimodality");
    for n in 1..=n_max {
        let g = to_h(&q_n_tr(n)?)?;
        let coeffs = |k: Option<usize>| -> Vec<SymElem> {
            let f = match k {
                Some(k) => g.map_coeffs(|c| c.coeff_of(Var::R, k as i16)),
                None => g.map_coeffs(|c| c.eval_var(Var::R, &int(1))),
            };
            (0..n).map(|j| t_part(&f, j)).collect()
        };
        for k in (0..=n).filter(|&k| k != n - 1) {
            let c = coeffs(Some(k));
            let pos = c.iter().all(SymElem::is_positive);
            let (sym, uni) = twice_center_ok(&c, n - k)?;
            let it = |id: &str, ok: bool| Item::check(id, ok, || format!("n={n} k={k}")).param("n", n).param("k", k);
            report.push(it("h-positive", pos));
            report.push(it("symmetric", sym));
            report.push(it("unimodal", uni));
        }
        let c = coeffs(None);
        let pos = c.iter().all(SymElem::is_positive);
        let (sym, uni) = twice_center_ok(&c, n - 1)?;
        let it = |id: &str, ok: bool| Item::check(id, ok, || format!("n={n}")).param("n", n);
        report.push(it("total-h-positive", pos));
        report.push(it("total-symmetric", sym));
        report.push(it("total-unimodal", uni));
    }
    Ok(report)
}

/// Q_{λ,j} is symmetric, Q_{λ,j} = Q_{λ,n−k−j}, and Q_{n,j} = Q_{n,n−1−j}.
pub fn verify_cycle_type_symmetry(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("cycle-type-symmetry");
    for n in 1..=n_max {
        for lambda in partitions(n) {
            let k = lambda.multiplicity(1);
            for j in 0..n {
                let q = q_lambda(&lambda, j as u32)?;
                report.push(
                    Item::check("symmetric-function", q.is_symmetric(), || q.to_string())
                        .param("lambda", lambda.to_string())
                        .param("j", j),
                );
                if j <= n - k {
                    let other = q_lambda(&lambda, (n - k - j) as u32)?;
                    report.push(
                        Item::check("bar-complement", q == other, || neq(&q, &other))
                            .param("lambda", lambda.to_string())
                            .param("j", j),
                    );
                }
            }
        }
        for j in 0..n {
            let a = q_nj(n, j as u32)?;
            let b = q_nj(n, (n - 1 - j) as u32)?;
            report.push(Item::check("exc-complement", a == b, || neq(&a, &b)).param("n", n).param("j", j));
        }
    }
    Ok(report)
}

/// Restricting V_{(n),j} to S_{n−1} gives Q_{n−1,j−1}: ∂/∂p_1 Q_{(n),j} = Q_{n−1,j−1}.
pub fn verify_restriction(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP + 1)?;
    let mut report = Report::new("restriction");
    for n in 2..=n_max {
        let cycle = Partition::new(vec![n as u32]);
        for j in 0..n {
            let lhs = to_h(&q_lambda(&cycle, j as u32)?)?.p1_derivative()?.to_basis(SymBasis::H)?;
            let rhs = if j == 0 {
                SymElem::zero(SymBasis::H)
            } else {
                to_h(&q_nj(n - 1, j as u32 - 1)?)?
            };
            report.push(Item::check("p1-derivative", lhs == rhs, || neq(&lhs, &rhs)).param("n", n).param("j", j));
        }
    }
    Ok(report)
}

/// The top homology of B_n⁻ ∗ C_n as an alternating sum over ranks:
/// Σ_m (−1)^{n−m} ω(Σ_j Q_{m,j}) h_{n−m} = ω Σ_j Q_{n,j,0} = Σ_j d_{n,j}, the last being the
/// t = 1 multiset derangement series 1/(1 − Σ (i−1) e_i z^i).
pub fn verify_rees_derangement_characteristic(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, NJK_CAP)?;
    let mut report = Report::new("rees-derangement-characteristic");
    let d = e_geometric(n_max, |i| MPoly::from_int(i as i64 - 1))?;
    let totals = (0..=n_max)
        .map(|m| Ok(q_t_poly(m, None)?.map_coeffs(|c| c.eval_var(Var::T, &int(1))).omega()?))
        .collect::<Result<Vec<SymElem>>>()?;
    for n in 1..=n_max {
        let mut alt = SymElem::zero(SymBasis::H);
        for m in 0..=n {
            let sign = if (n - m) % 2 == 0 { 1 } else { -1 };
            alt = alt.add(&totals[m].mul(&h(n - m))?.scale(&MPoly::from_int(sign)))?;
        }
        let alt = alt.to_basis(SymBasis::H)?;
        let q0 = q_t_poly(n, Some(0))?.map_coeffs(|c| c.eval_var(Var::T, &int(1))).omega()?;
        let dn = d[n].to_basis(SymBasis::H)?;
        report.push(Item::check("alternating-sum", alt == q0, || neq(&alt, &q0)).param("n", n));
        report.push(Item::check("derangement-series", q0 == dn, || neq(&q0, &dn)).param("n", n));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(r: Result<Report>) {
        let r = r.unwrap();
        assert!(r.all_ok(), "{r}");
    }

    #[test]
    fn generating_function_small() {
        ok(verify_symmetric_generating_function(5));
        ok(verify_closed_form(5));
        ok(verify_stable_specialization(5));
    }

    #[test]
    fn specializations_small() {
        ok(verify_nonstable_specialization(4));
    }

    #[test]
    fn enumerative_routes_small() {
        ok(verify_ornament_banner_agreement(4));
        ok(verify_dimensions(5));
        ok(verify_power_sum_expansion(5));
    }

    #[test]
    fn conjectures_small() {
        let r = verify_character_conjecture(6).unwrap();
        assert!(r.all_ok(), "{r}");
        assert!(r.items.iter().any(|i| i.status == Status::VerifiedToBound));
        ok(verify_schur_positivity_conjecture(5, 6));
    }

    #[test]
    fn identity_items_small() {
        ok(verify_plethysm_formula(5));
        ok(verify_product_formula(5));
        ok(verify_involution_types(5));
        ok(verify_multiset_derangements(3, 4));
        ok(verify_no_adjacent_repeats(4));
        ok(verify_gessel_words(4));
        ok(verify_h_positivity_unimodality(5));
        ok(verify_cycle_type_symmetry(5));
        ok(verify_restriction(5));
        ok(verify_rees_derangement_characteristic(5));
    }

    #[test]
    fn lift_reads_partition_monomials() {
        let mut f = MonoPoly::zero(2);
        for w in [[1, 1], [1, 2], [2, 2]] {
            f.add_word(w, 1);
        }
        assert_eq!(lift(&f).to_basis(SymBasis::H).unwrap(), SymElem::h(2));
        assert_eq!(words(2, 3).count(), 9);
        assert_eq!(rearrangements(&[1, 1, 2]).len(), 3);
    }
}
