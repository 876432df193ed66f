//! Verification suites for the shelling machinery.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{aid, ascent_free_chains, barred_set, barred_set_over, phi_map, psi_map};
use crate::combinatorics::{
    admissible_inversions, all_perms, binomial, comaj, des, exc, inversions, maj, Permutation,
};
use crate::error::{check_cap, Result};
use crate::poly::{gauss, int, q_fact, MPoly, Var};
use crate::poset::{boolean, subspace_lattice, FqVectorConfig};
use crate::report::{Item, Report};

fn qt(a: u32, b: u32) -> MPoly {
    MPoly::term(1, &[(Var::Q, a as i16), (Var::T, b as i16)])
}

fn q_pow(e: u32) -> MPoly {
    qt(e, 0)
}

fn eulerian_row(n: usize) -> Vec<u64> {
    let mut a = vec![0u64; n.max(1)];
    for p in all_perms(n) {
        a[exc(&p) as usize] += 1;
    }
    a
}

/// Ascent-free chain count, |𝔅_{n,j−1}|, a_{n,j−1} and |μ(Î_j(B_n))|, all computed separately.
/// The Möbius comparison runs for n ≤ `mu_max`.
pub fn verify_ascent_free_chains(n_max: usize, mu_max: usize) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    check_cap("n", mu_max, 6)?;
    let mut report = Report::new("ascent-free-chains");
    for n in 1..=n_max {
        let a = eulerian_row(n);
        let b = (n <= mu_max).then(|| boolean(n)).transpose()?;
        for j in 1..=n {
            let chains = ascent_free_chains(n, j)?;
            let barred = barred_set(n, j - 1)?.len() as u64;
            let want = a[j - 1];
            let it = |id: &str, ok: bool, w: String| Item::check(id, ok, || w).param("n", n).param("j", j);
            report.push(it(
                "chains-barred-eulerian",
                chains == barred && barred == want,
                format!("chains {chains}, barred {barred}, a_(n,j-1) {want}"),
            ));
            if let Some(b) = &b {
                let mu = b.ideal_i_j(j)?.mu_hat();
                report.push(it(
                    "chains-mobius",
                    mu.unsigned_abs() == chains,
                    format!("mu {mu}, chains {chains}"),
                ));
            }
        }
    }
    Ok(report)
}

/// φ is a bijection 𝔅_{n,j} → {σ : des σ = j} with inverse ψ, and inv(|σ^B|) = C(n,2) − ai(φ σ^B).
/// Also runs on `random` value sets X ⊂ [30] of size ≤ 6.
pub fn verify_phi_bijection(n_max: usize, random: usize, seed: u64) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    let mut report = Report::new("phi-bijection");
    for n in 1..=n_max {
        let c2 = binomial(n as u64, 2) as u32;
        let mut by_des = vec![0usize; n];
        for p in all_perms(n) {
            by_des[des(&p) as usize] += 1;
        }
        let mut lemma_inv = true;
        let mut round_trip = true;
        let mut witness = String::new();
        for j in 0..n {
            let set = barred_set(n, j)?;
            let mut image = HashSet::new();
            let mut des_ok = true;
            for w in &set {
                let s = phi_map(w)?;
                des_ok &= Permutation::new(s.clone()).is_ok_and(|p| des(&p) as usize == j);
                if inversions(&w.values()) != c2 - admissible_inversions(&s) {
                    lemma_inv = false;
                    witness = format!("{w}");
                }
                if psi_map(&s)? != *w {
                    round_trip = false;
                    witness = format!("{w}");
                }
                image.insert(s);
            }
            report.push(
                Item::check("des-equals-bars", des_ok, || "φ changes the count".into())
                    .param("n", n)
                    .param("j", j),
            );
            let bij = image.len() == set.len() && set.len() == by_des[j];
            report.push(
                Item::check("bijection", bij, || {
                    format!("|B| {}, image {}, des class {}", set.len(), image.len(), by_des[j])
                })
                .param("n", n)
                .param("j", j),
            );
        }
        let back = all_perms(n).all(|p| {
            psi_map(p.one_line()).and_then(|w| phi_map(&w)).is_ok_and(|s| s == p.one_line())
        });
        report.push(Item::check("inversion-lemma", lemma_inv, || witness.clone()).param("n", n));
        report.push(Item::check("psi-phi", round_trip, || witness.clone()).param("n", n));
        report.push(Item::check("phi-psi", back, || "φ∘ψ is not the identity".into()).param("n", n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<u32> = (1..=30).collect();
    for i in 0..random {
        let size = 1 + i % 6;
        let x: Vec<u32> = pool.choose_multiple(&mut rng, size).copied().collect();
        let c2 = binomial(size as u64, 2) as u32;
        let mut ok = true;
        let mut total = 0;
        for bars in 0..size {
            for w in barred_set_over(&x, bars)? {
                total += 1;
                let s = phi_map(&w)?;
                let mut sorted_s = s.clone();
                sorted_s.sort_unstable();
                let mut sorted_x = x.clone();
                sorted_x.sort_unstable();
                let d = s.windows(2).filter(|p| p[0] > p[1]).count();
                ok &= sorted_s == sorted_x
                    && d == bars
                    && psi_map(&s)? == w
                    && inversions(&w.values()) == c2 - admissible_inversions(&s);
            }
        }
        let fact = (1..=size as u64).product::<u64>();
        report.push(
            Item::check("random-value-set", ok && total == fact, || format!("X = {x:?}, {total} words"))
                .param("x", format!("{x:?}"))
                .param("seed", seed),
        );
    }
    Ok(report)
}

/// Σ q^aid t^des = Σ q^maj t^exc; for each j the inv-sum over 𝔅_{n,j−1}, the ai-sum over
/// des = j − 1 and Σ q^{comaj+j−1} over exc = j − 1 agree; at q = 2 they equal |μ(Î_j(B_n(2)))|
/// for n ≤ `q2_max`.
pub fn verify_equidist(n_max: usize, q2_max: usize) -> Result<Report> {
    check_cap("n", n_max, 8)?;
    check_cap("n", q2_max, 4)?;
    let mut report = Report::new("equidistribution");
    for n in 1..=n_max {
        let c2 = binomial(n as u64, 2) as u32;
        let mut aid_des = MPoly::zero();
        let mut maj_exc = MPoly::zero();
        let mut by_ai = vec![MPoly::zero(); n];
        let mut by_exc = vec![MPoly::zero(); n];
        for p in all_perms(n) {
            let (d, e) = (des(&p), exc(&p));
            aid_des += &qt(aid(&p), d);
            maj_exc += &qt(maj(&p), e);
            by_ai[d as usize] += &q_pow(c2 - admissible_inversions(p.one_line()));
            by_exc[e as usize] += &q_pow(comaj(&p) + e);
        }
        let ok = aid_des == maj_exc;
        report.push(Item::check("joint-distribution", ok, || format!("{aid_des} vs {maj_exc}")).param("n", n));
        let sub = if n <= q2_max { Some(subspace_lattice(&FqVectorConfig::new(2, n))?) } else { None };
        for j in 1..=n {
            let mut by_inv = MPoly::zero();
            for w in barred_set(n, j - 1)? {
                by_inv += &q_pow(inversions(&w.values()));
            }
            let it = |id: &str, ok: bool, w: String| Item::check(id, ok, || w).param("n", n).param("j", j);
            report.push(it(
                "barred-inv-sum",
                by_inv == by_exc[j - 1],
                format!("{by_inv} vs {}", by_exc[j - 1]),
            ));
            report.push(it(
                "ai-sum",
                by_ai[j - 1] == by_exc[j - 1],
                format!("{} vs {}", by_ai[j - 1], by_exc[j - 1]),
            ));
            if let Some(b) = &sub {
                let mu = b.ideal_i_j(j)?.mu_hat();
                let at2 = by_inv.eval_var(Var::Q, &int(2)).as_i64().expect("integer");
                report.push(it("mobius-at-q2", mu.abs() == at2, format!("mu {mu}, sum at q=2 {at2}")));
            }
        }
    }
    Ok(report)
}

/// F_n(q) = Σ q^aid = [n]_q!, with the position-of-1 recurrence checked term by term.
pub fn verify_aid_mahonian(n_max: usize) -> Result<Report> {
    check_cap("n", n_max, 8)?;
    let mut report = Report::new("aid-mahonian");
    let mut f: Vec<MPoly> = vec![MPoly::one()];
    for n in 1..=n_max {
        let mut total = MPoly::zero();
        let mut at = vec![MPoly::zero(); n + 1];
        for p in all_perms(n) {
            let a = q_pow(aid(&p));
            total += &a;
            let pos = p.inverse().at(1) as usize;
            at[pos] += &a;
        }
        report.push(Item::check("q-factorial", total == q_fact(n), || format!("{total}")).param("n", n));
        for j in 1..=n {
            let want = if j == 1 {
                f[n - 1].clone()
            } else if j == n {
                &q_pow(1) * &f[n - 1]
            } else {
                &(&gauss(n - 1, j - 1)? * &q_pow(j as u32)) * &(&f[j - 1] * &f[n - j])
            };
            report.push(
                Item::check("position-of-one", at[j] == want, || format!("{} vs {want}", at[j]))
                    .param("n", n)
                    .param("j", j),
            );
        }
        if n >= 2 {
            let mut rec = &(&MPoly::one() + &q_pow(1)) * &f[n - 1];
            for j in 2..n {
                rec += &(&(&gauss(n - 1, j - 1)? * &q_pow(j as u32)) * &(&f[j - 1] * &f[n - j]));
            }
            report.push(Item::check("recurrence", rec == total, || format!("{rec}")).param("n", n));
        }
        f.push(total);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        assert!(verify_ascent_free_chains(5, 4).unwrap().all_ok());
        assert!(verify_phi_bijection(5, 6, 1).unwrap().all_ok());
        assert!(verify_equidist(5, 3).unwrap().all_ok());
        assert!(verify_aid_mahonian(6).unwrap().all_ok());
    }
}
