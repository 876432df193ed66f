use super::mpoly::{int, Exps, MPoly, Var, NVARS};
use crate::combinatorics::{all_perms, Permutation, Stat};
use crate::error::{check_cap, Result, DEFAULT_PERM_CAP};

/// Σ_σ Π v_i^{f_i(σ)} over the given permutations.
pub fn enumerate_over<'a>(
    perms: impl IntoIterator<Item = &'a Permutation>,
    stats: &[(Stat, Var)],
) -> MPoly {
    let mut counts: std::collections::HashMap<Exps, i64> = std::collections::HashMap::new();
    for p in perms {
        *counts.entry(exps_of(p, stats)).or_default() += 1;
    }
    collect(counts)
}

fn exps_of(p: &Permutation, stats: &[(Stat, Var)]) -> Exps {
    let mut e = [0i16; NVARS];
    for &(s, v) in stats {
        e[v as usize] += s.eval(p) as i16;
    }
    e
}

fn collect(counts: std::collections::HashMap<Exps, i64>) -> MPoly {
    let mut out = MPoly::zero();
    for (e, c) in counts {
        out.add_term(e, int(c));
    }
    out
}

/// A_n^{f_1,…,f_k}(v_1,…,v_k) = Σ_{σ∈S_n} Π v_i^{f_i(σ)}; A_0 = 1.
pub fn joint_enumerator(n: usize, stats: &[(Stat, Var)]) -> Result<MPoly> {
    check_cap("n", n, DEFAULT_PERM_CAP)?;
    Ok(joint_enumerator_filtered(n, stats, |_| true))
}

pub(crate) fn joint_enumerator_filtered(
    n: usize,
    stats: &[(Stat, Var)],
    keep: impl Fn(&Permutation) -> bool,
) -> MPoly {
    let mut counts = std::collections::HashMap::new();
    for p in all_perms(n).filter(|p| keep(p)) {
        *counts.entry(exps_of(&p, stats)).or_default() += 1;
    }
    collect(counts)
}

/// The Eulerian polynomial A_n(t) = Σ t^{des}.
pub fn eulerian_poly(n: usize) -> MPoly {
    joint_enumerator_filtered(n, &[(Stat::Des, Var::T)], |_| true)
}

/// Eulerian numbers a_{n,j}, j = 0..n−1 (a single 1 for n = 0).
pub fn eulerian_numbers(n: usize) -> Vec<i64> {
    let a = eulerian_poly(n);
    let len = n.max(1);
    (0..len)
        .map(|j| {
            let mut e = [0; NVARS];
            e[Var::T as usize] = j as i16;
            a.coeff(&e).to_integer().try_into().unwrap_or(0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qanalog::q_fact;

    #[test]
    fn a0_is_one() {
        assert!(joint_enumerator(0, &[(Stat::Maj, Var::Q)]).unwrap().is_one());
    }

    #[test]
    fn mahonian() {
        for n in 0..=7 {
            let maj = joint_enumerator(n, &[(Stat::Maj, Var::Q)]).unwrap();
            let inv = joint_enumerator(n, &[(Stat::Inv, Var::Q)]).unwrap();
            assert_eq!(maj, q_fact(n));
            assert_eq!(inv, q_fact(n));
        }
    }

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian_numbers(3), vec![1, 4, 1]);
        assert_eq!(eulerian_numbers(4), vec![1, 11, 11, 1]);
        for n in 0..=7 {
            let d = joint_enumerator(n, &[(Stat::Des, Var::T)]).unwrap();
            let e = joint_enumerator(n, &[(Stat::Exc, Var::T)]).unwrap();
            assert_eq!(d, e);
        }
    }

    #[test]
    fn a3_maj_exc_brute_force() {
        // 123:1, 132: maj 2 exc 1, 213: maj 1 exc 1, 231: maj 2 exc 2, 312: maj 1 exc 1, 321: maj 3 exc 1
        let a3 = joint_enumerator(3, &[(Stat::Maj, Var::Q), (Stat::Exc, Var::T)]).unwrap();
        let expect = MPoly::one()
            + MPoly::term(1, &[(Var::Q, 2), (Var::T, 1)])
            + MPoly::term(2, &[(Var::Q, 1), (Var::T, 1)])
            + MPoly::term(1, &[(Var::Q, 2), (Var::T, 2)])
            + MPoly::term(1, &[(Var::Q, 3), (Var::T, 1)]);
        assert_eq!(a3, expect);
    }
}
