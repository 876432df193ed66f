//! Exhaustive round-trip and invariant checks for the bijections and involutions.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_integer::Integer;

use super::banner::{enumerate_banners, enumerate_marked, gamma, gamma_inverse, Banner};
use super::involution::{involution_complement, involution_value_swap};
use super::necklace::{cmp_periodic, enumerate_necklaces, enumerate_ornaments, gr_eta, gr_phi, Ornament, ORDER};
use crate::combinatorics::{all_perms, compatible_sequences, exc, partitions, BicolorLetter};
use crate::error::{check_cap, Result};
use crate::report::{Item, Report};

fn sorted_values(v: impl Iterator<Item = u32>) -> Vec<u32> {
    let mut v: Vec<u32> = v.collect();
    v.sort_unstable();
    v
}

fn no_singletons(b: &Banner) -> bool {
    !b.lyndon_type().parts().contains(&1)
}

/// η∘φ = id on (σ, s) with n ≤ n_max and values ≤ m; φ records exc(σ) bars and the cycle
/// type; φ∘η = id on ornaments of size ≤ orn_max with values ≤ orn_m.
pub fn verify_gr_round_trip(n_max: usize, m: u32, orn_max: usize, orn_m: u32) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    check_cap("n", orn_max, 7)?;
    check_cap("m", m.max(orn_m) as usize, 9)?;
    let mut report = Report::new("gr-round-trip");
    for n in 0..=n_max {
        let (mut round, mut stats, mut count) = (true, true, 0usize);
        let mut witness = String::new();
        for p in all_perms(n) {
            for s in compatible_sequences(&p, m) {
                count += 1;
                let r = gr_phi(&p, &s)?;
                if r.bars() != exc(&p) as usize || r.cycle_type() != p.cycle_type() {
                    stats = false;
                    witness = format!("{p} {s:?}");
                }
                if gr_eta(&r) != (p.clone(), s.clone()) {
                    round = false;
                    witness = format!("{p} {s:?}");
                }
            }
        }
        report.push(Item::check("eta-phi", round, || witness.clone()).param("n", n).param("pairs", count));
        report.push(Item::check("phi-bars-type", stats, || witness.clone()).param("n", n));
    }
    for n in 1..=orn_max {
        let mut ok = true;
        let mut witness = String::new();
        let mut count = 0usize;
        for lambda in partitions(n) {
            for r in enumerate_ornaments(&lambda, orn_m) {
                count += 1;
                let (p, s) = gr_eta(&r);
                if gr_phi(&p, &s).ok().as_ref() != Some(&r) {
                    ok = false;
                    witness = r.to_string();
                }
            }
        }
        report.push(Item::check("phi-eta", ok, || witness.clone()).param("n", n).param("ornaments", count));
    }
    Ok(report)
}

/// Banner → ornament → banner and ornament → banner → ornament are identities preserving
/// type, bars and weight, for length ≤ n_max and values ≤ m.
pub fn verify_banner_ornament(n_max: usize, m: u32) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    check_cap("m", m as usize, 9)?;
    let mut report = Report::new("banner-ornament");
    for n in 0..=n_max {
        let mut ok = true;
        let mut witness = String::new();
        for b in enumerate_banners(n, m) {
            let r = b.to_ornament();
            let kept = r.cycle_type() == b.lyndon_type()
                && r.bars() == b.bars()
                && sorted_values(r.values()) == sorted_values(b.values());
            if !kept || Banner::from_ornament(&r) != b {
                ok = false;
                witness = b.to_string();
            }
        }
        report.push(Item::check("banner-to-ornament", ok, || witness.clone()).param("n", n));
        let mut ok = true;
        for lambda in partitions(n) {
            for r in enumerate_ornaments(&lambda, m) {
                if Banner::from_ornament(&r).to_ornament() != r {
                    ok = false;
                    witness = r.to_string();
                }
            }
        }
        report.push(Item::check("ornament-to-banner", ok, || witness.clone()).param("n", n));
    }
    Ok(report)
}

/// γ on banners without singleton Lyndon factors, 2 ≤ n ≤ n_max, values ≤ m: weight and bar
/// equations, γ⁻¹∘γ = id, and both sides of the recurrence have the same size. Also checks
/// that an increasing factorization exists exactly when there is no singleton factor.
pub fn verify_gamma(n_max: usize, m: u32) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    check_cap("m", m as usize, 9)?;
    let mut report = Report::new("gamma-recurrence");
    for n in 1..=n_max {
        let all = enumerate_banners(n, m);
        let factor_ok = all.iter().all(|b| b.increasing_factorization().is_some() == no_singletons(b));
        report.push(Item::check("increasing-factorization", factor_ok, String::new).param("n", n));
        if n < 2 {
            continue;
        }
        let domain: Vec<&Banner> = all.iter().filter(|b| no_singletons(b)).collect();
        let mut images = HashSet::new();
        let mut ok = true;
        let mut witness = String::new();
        for b in &domain {
            let (bp, ms) = gamma(b)?;
            let mut joined: Vec<u32> = bp.values().chain(ms.omega().iter().copied()).collect();
            joined.sort_unstable();
            let good = bp.len() + ms.len() == n
                && bp.bars() + ms.mark() == b.bars()
                && joined == sorted_values(b.values())
                && no_singletons(&bp)
                && gamma_inverse(&bp, &ms).ok().as_ref() == Some(*b);
            if !good {
                ok = false;
                witness = b.to_string();
            }
            images.insert((bp, ms));
        }
        let codomain: usize = (0..=n - 2)
            .map(|k| enumerate_banners(k, m).iter().filter(|b| no_singletons(b)).count() * enumerate_marked(n - k, m).len())
            .sum();
        report.push(Item::check("gamma-invariants", ok, || witness.clone()).param("n", n));
        report.push(
            Item::check("gamma-bijective", images.len() == domain.len() && codomain == domain.len(), || {
                format!("domain {}, images {}, codomain {codomain}", domain.len(), images.len())
            })
            .param("n", n),
        );
    }
    Ok(report)
}

/// The value-swap involution ψ and the complement involution γ on ornaments of size ≤ n_max
/// with values ≤ m, and the banner complement τ.
pub fn verify_involutions(n_max: usize, m: u32) -> Result<Report> {
    check_cap("n", n_max, 7)?;
    check_cap("m", m as usize, 9)?;
    let mut report = Report::new("involutions");
    for n in 1..=n_max {
        for lambda in partitions(n) {
            let k1 = lambda.multiplicity(1);
            let set = enumerate_ornaments(&lambda, m);
            let members: HashSet<&Ornament> = set.iter().collect();
            let mut comp_ok = true;
            let mut swap_ok = true;
            let mut witness = String::new();
            for r in &set {
                let c = involution_complement(r);
                if involution_complement(&c) != *r || c.bars() != n - k1 - r.bars() || c.cycle_type() != lambda {
                    comp_ok = false;
                    witness = r.to_string();
                }
                for k in 1..m {
                    let s = involution_value_swap(r, k);
                    let count = |o: &Ornament, v| o.values().filter(|&x| x == v).count();
                    let good = involution_value_swap(&s, k) == *r
                        && s.bars() == r.bars()
                        && members.contains(&s)
                        && count(&s, k) == count(r, k + 1)
                        && count(&s, k + 1) == count(r, k)
                        && (1..=m).filter(|&v| v != k && v != k + 1).all(|v| count(&s, v) == count(r, v));
                    if !good {
                        swap_ok = false;
                        witness = format!("{r} k={k}");
                    }
                }
            }
            let it = |id: &str, ok: bool| Item::check(id, ok, || witness.clone()).param("lambda", lambda.to_string());
            report.push(it("complement", comp_ok));
            report.push(it("value-swap", swap_ok));
        }
        let mut ok = true;
        let mut witness = String::new();
        for b in enumerate_banners(n, m) {
            let t = b.complement();
            if Banner::new(t.letters().to_vec()).is_err() || t.bars() != n - 1 - b.bars() || t.complement() != b {
                ok = false;
                witness = b.to_string();
            }
        }
        report.push(Item::check("banner-complement", ok, || witness.clone()).param("n", n));
    }
    Ok(report)
}

fn cmp_full(u: &[BicolorLetter], i: usize, v: &[BicolorLetter], j: usize) -> Ordering {
    let len = u.len().lcm(&v.len());
    for t in 0..len {
        match ORDER.cmp(&u[(i + t) % u.len()], &v[(j + t) % v.len()]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// The truncated comparison of periodic readings agrees with the comparison over a full
/// common period, for all positions in all pairs of necklaces of size ≤ n_max, values ≤ m.
pub fn verify_periodic_comparison(n_max: usize, m: u32) -> Result<Report> {
    check_cap("n", n_max, 6)?;
    check_cap("m", m as usize, 9)?;
    let mut report = Report::new("periodic-comparison");
    let all: Vec<_> = (1..=n_max).flat_map(|k| enumerate_necklaces(k, m)).collect();
    let mut ok = true;
    let mut witness = String::new();
    'outer: for a in &all {
        for b in &all {
            let (u, v) = (a.letters(), b.letters());
            for i in 0..u.len() {
                for j in 0..v.len() {
                    if cmp_periodic(u, i, v, j) != cmp_full(u, i, v, j) {
                        ok = false;
                        witness = format!("{a} at {i}, {b} at {j}");
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push(Item::check("truncation-safe", ok, || witness.clone()).param("necklaces", all.len()).param("m", m));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        assert!(verify_gr_round_trip(4, 4, 4, 3).unwrap().all_ok());
        assert!(verify_banner_ornament(4, 3).unwrap().all_ok());
        assert!(verify_gamma(5, 3).unwrap().all_ok());
        assert!(verify_involutions(4, 3).unwrap().all_ok());
        assert!(verify_periodic_comparison(4, 2).unwrap().all_ok());
    }
}
