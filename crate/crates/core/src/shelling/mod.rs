//! The edge labeling λ⁺ of Î_j(B_n), its ascent-free maximal chains, the barred permutation
//! sets 𝔅_X, the recursive bijection φ: 𝔅_X → 𝔖_X with inverse ψ, and the statistic aid.
//!
//! A maximal chain of Î_j(B_n) is encoded as (σ, d): σ ∈ 𝔖_n lists the element added at each
//! step and d ∈ {0,1}^n records whether the chain coordinate went up, with d_1 = 0 and j − 1
//! ones. Chains are never built as poset objects.

mod suites;

use crate::combinatorics::{admissible_inversions, all_perms, des, BarredPermutation, BicolorLetter, Permutation};
use crate::error::{check_cap, invalid, Result};

pub use suites::*;

/// λ⁺ on the chain (σ, d): the i-th label is (σ(i), d_i).
pub fn lambda_plus(sigma: &Permutation, d: &[u8]) -> Vec<(u32, u8)> {
    sigma.one_line().iter().copied().zip(d.iter().copied()).collect()
}

/// Labels are ordered componentwise in L × {0 < 1}; an ascent is a strict increase.
fn is_ascent(a: (u32, u8), b: (u32, u8)) -> bool {
    a != b && a.0 <= b.0 && a.1 <= b.1
}

pub fn is_ascent_free(labels: &[(u32, u8)]) -> bool {
    labels.windows(2).all(|w| !is_ascent(w[0], w[1]))
}

/// All d ∈ {0,1}^n with d_1 = 0 and exactly k ones.
fn bar_vectors(n: usize, k: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    (0u32..1 << (n - 1))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| {
            let mut d = vec![0u8];
            d.extend((0..n - 1).map(|i| (m >> i & 1) as u8));
            d
        })
        .collect()
}

/// Number of ascent-free maximal chains of Î_j(B_n) under λ⁺, for j ∈ [n].
pub fn ascent_free_chains(n: usize, j: usize) -> Result<u64> {
    check_cap("n", n, 7)?;
    if j == 0 || j > n {
        return invalid(format!("j = {j} is outside 1..={n}"));
    }
    let ds = bar_vectors(n, j - 1);
    let mut count = 0;
    for sigma in all_perms(n) {
        count += ds.iter().filter(|d| is_ascent_free(&lambda_plus(&sigma, d))).count() as u64;
    }
    Ok(count)
}

/// Conditions (B) and (C): the first letter is unbarred, and every ascent |w|(i) < |w|(i+1)
/// has w(i) barred and w(i+1) unbarred.
pub fn in_barred_set(w: &BarredPermutation) -> bool {
    let l = w.letters();
    l.first().is_none_or(|a| !a.barred)
        && l.windows(2).all(|p| p[0].value > p[1].value || (p[0].barred && !p[1].barred))
}

/// 𝔅_X restricted to words with `bars` barred letters, for X the given values.
pub fn barred_set_over(values: &[u32], bars: usize) -> Result<Vec<BarredPermutation>> {
    let n = values.len();
    check_cap("|X|", n, 8)?;
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let ds = bar_vectors(n, bars);
    let mut out = Vec::new();
    for p in all_perms(n) {
        let word: Vec<u32> = p.one_line().iter().map(|&i| sorted[i as usize - 1]).collect();
        for d in &ds {
            let b: Vec<bool> = d.iter().map(|&x| x == 1).collect();
            let w = BarredPermutation::from_parts(&word, &b)?;
            if in_barred_set(&w) {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// 𝔅_{n,j}: barred permutations of [n] with j bars satisfying (B) and (C).
pub fn barred_set(n: usize, j: usize) -> Result<Vec<BarredPermutation>> {
    check_cap("n", n, 8)?;
    if n > 0 && j >= n {
        return invalid(format!("j = {j} must be below n = {n}"));
    }
    barred_set_over(&(1..=n as u32).collect::<Vec<_>>(), j)
}

fn phi_rec(w: &[BicolorLetter], out: &mut Vec<u32>) {
    let Some(k) = (0..w.len()).min_by_key(|&i| w[i].value) else {
        return;
    };
    let m = w[k].value;
    if !w[k].barred {
        // α·m
        out.push(m);
        phi_rec(&w[..k], out);
    } else if k + 1 == w.len() {
        // α·m̄
        phi_rec(&w[..k], out);
        out.push(m);
    } else {
        // α·m̄·β
        phi_rec(&w[k + 1..], out);
        out.push(m);
        phi_rec(&w[..k], out);
    }
}

/// φ(σ^B), a word on the same values. Fails unless σ^B ∈ 𝔅_X.
pub fn phi_map(w: &BarredPermutation) -> Result<Vec<u32>> {
    if !in_barred_set(w) {
        return invalid(format!("{w} violates the first-letter or ascent condition"));
    }
    let mut out = Vec::with_capacity(w.len());
    phi_rec(w.letters(), &mut out);
    Ok(out)
}

fn psi_rec(s: &[u32], out: &mut Vec<BicolorLetter>) {
    let Some(k) = (0..s.len()).min_by_key(|&i| s[i]) else {
        return;
    };
    let m = s[k];
    if k == 0 {
        // m·δ
        psi_rec(&s[1..], out);
        out.push(BicolorLetter::plain(m));
    } else if k + 1 == s.len() {
        // γ·m
        psi_rec(&s[..k], out);
        out.push(BicolorLetter::bar(m));
    } else {
        // γ·m·δ
        psi_rec(&s[k + 1..], out);
        out.push(BicolorLetter::bar(m));
        psi_rec(&s[..k], out);
    }
}

/// ψ = φ⁻¹ on a word of distinct letters.
pub fn psi_map(s: &[u32]) -> Result<BarredPermutation> {
    let mut out = Vec::with_capacity(s.len());
    psi_rec(s, &mut out);
    BarredPermutation::new(out)
}

/// aid(σ) = ai(σ) + des(σ).
pub fn aid(p: &Permutation) -> u32 {
    admissible_inversions(p.one_line()) + des(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> BarredPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_chain_counts() {
        let row: Vec<u64> = (1..=3).map(|j| ascent_free_chains(3, j).unwrap()).collect();
        assert_eq!(row, [1, 4, 1]);
        assert_eq!(ascent_free_chains(4, 2).unwrap(), 11);
        for n in 1..=6 {
            assert_eq!(ascent_free_chains(n, 1).unwrap(), 1);
        }
        assert!(ascent_free_chains(3, 4).is_err());
    }

    #[test]
    fn barless_member_is_decreasing() {
        for n in 1..=6 {
            let b = barred_set(n, 0).unwrap();
            assert_eq!(b.len(), 1);
            let want: Vec<u32> = (1..=n as u32).rev().collect();
            assert_eq!(b[0].values(), want);
        }
        assert_eq!(barred_set(1, 0).unwrap(), vec![bp("1")]);
    }

    #[test]
    fn phi_cases() {
        assert_eq!(phi_map(&bp("5")).unwrap(), [5]);
        // α·m̄·β: φ(β)·m·φ(α)
        assert_eq!(phi_map(&bp("31'4")).unwrap(), [4, 1, 3]);
        assert_eq!(phi_map(&bp("42'")).unwrap(), [4, 2]);
        assert_eq!(phi_map(&bp("42")).unwrap(), [2, 4]);
        assert!(phi_map(&bp("2'1")).is_err());
        assert!(phi_map(&bp("12")).is_err());
        for w in ["31'4", "42'", "42", "97'3'5"] {
            assert_eq!(psi_map(&phi_map(&bp(w)).unwrap()).unwrap(), bp(w));
        }
    }

    #[test]
    fn aid_example() {
        let p: Permutation = "3167542".parse().unwrap();
        assert_eq!(aid(&p), 2 + 4);
    }
}
