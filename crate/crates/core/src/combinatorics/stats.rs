use serde::Serialize;

use super::letter::{Alphabet, BicolorLetter};
use super::permutation::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub des: u32,
    pub exc: u32,
    pub maj: u32,
    pub inv: u32,
    pub comaj: u32,
    pub fix: u32,
    pub des_set: Vec<u32>,
    pub exc_set: Vec<u32>,
    pub exd_set: Vec<u32>,
}

/// Permutation statistics usable as exponents in joint enumerators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    Des,
    Exc,
    Maj,
    Inv,
    Comaj,
    Fix,
    /// Admissible inversions.
    Ai,
    /// ai + des.
    Aid,
}

impl Stat {
    pub fn eval(self, p: &Permutation) -> u32 {
        match self {
            Stat::Des => des(p),
            Stat::Exc => exc(p),
            Stat::Maj => maj(p),
            Stat::Inv => inv(p),
            Stat::Comaj => comaj(p),
            Stat::Fix => fix(p),
            Stat::Ai => admissible_inversions(p.one_line()),
            Stat::Aid => admissible_inversions(p.one_line()) + des(p),
        }
    }
}

pub fn statistics(p: &Permutation) -> StatRecord {
    StatRecord {
        des: des(p),
        exc: exc(p),
        maj: maj(p),
        inv: inv(p),
        comaj: comaj(p),
        fix: fix(p),
        des_set: descent_set(p.one_line()),
        exc_set: excedance_set(p),
        exd_set: exd_set(p),
    }
}

/// Des of any word of integers: positions i with w_i > w_{i+1}.
pub fn descent_set(w: &[u32]) -> Vec<u32> {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i])
        .map(|i| i as u32)
        .collect()
}

pub fn excedance_set(p: &Permutation) -> Vec<u32> {
    p.one_line()
        .iter()
        .enumerate()
        .filter(|(i, &v)| v as usize > i + 1)
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

/// σ̄: the letters at excedance positions barred.
pub fn barred_word(p: &Permutation) -> Vec<BicolorLetter> {
    p.one_line()
        .iter()
        .enumerate()
        .map(|(i, &v)| BicolorLetter {
            value: v,
            barred: v as usize > i + 1,
        })
        .collect()
}

/// Exd(σ) = Des(σ̄) under the barred-first order.
pub fn exd_set(p: &Permutation) -> Vec<u32> {
    let w = barred_word(p);
    (1..w.len())
        .filter(|&i| Alphabet::BarredFirst.cmp(&w[i - 1], &w[i]).is_gt())
        .map(|i| i as u32)
        .collect()
}

/// Exd(σ) as a bitmask, bit i−1 for element i.
pub fn exd_mask(p: &Permutation) -> u32 {
    exd_set(p).iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub fn des(p: &Permutation) -> u32 {
    descent_set(p.one_line()).len() as u32
}

pub fn maj(p: &Permutation) -> u32 {
    descent_set(p.one_line()).iter().sum()
}

pub fn exc(p: &Permutation) -> u32 {
    excedance_set(p).len() as u32
}

pub fn fix(p: &Permutation) -> u32 {
    p.one_line()
        .iter()
        .enumerate()
        .filter(|(i, &v)| v as usize == i + 1)
        .count() as u32
}

pub fn inv(p: &Permutation) -> u32 {
    inversions(p.one_line())
}

pub fn inversions(w: &[u32]) -> u32 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

pub fn comaj(p: &Permutation) -> u32 {
    let n = p.len() as u32;
    n * n.saturating_sub(1) / 2 - maj(p)
}

/// Number of admissible inversions of a word with distinct letters: pairs i < j with
/// w_i > w_j such that either j < n and w_j < w_{j+1}, or some i < k < j has w_k < w_j.
pub fn admissible_inversions(w: &[u32]) -> u32 {
    let n = w.len();
    let mut c = 0;
    for j in 0..n {
        let ascent_after = j + 1 < n && w[j] < w[j + 1];
        // smallest letter strictly between i and j, scanned leftwards from j
        let mut min_between = u32::MAX;
        for i in (0..j).rev() {
            if w[i] > w[j] && (ascent_after || min_between < w[j]) {
                c += 1;
            }
            min_between = min_between.min(w[i]);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_32541() {
        let r = statistics(&perm("32541"));
        assert_eq!(r.des_set, vec![1, 3, 4]);
        assert_eq!(r.exc_set, vec![1, 3]);
        assert_eq!((r.des, r.exc, r.inv, r.maj), (3, 2, 6, 8));
    }

    #[test]
    fn exd_of_531462() {
        let p = perm("531462");
        assert_eq!(exd_set(&p), vec![1, 4]);
        let r = statistics(&p);
        assert_eq!((r.maj, r.exc, r.des), (8, 3, 3));
    }

    #[test]
    fn identity_and_empty() {
        let r = statistics(&Permutation::identity(5));
        assert_eq!((r.des, r.exc, r.maj, r.inv, r.fix), (0, 0, 0, 0, 5));
        assert!(r.exd_set.is_empty());
        let e = statistics(&Permutation::empty());
        assert_eq!((e.des, e.exc, e.maj, e.inv, e.comaj, e.fix), (0, 0, 0, 0, 0, 0));
    }

    #[test]
    fn admissible_inversions_example() {
        assert_eq!(admissible_inversions(&[3, 1, 6, 7, 5, 4, 2]), 2);
        assert_eq!(admissible_inversions(&[1, 2, 3, 4]), 0);
    }

    #[test]
    fn exd_sum_for_45162387() {
        let p = perm("45162387");
        let s = exd_set(&p);
        let r = statistics(&p);
        assert_eq!(s.iter().sum::<u32>(), r.maj - r.exc);
    }
}
