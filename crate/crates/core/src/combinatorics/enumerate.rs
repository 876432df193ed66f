use super::partition::Partition;
use super::permutation::Permutation;
use super::stats::{exd_set, fix};
use crate::error::{check_cap, Result, DEFAULT_PERM_CAP};

/// Lexicographic stream of all permutations of [n].
#[derive(Clone, Debug)]
pub struct Perms {
    next: Option<Vec<u32>>,
}

impl Iterator for Perms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(cur))
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn enumerate_perms(n: usize) -> Result<Perms> {
    enumerate_perms_capped(n, DEFAULT_PERM_CAP)
}

pub fn enumerate_perms_capped(n: usize, cap: usize) -> Result<Perms> {
    check_cap("n", n, cap)?;
    Ok(Perms {
        next: Some((1..=n as u32).collect()),
    })
}

/// Unchecked stream for internal callers that already validated n.
pub(crate) fn all_perms(n: usize) -> Perms {
    Perms {
        next: Some((1..=n as u32).collect()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermFilter {
    CycleType(Partition),
    FixCount(usize),
    Derangement,
}

impl PermFilter {
    pub fn accepts(&self, p: &Permutation) -> bool {
        match self {
            PermFilter::CycleType(l) => &p.cycle_type() == l,
            PermFilter::FixCount(k) => fix(p) as usize == *k,
            PermFilter::Derangement => fix(p) == 0,
        }
    }
}

pub fn enumerate_by(n: usize, filter: PermFilter) -> Result<impl Iterator<Item = Permutation>> {
    Ok(enumerate_perms(n)?.filter(move |p| filter.accepts(p)))
}

/// σ-compatible sequences: weakly decreasing s_1 ≥ … ≥ s_n ≥ 1 with s_1 ≤ m and
/// s_i > s_{i+1} whenever i ∈ Exd(σ).
pub fn compatible_sequences(p: &Permutation, m: u32) -> Vec<Vec<u32>> {
    let n = p.len();
    let mut strict = vec![false; n];
    for i in exd_set(p) {
        strict[i as usize - 1] = true;
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(i: usize, hi: u32, strict: &[bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == strict.len() {
            out.push(cur.clone());
            return;
        }
        // letters still to place after position i force a lower bound
        let need: u32 = strict[i..strict.len() - 1].iter().filter(|&&b| b).count() as u32;
        for v in (need + 1..=hi).rev() {
            cur.push(v);
            let next_hi = if strict[i] { v - 1 } else { v };
            rec(i + 1, next_hi, strict, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(0, m, &strict, &mut cur, &mut out);
    out
}

pub fn is_compatible(p: &Permutation, s: &[u32]) -> bool {
    if s.len() != p.len() || s.iter().any(|&v| v == 0) {
        return false;
    }
    let exd = exd_set(p);
    (1..s.len()).all(|i| {
        if exd.contains(&(i as u32)) {
            s[i - 1] > s[i]
        } else {
            s[i - 1] >= s[i]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let v: Vec<String> = enumerate_perms(3).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(v, vec!["123", "132", "213", "231", "312", "321"]);
        assert_eq!(enumerate_perms(0).unwrap().count(), 1);
        assert_eq!(enumerate_perms(6).unwrap().count(), 720);
        assert!(enumerate_perms(11).is_err());
    }

    #[test]
    fn derangements() {
        let d: Vec<String> = enumerate_by(3, PermFilter::Derangement)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(d, vec!["231", "312"]);
        assert_eq!(enumerate_by(4, PermFilter::Derangement).unwrap().count(), 9);
    }

    #[test]
    fn compatible_sequences_examples() {
        let p: Permutation = "45162387".parse().unwrap();
        assert!(compatible_sequences(&p, 7).contains(&vec![7, 7, 7, 5, 5, 4, 2, 2]));
        let q: Permutation = "21".parse().unwrap();
        assert_eq!(
            compatible_sequences(&q, 2),
            vec![vec![2, 2], vec![2, 1], vec![1, 1]]
        );
        assert_eq!(compatible_sequences(&Permutation::empty(), 3), vec![Vec::<u32>::new()]);
        for s in compatible_sequences(&p, 8) {
            assert!(is_compatible(&p, &s));
        }
    }
}
