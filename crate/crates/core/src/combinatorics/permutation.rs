use std::fmt;
use std::str::FromStr;

use super::partition::Partition;
use crate::error::{invalid, Error, Result};

/// A permutation of [n] in one-line notation, values 1..=n. n = 0 is the empty word θ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return invalid(format!("{one_line:?} is not a permutation of 1..{n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub(crate) fn from_vec_unchecked(one_line: Vec<u32>) -> Self {
        Permutation { one_line }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n as u32).collect(),
        }
    }

    pub fn empty() -> Self {
        Permutation { one_line: vec![] }
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    /// σ(i), 1-indexed.
    pub fn at(&self, i: usize) -> u32 {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { one_line: inv }
    }

    /// Builds a permutation of [n] from disjoint cycles; missing points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut one_line: Vec<u32> = (1..=n as u32).collect();
        let mut seen = vec![false; n + 1];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let a_idx = a as usize;
                if a_idx == 0 || a_idx > n || seen[a_idx] {
                    return invalid(format!("bad cycle {c:?} for n = {n}"));
                }
                seen[a_idx] = true;
                one_line[a_idx - 1] = c[(k + 1) % c.len()];
            }
        }
        Ok(Permutation { one_line })
    }

    /// Canonical cycle form: every cycle starts at its minimum, cycles sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.one_line[x - 1] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// The map i ↦ n+1−i applied to every letter of the cycle form.
    pub fn reverse_values_in_cycles(&self) -> Permutation {
        let n = self.len() as u32;
        let mut one_line = vec![0; self.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            one_line[(n - (i as u32 + 1)) as usize] = n + 1 - v;
        }
        Permutation { one_line }
    }

    pub fn cycle_string(&self) -> String {
        let mut s = String::new();
        for c in self.cycles() {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.one_line.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line form "32541" (single digits) or "3,2,5,4,1"; cycle form "(1,4,6,3)(2,5)"
    /// is accepted when the size can be inferred from the largest letter.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation::empty());
        }
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
                let body = chunk.trim_start_matches('(');
                cycles.push(parse_list(body)?);
            }
            let n = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
            return Permutation::from_cycles(n, &cycles);
        }
        Permutation::new(parse_list(s)?)
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    if s.contains([',', ' ']) {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad letter {t:?}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Invalid(format!("bad letter {c:?}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p: Permutation = "45162387".parse().unwrap();
        assert_eq!(p.cycle_string(), "(1,4,6,3)(2,5)(7,8)");
        let q = Permutation::from_cycles(8, &p.cycles()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.cycle_type().parts(), &[4, 2, 2]);
    }

    #[test]
    fn parse_cycle_form() {
        let p: Permutation = "(1,2,3)".parse().unwrap();
        assert_eq!(p.to_string(), "231");
        assert_eq!(p.cycle_type().parts(), &[3]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!("3,3,1".parse::<Permutation>().is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }
}
