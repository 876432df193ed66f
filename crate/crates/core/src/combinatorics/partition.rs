use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{invalid, Error, Result};

/// An integer partition, parts stored in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts, written ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// m_i(λ), the number of parts equal to i.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Pairs (part, multiplicity) in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// z_λ = Π i^{m_i} m_i!.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// gcd of the parts; 0 for the empty partition.
    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &p| g.gcd(&p))
    }

    /// (λ, μ): the union of the parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// (λ, 1^k).
    pub fn with_ones(&self, k: usize) -> Partition {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(1, k));
        Partition::new(v)
    }

    /// λ with all parts equal to 1 removed.
    pub fn without_ones(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Remove one part equal to `part`, if present.
    pub fn remove_part(&self, part: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }

    /// Multiply every part by k.
    pub fn scaled(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// Dominance order λ ⊵ μ (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u64;
        let mut b = 0u64;
        let len = self.len().max(other.len());
        for i in 0..len {
            a += *self.0.get(i).unwrap_or(&0) as u64;
            b += *other.0.get(i).unwrap_or(&0) as u64;
            if a < b {
                return false;
            }
        }
        true
    }
}

/// All partitions of n in reverse lexicographic order: (n), (n−1,1), …, (1^n).
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, n as u32, &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts "4,2,2", "4 2 2", "[4,2,2]", "2^3,1" and, for single-digit parts, "422".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let tokens: Vec<&str> = if s.contains([',', ' ']) {
            s.split([',', ' ']).filter(|t| !t.is_empty()).collect()
        } else if s.contains('^') {
            vec![s]
        } else {
            s.split_inclusive(|_| true).collect()
        };
        for tok in tokens {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            let b: u32 = base
                .parse()
                .map_err(|_| Error::Invalid(format!("bad partition part {tok:?}")))?;
            let e: usize = exp
                .parse()
                .map_err(|_| Error::Invalid(format!("bad exponent in {tok:?}")))?;
            if b == 0 {
                return invalid("partition parts must be positive");
            }
            parts.extend(std::iter::repeat_n(b, e));
        }
        Ok(Partition::new(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_partitions() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3)[0], Partition::new(vec![3]));
        assert_eq!(partitions(3)[2], Partition::new(vec![1, 1, 1]));
    }

    #[test]
    fn z_lambda() {
        assert_eq!(Partition::new(vec![2, 1, 1]).z(), BigInt::from(4));
        assert_eq!(Partition::new(vec![1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(Partition::new(vec![3]).z(), BigInt::from(3));
    }

    #[test]
    fn parse_and_print() {
        let p: Partition = "2^2,1".parse().unwrap();
        assert_eq!(p.parts(), &[2, 2, 1]);
        let q: Partition = "321".parse().unwrap();
        assert_eq!(q.to_string(), "[3,2,1]");
        assert_eq!("6".parse::<Partition>().unwrap().parts(), &[6]);
    }

    #[test]
    fn conjugates() {
        let p = Partition::new(vec![4, 2, 1]);
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }
}
