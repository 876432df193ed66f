//! Boolean algebras, chains, trees, subspace lattices over F_q, crosspolytope face posets
//! and lattices of totally isotropic subspaces.

use std::collections::HashMap;

use super::Poset;
use crate::error::{check_cap, invalid, Result};

/// B_n, subsets of [n] labeled like "{1,3}".
pub fn boolean(n: usize) -> Result<Poset> {
    check_cap("n", n, 12)?;
    let label = |m: usize| {
        let items: Vec<String> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    };
    let labels = (0..1usize << n).map(label).collect();
    let covers: Vec<(usize, usize)> = (0..1usize << n)
        .flat_map(|m| (0..n).filter(move |i| m >> i & 1 == 0).map(move |i| (m, m | 1 << i)))
        .collect();
    Poset::from_covers(labels, &covers)
}

/// C_n = {1 < 2 < ⋯ < n}.
pub fn chain(n: usize) -> Poset {
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_covers(labels, &covers).expect("chain")
}

/// T_{t,n}: the complete t-ary tree of height n with the root at the bottom. Nodes are
/// labeled by their child-index path, the root by "r".
pub fn tree(t: usize, n: usize) -> Result<Poset> {
    let size: usize = (0..=n as u32).map(|d| t.pow(d)).sum();
    check_cap("tree size", size, 20_000)?;
    let mut labels = vec!["r".to_string()];
    let mut covers = Vec::new();
    let mut frontier = vec![0usize];
    for _ in 0..n {
        let mut next = Vec::new();
        for &parent in &frontier {
            for c in 0..t {
                let x = labels.len();
                labels.push(format!("{}.{c}", labels[parent]));
                covers.push((parent, x));
                next.push(x);
            }
        }
        frontier = next;
    }
    Poset::from_covers(labels, &covers)
}

/// The proper faces of the n-dimensional crosspolytope: subsets of {1,…,n,1',…,n'} with no
/// pair {i, i'}, ordered by inclusion. The empty face is the bottom.
pub fn crosspolytope(n: usize) -> Result<Poset> {
    check_cap("n", n, 6)?;
    let mut faces: Vec<(u32, u32)> = Vec::new();
    for pos in 0u32..1 << n {
        for neg in 0u32..1 << n {
            if pos & neg == 0 {
                faces.push((pos, neg));
            }
        }
    }
    let index: HashMap<(u32, u32), usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let labels = faces
        .iter()
        .map(|&(pos, neg)| {
            let mut items = Vec::new();
            for i in 0..n {
                if pos >> i & 1 == 1 {
                    items.push(format!("{}", i + 1));
                }
                if neg >> i & 1 == 1 {
                    items.push(format!("{}'", i + 1));
                }
            }
            format!("{{{}}}", items.join(","))
        })
        .collect();
    let mut covers = Vec::new();
    for (i, &(pos, neg)) in faces.iter().enumerate() {
        for v in 0..n {
            if (pos | neg) >> v & 1 == 0 {
                covers.push((i, index[&(pos | 1 << v, neg)]));
                covers.push((i, index[&(pos, neg | 1 << v)]));
            }
        }
    }
    Poset::from_covers(labels, &covers)
}

/// A vector space F_q^dim, optionally with a bilinear form (for isotropic subspaces).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqVectorConfig {
    pub q: u8,
    pub dim: usize,
    pub form: Option<Vec<Vec<u8>>>,
}

impl FqVectorConfig {
    pub fn new(q: u8, dim: usize) -> Self {
        FqVectorConfig { q, dim, form: None }
    }

    /// F_q^{2n} with ⟨e_i, e_{n+i}⟩ = 1 = −⟨e_{n+i}, e_i⟩.
    pub fn symplectic(q: u8, n: usize) -> Self {
        let d = 2 * n;
        let mut m = vec![vec![0u8; d]; d];
        for i in 0..n {
            m[i][n + i] = 1;
            m[n + i][i] = q - 1;
        }
        FqVectorConfig { q, dim: d, form: Some(m) }
    }

    fn validate(&self) -> Result<()> {
        if ![2, 3, 5].contains(&self.q) {
            return invalid(format!("q = {} is not one of 2, 3, 5", self.q));
        }
        let cap = match self.q {
            2 => 5,
            3 => 4,
            _ => 3,
        };
        check_cap("dim", self.dim, cap)?;
        if let Some(m) = &self.form {
            let d = self.dim;
            let q = self.q;
            if m.len() != d || m.iter().any(|r| r.len() != d || r.iter().any(|&x| x >= q)) {
                return invalid("form must be a dim × dim matrix over F_q");
            }
            let alternating =
                (0..d).all(|i| m[i][i] == 0 && (0..d).all(|j| (m[i][j] + m[j][i]) % q == 0));
            if !alternating {
                return invalid("form is not alternating");
            }
            if rref(m.clone(), q).len() != d {
                return invalid("form is degenerate");
            }
        }
        Ok(())
    }
}

/// Reduced row-echelon form over F_q (q prime), zero rows dropped.
fn rref(mut rows: Vec<Vec<u8>>, q: u8) -> Vec<Vec<u8>> {
    let q = q as u32;
    let inv = |a: u32| (1..q).find(|b| a * b % q == 1).expect("prime field");
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let s = inv(rows[r][c] as u32);
        for x in rows[r].iter_mut() {
            *x = (*x as u32 * s % q) as u8;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c] as u32;
                for k in 0..cols {
                    let v = (rows[i][k] as u32 + q * q - f * rows[r][k] as u32 % q) % q;
                    rows[i][k] = v as u8;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// All vectors of F_q^d.
fn vectors(q: u8, d: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = (q as usize).pow(d as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0u8; d];
        for x in v.iter_mut() {
            *x = (code % q as usize) as u8;
            code /= q as usize;
        }
        v
    })
}

/// Subspaces in RREF, grouped by dimension, each closed under adding one vector; `keep`
/// filters (e.g. isotropy) and must be inherited by subspaces.
fn subspace_poset(cfg: &FqVectorConfig, keep: impl Fn(&[Vec<u8>]) -> bool) -> Result<Poset> {
    cfg.validate()?;
    let (q, d) = (cfg.q, cfg.dim);
    let all: Vec<Vec<u8>> = vectors(q, d).filter(|v| v.iter().any(|&x| x != 0)).collect();
    let mut index: HashMap<Vec<Vec<u8>>, usize> = HashMap::new();
    let mut spaces: Vec<Vec<Vec<u8>>> = vec![vec![]];
    index.insert(vec![], 0);
    let mut covers = Vec::new();
    let mut head = 0;
    // breadth first by dimension, so every space is reached from one of its hyperplanes
    while head < spaces.len() {
        let u = spaces[head].clone();
        for v in &all {
            let mut rows = u.clone();
            rows.push(v.clone());
            let w = rref(rows, q);
            if w.len() != u.len() + 1 || !keep(&w) {
                continue;
            }
            let j = match index.get(&w) {
                Some(&j) => j,
                None => {
                    spaces.push(w.clone());
                    index.insert(w, spaces.len() - 1);
                    spaces.len() - 1
                }
            };
            covers.push((head, j));
        }
        head += 1;
    }
    let labels = spaces
        .iter()
        .map(|s| {
            if s.is_empty() {
                "0".to_string()
            } else {
                let rows: Vec<String> = s.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                format!("<{}>", rows.join(","))
            }
        })
        .collect();
    covers.sort_unstable();
    covers.dedup();
    Poset::from_covers(labels, &covers)
}

/// B_n(q): the subspaces of F_q^n. Caps: n ≤ 5 for q = 2, n ≤ 4 for q = 3, n ≤ 3 for q = 5.
pub fn subspace_lattice(cfg: &FqVectorConfig) -> Result<Poset> {
    subspace_poset(cfg, |_| true)
}

/// The totally isotropic subspaces of F_q^dim under the configured alternating form.
pub fn isotropic_lattice(cfg: &FqVectorConfig) -> Result<Poset> {
    let Some(m) = cfg.form.clone() else {
        return invalid("isotropic lattice needs a form");
    };
    let q = cfg.q as u32;
    let pair = move |u: &[u8], v: &[u8]| -> u32 {
        let mut s = 0;
        for (i, &a) in u.iter().enumerate() {
            for (j, &b) in v.iter().enumerate() {
                s += a as u32 * m[i][j] as u32 * b as u32;
            }
        }
        s % q
    };
    subspace_poset(cfg, |rows| {
        rows.iter().all(|u| rows.iter().all(|v| pair(u, v) == 0))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_whitney_numbers() {
        let b = subspace_lattice(&FqVectorConfig::new(2, 4)).unwrap();
        assert_eq!(b.whitney(), vec![1, 15, 35, 15, 1]);
        assert_eq!(b.mu().unwrap(), 64); // (−1)^n q^{C(n,2)}
        let b3 = subspace_lattice(&FqVectorConfig::new(3, 3)).unwrap();
        assert_eq!(b3.whitney(), vec![1, 13, 13, 1]);
        assert!(subspace_lattice(&FqVectorConfig::new(2, 6)).is_err());
    }

    #[test]
    fn crosspolytope_faces() {
        let p = crosspolytope(3).unwrap();
        assert_eq!(p.whitney(), vec![1, 6, 12, 8]);
        assert!(p.maximal().iter().all(|&x| p.rank(x) == 3));
    }

    #[test]
    fn isotropic_subspaces() {
        let p = isotropic_lattice(&FqVectorConfig::symplectic(2, 2)).unwrap();
        assert_eq!(p.whitney(), vec![1, 15, 15]);
        assert!(p.maximal().iter().all(|&x| p.rank(x) == 2));
        let mut bad = FqVectorConfig::symplectic(2, 1);
        bad.form = Some(vec![vec![1, 0], vec![0, 1]]);
        assert!(isotropic_lattice(&bad).is_err());
    }

    #[test]
    fn trees_and_chains() {
        let t = tree(2, 3).unwrap();
        assert_eq!(t.whitney(), vec![1, 2, 4, 8]);
        assert_eq!(chain(3).length(), 2);
        assert_eq!(boolean(3).unwrap().label(5), "{1,3}");
    }
}
