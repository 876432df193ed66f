//! Transition matrices from the h, e, p and s bases to the monomial basis, with exact
//! inverses, memoized per degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::combinatorics::{partitions, Partition};
use crate::error::{Error, Result};
use crate::poly::{int, Coef};

use super::SymBasis;

/// Sparse rows: row λ lists (μ, coefficient of m_μ in b_λ), or the reverse for `from_m`.
pub(crate) struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// b_λ = Σ to_m[λ] m_μ
    pub to_m: Vec<Vec<(usize, Coef)>>,
    /// m_μ = Σ from_m[μ] b_λ
    pub from_m: Vec<Vec<(usize, Coef)>>,
}

type Cache = Mutex<HashMap<(SymBasis, usize), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn transition(basis: SymBasis, degree: usize) -> Arc<Transition> {
    let key = (basis, degree);
    if let Some(t) = cache().lock().unwrap().get(&key) {
        return t.clone();
    }
    let t = Arc::new(build(basis, degree));
    cache().lock().unwrap().entry(key).or_insert(t).clone()
}

fn build(basis: SymBasis, d: usize) -> Transition {
    let parts = partitions(d);
    let index: HashMap<Partition, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = parts.len();
    let dense: Vec<Vec<u64>> = match basis {
        SymBasis::M => (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect(),
        SymBasis::S => {
            let mut memo = HashMap::new();
            parts
                .iter()
                .map(|l| parts.iter().map(|m| kostka(l.parts(), m.parts(), &mut memo)).collect())
                .collect()
        }
        _ => parts
            .iter()
            .map(|l| {
                parts
                    .iter()
                    .map(|m| {
                        let mut memo = HashMap::new();
                        fill_count(basis, l.parts(), m.parts().to_vec(), &mut memo)
                    })
                    .collect()
            })
            .collect(),
    };
    let rat: Vec<Vec<Coef>> = dense
        .iter()
        .map(|row| row.iter().map(|&x| int(x as i64)).collect())
        .collect();
    let inv = invert(&rat).expect("transition matrices are invertible");
    Transition {
        parts,
        index,
        to_m: sparse(&rat),
        from_m: sparse(&inv),
    }
}

fn sparse(m: &[Vec<Coef>]) -> Vec<Vec<(usize, Coef)>> {
    m.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect()
        })
        .collect()
}

/// Coefficient of x^μ in b_{λ_1}⋯b_{λ_k}: the number of ways to distribute each row sum
/// λ_i over the columns (arbitrarily for h, at most one per column for e, into a single
/// column for p) so that the column sums are μ.
fn fill_count(
    basis: SymBasis,
    rows: &[u32],
    cols: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), u64>,
) -> u64 {
    let Some((&a, rest)) = rows.split_first() else {
        return cols.iter().all(|&c| c == 0) as u64;
    };
    let mut key_cols = cols.clone();
    key_cols.sort_unstable();
    let key = (rows.len(), key_cols);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut cur = cols;
    match basis {
        SymBasis::P => {
            for j in 0..cur.len() {
                if cur[j] >= a {
                    cur[j] -= a;
                    total += fill_count(basis, rest, cur.clone(), memo);
                    cur[j] += a;
                }
            }
        }
        SymBasis::H | SymBasis::E => {
            let cap = if basis == SymBasis::E { 1 } else { u32::MAX };
            distribute(a, 0, cap, &mut cur, &mut |c| {
                total += fill_count(basis, rest, c.to_vec(), memo)
            });
        }
        _ => unreachable!("fill_count handles h, e, p"),
    }
    memo.insert(key, total);
    total
}

fn distribute(left: u32, j: usize, cap: u32, cols: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if left == 0 {
        f(cols);
        return;
    }
    if j == cols.len() {
        return;
    }
    let hi = left.min(cols[j]).min(cap);
    for x in 0..=hi {
        cols[j] -= x;
        distribute(left - x, j + 1, cap, cols, f);
        cols[j] += x;
    }
}

/// Number of semistandard tableaux of shape λ and content μ: strip off the largest
/// entry as a horizontal strip of size μ_last.
fn kostka(shape: &[u32], content: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), u64>) -> u64 {
    let size: u32 = shape.iter().sum();
    let csize: u32 = content.iter().sum();
    if size != csize {
        return 0;
    }
    let Some((&last, rest)) = content.split_last() else {
        return 1;
    };
    let key = (shape.to_vec(), content.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut nu = shape.to_vec();
    strips(shape, 0, last, &mut nu, &mut |nu| {
        let trimmed: Vec<u32> = nu.iter().copied().filter(|&x| x > 0).collect();
        total += kostka(&trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// All ν with λ/ν a horizontal strip of size `left`: λ_{i+1} ≤ ν_i ≤ λ_i.
fn strips(shape: &[u32], i: usize, left: u32, nu: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == shape.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let lo = shape.get(i + 1).copied().unwrap_or(0);
    let max_take = (shape[i] - lo).min(left);
    for take in 0..=max_take {
        nu[i] = shape[i] - take;
        strips(shape, i + 1, left - take, nu, f);
    }
    nu[i] = shape[i];
}

/// Exact Gauss–Jordan inverse.
pub(crate) fn invert(a: &[Vec<Coef>]) -> Result<Vec<Vec<Coef>>> {
    let n = a.len();
    let mut m: Vec<Vec<Coef>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Coef::one() } else { Coef::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::InexactDivision)?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[col].clone();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = &*x - &(&f * p);
                    }
                }
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(t: &Transition, l: &str, m: &str) -> Coef {
        let i = t.index[&l.parse::<Partition>().unwrap()];
        let j = t.index[&m.parse::<Partition>().unwrap()];
        t.to_m[i].iter().find(|(k, _)| *k == j).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    #[test]
    fn small_entries() {
        let h = transition(SymBasis::H, 3);
        assert_eq!(coeff(&h, "2,1", "1,1,1"), int(3));
        assert_eq!(coeff(&h, "3", "2,1"), int(1));
        let e = transition(SymBasis::E, 3);
        assert_eq!(coeff(&e, "2,1", "2,1"), int(1));
        assert_eq!(coeff(&e, "2,1", "3"), int(0));
        let p = transition(SymBasis::P, 3);
        assert_eq!(coeff(&p, "1,1,1", "1,1,1"), int(6));
        assert_eq!(coeff(&p, "2,1", "3"), int(1));
        let s = transition(SymBasis::S, 4);
        assert_eq!(coeff(&s, "3,1", "2,1,1"), int(2));
        assert_eq!(coeff(&s, "2,2", "1,1,1,1"), int(2));
    }

    #[test]
    fn inverse_really_inverts() {
        let t = transition(SymBasis::S, 5);
        let n = t.parts.len();
        for i in 0..n {
            for k in 0..n {
                let mut acc = Coef::zero();
                for (j, c) in &t.to_m[i] {
                    for (kk, d) in &t.from_m[*j] {
                        if *kk == k {
                            acc += c * d;
                        }
                    }
                }
                assert_eq!(acc, if i == k { Coef::one() } else { Coef::zero() });
            }
        }
    }
}
