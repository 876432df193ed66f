//! The Eulerian quasisymmetric functions straight from their definition: sums of
//! F_{Exd(σ),n} over the permutations with a given excedance number and cycle type.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinatorics::{exc, exd_mask, Partition, Permutation};
use crate::error::{check_cap, Result};
use crate::poly::{MPoly, Var};
use crate::symfunc::{QSymBasis, QSymElem, SymBasis, SymElem};

/// Largest n for Q_{λ,j}.
pub const LAMBDA_CAP: usize = 9;
/// Largest n for Q_{n,j,k} and Q_{n,j}.
pub const NJK_CAP: usize = 8;

/// For each (cycle type, exc) class, the multiplicity of every Exd mask.
#[derive(Debug)]
pub struct ExcTable {
    n: usize,
    classes: BTreeMap<(Partition, u32), BTreeMap<u32, i64>>,
}

impl ExcTable {
    fn build(n: usize) -> Self {
        let mut classes: BTreeMap<(Partition, u32), BTreeMap<u32, i64>> = BTreeMap::new();
        let mut perms = crate::combinatorics::enumerate_perms_capped(n, LAMBDA_CAP)
            .expect("n checked by the caller");
        // cycle types are recomputed per permutation; cache the partition objects
        let mut types: HashMap<Vec<u32>, Partition> = HashMap::new();
        for p in &mut perms {
            let mut lens = cycle_lengths(&p);
            lens.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = types
                .entry(lens)
                .or_insert_with_key(|k| Partition::new(k.clone()))
                .clone();
            *classes
                .entry((lambda, exc(&p)))
                .or_default()
                .entry(exd_mask(&p))
                .or_default() += 1;
        }
        ExcTable { n, classes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// (λ, j, Exd mask, count) for every nonempty class.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, u32, u32, i64)> {
        self.classes
            .iter()
            .flat_map(|((l, j), m)| m.iter().map(move |(&s, &c)| (l, *j, s, c)))
    }

    /// Σ coefficient(λ, j) · F_{S,n} over the whole table.
    pub fn sum(&self, coefficient: impl Fn(&Partition, u32) -> Option<MPoly>) -> QSymElem {
        let mut out = QSymElem::zero(self.n, QSymBasis::F);
        for ((l, j), masks) in &self.classes {
            let Some(c) = coefficient(l, *j) else {
                continue;
            };
            for (&s, &k) in masks {
                out.add_term(s, &c.scale(&crate::poly::int(k)));
            }
        }
        out
    }
}

fn cycle_lengths(p: &Permutation) -> Vec<u32> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p.at(i + 1) as usize - 1;
            len += 1;
        }
        out.push(len);
    }
    out
}

/// The table for S_n, built once per process.
pub fn exc_table(n: usize) -> Result<Arc<ExcTable>> {
    check_cap("n", n, LAMBDA_CAP)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ExcTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(t.clone());
    }
    // built outside the lock so that tables for different n can be made concurrently
    let t = Arc::new(ExcTable::build(n));
    Ok(cache.lock().expect("cache lock").entry(n).or_insert(t).clone())
}

/// Which Eulerian quasisymmetric function to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSelector {
    /// Q_{n,j}: all permutations of [n] with j excedances.
    Exc { n: usize, j: u32 },
    /// Q_{n,j,k}: additionally k fixed points.
    ExcFix { n: usize, j: u32, k: usize },
    /// Q_{λ,j}: cycle type λ and j excedances.
    CycleType { lambda: Partition, j: u32 },
}

pub fn q_def(sel: &QSelector) -> Result<QSymElem> {
    match sel {
        QSelector::Exc { n, j } => q_nj(*n, *j),
        QSelector::ExcFix { n, j, k } => q_njk(*n, *j, *k),
        QSelector::CycleType { lambda, j } => q_lambda(lambda, *j),
    }
}

pub fn q_lambda(lambda: &Partition, j: u32) -> Result<QSymElem> {
    let t = exc_table(lambda.size())?;
    Ok(t.sum(|l, e| (l == lambda && e == j).then(MPoly::one)))
}

pub fn q_njk(n: usize, j: u32, k: usize) -> Result<QSymElem> {
    check_cap("n", n, NJK_CAP)?;
    let t = exc_table(n)?;
    Ok(t.sum(|l, e| (e == j && l.multiplicity(1) == k).then(MPoly::one)))
}

pub fn q_nj(n: usize, j: u32) -> Result<QSymElem> {
    check_cap("n", n, NJK_CAP)?;
    let t = exc_table(n)?;
    Ok(t.sum(|_, e| (e == j).then(MPoly::one)))
}

/// Σ_j Q_{λ,j} t^j.
pub fn q_lambda_t(lambda: &Partition) -> Result<QSymElem> {
    let t = exc_table(lambda.size())?;
    Ok(t.sum(|l, e| (l == lambda).then(|| MPoly::term(1, &[(Var::T, e as i16)]))))
}

/// Q_n(t, r) = Σ_{j,k} Q_{n,j,k} t^j r^k.
pub fn q_n_tr(n: usize) -> Result<QSymElem> {
    check_cap("n", n, NJK_CAP)?;
    let t = exc_table(n)?;
    Ok(t.sum(|l, e| {
        Some(MPoly::term(
            1,
            &[(Var::T, e as i16), (Var::R, l.multiplicity(1) as i16)],
        ))
    }))
}

/// A symmetric quasisymmetric function in the h basis.
pub fn to_h(f: &QSymElem) -> Result<SymElem> {
    if f.degree() == 0 {
        let c = f.coeff(&[]);
        return Ok(SymElem::constant(c, SymBasis::H));
    }
    f.to_sym()?.to_basis(SymBasis::H)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_definitions() {
        assert_eq!(to_h(&q_njk(0, 0, 0).unwrap()).unwrap(), SymElem::one(SymBasis::H));
        assert_eq!(to_h(&q_njk(1, 0, 1).unwrap()).unwrap(), SymElem::h(1));
        assert_eq!(to_h(&q_njk(2, 1, 0).unwrap()).unwrap(), SymElem::h(2));
        assert!(q_njk(2, 0, 1).unwrap().is_zero());
    }

    #[test]
    fn six_cycle_three_excedances_is_not_h_positive() {
        let q = q_lambda(&part("6"), 3).unwrap();
        let h = to_h(&q).unwrap();
        let mut want = SymElem::zero(SymBasis::H);
        for (l, c) in [("4,2", 2), ("4,1,1", -1), ("3,2,1", 1), ("5,1", 1)] {
            want.add_term(part(l), &MPoly::from_int(c));
        }
        assert_eq!(h, want);
        let (s, pos) = h.schur_expand().unwrap();
        assert!(pos);
        assert_eq!(s.to_string(), "3 s[6] + 3 s[5,1] + 3 s[4,2] + s[3,3] + s[3,2,1]");
    }

    #[test]
    fn classes_cover_the_symmetric_group() {
        let t = exc_table(5).unwrap();
        assert_eq!(t.entries().map(|e| e.3).sum::<i64>(), 120);
        assert!(matches!(q_nj(9, 1), Err(crate::Error::CapExceeded { .. })));
        assert!(q_lambda(&part("9"), 4).is_ok());
    }
}
