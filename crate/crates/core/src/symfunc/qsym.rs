use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::monomial::MonoPoly;
use super::sym::{SymBasis, SymElem};
use crate::combinatorics::Partition;
use crate::error::{check_cap, Error, Result, DEFAULT_DEGREE_CAP};
use crate::poly::{pochhammer, unit_exps, MPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSymBasis {
    /// Fundamental F_{S,n}.
    F,
    /// Monomial quasisymmetric M_α.
    M,
}

/// A homogeneous quasisymmetric function of degree n.
///
/// Both bases are keyed by a subset T ⊆ [n−1] stored as a bitmask (bit i−1 for i).
/// F_{S,n} sums x_{i_1}⋯x_{i_n} over i_1 ≥ ⋯ ≥ i_n with i_j > i_{j+1} for j ∈ S, so
/// F_{S,n} = Σ_{T ⊇ S} M_{α(T)} where α(T) lists the exponents of the variables in
/// increasing order: the reverse of the composition of n cut at T.
#[derive(Clone, Debug, PartialEq)]
pub struct QSymElem {
    n: usize,
    basis: QSymBasis,
    terms: BTreeMap<u32, MPoly>,
}

/// Subset bitmask → sorted element list.
pub fn mask_to_set(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn set_to_mask(set: &[u32]) -> u32 {
    set.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// α(T): the composition of n cut at T, reversed.
pub fn mask_to_composition(n: usize, mask: u32) -> Vec<u32> {
    let mut cuts = mask_to_set(mask);
    cuts.push(n as u32);
    let mut prev = 0;
    let mut comp: Vec<u32> = cuts
        .into_iter()
        .map(|c| {
            let d = c - prev;
            prev = c;
            d
        })
        .collect();
    comp.reverse();
    comp
}

/// Inverse of [`mask_to_composition`].
pub fn composition_to_mask(alpha: &[u32]) -> u32 {
    let mut acc = 0;
    let mut mask = 0;
    for &a in alpha.iter().rev().take(alpha.len().saturating_sub(1)) {
        acc += a;
        mask |= 1 << (acc - 1);
    }
    mask
}

fn full(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << (n - 1)) - 1
    }
}

/// All supersets of `mask` inside `universe`.
fn supersets(mask: u32, universe: u32) -> impl Iterator<Item = u32> {
    let free = universe & !mask;
    let mut sub = free;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = mask | sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & free;
        }
        Some(out)
    })
}

impl QSymElem {
    pub fn zero(n: usize, basis: QSymBasis) -> Self {
        QSymElem {
            n,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// Σ c · F_{S,n} over the given terms; every S must lie in [n−1].
    pub fn from_fundamental(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, MPoly)>) -> Result<Self> {
        let mut out = QSymElem::zero(n, QSymBasis::F);
        for (s, c) in terms {
            if s.iter().any(|&i| i == 0 || i as usize >= n.max(1)) {
                return Err(Error::Invalid(format!("{s:?} is not a subset of [{}]", n.saturating_sub(1))));
            }
            out.add_term(set_to_mask(&s), &c);
        }
        Ok(out)
    }

    pub fn fundamental(n: usize, set: &[u32]) -> Result<Self> {
        Self::from_fundamental(n, [(set.to_vec(), MPoly::one())])
    }

    pub fn monomial(alpha: &[u32]) -> Self {
        let n = alpha.iter().sum::<u32>() as usize;
        let mut out = QSymElem::zero(n, QSymBasis::M);
        out.add_term(composition_to_mask(alpha), &MPoly::one());
        out
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> QSymBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms keyed by subset bitmask.
    pub fn terms(&self) -> impl Iterator<Item = (&u32, &MPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mask: u32, c: &MPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &QSymElem) -> Result<QSymElem> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.to_basis(self.basis));
        }
        if self.n != other.n {
            return Err(Error::MixedDegree(self.n, other.n));
        }
        let o = other.to_basis(self.basis);
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &MPoly) -> QSymElem {
        let mut out = QSymElem::zero(self.n, self.basis);
        for (k, x) in &self.terms {
            out.add_term(*k, &(x * c));
        }
        out
    }

    pub fn to_basis(&self, target: QSymBasis) -> QSymElem {
        if target == self.basis {
            return self.clone();
        }
        let u = full(self.n);
        let mut out = QSymElem::zero(self.n, target);
        for (&s, c) in &self.terms {
            for t in supersets(s, u) {
                let term = match target {
                    QSymBasis::M => c.clone(),
                    // Möbius inversion over the subset lattice
                    QSymBasis::F if (t & !s).count_ones() % 2 == 1 => -c,
                    QSymBasis::F => c.clone(),
                };
                out.add_term(t, &term);
            }
        }
        out
    }

    /// Coefficient of F_{S,n} (or M_{α(S)} in the monomial basis).
    pub fn coeff(&self, set: &[u32]) -> MPoly {
        self.terms.get(&set_to_mask(set)).cloned().unwrap_or_else(MPoly::zero)
    }

    /// Complement every subset: F_{S,n} ↦ F_{[n−1]∖S,n}. Restricts to ω on symmetric functions.
    pub fn omega(&self) -> QSymElem {
        let f = self.to_basis(QSymBasis::F);
        let u = full(self.n);
        let mut out = QSymElem::zero(self.n, QSymBasis::F);
        for (&s, c) in &f.terms {
            out.add_term(u & !s, c);
        }
        out.to_basis(self.basis)
    }

    /// Monomial coefficients agree on all rearrangements of each composition.
    pub fn is_symmetric(&self) -> bool {
        self.m_by_partition().is_some()
    }

    fn m_by_partition(&self) -> Option<BTreeMap<Partition, MPoly>> {
        let m = self.to_basis(QSymBasis::M);
        let mut seen: HashMap<Partition, (MPoly, usize)> = HashMap::new();
        for (&t, c) in &m.terms {
            let lambda = Partition::new(mask_to_composition(self.n, t));
            match seen.get_mut(&lambda) {
                Some((c0, count)) => {
                    if c0 != c {
                        return None;
                    }
                    *count += 1;
                }
                None => {
                    seen.insert(lambda, (c.clone(), 1));
                }
            }
        }
        for (lambda, (_, count)) in &seen {
            if *count != distinct_rearrangements(lambda) {
                return None;
            }
        }
        Some(seen.into_iter().map(|(l, (c, _))| (l, c)).collect())
    }

    /// The same element in the symmetric monomial basis.
    pub fn to_sym(&self) -> Result<SymElem> {
        let by = self.m_by_partition().ok_or(Error::NotSymmetric)?;
        let mut out = SymElem::zero(SymBasis::M);
        for (l, c) in by {
            out.add_term(l, &c);
        }
        Ok(out)
    }

    /// A homogeneous symmetric function as a quasisymmetric one.
    pub fn from_sym(f: &SymElem) -> Result<QSymElem> {
        let Some(n) = f.degree() else {
            if f.is_zero() {
                return Ok(QSymElem::zero(0, QSymBasis::F));
            }
            return Err(Error::MixedDegree(
                f.degrees()[0],
                *f.degrees().last().unwrap(),
            ));
        };
        check_cap("degree", n, DEFAULT_DEGREE_CAP)?;
        let m = f.to_basis(SymBasis::M)?;
        let mut out = QSymElem::zero(n, QSymBasis::M);
        for t in 0..=full(n) {
            let lambda = Partition::new(mask_to_composition(n, t));
            let c = m.coeff(&lambda);
            out.add_term(t, &c);
        }
        Ok(out.to_basis(QSymBasis::F))
    }

    /// Numerator of the stable principal specialization: Λ(f) · (q;q)_n, using
    /// Λ(F_{S,n}) = q^{ΣS} / (q;q)_n.
    pub fn stable_spec_numerator(&self) -> Result<MPoly> {
        let f = self.to_basis(QSymBasis::F);
        let mut out = MPoly::zero();
        for (&s, c) in &f.terms {
            let sum: u32 = mask_to_set(s).iter().sum();
            out += &c.shift(&unit_exps(Var::Q, sum as i16));
        }
        Ok(out)
    }

    /// (q;q)_n, the denominator of the stable specialization.
    pub fn stable_spec_denominator(&self) -> MPoly {
        pochhammer(&MPoly::var(Var::Q), self.n)
    }

    /// Λ_m: x_i ↦ q^{i−1} for i ≤ m and x_i ↦ 0 otherwise.
    pub fn principal_spec_m(&self, m: usize) -> MPoly {
        let f = self.to_basis(QSymBasis::F);
        let mut out = MPoly::zero();
        for (&s, c) in &f.terms {
            out += &(c * &fundamental_spec_m(self.n, s, m));
        }
        out
    }

    /// Σ_{m ≤ order} Λ_m(f) p^m.
    pub fn spec_p_series(&self, order: usize) -> MPoly {
        let mut out = MPoly::zero();
        for m in 0..=order {
            out += &self.principal_spec_m(m).shift(&unit_exps(Var::P, m as i16));
        }
        out
    }

    /// Expansion in x_1, …, x_m; coefficients must be integers.
    pub fn monomial_expansion(&self, m: usize) -> Result<MonoPoly> {
        let mq = self.to_basis(QSymBasis::M);
        let mut out = MonoPoly::zero(m);
        for (&t, c) in &mq.terms {
            let k = c.as_i64().ok_or_else(|| Error::NonIntegral(c.to_string()))?;
            let alpha = mask_to_composition(self.n, t);
            out.add_monomial_quasisym(&alpha, k);
        }
        Ok(out)
    }
}

/// Number of distinct rearrangements of the parts of λ.
fn distinct_rearrangements(lambda: &Partition) -> usize {
    let mut r: u128 = (1..=lambda.len() as u128).product();
    for (_, m) in lambda.multiplicities() {
        r /= (1..=m as u128).product::<u128>();
    }
    r as usize
}

/// Λ_m(F_{S,n}) by dynamic programming over i_1 ≥ ⋯ ≥ i_n in [m], strict at S.
fn fundamental_spec_m(n: usize, s: u32, m: usize) -> MPoly {
    if n == 0 {
        return MPoly::one();
    }
    if m == 0 {
        return MPoly::zero();
    }
    // dp[v] = weighted count of valid prefixes ending in value v+1
    let mut dp: Vec<MPoly> = (0..m).map(|v| MPoly::term(1, &[(Var::Q, v as i16)])).collect();
    for j in 1..n {
        let strict = s >> (j - 1) & 1 == 1;
        let mut next = vec![MPoly::zero(); m];
        // suffix sums over the previous value
        let mut acc = MPoly::zero();
        for v in (0..m).rev() {
            if strict {
                next[v] = acc.shift(&unit_exps(Var::Q, v as i16));
                acc += &dp[v];
            } else {
                acc += &dp[v];
                next[v] = acc.shift(&unit_exps(Var::Q, v as i16));
            }
        }
        dp = next;
    }
    dp.iter().fold(MPoly::zero(), |a, b| &a + b)
}

impl fmt::Display for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&t, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let label = match self.basis {
                QSymBasis::F => {
                    let s: Vec<String> = mask_to_set(t).iter().map(|i| i.to_string()).collect();
                    format!("F[{{{}}},{}]", s.join(","), self.n)
                }
                QSymBasis::M => {
                    let a: Vec<String> =
                        mask_to_composition(self.n, t).iter().map(|i| i.to_string()).collect();
                    format!("M[{}]", a.join(","))
                }
            };
            if c.is_one() {
                write!(f, "{label}")?;
            } else if c.is_constant() {
                write!(f, "{} {label}", c.constant_term())?;
            } else {
                write!(f, "({c}) {label}")?;
            }
        }
        Ok(())
    }
}

/// Σ_m Λ_m(F_{S,n}) p^m · (p;q)_{n+1} = p^{|S|+1} q^{ΣS}: the p-series of a single
/// fundamental function in closed form, truncated at p^order.
pub fn fundamental_p_series_closed(n: usize, set: &[u32], order: usize) -> Result<MPoly> {
    use crate::poly::TruncatedSeries;
    let num = MPoly::term(1, &[(Var::P, set.len() as i16 + 1), (Var::Q, set.iter().sum::<u32>() as i16)]);
    let den = pochhammer(&MPoly::var(Var::P), n + 1);
    let series = |f: &MPoly| {
        TruncatedSeries::from_coeffs((0..=order).map(|m| f.coeff_of(Var::P, m as i16)).collect(), order)
    };
    let quo = series(&num).mul(&series(&den).recip()?);
    let mut out = MPoly::zero();
    for (m, c) in quo.coeffs().iter().enumerate() {
        out += &c.shift(&unit_exps(Var::P, m as i16));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_masks() {
        assert_eq!(mask_to_composition(4, set_to_mask(&[1])), vec![3, 1]);
        for n in 1..=6 {
            for t in 0..=full(n) {
                assert_eq!(composition_to_mask(&mask_to_composition(n, t)), t);
            }
        }
    }

    #[test]
    fn fundamental_special_cases() {
        for n in 1..=5 {
            let h = QSymElem::fundamental(n, &[]).unwrap().to_sym().unwrap();
            assert_eq!(h, SymElem::h(n as u32).to_basis(SymBasis::M).unwrap());
            let all: Vec<u32> = (1..n as u32).collect();
            let e = QSymElem::fundamental(n, &all).unwrap().to_sym().unwrap();
            assert_eq!(e, SymElem::e(n as u32).to_basis(SymBasis::M).unwrap());
        }
        assert!(QSymElem::fundamental(2, &[1]).unwrap().is_symmetric());
        assert!(!QSymElem::monomial(&[1, 2]).is_symmetric());
        assert!(QSymElem::from_fundamental(3, [(vec![3], MPoly::one())]).is_err());
    }

    #[test]
    fn f_m_round_trip_and_omega() {
        let f = QSymElem::from_fundamental(
            5,
            [(vec![1, 3], MPoly::from_int(2)), (vec![2], MPoly::var(Var::T))],
        )
        .unwrap();
        assert_eq!(f.to_basis(QSymBasis::M).to_basis(QSymBasis::F), f);
        assert_eq!(f.omega().omega(), f);
        let w = QSymElem::fundamental(4, &[1, 3]).unwrap().omega();
        assert_eq!(w, QSymElem::fundamental(4, &[2]).unwrap());
    }

    #[test]
    fn stable_spec_examples() {
        let f = QSymElem::fundamental(6, &[1, 4]).unwrap();
        assert_eq!(f.stable_spec_numerator().unwrap(), MPoly::term(1, &[(Var::Q, 5)]));
        // Λ_1(F_{∅,2}) = 1, Λ_0 = 0
        let h2 = QSymElem::fundamental(2, &[]).unwrap();
        assert!(h2.principal_spec_m(1).is_one());
        assert!(h2.principal_spec_m(0).is_zero());
    }

    #[test]
    fn p_series_matches_closed_form() {
        for n in 1..=5usize {
            for t in 0..=full(n) {
                let set = mask_to_set(t);
                let f = QSymElem::fundamental(n, &set).unwrap();
                assert_eq!(f.spec_p_series(6), fundamental_p_series_closed(n, &set, 6).unwrap());
            }
        }
    }

    #[test]
    fn spec_m_stabilizes() {
        // Λ_m(F_{S,n}) → q^{ΣS}/(q;q)_n as m grows: compare below q^m
        let f = QSymElem::fundamental(4, &[1, 2]).unwrap();
        let m = 9;
        let lhs = (&f.principal_spec_m(m) * &f.stable_spec_denominator()).truncate(Var::Q, m as i16 - 1);
        assert_eq!(lhs, f.stable_spec_numerator().unwrap());
    }
}
