use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::transition::transition;
use crate::combinatorics::{partitions, Partition};
use crate::error::{check_cap, Error, Result, DEFAULT_DEGREE_CAP};
use crate::poly::{Coef, MPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    M,
    H,
    E,
    P,
    S,
}

impl SymBasis {
    pub const ALL: [SymBasis; 5] = [SymBasis::M, SymBasis::H, SymBasis::E, SymBasis::P, SymBasis::S];

    pub fn letter(self) -> &'static str {
        match self {
            SymBasis::M => "m",
            SymBasis::H => "h",
            SymBasis::E => "e",
            SymBasis::P => "p",
            SymBasis::S => "s",
        }
    }
}

impl std::str::FromStr for SymBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(SymBasis::M),
            "h" => Ok(SymBasis::H),
            "e" => Ok(SymBasis::E),
            "p" => Ok(SymBasis::P),
            "s" => Ok(SymBasis::S),
            _ => Err(Error::Invalid(format!("unknown basis {s:?}"))),
        }
    }
}

/// A symmetric function Σ c_λ b_λ in one of the classical bases. Coefficients are
/// polynomials in q, p, t, r, z; terms of several degrees may coexist.
#[derive(Clone, Debug, PartialEq)]
pub struct SymElem {
    basis: SymBasis,
    terms: BTreeMap<Partition, MPoly>,
}

fn rat(x: BigInt) -> Coef {
    Coef::from_integer(x)
}

impl SymElem {
    pub fn zero(basis: SymBasis) -> Self {
        SymElem {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: SymBasis) -> Self {
        Self::term(basis, Partition::empty(), MPoly::one())
    }

    pub fn term(basis: SymBasis, lambda: Partition, c: MPoly) -> Self {
        let mut s = Self::zero(basis);
        s.add_term(lambda, &c);
        s
    }

    pub fn basis_elem(basis: SymBasis, lambda: Partition) -> Self {
        Self::term(basis, lambda, MPoly::one())
    }

    pub fn h(n: u32) -> Self {
        Self::basis_elem(SymBasis::H, Partition::new(vec![n]))
    }

    pub fn e(n: u32) -> Self {
        Self::basis_elem(SymBasis::E, Partition::new(vec![n]))
    }

    pub fn p(n: u32) -> Self {
        Self::basis_elem(SymBasis::P, Partition::new(vec![n]))
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_elem(SymBasis::S, lambda)
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_elem(SymBasis::M, lambda)
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &MPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> MPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(MPoly::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &MPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    /// The degrees that occur, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|l| l.size()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The degree, if the element is homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// The homogeneous component of degree d.
    pub fn component(&self, d: usize) -> SymElem {
        SymElem {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &MPoly) -> SymElem {
        let mut out = SymElem::zero(self.basis);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &(x * c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&MPoly) -> MPoly) -> SymElem {
        let mut out = SymElem::zero(self.basis);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &f(x));
        }
        out
    }

    pub fn add(&self, other: &SymElem) -> Result<SymElem> {
        let o = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (l, c) in o.terms {
            out.add_term(l, &c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymElem) -> Result<SymElem> {
        self.add(&other.scale(&MPoly::from_int(-1)))
    }

    /// Product, expressed in the basis of `self`.
    pub fn mul(&self, other: &SymElem) -> Result<SymElem> {
        let target = self.basis;
        let work = match target {
            SymBasis::H | SymBasis::E | SymBasis::P => target,
            _ => SymBasis::P,
        };
        let a = self.to_basis(work)?;
        let b = other.to_basis(work)?;
        let mut out = SymElem::zero(work);
        for (l, x) in &a.terms {
            for (m, y) in &b.terms {
                out.add_term(l.union(m), &(x * y));
            }
        }
        out.to_basis(target)
    }

    pub fn pow(&self, k: u32) -> Result<SymElem> {
        let mut acc = SymElem::one(self.basis);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact change of basis, degree by degree.
    pub fn to_basis(&self, target: SymBasis) -> Result<SymElem> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = SymElem::zero(target);
        for d in self.degrees() {
            check_cap("degree", d, DEFAULT_DEGREE_CAP)?;
            let src = transition(self.basis, d);
            let dst = transition(target, d);
            // through the monomial basis
            let mut in_m: BTreeMap<usize, MPoly> = BTreeMap::new();
            for (l, c) in self.terms.iter().filter(|(l, _)| l.size() == d) {
                for (j, a) in &src.to_m[src.index[l]] {
                    *in_m.entry(*j).or_insert_with(MPoly::zero) += &c.scale(a);
                }
            }
            let mut acc: BTreeMap<usize, MPoly> = BTreeMap::new();
            for (j, c) in in_m {
                if c.is_zero() {
                    continue;
                }
                for (k, a) in &dst.from_m[j] {
                    *acc.entry(*k).or_insert_with(MPoly::zero) += &c.scale(a);
                }
            }
            for (k, c) in acc {
                out.add_term(dst.parts[k].clone(), &c);
            }
        }
        Ok(out)
    }

    /// ω: h_λ ↔ e_λ, p_λ ↦ (−1)^{|λ|−ℓ(λ)} p_λ, s_λ ↦ s_{λ'}.
    pub fn omega(&self) -> Result<SymElem> {
        let mut out = SymElem::zero(self.basis);
        match self.basis {
            SymBasis::H | SymBasis::E => {
                out.basis = if self.basis == SymBasis::H { SymBasis::E } else { SymBasis::H };
                for (l, c) in &self.terms {
                    out.add_term(l.clone(), c);
                }
                out.to_basis(self.basis)
            }
            SymBasis::P => {
                for (l, c) in &self.terms {
                    let sign = if (l.size() - l.len()) % 2 == 0 { 1 } else { -1 };
                    out.add_term(l.clone(), &c.scale(&Coef::from_integer(sign.into())));
                }
                Ok(out)
            }
            SymBasis::S => {
                for (l, c) in &self.terms {
                    out.add_term(l.conjugate(), c);
                }
                Ok(out)
            }
            SymBasis::M => self.to_basis(SymBasis::H)?.omega()?.to_basis(SymBasis::M),
        }
    }

    /// p_k[self]: every x_i ↦ x_i^k, and every coefficient variable v ↦ v^k.
    pub fn power_sum_plethysm(&self, k: u32) -> Result<SymElem> {
        let p = self.to_basis(SymBasis::P)?;
        let mut out = SymElem::zero(SymBasis::P);
        for (l, c) in &p.terms {
            out.add_term(l.scaled(k), &c.power_vars(k as i16));
        }
        Ok(out)
    }

    /// f[g] for the outer function `self` (coefficients of `self` are treated as
    /// scalars), computed through p_λ[g] = Π p_{λ_i}[g]. Result in the basis of `g`.
    pub fn plethysm(&self, g: &SymElem) -> Result<SymElem> {
        let f = self.to_basis(SymBasis::P)?;
        let max_part = f.terms.keys().flat_map(|l| l.parts().iter().copied()).max().unwrap_or(0);
        let gd = g.degrees().into_iter().max().unwrap_or(0);
        let fd = f.degrees().into_iter().max().unwrap_or(0);
        check_cap("degree", fd * gd, DEFAULT_DEGREE_CAP)?;
        let powers: Vec<SymElem> = (0..=max_part)
            .map(|k| if k == 0 { Ok(SymElem::one(SymBasis::P)) } else { g.power_sum_plethysm(k) })
            .collect::<Result<_>>()?;
        let mut out = SymElem::zero(SymBasis::P);
        for (l, c) in &f.terms {
            let mut prod = SymElem::term(SymBasis::P, Partition::empty(), c.clone());
            for &part in l.parts() {
                prod = prod.mul(&powers[part as usize])?;
            }
            out = out.add(&prod)?;
        }
        out.to_basis(g.basis)
    }

    /// h_k[g].
    pub fn plethysm_h(k: u32, g: &SymElem) -> Result<SymElem> {
        SymElem::h(k).plethysm(g)
    }

    /// The adjoint of multiplication by p_1: p_λ ↦ m_1(λ) p_{λ∖1}.
    pub fn p1_derivative(&self) -> Result<SymElem> {
        let p = self.to_basis(SymBasis::P)?;
        let mut out = SymElem::zero(SymBasis::P);
        for (l, c) in &p.terms {
            let m1 = l.multiplicity(1);
            if m1 > 0 {
                let rest = l.remove_part(1).expect("has a part 1");
                out.add_term(rest, &c.scale(&Coef::from_integer((m1 as i64).into())));
            }
        }
        out.to_basis(self.basis)
    }

    /// All coefficients have nonnegative coefficients (in the current basis).
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_nonnegative())
    }

    /// Schur expansion together with the Schur-positivity flag.
    pub fn schur_expand(&self) -> Result<(SymElem, bool)> {
        let s = self.to_basis(SymBasis::S)?;
        let pos = s.is_positive();
        Ok((s, pos))
    }

    /// Values χ(λ) of the class function with this Frobenius characteristic:
    /// ch = Σ χ(λ) p_λ / z_λ, so χ(λ) = z_λ [p_λ].
    pub fn character_values(&self, n: usize) -> Result<Vec<(Partition, MPoly)>> {
        let p = self.component(n).to_basis(SymBasis::P)?;
        Ok(partitions(n)
            .into_iter()
            .map(|l| {
                let c = p.coeff(&l).scale(&rat(l.z()));
                (l, c)
            })
            .collect())
    }

    /// Stable principal specialization x_i ↦ q^{i−1}, multiplied by (q;q)_n, for a
    /// homogeneous element of degree n.
    pub fn stable_spec_numerator(&self) -> Result<MPoly> {
        super::QSymElem::from_sym(self)?.stable_spec_numerator()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Partition::empty()).is_some_and(|c| c.is_one())
    }
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.size().cmp(&a.size()).then(b.cmp(a)));
        let b = self.basis.letter();
        for (i, l) in keys.into_iter().enumerate() {
            let c = &self.terms[l];
            let basis = if l.is_empty() {
                String::new()
            } else {
                let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                format!("{b}[{}]", parts.join(","))
            };
            let (neg, body) = coefficient_text(c);
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let text = match (body.as_str(), basis.is_empty()) {
                ("1", false) => basis,
                (_, true) => body,
                (_, false) => format!("{body} {basis}"),
            };
            write!(f, "{sep}{text}")?;
        }
        Ok(())
    }
}

/// Sign and magnitude text of a coefficient; compound polynomials are parenthesized.
fn coefficient_text(c: &MPoly) -> (bool, String) {
    if c.is_constant() {
        let v = c.constant_term();
        let neg = v < Coef::zero();
        let a = if neg { -v } else { v };
        return (neg, a.to_string());
    }
    if c.len() == 1 {
        let s = c.to_string();
        if let Some(rest) = s.strip_prefix('-') {
            return (true, rest.to_string());
        }
        return (false, s);
    }
    (false, format!("({c})"))
}

/// The monomial-basis coefficient of x^μ (μ a partition) of a homogeneous element.
pub fn m_coefficient(f: &SymElem, mu: &Partition) -> Result<MPoly> {
    Ok(f.to_basis(SymBasis::M)?.coeff(mu))
}

/// H(z) truncated: Σ_{n ≤ N} h_n z^n as a list of degree components.
pub fn h_series(order: usize) -> Vec<SymElem> {
    (0..=order)
        .map(|n| {
            if n == 0 {
                SymElem::one(SymBasis::H)
            } else {
                SymElem::h(n as u32)
            }
        })
        .collect()
}

impl SymElem {
    /// True when only the degree-0 term occurs.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|l| l.is_empty())
    }

    pub fn constant(c: MPoly, basis: SymBasis) -> Self {
        Self::term(basis, Partition::empty(), c)
    }

    /// Coefficient-wise equality after moving `other` to this basis.
    pub fn equals(&self, other: &SymElem) -> Result<bool> {
        Ok(*self == other.to_basis(self.basis)?)
    }
}

/// Series over the symmetric functions: division is only by scalars.
impl crate::poly::Ring for SymElem {
    fn zero() -> Self {
        SymElem::zero(SymBasis::H)
    }
    fn one() -> Self {
        SymElem::one(SymBasis::H)
    }
    fn is_zero(&self) -> bool {
        SymElem::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        SymElem::add(self, o).expect("basis change within the degree cap")
    }
    fn sub(&self, o: &Self) -> Self {
        SymElem::sub(self, o).expect("basis change within the degree cap")
    }
    fn mul(&self, o: &Self) -> Self {
        SymElem::mul(self, o).expect("basis change within the degree cap")
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        if !d.is_scalar() || d.is_zero() {
            return None;
        }
        let c = d.coeff(&Partition::empty());
        let mut out = SymElem::zero(self.basis);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &x.div_exact(&c)?);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn h2_in_m() {
        let m = SymElem::h(2).to_basis(SymBasis::M).unwrap();
        assert_eq!(m.to_string(), "m[2] + m[1,1]");
    }

    #[test]
    fn counterexample_expansion_is_schur_positive() {
        let mut f = SymElem::basis_elem(SymBasis::H, part("4,2")).scale(&MPoly::from_int(2));
        f = f.sub(&SymElem::basis_elem(SymBasis::H, part("4,1,1"))).unwrap();
        f = f.add(&SymElem::basis_elem(SymBasis::H, part("3,2,1"))).unwrap();
        f = f.add(&SymElem::basis_elem(SymBasis::H, part("5,1"))).unwrap();
        assert!(!f.is_positive());
        let (s, pos) = f.schur_expand().unwrap();
        assert!(pos);
        assert_eq!(s.to_string(), "3 s[6] + 3 s[5,1] + 3 s[4,2] + s[3,3] + s[3,2,1]");
    }

    #[test]
    fn omega_rules() {
        assert_eq!(SymElem::h(3).omega().unwrap().to_basis(SymBasis::E).unwrap(), SymElem::e(3));
        let s = SymElem::s(part("3,2,1"));
        assert_eq!(s.omega().unwrap().omega().unwrap(), s);
        let s31 = SymElem::s(part("3,1")).omega().unwrap();
        assert_eq!(s31, SymElem::s(part("2,1,1")));
        // ω commutes with conversion
        let viah = SymElem::s(part("3,1")).to_basis(SymBasis::H).unwrap().omega().unwrap();
        assert!(viah.equals(&s31).unwrap());
    }

    #[test]
    fn small_plethysms() {
        let h2h2 = SymElem::plethysm_h(2, &SymElem::h(2)).unwrap();
        let s = h2h2.to_basis(SymBasis::S).unwrap();
        assert_eq!(s.to_string(), "s[4] + s[2,2]");
        let g = SymElem::s(part("2,1"));
        assert_eq!(SymElem::plethysm_h(1, &g).unwrap(), g);
    }

    #[test]
    fn p1_derivative_of_h() {
        for n in 1..=6 {
            let d = SymElem::h(n).p1_derivative().unwrap();
            let expect = if n == 1 { SymElem::one(SymBasis::H) } else { SymElem::h(n - 1) };
            assert_eq!(d, expect);
        }
        assert!(SymElem::one(SymBasis::H).p1_derivative().unwrap().is_zero());
    }

    #[test]
    fn product_in_schur_basis() {
        let s1 = SymElem::s(part("1"));
        let sq = s1.mul(&s1).unwrap();
        assert_eq!(sq.to_string(), "s[2] + s[1,1]");
    }
}
