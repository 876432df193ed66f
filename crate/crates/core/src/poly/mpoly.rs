use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Coef = BigRational;

pub const NVARS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    P = 1,
    T = 2,
    R = 3,
    Z = 4,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::P, Var::T, Var::R, Var::Z];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::P => "p",
            Var::T => "t",
            Var::R => "r",
            Var::Z => "z",
        }
    }
}

/// Exponent vector over (q, p, t, r, z). Negative exponents are allowed (Laurent).
pub type Exps = [i16; NVARS];

pub fn int(c: i64) -> Coef {
    BigRational::from_integer(BigInt::from(c))
}

/// Exact multivariate Laurent polynomial in q, p, t, r, z with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Exps, Coef>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(int(1))
    }

    pub fn constant(c: Coef) -> Self {
        let mut m = MPoly::zero();
        if !c.is_zero() {
            m.terms.insert([0; NVARS], c);
        }
        m
    }

    pub fn from_int(c: i64) -> Self {
        MPoly::constant(int(c))
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(unit_exps(v, 1), int(1))
    }

    pub fn monomial(e: Exps, c: Coef) -> Self {
        let mut m = MPoly::zero();
        if !c.is_zero() {
            m.terms.insert(e, c);
        }
        m
    }

    /// c · Π v^k over the listed (v, k).
    pub fn term(c: i64, powers: &[(Var, i16)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in powers {
            e[v as usize] += k;
        }
        MPoly::monomial(e, int(c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; NVARS]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Coef)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exps) -> Coef {
        self.terms.get(e).cloned().unwrap_or_else(Coef::zero)
    }

    pub fn constant_term(&self) -> Coef {
        self.coeff(&[0; NVARS])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; NVARS])
    }

    pub fn add_term(&mut self, e: Exps, c: Coef) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Coef) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiply by the monomial Π v^{e_v}.
    pub fn shift(&self, e: &Exps) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (add_exps(k, e), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn max_degree(&self, v: Var) -> Option<i16> {
        self.terms.keys().map(|e| e[v as usize]).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i16> {
        self.terms.keys().map(|e| e[v as usize]).min()
    }

    /// Coefficient of v^k as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: i16) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v as usize] == k)
                .map(|(e, c)| {
                    let mut e2 = *e;
                    e2[v as usize] = 0;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Drop all terms whose v-degree exceeds `order`.
    pub fn truncate(&self, v: Var, order: i16) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v as usize] <= order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Substitute v ↦ the monomial Π w^{m_w}; any integer exponent of v is allowed.
    pub fn subst_monomial(&self, v: Var, m: &Exps) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let k = e[v as usize];
            let mut e2 = *e;
            e2[v as usize] = 0;
            for i in 0..NVARS {
                e2[i] += k * m[i];
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Substitute v ↦ g. Negative exponents of v are rejected with `None`.
    pub fn subst(&self, v: Var, g: &MPoly) -> Option<MPoly> {
        let maxk = self.max_degree(v).unwrap_or(0);
        if self.min_degree(v).unwrap_or(0) < 0 {
            return None;
        }
        let mut powers = vec![MPoly::one()];
        for k in 1..=maxk as usize {
            let next = &powers[k - 1] * g;
            powers.push(next);
        }
        let mut out = MPoly::zero();
        for k in 0..=maxk {
            let part = self.coeff_of(v, k);
            if !part.is_zero() {
                out += &(&part * &powers[k as usize]);
            }
        }
        Some(out)
    }

    /// Substitute a rational value for v (v must not appear with negative exponent
    /// unless the value is nonzero).
    pub fn eval_var(&self, v: Var, x: &Coef) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let k = e[v as usize];
            let mut e2 = *e;
            e2[v as usize] = 0;
            out.add_term(e2, c * rat_pow(x, k as i32));
        }
        out
    }

    /// Every variable w ↦ w^k (the plethystic action of p_k on coefficients).
    pub fn power_vars(&self, k: i16) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.map(|x| x * k), c.clone()))
                .collect(),
        }
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Constant value as an integer, if the polynomial is an integer constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if !self.is_constant() {
            return None;
        }
        let c = self.constant_term();
        c.is_integer().then(|| c.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer()?.to_i64()
    }

    /// Exact division. Returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if d.terms.len() == 1 {
            let (de, dc) = d.terms.iter().next().unwrap();
            let inv = dc.recip();
            return Some(MPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(e, c)| (sub_exps(e, de), c * &inv))
                    .collect(),
            });
        }
        // Quotient exponents must lie in the box [min(self) - max(d), max(self) - min(d)];
        // leaving it proves non-divisibility and guarantees termination.
        let mut lo = [0i16; NVARS];
        let mut hi = [0i16; NVARS];
        for v in Var::ALL {
            let i = v as usize;
            lo[i] = self.min_degree(v).unwrap() - d.max_degree(v).unwrap();
            hi[i] = self.max_degree(v).unwrap() - d.min_degree(v).unwrap();
        }
        let (dlead_e, dlead_c) = d.terms.iter().next_back().unwrap();
        let dlead_inv = dlead_c.recip();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let qe = sub_exps(re, dlead_e);
            if (0..NVARS).any(|i| qe[i] < lo[i] || qe[i] > hi[i]) {
                return None;
            }
            let qc = rc * &dlead_inv;
            let t = MPoly::monomial(qe, qc);
            rem -= &(&t * d);
            quot += &t;
        }
        Some(quot)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coef) -> Coef) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }
}

pub fn unit_exps(v: Var, k: i16) -> Exps {
    let mut e = [0; NVARS];
    e[v as usize] = k;
    e
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut e = *a;
    for i in 0..NVARS {
        e[i] += b[i];
    }
    e
}

fn sub_exps(a: &Exps, b: &Exps) -> Exps {
    let mut e = *a;
    for i in 0..NVARS {
        e[i] -= b[i];
    }
    e
}

fn rat_pow(x: &Coef, k: i32) -> Coef {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, o: MPoly) -> MPoly {
        self += &o;
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, o: &MPoly) {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, o: MPoly) -> MPoly {
        self -= &o;
        self
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, o: &MPoly) {
        for (e, c) in &o.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(add_exps(e1, e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        &self * &o
    }
}

impl MulAssign<&MPoly> for MPoly {
    fn mul_assign(&mut self, o: &MPoly) {
        *self = &*self * o;
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::from_int(c)
    }
}

impl fmt::Display for MPoly {
    /// Terms in increasing exponent order (q-major), e.g. `1 + 3*p*t + p*q^2*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut sorted: Vec<(&Exps, &Coef)> = self.terms.iter().collect();
        sorted.sort_by_key(|(e, _)| {
            let total: i32 = e.iter().map(|&x| x as i32).sum();
            let mut rev = **e;
            rev.reverse();
            (total, rev)
        });
        for (e, c) in sorted {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[**v as usize] != 0)
                .map(|v| {
                    let k = e[*v as usize];
                    if k == 1 {
                        v.name().to_string()
                    } else {
                        format!("{}^{}", v.name(), k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", a, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }
    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    #[test]
    fn arithmetic() {
        let a = &MPoly::one() + &q();
        let b = &MPoly::one() - &q();
        let prod = &a * &b;
        assert_eq!(prod, &MPoly::one() - &q().pow(2));
        assert_eq!(prod.to_string(), "1 - q^2");
    }

    #[test]
    fn exact_division() {
        let tq = &t() * &q();
        let one_minus = &MPoly::one() - &tq;
        let num = &MPoly::one() - &tq.pow(4);
        let quo = num.div_exact(&one_minus).unwrap();
        assert_eq!(quo, &(&(&MPoly::one() + &tq) + &tq.pow(2)) + &tq.pow(3));
        assert!(MPoly::one().div_exact(&one_minus).is_none());
        let laurent = q().shift(&unit_exps(Var::Q, -3));
        assert_eq!(laurent.min_degree(Var::Q), Some(-2));
        assert_eq!(laurent.div_exact(&q()).unwrap(), MPoly::term(1, &[(Var::Q, -3)]));
    }

    #[test]
    fn substitution() {
        let f = &q() + &t();
        let g = f.subst_monomial(Var::Q, &unit_exps(Var::Q, -1));
        assert_eq!(g, &MPoly::term(1, &[(Var::Q, -1)]) + &t());
        let h = f.subst(Var::T, &q().pow(2)).unwrap();
        assert_eq!(h, &q() + &q().pow(2));
        assert_eq!(f.eval_var(Var::Q, &int(2)), &MPoly::from_int(2) + &t());
    }
}
