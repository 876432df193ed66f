//! Truncated power series in z over an arbitrary exact coefficient ring.

use super::mpoly::MPoly;
use super::qanalog::gauss_table;
use crate::error::{Error, Result};

/// Exact commutative coefficient ring for series arithmetic.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
    /// Exact quotient, `None` if `d` does not divide `self`.
    fn try_div(&self, d: &Self) -> Option<Self>;
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d)
    }
}

/// Σ_{n ≤ N} c_n z^n, exact through z^N.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = R::one();
        s
    }

    /// Builds from the first coefficients; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| self.coeffs[i].sub(&o.coeffs[i])).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut coeffs = vec![R::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !o.coeffs[j].is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&o.coeffs[j]));
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be a unit of the ring.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = R::one().try_div(c0).ok_or(Error::InexactDivision)?;
        let n = self.order();
        let mut b: Vec<R> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&b[k - i]));
                }
            }
            b.push(acc.neg().mul(&inv0));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Exact quotient. When the denominator's constant term is not a unit, it is first
    /// cancelled from every coefficient of both series.
    pub fn div(&self, den: &Self) -> Result<Self> {
        if let Ok(inv) = den.recip() {
            return Ok(self.mul(&inv));
        }
        let g = den.coeffs[0].clone();
        let cancel = |s: &Self| -> Result<Self> {
            let coeffs = s
                .coeffs
                .iter()
                .map(|c| c.try_div(&g).ok_or(Error::InexactDivision))
                .collect::<Result<Vec<R>>>()?;
            Ok(TruncatedSeries { coeffs })
        };
        let num2 = cancel(self)?;
        let den2 = cancel(den)?;
        Ok(num2.mul(&den2.recip()?))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// Series in q-divided powers: Σ c_n z^n / [n]_q!. Products use the q-binomial
/// convolution, so the coefficients c_n stay polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct QExpSeries {
    coeffs: Vec<MPoly>,
}

impl QExpSeries {
    pub fn from_coeffs(mut coeffs: Vec<MPoly>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, MPoly::zero());
        QExpSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// c_n, the numerator over [n]_q!.
    pub fn coeff(&self, n: usize) -> &MPoly {
        &self.coeffs[n]
    }

    /// z ↦ x z.
    pub fn rescale(&self, x: &MPoly) -> Self {
        let mut pw = MPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &pw);
            pw = &pw * x;
        }
        QExpSeries { coeffs }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        QExpSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        QExpSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &o.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &MPoly) -> Self {
        QExpSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let coeffs = (0..=n)
            .map(|m| {
                let g = gauss_table(m);
                let mut acc = MPoly::zero();
                for k in 0..=m {
                    acc += &(&(&g[k] * &self.coeffs[k]) * &o.coeffs[m - k]);
                }
                acc
            })
            .collect();
        QExpSeries { coeffs }
    }

    pub fn recip(&self) -> Result<Self> {
        let inv0 = MPoly::one()
            .div_exact(&self.coeffs[0])
            .filter(|x| x.is_constant())
            .ok_or(Error::InexactDivision)?;
        let n = self.order();
        let mut b = vec![inv0.clone()];
        for m in 1..=n {
            let g = gauss_table(m);
            let mut acc = MPoly::zero();
            for k in 1..=m {
                acc += &(&(&g[k] * &self.coeffs[k]) * &b[m - k]);
            }
            b.push(-&(&acc * &inv0));
        }
        Ok(QExpSeries { coeffs: b })
    }

    /// Exact quotient with cancellation of a non-unit constant term, as for
    /// [`TruncatedSeries::div`].
    pub fn div(&self, den: &Self) -> Result<Self> {
        if let Ok(inv) = den.recip() {
            return Ok(self.mul(&inv));
        }
        let g = den.coeffs[0].clone();
        let cancel = |s: &Self| -> Result<Self> {
            let coeffs = s
                .coeffs
                .iter()
                .map(|c| c.div_exact(&g).ok_or(Error::InexactDivision))
                .collect::<Result<Vec<MPoly>>>()?;
            Ok(QExpSeries { coeffs })
        };
        Ok(cancel(self)?.mul(&cancel(den)?.recip()?))
    }
}

/// exp_q(z) = Σ z^n/[n]_q!.
pub fn exp_q_series(order: usize) -> QExpSeries {
    QExpSeries::from_coeffs(vec![MPoly::one(); order + 1], order)
}

/// Exp_q(z) = Σ q^{C(n,2)} z^n/[n]_q!.
pub fn cap_exp_q_series(order: usize) -> QExpSeries {
    let coeffs = (0..=order)
        .map(|n| MPoly::term(1, &[(super::Var::Q, (n * n.saturating_sub(1) / 2) as i16)]))
        .collect();
    QExpSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    #[test]
    fn exp_q_times_cap_exp_q_of_minus_z() {
        let n = 6;
        let minus = exp_q_series(n).rescale(&MPoly::from_int(-1));
        let prod = minus.mul(&cap_exp_q_series(n));
        assert!(prod.coeff(0).is_one());
        for k in 1..=n {
            assert!(prod.coeff(k).is_zero(), "grade {k}");
        }
    }

    #[test]
    fn geometric_series_reciprocal() {
        let z_poly = vec![MPoly::one(), MPoly::from_int(-1)];
        let s = TruncatedSeries::from_coeffs(z_poly, 5);
        let inv = s.recip().unwrap();
        for k in 0..=5 {
            assert!(inv.coeff(k).is_one());
        }
    }

    #[test]
    fn division_cancels_constant_factor() {
        let t = MPoly::var(Var::T);
        let one_minus_t = &MPoly::one() - &t;
        let num = TruncatedSeries::from_coeffs(vec![one_minus_t.clone()], 3);
        let den = TruncatedSeries::from_coeffs(vec![one_minus_t.clone(), &t * &one_minus_t], 3);
        let quo = num.div(&den).unwrap();
        assert!(quo.coeff(0).is_one());
        assert_eq!(quo.coeff(1), &-&t);
        assert_eq!(quo.coeff(2), &t.pow(2));
    }
}
