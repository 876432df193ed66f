//! Polynomials in finitely many variables x_1, …, x_m with integer coefficients, used as
//! the common ground for comparing enumerations.

use std::collections::BTreeMap;
use std::fmt;

/// Σ c · x^e with e an exponent vector of length `nvars`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonoPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, i64>,
}

impl MonoPoly {
    pub fn zero(nvars: usize) -> Self {
        MonoPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u8]) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: Vec<u8>, c: i64) {
        debug_assert_eq!(e.len(), self.nvars);
        if c == 0 {
            return;
        }
        let x = self.terms.entry(e.clone()).or_insert(0);
        *x += c;
        if *x == 0 {
            self.terms.remove(&e);
        }
    }

    /// Adds the monomial whose variables are the given 1-based letter values.
    pub fn add_word(&mut self, values: impl IntoIterator<Item = u32>, c: i64) {
        let mut e = vec![0u8; self.nvars];
        for v in values {
            e[v as usize - 1] += 1;
        }
        self.add_term(e, c);
    }

    /// Adds c · M_α(x_1, …, x_m): all placements of α on increasing variable indices.
    pub fn add_monomial_quasisym(&mut self, alpha: &[u32], c: i64) {
        fn rec(alpha: &[u32], start: usize, e: &mut Vec<u8>, out: &mut MonoPoly, c: i64) {
            let Some((&a, rest)) = alpha.split_first() else {
                out.add_term(e.clone(), c);
                return;
            };
            let m = e.len();
            for i in start..m {
                if m - i < alpha.len() {
                    break;
                }
                e[i] = a as u8;
                rec(rest, i + 1, e, out, c);
                e[i] = 0;
            }
        }
        let mut e = vec![0u8; self.nvars];
        rec(alpha, 0, &mut e, self, c);
    }

    pub fn add(&mut self, other: &MonoPoly) {
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), c);
        }
    }

    /// Exchange x_k and x_{k+1} (1-based k).
    pub fn swap_vars(&self, k: usize) -> MonoPoly {
        let mut out = MonoPoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(k - 1, k);
            out.add_term(e2, c);
        }
        out
    }
}

impl fmt::Display for MonoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let sep = if first { "" } else { " " };
            let sp = if first || sign.is_empty() { "" } else { " " };
            let a = c.abs();
            let body = match (a, mono.is_empty()) {
                (_, true) => a.to_string(),
                (1, false) => mono.join("*"),
                (_, false) => format!("{a}*{}", mono.join("*")),
            };
            write!(f, "{sep}{sign}{sp}{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_quasisym_in_two_vars() {
        let mut p = MonoPoly::zero(2);
        p.add_monomial_quasisym(&[2], 1);
        p.add_monomial_quasisym(&[1, 1], 1);
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&[1, 1]), 1);
        let mut q = MonoPoly::zero(2);
        q.add_monomial_quasisym(&[1, 1, 1], 1);
        assert!(q.is_empty());
    }
}
