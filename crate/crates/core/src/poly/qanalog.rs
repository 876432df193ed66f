use super::mpoly::{MPoly, Var};
use crate::error::{invalid, Result};

fn q() -> MPoly {
    MPoly::var(Var::Q)
}

/// [n]_x = 1 + x + … + x^{n−1}.
pub fn q_int_of(n: usize, x: &MPoly) -> MPoly {
    let mut acc = MPoly::zero();
    let mut pw = MPoly::one();
    for _ in 0..n {
        acc += &pw;
        pw = &pw * x;
    }
    acc
}

pub fn q_int(n: usize) -> MPoly {
    q_int_of(n, &q())
}

pub fn q_fact(n: usize) -> MPoly {
    (1..=n).fold(MPoly::one(), |acc, k| &acc * &q_int(k))
}

/// Gaussian binomial coefficient via [n,k] = [n−1,k−1] + q^k [n−1,k].
pub fn gauss(n: usize, k: usize) -> Result<MPoly> {
    if k > n {
        return invalid(format!("gauss({n},{k}) needs k ≤ n"));
    }
    Ok(gauss_table(n)[k].clone())
}

/// Row n of the Gaussian binomials.
pub fn gauss_table(n: usize) -> Vec<MPoly> {
    let mut row = vec![MPoly::one()];
    for m in 1..=n {
        let mut next = vec![MPoly::one(); m + 1];
        for k in 1..m {
            next[k] = &row[k - 1] + &(&MPoly::term(1, &[(Var::Q, k as i16)]) * &row[k]);
        }
        row = next;
    }
    row
}

/// q-multinomial [n; k_0, …, k_m]_q with n = Σ k_i.
pub fn q_multinomial(parts: &[usize]) -> MPoly {
    let mut acc = MPoly::one();
    let mut total = 0;
    for &k in parts {
        total += k;
        acc = &acc * &gauss_table(total)[k];
    }
    acc
}

/// (a;q)_n = (1−a)(1−aq)…(1−aq^{n−1}).
pub fn pochhammer(a: &MPoly, n: usize) -> MPoly {
    let mut acc = MPoly::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = &acc * &(&MPoly::one() - &aq);
        aq = &aq * &q();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::mpoly::int;

    #[test]
    fn small_values() {
        assert_eq!(q_int(3).to_string(), "1 + q + q^2");
        assert_eq!(gauss(4, 2).unwrap().to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert!(gauss(5, 0).unwrap().is_one());
        assert!(gauss(2, 3).is_err());
    }

    #[test]
    fn gauss_symmetric_and_factorial_at_one() {
        for n in 0..=12 {
            let row = gauss_table(n);
            for k in 0..=n {
                assert_eq!(row[k], row[n - k]);
                assert!(row[k].is_nonnegative());
            }
        }
        for n in 0..=8u64 {
            let v = q_fact(n as usize).eval_var(Var::Q, &int(1));
            assert_eq!(v.as_i64().unwrap() as u64, crate::combinatorics::factorial(n));
        }
    }

    #[test]
    fn gauss_from_factorials() {
        let lhs = &(&gauss(6, 2).unwrap() * &q_fact(2)) * &q_fact(4);
        assert_eq!(lhs, q_fact(6));
        assert_eq!(q_multinomial(&[2, 1, 3]), &gauss(3, 1).unwrap() * &gauss(6, 3).unwrap());
    }

    #[test]
    fn pochhammer_small() {
        let p = pochhammer(&MPoly::var(Var::Z), 2);
        assert_eq!(p.to_string(), "1 - z - q*z + q*z^2");
    }
}
