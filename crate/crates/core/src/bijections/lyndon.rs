//! Lyndon and increasing factorizations over an arbitrary total order.
//!
//! A Lyndon word here is strictly larger than each of its proper rotations, and a Lyndon
//! factorization lists its factors in weakly increasing order. That is the classical
//! theory under the reversed letter order, so Duval's algorithm runs with the comparison
//! flipped.

use std::cmp::Ordering;

/// Lyndon factorization of `w` (larger-than-rotations convention) as consecutive slices.
pub fn lyndon_factorization_by<T, F>(w: &[T], cmp: F) -> Vec<&[T]>
where
    F: Fn(&T, &T) -> Ordering,
{
    // `le(a, b)` is a ⪯ b in the reversed order
    let le = |a: &T, b: &T| cmp(a, b) != Ordering::Less;
    let lt = |a: &T, b: &T| cmp(a, b) == Ordering::Greater;
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && le(&w[k], &w[j]) {
            if lt(&w[k], &w[j]) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(&w[i..i + period]);
            i += period;
        }
    }
    out
}

/// True when `w` is nonempty and strictly larger than every proper rotation.
pub fn is_lyndon_by<T, F>(w: &[T], cmp: F) -> bool
where
    F: Fn(&T, &T) -> Ordering,
{
    let n = w.len();
    n > 0
        && (1..n).all(|r| {
            let rotated = w[r..].iter().chain(&w[..r]);
            match w.iter().zip(rotated).map(|(a, b)| cmp(a, b)).find(|o| o.is_ne()) {
                Some(o) => o == Ordering::Greater,
                None => false,
            }
        })
}

/// The Lyndon type: factor lengths sorted decreasingly.
pub fn lyndon_type_by<T, F>(w: &[T], cmp: F) -> Vec<u32>
where
    F: Fn(&T, &T) -> Ordering,
{
    let mut parts: Vec<u32> = lyndon_factorization_by(w, cmp)
        .iter()
        .map(|f| f.len() as u32)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// The increasing factorization w = w_1⋯w_k with w_i = a_i^{j_i} u_i, every letter of the
/// nonempty u_i below a_i, and a_1 ≤ … ≤ a_k; `None` when it does not exist.
///
/// The last factor must start at the beginning of the last maximal run of the largest
/// letter, since no u_i may contain that letter; peeling factors from the right is
/// therefore forced.
pub fn increasing_factorization_by<T, F>(w: &[T], cmp: F) -> Option<Vec<&[T]>>
where
    F: Fn(&T, &T) -> Ordering,
{
    if w.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    let mut end = w.len();
    while end > 0 {
        let prefix = &w[..end];
        let max = prefix
            .iter()
            .max_by(|a, b| cmp(a, b))
            .expect("nonempty prefix");
        let last_max = prefix.iter().rposition(|x| cmp(x, max).is_eq())?;
        if last_max + 1 == end {
            return None;
        }
        let mut start = last_max;
        while start > 0 && cmp(&prefix[start - 1], max).is_eq() {
            start -= 1;
        }
        out.push(&w[start..end]);
        end = start;
    }
    out.reverse();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(s: &str) -> Vec<u32> {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    fn show(f: &[&[u32]]) -> String {
        f.iter()
            .map(|w| w.iter().map(|d| d.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join("·")
    }

    #[test]
    fn digit_word_factorizations() {
        let w = digits("87886699558795");
        let ly = lyndon_factorization_by(&w, u32::cmp);
        assert_eq!(show(&ly), "87·8866·99558795");
        let inc = increasing_factorization_by(&w, u32::cmp).unwrap();
        assert_eq!(show(&inc), "87·8866·995587·95");
        assert!(ly.iter().all(|f| is_lyndon_by(f, u32::cmp)));
    }

    #[test]
    fn no_increasing_factorization_with_singleton_factor() {
        assert!(increasing_factorization_by(&[3u32], u32::cmp).is_none());
        assert!(increasing_factorization_by(&digits("213"), u32::cmp).is_none());
        assert_eq!(lyndon_type_by(&digits("213"), u32::cmp), vec![2, 1]);
    }

    #[test]
    fn increasing_factorization_exists_iff_no_singleton_lyndon_factor() {
        for n in 1..=6u32 {
            for code in 0..3u32.pow(n) {
                let w: Vec<u32> = (0..n).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
                let has_one = lyndon_type_by(&w, u32::cmp).contains(&1);
                assert_eq!(increasing_factorization_by(&w, u32::cmp).is_none(), has_one, "{w:?}");
            }
        }
    }

    /// Every splitting of w whose pieces are a^j u (u nonempty, below a) with weakly
    /// increasing leading letters.
    fn all_increasing_factorizations(w: &[u32]) -> Vec<Vec<&[u32]>> {
        let n = w.len();
        let mut out = Vec::new();
        for cuts in 0..1u32 << n.saturating_sub(1) {
            let mut pieces = Vec::new();
            let mut start = 0;
            for i in 1..=n {
                if i == n || cuts >> (i - 1) & 1 == 1 {
                    pieces.push(&w[start..i]);
                    start = i;
                }
            }
            let shaped = pieces.iter().all(|f| {
                let a = f[0];
                let j = f.iter().take_while(|&&x| x == a).count();
                j < f.len() && f[j..].iter().all(|&x| x < a)
            });
            if shaped && pieces.windows(2).all(|p| p[0][0] <= p[1][0]) {
                out.push(pieces);
            }
        }
        out
    }

    #[test]
    fn increasing_factorization_is_unique() {
        for n in 1..=7u32 {
            for code in 0..3u32.pow(n) {
                let w: Vec<u32> = (0..n).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
                let all = all_increasing_factorizations(&w);
                assert!(all.len() <= 1, "{w:?}");
                assert_eq!(all.first(), increasing_factorization_by(&w, u32::cmp).as_ref(), "{w:?}");
            }
        }
    }
}
