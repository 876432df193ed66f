//! Banners, their Lyndon and increasing factorizations, the banner/ornament bijection and
//! the recurrence bijection γ onto pairs (shorter banner, marked sequence).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::lyndon::{increasing_factorization_by, lyndon_factorization_by};
use super::necklace::{may_follow, Necklace, Ornament};
use crate::combinatorics::{format_word, parse_word, Alphabet, BicolorLetter, Partition};
use crate::error::{invalid, Error, Result};
use crate::symfunc::MonoPoly;

const ORDER: Alphabet = Alphabet::Interleaved;

fn cmp_letters(a: &BicolorLetter, b: &BicolorLetter) -> Ordering {
    ORDER.cmp(a, b)
}

/// A word in which a barred letter is followed by a letter of no larger value and an
/// unbarred letter, unless last, by one of no smaller value. A nonempty banner therefore
/// ends in an unbarred letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Banner {
    letters: Vec<BicolorLetter>,
}

impl Banner {
    pub fn new(letters: Vec<BicolorLetter>) -> Result<Self> {
        if let Some(i) = (1..letters.len()).find(|&i| !may_follow(letters[i - 1], letters[i])) {
            return invalid(format!(
                "letter {} cannot be followed by {} in a banner",
                letters[i - 1],
                letters[i]
            ));
        }
        if letters.last().is_some_and(|l| l.barred) {
            return invalid("a banner ends with an unbarred letter");
        }
        Ok(Banner { letters })
    }

    pub fn empty() -> Self {
        Banner::default()
    }

    pub fn letters(&self) -> &[BicolorLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn bars(&self) -> usize {
        self.letters.iter().filter(|l| l.barred).count()
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.letters.iter().map(|l| l.value)
    }

    pub fn lyndon_factorization(&self) -> Vec<&[BicolorLetter]> {
        lyndon_factorization_by(&self.letters, cmp_letters)
    }

    pub fn lyndon_type(&self) -> Partition {
        Partition::new(
            self.lyndon_factorization()
                .iter()
                .map(|f| f.len() as u32)
                .collect(),
        )
    }

    pub fn increasing_factorization(&self) -> Option<Vec<&[BicolorLetter]>> {
        increasing_factorization_by(&self.letters, cmp_letters)
    }

    /// ψ(B): the necklaces closed up from the Lyndon factors.
    pub fn to_ornament(&self) -> Ornament {
        Ornament::new(
            self.lyndon_factorization()
                .into_iter()
                .map(|f| Necklace::new(f.to_vec()).expect("Lyndon factors of a banner close up"))
                .collect(),
        )
    }

    /// ψ⁻¹: read each necklace from its largest rotation and concatenate in weakly
    /// increasing order.
    pub fn from_ornament(r: &Ornament) -> Banner {
        let mut words: Vec<&[BicolorLetter]> =
            r.necklaces().iter().map(Necklace::letters).collect();
        // increasing in the factorization order: a proper prefix comes after
        words.sort_by(|u, v| lyndon_order(u, v));
        Banner {
            letters: words.concat(),
        }
    }

    /// τ(B): toggle the bar on every letter but the last, then reverse the values present
    /// (the i-th smallest becomes the i-th largest).
    pub fn complement(&self) -> Banner {
        let flip = value_reversal(self.values());
        let n = self.letters.len();
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, l)| BicolorLetter {
                value: flip[&l.value],
                barred: if i + 1 == n { l.barred } else { !l.barred },
            })
            .collect();
        Banner { letters }
    }
}

/// The order in which Lyndon factors appear: the reverse of the classical order under the
/// reversed alphabet, which differs from plain lexicographic order only on prefixes.
fn lyndon_order(u: &[BicolorLetter], v: &[BicolorLetter]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match ORDER.cmp(a, b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    v.len().cmp(&u.len())
}

pub(crate) fn value_reversal(values: impl Iterator<Item = u32>) -> HashMap<u32, u32> {
    let mut vals: Vec<u32> = values.collect();
    vals.sort_unstable();
    vals.dedup();
    vals.iter().copied().zip(vals.iter().rev().copied()).collect()
}

impl fmt::Display for Banner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.letters))
    }
}

impl std::str::FromStr for Banner {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Banner::new(parse_word(s)?)
    }
}

/// All banners of length n with values in 1..=m.
pub fn enumerate_banners(n: usize, m: u32) -> Vec<Banner> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Banner::empty());
        return out;
    }
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, m: u32, cur: &mut Vec<BicolorLetter>, out: &mut Vec<Banner>) {
        if cur.len() == n {
            if !cur.last().unwrap().barred {
                out.push(Banner {
                    letters: cur.clone(),
                });
            }
            return;
        }
        let (lo, hi) = match cur.last() {
            None => (1, m),
            Some(l) if l.barred => (1, l.value),
            Some(l) => (l.value, m),
        };
        for v in lo..=hi {
            for barred in [false, true] {
                cur.push(BicolorLetter { value: v, barred });
                rec(n, m, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, m, &mut cur, &mut out);
    out
}

/// Σ wt(B) over banners of length n, values ≤ m, keyed by (Lyndon type, bar count).
pub fn banner_weights(n: usize, m: u32) -> HashMap<(Partition, usize), MonoPoly> {
    let mut out: HashMap<(Partition, usize), MonoPoly> = HashMap::new();
    for b in enumerate_banners(n, m) {
        out.entry((b.lyndon_type(), b.bars()))
            .or_insert_with(|| MonoPoly::zero(m as usize))
            .add_word(b.values(), 1);
    }
    out
}

/// A weakly increasing sequence ω of length ≥ 2 with a mark 1 ≤ b ≤ |ω| − 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MarkedSequence {
    omega: Vec<u32>,
    mark: usize,
}

impl MarkedSequence {
    pub fn new(omega: Vec<u32>, mark: usize) -> Result<Self> {
        if omega.len() < 2 || omega.windows(2).any(|w| w[0] > w[1]) || omega.contains(&0) {
            return invalid("a marked sequence is weakly increasing of length at least 2");
        }
        if mark == 0 || mark >= omega.len() {
            return invalid(format!("mark {mark} outside 1..{}", omega.len() - 1));
        }
        Ok(MarkedSequence { omega, mark })
    }

    pub fn omega(&self) -> &[u32] {
        &self.omega
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for MarkedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.omega.iter().all(|&v| v < 10) { "" } else { "," };
        let w: Vec<String> = self.omega.iter().map(|v| v.to_string()).collect();
        write!(f, "({}, {})", w.join(sep), self.mark)
    }
}

/// All marked sequences of length `len` with values in 1..=m.
pub fn enumerate_marked(len: usize, m: u32) -> Vec<MarkedSequence> {
    let mut out = Vec::new();
    if len < 2 {
        return out;
    }
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, m: u32, cur: &mut Vec<u32>, out: &mut Vec<MarkedSequence>) {
        if cur.len() == len {
            for b in 1..len {
                out.push(MarkedSequence {
                    omega: cur.clone(),
                    mark: b,
                });
            }
            return;
        }
        for v in cur.last().copied().unwrap_or(1)..=m {
            cur.push(v);
            rec(len, m, cur, out);
            cur.pop();
        }
    }
    rec(len, m, &mut cur, &mut out);
    out
}

/// γ(B) = (B′, (ω, b)) for a nonempty banner whose Lyndon type has no part 1.
pub fn gamma(b: &Banner) -> Result<(Banner, MarkedSequence)> {
    let factors = b
        .increasing_factorization()
        .filter(|_| !b.is_empty())
        .ok_or_else(|| Error::Invalid(format!("banner {b} has a Lyndon factor of length 1")))?;
    let (last, init) = factors.split_last().expect("at least one factor");
    let a = last[0];
    let p = last.iter().take_while(|&&x| x == a).count();
    let tail = &last[p..];
    let r = tail.iter().position(|x| !x.barred).expect("a banner ends unbarred");
    let pivot = if r == 0 { a } else { tail[r - 1] };
    // s counts the letters of the tail that move into ω
    let mut s = r;
    while s < tail.len() {
        let x = tail[s];
        if !x.barred && ORDER.cmp(&x, &pivot) == Ordering::Less {
            s += 1;
        } else if x.barred && ORDER.cmp(&x, &pivot) != Ordering::Greater {
            s += 1;
            break;
        } else {
            break;
        }
    }
    let prefix: Vec<BicolorLetter> = init.concat();
    let (moved, rest): (&[BicolorLetter], Vec<BicolorLetter>) = if s == tail.len() {
        (last, prefix)
    } else {
        let mut rest = prefix;
        rest.extend_from_slice(&last[..p]);
        rest.extend_from_slice(&tail[s..]);
        (&tail[..s], rest)
    };
    let mut omega: Vec<u32> = moved.iter().map(|l| l.value).collect();
    omega.sort_unstable();
    let mark = moved.iter().filter(|l| l.barred).count();
    Ok((Banner { letters: rest }, MarkedSequence::new(omega, mark)?))
}

/// γ⁻¹(B′, (ω, b)).
pub fn gamma_inverse(b: &Banner, ms: &MarkedSequence) -> Result<Banner> {
    if !b.is_empty() && b.increasing_factorization().is_none() {
        return invalid(format!("banner {b} has a Lyndon factor of length 1"));
    }
    let w = ms.omega();
    let len = w.len();
    let nb = ms.mark();
    // ω̄_len … ω̄_{len−b+1}, then ω_1 … ω_{len−b}
    let barred_block: Vec<BicolorLetter> = w[len - nb..].iter().rev().map(|&v| BicolorLetter::bar(v)).collect();
    let plain_block: Vec<BicolorLetter> = w[..len - nb].iter().map(|&v| BicolorLetter::plain(v)).collect();
    let factors = b.increasing_factorization().unwrap_or_default();
    let Some(last) = factors.last() else {
        return Ok(Banner {
            letters: [barred_block, plain_block].concat(),
        });
    };
    let a = last[0];
    if a.value <= w[len - 1] {
        let mut letters = b.letters.clone();
        letters.extend(barred_block);
        letters.extend(plain_block);
        return Ok(Banner { letters });
    }
    let p = last.iter().take_while(|&&x| x == a).count();
    let j1 = last[p];
    let pivot = BicolorLetter::bar(w[len - nb]);
    let start = b.len() - last.len();
    let mut letters = b.letters[..start + p].to_vec();
    if ORDER.cmp(&j1, &pivot) == Ordering::Greater {
        letters.extend(barred_block);
        letters.extend(plain_block);
    } else {
        letters.extend_from_slice(&barred_block[..nb - 1]);
        letters.extend(plain_block);
        letters.push(pivot);
    }
    letters.extend_from_slice(&last[p..]);
    Ok(Banner { letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn banner(s: &str) -> Banner {
        s.parse().unwrap()
    }

    fn show(f: &[&[BicolorLetter]]) -> String {
        f.iter().map(|w| format_word(w)).collect::<Vec<_>>().join("·")
    }

    #[test]
    fn lyndon_factorization_of_a_banner() {
        let b = banner("2'27'57'5'47");
        assert_eq!(show(&b.lyndon_factorization()), "2'2·7'5·7'5'47");
        assert_eq!(b.lyndon_type(), Partition::new(vec![4, 2, 2]));
        let r = b.to_ornament();
        assert_eq!(r.necklaces().len(), 3);
        assert_eq!(Banner::from_ornament(&r), b);
    }

    #[test]
    fn trivial_banners() {
        assert_eq!(Banner::empty().lyndon_type(), Partition::empty());
        assert_eq!(Banner::empty().to_ornament(), Ornament::empty());
        let single = banner("3");
        assert_eq!(single.to_ornament().to_string(), "(3)");
        assert!("3'".parse::<Banner>().is_err());
    }

    #[test]
    fn banner_ornament_round_trip() {
        for n in 0..=4 {
            for b in enumerate_banners(n, 3) {
                let r = b.to_ornament();
                assert_eq!(r.cycle_type(), b.lyndon_type());
                assert_eq!(r.bars(), b.bars());
                assert_eq!(Banner::from_ornament(&r), b, "{b}");
            }
        }
    }

    #[test]
    fn gamma_worked_examples() {
        let cases = [
            ("2'2'2'1·5'224'2·8'8'7'5'2235", "22355788", 4, "2'2'2'1·5'224'2"),
            ("2'2'2'1·5'224'2·8'8'7'5'22356'24", "223557", 2, "2'2'2'1·5'224'2·8'8'6'24"),
            ("2'2'2'1·5'224'2·8'8'7'5'2235'46'24", "223557", 3, "2'2'2'1·5'224'2·8'8'46'24"),
        ];
        for (src, omega, mark, rest) in cases {
            let b = banner(src);
            let (bp, ms) = gamma(&b).unwrap();
            let om: Vec<u32> = omega.chars().map(|c| c.to_digit(10).unwrap()).collect();
            assert_eq!(ms, MarkedSequence::new(om, mark).unwrap());
            assert_eq!(bp, banner(rest));
            assert_eq!(gamma_inverse(&bp, &ms).unwrap(), b);
        }
        assert_eq!(show(&banner("2'2'2'15'224'28'8'7'5'2235").increasing_factorization().unwrap()),
            "2'2'2'1·5'224'2·8'8'7'5'2235");
    }

    #[test]
    fn gamma_rejects_singleton_factors() {
        assert!(gamma(&banner("1")).is_err());
        assert!(gamma(&Banner::empty()).is_err());
    }

    #[test]
    fn gamma_is_a_bijection_up_to_five() {
        let m = 3;
        for n in 2..=5usize {
            let domain: Vec<Banner> = enumerate_banners(n, m)
                .into_iter()
                .filter(|b| !b.lyndon_type().parts().contains(&1))
                .collect();
            let mut images = std::collections::HashSet::new();
            for b in &domain {
                let (bp, ms) = gamma(b).unwrap();
                assert_eq!(bp.len() + ms.len(), n);
                assert_eq!(bp.bars() + ms.mark(), b.bars());
                assert!(!bp.lyndon_type().parts().contains(&1), "{b} -> {bp}");
                assert_eq!(gamma_inverse(&bp, &ms).unwrap(), *b, "{b}");
                images.insert((bp, ms));
            }
            let mut codomain = 0;
            for k in 0..=n - 2 {
                let banners = enumerate_banners(k, m)
                    .into_iter()
                    .filter(|b| !b.lyndon_type().parts().contains(&1))
                    .count();
                codomain += banners * enumerate_marked(n - k, m).len();
            }
            assert_eq!(images.len(), domain.len());
            assert_eq!(codomain, domain.len(), "n = {n}");
        }
    }

    #[test]
    fn tau_swaps_bar_counts() {
        for n in 1..=5 {
            for b in enumerate_banners(n, 3) {
                let t = b.complement();
                assert!(Banner::new(t.letters().to_vec()).is_ok());
                assert_eq!(t.bars(), n - 1 - b.bars());
                assert_eq!(t.complement(), b);
            }
        }
    }
}
