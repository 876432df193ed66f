//! Bicolored necklaces and ornaments, and the Gessel–Reutenauer style bijection between
//! ornaments and pairs (σ, s) with s σ-compatible.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{
    excedance_set, format_word, is_compatible, parse_word, Alphabet, BicolorLetter, Partition,
    Permutation,
};
use crate::error::{invalid, Error, Result};
use crate::symfunc::MonoPoly;

pub(crate) const ORDER: Alphabet = Alphabet::Interleaved;

/// A primitive circular word in which a barred letter is followed (clockwise) by a letter of
/// no larger value and an unbarred letter by one of no smaller value. Stored as its
/// lexicographically largest rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Necklace {
    letters: Vec<BicolorLetter>,
}

/// Adjacency rule shared by necklaces and banners.
pub(crate) fn may_follow(a: BicolorLetter, b: BicolorLetter) -> bool {
    if a.barred {
        b.value <= a.value
    } else {
        b.value >= a.value
    }
}

fn is_primitive(w: &[BicolorLetter]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n % d == 0).all(|d| w[d..] != w[..n - d])
}

fn largest_rotation(w: &[BicolorLetter]) -> Vec<BicolorLetter> {
    let n = w.len();
    (0..n)
        .map(|r| [&w[r..], &w[..r]].concat())
        .max_by(|a, b| ORDER.cmp_words(a, b))
        .unwrap_or_default()
}

impl Necklace {
    /// Validates a circular word given in any rotation.
    pub fn new(letters: Vec<BicolorLetter>) -> Result<Self> {
        let n = letters.len();
        if n == 0 {
            return invalid("a necklace is nonempty");
        }
        if n == 1 && letters[0].barred {
            return invalid("a necklace of size 1 is unbarred");
        }
        if let Some(i) = (0..n).find(|&i| !may_follow(letters[i], letters[(i + 1) % n])) {
            return invalid(format!(
                "letter {} cannot be followed by {} in a necklace",
                letters[i],
                letters[(i + 1) % n]
            ));
        }
        if !is_primitive(&letters) {
            return invalid("a necklace is primitive");
        }
        Ok(Necklace {
            letters: largest_rotation(&letters),
        })
    }

    pub fn letters(&self) -> &[BicolorLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bars(&self) -> usize {
        self.letters.iter().filter(|l| l.barred).count()
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.letters.iter().map(|l| l.value)
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_word(&self.letters))
    }
}

impl Ord for Necklace {
    fn cmp(&self, other: &Self) -> Ordering {
        ORDER.cmp_words(&self.letters, &other.letters)
    }
}

impl PartialOrd for Necklace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multiset of necklaces, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Ornament {
    necklaces: Vec<Necklace>,
}

impl Ornament {
    pub fn new(mut necklaces: Vec<Necklace>) -> Self {
        necklaces.sort();
        Ornament { necklaces }
    }

    pub fn empty() -> Self {
        Ornament::default()
    }

    pub fn necklaces(&self) -> &[Necklace] {
        &self.necklaces
    }

    pub fn size(&self) -> usize {
        self.necklaces.iter().map(Necklace::len).sum()
    }

    pub fn bars(&self) -> usize {
        self.necklaces.iter().map(Necklace::bars).sum()
    }

    /// λ(R): the multiset of necklace sizes.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.necklaces.iter().map(|c| c.len() as u32).collect())
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.necklaces.iter().flat_map(Necklace::values)
    }
}

impl fmt::Display for Ornament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.necklaces.is_empty() {
            return write!(f, "()");
        }
        for c in &self.necklaces {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Ornament {
    type Err = Error;

    /// Necklaces in parentheses, each in any rotation: "(7'5'47)(7'5)(2)".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Ornament::empty());
        }
        if !s.starts_with('(') || !s.ends_with(')') {
            return invalid(format!("ornament {s:?} is not a list of parenthesized necklaces"));
        }
        let mut out = Vec::new();
        for chunk in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let Some(body) = chunk.strip_prefix('(') else {
                return invalid(format!("stray text {chunk:?} between necklaces"));
            };
            out.push(Necklace::new(parse_word(body)?)?);
        }
        Ok(Ornament::new(out))
    }
}

/// φ(σ, s): write σ in cycle form, bar every excedance position, then replace i by s_i.
pub fn gr_phi(p: &Permutation, s: &[u32]) -> Result<Ornament> {
    if !is_compatible(p, s) {
        return Err(Error::Incompatible);
    }
    let exc = excedance_set(p);
    let necklaces = p
        .cycles()
        .into_iter()
        .map(|cycle| {
            Necklace::new(
                cycle
                    .iter()
                    .map(|&i| BicolorLetter {
                        value: s[i as usize - 1],
                        barred: exc.contains(&i),
                    })
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ornament::new(necklaces))
}

/// Compares the infinite periodic readings of `u` from `i` and `v` from `j`. Two periodic
/// words that agree on |u| + |v| letters agree everywhere (Fine and Wilf).
pub(crate) fn cmp_periodic(u: &[BicolorLetter], i: usize, v: &[BicolorLetter], j: usize) -> Ordering {
    let (a, b) = (u.len(), v.len());
    for t in 0..a + b {
        match ORDER.cmp(&u[(i + t) % a], &v[(j + t) % b]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// η(R) = (σ(R), s(R)). Positions are ordered by their periodic readings, ties between
/// equal necklaces by their place in the sorted multiset; the i-th largest position
/// receives the letter i and the relabelled necklaces are the cycles of σ(R).
pub fn gr_eta(r: &Ornament) -> (Permutation, Vec<u32>) {
    let neck = r.necklaces();
    let mut pos: Vec<(usize, usize)> = neck
        .iter()
        .enumerate()
        .flat_map(|(c, w)| (0..w.len()).map(move |x| (c, x)))
        .collect();
    pos.sort_by(|&(c1, x1), &(c2, x2)| {
        cmp_periodic(neck[c2].letters(), x2, neck[c1].letters(), x1).then(c2.cmp(&c1))
    });
    let mut label: Vec<Vec<u32>> = neck.iter().map(|w| vec![0; w.len()]).collect();
    for (i, &(c, x)) in pos.iter().enumerate() {
        label[c][x] = i as u32 + 1;
    }
    let sigma = Permutation::from_cycles(pos.len(), &label).expect("labels form a permutation");
    let mut s: Vec<u32> = r.values().collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    (sigma, s)
}

/// All necklaces of the given size with letter values in 1..=m, in increasing order.
pub fn enumerate_necklaces(size: usize, m: u32) -> Vec<Necklace> {
    let mut out = Vec::new();
    if size == 0 || m == 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(size);
    // the canonical rotation starts with its largest letter
    for v in 1..=m {
        for barred in [false, true] {
            let first = BicolorLetter { value: v, barred };
            cur.push(first);
            extend_necklace(size, first, &mut cur, &mut out);
            cur.pop();
        }
    }
    out.sort();
    out
}

fn extend_necklace(
    size: usize,
    first: BicolorLetter,
    cur: &mut Vec<BicolorLetter>,
    out: &mut Vec<Necklace>,
) {
    let last = *cur.last().unwrap();
    if cur.len() == size {
        if may_follow(last, first)
            && (size > 1 || !first.barred)
            && is_primitive(cur)
            && largest_rotation(cur) == *cur
        {
            out.push(Necklace {
                letters: cur.clone(),
            });
        }
        return;
    }
    let (lo, hi) = if last.barred {
        (1, last.value)
    } else {
        (last.value, first.value)
    };
    for v in lo..=hi.min(first.value) {
        for barred in [false, true] {
            let next = BicolorLetter { value: v, barred };
            if ORDER.cmp(&next, &first) == Ordering::Greater {
                continue;
            }
            cur.push(next);
            extend_necklace(size, first, cur, out);
            cur.pop();
        }
    }
}

/// All ornaments of type λ with values in 1..=m, grouped by bar count: entry j is the
/// weight sum Σ wt(R) over ornaments with j bars, as a polynomial in x_1..x_m.
pub fn ornament_weights(lambda: &Partition, m: u32) -> Vec<MonoPoly> {
    let n = lambda.size();
    let mut by_bars = vec![MonoPoly::zero(m as usize); n + 1];
    let groups: Vec<(Vec<Necklace>, usize)> = lambda
        .multiplicities()
        .into_iter()
        .map(|(part, mult)| (enumerate_necklaces(part as usize, m), mult))
        .collect();
    let mut exps = vec![0u8; m as usize];
    multisets(&groups, 0, 0, 0, 0, &mut exps, &mut |e, bars| {
        by_bars[bars].add_term(e.to_vec(), 1)
    });
    by_bars
}

/// Walks multisets: `g` indexes the size group, `taken` how many were chosen from it,
/// `from` the smallest admissible necklace index.
fn multisets(
    groups: &[(Vec<Necklace>, usize)],
    g: usize,
    taken: usize,
    from: usize,
    bars: usize,
    exps: &mut Vec<u8>,
    f: &mut dyn FnMut(&[u8], usize),
) {
    if g == groups.len() {
        f(exps, bars);
        return;
    }
    let (neck, mult) = &groups[g];
    if taken == *mult {
        multisets(groups, g + 1, 0, 0, bars, exps, f);
        return;
    }
    for (i, c) in neck.iter().enumerate().skip(from) {
        for v in c.values() {
            exps[v as usize - 1] += 1;
        }
        multisets(groups, g, taken + 1, i, bars + c.bars(), exps, f);
        for v in c.values() {
            exps[v as usize - 1] -= 1;
        }
    }
}

/// All ornaments of type λ with values in 1..=m.
pub fn enumerate_ornaments(lambda: &Partition, m: u32) -> Vec<Ornament> {
    let mut out = vec![Vec::new()];
    for (part, mult) in lambda.multiplicities() {
        let neck = enumerate_necklaces(part as usize, m);
        let mut next = Vec::new();
        for prefix in &out {
            let mut chosen = Vec::new();
            choose(&neck, mult, 0, &mut chosen, &mut |c: &[Necklace]| {
                let mut v: Vec<Necklace> = Vec::clone(prefix);
                v.extend_from_slice(c);
                next.push(v);
            });
        }
        out = next;
    }
    out.into_iter().map(Ornament::new).collect()
}

fn choose(
    items: &[Necklace],
    k: usize,
    from: usize,
    cur: &mut Vec<Necklace>,
    f: &mut dyn FnMut(&[Necklace]),
) {
    if k == 0 {
        f(cur);
        return;
    }
    for i in from..items.len() {
        cur.push(items[i].clone());
        choose(items, k - 1, i, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{compatible_sequences, enumerate_perms, exc, parse_word};

    fn neck(s: &str) -> Necklace {
        Necklace::new(parse_word(s).unwrap()).unwrap()
    }

    fn orn(parts: &[&str]) -> Ornament {
        Ornament::new(parts.iter().map(|s| neck(s)).collect())
    }

    #[test]
    fn phi_worked_example() {
        let p: Permutation = "45162387".parse().unwrap();
        let r = gr_phi(&p, &[7, 7, 7, 5, 5, 4, 2, 2]).unwrap();
        assert_eq!(r, orn(&["7'5'47", "7'5", "2'2"]));
        assert_eq!(r.cycle_type(), Partition::new(vec![4, 2, 2]));
        assert_eq!(r.bars(), 4);
        assert_eq!(r.to_string().parse::<Ornament>().unwrap(), r);
        assert_eq!("(477'5')(5 7')(22')".parse::<Ornament>().unwrap(), r);
        assert!("(12)x".parse::<Ornament>().is_err());
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(gr_phi(&Permutation::empty(), &[]).unwrap(), Ornament::empty());
        let p: Permutation = "21".parse().unwrap();
        assert_eq!(gr_phi(&p, &[3, 3]).unwrap(), orn(&["3'3"]));
        assert!(matches!(gr_phi(&p, &[1, 3]), Err(Error::Incompatible)));
    }

    #[test]
    fn eta_worked_example() {
        let r = orn(&["7'3'35", "7'35'3", "7'35'3", "5"]);
        let (sigma, s) = gr_eta(&r);
        let expected = Permutation::from_cycles(
            13,
            &[vec![1, 8, 13, 6], vec![2, 11, 4, 9], vec![3, 12, 5, 10], vec![7]],
        )
        .unwrap();
        assert_eq!(sigma, expected);
        assert_eq!(s, vec![7, 7, 7, 5, 5, 5, 5, 3, 3, 3, 3, 3, 3]);
        assert_eq!(gr_phi(&sigma, &s).unwrap(), r);
    }

    #[test]
    fn eta_small_cases() {
        assert_eq!(gr_eta(&Ornament::empty()), (Permutation::empty(), vec![]));
        let (sigma, s) = gr_eta(&orn(&["2'2"]));
        assert_eq!(sigma.one_line(), &[2, 1]);
        assert_eq!(s, vec![2, 2]);
    }

    #[test]
    fn necklace_validation() {
        assert!(Necklace::new(parse_word("1'").unwrap()).is_err());
        assert!(Necklace::new(parse_word("2'12'1").unwrap()).is_err());
        assert!(Necklace::new(parse_word("12'").unwrap()).is_ok());
        assert!(Necklace::new(parse_word("21").unwrap()).is_err());
        assert_eq!(neck("477'5'").to_string(), "(7'5'47)");
    }

    #[test]
    fn eta_inverts_phi_up_to_five() {
        for n in 0..=5 {
            for p in enumerate_perms(n).unwrap() {
                for s in compatible_sequences(&p, 4) {
                    let r = gr_phi(&p, &s).unwrap();
                    assert_eq!(r.bars() as u32, exc(&p));
                    assert_eq!(r.cycle_type(), p.cycle_type());
                    assert_eq!(gr_eta(&r), (p.clone(), s));
                }
            }
        }
    }

    #[test]
    fn periodic_comparison_matches_long_comparison() {
        let all: Vec<Necklace> = (1..=4).flat_map(|k| enumerate_necklaces(k, 3)).collect();
        for u in &all {
            for v in &all {
                let long = u.len() * v.len() * 2;
                for i in 0..u.len() {
                    for j in 0..v.len() {
                        let a: Vec<_> = (0..long).map(|t| u.letters()[(i + t) % u.len()]).collect();
                        let b: Vec<_> = (0..long).map(|t| v.letters()[(j + t) % v.len()]).collect();
                        assert_eq!(
                            cmp_periodic(u.letters(), i, v.letters(), j),
                            ORDER.cmp_words(&a, &b)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn size_two_necklaces_over_two_values() {
        let r = ornament_weights(&Partition::new(vec![2]), 2);
        let mut h2 = MonoPoly::zero(2);
        for w in [[1, 1], [1, 2], [2, 2]] {
            h2.add_word(w, 1);
        }
        assert_eq!(r[1], h2);
        assert!(r[0].is_empty() && r[2].is_empty());
        assert_eq!(enumerate_necklaces(2, 2).len(), 3);
    }
}
