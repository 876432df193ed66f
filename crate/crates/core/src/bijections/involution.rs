//! Involutions on ornaments behind the symmetry of Q_{λ,j}: one exchanging the letters k and
//! k+1, one complementing bars and values.

use super::banner::value_reversal;
use super::necklace::{Necklace, Ornament};
use crate::combinatorics::BicolorLetter;

/// Exchanges the number of k's and (k+1)'s in every necklace, keeping all other letters and
/// the total number of bars.
pub fn involution_value_swap(r: &Ornament, k: u32) -> Ornament {
    Ornament::new(r.necklaces().iter().map(|c| swap_necklace(c, k)).collect())
}

fn swap_necklace(c: &Necklace, k: u32) -> Necklace {
    let w = c.letters();
    let n = w.len();
    let inside = |l: &BicolorLetter| l.value == k || l.value == k + 1;
    let out = match w.iter().position(|l| !inside(l)) {
        None => swap_circular(w, k),
        Some(intruder) => {
            // rotate so the word starts at an intruder; segments are then linear
            let rot: Vec<BicolorLetter> = w[intruder..].iter().chain(&w[..intruder]).copied().collect();
            let mut res = rot.clone();
            let mut i = 0;
            while i < n {
                if !inside(&rot[i]) {
                    i += 1;
                    continue;
                }
                let j = (i..n).find(|&t| !inside(&rot[t])).unwrap_or(n);
                res[i..j].copy_from_slice(&swap_segment(&rot[i..j], k));
                i = j;
            }
            res
        }
    };
    Necklace::new(out).expect("the value swap maps necklaces to necklaces")
}

fn other(v: u32, k: u32) -> u32 {
    if v == k {
        k + 1
    } else {
        k
    }
}

/// Exchange values; at each switch the bar is forced by the comparison with the next letter.
fn swap_circular(w: &[BicolorLetter], k: u32) -> Vec<BicolorLetter> {
    let n = w.len();
    let mut out: Vec<BicolorLetter> = w
        .iter()
        .map(|l| BicolorLetter {
            value: other(l.value, k),
            barred: l.barred,
        })
        .collect();
    for i in 0..n {
        let next = out[(i + 1) % n].value;
        if out[i].value != next {
            out[i].barred = out[i].value > next;
        }
    }
    out
}

fn swap_segment(seg: &[BicolorLetter], k: u32) -> Vec<BicolorLetter> {
    let n = seg.len();
    let switches = seg.windows(2).filter(|p| p[0].value != p[1].value).count();
    if switches % 2 == 0 {
        let mut out: Vec<BicolorLetter> = seg
            .iter()
            .map(|l| BicolorLetter {
                value: other(l.value, k),
                barred: l.barred,
            })
            .collect();
        for i in 0..n - 1 {
            if out[i].value != out[i + 1].value {
                out[i].barred = out[i].value > out[i + 1].value;
            }
        }
        return out;
    }
    // odd: blocks pair up as (x^{m1} y^{m2})(x^{m3} y^{m4})…; each pair becomes x^{m2} y^{m1}
    // and the bar statuses at the pair offsets m1 and m2 trade places
    let mut runs: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < n {
        let j = (i..n).find(|&t| seg[t].value != seg[i].value).unwrap_or(n);
        runs.push(j - i);
        i = j;
    }
    let x = seg[0].value;
    let y = other(x, k);
    let mut out = seg.to_vec();
    let mut base = 0;
    for pair in runs.chunks(2) {
        let (m1, m2) = (pair[0], pair[1]);
        for t in 0..m1 + m2 {
            out[base + t].value = if t < m2 { x } else { y };
        }
        let (p1, p2) = (base + m1 - 1, base + m2 - 1);
        let (b1, b2) = (seg[p1].barred, seg[p2].barred);
        out[p1].barred = b2;
        out[p2].barred = b1;
        base += m1 + m2;
    }
    out
}

/// γ(R): toggle the bars of every nonsingleton necklace, then reverse the values present.
pub fn involution_complement(r: &Ornament) -> Ornament {
    let flip = value_reversal(r.values());
    Ornament::new(
        r.necklaces()
            .iter()
            .map(|c| {
                let single = c.len() == 1;
                Necklace::new(
                    c.letters()
                        .iter()
                        .map(|l| BicolorLetter {
                            value: flip[&l.value],
                            barred: if single { l.barred } else { !l.barred },
                        })
                        .collect(),
                )
                .expect("complement maps necklaces to necklaces")
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::enumerate_ornaments;
    use crate::combinatorics::{parse_word, partitions};

    fn neck(s: &str) -> Necklace {
        Necklace::new(parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn swap_without_intruders() {
        let r = Ornament::new(vec![neck("22'11'1222'2'11111")]);
        let want = Ornament::new(vec![neck("1122'2'111'122222'")]);
        assert_eq!(involution_value_swap(&r, 1), want);
    }

    #[test]
    fn swap_with_intruders() {
        let r = Ornament::new(vec![neck("5'3344'3'33'366'3'334'244")]);
        let want = Ornament::new(vec![neck("5'44'334'44'466'344'4'233")]);
        assert_eq!(involution_value_swap(&r, 3), want);
    }

    #[test]
    fn swap_leaves_other_necklaces() {
        let r = Ornament::new(vec![neck("5'1"), neck("4")]);
        assert_eq!(involution_value_swap(&r, 2), r);
    }

    #[test]
    fn involutions_on_small_ornaments() {
        for n in 1..=5u32 {
            for lambda in partitions(n as usize) {
                let k1 = lambda.multiplicity(1);
                for r in enumerate_ornaments(&lambda, 4) {
                    let c = involution_complement(&r);
                    assert_eq!(involution_complement(&c), r);
                    assert_eq!(c.bars(), n as usize - k1 - r.bars());
                    for k in 1..4 {
                        let s = involution_value_swap(&r, k);
                        assert_eq!(involution_value_swap(&s, k), r, "{r} k={k}");
                        assert_eq!(s.bars(), r.bars());
                        let count = |o: &Ornament, v| o.values().filter(|&x| x == v).count();
                        assert_eq!(count(&s, k), count(&r, k + 1));
                        assert_eq!(count(&s, k + 1), count(&r, k));
                    }
                }
            }
        }
    }
}
