//! Finite posets given by their cover relations, with Möbius functions, Rees products and
//! the families used to study them.

mod families;
mod suites;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::Rng;

use crate::error::{invalid, Error, Result};

pub use families::{
    boolean, chain, crosspolytope, isotropic_lattice, subspace_lattice, tree, FqVectorConfig,
};
pub use suites::*;

/// A fixed-size bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

/// A finite poset. Elements are indices `0..len()`, each with a display label.
pub struct Poset {
    labels: Vec<String>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// Length of the longest chain from a minimal element.
    rank: Vec<u32>,
    /// A linear extension.
    order: Vec<usize>,
    /// `above[x]` contains y iff x ≤ y.
    above: Vec<Bits>,
    memo: Mutex<HashMap<usize, Arc<Vec<i64>>>>,
}

impl Clone for Poset {
    fn clone(&self) -> Self {
        Poset {
            labels: self.labels.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            rank: self.rank.clone(),
            order: self.order.clone(),
            above: self.above.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("len", &self.len())
            .field("whitney", &self.whitney())
            .finish()
    }
}

impl Poset {
    /// Build from labels and cover pairs (lower, upper). Fails on cycles and on pairs
    /// that are implied by others and so are not covers.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n || a == b {
                return invalid(format!("bad cover pair ({a}, {b})"));
            }
            up[a].push(b);
            down[b].push(a);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        // Kahn's algorithm
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut order: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in &up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    order.push(y);
                }
            }
        }
        if order.len() != n {
            return invalid("cover relation has a cycle");
        }
        let mut rank = vec![0u32; n];
        for &x in &order {
            for &y in &up[x] {
                rank[y] = rank[y].max(rank[x] + 1);
            }
        }
        let mut above: Vec<Bits> = (0..n).map(|_| Bits::new(n)).collect();
        for &x in order.iter().rev() {
            let mut b = Bits::new(n);
            b.set(x);
            for &y in &up[x] {
                b.union_with(&above[y]);
            }
            above[x] = b;
        }
        for x in 0..n {
            for &y in &up[x] {
                if up[x].iter().any(|&z| z != y && above[z].get(y)) {
                    return invalid(format!("({}, {}) is not a cover", labels[x], labels[y]));
                }
            }
        }
        Ok(Poset {
            labels,
            up,
            down,
            rank,
            order,
            above,
            memo: Mutex::new(HashMap::new()),
        })
    }

    /// Build from labels and a strict order predicate; covers are computed.
    pub fn from_order(labels: Vec<String>, lt: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                    covers.push((x, y));
                }
            }
        }
        Poset::from_covers(labels, &covers)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn rank(&self, x: usize) -> u32 {
        self.rank[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// All cover pairs (lower, upper).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].get(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal()[..] {
            [b] => Some(b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal()[..] {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Every maximal chain has the same length, i.e. covers raise the rank by one and all
    /// maximal elements share a rank.
    pub fn is_ranked(&self) -> bool {
        let covers_ok = self
            .covers()
            .iter()
            .all(|&(x, y)| self.rank[y] == self.rank[x] + 1);
        let tops: Vec<u32> = self.maximal().iter().map(|&x| self.rank[x]).collect();
        covers_ok && tops.windows(2).all(|w| w[0] == w[1])
    }

    /// Graded in the weaker sense used for Rees products: covers raise the rank by one.
    fn is_graded(&self) -> bool {
        self.covers().iter().all(|&(x, y)| self.rank[y] == self.rank[x] + 1)
    }

    pub fn length(&self) -> u32 {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    /// W_r: the number of elements of each rank.
    pub fn whitney(&self) -> Vec<usize> {
        let mut w = vec![0; self.length() as usize + 1];
        if self.is_empty() {
            return vec![];
        }
        for &r in &self.rank {
            w[r as usize] += 1;
        }
        w
    }

    /// μ(x, y) for every y, by the recursion μ(x, y) = −Σ_{x ≤ z < y} μ(x, z). Memoized.
    pub fn mobius_from(&self, x: usize) -> Arc<Vec<i64>> {
        if let Some(v) = self.memo.lock().expect("memo lock").get(&x) {
            return v.clone();
        }
        let n = self.len();
        let mut mu = vec![0i64; n];
        let mut seen: Vec<usize> = Vec::new();
        for &y in &self.order {
            if !self.leq(x, y) {
                continue;
            }
            mu[y] = if y == x {
                1
            } else {
                -seen
                    .iter()
                    .filter(|&&z| self.leq(z, y))
                    .map(|&z| mu[z])
                    .sum::<i64>()
            };
            seen.push(y);
        }
        let mu = Arc::new(mu);
        self.memo.lock().expect("memo lock").insert(x, mu.clone());
        mu
    }

    /// μ(x, y) for every x, by the dual recursion μ(x, y) = −Σ_{x < z ≤ y} μ(z, y).
    pub fn mobius_to(&self, y: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        let mut seen: Vec<usize> = Vec::new();
        for &x in self.order.iter().rev() {
            if !self.leq(x, y) {
                continue;
            }
            mu[x] = if x == y {
                1
            } else {
                -seen
                    .iter()
                    .filter(|&&z| self.leq(x, z))
                    .map(|&z| mu[z])
                    .sum::<i64>()
            };
            seen.push(x);
        }
        mu
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return invalid(format!("{} is not below {}", self.labels[x], self.labels[y]));
        }
        Ok(self.mobius_from(x)[y])
    }

    /// μ(0̂, 1̂) of a bounded poset.
    pub fn mu(&self) -> Result<i64> {
        match (self.bottom(), self.top()) {
            (Some(b), Some(t)) => self.mobius(b, t),
            _ => invalid("poset is not bounded"),
        }
    }

    /// μ(P̂): the Möbius invariant after adjoining a new bottom and top.
    pub fn mu_hat(&self) -> i64 {
        self.hat().mu().expect("bounded by construction")
    }

    fn adjoin(&self, bottom: bool, top: bool) -> Poset {
        let n = self.len();
        let mut labels = self.labels.clone();
        let mut covers = self.covers();
        if bottom {
            labels.push("0̂".into());
            covers.extend(self.minimal().into_iter().map(|x| (n, x)));
        }
        if top {
            let t = labels.len();
            labels.push("1̂".into());
            covers.extend(self.maximal().into_iter().map(|x| (x, t)));
            if n == 0 && bottom {
                covers.push((n, t));
            }
        }
        Poset::from_covers(labels, &covers).expect("adjoining extremes keeps a poset")
    }

    /// P̂: new bottom and top.
    pub fn hat(&self) -> Poset {
        self.adjoin(true, true)
    }

    /// P⁺: new top.
    pub fn plus(&self) -> Poset {
        self.adjoin(false, true)
    }

    /// P⁻: the bottom removed.
    pub fn minus(&self) -> Result<Poset> {
        let b = self.bottom().ok_or_else(|| Error::Invalid("poset has no bottom".into()))?;
        Ok(self.convex_subposet(&(0..self.len()).filter(|&x| x != b).collect::<Vec<_>>()))
    }

    /// P*: the order reversed.
    pub fn dual(&self) -> Poset {
        let covers: Vec<(usize, usize)> = self.covers().into_iter().map(|(x, y)| (y, x)).collect();
        Poset::from_covers(self.labels.clone(), &covers).expect("dual of a poset")
    }

    /// The induced subposet on `keep`, in that order.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        Poset::from_order(labels, |a, b| self.lt(keep[a], keep[b])).expect("induced subposet")
    }

    /// {y : y < x} (or ≤ when `closed`).
    pub fn lower_ideal(&self, x: usize, closed: bool) -> Poset {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&y| self.leq(y, x) && (closed || y != x))
            .collect();
        self.convex_subposet(&keep)
    }

    /// The Rees product P ∗ Q: pairs (p, q) with r_P(p) ≥ r_Q(q); (p', q') covers (p, q)
    /// when p' covers p and q' equals or covers q.
    pub fn rees(&self, other: &Poset) -> Result<Poset> {
        Ok(self.rees_indexed(other)?.0)
    }

    /// The Rees product with the element index of each pair (p, q).
    pub fn rees_indexed(&self, other: &Poset) -> Result<(Poset, HashMap<(usize, usize), usize>)> {
        if !self.is_graded() || !other.is_graded() {
            return invalid("Rees product needs ranked posets");
        }
        let mut index = HashMap::new();
        let mut labels = Vec::new();
        let mut pairs = Vec::new();
        for p in 0..self.len() {
            for q in 0..other.len() {
                if self.rank[p] >= other.rank[q] {
                    index.insert((p, q), pairs.len());
                    pairs.push((p, q));
                    labels.push(format!("({},{})", self.labels[p], other.labels[q]));
                }
            }
        }
        let mut covers = Vec::new();
        for (i, &(p, q)) in pairs.iter().enumerate() {
            for &p2 in &self.up[p] {
                for q2 in std::iter::once(q).chain(other.up[q].iter().copied()) {
                    if let Some(&j) = index.get(&(p2, q2)) {
                        covers.push((i, j));
                    }
                }
            }
        }
        Ok((Poset::from_covers(labels, &covers)?, index))
    }

    /// I_j(P) = {x ∈ P⁻ ∗ C_n : x < (1̂_P, j)} for a bounded ranked P of length n.
    pub fn ideal_i_j(&self, j: usize) -> Result<Poset> {
        let n = self.length() as usize;
        let top = self.top().filter(|_| self.bottom().is_some() && self.is_ranked());
        let Some(top) = top else {
            return invalid("I_j needs a bounded ranked poset");
        };
        if j == 0 || j > n {
            return invalid(format!("j = {j} is outside 1..={n}"));
        }
        let (rees, index) = self.minus_rees_chain()?;
        let x = index(top, j);
        Ok(rees.lower_ideal(x, false))
    }

    /// P⁻ ∗ C_n together with the index of (p, j) for p ≠ 0̂ and j ∈ [n].
    pub fn minus_rees_chain(&self) -> Result<(Poset, impl Fn(usize, usize) -> usize)> {
        let b = self.bottom().ok_or_else(|| Error::Invalid("poset has no bottom".into()))?;
        let n = self.length() as usize;
        let keep: Vec<usize> = (0..self.len()).filter(|&x| x != b).collect();
        let (rees, index) = self.convex_subposet(&keep).rees_indexed(&chain(n))?;
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Ok((rees, move |p: usize, j: usize| index[&(pos[&p], j - 1)]))
    }

    /// The subposet on an upper or lower set, whose covers are covers of P.
    fn convex_subposet(&self, keep: &[usize]) -> Poset {
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &y)| (y, i)).collect();
        let labels = keep.iter().map(|&y| self.labels[y].clone()).collect();
        let covers: Vec<(usize, usize)> = self
            .covers()
            .into_iter()
            .filter_map(|(a, b)| Some((*index.get(&a)?, *index.get(&b)?)))
            .collect();
        Poset::from_covers(labels, &covers).expect("convex subposet")
    }

    /// True when `map` is an order isomorphism from `self` onto `other`.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in map {
            if y >= n || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) == other.leq(map[a], map[b])))
    }

    /// A random bounded ranked poset of the given length: interior ranks have 1..=max_width
    /// elements, each covering a random nonempty set of the rank below, and every element
    /// is covered by something of the next rank.
    pub fn random_bounded_ranked(rng: &mut impl Rng, length: usize, max_width: usize) -> Poset {
        let mut labels = vec!["0̂".to_string()];
        let mut levels: Vec<Vec<usize>> = vec![vec![0]];
        let mut covers = Vec::new();
        for r in 1..length {
            let width = rng.gen_range(1..=max_width);
            let below = levels[r - 1].clone();
            let mut level = Vec::new();
            for i in 0..width {
                let x = labels.len();
                labels.push(format!("{r}.{i}"));
                let mut any = false;
                for &b in &below {
                    if rng.gen_bool(0.5) {
                        covers.push((b, x));
                        any = true;
                    }
                }
                if !any {
                    covers.push((below[rng.gen_range(0..below.len())], x));
                }
                level.push(x);
            }
            for &b in &below {
                if !covers.iter().any(|&(a, _)| a == b) {
                    covers.push((b, level[rng.gen_range(0..level.len())]));
                }
            }
            levels.push(level);
        }
        let top = labels.len();
        labels.push("1̂".to_string());
        for &b in levels.last().expect("at least the bottom") {
            covers.push((b, top));
        }
        Poset::from_covers(labels, &covers).expect("layered construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_mobius_values() {
        let c = chain(4);
        assert_eq!(c.mobius(0, 0).unwrap(), 1);
        assert_eq!(c.mobius(0, 1).unwrap(), -1);
        assert_eq!(c.mobius(0, 2).unwrap(), 0);
        assert_eq!(c.mobius(1, 3).unwrap(), 0);
        assert!(c.mobius(2, 1).is_err());
    }

    #[test]
    fn boolean_mobius_is_alternating() {
        for n in 0..=6 {
            let b = boolean(n).unwrap();
            let want = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(b.mu().unwrap(), want, "n={n}");
            assert_eq!(b.mobius_to(b.top().unwrap())[b.bottom().unwrap()], want);
        }
    }

    #[test]
    fn small_rees_product() {
        let b = boolean(2).unwrap().minus().unwrap();
        let r = b.rees(&chain(2)).unwrap();
        let mut got: Vec<&str> = r.labels().iter().map(String::as_str).collect();
        got.sort_unstable();
        assert_eq!(got, ["({1,2},1)", "({1,2},2)", "({1},1)", "({2},1)"]);
        assert!(r.is_ranked());
        assert_eq!(r.mu_hat(), -1);
        for n in 1..=4 {
            let r = boolean(n).unwrap().minus().unwrap().rees(&chain(n)).unwrap();
            assert_eq!(r.maximal().len(), n);
        }
    }

    #[test]
    fn rees_with_one_element_chain_is_a_copy() {
        let p = boolean(3).unwrap();
        let r = p.rees(&chain(1)).unwrap();
        assert_eq!(r.len(), p.len());
        assert_eq!(r.covers().len(), p.covers().len());
    }

    #[test]
    fn ideal_of_b1_is_empty() {
        let i = boolean(1).unwrap().ideal_i_j(1).unwrap();
        assert!(i.is_empty());
        assert_eq!(i.mu_hat(), -1);
        assert!(boolean(2).unwrap().ideal_i_j(3).is_err());
    }

    #[test]
    fn rejects_cycles_and_non_covers() {
        let l = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
        assert!(Poset::from_covers(l(2), &[(0, 1), (1, 0)]).is_err());
        assert!(Poset::from_covers(l(3), &[(0, 1), (1, 2), (0, 2)]).is_err());
    }

    #[test]
    fn random_posets_are_bounded_and_ranked() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = Poset::random_bounded_ranked(&mut rng, 4, 3);
            assert!(p.bottom().is_some() && p.top().is_some());
            assert!(p.is_ranked());
            assert_eq!(p.length(), 4);
        }
    }
}
