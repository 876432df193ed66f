//! Permutations, partitions, bicolored words and the elementary permutation statistics.

mod enumerate;
mod letter;
mod partition;
mod permutation;
mod stats;

pub use enumerate::{
    compatible_sequences, enumerate_by, enumerate_perms, enumerate_perms_capped, is_compatible,
    PermFilter, Perms,
};
pub(crate) use enumerate::all_perms;
pub use letter::{format_word, parse_word, Alphabet, BarredPermutation, BicolorLetter};
pub use partition::{partitions, Partition};
pub use permutation::Permutation;
pub use stats::{
    admissible_inversions, barred_word, comaj, des, descent_set, exc, excedance_set, exd_mask,
    exd_set, fix, inv, inversions, maj, statistics, Stat, StatRecord,
};

/// Binomial coefficient as u64.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Number of derangements of [n].
pub fn derangement_count(n: u64) -> u64 {
    // inclusion–exclusion
    let mut total: i128 = 0;
    for j in 0..=n {
        let term = binomial(n, j) as i128 * factorial(n - j) as i128;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total as u64
}
