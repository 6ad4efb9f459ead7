//! Permutations of {1..n} in one-line notation, with Coxeter combinatorics:
//! length, reduced words, descents, and Bruhat order.

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation w of {1..n}, stored in one-line notation
/// [w(1), w(2), ..., w(n)] with 1-based values.
///
/// Composition is (v * w)(i) = v(w(i)); right multiplication by the simple
/// transposition s_i swaps the one-line entries at positions i, i+1, left
/// multiplication swaps the values i, i+1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    map: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize, "unsupported rank {n}");
        Permutation {
            map: (1..=n as u8).collect(),
        }
    }

    /// Validates one-line notation: a rearrangement of 1..=n.
    pub fn from_one_line(values: &[u8]) -> Result<Self> {
        let n = values.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::BadShape(format!(
                "one-line notation must list 1..=n for some n in 1..=255, got length {n}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::BadShape(format!(
                    "{values:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { map: values.into() })
    }

    /// The simple transposition s_i in Sym(n), 1 <= i <= n-1.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange(format!(
                "simple transposition s_{i} does not exist in Sym({n})"
            )));
        }
        Ok(Permutation::identity(n).times_simple(i))
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.map
    }

    /// w(i) for a 1-based position i.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(idx, &v)| v as usize == idx + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.map.len()];
        for (idx, &v) in self.map.iter().enumerate() {
            inv[(v - 1) as usize] = (idx + 1) as u8;
        }
        Permutation { map: inv.into() }
    }

    /// (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "cannot compose permutations of ranks {} and {}",
                self.n(),
                other.n()
            )));
        }
        let map = other.map.iter().map(|&v| self.map[(v - 1) as usize]).collect();
        Ok(Permutation { map })
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.map.len() {
            for j in (i + 1)..self.map.len() {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether i is a right descent: w(i) > w(i+1), equivalently
    /// length(w * s_i) < length(w).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.map[i - 1] > self.map[i]
    }

    fn first_right_descent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.has_right_descent(i))
    }

    /// w * s_i: swaps the one-line entries at positions i, i+1.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut map = self.map.clone();
        map.swap(i - 1, i);
        Permutation { map }
    }

    /// s_i * w: swaps the values i, i+1 wherever they occur.
    pub fn simple_times(&self, i: usize) -> Self {
        let map = self
            .map
            .iter()
            .map(|&v| {
                if v as usize == i {
                    v + 1
                } else if v as usize == i + 1 {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        Permutation { map }
    }

    /// The canonical reduced word: repeatedly strip the smallest right
    /// descent. The product s_{i_1} * ... * s_{i_l} of the returned indices
    /// recovers w, and the word length equals length(w).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = w.first_right_descent() {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    /// Every reduced word for w, in lexicographic order of discovery.
    /// Exponential in general; intended for small ranks in tests and checks.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut words = Vec::new();
        for i in 1..self.n() {
            if self.has_right_descent(i) {
                for mut prefix in self.times_simple(i).all_reduced_words() {
                    prefix.push(i);
                    words.push(prefix);
                }
            }
        }
        words
    }

    /// Bruhat order: whether self <= other. Uses the descent recursion
    /// (i a descent of w: v <= w iff min(v, v s_i) <= w s_i... precisely:
    /// if v s_i < v then v <= w iff v s_i <= w s_i, else v <= w iff v <= w s_i).
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "cannot compare permutations of ranks {} and {}",
                self.n(),
                other.n()
            )));
        }
        fn rec(v: &Permutation, w: &Permutation) -> bool {
            match w.first_right_descent() {
                None => v.is_identity(),
                Some(i) => {
                    let ws = w.times_simple(i);
                    if v.has_right_descent(i) {
                        rec(&v.times_simple(i), &ws)
                    } else {
                        rec(v, &ws)
                    }
                }
            }
        }
        Ok(rec(self, other))
    }

    /// All of Sym(n) in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n >= 1 && n <= u8::MAX as usize, "unsupported rank {n}");
        (1..=n as u8)
            .permutations(n)
            .map(|v| Permutation { map: v.into() })
            .collect()
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.map.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(vals: &[u8]) -> Permutation {
        Permutation::from_one_line(vals).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert!(Permutation::from_one_line(&[1, 2, 3]).unwrap().is_identity());
        assert!(Permutation::from_one_line(&[]).is_err());
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 3]).is_err());
        assert_eq!(Permutation::simple(3, 2).unwrap(), p(&[1, 3, 2]));
        assert!(Permutation::simple(3, 3).is_err());
        assert!(Permutation::simple(3, 0).is_err());
    }

    #[test]
    fn compose_follows_v_after_w() {
        let v = p(&[2, 3, 1]);
        let w = p(&[2, 3, 1]);
        assert_eq!(v.compose(&w).unwrap(), p(&[3, 1, 2]));
        // v * v^{-1} = id from both sides.
        assert!(v.compose(&v.inverse()).unwrap().is_identity());
        assert!(v.inverse().compose(&v).unwrap().is_identity());
        assert!(v.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p(&[3, 2, 1]).length(), 3);
        assert_eq!(p(&[2, 1, 4, 3]).length(), 2);
        // length(w s_i) = length(w) +- 1, sign given by the descent test.
        for w in Permutation::all(4) {
            for i in 1..4 {
                let ws = w.times_simple(i);
                if w.has_right_descent(i) {
                    assert_eq!(ws.length() + 1, w.length());
                } else {
                    assert_eq!(ws.length(), w.length() + 1);
                }
            }
        }
    }

    #[test]
    fn reduced_word_recovers_permutation() {
        assert_eq!(p(&[3, 2, 1]).reduced_word(), vec![1, 2, 1]);
        assert_eq!(Permutation::identity(3).reduced_word(), Vec::<usize>::new());
        for n in 1..=4 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                let mut acc = Permutation::identity(n);
                for &i in &word {
                    // Building left to right: acc * s_i appends a letter on
                    // the right, matching the s_{i_1} ... s_{i_l} convention.
                    acc = acc.times_simple(i);
                }
                assert_eq!(acc, w, "word {word:?} does not rebuild {w:?}");
            }
        }
    }

    #[test]
    fn all_reduced_words_are_reduced_and_complete() {
        let w = p(&[3, 2, 1]);
        let words: HashSet<Vec<usize>> = w.all_reduced_words().into_iter().collect();
        assert_eq!(
            words,
            HashSet::from([vec![1, 2, 1], vec![2, 1, 2]])
        );
        for n in 1..=4 {
            for w in Permutation::all(n) {
                for word in w.all_reduced_words() {
                    assert_eq!(word.len(), w.length());
                    let mut acc = Permutation::identity(n);
                    for &i in &word {
                        acc = acc.times_simple(i);
                    }
                    assert_eq!(acc, w);
                }
            }
        }
    }

    /// Oracle for Bruhat order: v <= w iff some subword of a reduced word of
    /// w multiplies out to v.
    fn bruhat_by_subwords(v: &Permutation, w: &Permutation) -> bool {
        let word = w.reduced_word();
        let n = w.n();
        (0..(1u32 << word.len())).any(|mask| {
            let mut acc = Permutation::identity(n);
            for (pos, &i) in word.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    acc = acc.times_simple(i);
                }
            }
            acc == *v
        })
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for n in 2..=4 {
            for v in Permutation::all(n) {
                for w in Permutation::all(n) {
                    assert_eq!(
                        v.bruhat_leq(&w).unwrap(),
                        bruhat_by_subwords(&v, &w),
                        "Bruhat mismatch for {v:?} vs {w:?}"
                    );
                }
            }
        }
        assert!(p(&[1, 2]).bruhat_leq(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn left_and_right_simple_multiplication() {
        let w = p(&[2, 3, 1]);
        assert_eq!(w.times_simple(1), p(&[3, 2, 1]));
        assert_eq!(w.simple_times(1), p(&[1, 3, 2]));
        // Both agree with compose against the simple transposition.
        for n in 2..=4 {
            for w in Permutation::all(n) {
                for i in 1..n {
                    let s = Permutation::simple(n, i).unwrap();
                    assert_eq!(w.times_simple(i), w.compose(&s).unwrap());
                    assert_eq!(w.simple_times(i), s.compose(&w).unwrap());
                }
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        assert_eq!(all[5], p(&[3, 2, 1]));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(Permutation::all(1).len(), 1);
    }

    #[test]
    fn serializes_as_one_line_array() {
        assert_eq!(serde_json::to_string(&p(&[2, 3, 1])).unwrap(), "[2,3,1]");
    }
}
