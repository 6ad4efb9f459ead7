//! Color vectors: assignments of a color in {1..r} to each of n strands,
//! together with the place action of Sym(n), the relabeling action of
//! Sym(r), and relabeling-orbit enumeration.

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One color per strand, 1-based: k = (k_1, ..., k_n) with each k_i in 1..=r.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColorVector {
    colors: Box<[u8]>,
}

impl ColorVector {
    /// Validates entries against the color count r.
    pub fn new(colors: &[u8], r: usize) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::BadShape("a color vector needs at least one entry".into()));
        }
        for (idx, &c) in colors.iter().enumerate() {
            if c == 0 || c as usize > r {
                return Err(Error::IndexOutOfRange(format!(
                    "color {c} at position {} lies outside 1..={r}",
                    idx + 1
                )));
            }
        }
        Ok(ColorVector { colors: colors.into() })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// k_i for a 1-based position.
    pub fn color(&self, i: usize) -> u8 {
        self.colors[i - 1]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.colors
    }

    /// The place action of w in Sym(n): (w.k)_{w(j)} = k_j, i.e. the color of
    /// strand j travels to place w(j). Satisfies (v w).k = v.(w.k).
    pub fn place_act(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch(format!(
                "permutation rank {} does not match strand count {}",
                w.n(),
                self.n()
            )));
        }
        let mut out = vec![0u8; self.n()];
        for j in 1..=self.n() {
            out[w.apply(j) - 1] = self.colors[j - 1];
        }
        Ok(ColorVector { colors: out.into() })
    }

    /// The relabeling action of sigma in Sym(r): k_i -> sigma(k_i).
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        for &c in self.colors.iter() {
            if c as usize > sigma.n() {
                return Err(Error::IndexOutOfRange(format!(
                    "color {c} exceeds the relabeling rank {}",
                    sigma.n()
                )));
            }
        }
        let colors = self.colors.iter().map(|&c| sigma.apply(c as usize) as u8).collect();
        Ok(ColorVector { colors })
    }

    /// The first-use relabeling: the first distinct color that appears
    /// becomes 1, the next 2, and so on. Two vectors lie in the same
    /// Sym(r)-relabeling orbit exactly when their canonical forms agree
    /// (equivalently, when their equality patterns {(i,j) : k_i = k_j} agree).
    pub fn canonical_form(&self) -> ColorVector {
        let mut assignment = [0u8; 256];
        let mut next = 0u8;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if assignment[c as usize] == 0 {
                    next += 1;
                    assignment[c as usize] = next;
                }
                assignment[c as usize]
            })
            .collect();
        ColorVector { colors }
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen = [false; 256];
        let mut count = 0;
        for &c in self.colors.iter() {
            if !seen[c as usize] {
                seen[c as usize] = true;
                count += 1;
            }
        }
        count
    }

    /// Whether this vector is its own canonical form.
    pub fn is_canonical(&self) -> bool {
        *self == self.canonical_form()
    }

    /// The Sym(r)-relabeling orbit, sorted. Enumerated by assigning each of
    /// the d distinct first-use slots an injective choice of color in 1..=r,
    /// so the size is r (r-1) ... (r-d+1).
    pub fn orbit(&self, r: usize) -> Result<Vec<ColorVector>> {
        let canon = self.canonical_form();
        let d = canon.distinct_colors();
        if d > r {
            return Err(Error::IndexOutOfRange(format!(
                "{d} distinct colors cannot be drawn from 1..={r}"
            )));
        }
        let mut out: Vec<ColorVector> = (1..=r as u8)
            .permutations(d)
            .map(|choice| {
                let colors = canon
                    .colors
                    .iter()
                    .map(|&slot| choice[(slot - 1) as usize])
                    .collect();
                ColorVector { colors }
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// All r^n color vectors in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<ColorVector> {
        assert!(n >= 1 && r >= 1 && r <= u8::MAX as usize);
        let mut out = Vec::new();
        let mut current = vec![1u8; n];
        loop {
            out.push(ColorVector { colors: current.clone().into() });
            // Odometer increment, most significant digit leftmost.
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                if (current[pos - 1] as usize) < r {
                    current[pos - 1] += 1;
                    break;
                }
                current[pos - 1] = 1;
                pos -= 1;
            }
        }
    }

    /// Canonical representatives of all relabeling orbits, sorted. There is
    /// one per set partition of the n strands into at most r blocks.
    pub fn orbit_representatives(n: usize, r: usize) -> Vec<ColorVector> {
        ColorVector::all(n, r.min(n))
            .into_iter()
            .filter(ColorVector::is_canonical)
            .collect()
    }
}

impl Serialize for ColorVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.colors.iter())
    }
}
