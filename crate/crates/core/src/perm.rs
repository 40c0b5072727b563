//! Permutations of `[m]` in one-line notation.
//!
//! Positions and values are 1-indexed everywhere in the public API. Position
//! sets (descents, excedances) are returned as ascending `Vec<usize>`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `[m]`, stored as the word `π(1) π(2) … π(m)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that the
    /// values are a rearrangement of `1..=m`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Skips validation. Callers must guarantee bijectivity.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            values: (1..=m).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One-line notation.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `π(i)` for `1 <= i <= m`.
    ///
    /// # Panics
    /// If `i` is out of range.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                actual: other.size(),
            });
        }
        Ok(Permutation {
            values: other.values.iter().map(|&j| self.at(j)).collect(),
        })
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let m = self.size();
        Permutation {
            values: self.values.iter().map(|&v| m + 1 - v).collect(),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| self.values[v - 1] == i + 1)
    }

    /// `π(i) + π(m+1-i) = m+1` for every `i`.
    pub fn is_centrosymmetric(&self) -> bool {
        let m = self.size();
        self.values
            .iter()
            .zip(self.values.iter().rev())
            .all(|(&a, &b)| a + b == m + 1)
    }

    /// Linear scan: a 321 occurrence exists iff some entry has a larger entry
    /// to its left and a smaller one to its right.
    pub fn contains_321(&self) -> bool {
        let m = self.size();
        if m < 3 {
            return false;
        }
        let mut suffix_min = vec![usize::MAX; m + 1];
        for i in (0..m).rev() {
            suffix_min[i] = suffix_min[i + 1].min(self.values[i]);
        }
        let mut prefix_max = 0;
        for j in 0..m {
            let v = self.values[j];
            if prefix_max > v && suffix_min[j + 1] < v {
                return true;
            }
            prefix_max = prefix_max.max(v);
        }
        false
    }

    pub fn contains_123(&self) -> bool {
        self.complement().contains_321()
    }

    pub fn avoids_321(&self) -> bool {
        !self.contains_321()
    }

    /// Classical pattern containment. The patterns 321 and 123 take the
    /// linear scan; everything else goes through
    /// [`contains_pattern_naive`](Self::contains_pattern_naive).
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        match pattern.values() {
            [3, 2, 1] => self.contains_321(),
            [1, 2, 3] => self.contains_123(),
            _ => self.contains_pattern_naive(pattern),
        }
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Exhaustive subsequence search, pruning as soon as a partial choice is
    /// not order-isomorphic to the corresponding prefix of `pattern`.
    pub fn contains_pattern_naive(&self, pattern: &Permutation) -> bool {
        fn extend(text: &[usize], pat: &[usize], chosen: &mut Vec<usize>, start: usize) -> bool {
            let t = chosen.len();
            if t == pat.len() {
                return true;
            }
            if text.len() - start < pat.len() - t {
                return false;
            }
            for idx in start..text.len() {
                let v = text[idx];
                let consistent = chosen
                    .iter()
                    .zip(pat)
                    .all(|(&c, &pv)| (text[c] < v) == (pv < pat[t]));
                if consistent {
                    chosen.push(idx);
                    if extend(text, pat, chosen, idx + 1) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        if pattern.size() > self.size() {
            return false;
        }
        extend(&self.values, &pattern.values, &mut Vec::new(), 0)
    }

    /// `{ i ∈ [m-1] : π(i) > π(i+1) }`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Descents in the first half: `Des(π) ∩ [⌊m/2⌋]`.
    pub fn des_plus_set(&self) -> Vec<usize> {
        let half = self.size() / 2;
        self.descent_set()
            .into_iter()
            .filter(|&i| i <= half)
            .collect()
    }

    pub fn des_plus(&self) -> usize {
        self.des_plus_set().len()
    }

    pub fn maj_plus(&self) -> usize {
        self.des_plus_set().iter().sum()
    }

    /// `{ i : π(i) > i }`.
    pub fn excedance_set(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Accepts space-separated one-line notation (`"5 3 2 8 1 7 6 4"`). A single
/// token made only of digits 1-9 is also read digit by digit (`"53281764"`),
/// which is unambiguous for `m <= 9`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let values: Vec<usize> = if tokens.len() == 1
            && tokens[0].len() > 1
            && tokens[0].bytes().all(|b| (b'1'..=b'9').contains(&b))
        {
            tokens[0].bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry `{t}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}
