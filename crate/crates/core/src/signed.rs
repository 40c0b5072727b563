//! The hyperoctahedral group `B_n`, the identification `Θ: S^C_{2n} → B_n`,
//! and signed pattern containment.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A signed permutation in window notation `σ(1) … σ(n)`; `σ(-i) = -σ(i)` is
/// implied.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    /// Requires `{|σ(i)|} = [n]`.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidSignedPermutation(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `σ(i)` for nonzero `i` with `|i| <= n`.
    pub fn apply(&self, i: i64) -> i64 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `|σ| ∈ S_n`.
    pub fn absolute(&self) -> Permutation {
        Permutation::from_vec_unchecked(
            self.window
                .iter()
                .map(|v| v.unsigned_abs() as usize)
                .collect(),
        )
    }

    /// `σ(σ(i)) = i` for every `i`.
    pub fn is_involution(&self) -> bool {
        (1..=self.size() as i64).all(|i| self.apply(self.apply(i)) == i)
    }

    /// Some subsequence has absolute values order-isomorphic to `|τ|` and
    /// entrywise the same signs as `τ`. Exhaustive scan.
    pub fn contains(&self, pattern: &SignedPermutation) -> bool {
        fn extend(text: &[i64], pat: &[i64], chosen: &mut Vec<usize>, start: usize) -> bool {
            let t = chosen.len();
            if t == pat.len() {
                return true;
            }
            for idx in start..text.len() {
                if text.len() - idx < pat.len() - t {
                    break;
                }
                let v = text[idx];
                if (v < 0) != (pat[t] < 0) {
                    continue;
                }
                let consistent = chosen
                    .iter()
                    .zip(pat)
                    .all(|(&c, &pv)| (text[c].abs() < v.abs()) == (pv.abs() < pat[t].abs()));
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
        pattern.size() <= self.size() && extend(&self.window, &pattern.window, &mut Vec::new(), 0)
    }

    pub fn avoids(&self, pattern: &SignedPermutation) -> bool {
        !self.contains(pattern)
    }

    /// Avoids `321`, `-3 2 1`, `3 2 -1`, `-3 2 -1`, `1 -2` and `-1 -2`.
    pub fn avoids_six_patterns(&self) -> bool {
        six_patterns().iter().all(|p| self.avoids(p))
    }

    /// The type-B descent set used here, defined by pulling back along `Θ`:
    /// `Des⁺(Θ⁻¹(σ))`.
    pub fn des_plus_set(&self) -> Vec<usize> {
        theta_inverse(self).des_plus_set()
    }

    pub fn des_plus(&self) -> usize {
        self.des_plus_set().len()
    }

    pub fn maj_plus(&self) -> usize {
        self.des_plus_set().iter().sum()
    }
}

/// The six signed patterns characterising `Θ(S^C_{2n}(321))`.
pub fn six_patterns() -> [SignedPermutation; 6] {
    [
        vec![3, 2, 1],
        vec![-3, 2, 1],
        vec![3, 2, -1],
        vec![-3, 2, -1],
        vec![1, -2],
        vec![-1, -2],
    ]
    .map(|w| SignedPermutation { window: w })
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Space-separated signed integers, e.g. `"-2 -4 1 3"`.
impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let window = s
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad signed entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

/// `Θ(π)(i) = π(n+i) - n` if `π(n+i) > n`, else `π(n+i) - n - 1`.
pub fn theta(p: &Permutation) -> Result<SignedPermutation> {
    if p.size() % 2 == 1 {
        return Err(Error::OddSize(p.size()));
    }
    if !p.is_centrosymmetric() {
        return Err(Error::NotCentrosymmetric(p.to_string()));
    }
    let n = p.size() / 2;
    let window = (1..=n)
        .map(|i| {
            let v = p.at(n + i) as i64;
            let n = n as i64;
            if v > n {
                v - n
            } else {
                v - n - 1
            }
        })
        .collect();
    Ok(SignedPermutation { window })
}

/// Rebuilds the right half of `π` from the window and completes it by
/// centrosymmetry.
pub fn theta_inverse(s: &SignedPermutation) -> Permutation {
    let n = s.size();
    let mut values = vec![0usize; 2 * n];
    for (i, &v) in s.window.iter().enumerate() {
        let right = if v > 0 {
            v + n as i64
        } else {
            v + n as i64 + 1
        } as usize;
        values[n + i] = right;
        values[n - 1 - i] = 2 * n + 1 - right;
    }
    Permutation::from_vec_unchecked(values)
}
