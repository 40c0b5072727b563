//! Robinson–Schensted for 321-avoiding involutions and the bijection
//! `θ: {π ∈ I_{a+b}(321) : fp(π) >= b-a} → Y_{a,b}` with `Des(π) = hd(θ(π))`.
//!
//! The construction has three steps:
//!
//! 1. Row insertion gives a standard tableau with at most two rows; the word
//!    with `N` for top-row entries and `E` for bottom-row entries is a path
//!    that never goes below `y = x`, with `#N - #E = fp(π)` and peak set
//!    `Des(π)`.
//! 2. Steps are matched like parentheses (`N` opens, `E` closes). The leftmost
//!    `(fp + b - a)/2` unmatched `N` steps become `E`, landing in `Y_{a,b}`
//!    without moving any peak.
//! 3. The peak-to-hook bijection [`g_bijection`] finishes the job.

use crate::error::{Error, Result};
use crate::paths::{g_bijection, g_inverse, LatticePath, Step};
use crate::perm::Permutation;
use crate::qpoly::{q_binomial, QPoly};

/// A standard Young tableau with at most two rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoRowTableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoRowTableau {
    /// Rows strictly increasing, `|top| >= |bottom|`, columns strictly
    /// increasing, and the entries are exactly `1..=m`.
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let increasing = |r: &[usize]| r.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&top) || !increasing(&bottom) {
            return Err(Error::InvalidTableau("rows must increase".into()));
        }
        if bottom.len() > top.len() || bottom.iter().zip(&top).any(|(b, t)| b <= t) {
            return Err(Error::InvalidTableau("not a Young tableau shape".into()));
        }
        let m = top.len() + bottom.len();
        let mut seen = vec![false; m + 1];
        for &x in top.iter().chain(&bottom) {
            if x == 0 || x > m || seen[x] {
                return Err(Error::InvalidTableau(format!("entry {x} out of place")));
            }
            seen[x] = true;
        }
        Ok(TwoRowTableau { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn size(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    /// Step `i` is `N` iff `i` is in the top row.
    pub fn to_path(&self) -> LatticePath {
        let mut steps = vec![Step::E; self.size()];
        for &i in &self.top {
            steps[i - 1] = Step::N;
        }
        LatticePath::new(steps)
    }

    /// Inverse of [`to_path`](Self::to_path); the path must stay weakly above
    /// the diagonal.
    pub fn from_path(path: &LatticePath) -> Result<Self> {
        let (mut top, mut bottom) = (Vec::new(), Vec::new());
        for (i, &s) in path.steps().iter().enumerate() {
            match s {
                Step::N => top.push(i + 1),
                Step::E => bottom.push(i + 1),
            }
            if bottom.len() > top.len() {
                return Err(Error::InvalidPath(format!(
                    "{path} goes below the diagonal"
                )));
            }
        }
        TwoRowTableau::new(top, bottom)
    }

    /// Inverse Robinson–Schensted with `P = Q`: the entries `m, m-1, …, 1` are
    /// removed from the recording copy, and the matching cell of the
    /// insertion copy is reverse-bumped.
    pub fn to_involution(&self) -> Permutation {
        let m = self.size();
        let mut insertion = [self.top.clone(), self.bottom.clone()];
        let mut recording = insertion.clone();
        let mut values = vec![0; m];
        for k in (1..=m).rev() {
            let row = if recording[1].last() == Some(&k) {
                1
            } else {
                0
            };
            recording[row].pop();
            let mut x = insertion[row].pop().expect("rows have equal shapes");
            if row == 1 {
                let pos = insertion[0].partition_point(|&y| y < x) - 1;
                std::mem::swap(&mut x, &mut insertion[0][pos]);
            }
            values[k - 1] = x;
        }
        Permutation::from_vec_unchecked(values)
    }
}

/// Row insertion of an involution. A bump out of the second row means a
/// decreasing subsequence of length three, which is reported as
/// [`Error::Contains321`].
pub fn rsk_two_row(p: &Permutation) -> Result<TwoRowTableau> {
    if !p.is_involution() {
        return Err(Error::NotInvolution(p.to_string()));
    }
    let mut rows: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for &x in p.values() {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y < carry);
            if pos == row.len() {
                row.push(carry);
                placed = true;
                break;
            }
            carry = std::mem::replace(&mut row[pos], carry);
        }
        if !placed {
            return Err(Error::Contains321(p.to_string()));
        }
    }
    let [top, bottom] = rows;
    Ok(TwoRowTableau { top, bottom })
}

/// `N` at step `i` iff `i` lands in the top row of the insertion tableau.
pub fn involution_to_path(p: &Permutation) -> Result<LatticePath> {
    Ok(rsk_two_row(p)?.to_path())
}

/// Parenthesis matching of a path, `N` opening and `E` closing. Indices are
/// 1-based step positions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FacingMatch {
    /// `(N index, E index)`, sorted by `N` index.
    pub pairs: Vec<(usize, usize)>,
    pub unmatched_north: Vec<usize>,
    /// Always precede every unmatched `N`.
    pub unmatched_east: Vec<usize>,
}

pub fn parenthesis_match(path: &LatticePath) -> FacingMatch {
    let mut open = Vec::new();
    let mut out = FacingMatch::default();
    for (i, &s) in path.steps().iter().enumerate() {
        match s {
            Step::N => open.push(i + 1),
            Step::E => match open.pop() {
                Some(j) => out.pairs.push((j, i + 1)),
                None => out.unmatched_east.push(i + 1),
            },
        }
    }
    out.pairs.sort_unstable();
    out.unmatched_north = open;
    out
}

/// Facing `N`/`E` pairs of a path that never dips below `y = x`.
pub fn facing_match(path: &LatticePath) -> Result<FacingMatch> {
    let m = parenthesis_match(path);
    if !m.unmatched_east.is_empty() {
        return Err(Error::InvalidPath(format!(
            "{path} goes below the diagonal"
        )));
    }
    Ok(m)
}

fn check_rectangle_order(a: usize, b: usize) -> Result<()> {
    if b < a {
        return Err(Error::RectangleOrder { a, b });
    }
    Ok(())
}

/// `θ(π) ∈ Y_{a,b}` with `Des(π) = hd(θ(π))`.
pub fn theta_fp(p: &Permutation, a: usize, b: usize) -> Result<LatticePath> {
    check_rectangle_order(a, b)?;
    if p.size() != a + b {
        return Err(Error::SizeMismatch {
            expected: a + b,
            actual: p.size(),
        });
    }
    let tableau = rsk_two_row(p)?;
    let fp = p.fixed_point_count();
    if fp < b - a {
        return Err(Error::TooFewFixedPoints {
            fp,
            required: b - a,
        });
    }
    let path = tableau.to_path();
    let matched = facing_match(&path)?;
    let mut steps = path.steps().to_vec();
    for &i in matched.unmatched_north.iter().take((fp + b - a) / 2) {
        steps[i - 1] = Step::E;
    }
    Ok(g_bijection(&LatticePath::new(steps)))
}

/// Inverse of [`theta_fp`].
pub fn theta_fp_inverse(lambda: &LatticePath, a: usize, b: usize) -> Result<Permutation> {
    check_rectangle_order(a, b)?;
    lambda.check_rectangle(a, b)?;
    let path = g_inverse(lambda);
    let matched = parenthesis_match(&path);
    let mut steps = path.steps().to_vec();
    for &i in &matched.unmatched_east {
        steps[i - 1] = Step::N;
    }
    let tableau = TwoRowTableau::from_path(&LatticePath::new(steps))?;
    Ok(tableau.to_involution())
}

fn check_fp_parity(n: usize, l: usize) -> Result<()> {
    if l > n || !(n - l).is_multiple_of(2) {
        return Err(Error::Parity { n, l });
    }
    Ok(())
}

/// `Σ q^{maj(π)}` over `π ∈ I_{a+b}(321)` with `fp(π) >= b-a`: `{a+b choose a}_q`.
pub fn fp_at_least_maj_poly(a: usize, b: usize) -> QPoly {
    q_binomial((a + b) as i64, a as i64)
}

/// `Σ q^{maj(π)}` over `π ∈ I_n(321)` with exactly `l` fixed points.
pub fn fp_refined_maj_poly(n: usize, l: usize) -> Result<QPoly> {
    check_fp_parity(n, l)?;
    let h = ((n - l) / 2) as i64;
    let n = n as i64;
    Ok(&q_binomial(n, h) - &q_binomial(n, h - 1))
}

/// Restriction of [`fp_at_least_maj_poly`] to `des(π) = k`:
/// `q^{k²} {a choose k}_q {b choose k}_q`.
pub fn fp_at_least_des_poly(a: usize, b: usize, k: usize) -> QPoly {
    (&q_binomial(a as i64, k as i64) * &q_binomial(b as i64, k as i64)).shift(k * k)
}

/// Restriction of [`fp_refined_maj_poly`] to `des(π) = k`.
pub fn fp_des_refined_poly(n: usize, l: usize, k: usize) -> Result<QPoly> {
    check_fp_parity(n, l)?;
    let lo = ((n - l) / 2) as i64;
    let hi = ((n + l) / 2) as i64;
    let k = k as i64;
    let first = &q_binomial(lo, k) * &q_binomial(hi, k);
    let second = &q_binomial(lo - 1, k) * &q_binomial(hi + 1, k);
    Ok((&first - &second).shift((k * k) as usize))
}
