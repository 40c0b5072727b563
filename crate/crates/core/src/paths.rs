//! Lattice paths with unit steps `N` and `E`, Young diagrams inside a
//! rectangle, peak sets and hook decompositions.
//!
//! Conventions: a path starts at `(0,0)`, `N` increments `y` and `E`
//! increments `x`. A path with `a` north steps and `b` east steps ends at
//! `(b,a)` and is the southeast boundary of a Young diagram anchored at the
//! top-left corner of the `a × b` rectangle `R_{a,b}`; its area is measured
//! northwest of the path. Vertices are labelled `0..=len` along the path.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::{permutation_to_subset, ExcedanceSubset};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    N,
    E,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

/// A word over `{N, E}`. The rectangle it lives in is supplied by the caller
/// where it matters, so one word can be read both in `A_n` and in `Y_{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// Step `i` (1-indexed) is `N` iff bit `i-1` of `mask` is set.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        LatticePath {
            steps: (0..len)
                .map(|i| if mask >> i & 1 == 1 { Step::N } else { Step::E })
                .collect(),
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::N).count()
    }

    pub fn east_count(&self) -> usize {
        self.len() - self.north_count()
    }

    pub fn first(&self) -> Option<Step> {
        self.steps.first().copied()
    }

    pub fn last(&self) -> Option<Step> {
        self.steps.last().copied()
    }

    /// Checks the path has exactly `a` north and `b` east steps.
    pub fn check_rectangle(&self, a: usize, b: usize) -> Result<()> {
        if self.north_count() == a && self.east_count() == b {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                path: self.to_string(),
                a,
                b,
            })
        }
    }

    /// Labels of vertices sitting between an `N` and an immediately
    /// following `E`.
    pub fn peak_set(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::N && w[1] == Step::E)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `Peak(P·E)`: the peak set plus the final vertex when `P` ends in `N`.
    pub fn peak_star_set(&self) -> Vec<usize> {
        let mut peaks = self.peak_set();
        if self.last() == Some(Step::N) {
            peaks.push(self.len());
        }
        peaks
    }

    /// Lattice coordinates `(x, y)` of the peaks, in path order.
    pub fn peak_coordinates(&self) -> Vec<(usize, usize)> {
        let (mut x, mut y) = (0, 0);
        let mut out = Vec::new();
        for (i, &s) in self.steps.iter().enumerate() {
            match s {
                Step::N => {
                    y += 1;
                    if self.steps.get(i + 1) == Some(&Step::E) {
                        out.push((x, y));
                    }
                }
                Step::E => x += 1,
            }
        }
        out
    }

    /// Boxes northwest of the path inside `R_{a,b}` with `a = #N`:
    /// every `E` step at height `h` contributes a column of `a - h` boxes.
    pub fn area(&self) -> usize {
        let a = self.north_count();
        let mut height = 0;
        let mut area = 0;
        for &s in &self.steps {
            match s {
                Step::N => height += 1,
                Step::E => area += a - height,
            }
        }
        area
    }

    /// The Young diagram whose southeast boundary is this path.
    pub fn partition(&self) -> Partition {
        let a = self.north_count();
        let mut height = 0;
        let mut columns = Vec::with_capacity(self.east_count());
        for &s in &self.steps {
            match s {
                Step::N => height += 1,
                Step::E => columns.push(a - height),
            }
        }
        Partition::from_columns(&columns)
    }

    /// [`partition`](Self::partition) after checking the path lies in `R_{a,b}`.
    pub fn partition_in(&self, a: usize, b: usize) -> Result<Partition> {
        self.check_rectangle(a, b)?;
        Ok(self.partition())
    }

    /// Hook sizes obtained by peeling the diagram, ascending.
    pub fn hook_decomposition(&self) -> Vec<usize> {
        self.partition().hook_decomposition()
    }

    /// `hd(P) ∪ {len}` when `P` begins with `N`, else `hd(P)`.
    pub fn hd_star(&self) -> Vec<usize> {
        let mut hd = self.hook_decomposition();
        if self.first() == Some(Step::N) {
            hd.push(self.len());
        }
        hd
    }

    /// Moves the first step to the end.
    pub fn rotate_first_to_last(&self) -> Result<LatticePath> {
        let (&first, rest) = self
            .steps
            .split_first()
            .ok_or_else(|| Error::InvalidPath("cannot rotate the empty path".into()))?;
        let mut steps = rest.to_vec();
        steps.push(first);
        Ok(LatticePath { steps })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                _ => Err(Error::Parse(format!("bad step `{c}` in path `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath::new)
    }
}

/// An integer partition; trailing zero parts are dropped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// From weakly decreasing column heights.
    fn from_columns(columns: &[usize]) -> Self {
        let rows = columns.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|r| columns.iter().take_while(|&&c| c >= r).count())
            .collect();
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// Side of the Durfee square: the largest `k` with `λ_k >= k`.
    pub fn durfee_side(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn fits_in(&self, a: usize, b: usize) -> bool {
        self.parts.len() <= a && self.parts.first().is_none_or(|&p| p <= b)
    }

    /// Repeatedly removes the first row together with the first column and
    /// records the number of boxes removed. Returned ascending.
    pub fn hook_decomposition(&self) -> Vec<usize> {
        let mut rest = self.parts.clone();
        let mut hooks = Vec::new();
        while let Some(&first) = rest.first() {
            hooks.push(first + rest.len() - 1);
            rest = rest[1..]
                .iter()
                .map(|&p| p - 1)
                .filter(|&p| p > 0)
                .collect();
        }
        hooks.reverse();
        hooks
    }

    /// Southeast boundary inside `R_{a,b}`.
    pub fn to_path(&self, a: usize, b: usize) -> Result<LatticePath> {
        if !self.fits_in(a, b) {
            return Err(Error::ShapeMismatch {
                path: self.to_string(),
                a,
                b,
            });
        }
        let conj = self.conjugate();
        let mut steps = Vec::with_capacity(a + b);
        let mut height = 0;
        for x in 0..b {
            let target = a - conj.parts.get(x).copied().unwrap_or(0);
            steps.extend(std::iter::repeat_n(Step::N, target - height));
            height = target;
            steps.push(Step::E);
        }
        steps.extend(std::iter::repeat_n(Step::N, a - height));
        Ok(LatticePath { steps })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The map `f`: step `i` is `N` iff `i ∈ E`.
pub fn subset_to_path(e: &ExcedanceSubset) -> LatticePath {
    LatticePath {
        steps: (1..=e.n())
            .map(|i| if e.contains(i) { Step::N } else { Step::E })
            .collect(),
    }
}

pub fn path_to_subset(p: &LatticePath) -> ExcedanceSubset {
    let members = p
        .steps
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::N)
        .map(|(i, _)| i + 1)
        .collect();
    ExcedanceSubset::new(p.len(), members).expect("positions lie in [n]")
}

/// The bijection `g` on `Y_{a,b}` (with `a = #N`, `b = #E` read off the
/// path) sending peaks to hooks: `Peak(P) = hd(g(P))` and
/// `Peak*(P) = hd*(g(P))`.
///
/// With peaks at `(x_j, y_j)`, the image is `R_a … R_1 S_1 … S_b` where
/// `R_{y_j} = E`, `S_{x_j + 1} = N`, and every other `R` is `N`, every other
/// `S` is `E`.
pub fn g_bijection(p: &LatticePath) -> LatticePath {
    let a = p.north_count();
    let b = p.east_count();
    let mut r = vec![Step::N; a + 1];
    let mut s = vec![Step::E; b + 1];
    for (x, y) in p.peak_coordinates() {
        r[y] = Step::E;
        s[x + 1] = Step::N;
    }
    let mut steps = Vec::with_capacity(a + b);
    steps.extend((1..=a).rev().map(|i| r[i]));
    steps.extend((1..=b).map(|j| s[j]));
    LatticePath { steps }
}

/// [`g_bijection`] for a path declared to lie in `R_{a,b}`.
pub fn g_bijection_in(p: &LatticePath, a: usize, b: usize) -> Result<LatticePath> {
    p.check_rectangle(a, b)?;
    Ok(g_bijection(p))
}

/// Inverse of [`g_bijection`]: the `E` positions among the first `a` steps
/// give the peak heights, the `N` positions among the last `b` steps give the
/// peak abscissae, and the unique path with exactly those peaks is rebuilt.
pub fn g_inverse(q: &LatticePath) -> LatticePath {
    let a = q.north_count();
    let b = q.east_count();
    let mut ys: Vec<usize> = (0..a)
        .filter(|&k| q.steps[k] == Step::E)
        .map(|k| a - k)
        .collect();
    ys.sort_unstable();
    let xs: Vec<usize> = (0..b).filter(|&k| q.steps[a + k] == Step::N).collect();
    debug_assert_eq!(xs.len(), ys.len());
    let mut steps = Vec::with_capacity(a + b);
    let (mut x, mut y) = (0, 0);
    for (&px, &py) in xs.iter().zip(&ys) {
        steps.extend(std::iter::repeat_n(Step::E, px - x));
        steps.extend(std::iter::repeat_n(Step::N, py - y));
        x = px;
        y = py;
    }
    steps.extend(std::iter::repeat_n(Step::E, b - x));
    steps.extend(std::iter::repeat_n(Step::N, a - y));
    LatticePath { steps }
}

pub fn g_inverse_in(q: &LatticePath, a: usize, b: usize) -> Result<LatticePath> {
    q.check_rectangle(a, b)?;
    Ok(g_inverse(q))
}

/// `Peak*(f(π))` for `π ∈ I^C_{2n}(321)`, checked against `Des⁺(π)`.
pub fn despeak_transport(p: &Permutation) -> Result<Vec<usize>> {
    let e = permutation_to_subset(p)?;
    let peaks = subset_to_path(&e).peak_star_set();
    let des_plus = p.des_plus_set();
    if peaks != des_plus {
        return Err(Error::TransportMismatch(format!(
            "{p}: Peak* {peaks:?} but Des+ {des_plus:?}"
        )));
    }
    Ok(peaks)
}

/// All paths with `a` north and `b` east steps (`Y_{a,b}`), as increasing
/// bit masks of the north positions.
pub fn rectangle_paths(a: usize, b: usize) -> impl Iterator<Item = LatticePath> {
    let len = a + b;
    assert!(len < 64, "paths longer than 63 steps are not supported");
    let first: u64 = (1u64 << a) - 1;
    let limit: u64 = 1u64 << len;
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let mask = next?;
        next = if mask == 0 {
            None
        } else {
            // Gosper's hack: next integer with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            let n = (((r ^ mask) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(LatticePath::from_mask(len, mask))
    })
}

/// All `2^n` paths of length `n` (`A_n`).
pub fn all_paths(n: usize) -> impl Iterator<Item = LatticePath> {
    assert!(n < 64, "paths longer than 63 steps are not supported");
    (0..1u64 << n).map(move |mask| LatticePath::from_mask(n, mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn subset(n: usize, m: &[usize]) -> ExcedanceSubset {
        ExcedanceSubset::new(n, m.to_vec()).unwrap()
    }

    #[test]
    fn subset_encoding() {
        assert_eq!(subset_to_path(&ExcedanceSubset::empty(4)), path("EEEE"));
        assert_eq!(subset_to_path(&subset(4, &[1, 3])), path("NENE"));
        assert_eq!(subset_to_path(&subset(2, &[2])), path("EN"));
        assert_eq!(path_to_subset(&path("NENE")), subset(4, &[1, 3]));
    }

    #[test]
    fn peaks() {
        assert!(path("EE").peak_set().is_empty());
        assert!(path("EE").peak_star_set().is_empty());
        assert_eq!(path("NENE").peak_set(), vec![1, 3]);
        assert_eq!(path("NENE").peak_star_set(), vec![1, 3]);
        assert!(path("NN").peak_set().is_empty());
        assert_eq!(path("NN").peak_star_set(), vec![2]);
        assert_eq!(path("NENE").peak_coordinates(), vec![(0, 1), (1, 2)]);
        assert_eq!(path("ENE").peak_coordinates(), vec![(1, 1)]);
    }

    #[test]
    fn area_and_partition() {
        assert_eq!(path("NNEE").area(), 0);
        assert_eq!(
            path("NNEE").partition_in(2, 2).unwrap(),
            Partition::default()
        );
        assert_eq!(path("EENN").area(), 4);
        assert_eq!(path("EENN").partition_in(2, 2).unwrap().parts(), &[2, 2]);
        assert_eq!(path("NENE").area(), 1);
        assert_eq!(path("NENE").partition_in(2, 2).unwrap().parts(), &[1]);
        assert!(path("NENE").partition_in(1, 3).is_err());
        assert_eq!(path("ENEEN").partition().parts(), &[3, 1]);
    }

    #[test]
    fn hook_decompositions() {
        assert!(path("NNEE").hook_decomposition().is_empty());
        assert_eq!(path("NNEE").hd_star(), vec![4]);
        assert_eq!(path("EENN").hook_decomposition(), vec![1, 3]);
        assert_eq!(path("EENN").hd_star(), vec![1, 3]);
        assert_eq!(path("EEN").hook_decomposition(), vec![2]);
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_bijection(&path("EENN")), path("NNEE"));
        assert_eq!(g_bijection(&path("NENE")), path("EENN"));
        assert_eq!(path("EENN").hook_decomposition(), path("NENE").peak_set());
        assert_eq!(g_bijection(&path("ENE")), path("EEN"));
        assert_eq!(g_inverse(&path("EEN")), path("ENE"));
        assert_eq!(g_inverse(&path("EENN")), path("NENE"));
        assert!(g_bijection_in(&path("ENE"), 2, 1).is_err());
        assert!(g_inverse_in(&path("ENE"), 1, 2).is_ok());
        assert_eq!(g_bijection(&LatticePath::default()), LatticePath::default());
    }

    #[test]
    fn rotation() {
        let p = path("NE");
        let r = p.rotate_first_to_last().unwrap();
        assert_eq!(r, path("EN"));
        assert_eq!((p.area(), r.area()), (0, 1));
        let p = path("EN");
        let r = p.rotate_first_to_last().unwrap();
        assert_eq!(r, path("NE"));
        assert_eq!((p.area(), r.area()), (1, 0));
        assert_eq!(path("EE").rotate_first_to_last().unwrap(), path("EE"));
        assert!(LatticePath::default().rotate_first_to_last().is_err());
    }

    #[test]
    fn despeak_examples() {
        assert!(despeak_transport(&"1234".parse().unwrap())
            .unwrap()
            .is_empty());
        assert_eq!(
            despeak_transport(&"3412".parse().unwrap()).unwrap(),
            vec![2]
        );
        assert_eq!(
            despeak_transport(&"2143".parse().unwrap()).unwrap(),
            vec![1]
        );
        assert!(despeak_transport(&"4231".parse().unwrap()).is_err());
    }

    #[test]
    fn partition_round_trip_and_parse() {
        let lam: Partition = "3,1".parse().unwrap();
        assert_eq!(lam.to_string(), "3,1");
        let p = lam.to_path(2, 3).unwrap();
        assert_eq!(p, path("ENEEN"));
        assert_eq!(p.partition(), lam);
        assert!(lam.to_path(1, 3).is_err());
        assert!("1,3".parse::<Partition>().is_err());
        assert_eq!(lam.durfee_side(), 1);
        assert_eq!(Partition::new(vec![2, 2, 0]).unwrap().parts(), &[2, 2]);
    }

    #[test]
    fn generators_count() {
        assert_eq!(rectangle_paths(2, 2).count(), 6);
        assert_eq!(rectangle_paths(0, 3).count(), 1);
        assert_eq!(rectangle_paths(0, 0).count(), 1);
        assert_eq!(all_paths(3).count(), 8);
        assert!(rectangle_paths(3, 2).all(|p| p.north_count() == 3 && p.len() == 5));
    }
}
