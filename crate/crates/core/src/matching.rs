//! Symmetric non-nesting matchings and the bijection
//! `I^C_{2n}(321) → 2^[n]`, `π ↦ Exc(π) ∩ [n]`.
//!
//! A centrosymmetric involution of `[2n]` is drawn as a matching on `2n`
//! points with an arc `(i, π(i))` for every 2-cycle. Centrosymmetry makes the
//! matching invariant under `i ↦ 2n+1-i`, and 321-avoidance makes it
//! non-nesting. Such a matching is determined by the set of left endpoints
//! lying in `[n]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A partial matching on points `1..=points`. Arcs are kept sorted by left
/// endpoint; unmatched points are singletons and are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    points: usize,
    arcs: Vec<(usize, usize)>,
}

impl Matching {
    /// Checks endpoints are in range, ordered `i < j`, and pairwise disjoint.
    pub fn new(points: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; points + 1];
        for &(i, j) in &arcs {
            if i == 0 || i >= j || j > points {
                return Err(Error::InvalidMatching(format!(
                    "arc {i}-{j} on {points} points"
                )));
            }
            if used[i] || used[j] {
                return Err(Error::InvalidMatching(format!(
                    "arc {i}-{j} reuses an endpoint"
                )));
            }
            used[i] = true;
            used[j] = true;
        }
        arcs.sort_unstable();
        Ok(Matching { points, arcs })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn partner(&self, point: usize) -> Option<usize> {
        self.arcs.iter().find_map(|&(i, j)| {
            if i == point {
                Some(j)
            } else if j == point {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn singletons(&self) -> Vec<usize> {
        let mut used = vec![false; self.points + 1];
        for &(i, j) in &self.arcs {
            used[i] = true;
            used[j] = true;
        }
        (1..=self.points).filter(|&p| !used[p]).collect()
    }

    /// Invariant under relabelling `i ↦ points+1-i`.
    pub fn is_symmetric(&self) -> bool {
        let r = self.points + 1;
        self.arcs
            .iter()
            .all(|&(i, j)| self.arcs.binary_search(&(r - j, r - i)).is_ok())
    }

    /// No arc strictly inside another and no singleton strictly inside an arc.
    pub fn is_non_nesting(&self) -> bool {
        for (a, &(i, l)) in self.arcs.iter().enumerate() {
            for &(j, k) in &self.arcs[a + 1..] {
                if i < j && k < l {
                    return false;
                }
            }
        }
        let singles = self.singletons();
        !self
            .arcs
            .iter()
            .any(|&(i, k)| singles.iter().any(|&s| i < s && s < k))
    }

    /// `E_M`: points of `[points/2]` matched with a larger point.
    pub fn excedance_subset(&self) -> ExcedanceSubset {
        let n = self.points / 2;
        let members = self
            .arcs
            .iter()
            .map(|&(i, _)| i)
            .filter(|&i| i <= n)
            .collect();
        ExcedanceSubset { n, members }
    }

    /// Comma-separated arcs, `"1-2,4-6"`; empty string for no arcs.
    pub fn parse(points: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut arcs = Vec::new();
        if !text.is_empty() {
            for tok in text.split(',') {
                let (a, b) = tok
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad arc `{tok}`")))?;
                let a = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad arc `{tok}`")))?;
                let b = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad arc `{tok}`")))?;
                arcs.push((a, b));
            }
        }
        Matching::new(points, arcs)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, j)) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        Ok(())
    }
}

/// A subset of `[n]`, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExcedanceSubset {
    n: usize,
    members: Vec<usize>,
}

impl ExcedanceSubset {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!(
                "repeated element in {members:?}"
            )));
        }
        if members.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::InvalidSubset(format!(
                "{members:?} is not inside [{n}]"
            )));
        }
        Ok(ExcedanceSubset { n, members })
    }

    pub fn empty(n: usize) -> Self {
        ExcedanceSubset {
            n,
            members: Vec::new(),
        }
    }

    /// Bit `i-1` of `mask` set iff `i` is a member.
    ///
    /// # Panics
    /// If `n > 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        let members = (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        ExcedanceSubset { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// `Des(E) = { i ∈ E : i+1 ∉ E }`. The element `n` qualifies whenever it
    /// is a member.
    pub fn descent_set(&self) -> Vec<usize> {
        self.members
            .iter()
            .copied()
            .filter(|&i| !self.contains(i + 1))
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Number of descents of the full involution attached to this subset:
    /// `2·des(E) - 1` if `n ∈ E`, else `2·des(E)`.
    pub fn full_des(&self) -> usize {
        let d = 2 * self.des();
        if self.n > 0 && self.contains(self.n) {
            d - 1
        } else {
            d
        }
    }

    /// Comma-separated members; the empty string is `∅`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "{}" {
            return Ok(ExcedanceSubset::empty(n));
        }
        let members = text
            .trim_start_matches('{')
            .trim_end_matches('}')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad subset element `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        ExcedanceSubset::new(n, members)
    }
}

impl fmt::Display for ExcedanceSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

fn require_even_centro_involution(p: &Permutation) -> Result<()> {
    if p.size() % 2 == 1 {
        return Err(Error::OddSize(p.size()));
    }
    if !p.is_involution() {
        return Err(Error::NotInvolution(p.to_string()));
    }
    if !p.is_centrosymmetric() {
        return Err(Error::NotCentrosymmetric(p.to_string()));
    }
    Ok(())
}

/// Arc `(i, π(i))` for every `i < π(i)`. Requires a centrosymmetric
/// involution of even size; the result is non-nesting iff `p` avoids 321.
pub fn permutation_to_matching(p: &Permutation) -> Result<Matching> {
    require_even_centro_involution(p)?;
    let arcs = (1..=p.size())
        .filter(|&i| p.at(i) > i)
        .map(|i| (i, p.at(i)))
        .collect();
    Ok(Matching {
        points: p.size(),
        arcs,
    })
}

/// Builds the unique symmetric non-nesting matching `M_E` on `2n` points with
/// `E_M = E`.
///
/// Members of `E` are scanned in increasing order; each one still unmatched
/// is joined to the smallest unmatched `j > i` with `j ∉ E`, together with the
/// mirror arc `(2n+1-j, 2n+1-i)` when that is a different arc.
pub fn subset_to_matching(e: &ExcedanceSubset) -> Matching {
    let points = 2 * e.n();
    let mirror = points + 1;
    let mut matched = vec![false; points + 2];
    let mut arcs = Vec::with_capacity(e.members().len() * 2);
    for &i in e.members() {
        if matched[i] {
            continue;
        }
        // an unmatched i has an unmatched mirror 2n+1-i > n, so this succeeds
        let j = (i + 1..=points)
            .find(|&j| !matched[j] && !e.contains(j))
            .expect("mirror point is always available");
        arcs.push((i, j));
        matched[i] = true;
        matched[j] = true;
        if i + j != mirror {
            let (a, b) = (mirror - j, mirror - i);
            arcs.push((a, b));
            matched[a] = true;
            matched[b] = true;
        }
    }
    arcs.sort_unstable();
    Matching { points, arcs }
}

/// `π(i) = j, π(j) = i` for each arc, fixed points elsewhere. The matching
/// must be symmetric and non-nesting.
pub fn matching_to_permutation(m: &Matching) -> Result<Permutation> {
    if !m.is_symmetric() {
        return Err(Error::InvalidMatching(format!("{m} is not symmetric")));
    }
    if !m.is_non_nesting() {
        return Err(Error::InvalidMatching(format!("{m} has a nesting")));
    }
    let mut values: Vec<usize> = (1..=m.points()).collect();
    for &(i, j) in m.arcs() {
        values[i - 1] = j;
        values[j - 1] = i;
    }
    Ok(Permutation::from_vec_unchecked(values))
}

/// `E_π = Exc(π) ∩ [n]` for a permutation of `[2n]`.
pub fn excedance_subset_of(p: &Permutation) -> Result<ExcedanceSubset> {
    if p.size() % 2 == 1 {
        return Err(Error::OddSize(p.size()));
    }
    let n = p.size() / 2;
    let members = p.excedance_set().into_iter().filter(|&i| i <= n).collect();
    Ok(ExcedanceSubset { n, members })
}

/// The involution in `I^C_{2n}(321)` with `E_π = e`.
pub fn subset_to_permutation(e: &ExcedanceSubset) -> Permutation {
    matching_to_permutation(&subset_to_matching(e)).expect("M_E is symmetric and non-nesting")
}

/// Checks membership in `I^C_{2n}(321)` and returns `E_π`.
pub fn permutation_to_subset(p: &Permutation) -> Result<ExcedanceSubset> {
    require_even_centro_involution(p)?;
    if p.contains_321() {
        return Err(Error::Contains321(p.to_string()));
    }
    excedance_subset_of(p)
}

/// Splits `π = α (n+1) α'` for `π ∈ I^C_{2n+1}(321)` and returns `α`.
pub fn odd_split(p: &Permutation) -> Result<Permutation> {
    let m = p.size();
    if m.is_multiple_of(2) {
        return Err(Error::EvenSize(m));
    }
    let n = m / 2;
    if p.at(n + 1) != n + 1 {
        return Err(Error::MiddleNotFixed(p.to_string()));
    }
    if !p.is_involution() {
        return Err(Error::NotInvolution(p.to_string()));
    }
    if !p.is_centrosymmetric() {
        return Err(Error::NotCentrosymmetric(p.to_string()));
    }
    if p.contains_321() {
        return Err(Error::Contains321(p.to_string()));
    }
    Permutation::new(p.values()[..n].to_vec())
}

/// Inverse of [`odd_split`]: `α (n+1) α'` with `α'(i) = 2n+2 - α(n+1-i)`.
/// Requires `α ∈ I_n(321)`.
pub fn odd_join(alpha: &Permutation) -> Result<Permutation> {
    if !alpha.is_involution() {
        return Err(Error::NotInvolution(alpha.to_string()));
    }
    if alpha.contains_321() {
        return Err(Error::Contains321(alpha.to_string()));
    }
    let n = alpha.size();
    let mut values = Vec::with_capacity(2 * n + 1);
    values.extend_from_slice(alpha.values());
    values.push(n + 1);
    values.extend(alpha.values().iter().rev().map(|&v| 2 * n + 2 - v));
    Ok(Permutation::from_vec_unchecked(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn subset(n: usize, m: &[usize]) -> ExcedanceSubset {
        ExcedanceSubset::new(n, m.to_vec()).unwrap()
    }

    #[test]
    fn permutation_to_matching_examples() {
        let m = permutation_to_matching(&p("1234")).unwrap();
        assert!(m.arcs().is_empty());
        assert_eq!(m.singletons(), vec![1, 2, 3, 4]);
        assert_eq!(
            permutation_to_matching(&p("2143")).unwrap().arcs(),
            &[(1, 2), (3, 4)]
        );
        assert_eq!(
            permutation_to_matching(&p("3412")).unwrap().arcs(),
            &[(1, 3), (2, 4)]
        );
        assert!(matches!(
            permutation_to_matching(&p("2314")),
            Err(Error::NotInvolution(_))
        ));
        assert!(matches!(
            permutation_to_matching(&p("2134")),
            Err(Error::NotCentrosymmetric(_))
        ));
        assert!(matches!(
            permutation_to_matching(&p("132")),
            Err(Error::OddSize(3))
        ));
    }

    #[test]
    fn nesting_detected_for_321() {
        // 4231 is a centrosymmetric involution containing 321
        let m = permutation_to_matching(&p("4231")).unwrap();
        assert!(m.is_symmetric());
        assert!(!m.is_non_nesting());
        let m = permutation_to_matching(&p("4321")).unwrap();
        assert!(!m.is_non_nesting());
    }

    #[test]
    fn construction_reproduces_worked_example() {
        let e = subset(11, &[1, 4, 5, 7, 8, 10]);
        let m = subset_to_matching(&e);
        assert_eq!(
            m.arcs(),
            &[
                (1, 2),
                (4, 6),
                (5, 9),
                (7, 11),
                (8, 13),
                (10, 15),
                (12, 16),
                (14, 18),
                (17, 19),
                (21, 22)
            ]
        );
        assert!(m.is_symmetric() && m.is_non_nesting());
        assert_eq!(m.excedance_subset(), e);
    }

    #[test]
    fn construction_small_cases() {
        assert!(subset_to_matching(&ExcedanceSubset::empty(2))
            .arcs()
            .is_empty());
        let m = subset_to_matching(&subset(2, &[1, 2]));
        assert_eq!(m.arcs(), &[(1, 3), (2, 4)]);
        assert_eq!(matching_to_permutation(&m).unwrap(), p("3412"));
    }

    #[test]
    fn matching_to_permutation_examples() {
        let m = Matching::parse(4, "1-2,3-4").unwrap();
        let q = matching_to_permutation(&m).unwrap();
        assert_eq!(q, p("2143"));
        assert_eq!(excedance_subset_of(&q).unwrap().members(), &[1]);
        let q = matching_to_permutation(&Matching::parse(4, "2-3").unwrap()).unwrap();
        assert_eq!(q, p("1324"));
        assert_eq!(excedance_subset_of(&q).unwrap().members(), &[2]);
        let q = matching_to_permutation(&Matching::parse(4, "").unwrap()).unwrap();
        assert_eq!(q, p("1234"));
        assert!(excedance_subset_of(&q).unwrap().members().is_empty());
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::new(4, vec![(1, 2), (2, 3)]).is_err());
        assert!(Matching::new(4, vec![(3, 1)]).is_err());
        assert!(Matching::new(4, vec![(1, 5)]).is_err());
        // not symmetric
        let m = Matching::parse(4, "1-2").unwrap();
        assert!(matching_to_permutation(&m).is_err());
        // symmetric but nested
        let m = Matching::parse(4, "1-4,2-3").unwrap();
        assert!(matching_to_permutation(&m).is_err());
        // singleton under an arc
        let m = Matching::parse(3, "1-3").unwrap();
        assert!(m.is_symmetric());
        assert!(!m.is_non_nesting());
        assert_eq!(
            Matching::parse(22, "1-2,4-6").unwrap().to_string(),
            "1-2,4-6"
        );
    }

    #[test]
    fn subset_statistics() {
        let e = subset(3, &[1, 3]);
        assert_eq!(e.descent_set(), vec![1, 3]);
        assert_eq!((e.des(), e.maj()), (2, 4));
        let e = ExcedanceSubset::empty(3);
        assert!(e.descent_set().is_empty());
        assert_eq!((e.des(), e.maj()), (0, 0));
        let e = subset(2, &[1, 2]);
        assert_eq!(e.descent_set(), vec![2]);
        assert_eq!((e.des(), e.maj()), (1, 2));
    }

    #[test]
    fn full_des_examples() {
        assert_eq!(subset(2, &[1]).full_des(), 2);
        assert_eq!(subset(2, &[2]).full_des(), 1);
        assert_eq!(ExcedanceSubset::empty(2).full_des(), 0);
        assert_eq!(ExcedanceSubset::empty(0).full_des(), 0);
    }

    #[test]
    fn odd_decomposition() {
        assert_eq!(odd_join(&p("21")).unwrap(), p("21354"));
        assert_eq!(odd_join(&p("12")).unwrap(), p("12345"));
        assert_eq!(odd_join(&Permutation::identity(0)).unwrap(), p("1"));
        assert_eq!(odd_split(&p("21354")).unwrap(), p("21"));
        assert!(matches!(odd_split(&p("2143")), Err(Error::EvenSize(4))));
        assert!(matches!(
            odd_split(&p("32145")),
            Err(Error::MiddleNotFixed(_))
        ));
        assert!(matches!(odd_join(&p("231")), Err(Error::NotInvolution(_))));
        assert!(matches!(odd_join(&p("321")), Err(Error::Contains321(_))));
    }

    #[test]
    fn subset_parsing() {
        assert_eq!(
            ExcedanceSubset::parse(4, "").unwrap(),
            ExcedanceSubset::empty(4)
        );
        assert_eq!(ExcedanceSubset::parse(4, "3,1").unwrap().to_string(), "1,3");
        assert!(ExcedanceSubset::parse(4, "5").is_err());
        assert!(ExcedanceSubset::parse(4, "1,1").is_err());
        assert_eq!(ExcedanceSubset::from_mask(4, 0b1010).members(), &[2, 4]);
    }
}
