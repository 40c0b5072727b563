//! Streaming exhaustive generators.
//!
//! Every generator is duplicate-free and can be split into shards by a
//! prefix of the generated object, so that callers can process shards in
//! parallel and merge the results.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::{odd_join, subset_to_permutation, ExcedanceSubset};
use crate::paths::{rectangle_paths, LatticePath, Step};
use crate::perm::Permutation;
use crate::signed::SignedPermutation;

/// All involutions of `[m]`, built directly: the smallest unassigned
/// position is either fixed or paired with a larger unassigned position.
///
/// The stream is ordered by the image of position 1 (itself first, then
/// increasing partners), then recursively.
#[derive(Debug, Clone)]
pub struct Involutions {
    image: Vec<usize>,
    // (position, partner) decisions, innermost last; partner == position
    // means fixed point. The first frame is pinned when sharded.
    stack: Vec<(usize, usize)>,
    pinned: bool,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl Involutions {
    pub fn new(m: usize) -> Self {
        Involutions {
            image: vec![0; m + 1],
            stack: Vec::new(),
            pinned: false,
            state: IterState::Fresh,
        }
    }

    /// Only the involutions with `π(1) = partner`.
    pub fn with_first_image(m: usize, partner: usize) -> Self {
        let mut it = Involutions::new(m);
        if m == 0 || partner == 0 || partner > m {
            it.state = IterState::Done;
            return it;
        }
        it.assign(1, partner);
        it.pinned = true;
        it
    }

    fn m(&self) -> usize {
        self.image.len() - 1
    }

    fn assign(&mut self, i: usize, j: usize) {
        self.image[i] = j;
        self.image[j] = i;
        self.stack.push((i, j));
    }

    fn unassign(&mut self) -> Option<(usize, usize)> {
        let (i, j) = self.stack.pop()?;
        self.image[i] = 0;
        self.image[j] = 0;
        Some((i, j))
    }

    /// Completes the current partial involution with fixed points.
    fn fill(&mut self) {
        for i in 1..=self.m() {
            if self.image[i] == 0 {
                self.assign(i, i);
            }
        }
    }

    /// Moves to the next involution in the stream order.
    fn advance(&mut self) -> bool {
        let floor = usize::from(self.pinned);
        while self.stack.len() > floor {
            let (i, j) = self.unassign().expect("stack is non-empty");
            let next = (j + 1..=self.m()).find(|&k| self.image[k] == 0);
            if let Some(k) = next {
                self.assign(i, k);
                self.fill();
                return true;
            }
        }
        false
    }

    fn current(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.image[1..].to_vec())
    }
}

impl Iterator for Involutions {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.fill();
                self.state = IterState::Running;
            }
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(self.current())
    }
}

/// Shards of [`Involutions::new`], one per value of `π(1)`.
pub fn involution_shards(m: usize) -> Vec<Involutions> {
    if m == 0 {
        return vec![Involutions::new(0)];
    }
    (1..=m)
        .map(|j| Involutions::with_first_image(m, j))
        .collect()
}

/// Rearranges `v` into the lexicographically next permutation.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Permutations of `[n]` with `π(1) = first` (all of `S_n` when `first` is
/// `None`), in lexicographic order.
pub fn permutations(n: usize, first: Option<usize>) -> impl Iterator<Item = Permutation> {
    let start: Option<Vec<usize>> = match first {
        None => Some((1..=n).collect()),
        Some(f) if (1..=n).contains(&f) => Some(
            std::iter::once(f)
                .chain((1..=n).filter(|&x| x != f))
                .collect(),
        ),
        Some(_) => None,
    };
    let mut state = start;
    std::iter::from_fn(move || {
        let cur = state.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) && first.is_none_or(|f| next[0] == f) {
            state = Some(next);
        }
        Some(Permutation::from_vec_unchecked(cur))
    })
}

/// `B_n` with `|σ(1)| = first` (all of `B_n` when `None`): every permutation
/// of `[n]` combined with every sign vector.
pub fn signed_permutations(
    n: usize,
    first: Option<usize>,
) -> impl Iterator<Item = SignedPermutation> {
    assert!(n < 64);
    permutations(n, first).flat_map(move |p| {
        (0..1u64 << n).map(move |signs| {
            let window = p
                .values()
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    if signs >> i & 1 == 1 {
                        -(v as i64)
                    } else {
                        v as i64
                    }
                })
                .collect();
            SignedPermutation::new(window).expect("signed permutation")
        })
    })
}

/// All centrosymmetric permutations of `[m]`, generated directly from their
/// left half: position `i <= m/2` receives either `v` or `m+1-v` for the
/// `i`-th entry `v` of a permutation of `[m/2]`.
pub fn centrosymmetric_permutations(m: usize) -> impl Iterator<Item = Permutation> {
    let n = m / 2;
    assert!(n < 64);
    permutations(n, None).flat_map(move |base| {
        (0..1u64 << n).map(move |flips| {
            let mut values = vec![0; m];
            for (i, &v) in base.values().iter().enumerate() {
                let image = if flips >> i & 1 == 1 { m + 1 - v } else { v };
                values[i] = image;
                values[m - 1 - i] = m + 1 - image;
            }
            if m % 2 == 1 {
                values[n] = n + 1;
            }
            Permutation::from_vec_unchecked(values)
        })
    })
}

/// `I_m(321)` by filtering [`Involutions`].
pub fn inv321(m: usize) -> impl Iterator<Item = Permutation> {
    Involutions::new(m).filter(Permutation::avoids_321)
}

/// `I^C_m(321)` by filtering [`Involutions`].
pub fn cinv321_filtered(m: usize) -> impl Iterator<Item = Permutation> {
    Involutions::new(m).filter(|p| p.is_centrosymmetric() && p.avoids_321())
}

/// `I^C_{2n}(321)` as the image of all subsets of `[n]`.
pub fn cinv321_even_from_subsets(n: usize) -> impl Iterator<Item = Permutation> {
    subsets(n).map(|e| subset_to_permutation(&e))
}

/// `I^C_{2n+1}(321)` as `α (n+1) α'` over `α ∈ I_n(321)`.
pub fn cinv321_odd_from_halves(n: usize) -> impl Iterator<Item = Permutation> {
    inv321(n).map(|a| odd_join(&a).expect("α avoids 321"))
}

/// All subsets of `[n]` in increasing bit-mask order.
pub fn subsets(n: usize) -> impl Iterator<Item = ExcedanceSubset> {
    assert!(n < 64);
    (0..1u64 << n).map(move |mask| ExcedanceSubset::from_mask(n, mask))
}

/// The object families the harness knows how to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    /// `I^C_{2n}(321)`; size is `2n`.
    Cinv321Even,
    /// `I^C_{2n+1}(321)`; size is `2n+1`.
    Cinv321Odd,
    /// `I_m(321)`; size is `m`.
    Inv321,
    /// `B_n`.
    SignedAll,
    /// Elements of `B_n` avoiding the six signed patterns.
    SignedSixAvoiders,
    /// Subsets of `[n]`.
    Subsets,
    /// `Y_{a,b}` for size `a,b`, or `A_n` for a single size `n`.
    PathsRect,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 7] = [
        ClassLabel::Cinv321Even,
        ClassLabel::Cinv321Odd,
        ClassLabel::Inv321,
        ClassLabel::SignedAll,
        ClassLabel::SignedSixAvoiders,
        ClassLabel::Subsets,
        ClassLabel::PathsRect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::Cinv321Even => "cinv321-even",
            ClassLabel::Cinv321Odd => "cinv321-odd",
            ClassLabel::Inv321 => "inv321",
            ClassLabel::SignedAll => "signed-all",
            ClassLabel::SignedSixAvoiders => "signed-sixavoiders",
            ClassLabel::Subsets => "subsets",
            ClassLabel::PathsRect => "paths-rect",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassLabel::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Size parameter of a class: a single integer, or `a,b` for rectangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassSize {
    Single(usize),
    Rect(usize, usize),
}

impl fmt::Display for ClassSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSize::Single(n) => write!(f, "{n}"),
            ClassSize::Rect(a, b) => write!(f, "{a},{b}"),
        }
    }
}

impl FromStr for ClassSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size `{s}`")))
        };
        match s.split_once(',') {
            Some((a, b)) => Ok(ClassSize::Rect(num(a)?, num(b)?)),
            None => Ok(ClassSize::Single(num(s)?)),
        }
    }
}

/// One generated object.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassObject {
    Perm(Permutation),
    Signed(SignedPermutation),
    Subset(ExcedanceSubset),
    Path(LatticePath),
}

impl fmt::Display for ClassObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassObject::Perm(p) => p.fmt(f),
            ClassObject::Signed(s) => s.fmt(f),
            ClassObject::Subset(e) => write!(f, "{{{e}}}"),
            ClassObject::Path(p) => p.fmt(f),
        }
    }
}

pub type ObjectStream = Box<dyn Iterator<Item = ClassObject> + Send>;

/// A prefix-defined part of a class. Shards of a class are disjoint and
/// together cover it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub label: ClassLabel,
    pub size: ClassSize,
    pub index: usize,
}

// Subsets and A_n are split on the membership of the first few elements.
const MASK_SHARD_BITS: usize = 3;

fn mask_shards(n: usize) -> usize {
    1 << n.min(MASK_SHARD_BITS)
}

fn masks_in_shard(n: usize, index: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64);
    let stride = mask_shards(n) as u64;
    (index as u64..1u64 << n).step_by(stride as usize)
}

fn single(label: ClassLabel, size: ClassSize) -> Result<usize> {
    match size {
        ClassSize::Single(n) => Ok(n),
        ClassSize::Rect(..) => Err(Error::Parse(format!(
            "class {label} takes a single size, got {size}"
        ))),
    }
}

/// Validates the size for the class and returns the number of shards.
pub fn shard_count(label: ClassLabel, size: ClassSize) -> Result<usize> {
    Ok(match (label, size) {
        (ClassLabel::PathsRect, ClassSize::Rect(..)) => 2,
        (ClassLabel::PathsRect, ClassSize::Single(n)) => mask_shards(n),
        (ClassLabel::Subsets, _) => mask_shards(single(label, size)?),
        (ClassLabel::Cinv321Even, _) => {
            let m = single(label, size)?;
            if m % 2 == 1 {
                return Err(Error::OddSize(m));
            }
            m.max(1)
        }
        (ClassLabel::Cinv321Odd, _) => {
            let m = single(label, size)?;
            if m % 2 == 0 {
                return Err(Error::EvenSize(m));
            }
            m
        }
        (ClassLabel::Inv321 | ClassLabel::SignedAll | ClassLabel::SignedSixAvoiders, _) => {
            single(label, size)?.max(1)
        }
    })
}

pub fn shards(label: ClassLabel, size: ClassSize) -> Result<Vec<Shard>> {
    let count = shard_count(label, size)?;
    Ok((0..count)
        .map(|index| Shard { label, size, index })
        .collect())
}

impl Shard {
    /// Objects of this shard. Permutation classes are split on `π(1)`,
    /// signed classes on `|σ(1)|`, subsets and `A_n` on their first
    /// elements, rectangles on the first step.
    pub fn objects(&self) -> ObjectStream {
        let i = self.index;
        match (self.label, self.size) {
            (ClassLabel::PathsRect, ClassSize::Rect(a, b)) => {
                let (head, a2, b2) = if i == 0 {
                    (Step::N, a.checked_sub(1), Some(b))
                } else {
                    (Step::E, Some(a), b.checked_sub(1))
                };
                match (a2, b2) {
                    (Some(a2), Some(b2)) => Box::new(rectangle_paths(a2, b2).map(move |p| {
                        let mut steps = vec![head];
                        steps.extend_from_slice(p.steps());
                        ClassObject::Path(LatticePath::new(steps))
                    })),
                    _ if a + b == 0 && i == 0 => {
                        Box::new(std::iter::once(ClassObject::Path(LatticePath::default())))
                    }
                    _ => Box::new(std::iter::empty()),
                }
            }
            (ClassLabel::PathsRect, ClassSize::Single(n)) => Box::new(
                masks_in_shard(n, i).map(move |m| ClassObject::Path(LatticePath::from_mask(n, m))),
            ),
            (ClassLabel::Subsets, ClassSize::Single(n)) => Box::new(
                masks_in_shard(n, i)
                    .map(move |m| ClassObject::Subset(ExcedanceSubset::from_mask(n, m))),
            ),
            (label, ClassSize::Single(m)) => {
                let involutions = move || involution_shards(m).swap_remove(i);
                match label {
                    ClassLabel::Cinv321Even | ClassLabel::Cinv321Odd => Box::new(
                        involutions()
                            .filter(|p| p.is_centrosymmetric() && p.avoids_321())
                            .map(ClassObject::Perm),
                    ),
                    ClassLabel::Inv321 => Box::new(
                        involutions()
                            .filter(Permutation::avoids_321)
                            .map(ClassObject::Perm),
                    ),
                    ClassLabel::SignedAll => Box::new(
                        signed_permutations(m, (m > 0).then_some(i + 1)).map(ClassObject::Signed),
                    ),
                    ClassLabel::SignedSixAvoiders => Box::new(
                        signed_permutations(m, (m > 0).then_some(i + 1))
                            .filter(SignedPermutation::avoids_six_patterns)
                            .map(ClassObject::Signed),
                    ),
                    _ => unreachable!("handled above"),
                }
            }
            (_, ClassSize::Rect(..)) => Box::new(std::iter::empty()),
        }
    }
}

/// The whole class as one stream, shard after shard.
pub fn generate_class(label: ClassLabel, size: ClassSize) -> Result<ObjectStream> {
    let shards = shards(label, size)?;
    Ok(Box::new(shards.into_iter().flat_map(|s| s.objects())))
}
