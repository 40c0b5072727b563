//! Exact polynomials in one variable `q` with big-integer coefficients, the
//! Gaussian binomial coefficients, and the closed forms and recurrences for
//! the distribution polynomials of `des⁺`, `maj⁺` and `des`.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::paths::{all_paths, LatticePath, Step};

/// Coefficients ascending by exponent, with no trailing zero. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = QPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// `Σ counts[k] q^k`.
    pub fn from_counts(counts: &[u64]) -> Self {
        QPoly::from_coeffs(counts.iter().copied())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c))
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(QPoly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p(q²)`.
    pub fn substitute_square(&self) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() * 2];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Symmetric about the midpoint of its support.
    pub fn is_palindromic(&self) -> bool {
        let Some(lo) = self.valuation() else {
            return true;
        };
        let support = &self.coeffs[lo..];
        support.iter().eq(support.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Ascending coefficient list, `"1,1,2"`. The zero polynomial is `"0"`.
    pub fn to_list_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for QPoly {
    /// Human form, `1 + q + 2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Parses the ascending coefficient list form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(QPoly::zero());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{t}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(QPoly::from_coeffs)
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

thread_local! {
    static QBINOMIAL_ROWS: RefCell<Vec<Vec<QPoly>>> = RefCell::new(vec![vec![QPoly::one()]]);
}

/// Gaussian binomial `{n choose h}_q`; zero unless `0 <= h <= n`.
///
/// Rows are built with `{n,h} = {n-1,h} + q^{n-h}{n-1,h-1}` and memoized
/// per thread.
pub fn q_binomial(n: i64, h: i64) -> QPoly {
    if n < 0 || h < 0 || h > n {
        return QPoly::zero();
    }
    let (n, h) = (n as usize, h as usize);
    QBINOMIAL_ROWS.with(|rows| {
        let mut rows = rows.borrow_mut();
        while rows.len() <= n {
            let m = rows.len();
            let prev = &rows[m - 1];
            let row: Vec<QPoly> = (0..=m)
                .map(|k| {
                    let keep = if k < m {
                        prev[k].clone()
                    } else {
                        QPoly::zero()
                    };
                    let take = if k > 0 {
                        prev[k - 1].shift(m - k)
                    } else {
                        QPoly::zero()
                    };
                    keep + take
                })
                .collect();
            rows.push(row);
        }
        rows[n][h].clone()
    })
}

/// `Σ_k C(n+1, 2k) q^k`, the `des⁺` distribution over `I^C_{2n}(321)`.
pub fn d_closed(n: usize) -> QPoly {
    let n = n as i64;
    QPoly::from_coeffs((0..=(n + 1) / 2).map(|k| binomial(n + 1, 2 * k)))
}

/// `d_n = 2 d_{n-1} + (q-1) d_{n-2}` from `d_0 = 1`, `d_1 = 1+q`.
pub fn d_recurrence(n: usize) -> QPoly {
    let two = QPoly::from_coeffs([2]);
    let q_minus_one = QPoly::from_coeffs([-1, 1]);
    linear_recurrence(n, QPoly::from_coeffs([1, 1]), |_, d1, d2| {
        &(&two * d1) + &(&q_minus_one * d2)
    })
}

fn linear_recurrence(
    n: usize,
    first: QPoly,
    step: impl Fn(usize, &QPoly, &QPoly) -> QPoly,
) -> QPoly {
    let mut prev2 = QPoly::one();
    if n == 0 {
        return prev2;
    }
    let mut prev1 = first;
    for k in 2..=n {
        let next = step(k, &prev1, &prev2);
        prev2 = std::mem::replace(&mut prev1, next);
    }
    prev1
}

/// `Σ_h {n,h}_q + (q^n - 1) Σ_h {n-1,h}_q`.
pub fn p_closed_a(n: usize) -> QPoly {
    let n = n as i64;
    let full: QPoly = (0..=n).fold(QPoly::zero(), |acc, h| acc + q_binomial(n, h));
    let short: QPoly = (0..n).fold(QPoly::zero(), |acc, h| acc + q_binomial(n - 1, h));
    let factor = &QPoly::monomial(n as usize) - &QPoly::one();
    &full + &(&factor * &short)
}

/// `Σ_h q^{n-h} {n,h}_q`, the `maj⁺` distribution over `I^C_{2n}(321)`.
pub fn p_closed_b(n: usize) -> QPoly {
    (0..=n).fold(QPoly::zero(), |acc, h| {
        acc + q_binomial(n as i64, h as i64).shift(n - h)
    })
}

/// `p_n = (1+q) p_{n-1} + (q^n - q) p_{n-2}` from `p_0 = 1`, `p_1 = 1+q`.
pub fn p_recurrence(n: usize) -> QPoly {
    let one_plus_q = QPoly::from_coeffs([1, 1]);
    linear_recurrence(n, one_plus_q.clone(), |k, p1, p2| {
        let factor = &QPoly::monomial(k) - &QPoly::monomial(1);
        &(&one_plus_q * p1) + &(&factor * p2)
    })
}

/// `Σ q^{area(P)}` over every path of length `n + 1` that starts with `E`,
/// computed by exhaustive enumeration.
pub fn r_definition(n: usize) -> QPoly {
    let mut counts: Vec<u64> = Vec::new();
    for tail in all_paths(n) {
        let mut steps = Vec::with_capacity(n + 1);
        steps.push(Step::E);
        steps.extend_from_slice(tail.steps());
        let area = LatticePath::new(steps).area();
        if counts.len() <= area {
            counts.resize(area + 1, 0);
        }
        counts[area] += 1;
    }
    QPoly::from_counts(&counts)
}

/// `(1+q)^n`, the `des` distribution over `I^C_{2n}(321)`.
pub fn des_closed(n: usize) -> QPoly {
    QPoly::from_coeffs([1, 1]).pow(n as u32)
}

/// Distribution polynomials over `I^C_{2n+1}(321)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPolys {
    pub des_plus: QPoly,
    pub maj_plus: QPoly,
    pub des: QPoly,
}

/// `Σ_k C(⌈n/2⌉,k) C(⌊n/2⌋,k) q^k`, `{n choose ⌊n/2⌋}_q`, and the first with
/// `q ↦ q²`.
pub fn odd_polys(n: usize) -> OddPolys {
    let (lo, hi) = ((n / 2) as i64, n.div_ceil(2) as i64);
    let des_plus = QPoly::from_coeffs((0..=lo).map(|k| binomial(hi, k) * binomial(lo, k)));
    OddPolys {
        des: des_plus.substitute_square(),
        maj_plus: q_binomial(n as i64, lo),
        des_plus,
    }
}

/// Coefficients as machine integers, when they fit.
pub fn to_i64_coeffs(p: &QPoly) -> Option<Vec<i64>> {
    p.coeffs().iter().map(ToPrimitive::to_i64).collect()
}
