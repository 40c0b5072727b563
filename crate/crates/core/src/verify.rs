//! Theorem checks: every identity is tested by exhaustive enumeration against
//! its closed form, and every bijection by round trips, size by size.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::enumerate::{
    centrosymmetric_permutations, inv321, shards, signed_permutations, subsets, ClassLabel,
    ClassObject, ClassSize,
};
use crate::error::{Error, Result};
use crate::matching::{
    matching_to_permutation, odd_join, odd_split, permutation_to_matching, permutation_to_subset,
    subset_to_matching, subset_to_permutation,
};
use crate::paths::{all_paths, despeak_transport, g_bijection, g_inverse, rectangle_paths, Step};
use crate::perm::Permutation;
use crate::qpoly::{
    binomial, d_closed, d_recurrence, des_closed, odd_polys, p_closed_a, p_closed_b, p_recurrence,
    q_binomial, r_definition, QPoly,
};
use crate::rsk::{
    fp_at_least_des_poly, fp_at_least_maj_poly, fp_des_refined_poly, fp_refined_maj_poly, theta_fp,
    theta_fp_inverse,
};
use crate::signed::{theta, theta_inverse, SignedPermutation};
use crate::stats::{poly_json, run_sharded, Histogram};

/// Identifiers accepted by [`verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `|I^C_{2n}(321)| = 2^n` and `|I^C_{2n+1}(321)| = C(n, ⌊n/2⌋)`.
    Count,
    /// `des⁺` distribution `Σ_k C(n+1,2k) q^k`.
    DesPoly,
    /// `maj⁺` distribution `Σ_h q^{n-h} {n,h}_q`, five ways.
    MajPoly,
    /// `des` distribution `(1+q)^n`.
    DesFull,
    /// Subsets ↔ matchings ↔ involutions round trips.
    Cara,
    /// The three distributions over `I^C_{2n+1}(321)`.
    Odd,
    /// `Peak = hd ∘ g` and `Peak* = hd* ∘ g`.
    HdPeak,
    /// The area recurrence for paths starting with `E`.
    Recr,
    /// `Θ(S^C_{2n}(321))` is the set of six-pattern avoiders.
    SixPat,
    /// The fixed-point refined bijection with `Des = hd`.
    Fp,
    /// `maj` over `I_n(321)` by fixed points.
    Cor1,
    /// `maj` over `I_n(321)` by fixed points and descents.
    Cor2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Count,
        TheoremId::DesPoly,
        TheoremId::MajPoly,
        TheoremId::DesFull,
        TheoremId::Cara,
        TheoremId::Odd,
        TheoremId::HdPeak,
        TheoremId::Recr,
        TheoremId::SixPat,
        TheoremId::Fp,
        TheoremId::Cor1,
        TheoremId::Cor2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Count => "T-count",
            TheoremId::DesPoly => "T-despoly",
            TheoremId::MajPoly => "T-majpoly",
            TheoremId::DesFull => "T-desfull",
            TheoremId::Cara => "T-cara",
            TheoremId::Odd => "T-odd",
            TheoremId::HdPeak => "T-hdpeak",
            TheoremId::Recr => "T-recr",
            TheoremId::SixPat => "T-sixpat",
            TheoremId::Fp => "T-fp",
            TheoremId::Cor1 => "T-cor1",
            TheoremId::Cor2 => "T-cor2",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Sizes and resources for a run. `n` is the half-size for the
/// centrosymmetric families, the path length for `T-hdpeak` and `T-recr`,
/// the rank of `B_n` for `T-sixpat`, and the permutation size for `T-fp`
/// and the fixed-point refined identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    /// Largest `n` for which raw permutations are generated and filtered
    /// in addition to the subset and path models.
    pub raw_max_n: usize,
    pub jobs: usize,
}

impl VerifyOptions {
    pub const DEFAULT_RAW_MAX_N: usize = 7;

    pub fn new(max_n: usize) -> Self {
        VerifyOptions {
            max_n,
            raw_max_n: Self::DEFAULT_RAW_MAX_N,
            jobs: 1,
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn raw_max_n(mut self, raw_max_n: usize) -> Self {
        self.raw_max_n = raw_max_n;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizeResult {
    pub n: usize,
    pub status: Status,
    /// Objects enumerated for this size.
    pub checked: u64,
    /// Present exactly when the status is [`Status::Fail`].
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub max_n: usize,
    pub results: Vec<SizeResult>,
    pub duration: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&SizeResult> {
        self.results.iter().find(|r| r.status == Status::Fail)
    }

    pub fn checked(&self) -> u64 {
        self.results.iter().map(|r| r.checked).sum()
    }

    /// Deterministic: the duration is deliberately left out.
    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "status": r.status.name(),
                    "counterexample": r.counterexample.clone().unwrap_or(Value::Null),
                })
            })
            .collect();
        json!({ "theorem": self.theorem.name(), "results": results })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tstatus\tchecked\tcounterexample\n");
        for r in &self.results {
            let cx = r
                .counterexample
                .as_ref()
                .map_or(String::new(), Value::to_string);
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                r.n,
                r.status.name(),
                r.checked,
                cx
            ));
        }
        out
    }
}

/// Runs the checks for `theorem` at every `n <= opts.max_n`.
pub fn verify(theorem: TheoremId, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let results = (0..=opts.max_n)
        .map(|n| {
            let ctx = Ctx {
                raw: n <= opts.raw_max_n,
                jobs: opts.jobs.max(1),
            };
            let outcome = match theorem {
                TheoremId::Count => check_count(n, ctx),
                TheoremId::DesPoly => check_despoly(n, ctx),
                TheoremId::MajPoly => check_majpoly(n, ctx),
                TheoremId::DesFull => check_desfull(n, ctx),
                TheoremId::Cara => check_cara(n, ctx),
                TheoremId::Odd => check_odd(n, ctx),
                TheoremId::HdPeak => check_hdpeak(n),
                TheoremId::Recr => check_recr(n),
                TheoremId::SixPat => check_sixpat(n),
                TheoremId::Fp => check_fp(n),
                TheoremId::Cor1 => check_cor1(n),
                TheoremId::Cor2 => check_cor2(n),
            };
            match outcome {
                Ok(checked) => SizeResult {
                    n,
                    status: Status::Pass,
                    checked,
                    counterexample: None,
                },
                Err(cx) => SizeResult {
                    n,
                    status: Status::Fail,
                    checked: 0,
                    counterexample: Some(cx),
                },
            }
        })
        .collect();
    VerificationReport {
        theorem,
        max_n: opts.max_n,
        results,
        duration: start.elapsed(),
    }
}

#[derive(Debug, Clone, Copy)]
struct Ctx {
    raw: bool,
    jobs: usize,
}

/// `Err` carries the counterexample payload.
type Outcome<T = u64> = std::result::Result<T, Value>;

fn fail(check: &str, object: impl fmt::Display, detail: impl fmt::Display) -> Value {
    json!({ "check": check, "object": object.to_string(), "detail": detail.to_string() })
}

fn ensure(
    cond: bool,
    check: &str,
    object: impl fmt::Display,
    detail: impl FnOnce() -> String,
) -> Outcome<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(check, object, detail()))
    }
}

fn same_poly(check: &str, expected: &QPoly, actual: &QPoly) -> Outcome<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(json!({
            "check": check,
            "expected": poly_json(expected),
            "actual": poly_json(actual),
        }))
    }
}

fn same_count(check: &str, expected: &BigInt, actual: u64) -> Outcome<()> {
    if *expected == BigInt::from(actual) {
        Ok(())
    } else {
        Err(json!({ "check": check, "expected": expected.to_string(), "actual": actual }))
    }
}

fn is_cinv321(p: &Permutation, m: usize) -> bool {
    p.size() == m && p.is_involution() && p.is_centrosymmetric() && p.avoids_321()
}

fn merge_all<const K: usize>(parts: Vec<Outcome<[Histogram; K]>>) -> Outcome<[Histogram; K]> {
    let mut total: [Histogram; K] = std::array::from_fn(|_| Histogram::default());
    for part in parts {
        for (t, h) in total.iter_mut().zip(part?.iter()) {
            t.merge(h);
        }
    }
    Ok(total)
}

/// Streams a permutation class shard by shard on `jobs` threads and folds
/// each object into `K` histograms. The first failure in shard order wins,
/// so the counterexample does not depend on `jobs`.
fn scan_perms<const K: usize, F>(
    label: ClassLabel,
    m: usize,
    jobs: usize,
    visit: F,
) -> Outcome<[Histogram; K]>
where
    F: Fn(&Permutation, &mut [Histogram; K]) -> Outcome<()> + Send + Sync,
{
    let parts = shards(label, ClassSize::Single(m)).expect("size matches class parity");
    merge_all(run_sharded(parts, jobs, |shard| {
        let mut acc: [Histogram; K] = std::array::from_fn(|_| Histogram::default());
        for obj in shard.objects() {
            let ClassObject::Perm(p) = obj else {
                unreachable!("permutation class")
            };
            visit(&p, &mut acc)?;
        }
        Ok(acc)
    }))
}

fn check_count(n: usize, ctx: Ctx) -> Outcome {
    let even = BigInt::from(1u64) << n;
    let odd = binomial(n as i64, (n / 2) as i64);
    let images: HashSet<Permutation> = subsets(n).map(|e| subset_to_permutation(&e)).collect();
    same_count("even class via subsets", &even, images.len() as u64)?;
    let halves: HashSet<Permutation> = inv321(n)
        .map(|a| odd_join(&a).map_err(|e| fail("odd join", &a, e)))
        .collect::<Outcome<_>>()?;
    same_count("odd class via halves", &odd, halves.len() as u64)?;
    let mut checked = images.len() as u64 + halves.len() as u64;
    if ctx.raw {
        let [h] = scan_perms(ClassLabel::Cinv321Even, 2 * n, ctx.jobs, |_, [h]| {
            h.add(0);
            Ok(())
        })?;
        same_count("even class by filtering involutions", &even, h.total())?;
        let [o] = scan_perms(ClassLabel::Cinv321Odd, 2 * n + 1, ctx.jobs, |_, [h]| {
            h.add(0);
            Ok(())
        })?;
        same_count("odd class by filtering involutions", &odd, o.total())?;
        checked += h.total() + o.total();
    }
    Ok(checked)
}

fn check_despoly(n: usize, ctx: Ctx) -> Outcome {
    let expected = d_closed(n);
    same_poly("recurrence", &expected, &d_recurrence(n))?;
    let mut formula = Histogram::default();
    let mut actual = Histogram::default();
    for e in subsets(n) {
        formula.add(e.des());
        actual.add(subset_to_permutation(&e).des_plus());
    }
    same_poly("des of subsets", &expected, &formula.poly())?;
    same_poly("des+ over the subset model", &expected, &actual.poly())?;
    let peaks: Histogram = all_paths(n).map(|p| p.peak_star_set().len()).collect();
    same_poly("Peak* over paths", &expected, &peaks.poly())?;
    let mut checked = 1 << n;
    if ctx.raw {
        let [h] = scan_perms(ClassLabel::Cinv321Even, 2 * n, ctx.jobs, |p, [h]| {
            h.add(p.des_plus());
            Ok(())
        })?;
        same_poly("des+ by filtering involutions", &expected, &h.poly())?;
        checked += h.total();
    }
    Ok(checked)
}

fn check_majpoly(n: usize, ctx: Ctx) -> Outcome {
    let expected = p_closed_b(n);
    same_poly("first closed form", &expected, &p_closed_a(n))?;
    same_poly("recurrence", &expected, &p_recurrence(n))?;
    same_poly("area of E-initial paths", &expected, &r_definition(n))?;
    let mut formula = Histogram::default();
    let mut actual = Histogram::default();
    for e in subsets(n) {
        formula.add(e.maj());
        actual.add(subset_to_permutation(&e).maj_plus());
    }
    same_poly("maj of subsets", &expected, &formula.poly())?;
    same_poly("maj+ over the subset model", &expected, &actual.poly())?;

    let mut hooks = Histogram::default();
    for p in all_paths(n) {
        let star: usize = p.hd_star().iter().sum();
        let bonus = if p.first() == Some(Step::N) { n } else { 0 };
        ensure(star == p.area() + bonus, "hd* sum", &p, || {
            format!("Σhd* = {star}, area = {}", p.area())
        })?;
        if n > 0 {
            let rotated = p
                .rotate_first_to_last()
                .map_err(|e| fail("rotation", &p, e))?;
            let (a, b) = (p.north_count(), p.east_count());
            let want = if p.first() == Some(Step::N) {
                p.area() + b
            } else {
                p.area() - a
            };
            ensure(rotated.area() == want, "rotation area", &p, || {
                format!("area after rotation {} != {want}", rotated.area())
            })?;
        }
        hooks.add(g_bijection(&p).hd_star().iter().sum());
    }
    same_poly("hd* sums through g", &expected, &hooks.poly())?;

    let mut checked = 1 << n;
    if ctx.raw {
        let [h] = scan_perms(ClassLabel::Cinv321Even, 2 * n, ctx.jobs, |p, [h]| {
            h.add(p.maj_plus());
            Ok(())
        })?;
        same_poly("maj+ by filtering involutions", &expected, &h.poly())?;
        checked += h.total();
    }
    Ok(checked)
}

fn check_desfull(n: usize, ctx: Ctx) -> Outcome {
    let expected = des_closed(n);
    let mut formula = Histogram::default();
    for e in subsets(n) {
        let p = subset_to_permutation(&e);
        ensure(p.des() == e.full_des(), "des transport", &p, || {
            format!("des = {}, from excedances {}", p.des(), e.full_des())
        })?;
        formula.add(e.full_des());
    }
    same_poly("des over the subset model", &expected, &formula.poly())?;
    let mut checked = 1 << n;
    if ctx.raw {
        let [h] = scan_perms(ClassLabel::Cinv321Even, 2 * n, ctx.jobs, |p, [h]| {
            let e = permutation_to_subset(p).map_err(|err| fail("excedance subset", p, err))?;
            ensure(p.des() == e.full_des(), "des transport", p, || {
                format!("des = {}, from excedances {}", p.des(), e.full_des())
            })?;
            h.add(p.des());
            Ok(())
        })?;
        same_poly("des by filtering involutions", &expected, &h.poly())?;
        checked += h.total();
    }
    Ok(checked)
}

fn check_cara(n: usize, ctx: Ctx) -> Outcome {
    let mut images = HashSet::new();
    for e in subsets(n) {
        let obj = format!("{{{e}}}");
        let m = subset_to_matching(&e);
        ensure(
            m.is_symmetric() && m.is_non_nesting(),
            "matching shape",
            &obj,
            || m.to_string(),
        )?;
        ensure(
            m.excedance_subset() == e,
            "matching excedances",
            &obj,
            || m.to_string(),
        )?;
        let p =
            matching_to_permutation(&m).map_err(|err| fail("matching to involution", &obj, err))?;
        ensure(is_cinv321(&p, 2 * n), "class membership", &obj, || {
            p.to_string()
        })?;
        let back =
            permutation_to_matching(&p).map_err(|err| fail("involution to matching", &p, err))?;
        ensure(back == m, "matching round trip", &p, || back.to_string())?;
        let e2 = permutation_to_subset(&p).map_err(|err| fail("involution to subset", &p, err))?;
        ensure(e2 == e, "subset round trip", &obj, || format!("{{{e2}}}"))?;
        ensure(
            p.des_plus_set() == e.descent_set(),
            "des+ transport",
            &p,
            || format!("{:?} vs {:?}", p.des_plus_set(), e.descent_set()),
        )?;
        despeak_transport(&p).map_err(|err| fail("Peak* transport", &p, err))?;
        ensure(subset_to_permutation(&e) == p, "direct map", &obj, || {
            p.to_string()
        })?;
        images.insert(p);
    }
    same_count(
        "distinct images",
        &(BigInt::from(1u64) << n),
        images.len() as u64,
    )?;
    let mut checked = 1 << n;
    if ctx.raw {
        let [h] = scan_perms(ClassLabel::Cinv321Even, 2 * n, ctx.jobs, |p, [h]| {
            ensure(images.contains(p), "surjectivity", p, || {
                "not an image".into()
            })?;
            h.add(0);
            Ok(())
        })?;
        same_count("class size", &(BigInt::from(1u64) << n), h.total())?;
        checked += h.total();
    }
    Ok(checked)
}

fn check_odd(n: usize, ctx: Ctx) -> Outcome {
    let expected = odd_polys(n);
    let count = binomial(n as i64, (n / 2) as i64);
    let m = 2 * n + 1;
    let mut images = HashSet::new();
    let mut hist: [Histogram; 3] = Default::default();
    for alpha in inv321(n) {
        let p = odd_join(&alpha).map_err(|e| fail("odd join", &alpha, e))?;
        ensure(is_cinv321(&p, m), "class membership", &alpha, || {
            p.to_string()
        })?;
        let back = odd_split(&p).map_err(|e| fail("odd split", &p, e))?;
        ensure(back == alpha, "split round trip", &p, || back.to_string())?;
        hist[0].add(p.des_plus());
        hist[1].add(p.maj_plus());
        hist[2].add(p.des());
        images.insert(p);
    }
    same_count("distinct images", &count, images.len() as u64)?;
    let compare = |route: &str, h: &[Histogram; 3]| -> Outcome<()> {
        same_poly(&format!("des+ {route}"), &expected.des_plus, &h[0].poly())?;
        same_poly(&format!("maj+ {route}"), &expected.maj_plus, &h[1].poly())?;
        same_poly(&format!("des {route}"), &expected.des, &h[2].poly())
    };
    compare("via halves", &hist)?;
    let mut checked = images.len() as u64;
    if ctx.raw {
        let raw = scan_perms(ClassLabel::Cinv321Odd, m, ctx.jobs, |p, h| {
            ensure(images.contains(p), "surjectivity", p, || {
                "not an image".into()
            })?;
            h[0].add(p.des_plus());
            h[1].add(p.maj_plus());
            h[2].add(p.des());
            Ok(())
        })?;
        same_count("class size", &count, raw[0].total())?;
        compare("by filtering involutions", &raw)?;
        checked += raw[0].total();
    }
    Ok(checked)
}

fn check_hdpeak(n: usize) -> Outcome {
    let mut checked = 0;
    for a in 0..=n {
        let b = n - a;
        let mut images = HashSet::new();
        for p in rectangle_paths(a, b) {
            let q = g_bijection(&p);
            ensure(
                q.check_rectangle(a, b).is_ok(),
                "g stays in the rectangle",
                &p,
                || q.to_string(),
            )?;
            ensure(g_inverse(&q) == p, "g inverse after g", &p, || {
                q.to_string()
            })?;
            ensure(
                p.peak_set() == q.hook_decomposition(),
                "Peak = hd∘g",
                &p,
                || format!("{:?} vs {:?}", p.peak_set(), q.hook_decomposition()),
            )?;
            ensure(
                p.peak_star_set() == q.hd_star(),
                "Peak* = hd*∘g",
                &p,
                || format!("{:?} vs {:?}", p.peak_star_set(), q.hd_star()),
            )?;
            let hd = q.hook_decomposition();
            let durfee = q.partition().durfee_side();
            ensure(
                hd.len() == durfee
                    && hd.windows(2).all(|w| w[0] < w[1])
                    && hd.iter().all(|&h| h < n.max(1))
                    && hd.iter().sum::<usize>() == q.area(),
                "hook decomposition shape",
                &q,
                || format!("{hd:?}"),
            )?;
            images.insert(q);
            checked += 1;
        }
        same_count(
            &format!("g is injective on Y_{{{a},{b}}}"),
            &binomial(n as i64, a as i64),
            images.len() as u64,
        )?;
        for q in rectangle_paths(a, b) {
            let back = g_bijection(&g_inverse(&q));
            ensure(back == q, "g after g inverse", &q, || back.to_string())?;
        }
    }
    Ok(checked)
}

fn check_recr(n: usize) -> Outcome {
    let r = r_definition(n);
    if n < 2 {
        same_poly("initial value", &p_recurrence(n), &r)?;
        return Ok(1 << n);
    }
    let one_plus_q = QPoly::from_coeffs([1, 1]);
    let factor = &QPoly::monomial(n) - &QPoly::monomial(1);
    let rhs = &(&one_plus_q * &r_definition(n - 1)) + &(&factor * &r_definition(n - 2));
    same_poly("area recurrence", &rhs, &r)?;

    // the two recurrences again, on brute-force subset distributions
    let brute = |k: usize| -> (QPoly, QPoly) {
        let (mut d, mut p) = (Histogram::default(), Histogram::default());
        for e in subsets(k) {
            let perm = subset_to_permutation(&e);
            d.add(perm.des_plus());
            p.add(perm.maj_plus());
        }
        (d.poly(), p.poly())
    };
    let (d0, p0) = brute(n);
    let (d1, p1) = brute(n - 1);
    let (d2, p2) = brute(n - 2);
    let two = QPoly::from_coeffs([2]);
    let q_minus_one = QPoly::from_coeffs([-1, 1]);
    same_poly(
        "des+ recurrence",
        &(&(&two * &d1) + &(&q_minus_one * &d2)),
        &d0,
    )?;
    same_poly(
        "maj+ recurrence",
        &(&(&one_plus_q * &p1) + &(&factor * &p2)),
        &p0,
    )?;
    Ok(1 << n)
}

fn check_sixpat(n: usize) -> Outcome {
    let mut image: HashSet<SignedPermutation> = HashSet::new();
    let mut total = 0u64;
    for p in centrosymmetric_permutations(2 * n) {
        let s = theta(&p).map_err(|e| fail("theta", &p, e))?;
        ensure(theta_inverse(&s) == p, "theta round trip", &p, || {
            s.to_string()
        })?;
        if p.avoids_321() {
            image.insert(s);
        }
        total += 1;
    }
    let order = (1u64 << n) * (1..=n as u64).product::<u64>();
    same_count("centrosymmetric permutations", &BigInt::from(order), total)?;
    let avoiders: HashSet<SignedPermutation> = signed_permutations(n, None)
        .filter(SignedPermutation::avoids_six_patterns)
        .collect();
    let mut only_image: Vec<_> = image.difference(&avoiders).collect();
    let mut only_avoiders: Vec<_> = avoiders.difference(&image).collect();
    only_image.sort();
    only_avoiders.sort();
    if let Some(s) = only_image.first() {
        return Err(fail(
            "image avoids the six patterns",
            s,
            "image of a 321-avoider",
        ));
    }
    if let Some(s) = only_avoiders.first() {
        return Err(fail("avoiders are images", s, "avoids the six patterns"));
    }
    Ok(total + order)
}

fn check_fp(n: usize) -> Outcome {
    let all: Vec<Permutation> = inv321(n).collect();
    let mut checked = 0;
    for a in 0..=n / 2 {
        let b = n - a;
        let need = b - a;
        let mut images = HashSet::new();
        for p in &all {
            if p.fixed_point_count() < need {
                ensure(theta_fp(p, a, b).is_err(), "domain", p, || {
                    format!("accepted with too few fixed points in R_{{{a},{b}}}")
                })?;
                continue;
            }
            let lambda = theta_fp(p, a, b).map_err(|e| fail("theta_fp", p, e))?;
            ensure(lambda.check_rectangle(a, b).is_ok(), "shape", p, || {
                lambda.to_string()
            })?;
            ensure(
                p.descent_set() == lambda.hook_decomposition(),
                "Des = hd",
                p,
                || {
                    format!(
                        "{:?} vs {:?} ({lambda})",
                        p.descent_set(),
                        lambda.hook_decomposition()
                    )
                },
            )?;
            let back = theta_fp_inverse(&lambda, a, b).map_err(|e| fail("inverse", &lambda, e))?;
            ensure(back == *p, "round trip", p, || back.to_string())?;
            images.insert(lambda);
            checked += 1;
        }
        same_count(
            &format!("image fills Y_{{{a},{b}}}"),
            &binomial(n as i64, a as i64),
            images.len() as u64,
        )?;
        for lambda in rectangle_paths(a, b) {
            let p = theta_fp_inverse(&lambda, a, b).map_err(|e| fail("inverse", &lambda, e))?;
            ensure(
                p.size() == n
                    && p.is_involution()
                    && p.avoids_321()
                    && p.fixed_point_count() >= need,
                "inverse lands in the domain",
                &lambda,
                || p.to_string(),
            )?;
            let again = theta_fp(&p, a, b).map_err(|e| fail("theta_fp", &p, e))?;
            ensure(again == lambda, "round trip from paths", &lambda, || {
                again.to_string()
            })?;
        }
    }
    Ok(checked)
}

/// `maj` histograms of `I_n(321)` indexed by `[fp][des]`.
fn maj_table(n: usize) -> (Vec<Vec<Histogram>>, u64) {
    let mut table = vec![vec![Histogram::default(); n + 1]; n + 1];
    let mut count = 0;
    for p in inv321(n) {
        table[p.fixed_point_count()][p.des()].add(p.maj());
        count += 1;
    }
    (table, count)
}

fn sum_polys<'a>(hs: impl Iterator<Item = &'a Histogram>) -> QPoly {
    let mut total = Histogram::default();
    for h in hs {
        total.merge(h);
    }
    total.poly()
}

fn check_cor1(n: usize) -> Outcome {
    let (table, count) = maj_table(n);
    let by_fp: Vec<QPoly> = table.iter().map(|row| sum_polys(row.iter())).collect();
    let all = sum_polys(table.iter().flatten());
    same_poly(
        "maj over I_n(321)",
        &q_binomial(n as i64, (n / 2) as i64),
        &all,
    )?;
    for a in 0..=n / 2 {
        let b = n - a;
        let brute = by_fp[b - a..].iter().fold(QPoly::zero(), |acc, p| &acc + p);
        same_poly(
            &format!("fp >= {}", b - a),
            &fp_at_least_maj_poly(a, b),
            &brute,
        )?;
    }
    for (l, brute) in by_fp.iter().enumerate() {
        match fp_refined_maj_poly(n, l) {
            Ok(expected) => same_poly(&format!("fp = {l}"), &expected, brute)?,
            Err(_) => same_poly(&format!("fp = {l} (wrong parity)"), &QPoly::zero(), brute)?,
        }
    }
    Ok(count)
}

fn check_cor2(n: usize) -> Outcome {
    let (table, count) = maj_table(n);
    for a in 0..=n / 2 {
        let b = n - a;
        let mut diagrams = vec![Histogram::default(); n + 1];
        for lambda in rectangle_paths(a, b) {
            diagrams[lambda.hook_decomposition().len()].add(lambda.area());
        }
        for k in 0..=n {
            let expected = fp_at_least_des_poly(a, b, k);
            let brute = sum_polys(table[b - a..].iter().map(|row| &row[k]));
            same_poly(&format!("fp >= {}, des = {k}", b - a), &expected, &brute)?;
            same_poly(
                &format!("diagrams in R_{{{a},{b}}} with {k} hooks"),
                &expected,
                &diagrams[k].poly(),
            )?;
        }
    }
    for (l, row) in table.iter().enumerate() {
        for (k, h) in row.iter().enumerate() {
            let expected = fp_des_refined_poly(n, l, k).unwrap_or_else(|_| QPoly::zero());
            same_poly(&format!("fp = {l}, des = {k}"), &expected, &h.poly())?;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert!("T-nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for id in TheoremId::ALL {
            let report = verify(id, &VerifyOptions::new(4).raw_max_n(3));
            assert!(report.passed(), "{id}: {:?}", report.first_failure());
            assert_eq!(report.results.len(), 5);
        }
    }

    #[test]
    fn report_json_shape() {
        let report = verify(TheoremId::Cara, &VerifyOptions::new(1));
        assert_eq!(
            report.to_json().to_string(),
            r#"{"theorem":"T-cara","results":[{"n":0,"status":"pass","counterexample":null},{"n":1,"status":"pass","counterexample":null}]}"#
        );
    }

    #[test]
    fn counterexamples_are_concrete() {
        let bad = same_poly("demo", &QPoly::one(), &QPoly::monomial(1)).unwrap_err();
        assert_eq!(bad["expected"], json!([1]));
        assert_eq!(bad["actual"], json!([0, 1]));
        let bad = ensure(false, "demo", "1 2", || "why".into()).unwrap_err();
        assert_eq!(bad["object"], "1 2");
    }
}
