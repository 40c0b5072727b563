//! Brute-force distribution polynomials over the enumerated classes.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Number, Value};

use crate::enumerate::{shards, ClassLabel, ClassObject, ClassSize, Shard};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// Statistics understood by [`distribution`].
///
/// On subsets, `des⁺`, `maj⁺` and `des` are read through the bijection with
/// `I^C_{2n}(321)`: `des(E)`, `maj(E)` and the full descent count. On paths,
/// `des⁺` and `maj⁺` are the size and sum of `Peak*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stat {
    DesPlus,
    MajPlus,
    Des,
    Maj,
    Fp,
    Area,
    Peaks,
}

impl Stat {
    pub const ALL: [Stat; 7] = [
        Stat::DesPlus,
        Stat::MajPlus,
        Stat::Des,
        Stat::Maj,
        Stat::Fp,
        Stat::Area,
        Stat::Peaks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stat::DesPlus => "des+",
            Stat::MajPlus => "maj+",
            Stat::Des => "des",
            Stat::Maj => "maj",
            Stat::Fp => "fp",
            Stat::Area => "area",
            Stat::Peaks => "peaks",
        }
    }

    fn supports(self, label: ClassLabel) -> bool {
        use ClassLabel::*;
        match label {
            Cinv321Even | Cinv321Odd | Inv321 => {
                matches!(
                    self,
                    Stat::DesPlus | Stat::MajPlus | Stat::Des | Stat::Maj | Stat::Fp
                )
            }
            Subsets => matches!(self, Stat::DesPlus | Stat::MajPlus | Stat::Des),
            PathsRect => matches!(
                self,
                Stat::Area | Stat::Peaks | Stat::DesPlus | Stat::MajPlus
            ),
            SignedAll | SignedSixAvoiders => matches!(self, Stat::DesPlus | Stat::MajPlus),
        }
    }

    /// The statistic on one object, or `None` when it is not defined there.
    pub fn value(self, obj: &ClassObject) -> Option<usize> {
        Some(match (obj, self) {
            (ClassObject::Perm(p), Stat::DesPlus) => p.des_plus(),
            (ClassObject::Perm(p), Stat::MajPlus) => p.maj_plus(),
            (ClassObject::Perm(p), Stat::Des) => p.des(),
            (ClassObject::Perm(p), Stat::Maj) => p.maj(),
            (ClassObject::Perm(p), Stat::Fp) => p.fixed_point_count(),
            (ClassObject::Subset(e), Stat::DesPlus) => e.des(),
            (ClassObject::Subset(e), Stat::MajPlus) => e.maj(),
            (ClassObject::Subset(e), Stat::Des) => e.full_des(),
            (ClassObject::Path(p), Stat::Area) => p.area(),
            (ClassObject::Path(p), Stat::Peaks) => p.peak_set().len(),
            (ClassObject::Path(p), Stat::DesPlus) => p.peak_star_set().len(),
            (ClassObject::Path(p), Stat::MajPlus) => p.peak_star_set().iter().sum(),
            (ClassObject::Signed(s), Stat::DesPlus) => s.des_plus(),
            (ClassObject::Signed(s), Stat::MajPlus) => s.maj_plus(),
            _ => return None,
        })
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stat::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStat(s.to_string()))
    }
}

/// `Σ q^{stat}` over a class, together with the class size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub class: ClassLabel,
    pub size: ClassSize,
    pub stat: Stat,
    pub poly: QPoly,
    pub count: u64,
}

impl DistributionTable {
    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.name(),
            "size": size_json(self.size),
            "stat": self.stat.name(),
            "poly": poly_json(&self.poly),
            "count": self.count,
        })
    }

    /// Header row, then one `exponent<TAB>coefficient` line per term
    /// (zero coefficients included up to the degree).
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("exponent\tcoefficient\n");
        for (k, c) in self.poly.coeffs().iter().enumerate() {
            out.push_str(&format!("{k}\t{c}\n"));
        }
        out
    }
}

/// Single sizes as numbers, rectangles as `"a,b"`.
pub fn size_json(size: ClassSize) -> Value {
    match size {
        ClassSize::Single(n) => json!(n),
        ClassSize::Rect(..) => json!(size.to_string()),
    }
}

/// Coefficient list as exact JSON integers.
pub fn poly_json(p: &QPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::Number(c.to_string().parse::<Number>().expect("integer literal")))
            .collect(),
    )
}

/// Histogram of a statistic, merged by addition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn add(&mut self, value: usize) {
        if self.counts.len() <= value {
            self.counts.resize(value + 1, 0);
        }
        self.counts[value] += 1;
        self.total += 1;
    }

    pub fn merge(&mut self, other: &Histogram) {
        if self.counts.len() < other.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.total += other.total;
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn poly(&self) -> QPoly {
        QPoly::from_counts(&self.counts)
    }
}

impl FromIterator<usize> for Histogram {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut h = Histogram::default();
        for v in iter {
            h.add(v);
        }
        h
    }
}

fn shard_histogram(shard: &Shard, stat: Stat) -> Histogram {
    shard
        .objects()
        .map(|obj| stat.value(&obj).expect("compatibility checked up front"))
        .collect()
}

/// Runs `work` on every item using `jobs` worker threads and returns the
/// results in input order.
pub fn run_sharded<T, R, F>(items: Vec<T>, jobs: usize, work: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    if jobs <= 1 {
        return items.iter().map(work).collect();
    }
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map(&work).collect())
}

/// Exact `Σ q^{stat}` over the class, using `jobs` threads. The result does
/// not depend on `jobs`.
pub fn distribution(
    class: ClassLabel,
    size: ClassSize,
    stat: Stat,
    jobs: usize,
) -> Result<DistributionTable> {
    if !stat.supports(class) {
        return Err(Error::IncompatibleStat {
            class: class.name().to_string(),
            stat: stat.name().to_string(),
        });
    }
    let parts = run_sharded(shards(class, size)?, jobs, |s| shard_histogram(s, stat));
    let mut total = Histogram::default();
    for h in &parts {
        total.merge(h);
    }
    Ok(DistributionTable {
        class,
        size,
        stat,
        poly: total.poly(),
        count: total.total(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(class: &str, size: &str, stat: &str) -> Result<DistributionTable> {
        distribution(class.parse()?, size.parse()?, stat.parse()?, 1)
    }

    fn list(class: &str, size: &str, stat: &str) -> String {
        dist(class, size, stat).unwrap().poly.to_list_string()
    }

    #[test]
    fn small_distributions() {
        assert_eq!(list("cinv321-even", "4", "des"), "1,2,1");
        assert_eq!(list("cinv321-even", "6", "maj+"), "1,1,2,3,1");
        assert_eq!(list("inv321", "3", "maj"), "1,1,1");
        assert_eq!(list("subsets", "3", "maj+"), "1,1,2,3,1");
        assert_eq!(list("paths-rect", "2,2", "area"), "1,1,2,1,1");
        assert_eq!(list("signed-all", "1", "des+"), "1,1");
        let t = dist("cinv321-even", "6", "des+").unwrap();
        assert_eq!(t.count, 8);
        assert_eq!(t.poly.eval_at_one(), 8.into());
    }

    #[test]
    fn incompatible_and_unknown() {
        assert!(matches!(
            dist("subsets", "3", "area"),
            Err(Error::IncompatibleStat { .. })
        ));
        assert!(matches!(
            dist("signed-all", "3", "fp"),
            Err(Error::IncompatibleStat { .. })
        ));
        assert!(matches!(
            dist("subsets", "3", "inv"),
            Err(Error::UnknownStat(_))
        ));
        assert!(matches!(
            dist("nope", "3", "des"),
            Err(Error::UnknownClass(_))
        ));
    }

    #[test]
    fn output_formats() {
        let t = dist("cinv321-even", "4", "des").unwrap();
        assert_eq!(t.to_tsv(), "exponent\tcoefficient\n0\t1\n1\t2\n2\t1\n");
        assert_eq!(
            t.to_json().to_string(),
            r#"{"class":"cinv321-even","size":4,"stat":"des","poly":[1,2,1],"count":4}"#
        );
    }

    #[test]
    fn sharding_does_not_change_results() {
        for (class, size, stat) in [
            ("cinv321-even", "8", "maj+"),
            ("subsets", "7", "des"),
            ("signed-sixavoiders", "3", "des+"),
            ("paths-rect", "3,4", "area"),
        ] {
            let serial = distribution(
                class.parse().unwrap(),
                size.parse().unwrap(),
                stat.parse().unwrap(),
                1,
            )
            .unwrap();
            let parallel = distribution(
                class.parse().unwrap(),
                size.parse().unwrap(),
                stat.parse().unwrap(),
                3,
            )
            .unwrap();
            assert_eq!(serial, parallel);
        }
    }
}
