//! Named maps over the text formats, as exposed by `cinv bijection`.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::ClassSize;
use crate::error::{Error, Result};
use crate::matching::{
    matching_to_permutation, odd_join, odd_split, permutation_to_matching, permutation_to_subset,
    subset_to_matching, subset_to_permutation, ExcedanceSubset, Matching,
};
use crate::paths::{
    despeak_transport, g_bijection, g_inverse, path_to_subset, subset_to_path, LatticePath,
    Partition,
};
use crate::perm::Permutation;
use crate::rsk::{facing_match, involution_to_path, theta_fp, theta_fp_inverse};
use crate::signed::{theta, theta_inverse, SignedPermutation};

macro_rules! bijections {
    ($($variant:ident => $name:literal, $help:literal;)*) => {
        /// Every map that can be applied by name.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum Bijection {
            $($variant,)*
        }

        impl Bijection {
            pub const ALL: &'static [Bijection] = &[$(Bijection::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Bijection::$variant => $name,)*
                }
            }

            /// Input format and the meaning of `--size`, if any.
            pub fn help(self) -> &'static str {
                match self {
                    $(Bijection::$variant => $help,)*
                }
            }
        }
    };
}

bijections! {
    PermToMatching => "perm-to-matching", "involution of [2n] -> arcs";
    MatchingToPerm => "matching-to-perm", "arcs `1-2,3-4`; size = number of points";
    PermToSubset => "perm-to-subset", "involution of [2n] -> excedances among 1..n";
    SubsetToPerm => "subset-to-perm", "subset `1,3`; size = n";
    SubsetToMatching => "subset-to-matching", "subset `1,3`; size = n";
    SubsetToPath => "subset-to-path", "subset `1,3`; size = n";
    PathToSubset => "path-to-subset", "path `NENE`";
    Despeak => "despeak", "involution of [2n] -> Peak* of its path";
    G => "g", "path `NENE`";
    GInverse => "g-inverse", "path `NENE`";
    Rotate => "rotate", "path `NENE`";
    PathToPartition => "path-to-partition", "path `NENE`";
    PartitionToPath => "partition-to-path", "partition `2,1`; size = a,b";
    OddSplit => "odd-split", "involution of [2n+1] -> left block";
    OddJoin => "odd-join", "321-avoiding involution of [n]";
    Theta => "theta", "centrosymmetric permutation of [2n] -> signed";
    ThetaInverse => "theta-inverse", "signed permutation `-2 -4 1 3`";
    Rsk => "rsk", "321-avoiding involution -> two-row path";
    FacingMatch => "facing-match", "path `NNEE`";
    ThetaFp => "theta-fp", "321-avoiding involution; size = a,b";
    ThetaFpInverse => "theta-fp-inverse", "path `NENE`; size = a,b";
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bijection::ALL
            .iter()
            .copied()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownBijection(s.to_string()))
    }
}

fn need_single(name: Bijection, size: Option<ClassSize>) -> Result<usize> {
    match size {
        Some(ClassSize::Single(n)) => Ok(n),
        _ => Err(Error::Parse(format!("{name} needs --size <n>"))),
    }
}

fn need_rect(name: Bijection, size: Option<ClassSize>) -> Result<(usize, usize)> {
    match size {
        Some(ClassSize::Rect(a, b)) => Ok((a, b)),
        _ => Err(Error::Parse(format!("{name} needs --size <a,b>"))),
    }
}

fn braces(e: &ExcedanceSubset) -> String {
    format!("{{{e}}}")
}

fn set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Applies the named map to `input` and renders the result as text.
pub fn apply(name: Bijection, input: &str, size: Option<ClassSize>) -> Result<String> {
    use Bijection::*;
    let perm = || input.parse::<Permutation>();
    let path = || input.parse::<LatticePath>();
    Ok(match name {
        PermToMatching => permutation_to_matching(&perm()?)?.to_string(),
        MatchingToPerm => {
            let points = need_single(name, size)?;
            matching_to_permutation(&Matching::parse(points, input)?)?.to_string()
        }
        PermToSubset => braces(&permutation_to_subset(&perm()?)?),
        SubsetToPerm => {
            let e = ExcedanceSubset::parse(need_single(name, size)?, input)?;
            subset_to_permutation(&e).to_string()
        }
        SubsetToMatching => {
            let e = ExcedanceSubset::parse(need_single(name, size)?, input)?;
            subset_to_matching(&e).to_string()
        }
        SubsetToPath => {
            let e = ExcedanceSubset::parse(need_single(name, size)?, input)?;
            subset_to_path(&e).to_string()
        }
        PathToSubset => braces(&path_to_subset(&path()?)),
        Despeak => set(&despeak_transport(&perm()?)?),
        G => g_bijection(&path()?).to_string(),
        GInverse => g_inverse(&path()?).to_string(),
        Rotate => path()?.rotate_first_to_last()?.to_string(),
        PathToPartition => path()?.partition().to_string(),
        PartitionToPath => {
            let (a, b) = need_rect(name, size)?;
            input.parse::<Partition>()?.to_path(a, b)?.to_string()
        }
        OddSplit => odd_split(&perm()?)?.to_string(),
        OddJoin => odd_join(&perm()?)?.to_string(),
        Theta => theta(&perm()?)?.to_string(),
        ThetaInverse => theta_inverse(&input.parse::<SignedPermutation>()?).to_string(),
        Rsk => involution_to_path(&perm()?)?.to_string(),
        FacingMatch => {
            let m = facing_match(&path()?)?;
            let pairs: Vec<String> = m.pairs.iter().map(|(n, e)| format!("{n}-{e}")).collect();
            format!("{} unmatched {}", pairs.join(","), set(&m.unmatched_north))
        }
        ThetaFp => {
            let (a, b) = need_rect(name, size)?;
            theta_fp(&perm()?, a, b)?.to_string()
        }
        ThetaFpInverse => {
            let (a, b) = need_rect(name, size)?;
            theta_fp_inverse(&path()?, a, b)?.to_string()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, input: &str, size: Option<&str>) -> Result<String> {
        apply(name.parse()?, input, size.map(|s| s.parse()).transpose()?)
    }

    #[test]
    fn names_round_trip() {
        for &b in Bijection::ALL {
            assert_eq!(b.name().parse::<Bijection>().unwrap(), b);
            assert!(!b.help().is_empty());
        }
        assert!(matches!(
            run("nope", "1", None),
            Err(Error::UnknownBijection(_))
        ));
    }

    #[test]
    fn sample_applications() {
        assert_eq!(run("perm-to-subset", "3412", None).unwrap(), "{1,2}");
        assert_eq!(run("subset-to-perm", "1,2", Some("2")).unwrap(), "3 4 1 2");
        assert_eq!(run("subset-to-perm", "", Some("2")).unwrap(), "1 2 3 4");
        assert_eq!(run("despeak", "3412", None).unwrap(), "{2}");
        assert_eq!(run("g", "NENE", None).unwrap(), "EENN");
        assert_eq!(run("rotate", "NE", None).unwrap(), "EN");
        assert_eq!(run("theta", "53281764", None).unwrap(), "-4 3 2 -1");
        assert_eq!(
            run("theta-inverse", "-4 3 2 -1", None).unwrap(),
            "5 3 2 8 1 7 6 4"
        );
        assert!(run("subset-to-perm", "1", None).is_err());
        assert!(run("theta-fp", "1", Some("1")).is_err());
        let lambda = run("theta-fp", "2143", Some("2,2")).unwrap();
        assert_eq!(
            run("theta-fp-inverse", &lambda, Some("2,2")).unwrap(),
            "2 1 4 3"
        );
    }
}
