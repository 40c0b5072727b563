use proptest::prelude::*;

use cinv::matching::{
    matching_to_permutation, odd_join, odd_split, permutation_to_matching, permutation_to_subset,
    subset_to_matching, subset_to_permutation, ExcedanceSubset,
};
use cinv::paths::{
    despeak_transport, g_bijection, g_inverse, path_to_subset, subset_to_path, LatticePath, Step,
};
use cinv::qpoly::{q_binomial, QPoly};
use cinv::rsk::{rsk_two_row, theta_fp, theta_fp_inverse, TwoRowTableau};
use cinv::signed::{theta, theta_inverse, SignedPermutation};
use cinv::Permutation;

fn subset_strategy(max_n: usize) -> impl Strategy<Value = ExcedanceSubset> {
    (0..=max_n).prop_flat_map(|n| {
        let limit = if n == 0 { 1 } else { 1u64 << n };
        (Just(n), 0..limit).prop_map(|(n, mask)| ExcedanceSubset::from_mask(n, mask))
    })
}

fn path_strategy(max_len: usize) -> impl Strategy<Value = LatticePath> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
        LatticePath::new(
            bits.into_iter()
                .map(|b| if b { Step::N } else { Step::E })
                .collect(),
        )
    })
}

fn signed_strategy(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (0..=max_n)
        .prop_flat_map(|n| {
            (
                Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(abs, signs)| {
            let window = abs
                .into_iter()
                .zip(signs)
                .map(|(v, neg)| if neg { -v } else { v })
                .collect();
            SignedPermutation::new(window).unwrap()
        })
}

/// A 321-avoiding involution read off a ballot path.
fn avoider_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    path_strategy(max_n).prop_map(|p| {
        // reflect the prefix that dips below the diagonal
        let mut height = 0i64;
        let steps = p
            .steps()
            .iter()
            .map(|&s| {
                let s = if s == Step::E && height == 0 {
                    Step::N
                } else {
                    s
                };
                height += if s == Step::N { 1 } else { -1 };
                s
            })
            .collect();
        TwoRowTableau::from_path(&LatticePath::new(steps))
            .unwrap()
            .to_involution()
    })
}

fn poly_strategy() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-20i64..20, 0..8).prop_map(QPoly::from_coeffs)
}

proptest! {
    #[test]
    fn subset_round_trip_and_transport(e in subset_strategy(24)) {
        let n = e.n();
        let m = subset_to_matching(&e);
        prop_assert!(m.is_symmetric() && m.is_non_nesting());
        let p = matching_to_permutation(&m).unwrap();
        prop_assert_eq!(p.size(), 2 * n);
        prop_assert!(p.is_involution() && p.is_centrosymmetric() && p.avoids_321());
        prop_assert_eq!(&permutation_to_matching(&p).unwrap(), &m);
        prop_assert_eq!(&permutation_to_subset(&p).unwrap(), &e);
        prop_assert_eq!(p.des_plus_set(), e.descent_set());
        prop_assert_eq!(p.des(), e.full_des());
        prop_assert_eq!(p.maj_plus(), e.maj());
        prop_assert_eq!(despeak_transport(&p).unwrap(), e.descent_set());
        prop_assert_eq!(&path_to_subset(&subset_to_path(&e)), &e);
    }

    #[test]
    fn descents_of_centrosymmetric_permutations(s in signed_strategy(9)) {
        let p = theta_inverse(&s);
        let m = p.size();
        prop_assert!(p.is_centrosymmetric());
        let des = p.descent_set();
        for &i in &des {
            prop_assert!(des.contains(&(m - i)));
        }
        prop_assert_eq!(2 * p.maj(), m * p.des());
        let mut rebuilt: Vec<usize> = p.des_plus_set();
        rebuilt.extend(p.des_plus_set().iter().map(|&i| m - i));
        rebuilt.sort_unstable();
        rebuilt.dedup();
        prop_assert_eq!(rebuilt, des);
    }

    #[test]
    fn theta_round_trip_and_six_patterns(s in signed_strategy(9)) {
        let p = theta_inverse(&s);
        prop_assert_eq!(&theta(&p).unwrap(), &s);
        prop_assert_eq!(s.avoids_six_patterns(), p.avoids_321());
        prop_assert_eq!(s.is_involution(), p.is_involution());
        prop_assert!(s.contains(&SignedPermutation::identity(0)));
    }

    #[test]
    fn g_is_a_bijection_carrying_peaks_to_hooks(p in path_strategy(24)) {
        let q = g_bijection(&p);
        prop_assert_eq!(q.north_count(), p.north_count());
        prop_assert_eq!(q.east_count(), p.east_count());
        prop_assert_eq!(&g_inverse(&q), &p);
        prop_assert_eq!(&g_bijection(&g_inverse(&p)), &p);
        prop_assert_eq!(p.peak_set(), q.hook_decomposition());
        prop_assert_eq!(p.peak_star_set(), q.hd_star());
    }

    #[test]
    fn hooks_partition_the_diagram(p in path_strategy(24)) {
        let hd = p.hook_decomposition();
        prop_assert_eq!(hd.len(), p.partition().durfee_side());
        prop_assert!(hd.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(hd.iter().all(|&h| h < p.len()));
        prop_assert_eq!(hd.iter().sum::<usize>(), p.area());
        let star: usize = p.hd_star().iter().sum();
        let bonus = if p.first() == Some(Step::N) { p.len() } else { 0 };
        prop_assert_eq!(star, p.area() + bonus);
        let (a, b) = (p.north_count(), p.east_count());
        prop_assert_eq!(&p.partition().to_path(a, b).unwrap(), &p);
    }

    #[test]
    fn rotation_shifts_area(p in path_strategy(24).prop_filter("nonempty", |p| !p.is_empty())) {
        let r = p.rotate_first_to_last().unwrap();
        let (a, b) = (p.north_count(), p.east_count());
        if p.first() == Some(Step::N) {
            prop_assert_eq!(r.area(), p.area() + b);
        } else {
            prop_assert_eq!(r.area() + a, p.area());
        }
    }

    #[test]
    fn two_row_correspondence_round_trips(p in avoider_strategy(20)) {
        prop_assert!(p.is_involution() && p.avoids_321());
        let t = rsk_two_row(&p).unwrap();
        prop_assert_eq!(&t.to_involution(), &p);
        prop_assert_eq!(t.top().len() - t.bottom().len(), p.fixed_point_count());
        prop_assert_eq!(t.to_path().peak_set(), p.descent_set());
    }

    #[test]
    fn odd_join_round_trips(p in avoider_strategy(16)) {
        let joined = odd_join(&p).unwrap();
        prop_assert!(joined.is_involution() && joined.is_centrosymmetric() && joined.avoids_321());
        prop_assert_eq!(&odd_split(&joined).unwrap(), &p);
    }

    #[test]
    fn theta_fp_round_trips(p in avoider_strategy(16)) {
        let n = p.size();
        let fp = p.fixed_point_count();
        for a in 0..=n / 2 {
            let b = n - a;
            match theta_fp(&p, a, b) {
                Ok(lambda) => {
                    prop_assert!(fp >= b - a);
                    prop_assert!(lambda.check_rectangle(a, b).is_ok());
                    prop_assert_eq!(lambda.hook_decomposition(), p.descent_set());
                    prop_assert_eq!(&theta_fp_inverse(&lambda, a, b).unwrap(), &p);
                }
                Err(_) => prop_assert!(fp < b - a),
            }
        }
    }

    #[test]
    fn involution_parity(p in avoider_strategy(20)) {
        prop_assert_eq!(p.fixed_point_count() % 2, p.size() % 2);
    }

    #[test]
    fn polynomial_ring_laws(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!(a.to_list_string().parse::<QPoly>().unwrap(), a);
    }

    #[test]
    fn q_binomial_second_pascal_rule(n in 1i64..30, h in 0i64..30) {
        // {n,h} = q^h {n-1,h} + {n-1,h-1}
        let rhs = &q_binomial(n - 1, h).shift(h as usize) + &q_binomial(n - 1, h - 1);
        prop_assert_eq!(q_binomial(n, h), rhs);
        prop_assert_eq!(q_binomial(n, h), q_binomial(n, n - h));
    }

    #[test]
    fn text_formats_round_trip(s in signed_strategy(12), p in path_strategy(30), e in subset_strategy(20)) {
        prop_assert_eq!(&s.to_string().parse::<SignedPermutation>().unwrap(), &s);
        prop_assert_eq!(&p.to_string().parse::<LatticePath>().unwrap(), &p);
        prop_assert_eq!(&ExcedanceSubset::parse(e.n(), &e.to_string()).unwrap(), &e);
        let perm = s.absolute();
        prop_assert_eq!(&perm.to_string().parse::<Permutation>().unwrap(), &perm);
        let m = subset_to_matching(&e);
        prop_assert_eq!(&cinv::Matching::parse(2 * e.n(), &m.to_string()).unwrap(), &m);
        prop_assert_eq!(&subset_to_permutation(&e), &matching_to_permutation(&m).unwrap());
    }
}
