mod common;

use std::collections::BTreeSet;

use common::*;
use itertools::Itertools;
use psca_core::distributions::*;
use psca_core::PermArray;

fn small_params() -> impl Iterator<Item = (usize, usize, u64)> {
    (2..=4usize).flat_map(|t| (1..=2u64).flat_map(move |l| (t..=6).map(move |v| (v, t, l))))
}

#[test]
fn feasibility_equals_binomial_identities_exhaustively() {
    for (v, t, l) in small_params() {
        let p = Params::new(v, t, l).unwrap();
        let mut brute = Vec::new();
        for d in compositions(v, factorial(t) * l) {
            let feasible = is_feasible(&d, p).unwrap();
            let mut all = true;
            for i in 0..t {
                let holds = binomial_identity_holds(&d, p, i).unwrap();
                assert_eq!(holds, naive_binomial(&d, t, l, i), "{d:?} at ({v},{t},{l}), i={i}");
                all &= holds;
            }
            assert_eq!(feasible, all, "{d:?} at ({v},{t},{l})");
            assert_eq!(feasible, naive_feasible(&d, t, l), "{d:?} at ({v},{t},{l})");
            if feasible {
                brute.push(d);
            }
        }
        assert_eq!(enumerate_feasible(p).vectors, brute, "({v},{t},{l})");
    }
}

#[test]
fn enumeration_matches_brute_force_beyond_the_exhaustive_range() {
    for (v, t, l) in [(7, 3, 1), (7, 3, 2), (8, 3, 1), (7, 4, 1), (5, 3, 3)] {
        let p = Params::new(v, t, l).unwrap();
        let brute: Vec<_> =
            compositions(v, factorial(t) * l).into_iter().filter(|d| naive_feasible(d, t, l)).collect();
        assert_eq!(enumerate_feasible(p).vectors, brute, "({v},{t},{l})");
    }
}

#[test]
fn feasible_sets_are_reversal_closed() {
    for (v, t, l) in small_params().chain([(7, 4, 2), (9, 3, 2)]) {
        let set: BTreeSet<_> = enumerate_feasible(Params::new(v, t, l).unwrap()).vectors.into_iter().collect();
        for d in &set {
            let mut r = d.clone();
            r.reverse();
            assert!(set.contains(&r));
        }
    }
}

#[test]
fn compatibility_matches_deletion_flow() {
    for (v, t, l) in [(5, 3, 2), (6, 3, 2), (6, 3, 3), (6, 4, 2), (7, 4, 1)] {
        let upper = enumerate_feasible(Params::new(v, t, l).unwrap()).vectors;
        let lower = enumerate_feasible(Params::new(v - 1, t, l).unwrap()).vectors;
        for (d, e) in upper.iter().cartesian_product(&lower) {
            assert_eq!(compatible(d, e).unwrap(), naive_compatible(d, e), "{d:?} / {e:?}");
        }
    }
    assert!(compatible(&[1, 2, 3], &[1, 2, 3]).is_err());
}

#[test]
fn chain_survivors_match_recomputation() {
    for (v, t, l) in [(7, 3, 2), (6, 3, 3), (7, 4, 2), (8, 5, 1)] {
        let levels = chain_levels(Params::new(v, t, l).unwrap());
        assert_eq!(levels.len(), v - t + 1);
        let mut prev: Vec<Vec<u64>> = enumerate_feasible(Params::new(t, t, l).unwrap()).vectors;
        assert_eq!(prev, vec![vec![factorial(t - 1) * l; t]]);
        for (k, level) in levels.iter().enumerate().skip(1) {
            let all = enumerate_feasible(Params::new(t + k, t, l).unwrap()).vectors;
            let expected: Vec<_> =
                all.iter().filter(|d| prev.iter().any(|e| naive_compatible(d, e))).cloned().collect();
            assert_eq!(level.survivors.as_ref().unwrap(), &expected);
            assert!(expected.iter().all(|d| level.vectors.contains(d)));
            prev = expected;
        }
    }
}

#[test]
fn deleting_a_symbol_gives_a_compatible_pair() {
    let x = PermArray::symmetric(5, 1);
    let y = x.delete_symbol(4).unwrap();
    let rows = rows_of(&y);
    for w in 0..4u8 {
        let d = x.distribution_vector(w as usize).unwrap();
        let e = distribution(&rows, 4, w);
        assert!(compatible(&d, &e).unwrap());
    }
}

#[test]
fn prime_strength_constraints() {
    for l in 1..=4 {
        let p = Params::new(5, 3, l).unwrap();
        for d in enumerate_feasible(p).vectors {
            assert_eq!(d[2] % 3, 0);
            assert!(prime_class_check(&d, p).unwrap());
            if l == 1 {
                assert_eq!(d[2], 0);
            }
        }
    }
    let p = Params::new(5, 3, 1).unwrap();
    assert!(prime_class_check(&[0, 0, 6, 0, 0], p).unwrap());
    assert!(!is_feasible(&[0, 0, 6, 0, 0], p).unwrap());
    assert!(prime_class_check(&[2, 1, 1, 1, 1, 0], Params::new(6, 3, 1).unwrap()).is_err());
}

#[test]
fn one_more_symbol_than_strength() {
    for d in enumerate_feasible(Params::new(5, 4, 1).unwrap()).vectors {
        assert!(palindrome_check(&d, Params::new(5, 4, 1).unwrap()).unwrap());
        let mut r = d.clone();
        r.reverse();
        assert_eq!(d, r);
    }
    assert!(palindrome_check(&[6, 0, 9, 3], Params::new(4, 3, 3).unwrap()).is_err());
}

/// A PSCA(4,3,1) found by exhausting 6-subsets of S_4.
fn brute_force_psca_4_3_1() -> Vec<Vec<u8>> {
    perms(4).into_iter().combinations(6).find(|rows| psca_lambda(rows, 4, 3) == Some(1)).expect("exists")
}

#[test]
fn brute_forced_small_array_obeys_the_structural_checks() {
    let rows = brute_force_psca_4_3_1();
    let x = array(4, &rows);
    let p = Params::new(4, 3, 1).unwrap();
    for w in 0..4 {
        let d = x.distribution_vector(w).unwrap();
        assert!(is_feasible(&d, p).unwrap());
        assert!(divisibility_check(&d, p).unwrap());
        for i in 0..=3 {
            let prof = subset_profile(&x, w, i).unwrap();
            assert_eq!(prof.len() as i128, binomial(3, i as i64));
            for &n in prof.values() {
                assert_eq!(n as i128 * binomial(3, i as i64), d[i] as i128);
            }
        }
    }
    assert!(!divisibility_check(&[1, 1, 2, 2], p).unwrap());
}

#[test]
fn symmetric_group_subset_profiles() {
    for (t, l) in [(3usize, 1usize), (3, 2), (4, 1)] {
        let x = PermArray::symmetric(t, l);
        for w in 0..t {
            for i in 0..t {
                let prof = subset_profile(&x, w, i).unwrap();
                assert_eq!(prof.len() as i128, binomial(t as i64 - 1, i as i64));
                let each = factorial(i) * factorial(t - 1 - i) * l as u64;
                assert!(prof.values().all(|&n| n == each));
            }
        }
        assert!(subset_profile(&x, t, 0).is_err());
    }
}
