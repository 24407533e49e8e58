//! Cross-checks of the counting, enumeration, and entropy operations against
//! independent brute-force oracles.

use num_bigint::BigUint;
use proptest::prelude::*;

use forcing_symbolic::{
    count_periodic_points, is_admissible, is_admissible_cycle, periodic_words,
    topological_entropy, CycleWord, TransitionMatrix, Word,
};

/// Brute-force oracle: enumerate all q^p strings and keep the cyclically
/// admissible ones. Deliberately avoids the DFS used by `periodic_words`.
fn brute_force_count(a: &TransitionMatrix, p: usize) -> BigUint {
    let q = a.q();
    let mut count = 0u64;
    let total = (q as u64).checked_pow(p as u32).expect("oracle range");
    for code in 0..total {
        let mut word = Vec::with_capacity(p);
        let mut c = code;
        for _ in 0..p {
            word.push((c % q as u64) as usize);
            c /= q as u64;
        }
        let ok = (0..p).all(|i| a.allows(word[i], word[(i + 1) % p]));
        if ok {
            count += 1;
        }
    }
    BigUint::from(count)
}

fn fibonacci() -> TransitionMatrix {
    TransitionMatrix::from_rows(vec![vec![0, 1], vec![1, 1]]).unwrap()
}

#[test]
fn trace_count_matches_brute_force_fibonacci_up_to_12() {
    let a = fibonacci();
    for p in 1..=12u32 {
        assert_eq!(
            count_periodic_points(&a, p).unwrap(),
            brute_force_count(&a, p as usize),
            "period {p}"
        );
    }
}

#[test]
fn trace_count_matches_brute_force_various_matrices() {
    let matrices = vec![
        TransitionMatrix::full_shift(2).unwrap(),
        TransitionMatrix::from_rows(vec![vec![1, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap(),
        TransitionMatrix::from_rows(vec![
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 0],
            vec![1, 0, 1, 0],
        ])
        .unwrap(),
    ];
    for a in &matrices {
        let pmax = if a.q() <= 3 { 9 } else { 7 };
        for p in 1..=pmax {
            assert_eq!(
                count_periodic_points(a, p as u32).unwrap(),
                brute_force_count(a, p),
                "q={} period {p}",
                a.q()
            );
        }
    }
}

#[test]
fn rotation_class_sizes_reproduce_trace() {
    let a = fibonacci();
    for p in 1..=10usize {
        let words = periodic_words(&a, p).unwrap();
        let total: u64 = words.iter().map(|w| w.minimal_period() as u64).sum();
        assert_eq!(BigUint::from(total), count_periodic_points(&a, p as u32).unwrap());
    }
}

#[test]
fn entropy_monotone_under_adding_edges() {
    let a = fibonacci();
    let b = TransitionMatrix::full_shift(2).unwrap();
    assert!(a.dominated_by(&b));
    let ha = topological_entropy(&a).unwrap();
    let hb = topological_entropy(&b).unwrap();
    assert!(ha <= hb + 1e-12);
    assert!(ha >= 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn count_matches_brute_force_random(
        q in 2usize..=3,
        p in 1usize..=7,
        bits in proptest::collection::vec(0u64..=1, 9),
    ) {
        let rows: Vec<Vec<u64>> = (0..q).map(|i| (0..q).map(|j| bits[i * 3 + j]).collect()).collect();
        let a = TransitionMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(count_periodic_points(&a, p as u32).unwrap(), brute_force_count(&a, p));
    }

    #[test]
    fn admissible_words_are_prefix_and_suffix_closed(
        syms in proptest::collection::vec(0usize..2, 2..10),
        cut in 1usize..9,
    ) {
        let a = fibonacci();
        let w = Word::new(syms.clone()).unwrap();
        if is_admissible(&w, &a).unwrap() && cut < syms.len() {
            let prefix = Word::new(syms[..cut].to_vec()).unwrap();
            let suffix = Word::new(syms[cut..].to_vec()).unwrap();
            prop_assert!(is_admissible(&prefix, &a).unwrap());
            prop_assert!(is_admissible(&suffix, &a).unwrap());
        }
    }

    #[test]
    fn cycle_admissibility_is_rotation_invariant(
        syms in proptest::collection::vec(0usize..2, 1..10),
    ) {
        let a = fibonacci();
        let cw = CycleWord::new(syms).unwrap();
        let base = is_admissible_cycle(&cw, &a).unwrap();
        for rot in cw.rotations() {
            let rw = CycleWord::new(rot.clone()).unwrap();
            prop_assert_eq!(is_admissible_cycle(&rw, &a).unwrap(), base);
            // every rotation of an admissible cycle is admissible as a word
            if base {
                prop_assert!(is_admissible(&Word::new(rot).unwrap(), &a).unwrap());
            }
        }
    }

    #[test]
    fn entropy_monotone_random_pairs(
        bits in proptest::collection::vec(0u64..=1, 16),
        extra in proptest::collection::vec(0u64..=1, 16),
    ) {
        let q = 4;
        let rows_a: Vec<Vec<u64>> = (0..q).map(|i| (0..q).map(|j| bits[i * q + j]).collect()).collect();
        let rows_b: Vec<Vec<u64>> = (0..q)
            .map(|i| (0..q).map(|j| (bits[i * q + j] | extra[i * q + j]).min(1)).collect())
            .collect();
        let a = TransitionMatrix::from_rows(rows_a).unwrap();
        let b = TransitionMatrix::from_rows(rows_b).unwrap();
        prop_assume!(!a.is_zero());
        let ha = topological_entropy(&a).unwrap();
        let hb = topological_entropy(&b).unwrap();
        prop_assert!(a.dominated_by(&b));
        prop_assert!(ha <= hb + 1e-9);
        prop_assert!(ha >= 0.0);
    }
}
