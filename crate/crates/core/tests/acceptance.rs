//! Acceptance suite: one test per release criterion, golden values first,
//! then the duality, composite-ring, round-trip, and table-uniqueness
//! property sweeps. Every tolerance is exact.

mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{digits, golden_h, z4_code, CODEWORD, ERROR, RECEIVED, SYNDROME_OF_RECEIVED};
use ringcodes::{
    build_table, decode, enumerate_low_weight, enumerate_vectors, hamming_weight, rows_are_free,
    syndrome, DecodeError, DecodeOutcome, LinearCode, MatrixZm, RingSpec, DEFAULT_COLUMN_SEARCH_CAP,
    DEFAULT_VECTOR_CAP,
};

const TABLE_CAP: u64 = 1 << 24;

fn random_free_code(rng: &mut ChaCha8Rng, m: u64, n: usize, k: usize) -> LinearCode {
    let ring = RingSpec::new(m).unwrap();
    loop {
        let g = MatrixZm::from_fn(k, n, m, |_, _| rng.gen_range(0..m));
        if rows_are_free(&g, &ring) {
            return LinearCode::new(ring, g).unwrap();
        }
    }
}

#[test]
fn criterion_1_golden_control_matrix() {
    let code = z4_code();
    let h = code.control_matrix().unwrap();
    assert_eq!(h.matrix(), &golden_h(), "control matrix differs from the golden fixture");
    println!("PASS criterion 1: control matrix reproduced entry-for-entry");
}

#[test]
fn criterion_2_golden_syndrome() {
    let code = z4_code();
    let h = code.control_matrix().unwrap();
    let s = syndrome(&h, &digits(RECEIVED)).unwrap();
    assert_eq!(s.values(), &SYNDROME_OF_RECEIVED);
    // The transmitted codeword itself has zero syndrome.
    assert!(syndrome(&h, &digits(CODEWORD)).unwrap().is_zero());
    println!("PASS criterion 2: syndrome of the received word is exact");
}

#[test]
fn criterion_3_golden_decode() {
    let code = z4_code();
    let h = code.control_matrix().unwrap();
    let table = build_table(&h, 1, TABLE_CAP).unwrap();
    let outcome = decode(&table, &h, &digits(RECEIVED)).unwrap();
    assert_eq!(
        outcome,
        DecodeOutcome::Corrected { codeword: digits(CODEWORD), error: digits(ERROR) }
    );
    println!("PASS criterion 3: decode recovers the golden error and codeword");
}

#[test]
fn criterion_4_minimal_distance_both_methods() {
    let code = z4_code();
    assert_eq!(code.min_distance_enum(DEFAULT_VECTOR_CAP).unwrap(), 3);
    let h = code.control_matrix().unwrap();
    assert_eq!(h.min_distance_columns(DEFAULT_COLUMN_SEARCH_CAP).unwrap(), 3);
    println!("PASS criterion 4: d = 3 by enumeration and by column search");
}

#[test]
fn criterion_5_duality_over_local_rings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0501);
    for m in [2u64, 3, 4, 5, 8, 9] {
        let mut generated = 0;
        for n in 2..=4usize {
            for k in 1..n {
                for _ in 0..35 {
                    let code = random_free_code(&mut rng, m, n, k);
                    let dual = code.dual_brute_force(DEFAULT_VECTOR_CAP).unwrap();
                    assert_eq!(
                        dual.len() as u128,
                        (m as u128).pow((n - k) as u32),
                        "dual cardinality off for m={m} n={n} k={k}"
                    );
                    assert!(
                        code.biorthogonality_check(DEFAULT_VECTOR_CAP).unwrap(),
                        "double dual differs from the code for m={m} n={n} k={k}"
                    );
                    generated += 1;
                }
            }
        }
        assert!(generated >= 200, "only {generated} codes generated for m={m}");
    }
    println!("PASS criterion 5: |dual| = m^(n-k) and double dual = code on all samples");
}

#[test]
fn criterion_6_composite_rings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0601);
    for (m, samples) in [(6u64, 20), (12u64, 6)] {
        for n in 2..=4usize {
            for k in 1..n {
                for _ in 0..samples {
                    let code = random_free_code(&mut rng, m, n, k);
                    let h = code.control_matrix().unwrap();
                    assert!(
                        code.verify_control(h.matrix()),
                        "lifted control matrix fails verification for m={m} n={n} k={k}"
                    );
                    // Kernel characterization: H*x^t = 0 exactly on codewords.
                    let codewords = code.codewords(DEFAULT_VECTOR_CAP).unwrap();
                    for x in enumerate_vectors(m, n) {
                        let in_kernel =
                            h.matrix().mul_col_vec(&x).unwrap().iter().all(|&s| s == 0);
                        assert_eq!(
                            in_kernel,
                            codewords.contains(&x),
                            "kernel mismatch for m={m} n={n} k={k} x={x:?}"
                        );
                    }
                    assert!(
                        code.biorthogonality_check(DEFAULT_VECTOR_CAP).unwrap(),
                        "double dual differs from the code for m={m} n={n} k={k}"
                    );
                }
            }
        }
    }
    println!("PASS criterion 6: CRT-lifted control matrices verified on composite rings");
}

#[test]
fn criterion_7_roundtrip_decoding() {
    // Exhaustive sweep over every free generator matrix in a small range,
    // keeping the codes whose distance supports correction (d >= 3).
    let mut codes_with_capacity = 0;
    for m in [2u64, 3, 4] {
        let ring = RingSpec::new(m).unwrap();
        for n in 3..=4usize {
            for k in 1..=2usize.min(n - 1) {
                for flat in enumerate_vectors(m, k * n) {
                    let rows: Vec<Vec<u64>> = flat.chunks(n).map(|c| c.to_vec()).collect();
                    let g = MatrixZm::from_rows(m, &rows).unwrap();
                    if !rows_are_free(&g, &ring) {
                        continue;
                    }
                    let code = LinearCode::new(ring.clone(), g).unwrap();
                    let d = code.min_distance_enum(DEFAULT_VECTOR_CAP).unwrap();
                    if d < 3 {
                        continue;
                    }
                    codes_with_capacity += 1;
                    let t = (d - 1) / 2;
                    let h = code.control_matrix().unwrap();
                    let table = build_table(&h, t, TABLE_CAP).unwrap();
                    for u in enumerate_vectors(m, k) {
                        let word = code.encode(&u).unwrap();
                        for error in enumerate_low_weight(n, t, code.ring()) {
                            let received: Vec<u64> = word
                                .iter()
                                .zip(&error)
                                .map(|(&a, &b)| (a + b) % m)
                                .collect();
                            assert_eq!(
                                decode(&table, &h, &received).unwrap(),
                                DecodeOutcome::Corrected {
                                    codeword: word.clone(),
                                    error: error.clone()
                                },
                                "roundtrip failed for m={m} G={:?} u={u:?} e={error:?}",
                                code.generator()
                            );
                        }
                    }
                }
            }
        }
    }
    assert!(codes_with_capacity > 0, "the sweep produced no codes with d >= 3");

    // Randomized trials on the reference (20,10)-code, fixed seed.
    let code = z4_code();
    let h = code.control_matrix().unwrap();
    let table = build_table(&h, 1, TABLE_CAP).unwrap();
    let (n, k, m) = (code.length(), code.rank(), 4u64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0701);
    for _ in 0..10_000 {
        let u: Vec<u64> = (0..k).map(|_| rng.gen_range(0..m)).collect();
        let word = code.encode(&u).unwrap();
        let weight = rng.gen_range(0..=1);
        let mut error = vec![0u64; n];
        if weight == 1 {
            error[rng.gen_range(0..n)] = rng.gen_range(1..m);
        }
        let received: Vec<u64> =
            word.iter().zip(&error).map(|(&a, &b)| (a + b) % m).collect();
        assert_eq!(
            decode(&table, &h, &received).unwrap(),
            DecodeOutcome::Corrected { codeword: word, error }
        );
    }
    println!("PASS criterion 7: exhaustive and randomized roundtrips recover (u, e) exactly");
}

#[test]
fn criterion_8_table_uniqueness_and_overreach() {
    // At the true capacity t = 1 the reference code's table holds exactly
    // 1 + 20*(4-1) = 61 pairwise distinct syndromes.
    let code = z4_code();
    let h = code.control_matrix().unwrap();
    let table = build_table(&h, 1, TABLE_CAP).unwrap();
    assert_eq!(table.len(), 61);
    let keys: BTreeSet<_> = table.iter().map(|(s, _)| s.clone()).collect();
    assert_eq!(keys.len(), 61);
    for (_, error) in table.iter() {
        assert!(hamming_weight(error) <= 1);
    }
    // Beyond capacity the construction must fail loudly: t = 2 on the
    // d = 3 reference code...
    assert!(matches!(
        build_table(&h, 2, TABLE_CAP),
        Err(DecodeError::DuplicateSyndrome { t: 2, .. })
    ));
    // ...and t = 1 on a d = 2 code.
    let ring = RingSpec::new(4).unwrap();
    let g = MatrixZm::from_rows(4, &[vec![1, 1]]).unwrap();
    let small = LinearCode::new(ring, g).unwrap();
    let h_small = small.control_matrix().unwrap();
    assert!(matches!(
        build_table(&h_small, 1, TABLE_CAP),
        Err(DecodeError::DuplicateSyndrome { t: 1, .. })
    ));
    println!("PASS criterion 8: table keys are exactly counted and overreach fails loudly");
}
