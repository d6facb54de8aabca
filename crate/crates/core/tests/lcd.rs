mod common;

use lcdag_core::lcd::{
    check_condition_3_3, check_condition_3_4, count_s_i, count_t_u, find_lcd_scaling, union_bound_audit, Lambda,
    SearchMode, Verdict,
};
use lcdag_core::{Error, Field, IndexSet, LinearCode};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{all_codes, direct_s_i, direct_t_u, direct_union, is_zero, nonzero_vectors};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn small_code(max_n: usize) -> impl Strategy<Value = LinearCode> {
    (1u32..=3, 1..=max_n, any::<u64>()).prop_flat_map(|(m, n, seed)| {
        (0..=n).prop_map(move |k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            LinearCode::random(Field::with_degree(m).unwrap(), n, k, &mut rng)
        })
    })
}

/// Brute-force cost: (q-1)^n candidates times (q^k)^passes.
fn work(code: &LinearCode, passes: u32) -> u128 {
    let q = code.field().order() as u128;
    (q - 1).pow(code.n() as u32) * q.pow(code.k() as u32 * passes)
}

proptest! {
    #![proptest_config(config(80))]

    #[test]
    fn support_counts_partition_the_code(code in small_code(7)) {
        prop_assume!(code.size().is_some_and(|s| s <= 1 << 14));
        let words = code.codewords(1 << 16).unwrap();
        let mut total = BigUint::zero();
        for bits in 1..1u64 << code.n() {
            let set = IndexSet(bits);
            let fast = count_s_i(&code, set).unwrap();
            prop_assert_eq!(&fast, &BigUint::from(direct_s_i(&words, set)));
            total += fast;
        }
        prop_assert_eq!(total, BigUint::from(words.len() - 1));
    }

    #[test]
    fn t_counts_match_enumeration(code in small_code(5)) {
        let f = *code.field();
        prop_assume!(work(&code, 1) <= 1 << 16);
        let candidates = nonzero_vectors(&f, code.n());
        for u in code.codewords(1 << 16).unwrap() {
            if is_zero(&u) {
                continue;
            }
            let t = count_t_u(&code, &u).unwrap();
            prop_assert_eq!(&t.t_count, &BigUint::from(direct_t_u(&code, &candidates, &u)));
            let free = BigUint::from(f.order() - 1).pow((code.n() - t.w) as u32);
            prop_assert!((&t.t_count % &free).is_zero());
            prop_assert_eq!(t.t_count, free * t.r_count);
        }
    }

    #[test]
    fn union_audit_matches_enumeration(code in small_code(4)) {
        prop_assume!(work(&code, 2) <= 1 << 18);
        let audit = union_bound_audit(&code).unwrap();
        prop_assert_eq!(audit.union, direct_union(&code));
        prop_assert!(audit.union <= audit.sum_t);
        prop_assert_eq!(audit.total, (code.field().order() as u128 - 1).pow(code.n() as u32));
    }

    #[test]
    fn random_search_certificates_verify(code in small_code(6), seed in any::<u64>()) {
        match find_lcd_scaling(&code, SearchMode::Randomized { seed }, 2000) {
            Ok(cert) => {
                prop_assert!(cert.verified);
                prop_assert!(code.scale(&cert.a).unwrap().is_lcd());
                prop_assert!(cert.iterations >= 1 && cert.iterations <= 2000);
            }
            Err(Error::SearchInconclusive { iterations }) => prop_assert_eq!(iterations, 2000),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }
}

#[test]
fn scaling_exists_iff_union_leaves_room() {
    let f4 = Field::with_order(4).unwrap();
    for n in 1..=3 {
        for k in 0..=2.min(n) {
            for code in all_codes(&f4, n, k) {
                let union = direct_union(&code);
                let total = 3u128.pow(n as u32);
                let direct_lcd = nonzero_vectors(&f4, n).iter().any(|a| code.scale(a).unwrap().is_lcd());
                // a * C is LCD exactly when a lies outside every T_u.
                assert_eq!(direct_lcd, union < total, "{:?}", code.generator());
                match find_lcd_scaling(&code, SearchMode::Exhaustive, u64::MAX) {
                    Ok(cert) => {
                        assert!(direct_lcd);
                        assert!(code.scale(&cert.a).unwrap().is_lcd());
                    }
                    Err(Error::NoLcdScaling { candidates }) => {
                        assert!(!direct_lcd);
                        assert_eq!(candidates, total);
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
}

#[test]
fn exhaustive_search_is_thread_independent() {
    let f8 = Field::with_order(8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let code = LinearCode::random(f8, 6, 3, &mut rng);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| find_lcd_scaling(&code, SearchMode::Exhaustive, u64::MAX));
        let b = four.install(|| find_lcd_scaling(&code, SearchMode::Exhaustive, u64::MAX));
        assert_eq!(a, b);
    }
}

/// Sign of q^n times the left-hand side, with γ = 2^{1+n+λ n log₂q} exact
/// because λ n log₂q is an integer for the parameters used here.
fn direct_sign(n: u64, k: u64, d: u64, q: u64, gamma_exp: u64) -> Verdict {
    let q = BigInt::from(q);
    let qm1: BigInt = &q - 1;
    let two = BigInt::from(2);
    let gamma = two.pow((1 + n + gamma_exp) as u32);
    let nd = BigInt::from(n - d);
    let pow2n = two.pow(n as u32);
    let lhs = q.pow((n - k) as u32) * qm1.pow(n as u32)
        - &nd * &gamma * &pow2n * q.pow(k as u32) * qm1.pow(n as u32)
        - &nd * &pow2n * &gamma * &gamma * q.pow(n as u32) * qm1.pow((n - d) as u32);
    if lhs.is_positive() {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn length_condition_signs_agree(n in 1u64..=64, kf in 0.0f64..1.0, df in 0.0f64..1.0, tiny in any::<bool>()) {
        // q = 16 with λ = 1/4, or 1/8 at even n, keeps λ n log₂q integral.
        let k = (kf * n as f64) as u64;
        let d = 1 + (df * n as f64) as u64 % n;
        let (lambda, gamma_exp) = if tiny { (Lambda::new(1, 8), n / 2) } else { (Lambda::new(1, 4), n) };
        prop_assume!(!tiny || n % 2 == 0);
        let c = check_condition_3_3(n, k, d, 16, lambda).unwrap();
        let want = if n == d { Verdict::Holds } else { direct_sign(n, k, d, 16, gamma_exp) };
        prop_assert_eq!(c.exact, Some(want));
        if c.log_domain != Verdict::Indeterminate {
            prop_assert_eq!(c.log_domain, want);
        }
    }
}

#[test]
fn length_condition_tracks_the_asymptotic_margins() {
    // Fixed R and δ: log₂A and log₂B grow linearly in n with the slopes
    // (1 - 2R - λ)log₂q - 2 and δlog₂(q-1) - Rlog₂q - 3 - 2λlog₂q.
    let (q, lam, r, delta) = (1024u64, 1.0 / 31.0, 0.2, 0.75);
    let e = 10.0;
    let slope_a = (1.0 - 2.0 * r - lam) * e - 2.0;
    let slope_b = delta * 1023f64.log2() - r * e - 3.0 - 2.0 * lam * e;
    for n in [10_000u64, 100_000, 1_000_000] {
        let k = (r * n as f64) as u64;
        let d = (delta * n as f64) as u64;
        let c = check_condition_3_3(n, k, d, q, Lambda::new(1, 31)).unwrap();
        assert!((c.log2_a / n as f64 - slope_a).abs() < 1e-2, "{}", c.log2_a / n as f64);
        assert!((c.log2_b / n as f64 - slope_b).abs() < 1e-2, "{}", c.log2_b / n as f64);
        assert_eq!(c.verdict(), Verdict::Holds);
    }
}

#[test]
fn counting_condition_on_small_codes() {
    // With λ = 1/2 over GF(4), γ_q(n) = 2·4^n exactly.
    let f4 = Field::with_order(4).unwrap();
    for code in all_codes(&f4, 4, 2) {
        let report = check_condition_3_4(&code, Lambda::new(1, 2), 1 << 20).unwrap();
        assert!(report.exhaustive);
        assert_eq!(report.reports.len(), 15);
        let words = code.codewords(1 << 8).unwrap();
        let dual_words = code.dual().codewords(1 << 8).unwrap();
        for r in &report.reports {
            assert_eq!(r.gamma_log2, 9.0);
            assert_eq!(r.s_count, BigUint::from(direct_s_i(&words, r.set)));
            assert_eq!(r.s_dual_count, BigUint::from(direct_s_i(&dual_words, r.set)));
        }
        assert_eq!(report.pass, report.reports.iter().all(|r| r.bound_ok()));
    }
}
