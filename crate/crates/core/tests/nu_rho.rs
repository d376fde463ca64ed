use proptest::prelude::*;
use triangle_forge_core::nu_rho::{nu, rho, weight_f, NuMemo};
use triangle_forge_core::numerics::frac;
use triangle_forge_core::paths::{enumerate_motzkin, motzkin_paths};
use triangle_forge_core::perm::nu_bruteforce;
use triangle_forge_core::{BigInt, Path, Rational, Step};

fn downs(k: usize) -> Vec<Step> {
    vec![Step::Down; k]
}

/// Every Motzkin path of length <= max written as `(l, -1_k)` with `k` maximal.
fn split_paths(max: usize) -> Vec<(Path, usize)> {
    (0..=max)
        .flat_map(motzkin_paths)
        .map(|p| {
            let k = p.trailing_downs();
            let bare = Path::new(p.steps()[..p.len() - k].to_vec());
            (bare, k)
        })
        .collect()
}

fn falling_run(lo: i64, hi: i64) -> BigInt {
    (lo..=hi).map(BigInt::from).product()
}

#[test]
fn memo_agrees_with_brute_force_on_all_words() {
    let mut words = vec![Path::empty()];
    let mut memo = NuMemo::new();
    for _ in 0..6 {
        words = words
            .into_iter()
            .flat_map(|p| [Step::Down, Step::Flat, Step::Up].map(|s| p.concat(&[s])))
            .collect();
        for w in &words {
            assert_eq!(memo.nu(w), nu_bruteforce(w).unwrap(), "{w}");
        }
    }
}

#[test]
fn suffix_rules_on_all_short_paths() {
    let mut memo = NuMemo::new();
    for (bare, k) in split_paths(9) {
        let base = memo.nu(&bare.concat(&downs(k)));
        let flat = memo.nu(&bare.concat(&[Step::Flat]).concat(&downs(k)));
        assert_eq!(flat, &base * (2 * (k + 1)), "{bare} k={k}");
        if k >= 1 {
            let cusp = memo.nu(&bare.concat(&[Step::Up]).concat(&downs(k)));
            let shorter = memo.nu(&bare.concat(&downs(k - 1)));
            // (l, -1_{k-1}) need not be Motzkin; then both sides vanish.
            assert_eq!(cusp, shorter * (k * (k + 1)), "{bare} k={k}");
        }
    }
}

#[test]
fn rho_suffix_products_first_pair() {
    for (bare, k) in split_paths(10) {
        let p = bare.concat(&downs(k));
        let n = p.len() as i64;
        let k = k as i64;
        let r = rho(&bare);
        assert_eq!(
            rho(&bare.concat(&[Step::Flat]).concat(&downs(k as usize))),
            &r * falling_run(2 * n + 5 - k, 2 * n + 5)
        );
        assert_eq!(rho(&p), &r * falling_run(2 * n + 4 - k, 2 * n + 3));
    }
}

#[test]
fn rho_cusp_product_needs_the_shorter_hypothesis() {
    // With (l, 0, -1_{k-1}) of length n the cusp product is (2n+5-k)...(2n+5).
    // Read literally with (l, 0, -1_k) of length n, the path (l, 1, -1_k)
    // ends at height one and the product is (2n+4-k)...(2n+4) instead.
    let mut literal_mismatches = 0;
    for (bare, j) in split_paths(10) {
        // bare ends at height j
        let r = rho(&bare);
        let k = j as i64 + 1;
        let n = (bare.len() + 1 + j) as i64;
        let cusp = bare.concat(&[Step::Up]).concat(&downs(j + 1));
        assert!(cusp.is_motzkin());
        assert_eq!(rho(&cusp), &r * falling_run(2 * n + 5 - k, 2 * n + 5));

        if j >= 1 {
            let k = j as i64;
            let literal = bare.concat(&[Step::Up]).concat(&downs(j));
            if rho(&literal) != &r * falling_run(2 * n + 5 - k, 2 * n + 5) {
                literal_mismatches += 1;
            }
        }
    }
    assert!(literal_mismatches > 0);
}

#[test]
fn rho_ends_in_2n_plus_3() {
    for n in 1..=10 {
        for p in motzkin_paths(n) {
            let prefix = Path::new(p.steps()[..n - 1].to_vec());
            let last: BigInt = rho(&p) / rho(&prefix);
            assert_eq!(last, BigInt::from(2 * n + 3));
        }
    }
}

#[test]
fn small_weight_sums() {
    let sum = |n| -> Rational { enumerate_motzkin(n).unwrap().iter().map(|p| weight_f(p).unwrap()).sum() };
    assert_eq!(sum(1), frac(2, 5));
    assert_eq!(sum(2), frac(17, 105));
}

fn motzkin_path(max_half: usize) -> impl Strategy<Value = Path> {
    // random walk conditioned to stay non-negative, closed with down steps
    prop::collection::vec(-1i64..=1, 0..2 * max_half).prop_map(|raw| {
        let mut h = 0i64;
        let mut v = Vec::new();
        for s in raw {
            let s = if h == 0 && s < 0 { 0 } else { s };
            h += s;
            v.push(s);
        }
        v.extend(std::iter::repeat_n(-1, h as usize));
        Path::from_values(&v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nu_is_positive_on_motzkin_paths(p in motzkin_path(7)) {
        prop_assert!(nu(&p) > BigInt::from(0));
    }

    #[test]
    fn flat_insertion_before_the_tail_doubles_by_k_plus_one(p in motzkin_path(6)) {
        let k = p.trailing_downs();
        let bare = Path::new(p.steps()[..p.len() - k].to_vec());
        let flat = bare.concat(&[Step::Flat]).concat(&downs(k));
        prop_assert_eq!(nu(&flat), nu(&p) * (2 * (k + 1)));
    }

    #[test]
    fn words_ending_up_have_no_preimage(p in motzkin_path(6)) {
        prop_assert_eq!(nu(&p.concat(&[Step::Up])), BigInt::from(0));
    }
}
