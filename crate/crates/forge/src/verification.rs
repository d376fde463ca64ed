//! Cross-method verification: the exact and Monte Carlo values of the `xi`
//! integral, and the suite that re-runs every module invariant at a given depth.

use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use triangle_forge_core::constructions::{self as cons, named_triangle, NamedTriangle, TriangleId};
use triangle_forge_core::nu_rho::{rho, weight_f_with, NuMemo};
use triangle_forge_core::numerics::{format_rational, frac, int};
use triangle_forge_core::paths::{
    binomial, catalan_number, d_count, enumerate_dyck, enumerate_motzkin_with_cap, factorial, motzkin_number,
    suffix_counts_with_cap,
};
use triangle_forge_core::perm::{
    beta_bruteforce_with_cap, entringer_row_bruteforce_with_cap, permutations, phi, phi_preimage_counts_with_cap,
};
use triangle_forge_core::{BigInt, Error, Path, Rational, Result, Step, DEFAULT_ENUMERATION_CAP};

/// `(1/6) sum_{p in M_{n-2}} nu(p)/rho(p)`, and `1/6` for `n = 2`.
pub fn exact_xi_integral(n: usize) -> Result<Rational> {
    exact_xi_integral_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn exact_xi_integral_with_cap(n: usize, cap: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::Domain(format!("xi integral needs n >= 2, got {n}")));
    }
    if n == 2 {
        return Ok(frac(1, 6));
    }
    let mut memo = NuMemo::new();
    let mut sum = int(0);
    for p in enumerate_motzkin_with_cap(n - 2, cap)? {
        sum += weight_f_with(&mut memo, &p)?;
    }
    Ok(sum / int(6))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Samples per block. Each block seeks its own position in the key stream,
/// so blocks can be drawn in any order by any number of workers.
pub const MC_BLOCK: u64 = 4096;

/// Uniform on the open interval `(0, 1)`.
fn open_unit(u: u64) -> f64 {
    ((u >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
}

#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

fn block_sums(n: usize, seed: u64, start: u64, len: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // one u64 is two 32-bit words
    rng.set_word_pos(u128::from(start) * n as u128 * 2);
    let mut x = vec![0.0f64; n];
    let (mut s1, mut s2) = (Kahan::default(), Kahan::default());
    for _ in 0..len {
        for v in x.iter_mut() {
            *v = open_unit(rng.next_u64());
        }
        let xi: f64 = (0..n).map(|i| x[i].min(x[(i + 1) % n])).product();
        s1.add(xi);
        s2.add(xi * xi);
    }
    (s1.sum, s2.sum)
}

/// Mean and standard error of `prod_i min(x_i, x_{i+1 mod n})` over uniform
/// points of the open unit cube. Point `i` uses words `2ni .. 2n(i+1)` of the
/// ChaCha8 stream keyed by `seed`, so the result depends on `(n, samples, seed)` only.
pub fn mc_xi_integral(n: usize, samples: u64, seed: u64) -> Result<McEstimate> {
    if n < 2 {
        return Err(Error::Domain(format!("xi integral needs n >= 2, got {n}")));
    }
    if samples < 100 {
        return Err(Error::Domain(format!("need at least 100 samples, got {samples}")));
    }
    let blocks = samples.div_ceil(MC_BLOCK);
    let partial: Vec<(f64, f64)> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let start = b * MC_BLOCK;
            block_sums(n, seed, start, MC_BLOCK.min(samples - start))
        })
        .collect();
    let (mut s1, mut s2) = (Kahan::default(), Kahan::default());
    for (a, b) in partial {
        s1.add(a);
        s2.add(b);
    }
    let m = samples as f64;
    let mean = s1.sum / m;
    let var = ((s2.sum - m * mean * mean) / (m - 1.0)).max(0.0);
    Ok(McEstimate {
        estimate: mean,
        standard_error: var.sqrt() / m.sqrt(),
        samples,
        seed,
    })
}

/// Same as [`mc_xi_integral`] on a dedicated pool of `workers` threads.
pub fn mc_xi_integral_on(n: usize, samples: u64, seed: u64, workers: usize) -> Result<McEstimate> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Domain(e.to_string()))?;
    pool.install(|| mc_xi_integral(n, samples, seed))
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct VerifyReport {
    pub records: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.pass).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.records).expect("plain records serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,parameters,expected,actual,pass,elapsed_ms\n");
        for r in &self.records {
            let q = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
            out.push_str(&format!(
                "{},{},{},{},{},{:.3}\n",
                q(&r.name),
                q(&r.parameters),
                q(&r.expected),
                q(&r.actual),
                r.pass,
                r.elapsed_ms
            ));
        }
        out
    }

    pub fn to_table(&self) -> String {
        let head = ["check", "parameters", "expected", "actual", "result", "ms"];
        let rows: Vec<[String; 6]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.name.clone(),
                    r.parameters.clone(),
                    r.expected.clone(),
                    r.actual.clone(),
                    if r.pass { "PASS" } else { "FAIL" }.to_string(),
                    format!("{:.1}", r.elapsed_ms),
                ]
            })
            .collect();
        let mut w = head.map(str::len);
        for r in &rows {
            for (i, c) in r.iter().enumerate() {
                w[i] = w[i].max(c.len());
            }
        }
        let line = |cells: [&str; 6]| -> String {
            let mut s = String::new();
            for (i, c) in cells.iter().enumerate() {
                if i == 5 {
                    s.push_str(&format!("{c:>width$}", width = w[i]));
                } else {
                    s.push_str(&format!("{c:<width$}  ", width = w[i]));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(head);
        for r in &rows {
            out.push_str(&line([&r[0], &r[1], &r[2], &r[3], &r[4], &r[5]]));
        }
        out.push_str(&format!("{} checks, {} failed\n", self.records.len(), self.failures()));
        out
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub depth: u8,
    pub seed: u64,
    pub samples: u64,
    /// Adds a check that always fails; exercises failure reporting.
    pub inject_failure: bool,
}

impl SuiteOptions {
    pub fn new(depth: u8) -> Self {
        SuiteOptions {
            depth,
            seed: 20_240_601,
            samples: 100_000,
            inject_failure: false,
        }
    }

    /// Largest path length checked.
    pub fn max_n(&self) -> usize {
        4 + 2 * self.depth as usize
    }

    /// Largest symmetric group swept.
    pub fn max_perm(&self) -> usize {
        self.max_n() + 1
    }
}

struct Verdict {
    expected: String,
    actual: String,
    pass: bool,
}

type Outcome = std::result::Result<Verdict, String>;

struct Check {
    name: String,
    parameters: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

fn check(
    name: impl Into<String>,
    parameters: impl Into<String>,
    run: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Check {
    Check {
        name: name.into(),
        parameters: parameters.into(),
        run: Box::new(run),
    }
}

/// Expected/actual pair for a check that compares one value.
fn value<T: ToString>(expected: T, actual: T) -> Outcome {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    Ok(Verdict {
        pass: expected == actual,
        expected,
        actual,
    })
}

/// A check over many cases: "ok" or the first mismatch.
fn all(cases: impl IntoIterator<Item = std::result::Result<(), String>>) -> Outcome {
    let expected = "all cases agree".to_string();
    let mut count = 0usize;
    for c in cases {
        if let Err(actual) = c {
            return Ok(Verdict {
                expected,
                actual,
                pass: false,
            });
        }
        count += 1;
    }
    Ok(Verdict {
        actual: format!("{count} cases agree"),
        expected,
        pass: true,
    })
}

fn same<T: PartialEq + std::fmt::Debug>(what: String, a: T, b: T) -> std::result::Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a:?} != {b:?}"))
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn rat_rows(id: TriangleId, rows: usize) -> std::result::Result<Vec<Vec<String>>, String> {
    match named_triangle(id, rows).map_err(err)? {
        NamedTriangle::Rational(t) => Ok(t
            .rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect()),
        _ => Err("not a rational triangle".into()),
    }
}

fn golden(id: TriangleId, want: &'static [&'static [i64]]) -> Check {
    check(
        format!("{} display", id.name()),
        format!("rows={}", want.len()),
        move || {
            let got: Vec<String> = rat_rows(id, want.len())?.iter().map(|r| r.join(" ")).collect();
            let want: Vec<String> = want
                .iter()
                .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            value(want.join(" / "), got.join(" / "))
        },
    )
}

fn q(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

fn all_words(n: usize) -> Vec<Path> {
    let mut out = vec![Path::empty()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| [Step::Down, Step::Flat, Step::Up].map(|s| p.concat(&[s])))
            .collect();
    }
    out
}

fn checks(opts: &SuiteOptions) -> Vec<Check> {
    let n_max = opts.max_n();
    let p_max = opts.max_perm();
    let cap = n_max.max(DEFAULT_ENUMERATION_CAP);
    let mut v = vec![
        golden(
            TriangleId::Pascal,
            &[
                &[1],
                &[1, 1],
                &[1, 2, 1],
                &[1, 3, 3, 1],
                &[1, 4, 6, 4, 1],
                &[1, 5, 10, 10, 5, 1],
            ],
        ),
        golden(
            TriangleId::MotzkinTri,
            &[
                &[1],
                &[1, 1],
                &[2, 2, 1],
                &[4, 5, 3, 1],
                &[9, 12, 9, 4, 1],
                &[21, 30, 25, 14, 5, 1],
            ],
        ),
        golden(
            TriangleId::CatalanTri,
            &[
                &[1],
                &[1, 1],
                &[2, 2, 1],
                &[5, 5, 3, 1],
                &[14, 14, 9, 4, 1],
                &[42, 42, 28, 14, 5, 1],
            ],
        ),
        golden(
            TriangleId::Thm11,
            &[
                &[1],
                &[2, 6],
                &[16, 48, 72],
                &[272, 816, 1440, 1440],
                &[7936, 23808, 44352, 57600, 43200],
            ],
        ),
        golden(
            TriangleId::Cor24,
            &[
                &[1],
                &[1, 1],
                &[2, 1, 1],
                &[4, 2, 2, 1],
                &[9, 4, 5, 2, 1],
                &[21, 9, 12, 5, 3, 1],
            ],
        ),
        golden(
            TriangleId::Entringer54,
            &[
                &[1],
                &[1, 1],
                &[1, 2, 2],
                &[2, 4, 5, 5],
                &[5, 10, 14, 16, 16],
                &[16, 32, 46, 56, 61, 61],
            ],
        ),
    ];

    for (n, want) in [(2usize, "1/90"), (3, "1/945"), (4, "1/9450"), (1, "1/6")] {
        v.push(check(
            format!("zeta({}) coefficient = {want}", 2 * n),
            format!("n={n}"),
            move || {
                let got = cons::zeta_even_coefficient(n).map_err(err)?;
                value(want.to_string(), format_rational(&got))
            },
        ));
    }

    for n in 1..=n_max {
        v.push(check(
            format!("sum nu over M_{n} = {}!", n + 1),
            format!("n={n}"),
            move || {
                let mut memo = NuMemo::new();
                let mut s = BigInt::from(0);
                for p in enumerate_motzkin_with_cap(n, cap).map_err(err)? {
                    s += memo.nu(&p);
                }
                value(factorial(n + 1), s)
            },
        ));
    }

    v.push(check("motzkin enumeration sizes", format!("n<={n_max}"), move || {
        all((0..=n_max).map(|n| {
            let len = enumerate_motzkin_with_cap(n, cap).map_err(err)?.len();
            same(format!("n={n}"), BigInt::from(len), motzkin_number(n))
        }))
    }));
    v.push(check(
        "dyck enumeration sizes",
        format!("2n<={}", 2 * n_max),
        move || {
            all((0..=n_max).map(|n| {
                let len = enumerate_dyck(2 * n).map_err(err)?.len();
                same(format!("n={n}"), BigInt::from(len), catalan_number(n))
            }))
        },
    ));
    v.push(check("zero counts vs enumeration", format!("n<={n_max}"), move || {
        all((0..=n_max).flat_map(|n| {
            let paths = enumerate_motzkin_with_cap(n, cap).unwrap_or_default();
            (0..=n)
                .map(|k| {
                    let direct = paths.iter().filter(|p| p.count_zeros() == k).count();
                    same(
                        format!("n={n} k={k}"),
                        d_count(n, k).map_err(err)?,
                        BigInt::from(direct),
                    )
                })
                .collect::<Vec<_>>()
        }))
    }));
    v.push(check("motzkin from catalan", "n<=30", || {
        all((0..=30).map(|n| {
            let s: BigInt = (0..=n / 2).map(|k| binomial(n, 2 * k) * catalan_number(k)).sum();
            same(format!("n={n}"), s, motzkin_number(n))
        }))
    }));
    v.push(check("suffix classes partition", format!("n<={n_max}"), move || {
        all((0..n_max).map(|n| {
            let s: BigInt = suffix_counts_with_cap(n, cap).map_err(err)?.into_iter().sum();
            same(format!("n={n}"), s, motzkin_number(n + 1))
        }))
    }));
    v.push(check(
        "insertion and contraction stay motzkin",
        format!("n<={n_max}"),
        move || {
            all((0..=n_max).flat_map(|n| {
                enumerate_motzkin_with_cap(n, cap)
                    .unwrap_or_default()
                    .into_iter()
                    .map(move |p| {
                        for i in 0..=n {
                            if !p.insert_flat(i).is_motzkin() {
                                return Err(format!("insert at {i} in {p}"));
                            }
                        }
                        for i in 0..n.saturating_sub(1) {
                            if let Some(q) = p.flatten_cusp(i) {
                                if !q.is_motzkin() {
                                    return Err(format!("contract at {i} in {p}"));
                                }
                            }
                        }
                        Ok(())
                    })
            }))
        },
    ));

    v.push(check(
        "nu memo vs brute force on all words",
        format!("n<={n_max} S_{p_max}"),
        move || {
            let mut memo = NuMemo::new();
            let mut cases = Vec::new();
            for n in 1..=n_max {
                let counts = phi_preimage_counts_with_cap(n + 1, p_max).map_err(err)?;
                for w in all_words(n) {
                    let brute = BigInt::from(counts.get(&w).copied().unwrap_or(0));
                    let positive = brute > BigInt::from(0);
                    cases.push(same(format!("{w}"), memo.nu(&w), brute));
                    cases.push(same(format!("image {w}"), positive, w.is_motzkin()));
                }
            }
            all(cases)
        },
    ));
    v.push(check("nu suffix rules", format!("n<={n_max}"), move || {
        let mut memo = NuMemo::new();
        let mut cases = Vec::new();
        for n in 0..n_max {
            for p in enumerate_motzkin_with_cap(n, cap).map_err(err)? {
                let k = p.trailing_downs();
                let bare = Path::new(p.steps()[..p.len() - k].to_vec());
                let d = vec![Step::Down; k];
                let flat = memo.nu(&bare.concat(&[Step::Flat]).concat(&d));
                cases.push(same(format!("flat {p}"), flat, memo.nu(&p) * (2 * (k + 1))));
                if k >= 1 {
                    let cusp = memo.nu(&bare.concat(&[Step::Up]).concat(&d));
                    let shorter = memo.nu(&bare.concat(&d[1..]));
                    cases.push(same(format!("cusp {p}"), cusp, shorter * (k * (k + 1))));
                }
            }
        }
        all(cases)
    }));
    v.push(check("rho suffix products", format!("n<={n_max}"), move || {
        let run = |lo: i64, hi: i64| -> BigInt { (lo..=hi).map(BigInt::from).product() };
        let mut cases = Vec::new();
        for n in 0..=n_max {
            for p in enumerate_motzkin_with_cap(n, cap).map_err(err)? {
                let k = p.trailing_downs();
                let bare = Path::new(p.steps()[..p.len() - k].to_vec());
                let (nn, kk) = (n as i64, k as i64);
                let r = rho(&bare);
                let flat = bare.concat(&[Step::Flat]).concat(&vec![Step::Down; k]);
                cases.push(same(
                    format!("flat {p}"),
                    rho(&flat),
                    &r * run(2 * nn + 5 - kk, 2 * nn + 5),
                ));
                cases.push(same(
                    format!("bare {p}"),
                    rho(&p),
                    &r * run(2 * nn + 4 - kk, 2 * nn + 3),
                ));
                let cusp = bare.concat(&[Step::Up]).concat(&vec![Step::Down; k + 1]);
                let kc = kk + 1;
                let nc = nn + 1;
                cases.push(same(
                    format!("cusp {p}"),
                    rho(&cusp),
                    &r * run(2 * nc + 5 - kc, 2 * nc + 5),
                ));
            }
        }
        all(cases)
    }));
    v.push(check("weight sums over M_1 and M_2", "", || {
        let mut memo = NuMemo::new();
        let mut sums = Vec::new();
        for n in 1..=2 {
            let mut s = int(0);
            for p in enumerate_motzkin_with_cap(n, 2).map_err(err)? {
                s += weight_f_with(&mut memo, &p).map_err(err)?;
            }
            sums.push(format_rational(&s));
        }
        value("2/5 17/105".to_string(), sums.join(" "))
    }));

    v.push(check(
        "dyck images are the alternating permutations",
        format!("S_2n+1 <= S_{p_max}"),
        move || {
            let mut cases = Vec::new();
            let mut n = 1;
            while 2 * n < p_max {
                for s in permutations(2 * n + 1) {
                    let w = phi(&s).map_err(err)?;
                    let dyck = w.is_motzkin() && w.count_zeros() == 0;
                    let alt = triangle_forge_core::perm::is_alternating(&s) && s.images()[0] > s.images()[1];
                    cases.push(same(format!("{s}"), dyck, alt));
                }
                n += 1;
            }
            all(cases)
        },
    ));
    v.push(check(
        "dyck preimages count zigzag numbers",
        format!("S_2n+1 <= S_{p_max}"),
        move || {
            let mut memo = NuMemo::new();
            all((0..).take_while(|n| 2 * n < p_max).map(|n| {
                let s: BigInt = enumerate_dyck(2 * n).map_err(err)?.iter().map(|p| memo.nu(p)).sum();
                same(
                    format!("n={n}"),
                    s,
                    beta_bruteforce_with_cap(2 * n + 1, p_max).map_err(err)?,
                )
            }))
        },
    ));

    v.push(check(
        "entringer dp vs boustrophedon vs brute force",
        format!("n<={n_max}"),
        move || {
            let dp = cons::entringer_triangle(n_max);
            let bous = cons::entringer_triangle_boustrophedon(n_max);
            let mut cases = vec![same("boustrophedon".to_string(), &dp, &bous)];
            for n in 0..=n_max {
                if n < p_max {
                    cases.push(same(
                        format!("row {n}"),
                        dp[n].clone(),
                        entringer_row_bruteforce_with_cap(n, p_max).map_err(err)?,
                    ));
                }
            }
            all(cases)
        },
    ));
    v.push(check(
        "entringer triangle by matrices",
        format!("n<={n_max}"),
        move || {
            let t = named_triangle(TriangleId::Entringer54, n_max + 1).map_err(err)?;
            let t = t.as_rational().expect("rational id");
            all((0..=n_max).flat_map(|n| {
                (0..=n).map(move |m| {
                    same(
                        format!("({n},{m})"),
                        t.entry(n, m).clone(),
                        q(cons::entringer(n + 1, m + 1).unwrap()),
                    )
                })
            }))
        },
    ));
    v.push(check(
        "secant/tangent rows and matrix identity",
        format!("n<={n_max}"),
        move || {
            let rows = cons::secant_tangent_rows(n_max);
            let mut cases = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                let n = i + 1;
                cases.push(same(format!("first {n}"), r[0].clone(), q(cons::secant_number(n - 1))));
                cases.push(same(
                    format!("last {n}"),
                    r[r.len() - 1].clone(),
                    q(cons::tangent_number(n).map_err(err)?),
                ));
            }
            for n in 1..=n_max {
                let prod = cons::entringer_seq_matrix(2 * n - 1)
                    .mul(&cons::entringer_seq_matrix(2 * n))
                    .map_err(err)?;
                cases.push(same(
                    format!("identity {n}"),
                    prod,
                    cons::secant_tangent_matrix(2 * n - 1),
                ));
            }
            all(cases)
        },
    ));
    v.push(check("interleaved entringer rows", format!("n<={n_max}"), move || {
        let t = named_triangle(TriangleId::Entringer56, n_max + 1).map_err(err)?;
        let t = t.as_rational().expect("rational id");
        let mut cases = Vec::new();
        for n in 0..=n_max {
            let e = |k: usize| q(cons::entringer(n + 1, k).unwrap());
            for (m, x) in t.row(n).iter().enumerate() {
                let want = if m % 2 == 0 { e(n + 1 - m / 2) } else { e(m / 2 + 1) };
                cases.push(same(format!("({n},{m})"), x.clone(), want));
            }
        }
        all(cases)
    }));
    v.push(check("secant numbers", "n<=4", || {
        let got: Vec<String> = (0..5).map(|n| cons::secant_number(n).to_string()).collect();
        value("1 1 5 61 1385".to_string(), got.join(" "))
    }));

    v.push(check(
        "engine vs enumeration (f = 1, f = nu)",
        format!("n<={n_max}"),
        move || {
            let count = rat_rows(TriangleId::Cor24, n_max + 1)?;
            let nu_t = rat_rows(TriangleId::Cor46, n_max + 1)?;
            let mut cases = Vec::new();
            for n in 0..=n_max {
                cases.push(same(
                    format!("count {n}"),
                    count[n][0].clone(),
                    motzkin_number(n).to_string(),
                ));
                cases.push(same(
                    format!("nu {n}"),
                    nu_t[n][0].clone(),
                    factorial(n + 1).to_string(),
                ));
                if n < n_max {
                    let want: Vec<String> = suffix_counts_with_cap(n, cap)
                        .map_err(err)?
                        .iter()
                        .map(|c| c.to_string())
                        .collect();
                    cases.push(same(format!("classes {n}"), count[n].clone(), want));
                }
            }
            all(cases)
        },
    ));
    v.push(check("catalan triangle closed form and row rule", "n<=20", || {
        let t = rat_rows(TriangleId::CatalanTri, 22)?;
        let mut cases = Vec::new();
        for n in 0..=20 {
            for m in 0..=n {
                cases.push(same(
                    format!("({n},{m})"),
                    t[n][m].clone(),
                    cons::catalan_triangle_entry(n, m).to_string(),
                ));
            }
        }
        let t = named_triangle(TriangleId::CatalanTri, 22).map_err(err)?;
        let t = t.as_rational().expect("rational id");
        for n in 0..=20 {
            for m in 0..=n + 1 {
                let s: Rational = t.row(n)[m.saturating_sub(1)..=n].iter().sum();
                cases.push(same(format!("rule ({n},{m})"), t.entry(n + 1, m).clone(), s));
            }
        }
        all(cases)
    }));
    v.push(check("pascal and motzkin triangles", "n<=20", || {
        let p = rat_rows(TriangleId::Pascal, 21)?;
        let m = rat_rows(TriangleId::MotzkinTri, 21)?;
        all((0..=20).flat_map(|n| {
            let mut c: Vec<_> = (0..=n)
                .map(|k| same(format!("pascal ({n},{k})"), p[n][k].clone(), binomial(n, k).to_string()))
                .collect();
            c.push(same(
                format!("motzkin {n}"),
                m[n][0].clone(),
                motzkin_number(n).to_string(),
            ));
            c
        }))
    }));
    v.push(check("polynomial triangles", format!("n<={n_max}"), move || {
        let mut memo = NuMemo::new();
        let d = named_triangle(TriangleId::Thm32Poly, n_max + 1).map_err(err)?;
        let p = named_triangle(TriangleId::Thm53Poly, n_max + 1).map_err(err)?;
        let count = rat_rows(TriangleId::Cor24, n_max + 1)?;
        let (d, p) = (d.as_polynomial().expect("poly"), p.as_polynomial().expect("poly"));
        let mut cases = Vec::new();
        for n in 0..=n_max {
            let dn = d.entry(n, 0).to_polynomial().ok_or("negative power in first column")?;
            let want: Vec<Rational> = (0..=n).map(|k| q(d_count(n, k).unwrap())).collect();
            cases.push(same(
                format!("zero counts {n}"),
                dn.clone(),
                triangle_forge_core::Polynomial::from_coeffs(want),
            ));
            cases.push(same(
                format!("exact division {n}"),
                cons::zero_count_polynomial(n).map_err(err)?,
                dn,
            ));
            for (m, e) in d.row(n).iter().enumerate() {
                cases.push(same(
                    format!("x=1 ({n},{m})"),
                    format_rational(&e.eval(&int(1)).map_err(err)?),
                    count[n][m].clone(),
                ));
            }
            let pn = p.entry(n, 0).to_polynomial().ok_or("negative power in first column")?;
            let mut coeffs = vec![BigInt::from(0); n + 1];
            for path in enumerate_motzkin_with_cap(n, cap).map_err(err)? {
                coeffs[path.count_zeros()] += memo.nu(&path);
            }
            let brute = triangle_forge_core::Polynomial::from_coeffs(coeffs.into_iter().map(q).collect());
            cases.push(same(format!("P_{n} coefficients"), pn.clone(), brute));
            cases.push(same(format!("P_{n}(1)"), pn.eval(&int(1)), q(factorial(n + 1))));
            let at0 = if n % 2 == 0 {
                q(cons::tangent_number(n / 2 + 1).map_err(err)?)
            } else {
                int(0)
            };
            cases.push(same(format!("P_{n}(0)"), pn.eval(&int(0)), at0));
            cases.push(same(
                format!("exact division P_{n}"),
                cons::tangent_polynomial(n).map_err(err)?,
                pn,
            ));
            if n % 2 == 0 {
                cases.push(same(
                    format!("floor {n}"),
                    cons::floor_extract_tangent(n).map_err(err)?,
                    cons::tangent_number(n / 2 + 1).map_err(err)?,
                ));
            }
        }
        all(cases)
    }));

    let top = n_max + 4;
    v.push(check("tangent numbers four ways", format!("n<={top}"), move || {
        let col = rat_rows(TriangleId::Thm11, top)?;
        all((1..=top).map(|n| {
            let t = cons::tangent_number(n).map_err(err)?;
            same(format!("triangle {n}"), t.to_string(), col[n - 1][0].clone())?;
            same(
                format!("entringer {n}"),
                t.clone(),
                cons::entringer(2 * n - 1, 2 * n - 1).map_err(err)?,
            )?;
            if n >= 3 {
                same(format!("paths {n}"), t, cons::tangent_via_paths(n).map_err(err)?)?;
            }
            Ok(())
        }))
    }));
    v.push(check("bernoulli numbers two ways", format!("3<=n<={top}"), move || {
        all((3..=top).map(|n| {
            same(
                format!("n={n}"),
                cons::bernoulli(2 * n),
                cons::bernoulli_via_paths(n).map_err(err)?,
            )
        }))
    }));
    v.push(check(
        "zeta coefficient vs xi integral",
        format!("2<=n<={}", n_max + 2),
        move || {
            all((2..=n_max + 2).map(|n| {
                let zc = cons::zeta_even_coefficient(n).map_err(err)?;
                let xi = exact_xi_integral_with_cap(n, cap).map_err(err)?;
                same(format!("n={n}"), zc * q(BigInt::from(4).pow(n as u32) - 1), xi)
            }))
        },
    ));
    v.push(check(
        "zeta coefficient vs product matrices",
        format!("3<=n<={top}"),
        move || {
            all((3..=top).map(|n| {
                let four = BigInt::from(4).pow(n as u32);
                let lhs =
                    cons::zeta_even_coefficient(n).map_err(err)? * q(factorial(2 * n)) * q(&four - 1) / q(four / 4);
                same(format!("n={n}"), lhs, cons::thm48_b(n).map_err(err)?)
            }))
        },
    ));

    let (seed, samples) = (opts.seed, opts.samples);
    for n in 2..=3usize {
        v.push(check(
            format!("monte carlo xi({n}) within 4 standard errors"),
            format!("samples={samples} seed={seed}"),
            move || {
                let exact = exact_xi_integral(n).map_err(err)?;
                let e = mc_xi_integral(n, samples, seed).map_err(err)?;
                let x = rational_to_f64(&exact);
                let z = (e.estimate - x).abs() / e.standard_error;
                Ok(Verdict {
                    expected: format!("|z| < 4 (exact {})", format_rational(&exact)),
                    actual: format!("|z| = {z:.2} (estimate {:.6})", e.estimate),
                    pass: z < 4.0,
                })
            },
        ));
    }

    if opts.inject_failure {
        v.push(check("injected failure", "", || value("pass", "fail")));
    }
    v
}

/// Nearest double to an exact rational, good enough for tolerance checks.
pub fn rational_to_f64(x: &Rational) -> f64 {
    let scale = 1u64 << 60;
    let scaled = (x * q(BigInt::from(scale))).round().to_integer();
    i128::try_from(scaled)
        .map(|v| v as f64 / scale as f64)
        .unwrap_or(f64::NAN)
}

/// Runs every check and returns the records sorted by name.
pub fn verify_suite(depth: u8) -> VerifyReport {
    verify_suite_with(&SuiteOptions::new(depth))
}

pub fn verify_suite_with(opts: &SuiteOptions) -> VerifyReport {
    let mut records: Vec<CheckRecord> = checks(opts)
        .into_par_iter()
        .map(|c| {
            let t0 = Instant::now();
            let outcome = (c.run)();
            let elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
            let v = outcome.unwrap_or_else(|e| Verdict {
                expected: "no error".to_string(),
                actual: format!("error: {e}"),
                pass: false,
            });
            CheckRecord {
                name: c.name,
                parameters: c.parameters,
                expected: v.expected,
                actual: v.actual,
                pass: v.pass,
                elapsed_ms,
            }
        })
        .collect();
    records.sort_by(|a, b| a.name.cmp(&b.name));
    VerifyReport { records }
}
