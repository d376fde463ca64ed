//! Named triangles and integer/rational sequences.
//!
//! Each [`TriangleId`] fixes one matrix (or matrix sequence) and one engine;
//! each [`SequenceId`] one generator. Where a sequence has several
//! constructions (tangent numbers from Bernoulli numbers, from the Dyck
//! weight triangle, from the `zeta` product matrices and from Entringer
//! numbers) all of them are exposed so they can be checked against each other.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::numerics::{floor, frac, int, Laurent, Polynomial, Rational};
use crate::paths::{binomial, catalan_number, factorial, motzkin_number};
use crate::triangle::{
    dyck_weight_triangle, generate_triangle, generate_triangle_seq, motzkin_class_sums_poly, motzkin_weight_triangle,
    row_times, Matrix, PolyWeight, Triangle, WeightRecursion,
};
use crate::{Error, Result, DEFAULT_ROW_CAP};

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            /// Stable kebab-case name.
            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                Self::ALL
                    .iter()
                    .copied()
                    .find(|id| id.name() == s)
                    .ok_or_else(|| Error::Parse(alloc::format!("unknown name {s:?}")))
            }
        }
    };
}

named_enum!(
    /// Named triangles.
    TriangleId {
        FactorialFlat => "flat-ex1",
        Powers2 => "powers2-ex2",
        Pascal => "pascal",
        MotzkinTri => "motzkin-ex4",
        CatalanTri => "catalan-ex5",
        Thm11 => "thm-1-1",
        Cor24 => "cor-2-4",
        Thm32Poly => "thm-3-2",
        Cor46 => "cor-4-6",
        Thm53Poly => "thm-5-3",
        Entringer54 => "entringer-5-4",
        Entringer55 => "entringer-5-5",
        Entringer56 => "entringer-5-6",
    }
);

named_enum!(
    /// Named sequences.
    SequenceId {
        Motzkin => "motzkin",
        Catalan => "catalan",
        Tangent => "tangent",
        Bernoulli => "bernoulli",
        Secant => "secant",
        Euler => "euler",
        ZigzagBeta => "beta",
        ZetaCoeff => "zeta-coeff",
        BThm48 => "b-thm48",
    }
);

impl SequenceId {
    /// Index of the first term.
    pub fn first_index(self) -> usize {
        match self {
            SequenceId::Tangent | SequenceId::ZetaCoeff => 1,
            SequenceId::BThm48 => 3,
            _ => 0,
        }
    }
}

/// A generated triangle in its coefficient ring.
#[derive(Debug, Clone, PartialEq)]
pub enum NamedTriangle {
    Rational(Triangle<Rational>),
    /// Entries in `Q[x, 1/x]`; the first column is always a polynomial.
    Polynomial(Triangle<Laurent>),
    /// Rows of lengths `1, 3, 5, ...` (`entringer-5-5`).
    Stretched(Vec<Vec<Rational>>),
}

impl NamedTriangle {
    pub fn row_count(&self) -> usize {
        match self {
            NamedTriangle::Rational(t) => t.len(),
            NamedTriangle::Polynomial(t) => t.len(),
            NamedTriangle::Stretched(r) => r.len(),
        }
    }

    pub fn as_rational(&self) -> Option<&Triangle<Rational>> {
        match self {
            NamedTriangle::Rational(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&Triangle<Laurent>> {
        match self {
            NamedTriangle::Polynomial(t) => Some(t),
            _ => None,
        }
    }
}

fn indicator(cond: bool) -> Rational {
    if cond {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Entry `(i, j)` (1-based) of the fixed matrix behind a named triangle,
/// for the ids generated by a single infinite matrix.
pub fn fixed_matrix_entry(id: TriangleId, i: usize, j: usize) -> Option<Rational> {
    Some(match id {
        TriangleId::FactorialFlat => Rational::one(),
        TriangleId::Powers2 => {
            if i == 1 && j == 1 {
                int(2)
            } else {
                indicator(i + 1 == j)
            }
        }
        TriangleId::Pascal => indicator(i <= j && j <= i + 1),
        TriangleId::MotzkinTri => indicator(j + 1 >= i && j <= i + 1),
        TriangleId::CatalanTri => indicator(j <= i + 1),
        TriangleId::Thm11 => {
            if j <= i + 1 {
                int((j * (j + 1)) as i64)
            } else {
                Rational::zero()
            }
        }
        TriangleId::Cor24 => indicator(i + 1 == j || (j % 2 == 1 && i + 1 > j)),
        TriangleId::Cor46 => {
            if j % 2 == 1 && i + 1 >= j {
                int(j as i64 + 1)
            } else if j.is_multiple_of(2) && i + 1 == j {
                frac(j as i64 + 2, 4)
            } else {
                Rational::zero()
            }
        }
        TriangleId::Entringer56 => indicator((i % 2 == 1 && i <= j) || (j % 2 == 1 && j <= i + 1)),
        _ => return None,
    })
}

/// `n x (n + 1)` matrix with ones where `i + j > n`.
pub fn entringer_seq_matrix(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n + 1, |i, j| indicator(i + j > n))
}

/// First `n` rows and `n + 2` columns of `a_ij = min(j, i + 1)`.
pub fn secant_tangent_matrix(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n + 2, |i, j| int(j.min(i + 1) as i64))
}

fn check_rows(rows: usize, cap: usize) -> Result<()> {
    if rows > cap {
        Err(Error::EnumerationTooLarge { n: rows, cap })
    } else {
        Ok(())
    }
}

pub fn named_triangle(id: TriangleId, rows: usize) -> Result<NamedTriangle> {
    named_triangle_with_cap(id, rows, DEFAULT_ROW_CAP)
}

pub fn named_triangle_with_cap(id: TriangleId, rows: usize, cap: usize) -> Result<NamedTriangle> {
    check_rows(rows, cap)?;
    let x = || Laurent::from_polynomial(Polynomial::x());
    let tri = match id {
        TriangleId::FactorialFlat
        | TriangleId::Powers2
        | TriangleId::Pascal
        | TriangleId::MotzkinTri
        | TriangleId::CatalanTri
        | TriangleId::Entringer56 => generate_triangle(
            |i, j| fixed_matrix_entry(id, i, j).expect("fixed-matrix id"),
            Rational::one(),
            rows,
        ),
        TriangleId::Thm11 => dyck_weight_triangle(|_, k| int(((k + 1) * (k + 2)) as i64), rows)?,
        TriangleId::Cor24 => {
            motzkin_weight_triangle(&WeightRecursion::new(|_, _| int(1), |_, _| int(1), int(1)), rows)?
        }
        TriangleId::Cor46 => motzkin_weight_triangle(&nu_recursion(), rows)?,
        TriangleId::Entringer54 => generate_triangle_seq(entringer_seq_matrix, Rational::one(), rows)?,
        TriangleId::Thm32Poly => {
            let w = WeightRecursion::new(|_, _| x(), |_, _| Laurent::monomial(int(1), -1), x());
            return Ok(NamedTriangle::Polynomial(motzkin_weight_triangle(&w, rows)?));
        }
        TriangleId::Thm53Poly => {
            let w = WeightRecursion::new(
                |_, k| Laurent::monomial(int(2 * (k as i64 + 1)), 1),
                |_, k| Laurent::monomial(frac(k as i64 + 1, 2), -1),
                Laurent::monomial(int(2), 1),
            );
            return Ok(NamedTriangle::Polynomial(motzkin_weight_triangle(&w, rows)?));
        }
        TriangleId::Entringer55 => return Ok(NamedTriangle::Stretched(secant_tangent_rows(rows))),
    };
    Ok(NamedTriangle::Rational(tri))
}

/// Recursion satisfied by `nu`: `b(n,k) = 2(k+1)`, `c(n,k) = (k+1)/2`, `nu((0)) = 2`.
#[allow(clippy::type_complexity)]
pub fn nu_recursion() -> WeightRecursion<Rational, fn(usize, usize) -> Rational, fn(usize, usize) -> Rational> {
    fn b(_: usize, k: usize) -> Rational {
        int(2 * (k as i64 + 1))
    }
    fn c(_: usize, k: usize) -> Rational {
        frac(k as i64 + 1, 2)
    }
    WeightRecursion::new(b, c, int(2))
}

/// Rows `t_1, ..., t_rows` with `t_1 = (1)` and `t_{n+1} = t_n * A^{(2n-1)}`.
pub fn secant_tangent_rows(rows: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    if rows == 0 {
        return out;
    }
    out.push(vec![Rational::one()]);
    for n in 1..rows {
        let m = secant_tangent_matrix(2 * n - 1);
        let next = row_times(&out[n - 1], &m).expect("row length 2n-1 matches");
        out.push(next);
    }
    out
}

/// `B_0 ..= B_n` by `B_n = -1/(n+1) sum_{k<n} C(n+1, k) B_k`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(Rational::one());
            continue;
        }
        let s: Rational = (0..m).map(|k| &b[k] * Rational::from_integer(binomial(m + 1, k))).sum();
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli(n: usize) -> Rational {
    bernoulli_numbers(n).pop().unwrap()
}

fn pow4(n: usize) -> BigInt {
    BigInt::from(4).pow(n as u32)
}

fn require_at_least(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(Error::Domain(alloc::format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `tan^(2n-1)(0) = |B_2n| 4^n (4^n - 1) / (2n)`.
pub fn tangent_number(n: usize) -> Result<BigInt> {
    require_at_least(n, 1, "tangent_number")?;
    let b = bernoulli(2 * n).abs();
    let p = pow4(n);
    let v = b * Rational::from_integer(&p * (&p - 1u32)) / Rational::from_integer(BigInt::from(2 * n));
    integral(v, "tangent number")
}

fn integral(q: Rational, what: &str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::DivisibilityViolated(alloc::format!(
            "{what} = {q} is not an integer"
        )))
    }
}

/// The `(m-2) x (m-1)` factor of the zeta product, `m >= 3`.
///
/// Odd column `j` holds `(j+1)(4m-j+1)/8` from row `j-1` down (column 1 in
/// every row); even column `j` holds `(j+2)(4m-j)/32` in row `j-1` only.
pub fn zeta_product_matrix(m: usize) -> Matrix<Rational> {
    let m4 = 4 * m as i64;
    Matrix::from_fn(m - 2, m - 1, |i, j| {
        let jj = j as i64;
        if j % 2 == 1 && i + 1 >= j {
            frac((jj + 1) * (m4 - jj + 1), 8)
        } else if j % 2 == 0 && i + 1 == j {
            frac((jj + 2) * (m4 - jj), 32)
        } else {
            Rational::zero()
        }
    })
}

/// Running row vector `A^(3) A^(4) ... A^(n)`.
pub fn zeta_product_row(n: usize) -> Result<Vec<Rational>> {
    require_at_least(n, 3, "zeta product")?;
    let t = generate_triangle_seq(|s| zeta_product_matrix(s + 2), Rational::one(), n - 1)?;
    Ok(t.into_rows().pop().unwrap())
}

/// First component of `A^(3) ... A^(n)`.
pub fn thm48_b(n: usize) -> Result<Rational> {
    Ok(zeta_product_row(n)?.swap_remove(0))
}

/// `q` with `zeta(2n) = q pi^(2n)`.
pub fn zeta_even_coefficient(n: usize) -> Result<Rational> {
    require_at_least(n, 1, "zeta_even_coefficient")?;
    if n < 3 {
        let b = bernoulli(2 * n).abs();
        let num = Rational::from_integer(BigInt::from(2).pow(2 * n as u32));
        return Ok(b * num / Rational::from_integer(2 * factorial(2 * n)));
    }
    let p = pow4(n);
    let b = thm48_b(n)?;
    Ok(b * Rational::from_integer(&p / 4u32) / Rational::from_integer(factorial(2 * n) * (p - 1u32)))
}

/// `B_2n = (-1)^(n+1) b_n / (2 (4^n - 1))`.
pub fn bernoulli_via_paths(n: usize) -> Result<Rational> {
    let b = thm48_b(n)?;
    let v = b / Rational::from_integer(2 * (pow4(n) - 1u32));
    Ok(if n.is_multiple_of(2) { -v } else { v })
}

/// `tan^(2n-1)(0) = 4^(n-1) b_n / n`.
pub fn tangent_via_paths(n: usize) -> Result<BigInt> {
    let b = thm48_b(n)?;
    integral(
        b * Rational::from_integer(pow4(n - 1)) / Rational::from_integer(BigInt::from(n)),
        "tangent via paths",
    )
}

/// Rows `0..=n` of the Entringer triangle from `E_{n+1,k+1} = sum_{j=n-k}^{n} E_{n,j}`.
pub fn entringer_triangle(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 0..n {
        let prev = &rows[m];
        let mut next = vec![BigInt::zero()];
        // suffix sums of prev: sum_{j=m-k}^{m} prev[j]
        let mut acc = BigInt::zero();
        for k in 0..=m {
            acc += &prev[m - k];
            next.push(acc.clone());
        }
        rows.push(next);
    }
    rows
}

/// Same rows from the boustrophedon rule `E_{n+1,k+1} = E_{n+1,k} + E_{n,n-k}`.
pub fn entringer_triangle_boustrophedon(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 0..n {
        let mut next = vec![BigInt::zero()];
        for k in 0..=m {
            let v = &next[k] + &rows[m][m - k];
            next.push(v);
        }
        rows.push(next);
    }
    rows
}

pub fn entringer(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(entringer_triangle(n).swap_remove(n).swap_remove(k))
}

/// Zig-zag number `beta_n = E_{n,n}`.
pub fn zigzag(n: usize) -> BigInt {
    entringer_triangle(n).swap_remove(n).swap_remove(n)
}

/// `beta_2n`.
pub fn secant_number(n: usize) -> BigInt {
    zigzag(2 * n)
}

/// `E_n`: zero for odd `n`, `(-1)^(n/2) beta_n` for even `n`.
pub fn euler_number(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let s = secant_number(n / 2);
    if (n / 2) % 2 == 1 {
        -s
    } else {
        s
    }
}

/// `sum_k D_{n,k} x^k`: first column of `thm-3-2`, computed over `Q[x]` by
/// exact division.
pub fn zero_count_polynomial(n: usize) -> Result<Polynomial> {
    let sums = motzkin_class_sums_poly(
        |_, _| PolyWeight::Times(Polynomial::x()),
        |_, _| PolyWeight::OverX(Rational::one()),
        Polynomial::x(),
        n + 1,
    )?;
    sums[n][0].div_by_x()
}

/// `P_n(x) = sum_{p in M_n} nu(p) x^{zeros(p)}`: first column of `thm-5-3`,
/// computed over `Q[x]` by exact division.
pub fn tangent_polynomial(n: usize) -> Result<Polynomial> {
    let sums = motzkin_class_sums_poly(
        |_, k| PolyWeight::Times(Polynomial::monomial(int(2 * (k as i64 + 1)), 1)),
        |_, k| PolyWeight::OverX(frac(k as i64 + 1, 2)),
        Polynomial::monomial(int(2), 1),
        n + 1,
    )?;
    Ok(sums[n][0].div_by_x()?.scale(&frac(1, 2)))
}

/// `floor(P_n(1/(n+1)!))`, which equals `tan^(n+1)(0)` for even `n`.
pub fn floor_extract_tangent(n: usize) -> Result<BigInt> {
    floor_extract_tangent_with_cap(n, DEFAULT_ROW_CAP)
}

pub fn floor_extract_tangent_with_cap(n: usize, cap: usize) -> Result<BigInt> {
    if n % 2 == 1 {
        return Err(Error::Domain(alloc::format!("floor extraction needs even n, got {n}")));
    }
    check_rows(n + 1, cap)?;
    let p = tangent_polynomial(n)?;
    let x = Rational::new(BigInt::one(), factorial(n + 1));
    Ok(floor(&p.eval(&x)))
}

/// First `count` terms as `(index, value)`, starting at [`SequenceId::first_index`].
pub fn sequence_terms(id: SequenceId, count: usize) -> Result<Vec<(usize, Rational)>> {
    let start = id.first_index();
    let idx = start..start + count;
    let int_terms = |v: Vec<BigInt>| -> Vec<(usize, Rational)> {
        idx.clone().zip(v.into_iter().map(Rational::from_integer)).collect()
    };
    Ok(match id {
        SequenceId::Motzkin => int_terms(idx.clone().map(motzkin_number).collect()),
        SequenceId::Catalan => int_terms(idx.clone().map(catalan_number).collect()),
        SequenceId::Tangent => int_terms(idx.clone().map(tangent_number).collect::<Result<_>>()?),
        SequenceId::Bernoulli => {
            if count == 0 {
                Vec::new()
            } else {
                bernoulli_numbers(count - 1).into_iter().enumerate().collect()
            }
        }
        SequenceId::Secant => {
            let e = entringer_triangle(2 * count.saturating_sub(1));
            int_terms(idx.clone().map(|n| e[2 * n][2 * n].clone()).collect())
        }
        SequenceId::Euler => int_terms(idx.clone().map(euler_number).collect()),
        SequenceId::ZigzagBeta => {
            let e = entringer_triangle(count.saturating_sub(1));
            int_terms(idx.clone().map(|n| e[n][n].clone()).collect())
        }
        SequenceId::ZetaCoeff => idx
            .clone()
            .map(|n| zeta_even_coefficient(n).map(|q| (n, q)))
            .collect::<Result<_>>()?,
        SequenceId::BThm48 => {
            if count == 0 {
                Vec::new()
            } else {
                let t = generate_triangle_seq(|s| zeta_product_matrix(s + 2), Rational::one(), count + 1)?;
                idx.clone().map(|n| (n, t.entry(n - 2, 0).clone())).collect()
            }
        }
    })
}

/// Closed form `C(2n-m, n) (m+1) / (n+1)` of the Catalan triangle, `m <= n`.
pub fn catalan_triangle_entry(n: usize, m: usize) -> BigInt {
    let (q, r) = (binomial(2 * n - m, n) * BigInt::from(m + 1)).div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}
