//! Triangles generated by matrices.
//!
//! Row 0 is the seed; row `n` is row `n - 1` (length `n`) times an
//! `n x (n + 1)` matrix. With a fixed infinite matrix `A` that matrix is the
//! block `A[1..n, 1..n+1]`; with a matrix sequence it is the `n`-th member.
//! Matrices are 1-indexed, triangle entries `t[n][m]` are 0-indexed.
//!
//! The two weighted engines build the matrix sequences whose triangles carry
//! sums of a path weight `f` over the suffix classes of Motzkin paths
//! ([`motzkin_weight_triangle`]) or of Dyck paths ([`dyck_weight_triangle`]).

use alloc::vec::Vec;

use crate::numerics::{Polynomial, Rational, Ring};
use crate::{Error, Result};

/// Dense row-major matrix, 1-indexed accessors.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Clone> Matrix<R> {
    /// `entry(i, j)` is called with 1-based indices.
    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(entry(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Domain(alloc::format!(
                "ragged matrix: row of length {} among rows of length {cols}",
                bad.len()
            )));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 1-based access.
    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn map<S: Clone>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<R: Ring> Matrix<R> {
    pub fn mul(&self, other: &Matrix<R>) -> Result<Matrix<R>> {
        if self.cols != other.rows {
            return Err(Error::Domain(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (1..=self.cols).fold(R::zero(), |acc, k| acc.add(&self.get(i, k).mul(other.get(k, j))))
        }))
    }
}

/// `row * m`; the row length must equal the number of matrix rows.
pub fn row_times<R: Ring>(row: &[R], m: &Matrix<R>) -> Result<Vec<R>> {
    if row.len() != m.rows {
        return Err(Error::Domain(alloc::format!(
            "row of length {} against {}x{} matrix",
            row.len(),
            m.rows,
            m.cols
        )));
    }
    Ok((1..=m.cols)
        .map(|j| {
            row.iter().enumerate().fold(R::zero(), |acc, (k, t)| {
                let a = m.get(k + 1, j);
                if a.is_zero() {
                    acc
                } else {
                    acc.add(&t.mul(a))
                }
            })
        })
        .collect())
}

/// Ragged array whose row `n` has `n + 1` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Clone> Triangle<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Domain(alloc::format!(
                    "triangle row {n} has {} entries",
                    row.len()
                )));
            }
        }
        Ok(Triangle { rows })
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<R>> {
        self.rows
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    pub fn entry(&self, n: usize, m: usize) -> &R {
        &self.rows[n][m]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn first_column(&self) -> Vec<R> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    pub fn map<S: Clone>(&self, mut f: impl FnMut(&R) -> S) -> Triangle<S> {
        Triangle {
            rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect(),
        }
    }
}

impl<R: Ring> Triangle<R> {
    pub fn scale(&self, c: &R) -> Triangle<R> {
        self.map(|t| c.mul(t))
    }
}

/// Triangle generated by the infinite matrix `entry(i, j)` (1-based).
pub fn generate_triangle<R: Ring>(entry: impl Fn(usize, usize) -> R, seed: R, rows: usize) -> Triangle<R> {
    let mut out: Vec<Vec<R>> = Vec::with_capacity(rows);
    if rows == 0 {
        return Triangle { rows: out };
    }
    out.push(alloc::vec![seed]);
    for n in 1..rows {
        let block = Matrix::from_fn(n, n + 1, &entry);
        let next = row_times(&out[n - 1], &block).expect("block shape matches previous row");
        out.push(next);
    }
    Triangle { rows: out }
}

/// Triangle generated by a matrix sequence; `matrix_at(n)` must be `n x (n + 1)`.
pub fn generate_triangle_seq<R: Ring>(
    matrix_at: impl Fn(usize) -> Matrix<R>,
    seed: R,
    rows: usize,
) -> Result<Triangle<R>> {
    let mut out: Vec<Vec<R>> = Vec::with_capacity(rows);
    if rows == 0 {
        return Ok(Triangle { rows: out });
    }
    out.push(alloc::vec![seed]);
    for n in 1..rows {
        let m = matrix_at(n);
        if m.rows() != n || m.cols() != n + 1 {
            return Err(Error::ShapeMismatch {
                n,
                rows: m.rows(),
                cols: m.cols(),
                expected_rows: n,
                expected_cols: n + 1,
            });
        }
        let next = row_times(&out[n - 1], &m)?;
        out.push(next);
    }
    Ok(Triangle { rows: out })
}

/// Recursion coefficients for a weight `f` on Motzkin paths:
///
/// - `f(l, 0, -1_k) = b(n, k) f(l, -1_k)` whenever `(l, -1_k)` has `n` steps,
/// - `f(l, 1, -1_k) = c(n, k) f(l, 0, -1_{k-1})` whenever `(l, 0, -1_{k-1})` has `n` steps,
///
/// and `seed_value = f((0))`.
pub struct WeightRecursion<R, B, C> {
    pub b: B,
    pub c: C,
    pub seed_value: R,
}

impl<R, B, C> WeightRecursion<R, B, C>
where
    R: Ring,
    B: Fn(usize, usize) -> R,
    C: Fn(usize, usize) -> R,
{
    pub fn new(b: B, c: C, seed_value: R) -> Self {
        WeightRecursion { b, c, seed_value }
    }

    /// The `n x (n + 1)` matrix for step `n`.
    pub fn matrix(&self, n: usize) -> Matrix<R> {
        motzkin_pattern_matrix(n, &self.b, &self.c)
    }
}

/// Column 1 holds `b(n,0)` everywhere; column `2k+1` holds `b(n,k)` from row
/// `2k` down; column `2k` holds `c(n,k)` in row `2k-1` only.
pub fn motzkin_pattern_matrix<R: Ring>(
    n: usize,
    b: impl Fn(usize, usize) -> R,
    c: impl Fn(usize, usize) -> R,
) -> Matrix<R> {
    Matrix::from_fn(n, n + 1, |i, j| {
        if j == 1 {
            b(n, 0)
        } else if j % 2 == 1 {
            let k = (j - 1) / 2;
            if i >= 2 * k {
                b(n, k)
            } else {
                R::zero()
            }
        } else {
            let k = j / 2;
            if i == 2 * k - 1 {
                c(n, k)
            } else {
                R::zero()
            }
        }
    })
}

/// Triangle of the Motzkin weight engine, seeded with one.
///
/// `seed_value * row[n]` is the vector of sums of `f` over the suffix classes
/// of the Motzkin paths of `n + 1` steps (see [`crate::paths::SuffixClass::index`]),
/// so `seed_value * t[n][0] = b(n, 0) * sum_{p in M_n} f(p)`.
pub fn motzkin_weight_triangle<R, B, C>(w: &WeightRecursion<R, B, C>, rows: usize) -> Result<Triangle<R>>
where
    R: Ring,
    B: Fn(usize, usize) -> R,
    C: Fn(usize, usize) -> R,
{
    for n in 1..rows {
        if (w.b)(n, 0).is_zero() {
            return Err(Error::DegenerateRecursion(n));
        }
    }
    generate_triangle_seq(|n| w.matrix(n), R::one(), rows)
}

/// Lower-staircase matrix: entry `(i, j)` is `a(n, j-1)` for `j <= i + 1`.
pub fn dyck_pattern_matrix<R: Ring>(n: usize, a: impl Fn(usize, usize) -> R) -> Matrix<R> {
    Matrix::from_fn(n, n + 1, |i, j| if j <= i + 1 { a(n, j - 1) } else { R::zero() })
}

/// Triangle of the Dyck weight engine, seeded with one.
///
/// For `f` with `f(l, 1, -1_{k+1}) = a(n, k) f(l, -1_k)` on Dyck paths
/// `(l, -1_k)` of `2n` steps, `seed_value * row[n]` lists the sums of `f` over
/// the Dyck paths of `2n + 2` steps ending in `(1, -1_1)`, ..., `(1, -1_{n+1})`.
/// Multiply by `f(1, -1)` (see [`Triangle::scale`]) to get the sums themselves.
pub fn dyck_weight_triangle<R: Ring>(a: impl Fn(usize, usize) -> R, rows: usize) -> Result<Triangle<R>> {
    for n in 1..rows {
        if a(n, 0).is_zero() {
            return Err(Error::DegenerateRecursion(n));
        }
    }
    generate_triangle_seq(|n| dyck_pattern_matrix(n, &a), R::one(), rows)
}

/// A matrix entry of a polynomial weight recursion whose coefficients may
/// divide by `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum PolyWeight {
    /// Multiply by a polynomial.
    Times(Polynomial),
    /// Multiply by `q / x`; the multiplicand must be divisible by `x`.
    OverX(Rational),
}

impl PolyWeight {
    fn is_zero(&self) -> bool {
        match self {
            PolyWeight::Times(p) => p.is_zero(),
            PolyWeight::OverX(q) => num_traits::Zero::is_zero(q),
        }
    }

    fn apply(&self, t: &Polynomial) -> Result<Polynomial> {
        match self {
            PolyWeight::Times(p) => Ok(t * p),
            PolyWeight::OverX(q) => Ok(t.div_by_x()?.scale(q)),
        }
    }
}

/// Suffix-class sums of a polynomial-valued path weight, computed without
/// leaving the polynomial ring.
///
/// Returns `rows` vectors; vector `n` has `n + 1` entries, the sums of `f`
/// over the suffix classes of the Motzkin paths of `n + 1` steps, starting from
/// `f((0)) = base`. Every `OverX` entry divides its multiplicand exactly, and
/// a remainder is reported as [`Error::InexactDivision`].
pub fn motzkin_class_sums_poly(
    b: impl Fn(usize, usize) -> PolyWeight,
    c: impl Fn(usize, usize) -> PolyWeight,
    base: Polynomial,
    rows: usize,
) -> Result<Vec<Vec<Polynomial>>> {
    let mut out: Vec<Vec<Polynomial>> = Vec::with_capacity(rows);
    if rows == 0 {
        return Ok(out);
    }
    out.push(alloc::vec![base]);
    for n in 1..rows {
        if b(n, 0).is_zero() {
            return Err(Error::DegenerateRecursion(n));
        }
        let prev = &out[n - 1];
        let mut next = Vec::with_capacity(n + 1);
        for j in 1..=n + 1 {
            let mut acc = Polynomial::zero();
            for i in 1..=n {
                let w = if j == 1 {
                    Some(b(n, 0))
                } else if j % 2 == 1 {
                    let k = (j - 1) / 2;
                    (i >= 2 * k).then(|| b(n, k))
                } else {
                    let k = j / 2;
                    (i == 2 * k - 1).then(|| c(n, k))
                };
                if let Some(w) = w {
                    if !w.is_zero() {
                        acc = &acc + &w.apply(&prev[i - 1])?;
                    }
                }
            }
            next.push(acc);
        }
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{frac, int, Laurent};
    use alloc::vec;

    fn ints(t: &Triangle<Rational>) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|q| i64::try_from(q.to_integer()).unwrap()).collect())
            .collect()
    }

    #[test]
    fn pascal_rows() {
        let t = generate_triangle(|i, j| if i <= j && j <= i + 1 { int(1) } else { int(0) }, int(1), 5);
        assert_eq!(ints(&t)[4], [1, 4, 6, 4, 1]);
    }

    #[test]
    fn all_ones_gives_factorials() {
        let t = generate_triangle(|_, _| int(1), int(1), 5);
        for (n, row) in ints(&t).iter().enumerate() {
            let f: i64 = (1..=n as i64).product();
            assert!(row.iter().all(|&v| v == f));
        }
    }

    #[test]
    fn powers_of_two() {
        let a = |i: usize, j: usize| {
            if i == 1 && j == 1 {
                int(2)
            } else if i + 1 == j {
                int(1)
            } else {
                int(0)
            }
        };
        let t = generate_triangle(a, int(1), 6);
        for (n, row) in ints(&t).iter().enumerate() {
            for (m, &v) in row.iter().enumerate() {
                assert_eq!(v, 1 << (n - m));
            }
        }
    }

    #[test]
    fn zero_rows_is_empty() {
        assert!(generate_triangle(|_, _| int(1), int(1), 0).is_empty());
    }

    #[test]
    fn seq_matches_fixed_matrix() {
        let a = |i: usize, j: usize| int((i * 3 + j) as i64 % 5);
        let fixed = generate_triangle(a, int(1), 7);
        let seq = generate_triangle_seq(|n| Matrix::from_fn(n, n + 1, a), int(1), 7).unwrap();
        assert_eq!(fixed, seq);
    }

    #[test]
    fn seq_shape_errors_name_the_step() {
        let err = generate_triangle_seq(
            |n| Matrix::from_fn(n, if n == 3 { 3 } else { n + 1 }, |_, _| int(1)),
            int(1),
            6,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::ShapeMismatch {
                n: 3,
                rows: 3,
                cols: 3,
                expected_rows: 3,
                expected_cols: 4
            }
        );
    }

    #[test]
    fn entringer_sequence_matrices() {
        let t = generate_triangle_seq(
            |n| Matrix::from_fn(n, n + 1, |i, j| if i + j > n { int(1) } else { int(0) }),
            int(1),
            6,
        )
        .unwrap();
        assert_eq!(ints(&t)[5], [16, 32, 46, 56, 61, 61]);
    }

    #[test]
    fn motzkin_weight_engine_counts() {
        let w = WeightRecursion::new(|_, _| int(1), |_, _| int(1), int(1));
        let t = motzkin_weight_triangle(&w, 6).unwrap();
        assert_eq!(ints(&t)[5], [21, 9, 12, 5, 3, 1]);

        let nu = WeightRecursion::new(|_, k| int(2 * (k as i64 + 1)), |_, k| frac(k as i64 + 1, 2), int(2));
        let t = motzkin_weight_triangle(&nu, 5).unwrap();
        let col: Vec<i64> = ints(&t).iter().map(|r| r[0]).collect();
        assert_eq!(col, [1, 2, 6, 24, 120]);
    }

    #[test]
    fn degenerate_recursion_is_rejected() {
        let w = WeightRecursion::new(
            |n, k| if n == 2 && k == 0 { int(0) } else { int(1) },
            |_, _| int(1),
            int(1),
        );
        assert_eq!(motzkin_weight_triangle(&w, 4), Err(Error::DegenerateRecursion(2)));
        assert_eq!(
            dyck_weight_triangle(|n, _| int(n as i64 - 1), 3),
            Err(Error::DegenerateRecursion(1))
        );
    }

    #[test]
    fn dyck_weight_engine() {
        let cat = dyck_weight_triangle(|_, _| int(1), 4).unwrap();
        assert_eq!(ints(&cat)[3], [5, 5, 3, 1]);
        let tan = dyck_weight_triangle(|_, k| int(((k + 1) * (k + 2)) as i64), 5).unwrap();
        assert_eq!(ints(&tan)[3], [272, 816, 1440, 1440]);
        let col: Vec<i64> = ints(&tan).iter().map(|r| r[0]).collect();
        assert_eq!(col, [1, 2, 16, 272, 7936]);
    }

    #[test]
    fn laurent_triangle_has_inverse_powers_off_the_first_column() {
        let x = Laurent::from_polynomial(Polynomial::x());
        let inv = Laurent::monomial(int(1), -1);
        let w = WeightRecursion::new(|_, _| x.clone(), |_, _| inv.clone(), x.clone());
        let t = motzkin_weight_triangle(&w, 4).unwrap();
        // row 3 = (x^3 + 3x, x + 1/x, 2x, 1/x), worked by hand
        let row3 = t.row(3);
        assert_eq!(row3[0].to_polynomial(), Some(Polynomial::from_ints(&[0, 3, 0, 1])));
        assert_eq!(row3[1], Laurent::from_parts(-1, vec![int(1), int(0), int(1)]));
        assert_eq!(row3[2].to_polynomial(), Some(Polynomial::from_ints(&[0, 2])));
        assert_eq!(row3[3], inv);
    }

    #[test]
    fn polynomial_class_sums_divide_exactly() {
        let rows = motzkin_class_sums_poly(
            |_, _| PolyWeight::Times(Polynomial::x()),
            |_, _| PolyWeight::OverX(int(1)),
            Polynomial::x(),
            4,
        )
        .unwrap();
        // classes of M_2: (0,0) -> x^2, (1,-1) -> 1
        assert_eq!(rows[1], [Polynomial::from_ints(&[0, 0, 1]), Polynomial::one()]);
        // a base without a factor x cannot be divided
        let err = motzkin_class_sums_poly(
            |_, _| PolyWeight::Times(Polynomial::one()),
            |_, _| PolyWeight::OverX(int(1)),
            Polynomial::one(),
            3,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InexactDivision(_)));
    }
}
