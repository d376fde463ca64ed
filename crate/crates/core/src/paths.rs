//! Motzkin and Dyck paths.
//!
//! A path is a word over the steps `-1, 0, +1`. It is a Motzkin path when its
//! total is zero and no proper prefix dips below zero; a Dyck path is a
//! Motzkin path without flat steps. Enumeration is lexicographic with
//! `-1 < 0 < +1`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result, DEFAULT_ENUMERATION_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(i8)]
pub enum Step {
    Down = -1,
    Flat = 0,
    Up = 1,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::Down, Step::Flat, Step::Up];

    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn from_value(v: i64) -> Option<Step> {
        match v {
            -1 => Some(Step::Down),
            0 => Some(Step::Flat),
            1 => Some(Step::Up),
            _ => None,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Step::Down => 'D',
            Step::Flat => 'F',
            Step::Up => 'U',
        }
    }
}

/// An immutable word of steps. Edits return new paths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Self {
        Path { steps }
    }

    pub fn empty() -> Self {
        Path::default()
    }

    /// From numeric step values; any value outside `{-1, 0, 1}` is an error.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        values
            .iter()
            .map(|&v| Step::from_value(v).ok_or_else(|| Error::Parse(alloc::format!("invalid step {v}"))))
            .collect::<Result<Vec<_>>>()
            .map(Path::new)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn values(&self) -> Vec<i8> {
        self.steps.iter().map(|s| s.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_motzkin(&self) -> bool {
        is_motzkin(self)
    }

    pub fn count_zeros(&self) -> usize {
        count_zeros(self)
    }

    /// Running heights after each step.
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        self.steps.iter().scan(0i64, |h, s| {
            *h += s.value() as i64;
            Some(*h)
        })
    }

    /// Concatenation `(self, suffix)`.
    pub fn concat(&self, suffix: &[Step]) -> Path {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(suffix);
        Path { steps }
    }

    /// Inserts a flat step before position `at` (`at == len` appends).
    pub fn insert_flat(&self, at: usize) -> Path {
        let mut steps = self.steps.clone();
        steps.insert(at, Step::Flat);
        Path { steps }
    }

    /// Replaces the cusp `(+1, -1)` starting at `at` by a single flat step.
    pub fn flatten_cusp(&self, at: usize) -> Option<Path> {
        match self.steps.get(at..at + 2) {
            Some([Step::Up, Step::Down]) => {
                let mut steps = self.steps.clone();
                steps.splice(at..at + 2, [Step::Flat]);
                Some(Path { steps })
            }
            _ => None,
        }
    }

    /// Number of trailing down steps.
    pub fn trailing_downs(&self) -> usize {
        self.steps.iter().rev().take_while(|&&s| s == Step::Down).count()
    }

    /// Compact glyph form, e.g. `U F D`.
    pub fn to_glyphs(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push(s.glyph());
        }
        out
    }
}

impl fmt::Display for Path {
    /// `(1,0,-1)`; the empty path is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s.value())?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{self}")
    }
}

impl FromStr for Path {
    type Err = Error;

    /// Accepts `(1,0,-1)`, `1,0,-1`, `U F D` and `UFD`.
    fn from_str(s: &str) -> Result<Path> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Path::empty());
        }
        let bad = || Error::Parse(alloc::format!("invalid path {s:?}"));
        if inner.chars().any(|c| matches!(c, 'U' | 'F' | 'D' | 'u' | 'f' | 'd')) {
            return inner
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c.to_ascii_uppercase() {
                    'U' => Ok(Step::Up),
                    'F' => Ok(Step::Flat),
                    'D' => Ok(Step::Down),
                    _ => Err(bad()),
                })
                .collect::<Result<Vec<_>>>()
                .map(Path::new);
        }
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|tok| tok.parse::<i64>().ok().and_then(Step::from_value).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()
            .map(Path::new)
    }
}

/// Total zero and every proper prefix non-negative; the empty path qualifies.
pub fn is_motzkin(p: &Path) -> bool {
    let mut h = 0i64;
    for s in &p.steps {
        h += s.value() as i64;
        if h < 0 {
            return false;
        }
    }
    h == 0
}

pub fn count_zeros(p: &Path) -> usize {
    p.steps.iter().filter(|&&s| s == Step::Flat).count()
}

/// Lexicographic stream of the paths of a fixed length that stay at height
/// `>= 0`, end at height 0 and only use the allowed steps.
#[derive(Debug, Clone)]
pub struct PathIter {
    len: usize,
    allowed: &'static [Step],
    current: Option<Vec<Step>>,
}

impl PathIter {
    fn new(len: usize, allowed: &'static [Step]) -> Self {
        let current = least_completion(0, len, allowed);
        PathIter { len, allowed, current }
    }

    fn feasible(height: i64, remaining: usize) -> bool {
        height >= 0 && height <= remaining as i64
    }
}

/// Smallest word of `remaining` steps leading from `height` back to zero.
fn least_completion(height: i64, remaining: usize, allowed: &[Step]) -> Option<Vec<Step>> {
    let mut out = Vec::with_capacity(remaining);
    let mut h = height;
    for r in (0..remaining).rev() {
        let step = allowed.iter().copied().find(|s| {
            let nh = h + s.value() as i64;
            PathIter::feasible(nh, r) && completes(nh, r, allowed)
        })?;
        h += step.value() as i64;
        out.push(step);
    }
    (h == 0).then_some(out)
}

// Without flat steps the remaining distance must have the right parity.
fn completes(height: i64, remaining: usize, allowed: &[Step]) -> bool {
    allowed.contains(&Step::Flat) || (remaining as i64 - height) % 2 == 0
}

impl Iterator for PathIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        let cur = self.current.take()?;
        let out = Path::new(cur.clone());
        let mut heights = Vec::with_capacity(self.len + 1);
        heights.push(0i64);
        for s in &cur {
            heights.push(heights.last().unwrap() + s.value() as i64);
        }
        for i in (0..self.len).rev() {
            let base = heights[i];
            let remaining = self.len - i - 1;
            let next_step = self.allowed.iter().copied().find(|s| {
                let nh = base + s.value() as i64;
                *s > cur[i] && Self::feasible(nh, remaining) && completes(nh, remaining, self.allowed)
            });
            if let Some(step) = next_step {
                let nh = base + step.value() as i64;
                if let Some(tail) = least_completion(nh, remaining, self.allowed) {
                    let mut next = cur[..i].to_vec();
                    next.push(step);
                    next.extend(tail);
                    self.current = Some(next);
                    break;
                }
            }
        }
        Some(out)
    }
}

const MOTZKIN_STEPS: &[Step] = &[Step::Down, Step::Flat, Step::Up];
const DYCK_STEPS: &[Step] = &[Step::Down, Step::Up];

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::EnumerationTooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Streams the Motzkin paths of `n` steps (single consumer).
pub fn motzkin_paths(n: usize) -> PathIter {
    PathIter::new(n, MOTZKIN_STEPS)
}

/// Streams the Dyck paths of `n` steps; empty for odd `n`.
pub fn dyck_paths(n: usize) -> PathIter {
    PathIter::new(n, DYCK_STEPS)
}

pub fn enumerate_motzkin(n: usize) -> Result<Vec<Path>> {
    enumerate_motzkin_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_motzkin_with_cap(n: usize, cap: usize) -> Result<Vec<Path>> {
    check_cap(n, cap)?;
    Ok(motzkin_paths(n).collect())
}

pub fn enumerate_dyck(n: usize) -> Result<Vec<Path>> {
    enumerate_dyck_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_dyck_with_cap(n: usize, cap: usize) -> Result<Vec<Path>> {
    if n % 2 == 1 {
        return Err(Error::OddDyckLength(n));
    }
    check_cap(n, cap)?;
    Ok(dyck_paths(n).collect())
}

/// Which of the disjoint tail sets of a nonempty Motzkin path it lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuffixClass {
    /// Ends in `(0, -1_k)`, `k >= 0`.
    FlatTail(usize),
    /// Ends in `(1, -1_k)`, `k >= 1`.
    CuspTail(usize),
}

impl SuffixClass {
    /// Position in the ordering `(0), (1,-1), (0,-1), (1,-1,-1), (0,-1,-1), ...`.
    pub fn index(self) -> usize {
        match self {
            SuffixClass::FlatTail(k) => 2 * k,
            SuffixClass::CuspTail(k) => 2 * k - 1,
        }
    }
}

pub fn suffix_class(p: &Path) -> Result<SuffixClass> {
    if p.is_empty() {
        return Err(Error::EmptyPath);
    }
    if !p.is_motzkin() {
        return Err(Error::NotMotzkin(alloc::format!("{p}")));
    }
    let k = p.trailing_downs();
    // A Motzkin path never ends in +1 and never consists of down steps only.
    match p.steps[p.len() - k - 1] {
        Step::Flat => Ok(SuffixClass::FlatTail(k)),
        Step::Up => Ok(SuffixClass::CuspTail(k)),
        Step::Down => unreachable!("trailing run was maximal"),
    }
}

/// Class sizes of the Motzkin paths of `n + 1` steps, in [`SuffixClass::index`] order.
pub fn suffix_counts(n: usize) -> Result<Vec<BigInt>> {
    suffix_counts_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn suffix_counts_with_cap(n: usize, cap: usize) -> Result<Vec<BigInt>> {
    check_cap(n + 1, cap)?;
    let mut counts = vec![0u64; n + 1];
    for p in motzkin_paths(n + 1) {
        counts[suffix_class(&p)?.index()] += 1;
    }
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// `M_n` from `M_{n+1} = M_n + sum_{k<n} M_k M_{n-1-k}`.
pub fn motzkin_number(n: usize) -> BigInt {
    motzkin_numbers(n + 1).pop().unwrap()
}

/// `M_0 .. M_{count-1}`.
pub fn motzkin_numbers(count: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let next = if n == 0 {
            BigInt::one()
        } else {
            let k = n - 1;
            let conv: BigInt = (0..k).map(|j| &m[j] * &m[k - 1 - j]).sum();
            &m[k] + conv
        };
        m.push(next);
    }
    m
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `(2n)! / (n! (n+1)!)`.
pub fn catalan_number(n: usize) -> BigInt {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}

/// Number of Motzkin paths of `n` steps with exactly `k` flat steps.
pub fn d_count(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if (n - k) % 2 == 1 {
        return Ok(BigInt::zero());
    }
    Ok(binomial(n, k) * catalan_number((n - k) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(v: &[i64]) -> Path {
        Path::from_values(v).unwrap()
    }

    #[test]
    fn motzkin_predicate() {
        assert!(is_motzkin(&p(&[1, 0, 1, -1, 0, -1])));
        assert!(is_motzkin(&Path::empty()));
        assert!(!is_motzkin(&p(&[-1, 1])));
        assert!(!is_motzkin(&p(&[1, 0])));
    }

    #[test]
    fn three_step_paths() {
        let got = enumerate_motzkin(3).unwrap();
        let want = [p(&[0, 0, 0]), p(&[0, 1, -1]), p(&[1, -1, 0]), p(&[1, 0, -1])];
        assert_eq!(got, want);
        assert_eq!(enumerate_motzkin(0).unwrap(), [Path::empty()]);
        assert_eq!(enumerate_motzkin(5).unwrap().len(), 21);
    }

    #[test]
    fn dyck_enumeration() {
        let six = enumerate_dyck(6).unwrap();
        assert_eq!(six.len(), 5);
        assert!(six.contains(&p(&[1, 1, 1, -1, -1, -1])));
        assert_eq!(enumerate_dyck(0).unwrap(), [Path::empty()]);
        assert_eq!(enumerate_dyck(4).unwrap(), [p(&[1, -1, 1, -1]), p(&[1, 1, -1, -1])]);
        assert_eq!(enumerate_dyck(5), Err(Error::OddDyckLength(5)));
        assert!(Error::OddDyckLength(5)
            .to_string()
            .contains("no Dyck paths of odd length"));
    }

    #[test]
    fn caps_are_enforced() {
        assert_eq!(
            enumerate_motzkin(17),
            Err(Error::EnumerationTooLarge { n: 17, cap: 16 })
        );
        assert!(enumerate_dyck_with_cap(18, 16).is_err());
        assert!(enumerate_motzkin_with_cap(4, 3).is_err());
        assert!(suffix_counts(16).is_err());
        assert!(Error::EnumerationTooLarge { n: 17, cap: 16 }
            .to_string()
            .starts_with("enumeration too large"));
    }

    #[test]
    fn zero_counting() {
        assert_eq!(count_zeros(&p(&[1, 0, 1, -1, 0, -1])), 2);
        assert_eq!(count_zeros(&Path::empty()), 0);
        assert_eq!(count_zeros(&p(&[0, 0, 0])), 3);
    }

    #[test]
    fn suffix_classes() {
        assert_eq!(suffix_class(&p(&[1, 1, -1, -1])), Ok(SuffixClass::CuspTail(2)));
        assert_eq!(suffix_class(&p(&[0, 0, 0, 0])), Ok(SuffixClass::FlatTail(0)));
        assert_eq!(suffix_class(&p(&[0, 1, 0, -1])), Ok(SuffixClass::FlatTail(1)));
        assert_eq!(suffix_class(&p(&[0, 0, 1, -1])), Ok(SuffixClass::CuspTail(1)));
        assert_eq!(suffix_class(&Path::empty()), Err(Error::EmptyPath));
        assert!(matches!(suffix_class(&p(&[1, 1])), Err(Error::NotMotzkin(_))));
    }

    #[test]
    fn suffix_count_rows() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(suffix_counts(3).unwrap(), ints(&[4, 2, 2, 1]));
        assert_eq!(suffix_counts(1).unwrap(), ints(&[1, 1]));
        assert_eq!(suffix_counts(4).unwrap(), ints(&[9, 4, 5, 2, 1]));
    }

    #[test]
    fn closed_form_counts() {
        let m: Vec<i64> = (0..=6).map(|n| motzkin_number(n).try_into().unwrap()).collect();
        assert_eq!(m, [1, 1, 2, 4, 9, 21, 51]);
        assert_eq!(catalan_number(3), BigInt::from(5));
        assert_eq!(catalan_number(0), BigInt::from(1));
        assert_eq!(catalan_number(5), BigInt::from(42));
        assert_eq!(d_count(6, 0), Ok(BigInt::from(5)));
        assert_eq!(d_count(3, 1), Ok(BigInt::from(3)));
        assert_eq!(d_count(4, 3), Ok(BigInt::from(0)));
        assert_eq!(d_count(2, 3), Err(Error::IndexOutOfRange { n: 2, k: 3 }));
    }

    #[test]
    fn text_forms() {
        let q: Path = "(1,0,-1)".parse().unwrap();
        assert_eq!(q, p(&[1, 0, -1]));
        assert_eq!("U F D".parse::<Path>().unwrap(), q);
        assert_eq!("UFD".parse::<Path>().unwrap(), q);
        assert_eq!("()".parse::<Path>().unwrap(), Path::empty());
        assert_eq!(q.to_string(), "(1,0,-1)");
        assert_eq!(q.to_glyphs(), "U F D");
        assert!("(2,0)".parse::<Path>().is_err());
        assert!("(1,x)".parse::<Path>().is_err());
    }

    #[test]
    fn edits_return_new_paths() {
        let q = p(&[1, -1]);
        assert_eq!(q.insert_flat(1), p(&[1, 0, -1]));
        assert_eq!(q.flatten_cusp(0), Some(p(&[0])));
        assert_eq!(q.flatten_cusp(1), None);
        assert_eq!(q, p(&[1, -1]));
    }
}
