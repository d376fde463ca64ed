//! Brute force over symmetric groups.
//!
//! `phi` sends `sigma` in `S_{n+1}` to the word `(l_1, ..., l_n)` where
//! `l_j + 1` counts the neighbours of the value `j` that exceed `j` in the
//! list `0, sigma(1), ..., sigma(n+1), 0`. Everything else here counts
//! permutations by sweeping `S_n` in lexicographic order, and serves as
//! ground truth for the fast routines in [`crate::nu_rho`] and
//! [`crate::constructions`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::paths::{Path, Step};
use crate::{Error, Result, DEFAULT_PERMUTATION_CAP};

/// A bijection of `{1, ..., n}` given by its images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(alloc::format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Advances to the next permutation in lexicographic order; `false` at the end.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All of `S_n` in lexicographic order of image sequences.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut state: Option<Vec<usize>> = Some((1..=n).collect());
    core::iter::from_fn(move || {
        let cur = state.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            state = Some(next);
        }
        Some(Permutation { images: cur })
    })
}

/// Calls `f` on every element of `S_n` without allocating per permutation.
fn sweep(n: usize, mut f: impl FnMut(&[usize])) {
    let mut v: Vec<usize> = (1..=n).collect();
    loop {
        f(&v);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::EnumerationTooLarge { n: size, cap })
    } else {
        Ok(())
    }
}

// Writes phi(images) into `out` (length images.len() - 1).
fn phi_into(images: &[usize], pos: &mut [usize], out: &mut Vec<i8>) {
    let len = images.len();
    // pos[v] = index of v in the padded list 0, sigma(1), ..., sigma(len), 0
    for (i, &v) in images.iter().enumerate() {
        pos[v] = i + 1;
    }
    let at = |idx: usize| -> usize {
        if idx == 0 || idx == len + 1 {
            0
        } else {
            images[idx - 1]
        }
    };
    out.clear();
    for j in 1..len {
        let p = pos[j];
        let bigger = (at(p - 1) > j) as i8 + (at(p + 1) > j) as i8;
        out.push(bigger - 1);
    }
}

fn word_to_path(word: &[i8]) -> Path {
    Path::new(
        word.iter()
            .map(|&v| Step::from_value(v as i64).expect("phi stays in {-1,0,1}"))
            .collect(),
    )
}

pub fn phi(sigma: &Permutation) -> Result<Path> {
    if sigma.len() < 2 {
        return Err(Error::PermutationTooSmall {
            min: 2,
            got: sigma.len(),
        });
    }
    let mut pos = alloc::vec![0; sigma.len() + 1];
    let mut out = Vec::with_capacity(sigma.len());
    phi_into(&sigma.images, &mut pos, &mut out);
    Ok(word_to_path(&out))
}

/// Number of permutations in `S_{n+1}` that `phi` sends to `p` (`n = p.len()`).
pub fn nu_bruteforce(p: &Path) -> Result<BigInt> {
    nu_bruteforce_with_cap(p, DEFAULT_PERMUTATION_CAP)
}

pub fn nu_bruteforce_with_cap(p: &Path, cap: usize) -> Result<BigInt> {
    let size = p.len() + 1;
    check_cap(size, cap)?;
    if p.is_empty() {
        // S_1 has no phi image; the count of the empty word is taken as 1.
        return Ok(BigInt::from(1));
    }
    let target = p.values();
    let mut pos = alloc::vec![0; size + 1];
    let mut word = Vec::with_capacity(size);
    let mut count = 0u64;
    sweep(size, |images| {
        phi_into(images, &mut pos, &mut word);
        if word == target {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// Histogram of `phi` over `S_size`: every word in the image with its preimage count.
pub fn phi_preimage_counts(size: usize) -> Result<BTreeMap<Path, u64>> {
    phi_preimage_counts_with_cap(size, DEFAULT_PERMUTATION_CAP)
}

pub fn phi_preimage_counts_with_cap(size: usize, cap: usize) -> Result<BTreeMap<Path, u64>> {
    if size < 2 {
        return Err(Error::PermutationTooSmall { min: 2, got: size });
    }
    check_cap(size, cap)?;
    let mut raw: BTreeMap<Vec<i8>, u64> = BTreeMap::new();
    let mut pos = alloc::vec![0; size + 1];
    let mut word = Vec::with_capacity(size);
    sweep(size, |images| {
        phi_into(images, &mut pos, &mut word);
        *raw.entry(word.clone()).or_insert(0) += 1;
    });
    Ok(raw.into_iter().map(|(w, c)| (word_to_path(&w), c)).collect())
}

fn alternating(images: &[usize]) -> bool {
    images.windows(3).all(|w| (w[0] < w[1]) == (w[1] > w[2]))
}

/// Consecutive comparisons strictly alternate; sizes 1 and 2 qualify.
pub fn is_alternating(sigma: &Permutation) -> bool {
    alternating(&sigma.images)
}

/// Zig-zag number: alternating `sigma` in `S_n` with `sigma(1) > sigma(2)`;
/// `beta_0 = beta_1 = 1`.
pub fn beta_bruteforce(n: usize) -> Result<BigInt> {
    beta_bruteforce_with_cap(n, DEFAULT_PERMUTATION_CAP)
}

pub fn beta_bruteforce_with_cap(n: usize, cap: usize) -> Result<BigInt> {
    if n < 2 {
        return Ok(BigInt::from(1));
    }
    check_cap(n, cap)?;
    let mut count = 0u64;
    sweep(n, |v| {
        if v[0] > v[1] && alternating(v) {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// Alternating `sigma` in `S_{n+1}` with `sigma(1) = k + 1 > sigma(2)`;
/// `E_{0,0} = 1`.
pub fn entringer_bruteforce(n: usize, k: usize) -> Result<BigInt> {
    entringer_bruteforce_with_cap(n, k, DEFAULT_PERMUTATION_CAP)
}

pub fn entringer_bruteforce_with_cap(n: usize, k: usize, cap: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    Ok(entringer_row_bruteforce_with_cap(n, cap)?.swap_remove(k))
}

/// `(E_{n,0}, ..., E_{n,n})` from one sweep of `S_{n+1}`.
pub fn entringer_row_bruteforce_with_cap(n: usize, cap: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Ok(alloc::vec![BigInt::from(1)]);
    }
    check_cap(n + 1, cap)?;
    let mut counts = alloc::vec![0u64; n + 1];
    sweep(n + 1, |v| {
        if v[0] > v[1] && alternating(v) {
            counts[v[0] - 1] += 1;
        }
    });
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// All `sigma` in `S_n` satisfying `pred`, in lexicographic order.
pub fn filter_permutations(
    n: usize,
    cap: usize,
    mut pred: impl FnMut(&Permutation) -> bool,
) -> Result<Vec<Permutation>> {
    check_cap(n, cap)?;
    Ok(permutations(n).filter(|s| pred(s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn path(v: &[i64]) -> Path {
        Path::from_values(v).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&perm(&[2, 1, 4, 5, 3])).unwrap(), path(&[1, -1, 0, 0]));
        assert_eq!(phi(&perm(&[1, 2])).unwrap(), path(&[0]));
        assert_eq!(phi(&perm(&[2, 1])).unwrap(), path(&[0]));
        assert_eq!(phi(&perm(&[1])), Err(Error::PermutationTooSmall { min: 2, got: 1 }));
    }

    #[test]
    fn invalid_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn lexicographic_sweep() {
        let all: Vec<_> = permutations(3).map(|p| p.images().to_vec()).collect();
        assert_eq!(all, [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]);
        assert_eq!(permutations(5).count(), 120);
    }

    #[test]
    fn preimage_counts() {
        assert_eq!(nu_bruteforce(&path(&[0])).unwrap(), BigInt::from(2));
        assert_eq!(nu_bruteforce(&path(&[0, 0])).unwrap(), BigInt::from(4));
        assert_eq!(nu_bruteforce(&path(&[1, 1])).unwrap(), BigInt::from(0));
        assert_eq!(nu_bruteforce(&path(&[0, 1, -1, 0])).unwrap(), BigInt::from(8));
        assert!(nu_bruteforce(&Path::new(vec![Step::Flat; 9])).is_err());
        assert!(nu_bruteforce_with_cap(&Path::new(vec![Step::Flat; 9]), 10).is_ok());
    }

    #[test]
    fn histogram_matches_single_counts() {
        let hist = phi_preimage_counts(5).unwrap();
        assert_eq!(hist.values().sum::<u64>(), 120);
        for (p, &c) in &hist {
            assert_eq!(nu_bruteforce(p).unwrap(), BigInt::from(c));
        }
    }

    #[test]
    fn alternation() {
        assert!(is_alternating(&perm(&[3, 1, 2])));
        assert!(!is_alternating(&perm(&[3, 2, 1])));
        assert!(is_alternating(&perm(&[1])));
        assert!(is_alternating(&perm(&[2, 1])));
    }

    #[test]
    fn zigzag_and_entringer() {
        let b: Vec<_> = (0..=6).map(|n| beta_bruteforce(n).unwrap()).collect();
        assert_eq!(b, [1, 1, 1, 2, 5, 16, 61].map(BigInt::from));
        assert_eq!(entringer_bruteforce(4, 4).unwrap(), BigInt::from(5));
        assert_eq!(entringer_bruteforce(1, 0).unwrap(), BigInt::from(0));
        assert_eq!(entringer_bruteforce(5, 5).unwrap(), BigInt::from(16));
        assert_eq!(entringer_bruteforce(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(entringer_bruteforce(2, 3), Err(Error::IndexOutOfRange { n: 2, k: 3 }));
        assert!(beta_bruteforce(10).is_err());
    }
}
