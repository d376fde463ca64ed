//! Fast preimage counts `nu` and the product weight `rho`.
//!
//! `nu` follows the insertion recursion: appending a flat step doubles the
//! count, appending a down step sums the counts of the words obtained by
//! lowering one flat (weight 2) or one up step (weight 1) of the prefix, and a
//! word ending in an up step has no preimage.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::numerics::Rational;
use crate::paths::Path;
use crate::{Error, Result};

/// Memo table for [`NuMemo::nu`], keyed by the full word.
#[derive(Debug, Default, Clone)]
pub struct NuMemo {
    table: BTreeMap<Vec<i8>, BigInt>,
}

impl NuMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn nu(&mut self, p: &Path) -> BigInt {
        self.nu_word(&p.values())
    }

    fn nu_word(&mut self, w: &[i8]) -> BigInt {
        let Some((&last, prefix)) = w.split_last() else {
            return BigInt::one();
        };
        if let Some(v) = self.table.get(w) {
            return v.clone();
        }
        let value = match last {
            1 => BigInt::zero(),
            0 => self.nu_word(prefix) * 2u32,
            _ => {
                let mut acc = BigInt::zero();
                let mut lowered = prefix.to_vec();
                for j in 0..prefix.len() {
                    let weight: u32 = match prefix[j] {
                        0 => 2,
                        1 => 1,
                        _ => continue,
                    };
                    lowered[j] -= 1;
                    acc += self.nu_word(&lowered) * weight;
                    lowered[j] += 1;
                }
                acc
            }
        };
        self.table.insert(w.to_vec(), value.clone());
        value
    }
}

/// `nu(p)` with a fresh memo; use [`NuMemo`] to share work across calls.
pub fn nu(p: &Path) -> BigInt {
    NuMemo::new().nu(p)
}

/// `nu(l, 0, -1_k)` from `nu(l, -1_k)`.
pub fn nu_suffix_flat(nu_base: &BigInt, k: usize) -> BigInt {
    nu_base * BigInt::from(2 * (k + 1))
}

/// `nu(l, 1, -1_k)` from `nu(l, 0, -1_{k-1})`, for `k >= 1`.
pub fn nu_suffix_cusp(nu_flat: &BigInt, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Domain("cusp suffix needs k >= 1".into()));
    }
    let (q, r) = (nu_flat * BigInt::from(k + 1)).div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::DivisibilityViolated(alloc::format!(
            "({} + 1) * {nu_flat} is odd",
            k
        )));
    }
    Ok(q)
}

/// `(l_1 + 5)(l_1 + l_2 + 7) ... (l_1 + ... + l_n + 2n + 3)`.
pub fn rho(p: &Path) -> BigInt {
    p.heights()
        .enumerate()
        .map(|(i, h)| BigInt::from(h + 2 * (i as i64 + 1) + 3))
        .product()
}

/// `nu(p) / rho(p)` on Motzkin paths.
pub fn weight_f(p: &Path) -> Result<Rational> {
    weight_f_with(&mut NuMemo::new(), p)
}

pub fn weight_f_with(memo: &mut NuMemo, p: &Path) -> Result<Rational> {
    if !p.is_motzkin() {
        return Err(Error::NotMotzkin(alloc::format!("{p}")));
    }
    Ok(Rational::new(memo.nu(p), rho(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::frac;

    fn p(v: &[i64]) -> Path {
        Path::from_values(v).unwrap()
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu(&p(&[1, -1])), b(2));
        assert_eq!(nu(&p(&[0, 0])), b(4));
        assert_eq!(nu(&p(&[0, 1, -1, 0])), b(8));
        assert_eq!(nu(&Path::empty()), b(1));
        assert_eq!(nu(&p(&[0, 1])), b(0));
    }

    #[test]
    fn suffix_shortcuts() {
        assert_eq!(nu_suffix_flat(&b(2), 0), b(4));
        assert_eq!(nu(&p(&[1, -1, 0])), b(4));
        assert_eq!(nu_suffix_flat(&b(1), 0), b(2));
        assert_eq!(nu_suffix_flat(&b(2), 1), b(8));
        assert_eq!(nu(&p(&[1, 0, -1])), b(8));

        assert_eq!(nu_suffix_cusp(&b(2), 1).unwrap(), b(2));
        assert_eq!(nu_suffix_cusp(&b(4), 1).unwrap(), b(4));
        assert_eq!(nu(&p(&[0, 1, -1])), b(4));
        assert_eq!(nu_suffix_cusp(&b(8), 2).unwrap(), b(12));
        assert_eq!(nu(&p(&[1, 1, -1, -1])), b(12));

        assert!(matches!(nu_suffix_cusp(&b(3), 2), Err(Error::DivisibilityViolated(_))));
        assert!(nu_suffix_cusp(&b(2), 0).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&p(&[0])), b(5));
        assert_eq!(rho(&p(&[0, 0])), b(35));
        assert_eq!(rho(&p(&[1, -1])), b(42));
        assert_eq!(rho(&Path::empty()), b(1));
    }

    #[test]
    fn weights() {
        assert_eq!(weight_f(&p(&[0])).unwrap(), frac(2, 5));
        assert_eq!(weight_f(&p(&[0, 0])).unwrap(), frac(4, 35));
        assert_eq!(weight_f(&p(&[1, -1])).unwrap(), frac(1, 21));
        assert!(matches!(weight_f(&p(&[1, 0])), Err(Error::NotMotzkin(_))));
    }

    #[test]
    fn memo_is_reused() {
        let mut memo = NuMemo::new();
        let a = memo.nu(&p(&[1, 0, 1, -1, 0, -1]));
        let filled = memo.len();
        assert!(filled > 0);
        assert_eq!(memo.nu(&p(&[1, 0, 1, -1, 0, -1])), a);
        assert_eq!(memo.len(), filled);
    }
}
