//! Integer predicates and the two-squares representation count.
//!
//! Everything here is integer-exact; square roots use Newton iteration on
//! integers rather than floating point.

use crate::error::{domain, Result};

/// Prime factorization with the power of two split off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Exponent of 2.
    pub two_exp: u32,
    /// Odd prime factors in strictly increasing order, with exponents >= 1.
    pub odd: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn product(&self) -> u64 {
        self.odd
            .iter()
            .fold(1u64 << self.two_exp, |acc, &(p, e)| acc * p.pow(e))
    }
}

/// Trial-division factorization of `n >= 1`.
pub fn factorize(mut n: u64) -> Result<Factorization> {
    if n == 0 {
        return domain("cannot factor 0");
    }
    let two_exp = n.trailing_zeros();
    n >>= two_exp;
    let mut odd = Vec::new();
    let mut p = 3u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            odd.push((p, e));
        }
        p += 2;
    }
    if n > 1 {
        odd.push((n, 1));
    }
    Ok(Factorization { two_exp, odd })
}

/// Number of ordered pairs `(x, y)` of integers with `x^2 + y^2 = n`, from the
/// prime factorization of `n`.
pub fn r2(n: u64) -> Result<u64> {
    if n == 0 {
        return domain("r2 is defined for N >= 1");
    }
    let f = factorize(n)?;
    let mut count = 4u64;
    for &(p, e) in &f.odd {
        if p % 4 == 1 {
            count *= 1 + u64::from(e);
        } else if e % 2 == 1 {
            return Ok(0);
        }
    }
    Ok(count)
}

/// `r2` by scanning lattice points `|x| <= sqrt(n)`.
pub fn r2_oracle(n: u64) -> u64 {
    let r = isqrt(n);
    let mut count = 0;
    for x in 0..=r {
        let rest = n - x * x;
        if is_square(rest) {
            let y = isqrt(rest);
            // sign choices for x and y, not double-counting zero
            let xs = if x == 0 { 1 } else { 2 };
            let ys = if y == 0 { 1 } else { 2 };
            count += xs * ys;
        }
    }
    count
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // start above the root so the iteration decreases monotonically
    let mut x = 1u64 << ((64 - n.leading_zeros()) / 2 + 1);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn is_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// `n = k(k+1)/2` for some `k >= 0`.
pub fn is_triangular(n: u64) -> bool {
    // 8n + 1 is an odd square exactly for triangular n
    is_square(8 * n + 1)
}

/// The truth function: 1 for true, 0 for false.
pub fn chi(b: bool) -> i64 {
    i64::from(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r2_examples() {
        assert_eq!(r2(4).unwrap(), 4);
        assert_eq!(r2(5).unwrap(), 8);
        assert_eq!(r2(1).unwrap(), 4);
        assert_eq!(r2(3).unwrap(), 0);
        assert_eq!(r2(25).unwrap(), 12);
        assert_eq!(r2(9).unwrap(), 4);
        assert!(r2(0).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(r2_oracle(1), 4);
        assert_eq!(r2_oracle(2), 4);
        assert_eq!(r2_oracle(3), 0);
        assert_eq!(r2_oracle(25), 12);
    }

    #[test]
    fn predicates() {
        assert!(is_square(16));
        assert!(!is_square(12));
        assert!(is_square(0));
        assert!(is_triangular(10));
        assert!(is_triangular(0));
        assert!(!is_triangular(11));
        assert_eq!(chi(false), 0);
        assert_eq!(chi(true), 1);
    }

    #[test]
    fn predicates_match_scans() {
        for n in 0..2000u64 {
            let sq = (0..=n).take_while(|k| k * k <= n).any(|k| k * k == n);
            let tri = (0..=n)
                .take_while(|k| k * (k + 1) / 2 <= n)
                .any(|k| k * (k + 1) / 2 == n);
            assert_eq!(is_square(n), sq, "n = {n}");
            assert_eq!(is_triangular(n), tri, "n = {n}");
        }
    }

    #[test]
    fn isqrt_near_large_squares() {
        for k in [1u64 << 31, 3_037_000_499, 4_294_967_295] {
            assert_eq!(isqrt(k * k), k);
            assert_eq!(isqrt(k * k - 1), k - 1);
        }
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }

    #[test]
    fn factorization_reconstructs() {
        for n in 1..3000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.product(), n);
            assert!(f.odd.windows(2).all(|w| w[0].0 < w[1].0));
        }
        assert!(factorize(0).is_err());
    }
}
