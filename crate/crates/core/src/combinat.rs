//! Binomial coefficients and factorials, exact and modulo `p`.

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc: u64 = 1;
    while k > 0 {
        let (ni, ki) = (n % p64, k % p64);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binomial(ni, ki) % p64;
        n /= p64;
        k /= p64;
    }
    acc as u32
}

/// `C(n, k)` for `n < p <= 7`, exactly.
fn small_binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `n! mod p`.
pub fn factorial_mod_p(n: u64, p: u32) -> u32 {
    if n >= p as u64 {
        return 0;
    }
    (1..=n).fold(1u64, |acc, j| acc * j % p as u64) as u32
}

/// `C(n, k)` as an arbitrary-precision integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![1u64]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u64; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn lucas_matches_pascal_mod_p() {
        let rows = pascal(40);
        for p in [2u32, 3, 5, 7] {
            for (n, row) in rows.iter().enumerate() {
                for (k, &c) in row.iter().enumerate() {
                    assert_eq!(binomial_mod_p(n as u64, k as u64, p), (c % p as u64) as u32, "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn exact_binomial_matches_pascal() {
        let rows = pascal(60);
        for (n, row) in rows.iter().enumerate() {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64), BigUint::from(c));
            }
            assert_eq!(binomial(n as u64, n as u64 + 1), BigUint::default());
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial_mod_p(4, 5), 24 % 5);
        assert_eq!(factorial_mod_p(6, 7), 720 % 7);
        assert_eq!(factorial_mod_p(5, 5), 0);
        assert_eq!(factorial_mod_p(0, 2), 1);
    }
}
