//! Small-integer number theory used throughout: factorization, primality,
//! modular arithmetic. Everything here is exact and deterministic.

use crate::error::{Error, Result};

/// Trial-division factorization, smallest prime first.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// The exact power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// p-adic valuation of `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// `base^exp mod m` without overflow (m may reach 2^63).
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    let m = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `t` modulo `n`; requires gcd(t, n) = 1.
pub fn multiplicative_order(t: u64, n: u64) -> Result<u64> {
    if n == 0 || num_integer::gcd(t, n) != 1 {
        return Err(Error::InvalidArgument(format!(
            "{t} is not a unit modulo {n}"
        )));
    }
    if n == 1 {
        return Ok(1);
    }
    // The order divides the group order; scan divisors of the Carmichael-ish
    // exponent the slow way. n stays tiny here (construction parameters).
    let mut acc = t % n;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * t % n;
        ord += 1;
        if ord > n {
            return Err(Error::InvalidArgument(format!(
                "order of {t} mod {n} did not close"
            )));
        }
    }
    Ok(ord)
}

/// Deterministic Miller-Rabin for `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be exact for every n < 3.3 * 10^24, which covers the whole u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(factorize(1024), vec![(2, 10)]);
    }

    #[test]
    fn p_part_and_valuation() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 3), 3);
        assert_eq!(p_part(24, 5), 1);
        assert_eq!(valuation(24, 2), 3);
    }

    #[test]
    fn pow_mod_small() {
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(pow_mod(5, 0, 7), 1);
        assert_eq!(pow_mod(7, 3, 1), 0);
    }

    #[test]
    fn multiplicative_order_examples() {
        // 2 has order 3 mod 7: 2, 4, 1.
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(3, 7).unwrap(), 6);
        assert!(multiplicative_order(2, 4).is_err());
    }

    #[test]
    fn prime_u64_matches_sieve_to_10000() {
        let primes = primes_up_to(10_000);
        let mut expect = vec![false; 10_001];
        for &p in &primes {
            expect[p as usize] = true;
        }
        for n in 0..=10_000u64 {
            assert_eq!(is_prime_u64(n), expect[n as usize], "n={n}");
        }
    }

    #[test]
    fn prime_u64_large_values()  {
        assert!(is_prime_u64(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime_u64(2_147_483_649));
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }
}
