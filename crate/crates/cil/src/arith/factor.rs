//! 64-bit factorization: deterministic Miller-Rabin plus Brent-cycle rho.

use crate::error::{Error, Result};

use super::{FactoredInteger, SpfSieve};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin. The witness set covers the full 64-bit range.
pub fn is_prime(n: u64) -> bool {
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
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // These twelve bases are a known deterministic witness set below 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Brent's variant of Pollard rho. `n` must be composite, odd, and not a
/// perfect power of a tiny prime; the polynomial offset `c` is stepped
/// deterministically so repeated runs agree.
fn brent_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut q = 1u64;
        let mut xs = x;
        let m = 128u64;
        let mut r = 1u64;
        while d == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && d == 1 {
                xs = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                d = gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if d == n {
            // backtrack one step at a time
            d = 1;
            let mut ys = xs;
            while d == 1 {
                ys = f(ys);
                d = gcd(x.abs_diff(ys), n);
            }
        }
        if d != n && d != 1 {
            return d;
        }
    }
    unreachable!("rho failed on composite {n}")
}

fn factor_recursive(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = brent_rho(n);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

/// Factor `n >= 1` into sorted prime powers. When a sieve covering `n` is
/// supplied the smallest-prime-factor chain is used; otherwise trial
/// division strips small primes and Brent rho splits what remains.
pub fn factorize(n: u64, sieve: Option<&SpfSieve>) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::invalid_argument("factorize: n must be positive"));
    }
    if let Some(s) = sieve {
        if n <= s.limit() {
            return Ok(FactoredInteger::from_sorted_primes(n, s.factor_chain(n)));
        }
    }
    let mut primes = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5] {
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
    }
    // wheel over residues coprime to 30
    let mut p = 7u64;
    let wheel = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut w = 0;
    while p * p <= m && p < (1 << 16) {
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
        p += wheel[w];
        w = (w + 1) % wheel.len();
    }
    if m > 1 {
        factor_recursive(m, &mut primes);
    }
    primes.sort_unstable();
    Ok(FactoredInteger::from_sorted_primes(n, primes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        assert!(is_prime(2));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1, None).unwrap().factors(), &[]);
        assert_eq!(factorize(60, None).unwrap().factors(), &[(2, 2), (3, 1), (5, 1)]);
        // primality-test oracle: 10^9+7 is prime, so it is its own factorization
        assert!(is_prime(1_000_000_007));
        assert_eq!(
            factorize(1_000_000_007, None).unwrap().factors(),
            &[(1_000_000_007, 1)]
        );
    }

    #[test]
    fn factorize_zero_rejected() {
        assert!(matches!(factorize(0, None), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn factorize_hard_semiprime() {
        let p = 4_294_967_291u64; // largest 32-bit prime
        let q = 4_294_967_279u64;
        let f = factorize(p * q, None).unwrap();
        assert_eq!(f.factors(), &[(q, 1), (p, 1)]);
    }
}
