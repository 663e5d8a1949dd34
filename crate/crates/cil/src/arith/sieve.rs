//! Smallest-prime-factor sieve, prime enumeration, and the segmented
//! block machinery used by every large table builder in the crate.

use crate::error::{Error, Result};

/// Smallest prime factor of every integer up to a limit.
///
/// `spf(n) = n` exactly when `n` is prime; otherwise `spf(n) <= sqrt(n)`.
/// Immutable after construction and safe to share across threads.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Sieve up to `limit` inclusive. Refuses limits above 2^31 so the
    /// backing array stays within a few gigabytes.
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::invalid_argument("sieve limit must be at least 2"));
        }
        if limit > (1 << 31) {
            return Err(Error::ResourceGuard(format!(
                "sieve limit {limit} exceeds 2^31; use segmented builders instead"
            )));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut i = 2usize;
        while i <= n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                let mut j = i * i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
                // i*i overflow is impossible: i <= 2^31 so i*i <= 2^62 < usize::MAX,
                // but the loop above only runs while j <= n.
            }
            i += 1;
        }
        Ok(SpfSieve { spf })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of `n`; `n` must satisfy `2 <= n <= limit`.
    pub fn spf(&self, n: u64) -> u64 {
        self.spf[n as usize] as u64
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Prime divisors of `n` with multiplicity, ascending.
    pub fn factor_chain(&self, n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m];
            out.push(p as u64);
            m /= p as usize;
        }
        out.sort_unstable();
        out
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.spf
            .iter()
            .enumerate()
            .skip(2)
            .filter(|(i, &p)| p as usize == *i)
            .map(|(i, _)| i as u64)
    }
}

/// All primes `<= limit` by a segmented Eratosthenes sweep; the working set
/// stays at one block regardless of the limit.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let root = limit.isqrt();
    let base = simple_primes(root.max(2));
    let mut out = Vec::new();
    let block = 1u64 << 20;
    let mut lo = 2u64;
    let mut marks = vec![false; block as usize];
    while lo <= limit {
        let hi = (lo + block).min(limit + 1);
        let len = (hi - lo) as usize;
        marks[..len].fill(false);
        for &p in &base {
            if p * p >= hi {
                break;
            }
            let mut m = (lo.div_ceil(p) * p).max(p * p);
            while m < hi {
                marks[(m - lo) as usize] = true;
                m += p;
            }
        }
        for i in 0..len {
            if !marks[i] {
                out.push(lo + i as u64);
            }
        }
        lo = hi;
    }
    out
}

fn simple_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Mobius function for all `n <= limit` by linear sieve.
pub fn moebius_values(limit: u64) -> Vec<i8> {
    let n = limit as usize;
    let mut mu = vec![0i8; n + 1];
    let mut spf = vec![0u32; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    if n >= 1 {
        mu[1] = 1;
    }
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            if p > spf[i] as usize || i * p > n {
                break;
            }
            spf[i * p] = p as u32;
            mu[i * p] = if i % p == 0 { 0 } else { -mu[i] };
        }
    }
    mu
}

/// Value type a segmented multiplicative sieve can accumulate.
pub trait MultiplicativeValue: Copy + Send {
    fn one() -> Self;
    fn mul_assign(&mut self, rhs: Self);
}

impl MultiplicativeValue for i64 {
    fn one() -> Self {
        1
    }
    fn mul_assign(&mut self, rhs: Self) {
        *self *= rhs;
    }
}

impl MultiplicativeValue for num_complex::Complex64 {
    fn one() -> Self {
        num_complex::Complex64::new(1.0, 0.0)
    }
    fn mul_assign(&mut self, rhs: Self) {
        *self *= rhs;
    }
}

/// Scratch buffers plus the base primes needed to evaluate a multiplicative
/// function on a window `[lo, hi)` by trial division against primes up to
/// `sqrt(limit)`; anything left over is a single large prime.
pub struct BlockSieve {
    base_primes: Vec<u64>,
}

impl BlockSieve {
    pub fn new(limit: u64) -> Self {
        BlockSieve {
            base_primes: simple_primes(limit.isqrt().max(2)),
        }
    }

    pub fn base_primes(&self) -> &[u64] {
        &self.base_primes
    }

    /// Fill `values[i] = f(lo + i)` for `lo + i` in `[lo, hi)`, where `f` is
    /// the multiplicative function with prime-power values `local(p, e)`.
    /// `rem` is caller-provided scratch. `lo >= 1`.
    pub fn fill<V, L>(&self, lo: u64, hi: u64, local: &L, values: &mut Vec<V>, rem: &mut Vec<u64>)
    where
        V: MultiplicativeValue,
        L: Fn(u64, u32) -> V,
    {
        debug_assert!(lo >= 1 && lo <= hi);
        let len = (hi - lo) as usize;
        values.clear();
        values.resize(len, V::one());
        rem.clear();
        rem.extend(lo..hi);
        for &p in &self.base_primes {
            if p * p >= hi {
                // p itself may still lie in the window; the leftover pass
                // below picks it up as a large prime.
                break;
            }
            let mut m = lo.div_ceil(p) * p;
            while m < hi {
                let i = (m - lo) as usize;
                let mut e = 0u32;
                while rem[i] % p == 0 {
                    rem[i] /= p;
                    e += 1;
                }
                values[i].mul_assign(local(p, e));
                m += p;
            }
        }
        for i in 0..len {
            if rem[i] > 1 {
                values[i].mul_assign(local(rem[i], 1));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spf_examples() {
        let s = SpfSieve::new(10).unwrap();
        // spf for 2..=10: 2,3,2,5,2,7,2,3,2
        let expect = [2u64, 3, 2, 5, 2, 7, 2, 3, 2];
        for (n, e) in (2..=10).zip(expect) {
            assert_eq!(s.spf(n), e);
        }
        let s = SpfSieve::new(100).unwrap();
        assert_eq!(s.spf(49), 7);
        assert_eq!(s.spf(60), 2);
    }

    #[test]
    fn spf_guard() {
        assert!(matches!(SpfSieve::new(1), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            SpfSieve::new((1 << 31) + 1),
            Err(Error::ResourceGuard(_))
        ));
    }

    #[test]
    fn spf_invariant_small_or_prime() {
        let s = SpfSieve::new(10_000).unwrap();
        for n in 2..=10_000u64 {
            let p = s.spf(n);
            assert!(p == n || p * p <= n, "spf({n}) = {p}");
        }
    }

    #[test]
    fn segmented_primes_match_simple() {
        assert_eq!(primes_up_to(100_000), simple_primes(100_000));
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
    }

    #[test]
    fn moebius_small() {
        let mu = moebius_values(30);
        assert_eq!(mu[1], 1);
        assert_eq!(mu[4], 0);
        assert_eq!(mu[6], 1);
        assert_eq!(mu[30], -1);
    }

    #[test]
    fn block_fill_matches_direct_tau() {
        // tau(n) via local (p, e) -> e + 1 over an offset window
        let sieve = BlockSieve::new(2000);
        let mut values: Vec<i64> = Vec::new();
        let mut rem = Vec::new();
        sieve.fill(1000, 2000, &|_, e| (e + 1) as i64, &mut values, &mut rem);
        let tau = |n: u64| (1..=n).filter(|d| n % d == 0).count() as i64;
        for (i, &v) in values.iter().enumerate() {
            let n = 1000 + i as u64;
            assert_eq!(v, tau(n), "tau({n})");
        }
    }
}
