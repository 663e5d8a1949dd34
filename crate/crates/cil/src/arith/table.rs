//! Dense coefficient tables indexed from 1 and Dirichlet convolution.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::sieve::moebius_values;

/// Coefficients of an arithmetic function on `1..=limit`, stored densely as
/// complex doubles. Index 0 is unused. A table representing a multiplicative
/// function has entry 1 equal to 1.
#[derive(Clone, Debug)]
pub struct CoefficientTable {
    values: Vec<Complex64>,
}

impl CoefficientTable {
    pub fn zeros(limit: u64) -> Self {
        assert!(limit >= 1, "coefficient table needs limit >= 1");
        CoefficientTable {
            values: vec![Complex64::new(0.0, 0.0); limit as usize + 1],
        }
    }

    pub fn ones(limit: u64) -> Self {
        let mut t = Self::zeros(limit);
        for n in 1..=limit {
            t.set(n, Complex64::new(1.0, 0.0));
        }
        t
    }

    pub fn from_fn(limit: u64, mut f: impl FnMut(u64) -> Complex64) -> Self {
        let mut t = Self::zeros(limit);
        for n in 1..=limit {
            t.set(n, f(n));
        }
        t
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    #[inline]
    pub fn get(&self, n: u64) -> Complex64 {
        self.values[n as usize]
    }

    #[inline]
    pub fn set(&mut self, n: u64, v: Complex64) {
        self.values[n as usize] = v;
    }

    /// Entries `1..=limit` in order.
    pub fn entries(&self) -> &[Complex64] {
        &self.values[1..]
    }

    /// Round every entry to the nearest integer, failing if any entry sits
    /// farther than `tol` from an integer or has imaginary part above `tol`.
    pub fn round_to_integers(&self, tol: f64) -> Result<Vec<i64>> {
        let mut out = vec![0i64; self.values.len()];
        for n in 1..self.values.len() {
            let v = self.values[n];
            let r = v.re.round();
            if (v.re - r).abs() > tol || v.im.abs() > tol {
                return Err(Error::invalid_argument(format!(
                    "entry {n} = {v} is not an integer within {tol}"
                )));
            }
            out[n] = r as i64;
        }
        Ok(out)
    }
}

/// Dirichlet convolution `(f * g)(n) = sum_{d | n} f(d) g(n/d)` on matching
/// limits, by the divisor-pair double loop in O(N log N).
pub fn dirichlet_convolve(f: &CoefficientTable, g: &CoefficientTable) -> Result<CoefficientTable> {
    if f.limit() != g.limit() {
        return Err(Error::invalid_argument(format!(
            "convolution limits differ: {} vs {}",
            f.limit(),
            g.limit()
        )));
    }
    let n = f.limit();
    let mut out = CoefficientTable::zeros(n);
    for d in 1..=n {
        let fd = f.get(d);
        if fd.re == 0.0 && fd.im == 0.0 {
            continue;
        }
        let mut m = d;
        let mut q = 1;
        while m <= n {
            let v = out.get(m) + fd * g.get(q);
            out.set(m, v);
            m += d;
            q += 1;
        }
    }
    Ok(out)
}

/// Mobius function as a coefficient table.
pub fn moebius_table(limit: u64) -> CoefficientTable {
    let mu = moebius_values(limit);
    CoefficientTable::from_fn(limit, |n| Complex64::new(mu[n as usize] as f64, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convolve_all_ones_gives_tau() {
        let ones = CoefficientTable::ones(20);
        let tau = dirichlet_convolve(&ones, &ones).unwrap();
        assert_eq!(tau.get(12).re, 6.0);
        assert_eq!(tau.get(1).re, 1.0);
        assert_eq!(tau.get(16).re, 5.0);
    }

    #[test]
    fn moebius_inversion_identity() {
        // sum_{d|n} mu(d) = [n = 1], exactly
        let n = 2000;
        let conv = dirichlet_convolve(&moebius_table(n), &CoefficientTable::ones(n)).unwrap();
        assert_eq!(conv.get(1).re, 1.0);
        for m in 2..=n {
            assert_eq!(conv.get(m), Complex64::new(0.0, 0.0), "at {m}");
        }
        assert_eq!(conv.get(10).re, 0.0);
    }

    #[test]
    fn moebius_sum_to_1e4() {
        // Mertens value frozen from direct summation of the sieve output
        let mu = moebius_values(10_000);
        let s: i64 = (1..=10_000usize).map(|n| mu[n] as i64).sum();
        assert_eq!(s, -23);
    }

    #[test]
    fn mismatched_limits_rejected() {
        let a = CoefficientTable::ones(10);
        let b = CoefficientTable::ones(11);
        assert!(dirichlet_convolve(&a, &b).is_err());
    }
}
