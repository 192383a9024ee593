//! Classical number tables used as independent oracles: binomials,
//! factorials, Stirling numbers of both kinds, Eulerian numbers and double
//! factorials.
//!
//! The Stirling tables come straight from their triangular recurrences; the
//! Eulerian numbers are read off the Eulerian polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::families;
use crate::poly::{var, Monomial};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Double factorial `n!!`; `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::one();
    }
    let mut out = BigInt::one();
    let mut k = n;
    while k > 0 {
        out *= k;
        k -= 2;
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

pub fn falling_factorial(m: u64, k: u64) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    ((m - k + 1)..=m).map(BigInt::from).product()
}

/// Memoized rows of the classical triangles.
pub struct ClassicalOracle {
    stirling2: Vec<Vec<BigInt>>,
    stirling1: Vec<Vec<BigInt>>,
    eulerian: Vec<Vec<BigInt>>,
}

impl ClassicalOracle {
    /// Builds every triangle up to row `max_n`.
    pub fn new(max_n: usize) -> ClassicalOracle {
        let mut s2 = vec![vec![BigInt::one()]];
        let mut s1 = vec![vec![BigInt::one()]];
        for n in 1..=max_n {
            let (prev2, prev1) = (&s2[n - 1], &s1[n - 1]);
            let mut row2 = vec![BigInt::zero(); n + 1];
            let mut row1 = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                // S(n,k) = k*S(n-1,k) + S(n-1,k-1)
                row2[k] = prev2.get(k).cloned().unwrap_or_else(BigInt::zero) * k + &prev2[k - 1];
                // c(n,k) = (n-1)*c(n-1,k) + c(n-1,k-1)
                row1[k] = prev1.get(k).cloned().unwrap_or_else(BigInt::zero) * (n as u64 - 1)
                    + &prev1[k - 1];
            }
            s2.push(row2);
            s1.push(row1);
        }
        let eulerian = (0..=max_n)
            .map(|n| {
                let a = families::eulerian_poly(n);
                (0..=n)
                    .map(|k| a.coeff(&Monomial::from_exps([(var("x"), k as u32)])))
                    .collect()
            })
            .collect();
        ClassicalOracle {
            stirling2: s2,
            stirling1: s1,
            eulerian,
        }
    }

    /// Stirling number of the second kind `S(n,k)`.
    pub fn stirling2(&self, n: usize, k: usize) -> BigInt {
        self.stirling2[n]
            .get(k)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Signless Stirling number of the first kind `c(n,k)`.
    pub fn stirling1(&self, n: usize, k: usize) -> BigInt {
        self.stirling1[n]
            .get(k)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Eulerian number: the coefficient of `x^k` in the Eulerian polynomial,
    /// under the convention `A_1(x) = x`.
    pub fn eulerian(&self, n: usize, k: usize) -> BigInt {
        self.eulerian[n]
            .get(k)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}
