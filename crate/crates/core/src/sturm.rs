//! Exact real-root counting for univariate polynomials via Sturm sequences
//! over the rationals.
//!
//! The count is always of *distinct* real roots: the input is first reduced
//! to its squarefree part through an exact gcd with the derivative. A
//! polynomial "has only real zeros" exactly when the count equals the degree
//! of that squarefree part.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Dense univariate polynomial over the rationals; coefficients ascending,
/// leading coefficient nonzero.
#[derive(Clone, Debug, PartialEq)]
struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    fn new(mut coeffs: Vec<BigRational>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    fn degree(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero")
    }

    fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        UniPoly::new(coeffs)
    }

    /// Scales so the leading coefficient has absolute value 1. The multiplier
    /// is positive, which keeps every sign evaluation unchanged.
    fn normalized(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let scale = self.leading().abs();
        UniPoly::new(self.coeffs.iter().map(|c| c / &scale).collect())
    }

    /// Euclidean division, returning (quotient, remainder).
    fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (UniPoly::new(vec![]), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        let qdeg = self.degree() - ddeg;
        let mut quot = vec![BigRational::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let c = &rem[k + ddeg] / dlead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let delta = d * &c;
                    rem[k + i] -= delta;
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.normalized();
        let mut b = other.normalized();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.normalized();
        }
        a
    }

    /// Sign of the value at +infinity (`dir = 1`) or -infinity (`dir = -1`).
    fn sign_at_infinity(&self, dir: i32) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let lead = if self.leading().is_positive() { 1 } else { -1 };
        if dir > 0 || self.degree().is_multiple_of(2) {
            lead
        } else {
            -lead
        }
    }
}

/// Converts a polynomial in at most one variable into dense form.
fn to_univariate(p: &Polynomial) -> Result<UniPoly> {
    let vars = p.vars();
    if vars.len() > 1 {
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        return Err(Error::NotUnivariate(names.join(", ")));
    }
    let deg = p.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for (m, c) in p.iter() {
        coeffs[m.degree() as usize] = BigRational::from_integer(c.clone());
    }
    Ok(UniPoly::new(coeffs))
}

fn squarefree_part(p: &UniPoly) -> UniPoly {
    if p.is_zero() || p.degree() == 0 {
        return p.normalized();
    }
    let g = p.gcd(&p.derivative());
    if g.is_zero() || g.degree() == 0 {
        return p.normalized();
    }
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero(), "gcd must divide exactly");
    q.normalized()
}

fn sign_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of `p`, which must be nonzero and involve at
/// most one variable. Constants have zero roots.
pub fn real_root_count(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let u = to_univariate(p)?;
    let sf = squarefree_part(&u);
    if sf.degree() == 0 {
        return Ok(0);
    }
    let mut chain = vec![sf.clone(), sf.derivative().normalized()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        let mut next = r.normalized();
        next.coeffs.iter_mut().for_each(|c| *c = -c.clone());
        chain.push(next);
    }
    chain.pop();
    let at_minus = sign_variations(chain.iter().map(|q| q.sign_at_infinity(-1)));
    let at_plus = sign_variations(chain.iter().map(|q| q.sign_at_infinity(1)));
    Ok(at_minus - at_plus)
}

/// Degree of the squarefree part of `p` (product of distinct irreducible
/// factors).
pub fn squarefree_degree(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let u = to_univariate(p)?;
    Ok(if u.degree() == 0 {
        0
    } else {
        squarefree_part(&u).degree()
    })
}

/// True when every complex zero of `p` is real, i.e. the distinct-root count
/// reaches the squarefree degree.
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    Ok(real_root_count(p)? == squarefree_degree(p)?)
}
