//! Recurrence-built polynomial families.
//!
//! These are the production routes for the named families; the enumerative
//! and grammatical routes elsewhere in the crate are checked against them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::poly::{var, Polynomial, VarId};

fn x() -> VarId {
    var("x")
}

/// Eulerian polynomial `A_n(x)` from
/// `A_n = n x A_{n-1} + x(1-x) A_{n-1}'`, `A_0 = 1`.
pub fn eulerian_poly(n: usize) -> Polynomial {
    let mut a = Polynomial::one();
    let x_poly = Polynomial::var(x());
    let shift = &x_poly - &(&x_poly * &x_poly); // x(1-x)
    for m in 1..=n {
        a = &(&a.scale(&BigInt::from(m)) * &x_poly) + &(&shift * &a.partial(x()));
    }
    a
}

/// Second-order Eulerian polynomial `C_n(x)` from
/// `C_{n+1} = (2n+1) x C_n + x(1-x) C_n'`, `C_0 = 1`.
pub fn second_eulerian_poly(n: usize) -> Polynomial {
    let mut c = Polynomial::one();
    let x_poly = Polynomial::var(x());
    let shift = &x_poly - &(&x_poly * &x_poly);
    for m in 0..n {
        c = &(&c.scale(&BigInt::from(2 * m + 1)) * &x_poly) + &(&shift * &c.partial(x()));
    }
    c
}

fn apply_xyz_operator(p: &Polynomial) -> Polynomial {
    let xyz = Polynomial::parse("x*y*z").unwrap();
    let sum = &(&p.partial(var("x")) + &p.partial(var("y"))) + &p.partial(var("z"));
    &xyz * &sum
}

/// Trivariate second-order Eulerian polynomial `C_n(x,y,z)`, generated by
/// `C_{n+1} = xyz (d/dx + d/dy + d/dz) C_n` from `C_0 = x`.
///
/// The base case is the degenerate convention that makes the binomial
/// convolution with `E_n` exact at every index; for `n >= 1` the family
/// agrees with the ascent/descent/plateau enumerator over Stirling
/// permutations.
pub fn trivariate_second_eulerian(n: usize) -> Polynomial {
    let mut c = Polynomial::var(var("x"));
    for _ in 0..n {
        c = apply_xyz_operator(&c);
    }
    c
}

/// `E_n(x,y,z)`, the plateau/descent/ascent enumerator over the restricted
/// Stirling permutations, generated by the same operator from `E_1 = yz`.
/// Defined for `n >= 1`.
pub fn e_poly(n: usize) -> Polynomial {
    assert!(n >= 1, "E_n starts at n = 1");
    let mut e = Polynomial::parse("y*z").unwrap();
    for _ in 1..n {
        e = apply_xyz_operator(&e);
    }
    e
}

/// Number of series-reduced rooted trees with `n+1` labeled leaves,
/// `a_n = 2^n C_n(1/2)`.
pub fn series_reduced_count(n: usize) -> BigInt {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let point: BTreeMap<VarId, BigRational> = [(x(), half)].into();
    let v = second_eulerian_poly(n)
        .eval(&point)
        .expect("univariate in x");
    let scaled = v * BigRational::from_integer(BigInt::from(2).pow(n as u32));
    assert!(scaled.is_integer(), "2^n C_n(1/2) is an integer");
    scaled.to_integer()
}
