//! Signed permutations (the hyperoctahedral group) and their cycle-based
//! statistics, plus plain permutations as the negative-free special case.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{var, Monomial, Polynomial, VarId};

/// Default cap on the rank for exhaustive enumeration (`2^8 * 8!` words).
pub const MAX_SIGNED_N: usize = 8;

/// One-line form of a signed permutation: `vals[i-1] = pi(i)`, with the
/// absolute values a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm {
    vals: Vec<i32>,
}

impl SignedPerm {
    pub fn new(vals: Vec<i32>) -> Result<SignedPerm> {
        let n = vals.len();
        let mut seen = vec![false; n + 1];
        for &v in &vals {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::InvalidSignedPerm(format!("{vals:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { vals })
    }

    pub fn n(&self) -> usize {
        self.vals.len()
    }

    pub fn vals(&self) -> &[i32] {
        &self.vals
    }

    /// `pi(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> i32 {
        self.vals[i - 1]
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vals.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Counts of the six cycle-based statistics; `exc + aexc + fix + single = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CycleStats {
    pub exc: usize,
    pub aexc: usize,
    pub fix: usize,
    pub single: usize,
    pub neg: usize,
    pub cyc: usize,
}

/// Excedance at `i` means `pi(|pi(i)|) > pi(i)`; anti-excedance is `<`;
/// fixed points (`pi(i) = i`) and singletons (`pi(i) = -i`) are the equality
/// cases. Cycles are the orbits of `i -> |pi(i)|`.
pub fn cycle_stats(p: &SignedPerm) -> CycleStats {
    let n = p.n();
    let mut s = CycleStats::default();
    for i in 1..=n {
        let v = p.apply(i);
        if v < 0 {
            s.neg += 1;
        }
        if v == i as i32 {
            s.fix += 1;
        } else if v == -(i as i32) {
            s.single += 1;
        } else if p.apply(v.unsigned_abs() as usize) > v {
            s.exc += 1;
        } else {
            s.aexc += 1;
        }
    }
    let mut seen = vec![false; n + 1];
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        s.cyc += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p.apply(i).unsigned_abs() as usize;
        }
    }
    s
}

/// Streams all `2^n n!` signed permutations (or the `n!` plain ones):
/// underlying permutations in lexicographic order, sign masks in binary
/// counting order within each.
pub struct SignedIter {
    perm: Vec<i32>,
    mask: u64,
    negatives: bool,
    fresh: bool,
    done: bool,
}

impl SignedIter {
    fn current(&self) -> SignedPerm {
        let vals = self
            .perm
            .iter()
            .enumerate()
            .map(|(i, &v)| if self.mask >> i & 1 == 1 { -v } else { v })
            .collect();
        SignedPerm { vals }
    }

    fn next_permutation(&mut self) -> bool {
        let p = &mut self.perm;
        let n = p.len();
        if n < 2 {
            return false;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
            return false;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| p[j] > p[i])
            .expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
        true
    }
}

impl Iterator for SignedIter {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current());
        }
        let n = self.perm.len();
        if self.negatives && self.mask + 1 < 1u64 << n {
            self.mask += 1;
            return Some(self.current());
        }
        self.mask = 0;
        if self.next_permutation() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

pub fn enumerate(n: usize, negatives: bool) -> Result<SignedIter> {
    if n > MAX_SIGNED_N {
        return Err(Error::BoundExceeded {
            what: "rank",
            got: n,
            max: MAX_SIGNED_N,
        });
    }
    Ok(SignedIter {
        perm: (1..=n as i32).collect(),
        mask: 0,
        negatives,
        fresh: true,
        done: false,
    })
}

/// A cycle statistic usable as an exponent or an equality filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedStat {
    Exc,
    Aexc,
    Fix,
    Single,
    Neg,
    Cyc,
}

impl SignedStat {
    pub fn of(self, s: &CycleStats) -> usize {
        match self {
            SignedStat::Exc => s.exc,
            SignedStat::Aexc => s.aexc,
            SignedStat::Fix => s.fix,
            SignedStat::Single => s.single,
            SignedStat::Neg => s.neg,
            SignedStat::Cyc => s.cyc,
        }
    }
}

/// Distribution polynomial over the (optionally filtered) enumeration.
/// Filters are equality constraints; repeated variables add exponents, so
/// `[(Exc, x), (Single, x)]` realizes the composite statistic `exc+single`.
pub fn gen_poly(
    n: usize,
    negatives: bool,
    stats: &[(SignedStat, VarId)],
    filters: &[(SignedStat, usize)],
) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for perm in enumerate(n, negatives)? {
        let s = cycle_stats(&perm);
        if filters.iter().any(|&(stat, want)| stat.of(&s) != want) {
            continue;
        }
        let mut exps: BTreeMap<VarId, u32> = BTreeMap::new();
        for &(stat, v) in stats {
            *exps.entry(v).or_insert(0) += stat.of(&s) as u32;
        }
        out.add_term(Monomial::from_exps(exps), BigInt::from(1));
    }
    Ok(out)
}

/// `sum_pi x^exc p^fix q^cyc` over plain permutations.
pub fn apq_poly(n: usize) -> Result<Polynomial> {
    gen_poly(
        n,
        false,
        &[
            (SignedStat::Exc, var("x")),
            (SignedStat::Fix, var("p")),
            (SignedStat::Cyc, var("q")),
        ],
        &[],
    )
}

/// Type B Eulerian polynomial `sum x^{exc+single}` over signed permutations.
pub fn type_b_poly(n: usize) -> Result<Polynomial> {
    gen_poly(
        n,
        true,
        &[(SignedStat::Exc, var("x")), (SignedStat::Single, var("x"))],
        &[],
    )
}

/// `sum x^{exc+single} p^neg q^cyc` over signed permutations.
pub fn bpq_poly(n: usize) -> Result<Polynomial> {
    gen_poly(
        n,
        true,
        &[
            (SignedStat::Exc, var("x")),
            (SignedStat::Single, var("x")),
            (SignedStat::Neg, var("p")),
            (SignedStat::Cyc, var("q")),
        ],
        &[],
    )
}

/// Derangement polynomial `sum_{fix=0} x^exc`, over signed permutations when
/// `signed` is set and plain ones otherwise.
pub fn derangement_poly(n: usize, signed: bool) -> Result<Polynomial> {
    gen_poly(
        n,
        signed,
        &[(SignedStat::Exc, var("x"))],
        &[(SignedStat::Fix, 0)],
    )
}
