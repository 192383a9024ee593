//! The expansion of `(cD)^n` applied to `f` or `c`, where `c_k` and `f_k`
//! stand for the k-th derivatives, together with the box-sorting bijection:
//! terms of `(cD)^n c` correspond to ordered weak set partitions of `[n]`
//! into `n+1` blocks, and those map onto standard Young tableaux with
//! weight-preserving fibers counted by the per-entry index product.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::grammar::Grammar;
use crate::poly::{Monomial, Polynomial, VarId};
use crate::tableaux::{Partition, Syt};

pub const MAX_CD_N: usize = 12;
pub const MAX_OWP_N: usize = 9;
pub const MAX_FIBER_N: usize = 8;

/// `c`, `c1`, `c2`, ... for derivative orders 0, 1, 2, ...
pub fn c_var(order: usize) -> VarId {
    if order == 0 {
        crate::poly::var("c")
    } else {
        crate::poly::var(&format!("c{order}"))
    }
}

/// `f`, `f1`, `f2`, ... for derivative orders 0, 1, 2, ...
pub fn f_var(order: usize) -> VarId {
    if order == 0 {
        crate::poly::var("f")
    } else {
        crate::poly::var(&format!("f{order}"))
    }
}

/// Parses `c`/`c<k>` (or `f`/`f<k>`) back to the derivative order.
fn cd_order(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() {
        Some(0)
    } else {
        rest.parse().ok()
    }
}

/// The derivative grammar `c_k -> c_{k+1}`, `f_k -> f_{k+1}` up to order
/// `max_order`.
pub fn cd_grammar(max_order: usize) -> Grammar {
    let rules = (0..=max_order).flat_map(|k| {
        [
            (c_var(k), Polynomial::var(c_var(k + 1))),
            (f_var(k), Polynomial::var(f_var(k + 1))),
        ]
    });
    Grammar::from_rules(rules).expect("distinct variables")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CdTarget {
    F,
    C,
}

/// The coefficients `F_{n,k}` of `f_k` in `(cD)^n f`, built from
/// `F_{n+1,k} = c F_{n,k-1} + c D F_{n,k}` with `F_{1,1} = c`; returned as
/// `(k, F_{n,k})` pairs. For `n = 0` the single pair is `(0, 1)`.
pub fn f_components(n: usize) -> Result<Vec<(usize, Polynomial)>> {
    if n > MAX_CD_N {
        return Err(Error::BoundExceeded {
            what: "operator power",
            got: n,
            max: MAX_CD_N,
        });
    }
    if n == 0 {
        return Ok(vec![(0, Polynomial::one())]);
    }
    let d = cd_grammar(n);
    let c = Polynomial::var(c_var(0));
    let mut row: Vec<Polynomial> = vec![Polynomial::zero(), c.clone()]; // F_{1,*}
    for _ in 1..n {
        let mut next = vec![Polynomial::zero(); row.len() + 1];
        for (k, f) in row.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let push = &c * f; // c F_{m,k} feeds F_{m+1,k+1}
            let diff = &c * &d.derivative(f); // cD F_{m,k} stays at k
            next[k + 1] = &next[k + 1] + &push;
            next[k] = &next[k] + &diff;
        }
        row = next;
    }
    Ok(row
        .into_iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .collect())
}

/// Exact expansion of `(cD)^n f` (or `(cD)^n c`, substituting `f_k -> c_k`).
pub fn cd_expand(n: usize, target: CdTarget) -> Result<Polynomial> {
    let components = f_components(n)?;
    let mut out = Polynomial::zero();
    for (k, coeff) in components {
        let v = match target {
            CdTarget::F => f_var(k),
            CdTarget::C => c_var(k),
        };
        out = &out + &coeff.mul_term(&Monomial::var(v), &BigInt::from(1));
    }
    Ok(out)
}

/// Bindings `c -> c0`, `c_i -> ci(i)` for `i = 1..=n`, for specializing an
/// expansion of `(cD)^n c`.
pub fn c_bindings(
    n: usize,
    c0: Polynomial,
    ci: impl Fn(usize) -> Polynomial,
) -> BTreeMap<VarId, Polynomial> {
    let mut map = BTreeMap::new();
    map.insert(c_var(0), c0);
    for i in 1..=n {
        map.insert(c_var(i), ci(i));
    }
    map
}

/// The coefficients `a(n, lambda)` read off one row of the expansion:
/// `F_{n,k} = sum_{lambda |- n-k} a(n,lambda) c^{n-len(lambda)} c_lambda`.
/// Since `|lambda|` determines `k`, one map over partitions covers the row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ALambdaTable {
    n: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl ALambdaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, shape: &Partition) -> BigInt {
        self.values.get(shape).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.values.iter()
    }
}

/// Reads every monomial of `(cD)^n f` as `c^{n-len(lambda)} c_lambda f_k`,
/// failing if any term breaks that shape or has a nonpositive coefficient.
pub fn extract_a_table(n: usize) -> Result<ALambdaTable> {
    let expansion = cd_expand(n, CdTarget::F)?;
    let mut values = BTreeMap::new();
    for (m, coeff) in expansion.iter() {
        let mut f_order = None;
        let mut c_exp = 0u32;
        let mut parts: Vec<u32> = Vec::new();
        for (v, e) in m.vars() {
            if let Some(k) = cd_order(v.name(), 'f') {
                if f_order.replace(k).is_some() || e != 1 {
                    return Err(Error::BadExpansionShape(m.to_string()));
                }
            } else if let Some(i) = cd_order(v.name(), 'c') {
                if i == 0 {
                    c_exp = e;
                } else {
                    parts.extend(std::iter::repeat_n(i as u32, e as usize));
                }
            } else {
                return Err(Error::BadExpansionShape(m.to_string()));
            }
        }
        let k = f_order.ok_or_else(|| Error::BadExpansionShape(m.to_string()))?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let shape = Partition::new(parts)?;
        let consistent = shape.sum() as usize == n - k
            && c_exp as usize == n - shape.length()
            && coeff.is_positive();
        if !consistent {
            return Err(Error::BadExpansionShape(m.to_string()));
        }
        values.insert(shape, coeff.clone());
    }
    Ok(ALambdaTable { n, values })
}

/// An ordered weak set partition of `[n]` into blocks `B_0..B_n` with
/// `1 in B_0` and every nonempty `B_i` (`i >= 1`) having minimum `> i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Owp {
    blocks: Vec<Vec<u32>>,
}

impl Owp {
    pub fn n(&self) -> usize {
        self.blocks.len() - 1
    }

    /// Blocks `B_0..B_n`, each sorted ascending; empty blocks included.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// `prod c_i^{(number of blocks with i elements)}`, with `c_0 = c`.
    pub fn weight(&self) -> Monomial {
        Monomial::from_exps(self.blocks.iter().map(|b| (c_var(b.len()), 1)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.blocks.clone())
    }
}

/// Streams `OWP_n` in box-sorting order: element `i` chooses one of the
/// boxes `B_0..B_{i-1}`, so the count is `n!`.
pub struct OwpIter {
    n: usize,
    choices: Vec<usize>, // choices[j] = box of element j+2
    fresh: bool,
    done: bool,
}

impl OwpIter {
    fn current(&self) -> Owp {
        let mut blocks = vec![Vec::new(); self.n + 1];
        if self.n >= 1 {
            blocks[0].push(1);
        }
        for (j, &b) in self.choices.iter().enumerate() {
            blocks[b].push(j as u32 + 2);
        }
        Owp { blocks }
    }
}

impl Iterator for OwpIter {
    type Item = Owp;

    fn next(&mut self) -> Option<Owp> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current());
        }
        // mixed-radix increment: element j+2 has j+2 box choices
        for j in (0..self.choices.len()).rev() {
            if self.choices[j] + 1 < j + 2 {
                self.choices[j] += 1;
                self.choices[j + 1..].iter_mut().for_each(|c| *c = 0);
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

pub fn enumerate_owp(n: usize) -> Result<OwpIter> {
    if n > MAX_OWP_N {
        return Err(Error::BoundExceeded {
            what: "partition ground set",
            got: n,
            max: MAX_OWP_N,
        });
    }
    Ok(OwpIter {
        n,
        choices: vec![0; n.saturating_sub(1)],
        fresh: true,
        done: false,
    })
}

/// The two sorting passes: nonempty blocks become rows, rows are reordered
/// by length (longest at the bottom), then each column is sorted ascending
/// from the bottom.
fn sorted_rows(p: &Owp) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = p.blocks.iter().filter(|b| !b.is_empty()).cloned().collect();
    rows.sort_by_key(|r| std::cmp::Reverse(r.len()));
    let cols = rows.first().map_or(0, |r| r.len());
    for c in 0..cols {
        let depth = rows.iter().take_while(|r| r.len() > c).count();
        let mut column: Vec<u32> = (0..depth).map(|r| rows[r][c]).collect();
        column.sort_unstable();
        for (r, v) in column.into_iter().enumerate() {
            rows[r][c] = v;
        }
    }
    rows
}

/// The row-and-column sort of an ordered weak set partition, always a valid
/// standard Young tableau.
pub fn phi(p: &Owp) -> Result<Syt> {
    Syt::new(sorted_rows(p))
}

/// True when the column sort leaves every row increasing, i.e. the sorted
/// array is standard.
pub fn rows_standard_after_sort(p: &Owp) -> bool {
    let rows = sorted_rows(p);
    rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
}

/// Weight of a tableau: `c^{n+1-len(shape)} prod c_i^{w_i(T)}`.
pub fn tableau_weight(t: &Syt) -> Monomial {
    let profile = t.row_profile();
    let mut exps: Vec<(VarId, u32)> = profile
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &w)| (c_var(i), w as u32))
        .collect();
    exps.push((c_var(0), (t.n() + 1 - t.shape().length()) as u32));
    Monomial::from_exps(exps)
}

/// Number of partitions in `OWP_n` mapping onto `t`, by exhaustive search.
pub fn fiber_count(t: &Syt) -> Result<u64> {
    let n = t.n();
    if n > MAX_FIBER_N {
        return Err(Error::BoundExceeded {
            what: "fiber ground set",
            got: n,
            max: MAX_FIBER_N,
        });
    }
    let mut count = 0;
    for p in enumerate_owp(n)? {
        if phi(&p)? == *t {
            count += 1;
        }
    }
    Ok(count)
}

/// Fiber sizes of every tableau reached from `OWP_n`, in one pass.
pub fn fiber_histogram(n: usize) -> Result<BTreeMap<Syt, u64>> {
    if n > MAX_FIBER_N {
        return Err(Error::BoundExceeded {
            what: "fiber ground set",
            got: n,
            max: MAX_FIBER_N,
        });
    }
    let mut hist = BTreeMap::new();
    for p in enumerate_owp(n)? {
        *hist.entry(phi(&p)?).or_insert(0) += 1;
    }
    Ok(hist)
}

/// Sum of `w(p)` over `OWP_n` as a polynomial in `c, c1, c2, ...`; the
/// combinatorial route to `(cD)^n c`.
pub fn owp_weight_sum(n: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for p in enumerate_owp(n)? {
        out.add_term(p.weight(), BigInt::from(1));
    }
    Ok(out)
}
