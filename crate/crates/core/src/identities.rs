//! A registry of named cross-checks. Each check verifies one identity by
//! computing both sides through independent routes (recurrence vs.
//! enumeration, grammar vs. statistics, expansion vs. bijection) and
//! reports a machine-readable pass/fail with a counterexample witness on
//! failure.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::classical::{binomial, double_factorial, factorial, ClassicalOracle};
use crate::error::{Error, Result};
use crate::families::{
    e_poly, eulerian_poly, second_eulerian_poly, series_reduced_count, trivariate_second_eulerian,
};
use crate::grammar::{exact_div_var, Grammar};
use crate::hessenberg::{cofactor_det, second_eulerian_matrix, HessenbergMatrix};
use crate::poly::{var, Monomial, Polynomial, VarId};
use crate::signed::{self, SignedStat};
use crate::stirling::{self, MultisetSpec, Stat, StatRecord};
use crate::sturm;
use crate::tableaux::{enumerate_syt, partitions, syt_of_shape};
use crate::weyl::{self, CdTarget};

pub const DEFAULT_SEED: u64 = 20;

/// Outcome of one check run.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub max_n: u32,
    pub seed: u64,
    pub passed: bool,
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "params": { "max_n": self.max_n, "seed": self.seed },
            "passed": self.passed,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

type CheckFn = fn(u32, u64) -> Result<(), String>;

/// One registry entry: the claim it verifies and the default bound.
pub struct CheckDef {
    pub name: &'static str,
    pub claim: &'static str,
    pub default_max_n: u32,
    run: CheckFn,
}

macro_rules! fail {
    ($($arg:tt)*) => { return Err(format!($($arg)*)) };
}

fn ensure_eq(n: u64, lhs: &Polynomial, rhs: &Polynomial, what: &str) -> Result<(), String> {
    if lhs != rhs {
        fail!("n={n}: {what}: lhs = {lhs}, rhs = {rhs}");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Shared enumeration routes
// ---------------------------------------------------------------------------

/// Ascent/descent/plateau enumerator over the classical Stirling
/// permutations, marked x/y/z.
fn trivariate_enum(n: usize) -> Polynomial {
    stirling::gen_poly(
        &MultisetSpec::classical(n),
        &[
            (Stat::Asc, var("x")),
            (Stat::Des, var("y")),
            (Stat::Plat, var("z")),
        ],
    )
    .expect("within bounds")
}

/// Plateau/descent/ascent enumerator over the restricted words on `m`
/// letters, marked x/y/z.
fn e_enum(m: usize) -> Polynomial {
    stirling::gen_poly(
        &MultisetSpec::restricted(m),
        &[
            (Stat::Plat, var("x")),
            (Stat::Des, var("y")),
            (Stat::Asc, var("z")),
        ],
    )
    .expect("within bounds")
}

/// Six-statistic distribution over the restricted words on `m` letters.
fn six_stat_restricted(m: usize) -> Polynomial {
    stirling::gen_poly(
        &MultisetSpec::restricted(m),
        &[
            (Stat::Pap, var("x")),
            (Stat::Cap, var("y")),
            (Stat::Impap, var("s")),
            (Stat::Bk2, var("t")),
            (Stat::Even, var("p")),
            (Stat::Trace, var("q")),
        ],
    )
    .expect("within bounds")
}

/// Six-statistic distribution over signed permutations of rank `n`.
fn six_stat_signed(n: usize) -> Polynomial {
    signed::gen_poly(
        n,
        true,
        &[
            (SignedStat::Exc, var("x")),
            (SignedStat::Aexc, var("y")),
            (SignedStat::Single, var("s")),
            (SignedStat::Fix, var("t")),
            (SignedStat::Neg, var("p")),
            (SignedStat::Cyc, var("q")),
        ],
        &[],
    )
    .expect("within bounds")
}

fn trivariate_grammar() -> Grammar {
    Grammar::parse("x->x*y*z; y->x*y*z; z->x*y*z").expect("static rules")
}

fn six_variable_grammar() -> Grammar {
    Grammar::parse("I->q*I*(t+s*p); s->(1+p)*x*y; t->(1+p)*x*y; x->(1+p)*x*y; y->(1+p)*x*y")
        .expect("static rules")
}

// ---------------------------------------------------------------------------
// Checks: univariate convolution block
// ---------------------------------------------------------------------------

/// The recurrence-built `C_n` against the defining series
/// `sum_k S(n+k,k) x^k = C_n(x) / (1-x)^{2n+1}`, coefficient by coefficient.
fn check_cnx_recurrence(max_n: u32, _seed: u64) -> Result<(), String> {
    let oracle = ClassicalOracle::new(3 * max_n as usize + 1);
    let x = var("x");
    for n in 0..=max_n as usize {
        let c = second_eulerian_poly(n);
        let window = 2 * n + 1;
        for j in 0..=window {
            let mut expect = BigInt::zero();
            for k in 0..=j {
                let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                expect +=
                    oracle.stirling2(n + k, k) * binomial(2 * n as u64 + 1, (j - k) as u64) * sign;
            }
            let got = c.coeff(&Monomial::from_exps([(x, j as u32)]));
            if got != expect {
                fail!("n={n}: [x^{j}] mismatch: recurrence gives {got}, series gives {expect}");
            }
        }
    }
    Ok(())
}

/// `C_n = n x C_{n-1} + sum_r binom(n, n-r+1) C_{n-r} C_{r-1}`.
fn check_lemma_convolution(max_n: u32, _seed: u64) -> Result<(), String> {
    let c: Vec<Polynomial> = (0..=max_n as usize).map(second_eulerian_poly).collect();
    let x = Polynomial::var(var("x"));
    for n in 1..=max_n as usize {
        let mut rhs = (&c[n - 1] * &x).scale(&BigInt::from(n));
        for r in 1..n {
            let prod = &c[n - r] * &c[r - 1];
            rhs = &rhs + &prod.scale(&binomial(n as u64, (n - r + 1) as u64));
        }
        ensure_eq(n as u64, &c[n], &rhs, "convolution")?;
    }
    Ok(())
}

/// `C_n(1) = (2n-1)!!`.
fn check_double_factorial(max_n: u32, _seed: u64) -> Result<(), String> {
    let one: BTreeMap<VarId, BigRational> = [(var("x"), BigRational::one())].into();
    for n in 0..=max_n as i64 {
        let v = second_eulerian_poly(n as usize)
            .eval(&one)
            .expect("univariate");
        let want = BigRational::from_integer(double_factorial(2 * n - 1));
        if v != want {
            fail!("n={n}: C_n(1) = {v}, (2n-1)!! = {want}");
        }
    }
    Ok(())
}

/// The unsimplified double convolution for `C_{n+1}`.
fn check_gessel_convolution(max_n: u32, _seed: u64) -> Result<(), String> {
    let c: Vec<Polynomial> = (0..=max_n as usize).map(second_eulerian_poly).collect();
    let x = Polynomial::var(var("x"));
    for n in 0..max_n as usize {
        let mut first = Polynomial::zero();
        for k in 0..=n {
            first = &first + &(&c[k] * &c[n - k]).scale(&binomial(n as u64, k as u64));
        }
        let mut second = Polynomial::zero();
        for k in 0..n {
            let mut inner = Polynomial::zero();
            for j in 0..=k {
                inner = &inner + &(&c[j] * &c[k - j]).scale(&binomial(k as u64, j as u64));
            }
            second = &second + &(&inner * &c[n - k]).scale(&binomial(n as u64, k as u64));
        }
        let rhs = &(&x * &first) + &second;
        ensure_eq(n as u64 + 1, &c[n + 1], &rhs, "double convolution")?;
    }
    Ok(())
}

/// `a_n = 2^n C_n(1/2)`: the published initial values and the quadratic
/// recurrence.
fn check_series_reduced(max_n: u32, _seed: u64) -> Result<(), String> {
    let a: Vec<BigInt> = (0..=max_n as usize).map(series_reduced_count).collect();
    let published: &[i64] = &[1, 1, 4, 26, 236, 2752];
    for (n, want) in published.iter().enumerate().take(a.len()) {
        if a[n] != BigInt::from(*want) {
            fail!("n={n}: a_n = {}, published value {want}", a[n]);
        }
    }
    for n in 2..=max_n as usize {
        let mut rhs = &a[n - 1] * n;
        for r in 1..n {
            rhs += &a[n - r] * &a[r - 1] * binomial(n as u64, (n - r + 1) as u64) * 2;
        }
        if a[n] != rhs {
            fail!("n={n}: a_n = {} but recurrence gives {rhs}", a[n]);
        }
    }
    Ok(())
}

/// Every binomial convolution `sum_k binom(n,k) C_k C_{n-k-1}` has only real
/// zeros, certified by an exact Sturm count.
fn check_conv_realroots(max_n: u32, _seed: u64) -> Result<(), String> {
    let c: Vec<Polynomial> = (0..max_n as usize).map(second_eulerian_poly).collect();
    for n in 1..=max_n as usize {
        let mut conv = Polynomial::zero();
        for k in 0..n {
            conv = &conv + &(&c[k] * &c[n - k - 1]).scale(&binomial(n as u64, k as u64));
        }
        let count = sturm::real_root_count(&conv).map_err(|e| e.to_string())?;
        let sf = sturm::squarefree_degree(&conv).map_err(|e| e.to_string())?;
        if count != sf {
            fail!("n={n}: {count} distinct real roots but squarefree degree {sf} in {conv}");
        }
    }
    Ok(())
}

/// The determinant recursion against Laplace expansion on random Hessenberg
/// matrices with integer and with linear-polynomial entries.
fn check_cahill(max_n: u32, seed: u64) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let x = var("x");
    for n in 1..=max_n.min(5) as usize {
        for round in 0..25 {
            let poly_entries = round % 5 == 4;
            let entries: Vec<Vec<Polynomial>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if j > i + 1 {
                                return Polynomial::zero();
                            }
                            let c0 = rng.gen_range(-9i64..=9);
                            let mut e = Polynomial::constant(c0);
                            if poly_entries {
                                let c1 = rng.gen_range(-4i64..=4);
                                e = &e + &Polynomial::from_monomial(Monomial::var(x), c1);
                            }
                            e
                        })
                        .collect()
                })
                .collect();
            let h = HessenbergMatrix::new(entries.clone()).expect("pattern by construction");
            let got = h.det();
            let want = cofactor_det(&entries);
            if got != want {
                fail!("n={n} round={round}: recursion {got} != cofactor {want}");
            }
        }
    }
    Ok(())
}

/// The structured Hessenberg determinant equals `C_n(x)`.
fn check_hessenberg(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 1..=max_n as usize {
        let det = second_eulerian_matrix(n).det();
        ensure_eq(n as u64, &det, &second_eulerian_poly(n), "determinant")?;
    }
    let n4 = second_eulerian_matrix(4).det().to_string();
    if n4 != "x + 22*x^2 + 58*x^3 + 24*x^4" {
        fail!("n=4 determinant printed as {n4}");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Checks: trivariate / grammar block
// ---------------------------------------------------------------------------

/// The operator recurrence `C_{n+1} = xyz (dx+dy+dz) C_n` on the enumerated
/// trivariate polynomials, plus their full `x,y,z` symmetry.
fn check_dumont_symmetry(max_n: u32, _seed: u64) -> Result<(), String> {
    let xyz = Polynomial::parse("x*y*z").unwrap();
    let mut prev = trivariate_enum(1);
    ensure_eq(1, &prev, &xyz, "base case")?;
    for n in 1..=max_n as usize {
        let cur = if n == 1 {
            prev.clone()
        } else {
            let next = trivariate_enum(n);
            let operator = &xyz
                * &(&(&prev.partial(var("x")) + &prev.partial(var("y"))) + &prev.partial(var("z")));
            ensure_eq(n as u64, &next, &operator, "operator recurrence")?;
            next
        };
        // symmetry under all six relabelings of x, y, z
        let perms: [[&str; 3]; 5] = [
            ["x", "z", "y"],
            ["y", "x", "z"],
            ["y", "z", "x"],
            ["z", "x", "y"],
            ["z", "y", "x"],
        ];
        for perm in perms {
            let bind: BTreeMap<VarId, Polynomial> = [
                (var("x"), Polynomial::var(var(perm[0]))),
                (var("y"), Polynomial::var(var(perm[1]))),
                (var("z"), Polynomial::var(var(perm[2]))),
            ]
            .into();
            if cur.subst(&bind) != cur {
                fail!("n={n}: not symmetric under x,y,z -> {perm:?}");
            }
        }
        prev = cur;
    }
    Ok(())
}

/// Grammar derivatives of x, y, z all equal the enumerated trivariate
/// polynomial.
fn check_trivariate_grammar(max_n: u32, _seed: u64) -> Result<(), String> {
    let g = trivariate_grammar();
    for source in ["x", "y", "z"] {
        let mut d = Polynomial::var(var(source));
        for n in 1..=max_n as usize {
            d = g.derivative(&d);
            ensure_eq(n as u64, &d, &trivariate_enum(n), "grammar vs enumeration")?;
        }
    }
    Ok(())
}

/// The change of grammar `{w->vw, u->3w, v->2uw}`: support exponents satisfy
/// `i + 2j + 3k = 2n+1` and substituting the elementary symmetric
/// polynomials recovers the trivariate derivative.
fn check_gamma_extraction(max_n: u32, _seed: u64) -> Result<(), String> {
    let h = Grammar::parse("w->v*w; u->3*w; v->2*u*w").expect("static rules");
    let g = trivariate_grammar();
    let bind: BTreeMap<VarId, Polynomial> = [
        (var("u"), Polynomial::parse("x+y+z").unwrap()),
        (var("v"), Polynomial::parse("x*y+y*z+z*x").unwrap()),
        (var("w"), Polynomial::parse("x*y*z").unwrap()),
    ]
    .into();
    let (u, v, w) = (var("u"), var("v"), var("w"));
    let mut gamma = Polynomial::var(w);
    let mut dgx = Polynomial::var(var("x"));
    for n in 1..=max_n as usize {
        if n > 1 {
            gamma = h.derivative(&gamma);
        }
        dgx = g.derivative(&dgx);
        for (m, _) in gamma.iter() {
            let (i, j, k) = (m.exp(u) as u64, m.exp(v) as u64, m.exp(w) as u64);
            if i + 2 * j + 3 * k != 2 * n as u64 + 1 {
                fail!("n={n}: monomial {m} violates i+2j+3k = 2n+1");
            }
        }
        ensure_eq(n as u64, &gamma.subst(&bind), &dgx, "substitution")?;
    }
    Ok(())
}

/// `D^n(yz)` under the trivariate grammar equals the plateau/descent/ascent
/// enumerator over the restricted words on `n+1` letters.
fn check_e_grammar(max_n: u32, _seed: u64) -> Result<(), String> {
    let g = trivariate_grammar();
    let mut d = Polynomial::parse("y*z").unwrap();
    for n in 0..=max_n as usize {
        if n > 0 {
            d = g.derivative(&d);
        }
        ensure_eq(n as u64, &d, &e_enum(n + 1), "grammar vs enumeration")?;
    }
    Ok(())
}

fn e_coeff_map(e: &Polynomial) -> BTreeMap<(u32, u32), BigInt> {
    e.iter()
        .map(|(m, c)| ((m.exp(var("x")), m.exp(var("y"))), c.clone()))
        .collect()
}

/// The coefficient recurrence
/// `E_{n+1,i,j} = i E_{n,i,j-1} + j E_{n,i-1,j} + (2n-i-j+2) E_{n,i-1,j-1}`
/// linking consecutive enumerated distributions.
fn check_e_recurrence(max_n: u32, _seed: u64) -> Result<(), String> {
    let mut prev = e_coeff_map(&e_enum(1));
    if prev != BTreeMap::from([((0, 1), BigInt::one())]) {
        fail!("base case E_1 has coefficients {prev:?}, expected a single y*z term");
    }
    for m in 2..=max_n as usize {
        let got = e_coeff_map(&e_enum(m));
        let n = m - 1; // recurrence steps from E_n to E_{n+1}
        let mut expect: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        let get = |map: &BTreeMap<(u32, u32), BigInt>, i: i64, j: i64| -> BigInt {
            if i < 0 || j < 0 {
                BigInt::zero()
            } else {
                map.get(&(i as u32, j as u32)).cloned().unwrap_or_default()
            }
        };
        let max_ij = 2 * m as i64;
        for i in 0..=max_ij {
            for j in 0..=max_ij {
                let mut v = get(&prev, i, j - 1) * i;
                v += get(&prev, i - 1, j) * j;
                let w = 2 * n as i64 - i - j + 2;
                if w > 0 {
                    v += get(&prev, i - 1, j - 1) * w;
                }
                if !v.is_zero() {
                    expect.insert((i as u32, j as u32), v);
                }
            }
        }
        if got != expect {
            fail!("m={m}: enumerated coefficients differ from the recurrence");
        }
        prev = got;
    }
    Ok(())
}

/// `|restricted words on n+1 letters| = (2n)!! = E_{n+1}(1,1,1)`.
fn check_e_count(max_n: u32, _seed: u64) -> Result<(), String> {
    let ones: BTreeMap<VarId, BigRational> =
        ["x", "y", "z"].map(|v| (var(v), BigRational::one())).into();
    for n in 0..=max_n as usize {
        let count = stirling::enumerate(&MultisetSpec::restricted(n + 1))
            .map_err(|e| e.to_string())?
            .count();
        let want = double_factorial(2 * n as i64);
        if BigInt::from(count) != want {
            fail!("n={n}: {count} words vs (2n)!! = {want}");
        }
        let at_ones = e_poly(n + 1).eval(&ones).map_err(|e| e.to_string())?;
        if at_ones != BigRational::from_integer(want.clone()) {
            fail!("n={n}: E(1,1,1) = {at_ones} vs (2n)!! = {want}");
        }
    }
    Ok(())
}

/// `C_{n+1}(x,y,z) = sum_k binom(n,k) C_k(x,y,z) E_{n-k+1}(x,y,z)`, with the
/// degenerate `C_0 = x`.
fn check_cxyz_convolution(max_n: u32, _seed: u64) -> Result<(), String> {
    let c: Vec<Polynomial> = (0..=max_n as usize + 1)
        .map(trivariate_second_eulerian)
        .collect();
    let e: Vec<Polynomial> = (0..=max_n as usize + 1)
        .map(|m| {
            if m == 0 {
                Polynomial::zero()
            } else {
                e_enum(m)
            }
        })
        .collect();
    for n in 0..=max_n as usize {
        let mut rhs = Polynomial::zero();
        for k in 0..=n {
            rhs = &rhs + &(&c[k] * &e[n - k + 1]).scale(&binomial(n as u64, k as u64));
        }
        ensure_eq(n as u64 + 1, &c[n + 1], &rhs, "binomial convolution")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Checks: ascent-plateau / signed-permutation block
// ---------------------------------------------------------------------------

fn ascent_plateau_poly(n: usize) -> Polynomial {
    stirling::gen_poly(&MultisetSpec::classical(n), &[(Stat::Ap, var("x"))]).expect("within bounds")
}

fn left_ascent_plateau_poly(n: usize) -> Polynomial {
    stirling::gen_poly(&MultisetSpec::classical(n), &[(Stat::Lap, var("x"))])
        .expect("within bounds")
}

/// `2^n A_n = sum binom(n,i) W_i W_{n-i}` and `B_n = sum binom(n,i) M_i W_{n-i}`.
fn check_mw_convolutions(max_n: u32, _seed: u64) -> Result<(), String> {
    let m: Vec<Polynomial> = (0..=max_n as usize).map(ascent_plateau_poly).collect();
    let w: Vec<Polynomial> = (0..=max_n as usize).map(left_ascent_plateau_poly).collect();
    for n in 0..=max_n as usize {
        let mut ww = Polynomial::zero();
        let mut mw = Polynomial::zero();
        for i in 0..=n {
            let b = binomial(n as u64, i as u64);
            ww = &ww + &(&w[i] * &w[n - i]).scale(&b);
            mw = &mw + &(&m[i] * &w[n - i]).scale(&b);
        }
        let doubled = eulerian_poly(n).scale(&BigInt::from(2).pow(n as u32));
        ensure_eq(n as u64, &doubled, &ww, "left ascent-plateau convolution")?;
        let type_b = signed::type_b_poly(n).map_err(|e| e.to_string())?;
        ensure_eq(n as u64, &type_b, &mw, "ascent-plateau convolution")?;
    }
    Ok(())
}

/// Both excedance-based expressions of the type B Eulerian polynomial agree.
fn check_brenti(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 0..=max_n as usize {
        let via_single = signed::type_b_poly(n).map_err(|e| e.to_string())?;
        let via_fix = signed::gen_poly(
            n,
            true,
            &[(SignedStat::Exc, var("x")), (SignedStat::Fix, var("x"))],
            &[],
        )
        .map_err(|e| e.to_string())?;
        ensure_eq(n as u64, &via_single, &via_fix, "exc+single vs exc+fix")?;
    }
    Ok(())
}

/// The six-variable grammar generates the six-statistic distribution over
/// signed permutations: `D^n(I) = I * sum x^exc y^aexc s^single t^fix p^neg q^cyc`.
fn check_ma24_grammar(max_n: u32, _seed: u64) -> Result<(), String> {
    let g = six_variable_grammar();
    let mut d = Polynomial::var(var("I"));
    for n in 0..=max_n as usize {
        if n > 0 {
            d = g.derivative(&d);
        }
        let stripped = exact_div_var(&d, var("I")).map_err(|e| e.to_string())?;
        ensure_eq(
            n as u64,
            &stripped,
            &six_stat_signed(n),
            "grammar vs statistics",
        )?;
    }
    Ok(())
}

/// The six-statistic distribution over restricted Stirling permutations on
/// `n+1` letters equals the one over signed permutations of rank `n`.
fn check_bnqn(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 0..=max_n as usize {
        let q_side = six_stat_restricted(n + 1);
        let b_side = six_stat_signed(n);
        ensure_eq(
            n as u64,
            &q_side,
            &b_side,
            "restricted words vs signed permutations",
        )?;
        if n == 2 {
            let frozen = Polynomial::parse("x*y*q*(1+p)^2 + q^2*(t+s*p)^2").unwrap();
            ensure_eq(2, &q_side, &frozen, "frozen rank-2 value")?;
        }
    }
    Ok(())
}

/// `sum x^{exc+single} p^neg q^cyc` over signed permutations equals
/// `sum x^ap p^even q^trace` over restricted words.
fn check_cor_bpq(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 0..=max_n as usize {
        let b = signed::bpq_poly(n).map_err(|e| e.to_string())?;
        let q = stirling::gen_poly(
            &MultisetSpec::restricted(n + 1),
            &[
                (Stat::Pap, var("x")),
                (Stat::Impap, var("x")),
                (Stat::Even, var("p")),
                (Stat::Trace, var("q")),
            ],
        )
        .map_err(|e| e.to_string())?;
        ensure_eq(n as u64, &b, &q, "ap/even/trace vs exc+single/neg/cyc")?;
    }
    Ok(())
}

/// Derangement polynomials of both types as restricted sums over words with
/// no two-entry block (and no even-indexed entry for type A).
fn check_derangements(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 0..=max_n as usize {
        let mut type_a = Polynomial::zero();
        let mut type_b = Polynomial::zero();
        for perm in
            stirling::enumerate(&MultisetSpec::restricted(n + 1)).map_err(|e| e.to_string())?
        {
            let rec = StatRecord::compute(perm.word());
            if rec.bk2 != 0 {
                continue;
            }
            let m = Monomial::from_exps([(var("x"), rec.pap.len() as u32)]);
            type_b.add_term(m.clone(), BigInt::one());
            if rec.even.is_empty() {
                type_a.add_term(m, BigInt::one());
            }
        }
        let want_a = signed::derangement_poly(n, false).map_err(|e| e.to_string())?;
        let want_b = signed::derangement_poly(n, true).map_err(|e| e.to_string())?;
        ensure_eq(n as u64, &type_a, &want_a, "type A derangements")?;
        ensure_eq(n as u64, &type_b, &want_b, "type B derangements")?;
    }
    Ok(())
}

/// Monomial-wise substitution: the term `m x^a p^b q^c` of the fix/cyc
/// Eulerian polynomial maps to `m x^a (t+sp)^b q^c y^{n-a-b} (1+p)^{n-b}`,
/// and the image equals the six-statistic distribution over restricted words.
fn check_corl2(max_n: u32, _seed: u64) -> Result<(), String> {
    let t_sp = Polynomial::parse("t + s*p").unwrap();
    let one_p = Polynomial::parse("1 + p").unwrap();
    for n in 0..=max_n as usize {
        let apq = signed::apq_poly(n).map_err(|e| e.to_string())?;
        let mut image = Polynomial::zero();
        for (m, coeff) in apq.iter() {
            let a = m.exp(var("x"));
            let b = m.exp(var("p"));
            let c = m.exp(var("q"));
            let rest =
                Monomial::from_exps([(var("x"), a), (var("q"), c), (var("y"), n as u32 - a - b)]);
            let term = (&t_sp.pow(b) * &one_p.pow(n as u32 - b)).mul_term(&rest, coeff);
            image = &image + &term;
        }
        ensure_eq(
            n as u64,
            &image,
            &six_stat_restricted(n + 1),
            "substituted image",
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Checks: operator expansion / box sorting block
// ---------------------------------------------------------------------------

/// Specializing `c -> x` (so `c_1 -> 1`, higher derivatives vanish) turns the
/// expansion into `sum_k S(n,k) x^k f_k`.
fn check_xd_normal_order(max_n: u32, _seed: u64) -> Result<(), String> {
    let oracle = ClassicalOracle::new(max_n as usize);
    for n in 0..=max_n as usize {
        let expansion = weyl::cd_expand(n, CdTarget::F).map_err(|e| e.to_string())?;
        let mut bind = weyl::c_bindings(n, Polynomial::var(var("x")), |_| Polynomial::zero());
        if n >= 1 {
            bind.insert(weyl::c_var(1), Polynomial::one());
        }
        let got = expansion.subst(&bind);
        let mut want = Polynomial::zero();
        for k in 0..=n {
            let m = Monomial::from_exps([(var("x"), k as u32), (weyl::f_var(k), 1)]);
            want.add_term(m, oracle.stirling2(n, k));
        }
        ensure_eq(n as u64, &got, &want, "x-derivative normal order")?;
    }
    Ok(())
}

/// Partition sums of `a(n, lambda)` give the signless first-kind Stirling
/// numbers, matching the exponential-substitution normal order.
fn check_exd_normal_order(max_n: u32, _seed: u64) -> Result<(), String> {
    let oracle = ClassicalOracle::new(max_n as usize);
    for n in 0..=max_n as usize {
        let table = weyl::extract_a_table(n).map_err(|e| e.to_string())?;
        for k in 0..=n {
            let sum: BigInt = table
                .iter()
                .filter(|(l, _)| l.sum() as usize == n - k)
                .map(|(_, a)| a.clone())
                .sum();
            let want = oracle.stirling1(n, k);
            if sum != want {
                fail!("n={n} k={k}: sum of a(n,lambda) = {sum}, c(n,k) = {want}");
            }
        }
    }
    Ok(())
}

/// The box-sorting weight sum over ordered weak set partitions equals the
/// recurrence-built expansion of `(cD)^n c`.
fn check_owp_expansion(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 1..=max_n as usize {
        let combinatorial = weyl::owp_weight_sum(n).map_err(|e| e.to_string())?;
        let algebraic = weyl::cd_expand(n, CdTarget::C).map_err(|e| e.to_string())?;
        ensure_eq(
            n as u64,
            &combinatorial,
            &algebraic,
            "partition sum vs recurrence",
        )?;
    }
    Ok(())
}

/// Every expansion coefficient has the monomial shape
/// `c^{n-len(lambda)} c_lambda` with a positive coefficient.
fn check_fnk_shape(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 0..=max_n as usize {
        weyl::extract_a_table(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok(())
}

/// The three number extractions from `a(n, lambda)`: columns, hooks of ones,
/// and fixed-length sums give second-kind, first-kind and Eulerian numbers.
fn check_comtet_numbers(max_n: u32, _seed: u64) -> Result<(), String> {
    let oracle = ClassicalOracle::new(max_n as usize);
    for n in 0..=max_n as usize {
        let table = weyl::extract_a_table(n).map_err(|e| e.to_string())?;
        for (shape, a) in table.iter() {
            if a <= &BigInt::zero() {
                fail!("n={n}: nonpositive a(n,{shape})");
            }
        }
        for k in 0..=n {
            let ones = crate::tableaux::Partition::new(vec![1; n - k]).expect("column shape");
            let got = table.get(&ones);
            let want = oracle.stirling2(n, k);
            if got != want {
                fail!("n={n} k={k}: a(n,1^(n-k)) = {got}, S(n,k) = {want}");
            }
            let by_length: BigInt = table
                .iter()
                .filter(|(l, _)| l.length() == n - k)
                .map(|(_, a)| a.clone())
                .sum();
            let eul = oracle.eulerian(n, k);
            if by_length != eul {
                fail!("n={n} k={k}: length-restricted sum {by_length}, Eulerian {eul}");
            }
        }
    }
    Ok(())
}

/// Weight preservation through the sorting map, and standardness of its
/// output, over all of `OWP_n`.
fn check_phi_weight(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 1..=max_n as usize {
        for p in weyl::enumerate_owp(n).map_err(|e| e.to_string())? {
            if !weyl::rows_standard_after_sort(&p) {
                fail!("n={n}: column sort broke row order on {:?}", p.blocks());
            }
            let t = weyl::phi(&p).map_err(|e| e.to_string())?;
            if p.weight() != weyl::tableau_weight(&t) {
                fail!(
                    "n={n}: weight {} != tableau weight {} on {:?}",
                    p.weight(),
                    weyl::tableau_weight(&t),
                    p.blocks()
                );
            }
        }
    }
    Ok(())
}

/// Fiber sizes of the sorting map equal the per-entry index products, for
/// every tableau; total mass is `n!`.
fn check_g_index_product(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 1..=max_n as usize {
        let hist = weyl::fiber_histogram(n).map_err(|e| e.to_string())?;
        let mut total = 0u64;
        for t in enumerate_syt(n, None).map_err(|e| e.to_string())? {
            let fiber = hist.get(&t).copied().unwrap_or(0);
            let (_, product) = t.g_index();
            if fiber != product {
                fail!("n={n}: fiber {fiber} != index product {product} for\n{t}");
            }
            total += fiber;
        }
        if BigInt::from(total) != factorial(n as u64) {
            fail!("n={n}: fibers sum to {total}, expected n!");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Checks: tableau expansion block
// ---------------------------------------------------------------------------

/// `A_n(x) = sum_T (prod sigma_i(T)) x^{rows(T)}`.
fn check_syt_eulerian(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 0..=max_n as usize {
        let mut sum = Polynomial::zero();
        for t in enumerate_syt(n, None).map_err(|e| e.to_string())? {
            let (_, product) = t.g_index();
            let m = Monomial::from_exps([(var("x"), t.shape().length() as u32)]);
            sum.add_term(m, BigInt::from(product));
        }
        ensure_eq(n as u64, &sum, &eulerian_poly(n), "tableau expansion")?;
    }
    Ok(())
}

/// `C_n(x) = sum_T prod sigma_i(T) A_i(x)^{w_i(T)}`.
fn check_syt_c_via_a(max_n: u32, _seed: u64) -> Result<(), String> {
    let a: Vec<Polynomial> = (0..=max_n as usize).map(eulerian_poly).collect();
    for n in 0..=max_n as usize {
        let mut sum = Polynomial::zero();
        for t in enumerate_syt(n, None).map_err(|e| e.to_string())? {
            let (_, product) = t.g_index();
            let mut term = Polynomial::constant(BigInt::from(product));
            for (i, &w) in t.row_profile().iter().enumerate().skip(1) {
                if w > 0 {
                    term = &term * &a[i].pow(w as u32);
                }
            }
            sum = &sum + &term;
        }
        ensure_eq(
            n as u64,
            &sum,
            &second_eulerian_poly(n),
            "tableau expansion",
        )?;
    }
    Ok(())
}

/// `C_n(x) = sum_T (prod sigma_i(T) i!^{w_i(T)}) x^{n+1-rows(T)}`.
fn check_syt_c_factorial(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 1..=max_n as usize {
        let mut sum = Polynomial::zero();
        for t in enumerate_syt(n, None).map_err(|e| e.to_string())? {
            let (_, product) = t.g_index();
            let mut coeff = BigInt::from(product);
            for (i, &w) in t.row_profile().iter().enumerate().skip(1) {
                for _ in 0..w {
                    coeff *= factorial(i as u64);
                }
            }
            let rows = t.shape().length();
            sum.add_term(
                Monomial::from_exps([(var("x"), (n + 1 - rows) as u32)]),
                coeff,
            );
        }
        ensure_eq(
            n as u64,
            &sum,
            &second_eulerian_poly(n),
            "tableau expansion",
        )?;
    }
    Ok(())
}

/// The trivariate expansion over tableaux with at most three columns, and
/// the fact that zeroing `c_4, c_5, ...` makes the column restriction
/// automatic.
fn check_syt_trivariate(max_n: u32, _seed: u64) -> Result<(), String> {
    let xyz = Polynomial::parse("x*y*z").unwrap();
    let c1 = Polynomial::parse("x*y + y*z + x*z").unwrap();
    let c2 = Polynomial::parse("2*x + 2*y + 2*z").unwrap();
    for n in 0..=max_n as usize {
        let mut restricted = Polynomial::zero();
        let mut full = Polynomial::zero();
        let mut restricted_tableaux = 0usize;
        let mut surviving_tableaux = 0usize;
        for t in enumerate_syt(n, None).map_err(|e| e.to_string())? {
            let wide = t.shape().parts().first().copied().unwrap_or(0) > 3;
            let profile = t.row_profile();
            // with c_i = 0 for i >= 4, rows longer than three kill the term
            if profile.iter().enumerate().skip(4).any(|(_, &w)| w > 0) {
                if !wide {
                    fail!("n={n}: narrow tableau with a long row?");
                }
                continue;
            }
            surviving_tableaux += 1;
            let (_, product) = t.g_index();
            let mut term = Polynomial::constant(BigInt::from(product));
            for (i, &w) in profile.iter().enumerate().skip(1) {
                if w == 0 {
                    continue;
                }
                term = &term
                    * &match i {
                        1 => c1.pow(w as u32),
                        2 => c2.pow(w as u32),
                        _ => Polynomial::constant(BigInt::from(6).pow(w as u32)),
                    };
            }
            term = &term * &xyz.pow((n + 1 - t.shape().length()) as u32);
            full = &full + &term;
            if !wide {
                restricted = &restricted + &term;
                restricted_tableaux += 1;
            }
        }
        if surviving_tableaux != restricted_tableaux {
            fail!("n={n}: zeroing high derivatives kept a wide tableau");
        }
        let want = trivariate_second_eulerian(n + 1);
        ensure_eq(n as u64, &full, &want, "full sum")?;
        ensure_eq(n as u64, &restricted, &want, "column-restricted sum")?;
    }
    Ok(())
}

/// The type B expansion in squared form: substituting
/// `c_{2i-1} = 4^{i-1}(1+x^2)`, `c_{2i} = 4^i x`, `c = x` yields `x B_n(x^2)`.
fn check_syt_typeb(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 0..=max_n as usize {
        let expansion = weyl::cd_expand(n, CdTarget::C).map_err(|e| e.to_string())?;
        let bind = weyl::c_bindings(n, Polynomial::var(var("x")), |i| {
            if i % 2 == 1 {
                Polynomial::parse("1 + x^2")
                    .unwrap()
                    .scale(&BigInt::from(4).pow((i as u32 - 1) / 2))
            } else {
                Polynomial::var(var("x")).scale(&BigInt::from(4).pow(i as u32 / 2))
            }
        });
        let got = expansion.subst(&bind);
        // x B_n(x^2): double every exponent, then shift by one
        let b = signed::type_b_poly(n).map_err(|e| e.to_string())?;
        let want = Polynomial::from_terms(b.iter().map(|(m, c)| {
            (
                Monomial::from_exps([(var("x"), 2 * m.exp(var("x")) + 1)]),
                c.clone(),
            )
        }));
        ensure_eq(n as u64, &got, &want, "squared type B expansion")?;
    }
    Ok(())
}

/// `A_n(x) = sum_shapes f^shape sum_T x^{des(T)+1}`.
fn check_rs_eulerian(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 1..=max_n as usize {
        let mut sum = Polynomial::zero();
        for shape in partitions(n).map_err(|e| e.to_string())? {
            let tableaux = syt_of_shape(&shape);
            let count = BigInt::from(tableaux.len());
            for t in tableaux {
                let m = Monomial::from_exps([(var("x"), t.descent_set().len() as u32 + 1)]);
                sum.add_term(m, count.clone());
            }
        }
        ensure_eq(n as u64, &sum, &eulerian_poly(n), "descent expansion")?;
    }
    Ok(())
}

/// Ascents, descents and plateaux are equidistributed over the classical
/// Stirling permutations.
fn check_basic_equidistribution(max_n: u32, _seed: u64) -> Result<(), String> {
    for n in 1..=max_n as usize {
        let spec = MultisetSpec::classical(n);
        let asc = stirling::gen_poly(&spec, &[(Stat::Asc, var("x"))]).map_err(|e| e.to_string())?;
        let des = stirling::gen_poly(&spec, &[(Stat::Des, var("x"))]).map_err(|e| e.to_string())?;
        let plat =
            stirling::gen_poly(&spec, &[(Stat::Plat, var("x"))]).map_err(|e| e.to_string())?;
        ensure_eq(n as u64, &asc, &des, "ascents vs descents")?;
        ensure_eq(n as u64, &des, &plat, "descents vs plateaux")?;
        ensure_eq(n as u64, &des, &second_eulerian_poly(n), "vs recurrence")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

static REGISTRY: &[CheckDef] = &[
    CheckDef { name: "cnx-recurrence", claim: "recurrence-built C_n matches its defining Stirling series coefficientwise", default_max_n: 10, run: check_cnx_recurrence },
    CheckDef { name: "lemma-convolution", claim: "C_n = n x C_{n-1} + sum_r binom(n,n-r+1) C_{n-r} C_{r-1}", default_max_n: 10, run: check_lemma_convolution },
    CheckDef { name: "double-factorial", claim: "C_n(1) = (2n-1)!!", default_max_n: 10, run: check_double_factorial },
    CheckDef { name: "gessel-convolution", claim: "the unsimplified double binomial convolution for C_{n+1}", default_max_n: 10, run: check_gessel_convolution },
    CheckDef { name: "series-reduced-trees", claim: "a_n = 2^n C_n(1/2): published values and quadratic recurrence", default_max_n: 8, run: check_series_reduced },
    CheckDef { name: "conv-realroots", claim: "sum_k binom(n,k) C_k C_{n-k-1} has only real zeros (Sturm-certified)", default_max_n: 8, run: check_conv_realroots },
    CheckDef { name: "cahill", claim: "Hessenberg determinant recursion vs cofactor expansion on random matrices", default_max_n: 5, run: check_cahill },
    CheckDef { name: "hessenberg", claim: "the structured Hessenberg determinant equals C_n(x)", default_max_n: 8, run: check_hessenberg },
    CheckDef { name: "dumont-symmetry", claim: "operator recurrence and full symmetry of the trivariate enumerator", default_max_n: 6, run: check_dumont_symmetry },
    CheckDef { name: "trivariate-grammar", claim: "grammar derivatives of x, y, z equal the trivariate enumerator", default_max_n: 6, run: check_trivariate_grammar },
    CheckDef { name: "gamma-extraction", claim: "change-of-grammar support condition i+2j+3k = 2n+1 and substitution equality", default_max_n: 7, run: check_gamma_extraction },
    CheckDef { name: "e-grammar", claim: "D^n(yz) equals the plateau/descent/ascent enumerator over restricted words", default_max_n: 6, run: check_e_grammar },
    CheckDef { name: "e-recurrence", claim: "the three-term coefficient recurrence for E_{n,i,j}", default_max_n: 6, run: check_e_recurrence },
    CheckDef { name: "e-count", claim: "the restricted words on n+1 letters number (2n)!!", default_max_n: 6, run: check_e_count },
    CheckDef { name: "cxyz-convolution", claim: "C_{n+1}(x,y,z) = sum_k binom(n,k) C_k(x,y,z) E_{n-k+1}(x,y,z)", default_max_n: 6, run: check_cxyz_convolution },
    CheckDef { name: "mw-convolutions", claim: "2^n A_n and B_n as binomial convolutions of (left) ascent-plateau polynomials", default_max_n: 6, run: check_mw_convolutions },
    CheckDef { name: "brenti", claim: "exc+single and exc+fix are equidistributed over signed permutations", default_max_n: 6, run: check_brenti },
    CheckDef { name: "ma24-grammar", claim: "the six-variable grammar generates the signed six-statistic distribution", default_max_n: 6, run: check_ma24_grammar },
    CheckDef { name: "bnqn", claim: "six statistics over restricted words match six statistics over signed permutations", default_max_n: 6, run: check_bnqn },
    CheckDef { name: "cor-bpq", claim: "ap/even/trace over restricted words give the (p,q) type B Eulerian polynomial", default_max_n: 6, run: check_cor_bpq },
    CheckDef { name: "derangements", claim: "both derangement polynomials as block-free restricted sums", default_max_n: 6, run: check_derangements },
    CheckDef { name: "corl2", claim: "monomial-wise substitution maps the fix/cyc Eulerian polynomial onto the six-statistic distribution", default_max_n: 6, run: check_corl2 },
    CheckDef { name: "xd-normal-order", claim: "specializing c -> x reduces the expansion to second-kind Stirling normal order", default_max_n: 8, run: check_xd_normal_order },
    CheckDef { name: "exd-normal-order", claim: "partition sums of a(n,lambda) give signless first-kind Stirling numbers", default_max_n: 8, run: check_exd_normal_order },
    CheckDef { name: "owp-expansion", claim: "box-sorting weight sum equals the expansion of (cD)^n c", default_max_n: 8, run: check_owp_expansion },
    CheckDef { name: "fnk-shape", claim: "every expansion coefficient has shape c^{n-l} c_lambda with positive coefficient", default_max_n: 10, run: check_fnk_shape },
    CheckDef { name: "comtet-numbers", claim: "the three number extractions from a(n,lambda)", default_max_n: 8, run: check_comtet_numbers },
    CheckDef { name: "phi-weight", claim: "the sorting map preserves weights and outputs standard tableaux", default_max_n: 8, run: check_phi_weight },
    CheckDef { name: "g-index-product", claim: "fiber sizes of the sorting map equal per-entry index products", default_max_n: 7, run: check_g_index_product },
    CheckDef { name: "syt-eulerian", claim: "A_n(x) = sum_T (prod sigma_i) x^rows", default_max_n: 8, run: check_syt_eulerian },
    CheckDef { name: "syt-c-via-a", claim: "C_n(x) = sum_T prod sigma_i A_i(x)^{w_i}", default_max_n: 8, run: check_syt_c_via_a },
    CheckDef { name: "syt-c-factorial", claim: "C_n(x) = sum_T (prod sigma_i i!^{w_i}) x^{n+1-rows}", default_max_n: 8, run: check_syt_c_factorial },
    CheckDef { name: "syt-trivariate", claim: "the trivariate expansion over tableaux with at most three columns", default_max_n: 6, run: check_syt_trivariate },
    CheckDef { name: "syt-typeb", claim: "the squared-form type B expansion x B_n(x^2)", default_max_n: 6, run: check_syt_typeb },
    CheckDef { name: "rs-eulerian", claim: "A_n(x) = sum_shapes f^shape sum_T x^{des(T)+1}", default_max_n: 8, run: check_rs_eulerian },
    CheckDef { name: "basic-equidistribution", claim: "ascents, descents and plateaux are equidistributed over Stirling permutations", default_max_n: 7, run: check_basic_equidistribution },
];

/// All registered checks, in execution order.
pub fn registry() -> &'static [CheckDef] {
    REGISTRY
}

pub fn find_check(name: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|d| d.name == name)
}

/// Runs one named check. `max_n` and `seed` default to the registry bound
/// and [`DEFAULT_SEED`]. A panic inside a check (for instance from pushing a
/// bound past an enumeration cap) is reported as a failure, not propagated.
pub fn run_check(name: &str, max_n: Option<u32>, seed: Option<u64>) -> Result<CheckReport> {
    let def = find_check(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    let max_n = max_n.unwrap_or(def.default_max_n);
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| (def.run)(max_n, seed));
    let outcome = match outcome {
        Ok(result) => result,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            Err(format!("panicked: {msg}"))
        }
    };
    Ok(CheckReport {
        name: def.name.to_string(),
        max_n,
        seed,
        passed: outcome.is_ok(),
        witness: outcome.err(),
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Runs every registered check with its default bound unless overridden.
/// Unknown override keys produce failed `skipped-unknown` reports; with
/// `fail_fast` the run stops at the first failure.
pub fn run_all(overrides: &BTreeMap<String, u32>, fail_fast: bool) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for key in overrides.keys() {
        if find_check(key).is_none() {
            reports.push(CheckReport {
                name: key.clone(),
                max_n: overrides[key],
                seed: DEFAULT_SEED,
                passed: false,
                witness: Some("skipped-unknown: no such check".to_string()),
                elapsed_ms: 0,
            });
        }
    }
    if fail_fast && reports.iter().any(|r| !r.passed) {
        return reports;
    }
    for def in REGISTRY {
        let max_n = overrides.get(def.name).copied();
        let report = run_check(def.name, max_n, None).expect("registered name");
        let failed = !report.passed;
        reports.push(report);
        if fail_fast && failed {
            break;
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            run_check("no-such", None, None),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<&str> = REGISTRY.iter().map(|d| d.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
    }

    #[test]
    fn run_all_reports_unknown_overrides() {
        let overrides: BTreeMap<String, u32> = [("nonsense".to_string(), 3)].into();
        let reports = run_all(&overrides, true);
        assert_eq!(reports.len(), 1);
        assert!(!reports[0].passed);
        assert!(reports[0]
            .witness
            .as_deref()
            .unwrap()
            .contains("skipped-unknown"));
    }

    #[test]
    fn run_all_applies_overrides() {
        // cap everything at a tiny bound so the full sweep stays fast
        let overrides: BTreeMap<String, u32> =
            REGISTRY.iter().map(|d| (d.name.to_string(), 2)).collect();
        let reports = run_all(&overrides, false);
        assert_eq!(reports.len(), REGISTRY.len());
        for r in &reports {
            assert!(r.passed, "{}: {:?}", r.name, r.witness);
            assert_eq!(r.max_n, 2);
        }
    }

    #[test]
    fn small_smoke_run() {
        for (name, n) in [
            ("lemma-convolution", 4),
            ("hessenberg", 4),
            ("bnqn", 2),
            ("syt-eulerian", 4),
            ("owp-expansion", 4),
        ] {
            let report = run_check(name, Some(n), None).unwrap();
            assert!(report.passed, "{name}: {:?}", report.witness);
        }
    }

    #[test]
    fn reports_serialize() {
        let report = run_check("double-factorial", Some(3), None).unwrap();
        let json = report.to_json();
        assert_eq!(json["name"], "double-factorial");
        assert_eq!(json["passed"], true);
        assert_eq!(json["params"]["max_n"], 3);
    }
}
