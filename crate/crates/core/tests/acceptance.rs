//! Acceptance suite: one test per criterion. Each test prints a single
//! `ACCEPTANCE <id> PASS` line on success (visible with `--nocapture`) and
//! enforces the stated time budget.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use stirperm::classical::{binomial, double_factorial};
use stirperm::families::{
    eulerian_poly, second_eulerian_poly, series_reduced_count, trivariate_second_eulerian,
};
use stirperm::grammar::Grammar;
use stirperm::hessenberg::HessenbergMatrix;
use stirperm::identities::run_check;
use stirperm::poly::{var, Polynomial, VarId};
use stirperm::signed;
use stirperm::stirling::{self, MultisetSpec};
use stirperm::tableaux::enumerate_syt;
use stirperm::weyl::{self, CdTarget};

fn p(s: &str) -> Polynomial {
    Polynomial::parse(s).unwrap()
}

fn check(name: &str, max_n: u32) {
    let report = run_check(name, Some(max_n), None).unwrap();
    assert!(
        report.passed,
        "check {name} (n<={max_n}) failed: {}",
        report.witness.unwrap_or_default()
    );
}

fn finish(start: Instant, budget_secs: u64, id: u32, desc: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < budget_secs,
        "criterion {id} exceeded its {budget_secs}s budget ({elapsed:?})"
    );
    println!("ACCEPTANCE {id} PASS ({elapsed:?}): {desc}");
}

#[test]
fn criterion_01_printed_goldens() {
    let start = Instant::now();

    // trivariate list
    assert_eq!(trivariate_second_eulerian(0), p("x"));
    assert_eq!(trivariate_second_eulerian(1), p("x*y*z"));
    assert_eq!(trivariate_second_eulerian(2), p("x*y*z*(y*z + x*y + x*z)"));
    assert_eq!(
        trivariate_second_eulerian(3),
        p("x*y*z*(x^2*y^2 + x^2*z^2 + y^2*z^2 + 4*x*y^2*z + 4*x^2*y*z + 4*x*y*z^2)")
    );

    // operator expansion display, orders 1..4
    let expected = [
        "c*f1",
        "c*c1*f1 + c^2*f2",
        "(c*c1^2 + c^2*c2)*f1 + 3*c^2*c1*f2 + c^3*f3",
        "(c*c1^3 + 4*c^2*c1*c2 + c^3*c3)*f1 + (7*c^2*c1^2 + 4*c^3*c2)*f2 + 6*c^3*c1*f3 + c^4*f4",
    ];
    for (i, want) in expected.iter().enumerate() {
        assert_eq!(
            weyl::cd_expand(i + 1, CdTarget::F).unwrap(),
            p(want),
            "order {}",
            i + 1
        );
    }

    // second grammar derivative of yz
    let g = Grammar::parse("x->x*y*z; y->x*y*z; z->x*y*z").unwrap();
    assert_eq!(
        g.derivative_n(&p("y*z"), 2),
        p("x^2*y^3*z + 4*x^2*y^2*z^2 + x*y^3*z^2 + x^2*y*z^3 + x*y^2*z^3")
    );

    // printed fourth-order determinant
    assert_eq!(
        second_eulerian_poly(4).to_string(),
        "x + 22*x^2 + 58*x^3 + 24*x^4"
    );
    let rows = [
        ["x", "-1", "0", "0"],
        ["x", "2*x", "-1", "0"],
        ["x + 2*x^2", "3*x", "3*x", "-1"],
        ["x + 8*x^2 + 6*x^3", "4*x + 8*x^2", "6*x", "4*x"],
    ];
    let entries: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|r| r.iter().map(|s| p(s)).collect())
        .collect();
    let det = HessenbergMatrix::new(entries).unwrap().det();
    assert_eq!(det.to_string(), "x + 22*x^2 + 58*x^3 + 24*x^4");

    finish(start, 1, 1, "printed polynomial goldens");
}

#[test]
fn criterion_02_sequence_goldens() {
    let start = Instant::now();

    let one: BTreeMap<VarId, BigRational> = [(var("x"), BigRational::one())].into();
    for n in 0..=10i64 {
        let v = second_eulerian_poly(n as usize).eval(&one).unwrap();
        assert_eq!(
            v,
            BigRational::from_integer(double_factorial(2 * n - 1)),
            "n = {n}"
        );
    }

    // a_n = 2^n C_n(1/2): published values (the leading 1 repeats) and the
    // quadratic recurrence up to n = 8
    let a: Vec<BigInt> = (0..=8).map(series_reduced_count).collect();
    let want: Vec<BigInt> = [1i64, 1, 4, 26, 236, 2752].map(BigInt::from).into();
    assert_eq!(&a[..6], &want[..]);
    for n in 2..=8usize {
        let mut rhs = &a[n - 1] * n;
        for r in 1..n {
            rhs += &a[n - r] * &a[r - 1] * binomial(n as u64, (n - r + 1) as u64) * 2;
        }
        assert_eq!(a[n], rhs, "n = {n}");
    }

    for n in 0..=6usize {
        let q1 = stirling::enumerate(&MultisetSpec::restricted(n + 1))
            .unwrap()
            .count();
        let b = signed::enumerate(n, true).unwrap().count();
        let fact = double_factorial(2 * n as i64);
        assert_eq!(BigInt::from(q1), fact, "restricted count at n = {n}");
        assert_eq!(BigInt::from(b), fact, "signed count at n = {n}");
    }

    finish(start, 10, 2, "sequence goldens");
}

#[test]
fn criterion_03_convolutions_and_determinant() {
    let start = Instant::now();
    check("lemma-convolution", 10);
    check("gessel-convolution", 10);
    check("hessenberg", 8);
    finish(
        start,
        30,
        3,
        "convolution identities and Hessenberg determinant",
    );
}

#[test]
fn criterion_04_real_rootedness() {
    let start = Instant::now();
    check("conv-realroots", 8);
    finish(
        start,
        10,
        4,
        "binomial convolutions have only real zeros (Sturm)",
    );
}

#[test]
fn criterion_05_grammar_equivalences() {
    let start = Instant::now();
    check("trivariate-grammar", 6);
    check("e-grammar", 6);
    check("gamma-extraction", 7);
    check("cxyz-convolution", 6);
    finish(start, 60, 5, "grammar equivalences");
}

#[test]
fn criterion_06_six_statistic_correspondence() {
    let start = Instant::now();
    check("bnqn", 6);

    // frozen rank-2 value, both sides
    let frozen = p("x*y*q*(1+p)^2 + q^2*(t+s*p)^2");
    let q_side = stirling::gen_poly(
        &MultisetSpec::restricted(3),
        &[
            (stirling::Stat::Pap, var("x")),
            (stirling::Stat::Cap, var("y")),
            (stirling::Stat::Impap, var("s")),
            (stirling::Stat::Bk2, var("t")),
            (stirling::Stat::Even, var("p")),
            (stirling::Stat::Trace, var("q")),
        ],
    )
    .unwrap();
    let b_side = signed::gen_poly(
        2,
        true,
        &[
            (signed::SignedStat::Exc, var("x")),
            (signed::SignedStat::Aexc, var("y")),
            (signed::SignedStat::Single, var("s")),
            (signed::SignedStat::Fix, var("t")),
            (signed::SignedStat::Neg, var("p")),
            (signed::SignedStat::Cyc, var("q")),
        ],
        &[],
    )
    .unwrap();
    assert_eq!(q_side, frozen);
    assert_eq!(b_side, frozen);

    finish(
        start,
        90,
        6,
        "six-variable distribution over both object families",
    );
}

#[test]
fn criterion_07_corollaries() {
    let start = Instant::now();
    check("cor-bpq", 6);
    check("derangements", 6);
    check("corl2", 6);
    finish(start, 60, 7, "restricted-sum corollaries");
}

#[test]
fn criterion_08_box_sorting_chain() {
    let start = Instant::now();
    check("owp-expansion", 8);
    check("phi-weight", 8);
    check("g-index-product", 7);

    // the tableau expansion of (cD)^n c itself, n <= 8
    for n in 1..=8usize {
        let mut sum = Polynomial::zero();
        for t in enumerate_syt(n, None).unwrap() {
            let (_, product) = t.g_index();
            sum.add_term(weyl::tableau_weight(&t), BigInt::from(product));
        }
        assert_eq!(sum, weyl::cd_expand(n, CdTarget::C).unwrap(), "n = {n}");
    }

    finish(start, 60, 8, "box-sorting chain");
}

#[test]
fn criterion_09_coefficient_extractions() {
    let start = Instant::now();
    check("comtet-numbers", 8);
    check("exd-normal-order", 8);
    check("fnk-shape", 8);
    finish(
        start,
        5,
        9,
        "coefficient extractions against recurrence oracles",
    );
}

#[test]
fn criterion_10_tableau_expansions() {
    let start = Instant::now();
    check("syt-eulerian", 8);
    check("rs-eulerian", 8);
    check("syt-c-via-a", 8);
    check("syt-c-factorial", 8);
    check("syt-trivariate", 6);
    check("syt-typeb", 6);

    // the four per-tableau enumerators at n = 3
    let a: Vec<Polynomial> = (0..=3).map(eulerian_poly).collect();
    let mut contributions: Vec<String> = enumerate_syt(3, None)
        .unwrap()
        .iter()
        .map(|t| {
            let (_, product) = t.g_index();
            let mut term = Polynomial::constant(BigInt::from(product));
            for (i, &w) in t.row_profile().iter().enumerate().skip(1) {
                if w > 0 {
                    term = &term * &a[i].pow(w as u32);
                }
            }
            term.to_string()
        })
        .collect();
    contributions.sort();
    let mut expected: Vec<String> = [
        p("x + 4*x^2 + x^3"),
        p("2*x*(x + x^2)"),
        p("2*x*(x + x^2)"),
        p("x^3"),
    ]
    .map(|q| q.to_string())
    .into();
    expected.sort();
    assert_eq!(contributions, expected);

    finish(start, 60, 10, "standard Young tableau expansion theorems");
}

mod property_suite {
    use super::*;
    use proptest::prelude::*;
    use proptest::test_runner::{Config, TestRunner};
    use std::sync::OnceLock;
    use stirperm::hessenberg::cofactor_det;
    use stirperm::stirling::Stat;

    const CASES: u32 = 1000;

    fn runner() -> TestRunner {
        TestRunner::new(Config {
            cases: CASES,
            ..Config::default()
        })
    }

    /// Random sparse polynomial in x, y, z with small coefficients.
    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            -9i64..=9,
            prop::collection::vec((0usize..3, 0u32..=3), 0..3),
        );
        prop::collection::vec(term, 0..4).prop_map(|terms| {
            let vars = [var("x"), var("y"), var("z")];
            let mut poly = Polynomial::zero();
            for (coeff, exps) in terms {
                let mono = stirperm::poly::Monomial::from_exps(
                    exps.into_iter().map(|(v, e)| (vars[v], e)),
                );
                poly.add_term(mono, BigInt::from(coeff));
            }
            poly
        })
    }

    fn run<S: Strategy>(
        what: &str,
        strategy: S,
        test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
    ) {
        let mut r = runner();
        r.run(&strategy, test)
            .unwrap_or_else(|e| panic!("{what}: {e}"));
    }

    fn equidistribution_cache() -> &'static Vec<[Polynomial; 3]> {
        static CACHE: OnceLock<Vec<[Polynomial; 3]>> = OnceLock::new();
        CACHE.get_or_init(|| {
            (1..=5)
                .map(|n| {
                    let spec = MultisetSpec::classical(n);
                    [Stat::Asc, Stat::Des, Stat::Plat]
                        .map(|s| stirling::gen_poly(&spec, &[(s, var("x"))]).unwrap())
                })
                .collect()
        })
    }

    fn trivariate_cache() -> &'static Vec<Polynomial> {
        static CACHE: OnceLock<Vec<Polynomial>> = OnceLock::new();
        CACHE.get_or_init(|| {
            (1..=5)
                .map(|n| {
                    stirling::gen_poly(
                        &MultisetSpec::classical(n),
                        &[
                            (Stat::Asc, var("x")),
                            (Stat::Des, var("y")),
                            (Stat::Plat, var("z")),
                        ],
                    )
                    .unwrap()
                })
                .collect()
        })
    }

    #[test]
    fn criterion_11_property_suite() {
        let start = Instant::now();

        run(
            "ring axioms",
            (arb_poly(), arb_poly(), arb_poly()),
            |(a, b, c)| {
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a - &a, Polynomial::zero());
                Ok(())
            },
        );

        run(
            "product and Leibniz rules",
            (arb_poly(), arb_poly(), 0usize..=3),
            |(a, b, n)| {
                let x = var("x");
                prop_assert_eq!(
                    (&a * &b).partial(x),
                    &(&a.partial(x) * &b) + &(&a * &b.partial(x))
                );
                let g = Grammar::parse("x->x*y*z; y->x*y*z; z->x*y*z").unwrap();
                prop_assert_eq!(
                    g.derivative(&(&a * &b)),
                    &(&g.derivative(&a) * &b) + &(&a * &g.derivative(&b))
                );
                let mut leibniz = Polynomial::zero();
                for k in 0..=n {
                    let prod = &g.derivative_n(&a, k) * &g.derivative_n(&b, n - k);
                    leibniz = &leibniz + &prod.scale(&binomial(n as u64, k as u64));
                }
                prop_assert_eq!(g.derivative_n(&(&a * &b), n), leibniz);
                Ok(())
            },
        );

        run("serialization round-trips", arb_poly(), |a| {
            prop_assert_eq!(Polynomial::parse(&a.to_string()).unwrap(), a.clone());
            prop_assert_eq!(Polynomial::from_json(&a.to_json()).unwrap(), a);
            Ok(())
        });

        run(
            "Hessenberg recursion vs cofactor oracle",
            (1usize..=4, prop::collection::vec(-9i64..=9, 16)),
            |(n, cells)| {
                let entries: Vec<Vec<Polynomial>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if j > i + 1 {
                                    Polynomial::zero()
                                } else {
                                    Polynomial::constant(cells[4 * i + j])
                                }
                            })
                            .collect()
                    })
                    .collect();
                let h = HessenbergMatrix::new(entries.clone()).unwrap();
                prop_assert_eq!(h.det(), cofactor_det(&entries));
                Ok(())
            },
        );

        run(
            "equidistribution of ascents, descents, plateaux",
            (1usize..=5, 0usize..3, 0usize..3),
            |(n, i, j)| {
                let polys = &equidistribution_cache()[n - 1];
                prop_assert_eq!(&polys[i], &polys[j]);
                prop_assert_eq!(&polys[1], &second_eulerian_poly(n));
                Ok(())
            },
        );

        run(
            "trivariate symmetry",
            (
                1usize..=5,
                prop::sample::select(vec![
                    ["x", "z", "y"],
                    ["y", "x", "z"],
                    ["y", "z", "x"],
                    ["z", "x", "y"],
                    ["z", "y", "x"],
                ]),
            ),
            |(n, perm)| {
                let poly = &trivariate_cache()[n - 1];
                let bind: BTreeMap<VarId, Polynomial> = [
                    (var("x"), Polynomial::var(var(perm[0]))),
                    (var("y"), Polynomial::var(var(perm[1]))),
                    (var("z"), Polynomial::var(var(perm[2]))),
                ]
                .into();
                prop_assert_eq!(&poly.subst(&bind), poly);
                Ok(())
            },
        );

        finish(start, 120, 11, "randomized property suite, 1000 cases each");
    }
}
