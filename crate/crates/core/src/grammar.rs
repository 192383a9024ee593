//! Formal derivatives driven by substitution rules.
//!
//! A grammar maps variables to polynomials; the induced derivative is the
//! unique derivation extending the rules: linear, satisfying the product
//! rule, and sending unruled variables to zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Parser, Polynomial, VarId};

/// A finite set of substitution rules `variable -> polynomial`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Grammar {
    rules: BTreeMap<VarId, Polynomial>,
}

impl Grammar {
    /// Builds a grammar, rejecting a second rule for the same variable.
    pub fn from_rules(rules: impl IntoIterator<Item = (VarId, Polynomial)>) -> Result<Grammar> {
        let mut map = BTreeMap::new();
        for (v, p) in rules {
            if map.insert(v, p).is_some() {
                return Err(Error::DuplicateRule(v.to_string()));
            }
        }
        Ok(Grammar { rules: map })
    }

    /// Parses a semicolon-separated rule list such as `a -> a*b; b -> a*b`.
    pub fn parse(text: &str) -> Result<Grammar> {
        let mut parser = Parser::new(text);
        let mut rules: Vec<(VarId, Polynomial)> = Vec::new();
        loop {
            if parser.at_end() {
                break;
            }
            let v = parser.ident()?;
            if !(parser.eat('-') && parser.eat('>')) {
                return Err(Error::Parse {
                    pos: parser.position(),
                    msg: "expected `->` after rule variable".into(),
                });
            }
            rules.push((v, parser.expr()?));
            if !parser.eat(';') {
                parser.expect_end()?;
                break;
            }
        }
        Grammar::from_rules(rules)
    }

    /// Right side for `v`; unruled variables act as constants.
    pub fn rule(&self, v: VarId) -> Option<&Polynomial> {
        self.rules.get(&v)
    }

    pub fn rules(&self) -> impl Iterator<Item = (VarId, &Polynomial)> {
        self.rules.iter().map(|(&v, p)| (v, p))
    }

    /// The formal derivative of `p` under this grammar.
    pub fn derivative(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.iter() {
            for (v, e) in m.vars() {
                let Some(rhs) = self.rules.get(&v) else {
                    continue;
                };
                let reduced = m.div_var(v).expect("variable occurs in monomial");
                let scale = c * BigInt::from(e);
                out = &out + &rhs.mul_term(&reduced, &scale);
            }
        }
        out
    }

    /// `n`-fold application of the derivative.
    pub fn derivative_n(&self, p: &Polynomial, n: usize) -> Polynomial {
        let mut acc = p.clone();
        for _ in 0..n {
            acc = self.derivative(&acc);
        }
        acc
    }
}

impl fmt::Display for Grammar {
    /// Canonical rule syntax, rules sorted by variable name.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .rules
            .iter()
            .map(|(v, p)| format!("{v} -> {p}"))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// Strips one factor of `v` from every term, failing if some term lacks it.
/// Used to read off distributions such as `D^n(I) / I`.
pub fn exact_div_var(p: &Polynomial, v: VarId) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (m, c) in p.iter() {
        match m.div_var(v) {
            Some(reduced) => out.add_term(reduced, c.clone()),
            None => {
                return Err(Error::Unsupported(format!(
                    "term {m} is not divisible by {v}"
                )))
            }
        }
    }
    Ok(out)
}

/// True if every term of `p` has the same total degree.
pub fn is_homogeneous(p: &Polynomial) -> bool {
    let mut degrees = p.iter().map(|(m, _)| m.degree());
    match degrees.next() {
        None => true,
        Some(d) => degrees.all(|e| e == d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{var, Monomial};

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let g = Grammar::parse("b->a*b; a->a*b").unwrap();
        assert_eq!(g.to_string(), "a -> a*b; b -> a*b");
        assert_eq!(Grammar::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn parse_rejects_duplicates_and_syntax_errors() {
        assert!(matches!(
            Grammar::parse("a->b; a->b"),
            Err(Error::DuplicateRule(_))
        ));
        assert!(matches!(Grammar::parse("a => b"), Err(Error::Parse { .. })));
        assert!(matches!(
            Grammar::parse("a -> b +"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn six_variable_rules_parse() {
        let g = Grammar::parse(
            "I->q*I*(t+s*p); s->(1+p)*x*y; t->(1+p)*x*y; x->(1+p)*x*y; y->(1+p)*x*y",
        )
        .unwrap();
        assert_eq!(g.derivative(&p("I")), p("q*I*(t+s*p)"));
    }

    #[test]
    fn derivative_basics() {
        let g = Grammar::parse("w->v*w; u->3*w; v->2*u*w").unwrap();
        assert_eq!(g.derivative(&p("w")), p("v*w"));
        assert_eq!(g.derivative(&p("1")), Polynomial::zero());
        // unruled variables are constants
        assert_eq!(g.derivative(&p("z")), Polynomial::zero());
    }

    #[test]
    fn iterated_derivative() {
        let g = Grammar::parse("a->a*b; b->a*b").unwrap();
        assert_eq!(g.derivative_n(&p("a"), 0), p("a"));
        assert_eq!(g.derivative_n(&p("a"), 2), p("a*b^2 + a^2*b"));

        let g3 = Grammar::parse("x->x*y*z; y->x*y*z; z->x*y*z").unwrap();
        assert_eq!(
            g3.derivative_n(&p("y*z"), 2),
            p("x^2*y^3*z + 4*x^2*y^2*z^2 + x*y^3*z^2 + x^2*y*z^3 + x*y^2*z^3")
        );
    }

    #[test]
    fn product_rule_holds() {
        let g = Grammar::parse("x->x*y*z; y->x*y*z; z->x*y*z").unwrap();
        let a = p("x^2*y + 3*z");
        let b = p("y*z - x");
        let lhs = g.derivative(&(&a * &b));
        let rhs = &(&g.derivative(&a) * &b) + &(&a * &g.derivative(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz_rule_holds() {
        use crate::classical::binomial;
        let g = Grammar::parse("a->a*b; b->a*b").unwrap();
        let u = p("a + b^2");
        let v = p("a*b - 2");
        for n in 0..=5usize {
            let lhs = g.derivative_n(&(&u * &v), n);
            let mut rhs = Polynomial::zero();
            for k in 0..=n {
                let prod = &g.derivative_n(&u, k) * &g.derivative_n(&v, n - k);
                rhs = &rhs + &prod.scale(&binomial(n as u64, k as u64));
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn eulerian_grammar_homogeneity() {
        let g = Grammar::parse("a->a*b; b->a*b").unwrap();
        for n in 0..=6 {
            let d = g.derivative_n(&p("a"), n);
            assert!(is_homogeneous(&d));
            assert_eq!(d.degree(), Some(n as u64 + 1));
        }
        let g3 = Grammar::parse("x->x*y*z; y->x*y*z; z->x*y*z").unwrap();
        for n in 0..=5 {
            let d = g3.derivative_n(&p("x"), n);
            assert!(is_homogeneous(&d));
            assert_eq!(d.degree(), Some(2 * n as u64 + 1));
        }
    }

    #[test]
    fn eulerian_grammar_matches_eulerian_polynomials() {
        // D^n(a) = sum_k <n,k> a^k b^{n+1-k}
        use crate::classical::ClassicalOracle;
        let oracle = ClassicalOracle::new(6);
        let g = Grammar::parse("a->a*b; b->a*b").unwrap();
        for n in 1..=6usize {
            let mut expect = Polynomial::zero();
            for k in 0..=n {
                let m = Monomial::from_exps([(var("a"), k as u32), (var("b"), (n + 1 - k) as u32)]);
                expect.add_term(m, oracle.eulerian(n, k));
            }
            assert_eq!(g.derivative_n(&p("a"), n), expect, "n = {n}");
            assert_eq!(g.derivative_n(&p("b"), n), expect, "n = {n}");
        }
    }

    #[test]
    fn squared_grammar_specializes_to_second_eulerian() {
        // D^n(a) under {a -> ab^2, b -> ab^2} is homogeneous of degree 2n+1
        // and becomes C_n(x) at a = x, b = 1
        use crate::families::second_eulerian_poly;
        use std::collections::BTreeMap;
        let g = Grammar::parse("a->a*b^2; b->a*b^2").unwrap();
        let bind: BTreeMap<VarId, Polynomial> =
            [(var("a"), p("x")), (var("b"), Polynomial::one())].into();
        for n in 1..=5usize {
            let d = g.derivative_n(&p("a"), n);
            assert!(is_homogeneous(&d));
            assert_eq!(d.subst(&bind), second_eulerian_poly(n), "n = {n}");
        }
    }

    #[test]
    fn exact_division_by_variable() {
        let g = Grammar::parse(
            "I->q*I*(t+s*p); s->(1+p)*x*y; t->(1+p)*x*y; x->(1+p)*x*y; y->(1+p)*x*y",
        )
        .unwrap();
        let d = g.derivative_n(&p("I"), 2);
        let stripped = exact_div_var(&d, var("I")).unwrap();
        assert_eq!(stripped, p("x*y*q*(1+p)^2 + q^2*(t+s*p)^2"));
        assert!(exact_div_var(&p("x + 1"), var("x")).is_err());
    }
}
