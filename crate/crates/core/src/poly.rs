//! Exact sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by monomial. Monomials order by total
//! degree first and then lexicographically on the exponent vector (variables
//! in name order), so iterating a polynomial yields the canonical term order
//! used by the text serialization: `x + 22*x^2 + 58*x^3 + 24*x^4`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

const MAX_VAR_NAME_LEN: usize = 32;

fn interner() -> &'static Mutex<BTreeSet<&'static str>> {
    static INTERNER: OnceLock<Mutex<BTreeSet<&'static str>>> = OnceLock::new();
    INTERNER.get_or_init(|| Mutex::new(BTreeSet::new()))
}

/// An interned variable name: one or more ASCII letters followed by optional
/// digits, at most 32 characters.
///
/// Ordering is natural: the alphabetic prefix compares lexicographically and
/// the numeric suffix compares by value, so `c < c1 < c2 < c10 < f1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarId(&'static str);

impl VarId {
    pub fn new(name: &str) -> Result<VarId> {
        if name.is_empty() || name.len() > MAX_VAR_NAME_LEN {
            return Err(Error::InvalidVariable(name.to_string()));
        }
        let letters = name.chars().take_while(|c| c.is_ascii_alphabetic()).count();
        let valid = letters >= 1 && name[letters..].chars().all(|c| c.is_ascii_digit());
        if !valid {
            return Err(Error::InvalidVariable(name.to_string()));
        }
        let mut set = interner().lock().unwrap();
        if let Some(existing) = set.get(name) {
            return Ok(VarId(existing));
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        set.insert(leaked);
        Ok(VarId(leaked))
    }

    pub fn name(&self) -> &'static str {
        self.0
    }

    fn split(&self) -> (&str, Option<u128>) {
        let letters = self
            .0
            .chars()
            .take_while(|c| c.is_ascii_alphabetic())
            .count();
        let digits = &self.0[letters..];
        // name length is capped, so the suffix always fits in u128
        let num = if digits.is_empty() {
            None
        } else {
            digits.parse().ok()
        };
        (&self.0[..letters], num)
    }
}

/// Shorthand constructor for variable names known to be valid at compile time.
pub fn var(name: &str) -> VarId {
    VarId::new(name).expect("valid variable name")
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        let (la, na) = self.split();
        let (lb, nb) = other.split();
        la.cmp(lb).then(na.cmp(&nb)).then(self.0.cmp(other.0))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// A power product of variables. Zero exponents are never stored; the empty
/// monomial is the constant 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<VarId, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial::from_exps([(v, 1)])
    }

    /// Builds from `(variable, exponent)` pairs; repeated variables have
    /// their exponents summed and zero exponents are dropped.
    pub fn from_exps(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Monomial {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp(&self, v: VarId) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Divides out one power of `v`; `None` if `v` does not occur.
    pub fn div_var(&self, v: VarId) -> Option<Monomial> {
        let e = *self.exps.get(&v)?;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(&v);
        } else {
            exps.insert(v, e - 1);
        }
        Some(Monomial { exps })
    }

    /// Removes `v` entirely, returning the stripped monomial and the exponent.
    pub fn without_var(&self, v: VarId) -> (Monomial, u32) {
        let mut exps = self.exps.clone();
        let e = exps.remove(&v).unwrap_or(0);
        (Monomial { exps }, e)
    }

    /// Exponents of `self` at the given variables (zero where absent).
    pub fn exps_of(&self, vars: &[VarId]) -> Vec<u32> {
        vars.iter().map(|&v| self.exp(v)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // ascending lexicographic comparison of the exponent vectors over the
        // merged variable set, variables in name order
        let mut ai = self.exps.iter();
        let mut bi = other.exps.iter();
        let mut an = ai.next();
        let mut bn = bi.next();
        loop {
            match (an, bn) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            an = ai.next();
                            bn = bi.next();
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, &e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse multivariate polynomial over the integers. The empty term map is
/// the zero polynomial; stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(v: VarId) -> Polynomial {
        Polynomial::from_monomial(Monomial::var(v), 1)
    }

    pub fn from_monomial(m: Monomial, c: impl Into<BigInt>) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m`, dropping the entry if the coefficient cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exact coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().map(|(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `self * c * m` in one pass.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact partial derivative with respect to `v`.
    pub fn partial(&self, v: VarId) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                let dm = m.div_var(v).expect("exponent checked positive");
                out.add_term(dm, c * BigInt::from(e));
            }
        }
        out
    }

    /// Simultaneous substitution. Unbound variables are left fixed.
    pub fn subst(&self, bindings: &BTreeMap<VarId, Polynomial>) -> Polynomial {
        let mut powers: BTreeMap<(VarId, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut fixed = Monomial::one();
            let mut product = Polynomial::constant(c.clone());
            for (v, e) in m.vars() {
                match bindings.get(&v) {
                    None => fixed = fixed.mul(&Monomial::from_exps([(v, e)])),
                    Some(b) => {
                        let p = powers.entry((v, e)).or_insert_with(|| b.pow(e)).clone();
                        product = &product * &p;
                    }
                }
            }
            out = &out + &product.mul_term(&fixed, &BigInt::one());
        }
        out
    }

    /// Exact rational evaluation; every variable must be bound.
    pub fn eval(&self, point: &BTreeMap<VarId, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, e) in m.vars() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                for _ in 0..e {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Parses the canonical expression syntax: `+ - * ^`, integer literals,
    /// parentheses and variables.
    pub fn parse(text: &str) -> Result<Polynomial> {
        let mut p = Parser::new(text);
        let poly = p.expr()?;
        p.expect_end()?;
        Ok(poly)
    }

    /// JSON form: a list of `{"coeff": "<decimal>", "exps": {...}}` objects in
    /// canonical term order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: serde_json::Map<String, serde_json::Value> = m
                    .vars()
                    .map(|(v, e)| (v.to_string(), serde_json::Value::from(e)))
                    .collect();
                serde_json::json!({ "coeff": c.to_string(), "exps": exps })
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Polynomial> {
        let arr = value.as_array().ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "expected a JSON array".into(),
        })?;
        let mut p = Polynomial::zero();
        for item in arr {
            let coeff = item
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: "missing coeff".into(),
                })?;
            let coeff: BigInt = coeff.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: "bad coefficient".into(),
            })?;
            let mut mono = Vec::new();
            if let Some(exps) = item.get("exps").and_then(|e| e.as_object()) {
                for (name, e) in exps {
                    let e = e.as_u64().ok_or_else(|| Error::Parse {
                        pos: 0,
                        msg: "bad exponent".into(),
                    })?;
                    mono.push((VarId::new(name)?, e as u32));
                }
            }
            p.add_term(Monomial::from_exps(mono), coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

pub(crate) struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &'a str) -> Parser<'a> {
        Parser { text, pos: 0 }
    }

    /// Current 1-based position, for error reporting.
    pub(crate) fn position(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err(format!("unexpected `{}`", self.peek().unwrap())))
        }
    }

    pub(crate) fn ident(&mut self) -> Result<VarId> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a variable name"));
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        VarId::new(&self.text[start..self.pos])
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.err("invalid integer literal"))
    }

    pub(crate) fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Polynomial::constant(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => Ok(Polynomial::var(self.ident()?)),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn var_name_validation() {
        assert!(VarId::new("x").is_ok());
        assert!(VarId::new("c12").is_ok());
        assert!(VarId::new("I").is_ok());
        assert!(VarId::new("").is_err());
        assert!(VarId::new("2x").is_err());
        assert!(VarId::new("x_1").is_err());
        assert!(VarId::new("x1y").is_err());
    }

    #[test]
    fn var_natural_order() {
        let names = ["c", "c1", "c2", "c10", "f", "f1", "x"];
        let mut ids: Vec<VarId> = names.iter().map(|n| var(n)).collect();
        ids.sort();
        let sorted: Vec<&str> = ids.iter().map(|v| v.name()).collect();
        assert_eq!(sorted, names);
    }

    #[test]
    fn additive_inverse_cancels() {
        let x = Polynomial::var(var("x"));
        assert!((&x - &x).is_zero());
        assert_eq!((&x + &(-&x)).to_string(), "0");
    }

    #[test]
    fn binomial_square() {
        assert_eq!(p("(1+x)*(1+x)").to_string(), "1 + 2*x + x^2");
    }

    #[test]
    fn trivariate_product() {
        // xyz * (yz + xy + xz) expands to the three degree-5 monomials
        let lhs = p("x*y*z") * p("y*z + x*y + x*z");
        assert_eq!(lhs, p("x*y^2*z^2 + x^2*y^2*z + x^2*y*z^2"));
        assert_eq!(lhs.to_string(), "x*y^2*z^2 + x^2*y*z^2 + x^2*y^2*z");
    }

    #[test]
    fn canonical_order_is_graded() {
        assert_eq!(
            p("24*x^4 + x + 58*x^3 + 22*x^2").to_string(),
            "x + 22*x^2 + 58*x^3 + 24*x^4"
        );
        assert_eq!(p("c^2*f2 + c*c1*f1").to_string(), "c*c1*f1 + c^2*f2");
    }

    #[test]
    fn partial_derivative() {
        assert_eq!(p("x^2*y").partial(var("x")), p("2*x*y"));
        assert_eq!(p("y").partial(var("x")), Polynomial::zero());
        // xyz(dx+dy+dz) applied to xyz
        let xyz = p("x*y*z");
        let sum = &(&xyz.partial(var("x")) + &xyz.partial(var("y"))) + &xyz.partial(var("z"));
        assert_eq!(&xyz * &sum, p("x*y*z") * p("y*z + x*y + x*z"));
    }

    #[test]
    fn substitution() {
        let bindings: BTreeMap<VarId, Polynomial> = [
            (var("u"), p("x+y+z")),
            (var("v"), p("x*y+y*z+z*x")),
            (var("w"), p("x*y*z")),
        ]
        .into();
        assert_eq!(
            p("u*v*w").subst(&bindings),
            p("(x+y+z)*(x*y+y*z+z*x)*(x*y*z)")
        );
        // unbound variables stay fixed
        let partial: BTreeMap<VarId, Polynomial> = [(var("y"), Polynomial::one())].into();
        assert_eq!(p("x^2*y").subst(&partial), p("x^2"));
    }

    #[test]
    fn rational_eval() {
        use num_bigint::BigInt;
        let point: BTreeMap<VarId, BigRational> =
            [(var("x"), BigRational::new(BigInt::from(1), BigInt::from(2)))].into();
        let c3 = p("x + 8*x^2 + 6*x^3");
        let v = c3.eval(&point).unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(26), BigInt::from(8)));
        assert!(Polynomial::zero().eval(&BTreeMap::new()).unwrap().is_zero());
        assert!(p("x*y").eval(&point).is_err());
    }

    #[test]
    fn coefficient_extraction() {
        let c4 = p("x + 22*x^2 + 58*x^3 + 24*x^4");
        assert_eq!(
            c4.coeff(&Monomial::from_exps([(var("x"), 4)])),
            BigInt::from(24)
        );
        assert_eq!(
            c4.coeff(&Monomial::from_exps([(var("x"), 9)])),
            BigInt::zero()
        );
        assert_eq!(Polynomial::zero().coeff(&Monomial::one()), BigInt::zero());
    }

    #[test]
    fn display_signs_and_constants() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("3").to_string(), "3");
        assert_eq!(p("-x + 2").to_string(), "2 - x");
        assert_eq!(p("-x^2 - 1").to_string(), "-1 - x^2");
        assert_eq!(p("x - y").to_string(), "-y + x");
    }

    #[test]
    fn parse_errors_carry_position() {
        match Polynomial::parse("x + ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(Polynomial::parse("x ^ y").is_err());
        assert!(Polynomial::parse("(x").is_err());
    }

    #[test]
    fn json_round_trip() {
        let poly = p("x + 22*x^2 - 3*y*z^4");
        let json = poly.to_json();
        assert_eq!(Polynomial::from_json(&json).unwrap(), poly);
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "0",
            "1",
            "-5",
            "x + 22*x^2",
            "x*y^2*z^2 + x^2*y*z^2 + x^2*y^2*z",
        ] {
            let poly = p(s);
            assert_eq!(Polynomial::parse(&poly.to_string()).unwrap(), poly);
        }
    }

    proptest::proptest! {
        /// Substitution is a ring homomorphism.
        #[test]
        fn subst_commutes_with_ring_operations(
            a_terms in proptest::collection::vec((-5i64..=5, 0u32..=2, 0u32..=2), 0..4),
            b_terms in proptest::collection::vec((-5i64..=5, 0u32..=2, 0u32..=2), 0..4),
        ) {
            let build = |terms: &[(i64, u32, u32)]| {
                Polynomial::from_terms(terms.iter().map(|&(c, ex, ey)| {
                    (Monomial::from_exps([(var("x"), ex), (var("y"), ey)]), BigInt::from(c))
                }))
            };
            let (a, b) = (build(&a_terms), build(&b_terms));
            let bindings: BTreeMap<VarId, Polynomial> =
                [(var("x"), p("y + 1")), (var("y"), p("2*z - 1"))].into();
            proptest::prop_assert_eq!(
                (&a + &b).subst(&bindings),
                &a.subst(&bindings) + &b.subst(&bindings)
            );
            proptest::prop_assert_eq!(
                (&a * &b).subst(&bindings),
                &a.subst(&bindings) * &b.subst(&bindings)
            );
        }
    }
}
