//! Exact sparse multivariate polynomials with rational coefficients.
//!
//! A polynomial is stored in normal form: its variable list is sorted and
//! contains only variables that actually occur, and its terms are keyed by
//! exponent vectors under graded lexicographic order with no zero
//! coefficients. Structural equality is therefore polynomial equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Mono(Vec<u32>);

impl Mono {
    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Mono, BigRational>,
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(Vec::new()), c);
        }
        Polynomial { vars: Vec::new(), terms }
    }

    pub fn int(c: i64) -> Self {
        Polynomial::constant(integer(c))
    }

    pub fn var(name: &str) -> Self {
        Polynomial::monomial(name, 1)
    }

    /// `name^exp`.
    pub fn monomial(name: &str, exp: u32) -> Self {
        Polynomial::from_terms(&[name], [(vec![exp], BigRational::one())])
    }

    /// Builds a polynomial from exponent vectors over `vars`; repeated
    /// exponent vectors are summed. `vars` need not be sorted.
    pub fn from_terms<S: AsRef<str>>(vars: &[S], terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Self {
        let names: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate variable names");
        let pos: Vec<usize> = names.iter().map(|n| sorted.binary_search(n).expect("present")).collect();
        let mut map: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), names.len(), "exponent vector arity must match the variable list");
            let mut e = vec![0; sorted.len()];
            for (i, &x) in exps.iter().enumerate() {
                e[pos[i]] = x;
            }
            *map.entry(Mono(e)).or_insert_with(BigRational::zero) += c;
        }
        Polynomial { vars: sorted, terms: map }.normalized()
    }

    /// Integer coefficients `coeffs[k]` of `var^k`.
    pub fn from_univariate<T: Clone + Into<BigInt>>(var: &str, coeffs: &[T]) -> Self {
        Polynomial::from_terms(
            &[var],
            coeffs.iter().enumerate().map(|(k, c)| (vec![k as u32], integer(c.clone().into()))),
        )
    }

    /// Rational coefficients `coeffs[k]` of `var^k`.
    pub fn from_univariate_rational(var: &str, coeffs: &[BigRational]) -> Self {
        Polynomial::from_terms(&[var], coeffs.iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())))
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> =
            (0..self.vars.len()).map(|i| self.terms.keys().any(|m| m.0[i] > 0)).collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self.vars.iter().zip(&used).filter(|(_, &u)| u).map(|(v, _)| v.clone()).collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| (Mono(m.0.iter().zip(&used).filter(|(_, &u)| u).map(|(&e, _)| e).collect()), c))
            .collect();
        Polynomial { vars, terms }
    }

    /// Re-establishes the normal form. Values are always kept normalized, so
    /// this is the identity; it exists to state idempotence in tests.
    pub fn normalize(&self) -> Self {
        self.clone().normalized()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Mono::degree)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The constant value of a polynomial without variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.vars.is_empty() {
            Some(self.terms.values().next().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Coefficient of the monomial with the given exponents (absent variables
    /// have exponent 0).
    pub fn coefficient(&self, exps: &[(&str, u32)]) -> BigRational {
        let mut e = vec![0; self.vars.len()];
        for &(name, x) in exps {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => e[i] = x,
                None if x == 0 => {}
                None => return BigRational::zero(),
            }
        }
        self.terms.get(&Mono(e)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficients of `var^0, var^1, ...` for a polynomial in `var` alone.
    pub fn univariate_coeffs(&self, var: &str) -> Result<Vec<BigRational>> {
        if self.vars.iter().any(|v| v != var) {
            return Err(Error::domain(format!("polynomial is not univariate in {var}")));
        }
        let d = self.degree_in(var) as usize;
        let mut out = vec![BigRational::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            out[m.0.first().copied().unwrap_or(0) as usize] = c.clone();
        }
        Ok(out)
    }

    /// Re-expresses both operands over the union of their variables.
    fn aligned(&self, other: &Polynomial) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        let mut vars: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        vars.sort();
        vars.dedup();
        let map = |vs: &[String]| vs.iter().map(|v| vars.binary_search(v).expect("present")).collect();
        let a = map(&self.vars);
        let b = map(&other.vars);
        (vars, a, b)
    }

    fn lift(m: &Mono, pos: &[usize], width: usize) -> Mono {
        let mut e = vec![0; width];
        for (i, &x) in m.0.iter().enumerate() {
            e[pos[i]] = x;
        }
        Mono(e)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces each bound variable by its binding, simultaneously.
    pub fn substitute(&self, bindings: &BTreeMap<String, Polynomial>) -> Self {
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = match bindings.get(&self.vars[i]) {
                    Some(b) => powers.entry((i, e)).or_insert_with(|| b.pow(e)).clone(),
                    None => Polynomial::monomial(&self.vars[i], e),
                };
                term = &term * &factor;
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Convenience wrapper around [`Polynomial::substitute`].
    pub fn subs(&self, bindings: &[(&str, Polynomial)]) -> Self {
        self.substitute(&bindings.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
    }

    /// Exact value at a point that binds every variable.
    pub fn evaluate(&self, point: &BTreeMap<String, BigRational>) -> Result<BigRational> {
        let vals: Vec<&BigRational> = self
            .vars
            .iter()
            .map(|v| point.get(v).ok_or_else(|| Error::domain(format!("no value given for variable {v}"))))
            .collect::<Result<_>>()?;
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(vals[i].clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Convenience wrapper around [`Polynomial::evaluate`].
    pub fn eval(&self, point: &[(&str, BigRational)]) -> Result<BigRational> {
        self.evaluate(&point.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
    }

    /// Renames variables; names not in `map` are kept.
    pub fn rename(&self, map: &[(&str, &str)]) -> Self {
        let names: Vec<String> = self
            .vars
            .iter()
            .map(|v| map.iter().find(|(from, _)| from == v).map_or(v.clone(), |(_, to)| to.to_string()))
            .collect();
        Polynomial::from_terms(&names, self.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())))
    }

    /// `var^n * p(1/var)` for a univariate `p` of degree at most `n`.
    pub fn reversed(&self, var: &str, n: u32) -> Result<Self> {
        let coeffs = self.univariate_coeffs(var)?;
        if coeffs.len() > n as usize + 1 {
            return Err(Error::domain("reversal degree is below the polynomial degree"));
        }
        Ok(Polynomial::from_terms(
            &[var],
            coeffs.into_iter().enumerate().map(|(k, c)| (vec![n - k as u32], c)),
        ))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomials always serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::parse(0, e.to_string()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        if self.vars == other.vars {
            let mut terms = self.terms.clone();
            for (m, c) in &other.terms {
                *terms.entry(m.clone()).or_insert_with(BigRational::zero) += c;
            }
            return Polynomial { vars: self.vars.clone(), terms }.normalized();
        }
        let (vars, pa, pb) = self.aligned(other);
        let w = vars.len();
        let mut terms: BTreeMap<Mono, BigRational> =
            self.terms.iter().map(|(m, c)| (Polynomial::lift(m, &pa, w), c.clone())).collect();
        for (m, c) in &other.terms {
            *terms.entry(Polynomial::lift(m, &pb, w)).or_insert_with(BigRational::zero) += c;
        }
        Polynomial { vars, terms }.normalized()
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        let (vars, pa, pb) = self.aligned(other);
        let w = vars.len();
        let a: Vec<(Mono, &BigRational)> = self.terms.iter().map(|(m, c)| (Polynomial::lift(m, &pa, w), c)).collect();
        let b: Vec<(Mono, &BigRational)> = other.terms.iter().map(|(m, c)| (Polynomial::lift(m, &pb, w), c)).collect();
        let mut terms: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e = Mono(ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect());
                *terms.entry(e).or_insert_with(BigRational::zero) += *ca * *cb;
            }
        }
        Polynomial { vars, terms }.normalized()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, other: Polynomial) -> Polynomial {
                (&self).$f(&other)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, other: &Polynomial) -> Polynomial {
                (&self).$f(other)
            }
        }
    )*};
}
owned_ops!(Add add, Mul mul, Sub sub);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |a, b| &a * &b)
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order on normal forms (by serialized text), used only to make
/// bucketed output deterministic.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| if e == 1 { self.vars[k].clone() } else { format!("{}^{e}", self.vars[k]) })
                .collect();
            if factors.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_rational(&abs))?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: Vec<u32>,
    coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    variables: Vec<String>,
    terms: Vec<JsonTerm>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            variables: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| JsonTerm { exponents: m.0.clone(), coefficient: fmt_rational(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonPoly::deserialize(d)?;
        let mut seen = raw.variables.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != raw.variables.len() {
            return Err(D::Error::custom("duplicate variable names"));
        }
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            if t.exponents.len() != raw.variables.len() {
                return Err(D::Error::custom("exponent vector arity does not match the variable list"));
            }
            let c: BigRational = t.coefficient.parse().map_err(|_| D::Error::custom("bad coefficient"))?;
            terms.push((t.exponents, c));
        }
        Ok(Polynomial::from_terms(&raw.variables, terms))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(v)
    }
}

/// Recursive-descent parser for `+ - * / ^`, parentheses, rational literals,
/// identifiers, and implicit multiplication (`2x`, `x y`, `(x+1)(x-1)`).
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        _ => return Err(Error::parse(at, "division is only by non-zero constants")),
                    }
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii")
                .parse()
                .map_err(|_| Error::parse(start, "expected a non-negative integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").parse().expect("digits");
                Ok(Polynomial::constant(integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                Ok(Polynomial::var(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")))
            }
            Some(_) => Err(Error::parse(self.pos, "unexpected character")),
            None => Err(Error::parse(at.max(self.pos), "unexpected end of input")),
        }
    }
}

/// Coefficients (constant first) of the unique polynomial of degree below
/// `nodes.len()` through the given values.
pub fn interpolate(nodes: &[BigRational], values: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = nodes.len();
    if values.len() != n {
        return Err(Error::NumericRank("node and value counts differ".into()));
    }
    for i in 0..n {
        if nodes[i + 1..].contains(&nodes[i]) {
            return Err(Error::NumericRank(format!("duplicate interpolation node {}", nodes[i])));
        }
    }
    // Newton divided differences, then expansion into the monomial basis.
    let mut dd = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - j]);
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        // coeffs = coeffs * (t - nodes[k]) + dd[k]
        let mut next = vec![BigRational::zero(); n];
        for i in 0..n {
            if coeffs[i].is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += &coeffs[i];
            }
            next[i] -= &coeffs[i] * &nodes[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    Ok(coeffs)
}

/// Recovers `f(xvar, yvar)` of bidegree at most `(dx, dy)` from its values on
/// a full grid of `(dx + 1) * (dy + 1)` distinct nodes.
pub fn interpolate_bivariate(
    samples: &[(BigRational, BigRational, BigRational)],
    dx: usize,
    dy: usize,
    xvar: &str,
    yvar: &str,
) -> Result<Polynomial> {
    let mut xs: Vec<BigRational> = samples.iter().map(|s| s.0.clone()).collect();
    let mut ys: Vec<BigRational> = samples.iter().map(|s| s.1.clone()).collect();
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();
    if xs.len() != dx + 1 || ys.len() != dy + 1 {
        return Err(Error::NumericRank(format!(
            "need {} distinct x nodes and {} distinct y nodes, found {} and {}",
            dx + 1,
            dy + 1,
            xs.len(),
            ys.len()
        )));
    }
    let mut grid: BTreeMap<(BigRational, BigRational), BigRational> = BTreeMap::new();
    for (x, y, v) in samples {
        if grid.insert((x.clone(), y.clone()), v.clone()).is_some() {
            return Err(Error::NumericRank(format!("duplicate sample at ({x}, {y})")));
        }
    }
    if grid.len() != xs.len() * ys.len() {
        return Err(Error::NumericRank("samples do not fill the grid".into()));
    }
    // interpolate along x for each y row, then along y for each x power
    let rows: Vec<Vec<BigRational>> = ys
        .iter()
        .map(|y| interpolate(&xs, &xs.iter().map(|x| grid[&(x.clone(), y.clone())].clone()).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let mut terms = Vec::new();
    for i in 0..=dx {
        let col: Vec<BigRational> = rows.iter().map(|r| r[i].clone()).collect();
        for (j, c) in interpolate(&ys, &col)?.into_iter().enumerate() {
            terms.push((vec![i as u32, j as u32], c));
        }
    }
    if xvar == yvar {
        return Err(Error::domain("interpolation variables must differ"));
    }
    Ok(Polynomial::from_terms(&[xvar, yvar], terms))
}
