//! Polynomials with exact rational coefficients, their Newton diagrams and
//! monomial valuations.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{Diagram, Point};
use crate::error::{Error, Result};
use crate::geometry::determinant;
use crate::rational::{dot, format_rational, parse_rational, parse_rational_list, Rational, RationalRepr};

pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Exponent, Rational>,
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl Polynomial {
    pub fn zero(dim: usize) -> Polynomial {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Rational) -> Polynomial {
        Polynomial::monomial(c, vec![0; dim])
    }

    /// `c * z^exponent`; `dim` is the length of `exponent`.
    pub fn monomial(c: Rational, exponent: Exponent) -> Polynomial {
        let mut p = Polynomial::zero(exponent.len());
        if !c.is_zero() {
            p.terms.insert(exponent, c);
        }
        p
    }

    /// The coordinate function `z_{index+1}`.
    pub fn variable(dim: usize, index: usize) -> Polynomial {
        let mut e = vec![0; dim];
        e[index] = 1;
        Polynomial::monomial(Rational::one(), e)
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Polynomial> {
        let mut p = Polynomial::zero(dim);
        for (e, c) in terms {
            check_dim(dim, e.len())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn parse(text: &str, dim: usize) -> Result<Polynomial> {
        Parser::new(text, dim).parse()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut acc: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial { dim: self.dim, terms: acc })
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::constant(self.dim, Rational::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// Expands `p(M * zeta)`, i.e. substitutes `z_i = sum_j M_ij zeta_j`.
    pub fn substitute_linear(&self, m: &RationalMatrix) -> Result<Polynomial> {
        check_dim(self.dim, m.size())?;
        if m.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let n = self.dim;
        let forms: Vec<Polynomial> = m
            .rows()
            .iter()
            .map(|row| {
                let terms = row.iter().enumerate().map(|(j, c)| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    (e, c.clone())
                });
                Polynomial::from_terms(n, terms).expect("square matrix")
            })
            .collect();
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(n);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let pw = powers.entry((i, k)).or_insert_with(|| forms[i].pow(k));
                    term = term.mul(pw)?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Exponents with nonzero coefficients.
    pub fn support(&self) -> Result<Vec<Point>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.terms.keys().map(|e| exponent_point(e)).collect())
    }

    /// The Newton diagram `conv(support) + R^n_+`.
    pub fn newton_diagram(&self) -> Result<Diagram> {
        Diagram::canonicalize(self.dim, self.support()?)
    }

    /// Monomial valuation: `min <a, J>` over the support.
    pub fn index_of(&self, a: &Weight) -> Result<Rational> {
        check_dim(self.dim, a.dim())?;
        self.terms.keys().map(|e| dot(a.coords(), exponent_point(e).coords())).min().ok_or(Error::ZeroPolynomial)
    }
}

fn exponent_point(e: &[u32]) -> Point {
    Point::new(e.iter().map(|&k| Rational::from_integer(k.into())).collect()).expect("nonnegative exponents")
}

impl fmt::Display for Polynomial {
    /// Terms in descending graded-lex order, e.g. `z1^2 - 1/2*z1*z2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exponent> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| if k == 1 { format!("z{}", j + 1) } else { format!("z{}^{}", j + 1, k) })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&magnitude), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Recursive-descent parser for
/// `expr := term (("+"|"-") term)*`, `term := factor ("*" factor)*`,
/// `factor := base ("^" int)?`, `base := rational | z<k> | "(" expr ")"`.
/// A leading unary minus is also accepted.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, dim: usize) -> Self {
        Parser { src: text.as_bytes(), pos: 0, dim }
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    fn parse(mut self) -> Result<Polynomial> {
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let p = self.expr()?;
        if self.peek().is_some() {
            return self.syntax("unexpected trailing input");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat(b'-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        if self.peek() == Some(b'-') {
            return Err(Error::NegativeExponent { position: self.pos });
        }
        let digits = self.digits();
        if digits.is_empty() {
            return self.syntax("expected a nonnegative integer exponent");
        }
        match digits.parse::<u32>() {
            Ok(k) => Ok(base.pow(k)),
            Err(_) => self.syntax("exponent too large"),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.syntax("expected `)`");
                }
                Ok(inner)
            }
            Some(b'z') => {
                let start = self.pos;
                self.pos += 1;
                let digits = self.digits();
                let index: usize = digits.parse().unwrap_or(0);
                if index == 0 || index > self.dim {
                    let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").to_string();
                    return Err(Error::UnknownVariable { name, position: start });
                }
                Ok(Polynomial::variable(self.dim, index - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let numer = self.digits();
                let mut text = numer.to_string();
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let denom = self.digits();
                    if denom.is_empty() || denom.bytes().all(|b| b == b'0') {
                        self.pos = start;
                        return self.syntax("expected a positive integer denominator");
                    }
                    text = format!("{numer}/{denom}");
                }
                Ok(Polynomial::constant(self.dim, parse_rational(&text)?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").to_string();
                Err(Error::UnknownVariable { name, position: start })
            }
            Some(_) => self.syntax("unexpected character"),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// A strictly positive weight vector `a`, the exponent scale of `max_k log|z_k| / a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(a: Vec<Rational>) -> Result<Weight> {
        if a.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some((index, value)) = a.iter().enumerate().find(|(_, c)| !c.is_positive()) {
            return Err(Error::NonpositiveWeight { index, value: format_rational(value) });
        }
        Ok(Weight(a))
    }

    pub fn ones(dim: usize) -> Weight {
        Weight(vec![Rational::one(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn reciprocal(&self) -> Weight {
        Weight(self.0.iter().map(|x| x.recip()).collect())
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Weight> {
        Weight::new(parse_rational_list(s)?)
    }
}

/// `u = log(|p_1| + ... + |p_m|)`, given by its polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityInput {
    dim: usize,
    polys: Vec<Polynomial>,
}

impl SingularityInput {
    pub fn new(dim: usize, polys: Vec<Polynomial>) -> Result<SingularityInput> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if polys.is_empty() {
            return Err(Error::EmptyInput);
        }
        for p in &polys {
            check_dim(dim, p.dim())?;
            if p.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(SingularityInput { dim, polys })
    }

    pub fn parse(dim: usize, texts: &[&str]) -> Result<SingularityInput> {
        let polys = texts.iter().map(|t| Polynomial::parse(t, dim)).collect::<Result<Vec<_>>>()?;
        SingularityInput::new(dim, polys)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Canonical hull of the union of all supports: the diagram whose support
    /// function reproduces `min_i index_of(p_i, a)`.
    pub fn diagram(&self) -> Result<Diagram> {
        let mut points = Vec::new();
        for p in &self.polys {
            points.extend(p.support()?);
        }
        Diagram::canonicalize(self.dim, points)
    }

    pub fn substitute_linear(&self, m: &RationalMatrix) -> Result<SingularityInput> {
        let polys = self.polys.iter().map(|p| p.substitute_linear(m)).collect::<Result<Vec<_>>>()?;
        SingularityInput::new(self.dim, polys)
    }
}

#[derive(Serialize, Deserialize)]
struct InputRepr {
    dim: usize,
    polys: Vec<String>,
}

impl Serialize for SingularityInput {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InputRepr { dim: self.dim, polys: self.polys.iter().map(ToString::to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SingularityInput {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = InputRepr::deserialize(d)?;
        let texts: Vec<&str> = repr.polys.iter().map(String::as_str).collect();
        SingularityInput::parse(repr.dim, &texts).map_err(serde::de::Error::custom)
    }
}

/// Square rational matrix, serialized row-major as rational strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix(Vec<Vec<Rational>>);

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<RationalMatrix> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquareMatrix);
        }
        Ok(RationalMatrix(rows))
    }

    pub fn identity(n: usize) -> RationalMatrix {
        RationalMatrix(
            (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.0
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.0)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        let n = self.size();
        let mut a: Vec<Vec<Rational>> = self
            .0
            .iter()
            .zip(RationalMatrix::identity(n).0)
            .map(|(row, id)| row.iter().cloned().chain(id).collect())
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(p, col);
            let pivot = a[col][col].clone();
            a[col].iter_mut().for_each(|x| *x /= &pivot);
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    row.iter_mut().zip(&pivot_row).for_each(|(x, y)| *x -= &f * y);
                }
            }
        }
        Ok(RationalMatrix(a.into_iter().map(|row| row[n..].to_vec()).collect()))
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.0.iter().map(|r| r.iter().map(format_rational).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<RationalRepr>>::deserialize(d)?;
        RationalMatrix::new(rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}
