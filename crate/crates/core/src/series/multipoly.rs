use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{parse_rational, Rational, Ring};
use crate::error::{Error, Result};

/// Product of named indeterminates with exponents, kept sorted by name with
/// no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self(vec![(name.into(), 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(String, u32)] {
        &self.0
    }

    fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<String, u32> = self.0.iter().cloned().collect();
        for (v, e) in &other.0 {
            *map.entry(v.clone()).or_default() += e;
        }
        Self(map.into_iter().collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial over the rationals in named indeterminates. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn var(name: impl Into<String>) -> Self {
        let mut p = Self::default();
        p.add_term(Monomial::var(name), Rational::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::unit()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Replaces the indeterminate `name` by `value`.
    pub fn substitute(&self, name: &str, value: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = Vec::new();
            let mut power = 0;
            for (v, e) in &m.0 {
                if v == name {
                    power = *e;
                } else {
                    rest.push((v.clone(), *e));
                }
            }
            let mut t = MultiPoly::zero();
            t.add_term(Monomial(rest), c.clone());
            out = out + t * value.power(power);
        }
        out
    }

    /// Parses expressions such as `a - 3/2*b^2*c + (x + 1)^2`.
    pub fn parse(s: &str) -> Result<MultiPoly> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("trailing input in polynomial `{s}`")));
        }
        Ok(out)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        Self::constant(r)
    }
}

impl Ring for MultiPoly {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }

    fn scale(&self, r: &Rational) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * r);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        for (i, (m, c)) in order.into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in polynomial")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.tokens.get(self.pos).cloned() {
                        Some(Token::Num(d)) => {
                            self.pos += 1;
                            MultiPoly::constant(parse_rational(&format!("{n}/{d}"))?)
                        }
                        _ => return Err(Error::Parse("expected denominator".into())),
                    }
                } else {
                    MultiPoly::constant(parse_rational(&n)?)
                }
            }
            Some(Token::Ident(v)) => {
                self.pos += 1;
                MultiPoly::var(v)
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                inner
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?} in polynomial"))),
        };
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?;
                    return Ok(base.power(e));
                }
                _ => return Err(Error::Parse("expected exponent".into())),
            }
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{frac, int};

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn canonical_rendering_round_trips() {
        let a = p("b*a - 3/2*c^2 + 1 + a*b");
        assert_eq!(a.to_string(), "1 + 2*a*b - 3/2*c^2");
        assert_eq!(p(&a.to_string()), a);
        assert_eq!(p("-(x - 1)^2").to_string(), "-1 + 2*x - x^2");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = p("a + b") - p("b + a");
        assert!(a.is_zero());
        assert_eq!(a.len(), 0);
        assert_eq!(a.to_string(), "0");
    }

    #[test]
    fn constants_and_substitution() {
        assert_eq!(p("3/4").as_constant(), Some(frac(3, 4)));
        assert_eq!(p("a").as_constant(), None);
        let q = p("a^2 + a*b").substitute("a", &p("b + 1"));
        assert_eq!(q, p("1 + 3*b + 2*b^2"));
        assert_eq!(p("x*y").substitute("x", &MultiPoly::constant(int(0))), MultiPoly::zero());
    }

    #[test]
    fn parse_errors() {
        assert!(MultiPoly::parse("a +").is_err());
        assert!(MultiPoly::parse("(a").is_err());
        assert!(MultiPoly::parse("a $ b").is_err());
        assert!(MultiPoly::parse("a b").is_err());
    }
}
