//! Exact Laurent polynomials with integer coefficients whose exponents live on
//! the quarter-integer grid `(1/4)Z`.
//!
//! A single type serves both the Kauffman bracket (variable `A`, integer
//! exponents) and the Jones polynomial (variable `t`). Exponents are stored as
//! numerators over the fixed denominator 4, coefficients as big integers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// The indeterminate a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A => f.write_str("A"),
            Var::T => f.write_str("t"),
        }
    }
}

/// An exact element of `(1/4)Z`, stored as its numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuarterInt(i64);

impl QuarterInt {
    pub const ZERO: QuarterInt = QuarterInt(0);

    pub const fn from_numerator(num: i64) -> Self {
        QuarterInt(num)
    }

    pub const fn from_int(v: i64) -> Self {
        QuarterInt(4 * v)
    }

    pub const fn numerator(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 4 == 0
    }

    /// The integer value, if this is one.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 4)
    }
}

impl fmt::Display for QuarterInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 4)
        } else {
            let g = self.0.gcd(&4);
            write!(f, "{}/{}", self.0 / g, 4 / g)
        }
    }
}

impl Serialize for QuarterInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.to_integer() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

/// Integer-coefficient Laurent polynomial on the quarter-integer exponent grid.
///
/// Canonical form: no zero coefficients are stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarterLaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl QuarterLaurentPoly {
    pub fn zero(var: Var) -> Self {
        QuarterLaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, QuarterInt::ZERO)
    }

    pub fn monomial(var: Var, coeff: impl Into<BigInt>, exponent: QuarterInt) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exponent.numerator(), coeff.into());
        p
    }

    /// `coeff * A^exp` with an integer exponent.
    pub fn a_monomial(coeff: i64, exp: i64) -> Self {
        Self::monomial(Var::A, coeff, QuarterInt::from_int(exp))
    }

    /// `coeff * t^exp` with an integer exponent.
    pub fn t_monomial(coeff: i64, exp: i64) -> Self {
        Self::monomial(Var::T, coeff, QuarterInt::from_int(exp))
    }

    /// Builds a polynomial from `(exponent numerator, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(var: Var, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms(Var::A, [(8, -1), (-8, -1)])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (QuarterInt, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (QuarterInt(e), c))
    }

    pub fn coeff(&self, exponent: QuarterInt) -> BigInt {
        self.terms.get(&exponent.numerator()).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, num: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(num).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&num);
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), PolyError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        debug_assert_eq!(self.var, other.var);
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
    }

    /// Multiplies by `coeff * var^exponent`.
    pub fn scale_monomial(&self, coeff: impl Into<BigInt>, exponent: QuarterInt) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero(self.var);
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| (e + exponent.numerator(), c * &coeff))
            .collect();
        QuarterLaurentPoly { var: self.var, terms }
    }

    /// Shifts every exponent by `num / 4`.
    pub(crate) fn shifted(&self, num: i64) -> Self {
        let terms = self.terms.iter().map(|(&e, c)| (e + num, c.clone())).collect();
        QuarterLaurentPoly { var: self.var, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same variable");
        }
        acc
    }

    pub fn min_degree(&self) -> Result<QuarterInt, PolyError> {
        self.terms
            .keys()
            .next()
            .map(|&e| QuarterInt(e))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn max_degree(&self) -> Result<QuarterInt, PolyError> {
        self.terms
            .keys()
            .next_back()
            .map(|&e| QuarterInt(e))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// True when every exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 4 == 0)
    }

    /// `p(x) -> p(x^-1)`.
    pub fn inverted(&self) -> Self {
        let terms = self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect();
        QuarterLaurentPoly { var: self.var, terms }
    }

    /// Computes `(-A)^(-3w) * p` and substitutes `A = t^(-1/4)`.
    pub fn substitute_a_to_t(&self, writhe: i64) -> Result<Self, PolyError> {
        if self.var != Var::A {
            return Err(PolyError::VariableMismatch(Var::A, self.var));
        }
        let sign = if (3 * writhe).rem_euclid(2) == 0 { 1 } else { -1 };
        let scaled = self.scale_monomial(sign, QuarterInt::from_int(-3 * writhe));
        // A^e = t^(-e/4); the A-exponent e is stored as 4e, the t-exponent -e/4 as -e.
        let terms = scaled.terms.into_iter().map(|(num, c)| (-num / 4, c)).collect();
        Ok(QuarterLaurentPoly { var: Var::T, terms })
    }

    /// Exact division by a divisor whose leading coefficient is a unit.
    ///
    /// Returns `None` when the division leaves a remainder or the divisor's
    /// leading coefficient is not `+-1`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.var != divisor.var || divisor.is_zero() {
            return None;
        }
        let (&dtop, dlead) = divisor.terms.iter().next_back()?;
        if !dlead.abs().is_one() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        let dlow = *divisor.terms.keys().next()?;
        while let Some((&top, c)) = rem.terms.iter().next_back() {
            let span = dtop - dlow;
            let rem_low = *rem.terms.keys().next().expect("nonempty");
            if top - rem_low < span {
                return None;
            }
            let q = c * dlead;
            let shift = top - dtop;
            quot.add_term(shift, q.clone());
            for (&e, dc) in &divisor.terms {
                rem.add_term(e + shift, -(&q * dc));
            }
        }
        Some(quot)
    }
}

impl std::ops::Neg for &QuarterLaurentPoly {
    type Output = QuarterLaurentPoly;
    fn neg(self) -> QuarterLaurentPoly {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c)).collect();
        QuarterLaurentPoly { var: self.var, terms }
    }
}

/// Operator forms panic on a variable mismatch; use the `try_*` methods for
/// untrusted operands.
impl std::ops::Add for &QuarterLaurentPoly {
    type Output = QuarterLaurentPoly;
    fn add(self, rhs: Self) -> QuarterLaurentPoly {
        self.try_add(rhs).expect("variable mismatch")
    }
}

impl std::ops::Sub for &QuarterLaurentPoly {
    type Output = QuarterLaurentPoly;
    fn sub(self, rhs: Self) -> QuarterLaurentPoly {
        self.try_sub(rhs).expect("variable mismatch")
    }
}

impl std::ops::Mul for &QuarterLaurentPoly {
    type Output = QuarterLaurentPoly;
    fn mul(self, rhs: Self) -> QuarterLaurentPoly {
        self.try_mul(rhs).expect("variable mismatch")
    }
}

fn fmt_exponent(num: i64) -> String {
    let q = QuarterInt(num);
    if q.is_integer() {
        q.to_string()
    } else {
        format!("({q})")
    }
}

impl fmt::Display for QuarterLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", self.var)?;
            if e != 4 {
                write!(f, "^{}", fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

impl Serialize for QuarterLaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_exponent(s: &str) -> Result<i64, PolyError> {
    let bad = || PolyError::Parse(format!("bad exponent `{s}`"));
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    match s.split_once('/') {
        None => s.parse::<i64>().map(|v| 4 * v).map_err(|_| bad()),
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q <= 0 || 4 % q != 0 {
                return Err(bad());
            }
            Ok(p * (4 / q))
        }
    }
}

/// Parses the canonical rendering, e.g. `t + t^3 - t^4` or `A^-7 - A^-3 - A^5`.
/// A polynomial without any variable letter parses as a constant in `t`.
impl FromStr for QuarterLaurentPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let var = if s.contains('A') { Var::A } else { Var::T };
        let letter = if var == Var::A { 'A' } else { 't' };
        if s == "0" {
            return Ok(Self::zero(var));
        }
        // Split into signed terms, keeping the `-` that follows a `^`.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev = ' ';
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev != '^' && prev != '(' {
                if !cur.trim().is_empty() {
                    pieces.push((neg, cur.trim().to_string()));
                }
                cur.clear();
                neg = ch == '-';
            } else if !ch.is_whitespace() {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = ch;
            }
        }
        if !cur.trim().is_empty() {
            pieces.push((neg, cur.trim().to_string()));
        }
        if pieces.is_empty() {
            return Err(PolyError::Parse(s.to_string()));
        }
        let mut p = Self::zero(var);
        for (neg, term) in pieces {
            let (coeff, exp) = match term.find(letter) {
                None => {
                    let c: BigInt = term.parse().map_err(|_| PolyError::Parse(term.clone()))?;
                    (c, 0)
                }
                Some(pos) => {
                    let head = term[..pos].trim_end_matches('*');
                    let c: BigInt = if head.is_empty() {
                        BigInt::one()
                    } else {
                        head.parse().map_err(|_| PolyError::Parse(term.clone()))?
                    };
                    let tail = &term[pos + 1..];
                    let e = match tail.strip_prefix('^') {
                        None if tail.is_empty() => 4,
                        None => return Err(PolyError::Parse(term.clone())),
                        Some(x) => parse_exponent(x)?,
                    };
                    (c, e)
                }
            };
            p.add_term(exp, if neg { -coeff } else { coeff });
        }
        Ok(p)
    }
}
