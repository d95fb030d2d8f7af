//! Bivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// `x^x * y^y`. Ordered by total degree, then by the exponent of `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub const fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.y.cmp(&other.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in two variables. Zero coefficients are never stored, so
/// equality is structural.
///
/// The two variables are called `x` and `y` when the polynomial lives
/// downstairs and `u` and `v` when it is written in a blow-up chart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BivariatePolynomial { terms }
    }

    /// The first variable.
    pub fn x() -> Self {
        Self::monomial(Monomial::new(1, 0), Rational::one())
    }

    /// The second variable.
    pub fn y() -> Self {
        Self::monomial(Monomial::new(0, 1), Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(Monomial::ONE)
    }

    /// Largest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Smallest total degree (the multiplicity at the origin), `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// Smallest exponent of the first variable, `None` for zero.
    pub fn order_in_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).min()
    }

    pub fn order_in_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).min()
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m, c.clone())),
        )
    }

    /// Drops every term of total degree `>= n`.
    pub fn truncate_degree(&self, n: u32) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(m, _)| m.degree() < n)
                .map(|(m, c)| (m, c.clone())),
        )
    }

    /// Drops every term whose first-variable exponent is `>= bound`.
    pub fn truncate_x(&self, bound: u32) -> Self {
        Self::from_terms(self.terms().filter(|(m, _)| m.x < bound).map(|(m, c)| (m, c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect(),
        }
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x + a, m.y + b), c.clone()))
                .collect(),
        }
    }

    /// Divides by `x^k`; `None` unless the division is exact.
    pub fn divide_by_x_power(&self, k: u32) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.x < k {
                return None;
            }
            out.insert(Monomial::new(m.x - k, m.y), c.clone());
        }
        Some(BivariatePolynomial { terms: out })
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Monomial::new(m.x - 1, m.y), c * int(m.x as i64))),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(m, _)| m.y > 0)
                .map(|(m, c)| (Monomial::new(m.x, m.y - 1), c * int(m.y as i64))),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    fn mul_truncated(&self, other: &Self, x_bound: Option<u32>) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = Monomial::new(m1.x + m2.x, m1.y + m2.y);
                if x_bound.is_some_and(|b| m.x >= b) {
                    continue;
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// `self(p, q)`.
    pub fn compose(&self, p: &Self, q: &Self) -> Self {
        self.compose_impl(p, q, None)
    }

    /// `self(p, q)` with every term of first-variable exponent `>= x_bound`
    /// discarded along the way.
    pub fn compose_truncated(&self, p: &Self, q: &Self, x_bound: u32) -> Self {
        self.compose_impl(p, q, Some(x_bound))
    }

    fn compose_impl(&self, p: &Self, q: &Self, bound: Option<u32>) -> Self {
        let max_x = self.terms.keys().map(|m| m.x).max().unwrap_or(0);
        let max_y = self.terms.keys().map(|m| m.y).max().unwrap_or(0);
        let p_pows = powers(p, max_x, bound);
        let q_pows = powers(q, max_y, bound);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let term = p_pows[m.x as usize].mul_truncated(&q_pows[m.y as usize], bound);
            for (tm, tc) in term.terms {
                out.add_term(tm, tc * c);
            }
        }
        out
    }

    /// Renders with the given variable names, in ascending monomial order.
    pub fn render(&self, vars: [&str; 2]) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || *m == Monomial::ONE {
                factors.push(alloc::format!("{magnitude}"));
            }
            for (name, e) in [(vars[0], m.x), (vars[1], m.y)] {
                match e {
                    0 => {}
                    1 => factors.push(String::from(name)),
                    e => factors.push(alloc::format!("{name}^{e}")),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

fn powers(p: &BivariatePolynomial, max: u32, bound: Option<u32>) -> Vec<BivariatePolynomial> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BivariatePolynomial::one());
    for i in 1..=max as usize {
        let next = out[i - 1].mul_truncated(p, bound);
        out.push(next);
    }
    out
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(["x", "y"]))
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.mul_truncated(rhs, None)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $method(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
