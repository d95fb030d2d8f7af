//! Plane curve germs given by their branches.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::{BivariatePolynomial, Monomial};
use crate::rational::Rational;
use crate::upoly::UPoly;
use crate::{Error, Result};

/// A germ `f_1 ... f_r = 0` at the origin, one polynomial per branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneCurveGerm {
    branches: Vec<BivariatePolynomial>,
}

impl PlaneCurveGerm {
    /// Checks that every branch vanishes at the origin, is square-free, and
    /// that the branches are pairwise coprime.
    pub fn new(branches: Vec<BivariatePolynomial>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::EmptyGerm);
        }
        for (i, f) in branches.iter().enumerate() {
            if f.is_zero() || !f.constant_term().is_zero() {
                return Err(Error::BranchNotAtOrigin { branch: i });
            }
            let g = gcd(&gcd(f, &f.derivative_x()), &f.derivative_y());
            if !is_constant(&g) {
                return Err(Error::BranchNotSquareFree { branch: i });
            }
        }
        for i in 0..branches.len() {
            for j in i + 1..branches.len() {
                if !is_constant(&gcd(&branches[i], &branches[j])) {
                    return Err(Error::BranchesNotCoprime { first: i, second: j });
                }
            }
        }
        Ok(PlaneCurveGerm { branches })
    }

    /// Germ of a polynomial written as a product: each factor through the
    /// origin is a branch, and factors that are units at the origin are
    /// dropped.
    pub fn from_product(text: &str) -> Result<Self> {
        let factors = crate::parse::parse_factors(text)?;
        let branches = factors.into_iter().filter(|f| f.constant_term().is_zero()).collect();
        PlaneCurveGerm::new(branches)
    }

    pub fn branches(&self) -> &[BivariatePolynomial] {
        &self.branches
    }

    pub fn r(&self) -> usize {
        self.branches.len()
    }
}

fn is_constant(p: &BivariatePolynomial) -> bool {
    p.total_degree().unwrap_or(0) == 0
}

// Bivariate gcd over Q, viewing polynomials as elements of Q[x][y].
type Coeffs = Vec<UPoly>;

fn to_coeffs(p: &BivariatePolynomial) -> Coeffs {
    let deg_y = p.terms().map(|(m, _)| m.y).max().unwrap_or(0) as usize;
    let mut raw: Vec<Vec<Rational>> = Vec::new();
    raw.resize(deg_y + 1, Vec::new());
    for (m, c) in p.terms() {
        let row = &mut raw[m.y as usize];
        if row.len() <= m.x as usize {
            row.resize(m.x as usize + 1, Rational::zero());
        }
        row[m.x as usize] = c.clone();
    }
    let mut out: Coeffs = raw.into_iter().map(UPoly::new).collect();
    trim(&mut out);
    out
}

fn from_coeffs(c: &Coeffs) -> BivariatePolynomial {
    BivariatePolynomial::from_terms(c.iter().enumerate().flat_map(|(j, u)| {
        u.0.iter()
            .enumerate()
            .map(move |(i, q)| (Monomial::new(i as u32, j as u32), q.clone()))
    }))
}

fn trim(c: &mut Coeffs) {
    while c.last().is_some_and(|u| u.is_zero()) {
        c.pop();
    }
}

fn content(c: &Coeffs) -> UPoly {
    c.iter().fold(UPoly::zero(), |g, u| g.gcd(u))
}

fn primitive(c: &Coeffs) -> Coeffs {
    let g = content(c);
    if g.is_zero() {
        return c.clone();
    }
    c.iter().map(|u| u.div_rem(&g).0).collect()
}

fn pseudo_rem(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut r = a.clone();
    let n = b.len() - 1;
    let lb = b[n].clone();
    while r.len() > n && !r.is_empty() {
        let lr = r[r.len() - 1].clone();
        let shift = r.len() - 1 - n;
        let mut next: Coeffs = r.iter().map(|u| u.mul(&lb)).collect();
        for (i, u) in b.iter().enumerate() {
            next[shift + i] = next[shift + i].sub(&u.mul(&lr));
        }
        trim(&mut next);
        r = next;
    }
    r
}

/// Gcd in Q[x, y], up to a rational unit.
pub(crate) fn gcd(f: &BivariatePolynomial, g: &BivariatePolynomial) -> BivariatePolynomial {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let (a, b) = (to_coeffs(f), to_coeffs(g));
    let cont = content(&a).gcd(&content(&b));
    let (mut a, mut b) = (primitive(&a), primitive(&b));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r) };
    }
    let pp = primitive(&a);
    let out: Coeffs = pp.iter().map(|u| u.mul(&cont)).collect();
    from_coeffs(&out)
}
