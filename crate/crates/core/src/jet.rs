//! Finite models of the local ring: jets `O / m^N` and their subspaces.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg;
use crate::poly::{BivariatePolynomial, Monomial};
use crate::rational::Rational;
use crate::{Error, Result};

/// Polynomials modulo all terms of total degree `>= order`.
///
/// Basis: `x^i y^j` with `i + j < order`, in the global monomial order
/// (`1, x, y, x^2, x*y, y^2, ...`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JetSpace {
    order: u32,
}

impl JetSpace {
    pub const fn new(order: u32) -> Self {
        JetSpace { order }
    }

    pub const fn order(self) -> u32 {
        self.order
    }

    pub const fn dim(self) -> usize {
        let n = self.order as usize;
        n * (n + 1) / 2
    }

    pub fn index_of(self, m: Monomial) -> Option<usize> {
        let d = m.degree();
        (d < self.order).then(|| (d as usize) * (d as usize + 1) / 2 + m.y as usize)
    }

    pub fn monomial_at(self, index: usize) -> Monomial {
        let mut d = 0usize;
        while (d + 1) * (d + 2) / 2 <= index {
            d += 1;
        }
        let y = index - d * (d + 1) / 2;
        Monomial::new((d - y) as u32, y as u32)
    }

    pub fn monomials(self) -> impl Iterator<Item = Monomial> {
        (0..self.order).flat_map(|d| (0..=d).map(move |y| Monomial::new(d - y, y)))
    }

    pub fn polynomial(self, coords: &[Rational]) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(coords.iter().enumerate().map(|(i, c)| (self.monomial_at(i), c.clone())))
    }
}

/// Coefficient vector of `p` in `JetSpace(n)`; higher terms are dropped.
pub fn jet_truncate(p: &BivariatePolynomial, n: u32) -> Vec<Rational> {
    let space = JetSpace::new(n);
    let mut v = vec![Rational::zero(); space.dim()];
    for (m, c) in p.terms() {
        if let Some(i) = space.index_of(m) {
            v[i] = c.clone();
        }
    }
    v
}

/// A linear subspace of a jet space, stored in reduced row echelon form so
/// that equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JetSubspace {
    space: JetSpace,
    basis: Vec<Vec<Rational>>,
}

impl JetSubspace {
    pub fn full(space: JetSpace) -> Self {
        let n = space.dim();
        let basis = (0..n)
            .map(|i| {
                let mut r = vec![Rational::zero(); n];
                r[i] = Rational::one();
                r
            })
            .collect();
        JetSubspace { space, basis }
    }

    pub fn zero(space: JetSpace) -> Self {
        JetSubspace {
            space,
            basis: Vec::new(),
        }
    }

    /// Span of the given coordinate rows.
    pub fn span(space: JetSpace, rows: &[Vec<Rational>]) -> Result<Self> {
        for r in rows {
            check_len(space, r)?;
        }
        Ok(JetSubspace {
            space,
            basis: linalg::rref(rows, space.dim()),
        })
    }

    /// Span of the truncations of the given polynomials.
    pub fn from_polynomials(space: JetSpace, polys: &[BivariatePolynomial]) -> Self {
        let rows: Vec<Vec<Rational>> = polys.iter().map(|p| jet_truncate(p, space.order)).collect();
        JetSubspace {
            space,
            basis: linalg::rref(&rows, space.dim()),
        }
    }

    /// Span of the monomials, truncated.
    pub fn from_monomials(space: JetSpace, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let polys: Vec<BivariatePolynomial> = monomials
            .into_iter()
            .map(|m| BivariatePolynomial::monomial(m, Rational::one()))
            .collect();
        Self::from_polynomials(space, &polys)
    }

    pub fn space(&self) -> JetSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `dim O/m^N - dim self`; for ideals containing `m^N` this is the
    /// colength and does not depend on `N`.
    pub fn codim(&self) -> usize {
        self.space.dim() - self.dim()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn basis_polynomials(&self) -> Vec<BivariatePolynomial> {
        self.basis.iter().map(|r| self.space.polynomial(r)).collect()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.space.dim() {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        linalg::rank(&rows, self.space.dim()) == self.dim()
    }

    pub fn contains_polynomial(&self, p: &BivariatePolynomial) -> bool {
        self.contains_vector(&jet_truncate(p, self.space.order))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &JetSubspace) -> Result<bool> {
        self.check_ambient(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(linalg::rank(&rows, self.space.dim()) == self.dim())
    }

    fn check_ambient(&self, other: &JetSubspace) -> Result<()> {
        if self.space != other.space {
            return Err(Error::AmbientMismatch {
                left: self.space.order,
                right: other.space.order,
            });
        }
        Ok(())
    }

    /// Re-truncates an ideal model to a larger order by adding every
    /// monomial of degree in `[N, order)`. Only meaningful when `self`
    /// models an ideal that contains `m^N`.
    pub fn extend_ideal(&self, order: u32) -> Result<JetSubspace> {
        if order < self.space.order {
            return Err(Error::TruncationTooSmall {
                alpha: self.space.order,
                n: order,
            });
        }
        let space = JetSpace::new(order);
        let n = space.dim();
        let mut rows: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|r| {
                let mut e = r.clone();
                e.resize(n, Rational::zero());
                e
            })
            .collect();
        for i in self.space.dim()..n {
            let mut r = vec![Rational::zero(); n];
            r[i] = Rational::one();
            rows.push(r);
        }
        Ok(JetSubspace {
            space,
            basis: linalg::rref(&rows, n),
        })
    }

    /// True when the subspace is spanned by monomials.
    pub fn is_monomial(&self) -> bool {
        self.basis
            .iter()
            .all(|r| r.iter().filter(|c| !c.is_zero()).count() == 1)
    }

    /// Minimal monomial generators of the ideal `self + m^N`, when `self`
    /// is spanned by monomials.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if !self.is_monomial() {
            return None;
        }
        let mut members: Vec<Monomial> = self
            .basis
            .iter()
            .map(|r| {
                let i = r.iter().position(|c| !c.is_zero()).unwrap_or(0);
                self.space.monomial_at(i)
            })
            .collect();
        let d = self.space.order;
        members.extend((0..=d).map(|y| Monomial::new(d - y, y)));
        members.sort();
        let minimal = members
            .iter()
            .filter(|m| !members.iter().any(|o| o != *m && o.divides(**m)))
            .copied()
            .collect();
        Some(minimal)
    }
}

fn check_len(space: JetSpace, row: &[Rational]) -> Result<()> {
    if row.len() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: row.len(),
        });
    }
    Ok(())
}

/// Common kernel of linear functionals on the jet space.
pub fn subspace_from_conditions(space: JetSpace, conditions: &[Vec<Rational>]) -> Result<JetSubspace> {
    for c in conditions {
        check_len(space, c)?;
    }
    let k = linalg::kernel(conditions, space.dim());
    Ok(JetSubspace {
        space,
        basis: linalg::rref(&k, space.dim()),
    })
}

/// `dim V - dim W`, after checking `W ⊆ V`.
pub fn quotient_dim(v: &JetSubspace, w: &JetSubspace) -> Result<usize> {
    if !v.contains(w)? {
        return Err(Error::NotSubspace);
    }
    Ok(v.dim() - w.dim())
}

pub fn subspace_sum(parts: &[JetSubspace]) -> Result<JetSubspace> {
    let Some(first) = parts.first() else {
        return Err(Error::ZeroSubspace);
    };
    let mut rows = Vec::new();
    for p in parts {
        first.check_ambient(p)?;
        rows.extend(p.basis.iter().cloned());
    }
    Ok(JetSubspace {
        space: first.space,
        basis: linalg::rref(&rows, first.space.dim()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::rational::int;

    fn poly(s: &str) -> BivariatePolynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn basis_indexing_round_trips() {
        let s = JetSpace::new(5);
        assert_eq!(s.dim(), 15);
        for (i, m) in s.monomials().enumerate() {
            assert_eq!(s.index_of(m), Some(i));
            assert_eq!(s.monomial_at(i), m);
        }
        assert_eq!(s.index_of(Monomial::new(3, 2)), None);
    }

    #[test]
    fn truncation_examples() {
        let v = jet_truncate(&poly("x^2+y^5"), 3);
        assert_eq!(JetSpace::new(3).polynomial(&v), poly("x^2"));
        assert_eq!(jet_truncate(&poly("1"), 1), [int(1)]);
        assert!(jet_truncate(&poly("x*y"), 2).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn conditions_examples() {
        let s = JetSpace::new(2);
        assert_eq!(subspace_from_conditions(s, &[]).unwrap(), JetSubspace::full(s));
        let c = vec![int(1), int(0), int(0)];
        let one = subspace_from_conditions(s, core::slice::from_ref(&c)).unwrap();
        assert_eq!(one, JetSubspace::from_polynomials(s, &[poly("x"), poly("y")]));
        assert_eq!(subspace_from_conditions(s, &[c.clone(), c]).unwrap(), one);
        assert!(matches!(
            subspace_from_conditions(s, &[vec![int(1)]]),
            Err(Error::DimensionMismatch { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn quotient_examples() {
        let s = JetSpace::new(2);
        let v = JetSubspace::full(s);
        let w = JetSubspace::from_polynomials(s, &[poly("x"), poly("y")]);
        assert_eq!(quotient_dim(&v, &v).unwrap(), 0);
        assert_eq!(quotient_dim(&v, &w).unwrap(), 1);
        assert_eq!(quotient_dim(&w, &v), Err(Error::NotSubspace));
        let s3 = JetSpace::new(3);
        let m = JetSubspace::from_polynomials(s3, &[poly("x"), poly("y"), poly("x^2"), poly("x*y"), poly("y^2")]);
        assert_eq!(quotient_dim(&JetSubspace::full(s3), &m).unwrap(), 1);
    }

    #[test]
    fn sums() {
        let s = JetSpace::new(2);
        let x = JetSubspace::from_polynomials(s, &[poly("x")]);
        let y = JetSubspace::from_polynomials(s, &[poly("y")]);
        let xy = JetSubspace::from_polynomials(s, &[poly("x"), poly("y")]);
        assert_eq!(subspace_sum(core::slice::from_ref(&x)).unwrap(), x);
        assert_eq!(subspace_sum(&[x.clone(), y.clone()]).unwrap(), xy);
        assert_eq!(subspace_sum(&[y, x]).unwrap(), xy);
        let other = JetSubspace::full(JetSpace::new(3));
        assert!(matches!(subspace_sum(&[xy, other]), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn extension_keeps_colength() {
        let s = JetSpace::new(2);
        let m = JetSubspace::from_polynomials(s, &[poly("x"), poly("y")]);
        let e = m.extend_ideal(4).unwrap();
        assert_eq!(e.codim(), 1);
        assert_eq!(
            e.monomial_generators().unwrap(),
            [Monomial::new(1, 0), Monomial::new(0, 1)]
        );
    }
}
