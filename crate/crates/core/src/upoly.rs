//! Univariate polynomials over Q, used for tangent directions and gcds.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, Rational};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UPoly(pub Vec<Rational>);

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead();
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().cloned().unwrap_or_default() / &lead;
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] -= c * &f;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let l = self.lead();
        self.scale(&(Rational::one() / l))
    }

    /// Monic gcd; zero only if both are zero.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// All distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut p = self.squarefree_part();
        let mut roots = Vec::new();
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        if p.0[0].is_zero() {
            roots.push(Rational::zero());
            p = UPoly::new(p.0[1..].to_vec());
        }
        if p.degree().unwrap_or(0) > 0 {
            let d = common_denominator(&p.0);
            let ints: Vec<BigInt> = p.0.iter().map(|c| (c * &d).to_integer()).collect();
            let a0 = ints[0].abs();
            let an = ints[ints.len() - 1].abs();
            for num in divisors(&a0) {
                for den in divisors(&an) {
                    for sign in [1, -1] {
                        let t = Rational::new(&num * BigInt::from(sign), den.clone());
                        if p.eval(&t).is_zero() && !roots.contains(&t) {
                            roots.push(t);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    pub fn render(&self, var: &str) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let m = c.abs();
            let coeff = if m.is_one() && i > 0 {
                String::new()
            } else if i > 0 {
                alloc::format!("{m}*")
            } else {
                alloc::format!("{m}")
            };
            let power = match i {
                0 => String::new(),
                1 => String::from(var),
                _ => alloc::format!("{var}^{i}"),
            };
            s.push_str(&coeff);
            s.push_str(&power);
        }
        s
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn up(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (t-1)^2 (t+2)
        let p = up(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree_part(), up(&[-2, 1, 1]));
        assert_eq!(p.gcd(&up(&[-1, 1])), up(&[-1, 1]));
    }

    #[test]
    fn rational_roots_found() {
        // (2t - 1)(t + 3) t
        let p = up(&[0, -3, 5, 2]);
        assert_eq!(p.rational_roots(), [int(-3), int(0), frac(1, 2)]);
        assert!(up(&[-2, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn renders_descending() {
        assert_eq!(up(&[-2, 0, 1]).render("t"), "t^2 - 2");
    }
}
