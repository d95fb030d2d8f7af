//! Single-branch invariants: constants of quasiadjunction, Hodge numbers per
//! eigenvalue, higher Alexander polynomials, and the A'Campo zeta function.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ideals::IdealTriple;
use crate::polytopes::{enumerate_faces, FaceOptions};
use crate::rational::{fract, Rational};
use crate::resolution::ResolutionGraph;
use crate::{Error, Result};

/// `∏ (t - exp(2πi θ))^m` over angles `θ ∈ [0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AnglePolynomial {
    roots: BTreeMap<Rational, u64>,
}

impl AnglePolynomial {
    pub fn one() -> Self {
        AnglePolynomial::default()
    }

    pub fn from_roots(roots: impl IntoIterator<Item = (Rational, u64)>) -> Self {
        let mut p = AnglePolynomial::one();
        for (a, m) in roots {
            p.add_root(a, m);
        }
        p
    }

    fn add_root(&mut self, angle: Rational, m: u64) {
        if m > 0 {
            *self.roots.entry(fract(&angle)).or_insert(0) += m;
        }
    }

    /// `(angle, multiplicity)` in increasing angle.
    pub fn roots(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.roots.iter().map(|(a, &m)| (a, m))
    }

    pub fn multiplicity(&self, angle: &Rational) -> u64 {
        self.roots.get(&fract(angle)).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.roots.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn divides(&self, other: &AnglePolynomial) -> bool {
        self.roots.iter().all(|(a, &m)| other.multiplicity(a) >= m)
    }

    /// Closed under `θ ↦ -θ`.
    pub fn is_conjugation_symmetric(&self) -> bool {
        self.roots.iter().all(|(a, &m)| self.multiplicity(&-a.clone()) == m)
    }

    /// Integer coefficients, constant term first, when the polynomial is a
    /// product of cyclotomic polynomials.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        let mut by_order: BTreeMap<BigInt, Vec<u64>> = BTreeMap::new();
        for (a, &m) in &self.roots {
            by_order.entry(a.denom().clone()).or_default().push(m);
        }
        let mut out = vec![BigInt::one()];
        for (n, ms) in by_order {
            let n: u64 = n.try_into().ok()?;
            if ms.len() as u64 != euler_phi(n) || ms.iter().any(|&m| m != ms[0]) {
                return None;
            }
            let phi = cyclotomic(n);
            for _ in 0..ms[0] {
                out = poly_mul(&out, &phi);
            }
        }
        Some(out)
    }

    /// Descending-degree rendering such as `t^2 - t + 1`.
    pub fn render(&self, var: &str) -> Option<String> {
        let coeffs = self.integer_coefficients()?;
        let mut s = String::new();
        for (deg, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one() && deg > 0;
            if !unit {
                let _ = write!(s, "{mag}");
            }
            if deg > 0 {
                if !unit {
                    s.push('*');
                }
                s.push_str(var);
                if deg > 1 {
                    let _ = write!(s, "^{deg}");
                }
            }
        }
        Some(s)
    }
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial.
fn poly_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    q
}

fn cyclotomic(n: u64) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = poly_div_monic(&p, &cyclotomic(d));
    }
    p
}

/// Hodge data of one eigenvalue `exp(2πi κ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueHodgeDatum {
    pub kappa: Rational,
    pub h00: usize,
    pub h10: usize,
    pub h01: usize,
}

impl EigenvalueHodgeDatum {
    /// Exponent of `(t - ζ)` in `Δ_i`, `i ≥ 1`.
    pub fn exponent(&self, i: usize) -> usize {
        let (b, s) = (self.h00, self.h10 + self.h01);
        if i == 0 {
            return s + 2 * b;
        }
        if i <= b {
            s + 2 * b - 2 * (i - 1)
        } else if i <= b + s {
            s - (i - 1 - b)
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderInvariants {
    /// One entry per eigenvalue, sorted by `κ`.
    pub data: Vec<EigenvalueHodgeDatum>,
    /// `Δ_1, Δ_2, …`, ending with the first trivial one.
    pub deltas: Vec<AnglePolynomial>,
}

impl AlexanderInvariants {
    /// `Δ_i`, trivial beyond the computed range.
    pub fn delta(&self, i: usize) -> AnglePolynomial {
        assert!(i >= 1, "Alexander polynomials are indexed from 1");
        self.deltas.get(i - 1).cloned().unwrap_or_default()
    }
}

fn require_single(graph: &ResolutionGraph) -> Result<()> {
    if graph.r() != 1 {
        return Err(Error::RequiresSingleBranch { r: graph.r() });
    }
    Ok(())
}

/// Face points of a single-branch germ with their triples, ascending.
pub fn constants_of_quasiadjunction(graph: &ResolutionGraph) -> Result<Vec<(Rational, IdealTriple)>> {
    require_single(graph)?;
    let faces = enumerate_faces(graph, &FaceOptions::default())?;
    let mut out: Vec<(Rational, IdealTriple)> = faces.into_iter().map(|f| (f.sample[0].clone(), f.triple)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn dims_at(constants: &[(Rational, IdealTriple)], kappa: &Rational) -> (usize, usize) {
    constants
        .iter()
        .find(|(k, _)| k == kappa)
        .map(|(_, t)| (t.dim_dprime_prime, t.dim_prime_a))
        .unwrap_or((0, 0))
}

fn datum(constants: &[(Rational, IdealTriple)], kappa: &Rational) -> EigenvalueHodgeDatum {
    let conj = Rational::one() - kappa;
    let (h00, h10) = dims_at(constants, kappa);
    let (h00_conj, h01) = dims_at(constants, &conj);
    EigenvalueHodgeDatum {
        kappa: kappa.clone(),
        h00: h00.max(h00_conj),
        h10,
        h01,
    }
}

/// `h00 = dim 𝒜″/𝒜′`, `h10 = dim 𝒜′/𝒜` at `κ`; `h01` is `h10` at `1 - κ`.
/// `h00` is taken as the larger of its values at `κ` and `1 - κ`.
pub fn hodge_numbers(graph: &ResolutionGraph, kappa: &Rational) -> Result<EigenvalueHodgeDatum> {
    let constants = constants_of_quasiadjunction(graph)?;
    if !constants.iter().any(|(k, _)| k == kappa) {
        return Err(Error::NotAConstant { kappa: kappa.clone() });
    }
    Ok(datum(&constants, kappa))
}

/// All `Δ_i` from the Hodge numbers of every eigenvalue.
pub fn higher_alexander(graph: &ResolutionGraph) -> Result<AlexanderInvariants> {
    let constants = constants_of_quasiadjunction(graph)?;
    let mut kappas: Vec<Rational> = constants
        .iter()
        .flat_map(|(k, _)| [k.clone(), Rational::one() - k])
        .collect();
    kappas.sort();
    kappas.dedup();
    let data: Vec<EigenvalueHodgeDatum> = kappas.iter().map(|k| datum(&constants, k)).collect();
    let mut deltas = Vec::new();
    for i in 1.. {
        let d = AnglePolynomial::from_roots(data.iter().map(|h| (h.kappa.clone(), h.exponent(i) as u64)));
        debug_assert!(deltas.last().is_none_or(|prev: &AnglePolynomial| d.divides(prev)));
        let done = d.is_one();
        deltas.push(d);
        if done {
            break;
        }
    }
    Ok(AlexanderInvariants { data, deltas })
}

/// `Δ_1(t) = (t - 1) ∏_k (t^{a_k} - 1)^{-χ(E_k°)}` from the graph alone.
pub fn acampo_delta1(graph: &ResolutionGraph) -> Result<AnglePolynomial> {
    require_single(graph)?;
    let mut exps: BTreeMap<Rational, i64> = BTreeMap::new();
    *exps.entry(Rational::zero()).or_insert(0) += 1;
    for c in graph.curves() {
        let a = c.a[0] as i64;
        for j in 0..a {
            *exps.entry(Rational::new(BigInt::from(j), BigInt::from(a))).or_insert(0) -= c.open_euler;
        }
    }
    let mut p = AnglePolynomial::one();
    for (angle, e) in exps {
        if e < 0 {
            return Err(Error::NonPolynomialZeta);
        }
        p.add_root(angle, e as u64);
    }
    Ok(p)
}
