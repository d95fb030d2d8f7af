//! Valuation ideals, the ideal triple (𝒜, 𝒜′, 𝒜″) at a point of the cube,
//! multiplier ideals, and the pole order of forms on abelian covers.
//!
//! Every ideal here is cut out by conditions `ord_{E_k} φ ≥ α_k` with
//! `α_k ≤ N - 1`. Each exceptional valuation is at least 1 on the maximal
//! ideal, hence at least `N` on `m^N`, so `m^N` lies in the ideal and the
//! ideal is determined by its image in `O / m^N`. All quotient dimensions
//! are therefore computed exactly in the jet space of order `N`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::jet::{quotient_dim, subspace_from_conditions, subspace_sum, JetSpace, JetSubspace};
use crate::rational::{ceil, int, Rational};
use crate::resolution::{conditions_for_chart, ResolutionGraph};
use crate::{Error, Result};

/// Lower bounds `α_k`, one per exceptional curve (by position).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThresholdVector(pub Vec<u32>);

impl ThresholdVector {
    pub fn largest(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

/// `I(α)` in `JetSpace(1 + max α)`.
pub fn valuation_ideal(graph: &ResolutionGraph, alpha: &ThresholdVector) -> Result<JetSubspace> {
    valuation_ideal_in(graph, alpha, alpha.largest() + 1)
}

/// `I(α)` in `JetSpace(n)`, `n > max α`.
pub fn valuation_ideal_in(graph: &ResolutionGraph, alpha: &ThresholdVector, n: u32) -> Result<JetSubspace> {
    check_thresholds(graph, alpha, n)?;
    let mut rows = Vec::new();
    for (curve, &a) in graph.curves().iter().zip(&alpha.0) {
        if a > 0 {
            rows.extend(conditions_for_chart(
                curve.chart.as_ref().ok_or(Error::ChartsUnavailable)?,
                a,
                n,
            ));
        }
    }
    subspace_from_conditions(JetSpace::new(n), &rows)
}

fn check_thresholds(graph: &ResolutionGraph, alpha: &ThresholdVector, n: u32) -> Result<()> {
    if !graph.has_charts() {
        return Err(Error::ChartsUnavailable);
    }
    if alpha.0.len() != graph.curves().len() {
        return Err(Error::WrongArity {
            expected: graph.curves().len(),
            found: alpha.0.len(),
        });
    }
    if n <= alpha.largest() {
        return Err(Error::TruncationTooSmall {
            alpha: alpha.largest(),
            n,
        });
    }
    Ok(())
}

/// `min_{φ ∈ B} ord_{E_k} φ`, found as the first order layer that `B`
/// is not contained in.
pub fn e_min(b: &JetSubspace, graph: &ResolutionGraph, k: usize) -> Result<u32> {
    if b.dim() == 0 {
        return Err(Error::ZeroSubspace);
    }
    let chart = graph.curve(k)?.chart.as_ref().ok_or(Error::ChartsUnavailable)?;
    let n = b.space().order();
    let mut alpha = 1;
    loop {
        let layer = subspace_from_conditions(b.space(), &conditions_for_chart(chart, alpha, n))?;
        if !layer.contains(b)? {
            return Ok(alpha - 1);
        }
        alpha += 1;
    }
}

/// The bound `B_k(ξ) = Σ_i a_{k,i} (1 - ξ_i) - c_k - 1` for every curve.
pub fn bounds_at(graph: &ResolutionGraph, xi: &[Rational]) -> Vec<Rational> {
    graph
        .curves()
        .iter()
        .map(|c| {
            let s: Rational =
                c.a.iter()
                    .zip(xi)
                    .map(|(&a, x)| int(a as i64) * (Rational::one() - x))
                    .sum();
            s - int(c.c as i64 + 1)
        })
        .collect()
}

/// Thresholds that determine the triple at a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleSignature {
    /// Thresholds of 𝒜 (strict inequalities).
    pub strict: ThresholdVector,
    /// Thresholds of 𝒜″ (equality allowed).
    pub weak: ThresholdVector,
}

impl TripleSignature {
    pub fn from_bounds(bounds: &[Rational]) -> Self {
        let mut strict = Vec::with_capacity(bounds.len());
        let mut weak = Vec::with_capacity(bounds.len());
        for b in bounds {
            let up = clamp(&ceil(b));
            weak.push(up);
            strict.push(if b.is_integer() {
                clamp(&(b.to_integer() + 1))
            } else {
                up
            });
        }
        TripleSignature {
            strict: ThresholdVector(strict),
            weak: ThresholdVector(weak),
        }
    }

    /// Curves where a pole of order one is possible.
    pub fn s_prime(&self) -> Vec<usize> {
        (0..self.strict.0.len())
            .filter(|&k| self.strict.0[k] != self.weak.0[k])
            .collect()
    }

    pub fn order(&self) -> u32 {
        self.strict.largest() + 1
    }
}

fn clamp(b: &BigInt) -> u32 {
    if b.is_negative() {
        0
    } else {
        b.to_u32().expect("threshold fits in u32")
    }
}

/// 𝒜 ⊆ 𝒜′ ⊆ 𝒜″ at a point, with their quotient dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealTriple {
    pub point: Vec<Rational>,
    pub signature: TripleSignature,
    pub a: JetSubspace,
    pub a_prime: JetSubspace,
    pub a_dprime: JetSubspace,
    /// `dim 𝒜″/𝒜′`
    pub dim_dprime_prime: usize,
    /// `dim 𝒜′/𝒜`
    pub dim_prime_a: usize,
    /// `dim 𝒜″/𝒜`
    pub dim_dprime_a: usize,
}

impl IdealTriple {
    /// Equality of the three ideals, comparing over a common truncation.
    pub fn same_ideals(&self, other: &IdealTriple) -> bool {
        let n = self.a.space().order().max(other.a.space().order());
        let lift = |t: &IdealTriple| -> [JetSubspace; 3] {
            [&t.a, &t.a_prime, &t.a_dprime].map(|s| s.extend_ideal(n).expect("order only grows"))
        };
        self.dims() == other.dims() && lift(self) == lift(other)
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.dim_dprime_prime, self.dim_prime_a, self.dim_dprime_a)
    }

    /// Nonzero jump: the point lies on a face of quasiadjunction.
    pub fn is_jump(&self) -> bool {
        self.dim_dprime_a > 0
    }

    pub fn is_weight_one(&self) -> bool {
        self.dim_dprime_prime > 0
    }
}

fn check_point(graph: &ResolutionGraph, xi: &[Rational]) -> Result<()> {
    if xi.len() != graph.r() {
        return Err(Error::WrongArity {
            expected: graph.r(),
            found: xi.len(),
        });
    }
    for x in xi {
        if !x.is_positive() || *x > Rational::one() {
            return Err(Error::PointOutsideCube { coordinate: x.clone() });
        }
    }
    if !graph.has_charts() {
        return Err(Error::ChartsUnavailable);
    }
    Ok(())
}

/// Triple at `ξ ∈ (0, 1]^r`.
pub fn ideal_triple_at(graph: &ResolutionGraph, xi: &[Rational]) -> Result<IdealTriple> {
    TripleEvaluator::new(graph).triple_at(xi)
}

/// Triple at `ξ` computed in a jet space `extra` orders larger than needed.
pub fn ideal_triple_with_slack(graph: &ResolutionGraph, xi: &[Rational], extra: u32) -> Result<IdealTriple> {
    let mut ev = TripleEvaluator::new(graph);
    ev.slack = extra;
    ev.triple_at(xi)
}

/// Memoizing evaluator: triples depend on `ξ` only through the signature.
pub struct TripleEvaluator<'g> {
    graph: &'g ResolutionGraph,
    slack: u32,
    adjacency: Vec<Vec<bool>>,
    ideals: BTreeMap<(ThresholdVector, u32), JetSubspace>,
    triples: BTreeMap<TripleSignature, IdealTriple>,
}

impl<'g> TripleEvaluator<'g> {
    pub fn new(graph: &'g ResolutionGraph) -> Self {
        TripleEvaluator {
            graph,
            slack: 0,
            adjacency: graph.adjacency_matrix(),
            ideals: BTreeMap::new(),
            triples: BTreeMap::new(),
        }
    }

    pub fn graph(&self) -> &'g ResolutionGraph {
        self.graph
    }

    pub fn triple_at(&mut self, xi: &[Rational]) -> Result<IdealTriple> {
        check_point(self.graph, xi)?;
        let sig = TripleSignature::from_bounds(&bounds_at(self.graph, xi));
        let mut t = self.triple_for(&sig)?;
        t.point = xi.to_vec();
        Ok(t)
    }

    /// Quotient dimensions only, without the point check on `ξ`'s range
    /// beyond positivity of the bound computation.
    pub fn dims_for_signature(&mut self, sig: &TripleSignature) -> Result<(usize, usize, usize)> {
        Ok(self.triple_for(sig)?.dims())
    }

    fn ideal(&mut self, alpha: ThresholdVector, n: u32) -> Result<JetSubspace> {
        let key = (alpha, n);
        if let Some(i) = self.ideals.get(&key) {
            return Ok(i.clone());
        }
        let i = valuation_ideal_in(self.graph, &key.0, n)?;
        self.ideals.insert(key, i.clone());
        Ok(i)
    }

    pub fn triple_for(&mut self, sig: &TripleSignature) -> Result<IdealTriple> {
        if let Some(t) = self.triples.get(sig) {
            return Ok(t.clone());
        }
        if !self.graph.has_charts() {
            return Err(Error::ChartsUnavailable);
        }
        let n = sig.order() + self.slack;
        let a = self.ideal(sig.strict.clone(), n)?;
        let a_dprime = self.ideal(sig.weak.clone(), n)?;
        let s_prime = sig.s_prime();
        let mut parts = Vec::new();
        for t in maximal_independent_sets(&s_prime, &self.adjacency) {
            let mut alpha = sig.strict.0.clone();
            for &k in &t {
                alpha[k] = sig.weak.0[k];
            }
            parts.push(self.ideal(ThresholdVector(alpha), n)?);
        }
        let a_prime = if parts.is_empty() {
            a.clone()
        } else {
            subspace_sum(&parts)?
        };
        let dim_dprime_prime = quotient_dim(&a_dprime, &a_prime)?;
        let dim_prime_a = quotient_dim(&a_prime, &a)?;
        let triple = IdealTriple {
            point: Vec::new(),
            signature: sig.clone(),
            dim_dprime_a: dim_dprime_prime + dim_prime_a,
            dim_dprime_prime,
            dim_prime_a,
            a,
            a_prime,
            a_dprime,
        };
        self.triples.insert(sig.clone(), triple.clone());
        Ok(triple)
    }
}

/// Maximal subsets of `nodes` with no two members adjacent.
fn maximal_independent_sets(nodes: &[usize], adjacency: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_independent(nodes, adjacency, 0, &mut current, &mut out);
    out
}

fn extend_independent(
    nodes: &[usize],
    adj: &[Vec<bool>],
    i: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == nodes.len() {
        let maximal = nodes
            .iter()
            .all(|&n| current.contains(&n) || current.iter().any(|&c| adj[c][n]));
        if maximal {
            out.push(current.clone());
        }
        return;
    }
    let n = nodes[i];
    if current.iter().all(|&c| !adj[c][n]) {
        current.push(n);
        extend_independent(nodes, adj, i + 1, current, out);
        current.pop();
    }
    extend_independent(nodes, adj, i + 1, current, out);
}

/// Multiplier ideal of `Σ γ_i {f_i = 0}`: thresholds
/// `max(0, ⌊Σ_i a_{k,i} γ_i⌋ - c_k)`.
pub fn multiplier_ideal(graph: &ResolutionGraph, gamma: &[Rational]) -> Result<JetSubspace> {
    if gamma.len() != graph.r() {
        return Err(Error::WrongArity {
            expected: graph.r(),
            found: gamma.len(),
        });
    }
    if let Some(g) = gamma.iter().find(|g| g.is_negative()) {
        return Err(Error::NegativeCoefficient { value: g.clone() });
    }
    let alpha = graph
        .curves()
        .iter()
        .map(|c| {
            let s: Rational = c.a.iter().zip(gamma).map(|(&a, g)| int(a as i64) * g).sum();
            clamp(&(s.floor().to_integer() - BigInt::from(c.c)))
        })
        .collect();
    valuation_ideal(graph, &ThresholdVector(alpha))
}

/// Order of vanishing of `ω_φ` along a component over `E_k` on the cover
/// of type `(m_1, …, m_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PullbackOrderDatum {
    pub k: usize,
    pub j: Vec<u64>,
    pub m: Vec<u64>,
    pub e_phi: u64,
    /// `g_{k,i} = gcd(m_i, a_{k,i})`
    pub g: Vec<u64>,
    /// `s_k = gcd_i (m_i / g_{k,i})`
    pub s: u64,
    /// Ramification index of the cover along `E_k`: `lcm_i (m_i / g_{k,i})`.
    pub ramification: u64,
    /// `ramification · D - 1` with
    /// `D = Σ_i (j_i + 1 - m_i) a_{k,i} / m_i + e_φ + c_k + 1`.
    pub value: BigInt,
    /// The same numerator divided by `g_{k,1} ⋯ g_{k,r} · s_k` instead of
    /// the ramification index; agrees with `value` when `r = 2`.
    pub normalized_by_gcds: Rational,
}

pub fn pullback_order_on_cover(
    graph: &ResolutionGraph,
    k: usize,
    j: &[u64],
    m: &[u64],
    e_phi: u64,
) -> Result<PullbackOrderDatum> {
    let curve = graph.curve(k)?;
    let r = graph.r();
    if j.len() != r || m.len() != r {
        return Err(Error::InvalidCoverArray {
            reason: alloc::format!("expected {r} entries in j and m"),
        });
    }
    for (&ji, &mi) in j.iter().zip(m) {
        if mi == 0 || ji >= mi {
            return Err(Error::InvalidCoverArray {
                reason: alloc::format!("need 0 <= j < m, got j = {ji}, m = {mi}"),
            });
        }
    }
    let g: Vec<u64> = m.iter().zip(&curve.a).map(|(&mi, &ai)| mi.gcd(&ai)).collect();
    let ratios: Vec<u64> = m.iter().zip(&g).map(|(&mi, &gi)| mi / gi).collect();
    let s = ratios.iter().fold(0u64, |acc, &q| acc.gcd(&q));
    let ramification = ratios.iter().fold(1u64, |acc, &q| acc.lcm(&q));

    let big_m: BigInt = m.iter().map(|&x| BigInt::from(x)).product();
    let mut numerator = BigInt::zero();
    for i in 0..r {
        let others = &big_m / BigInt::from(m[i]);
        numerator += (BigInt::from(j[i]) + 1 - BigInt::from(m[i])) * others * BigInt::from(curve.a[i]);
    }
    numerator += &big_m * BigInt::from(e_phi + curve.c + 1);
    // numerator = M · D
    let d = Rational::new(numerator.clone(), big_m.clone());
    let scaled = d * int(ramification as i64);
    debug_assert!(scaled.is_integer());
    let value = scaled.to_integer() - 1;
    let gcd_denominator = BigInt::from(g.iter().product::<u64>() * s);
    let normalized_by_gcds = Rational::new(numerator, gcd_denominator) - Rational::one();
    Ok(PullbackOrderDatum {
        k,
        j: j.to_vec(),
        m: m.to_vec(),
        e_phi,
        g,
        s,
        ramification,
        value,
        normalized_by_gcds,
    })
}

/// `vec![0; n]` as thresholds.
pub fn zero_thresholds(graph: &ResolutionGraph) -> ThresholdVector {
    ThresholdVector(vec![0; graph.curves().len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::PlaneCurveGerm;
    use crate::parse::parse_polynomial;
    use crate::rational::frac;
    use crate::resolution::{resolve_germ, ResolutionOptions};

    fn resolve(bs: &[&str]) -> ResolutionGraph {
        let germ = PlaneCurveGerm::new(bs.iter().map(|s| parse_polynomial(s).unwrap()).collect()).unwrap();
        resolve_germ(&germ, &ResolutionOptions::default()).unwrap()
    }

    fn poly(s: &str) -> crate::poly::BivariatePolynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn zero_thresholds_give_full_ring() {
        let g = resolve(&["x^2+y^3"]);
        let i = valuation_ideal(&g, &zero_thresholds(&g)).unwrap();
        assert_eq!(i, JetSubspace::full(JetSpace::new(1)));
    }

    #[test]
    fn cusp_maximal_ideal() {
        let g = resolve(&["x^2+y^3"]);
        let m = valuation_ideal(&g, &ThresholdVector(vec![0, 0, 1])).unwrap();
        assert_eq!(m.codim(), 1);
        assert!(!m.contains_polynomial(&poly("1")));
        assert_eq!(e_min(&m, &g, 3).unwrap(), 2);
        assert_eq!(e_min(&JetSubspace::full(JetSpace::new(3)), &g, 3).unwrap(), 0);
    }

    #[test]
    fn cusp_multiplier_at_five_sixths() {
        let g = resolve(&["x^2+y^3"]);
        let j = multiplier_ideal(&g, &[frac(5, 6)]).unwrap();
        assert_eq!(j.codim(), 1);
        assert!(j.contains_polynomial(&poly("x")) && j.contains_polynomial(&poly("y")));
        assert!(matches!(
            multiplier_ideal(&g, &[frac(-1, 2)]),
            Err(Error::NegativeCoefficient { .. })
        ));
    }

    #[test]
    fn node_triple_is_trivial() {
        let g = resolve(&["x", "y"]);
        let t = ideal_triple_at(&g, &[frac(1, 3), frac(1, 2)]).unwrap();
        assert_eq!(t.dims(), (0, 0, 0));
        assert_eq!(t.a_dprime, JetSubspace::full(t.a.space()));
        assert!(ideal_triple_at(&g, &[frac(0, 1), frac(1, 2)]).is_err());
    }

    #[test]
    fn independent_sets_are_maximal() {
        let adj = vec![
            vec![false, true, false],
            vec![true, false, true],
            vec![false, true, false],
        ];
        let sets = maximal_independent_sets(&[0, 1, 2], &adj);
        assert_eq!(sets, [vec![0, 2], vec![1]]);
        assert_eq!(maximal_independent_sets(&[], &adj), [Vec::<usize>::new()]);
    }

    #[test]
    fn degenerate_cover_is_identity() {
        let g = resolve(&["x^2+y^3"]);
        for k in 1..=3 {
            let d = pullback_order_on_cover(&g, k, &[0], &[1], 2).unwrap();
            assert_eq!(d.value, BigInt::from(2 + g.curve(k).unwrap().c));
        }
        assert!(pullback_order_on_cover(&g, 1, &[1], &[1], 0).is_err());
    }
}
