//! Characteristic varieties: translated subtori from faces, depths, and
//! Hodge multiplicities of finite-order characters.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arrangement::{CellComplex, Hyperplane};
use crate::ideals::{bounds_at, TripleEvaluator, TripleSignature};
use crate::lattice::integer_kernel;
use crate::polytopes::{candidate_hyperplanes, reflect, reflect_hyperplane, FaceOptions, QAFace};
use crate::rational::{fract, Rational};
use crate::resolution::ResolutionGraph;
use crate::{Error, Result};

pub const DEFAULT_Q_LIMIT: u32 = 60;

/// `χ(γ_i) = exp(2πi q_i)` with `q_i ∈ [0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterOfFiniteOrder {
    angles: Vec<Rational>,
}

impl CharacterOfFiniteOrder {
    pub fn new(angles: Vec<Rational>) -> Result<Self> {
        for q in &angles {
            if q.is_negative() || *q >= Rational::one() {
                return Err(Error::InvalidCharacter { angle: q.clone() });
            }
        }
        Ok(CharacterOfFiniteOrder { angles })
    }

    /// The character `exp(2πi ξ)`.
    pub fn from_point(xi: &[Rational]) -> Self {
        CharacterOfFiniteOrder {
            angles: xi.iter().map(fract).collect(),
        }
    }

    pub fn angles(&self) -> &[Rational] {
        &self.angles
    }

    pub fn order(&self) -> BigInt {
        self.angles.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()))
    }

    /// Nontrivial on every meridian.
    pub fn is_essential(&self) -> bool {
        self.angles.iter().all(|q| !q.is_zero())
    }

    /// Representative in `(0, 1]^r`.
    pub fn point(&self) -> Vec<Rational> {
        self.angles
            .iter()
            .map(|q| if q.is_zero() { Rational::one() } else { q.clone() })
            .collect()
    }

    pub fn conjugate(&self) -> Self {
        CharacterOfFiniteOrder::from_point(&reflect(&self.angles))
    }
}

/// `t^exponents = exp(2πi angle)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubtorusEquation {
    pub exponents: Vec<BigInt>,
    pub angle: Rational,
}

/// A connected translated subtorus with a saturated equation lattice in
/// Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatedSubtorusComponent {
    pub equations: Vec<SubtorusEquation>,
    pub dimension: usize,
    pub depth: usize,
    pub essential: bool,
    /// Sample points of the cells that generate the component.
    pub source_points: Vec<Vec<Rational>>,
}

impl TranslatedSubtorusComponent {
    /// Whether the character lies on the subtorus.
    pub fn contains_character(&self, chi: &CharacterOfFiniteOrder) -> bool {
        self.equations.iter().all(|eq| {
            let s: Rational = eq
                .exponents
                .iter()
                .zip(chi.angles())
                .map(|(a, q)| Rational::from_integer(a.clone()) * q)
                .sum();
            (s - &eq.angle).is_integer()
        })
    }
}

/// The closed subtorus through `exp(2πi x0)` whose tangent directions are
/// those of the affine span `{h = 0 : h ∈ equalities}`.
fn subtorus_through(equalities: &[Hyperplane], x0: &[Rational]) -> Vec<SubtorusEquation> {
    let r = x0.len();
    let rows: Vec<Vec<BigInt>> = equalities.iter().map(|h| h.integer_normal()).collect();
    let directions = if rows.is_empty() {
        integer_kernel(&[], r)
    } else {
        integer_kernel(&rows, r)
    };
    let lattice = if directions.is_empty() {
        integer_kernel(&[], r)
    } else {
        integer_kernel(&directions, r)
    };
    lattice
        .into_iter()
        .map(|v| {
            let s: Rational = v
                .iter()
                .zip(x0)
                .map(|(a, x)| Rational::from_integer(a.clone()) * x)
                .sum();
            SubtorusEquation {
                exponents: v,
                angle: fract(&s),
            }
        })
        .collect()
}

/// Writes `v` in the HNF basis of `eqs`, returning the implied angle.
fn implied_angle(eqs: &[SubtorusEquation], v: &[BigInt]) -> Option<Rational> {
    let mut rest: Vec<BigInt> = v.to_vec();
    let mut angle = Rational::zero();
    for eq in eqs {
        let p = eq.exponents.iter().position(|x| !x.is_zero())?;
        let (q, rem) = rest[p].div_rem(&eq.exponents[p]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (x, e) in rest.iter_mut().zip(&eq.exponents) {
                *x -= &q * e;
            }
            angle += Rational::from_integer(q) * &eq.angle;
        }
    }
    if rest.iter().all(|x| x.is_zero()) {
        Some(angle)
    } else {
        None
    }
}

/// `small ⊆ big` as point sets.
fn subtorus_contained(small: &[SubtorusEquation], big: &[SubtorusEquation]) -> bool {
    big.iter()
        .all(|eq| implied_angle(small, &eq.exponents).is_some_and(|a| (a - &eq.angle).is_integer()))
}

fn is_essential_equations(eqs: &[SubtorusEquation], r: usize) -> bool {
    (0..r).all(|alpha| {
        let mut e = vec![BigInt::zero(); r];
        e[alpha] = BigInt::one();
        !implied_angle(eqs, &e).is_some_and(|a| a.is_integer())
    })
}

fn component(equations: Vec<SubtorusEquation>, r: usize) -> TranslatedSubtorusComponent {
    TranslatedSubtorusComponent {
        dimension: r - equations.len(),
        essential: is_essential_equations(&equations, r),
        equations,
        depth: 0,
        source_points: Vec::new(),
    }
}

/// False iff the component lies in some `{t_α = 1}`.
pub fn essential_filter(component: &TranslatedSubtorusComponent) -> bool {
    let r = component.dimension + component.equations.len();
    is_essential_equations(&component.equations, r)
}

/// Closure of the image of the face under `x ↦ exp(2πi x)`; depth is left 0.
pub fn exp_closure(face: &QAFace) -> TranslatedSubtorusComponent {
    let mut c = component(subtorus_through(&face.equalities, &face.sample), face.sample.len());
    c.source_points.push(face.sample.clone());
    c
}

/// Reflection of a face under `x ↦ 𝟙 - x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateFace {
    pub vertices: Vec<Vec<Rational>>,
    pub sample: Vec<Rational>,
    /// Index of an enumerated face whose closure contains the reflection.
    pub matches: Option<usize>,
}

pub fn conjugate_face(face: &QAFace, faces: &[QAFace]) -> ConjugateFace {
    let mut vertices: Vec<Vec<Rational>> = face.vertices.iter().map(|v| reflect(v)).collect();
    vertices.sort();
    let sample = reflect(&face.sample);
    let matches = (0..faces.len())
        .filter(|&i| faces[i].contains(&sample) && vertices.iter().all(|v| faces[i].contains(v)))
        .min_by_key(|&i| faces[i].dimension);
    ConjugateFace {
        vertices,
        sample,
        matches,
    }
}

/// Pointwise depth data at `ξ ∈ (0, 1]^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthTerms {
    /// `dim 𝒜′/𝒜` at `ξ`
    pub h10: usize,
    /// `dim 𝒜′/𝒜` at the conjugate point
    pub h10_conjugate: usize,
    /// `dim 𝒜″/𝒜′` at `ξ`
    pub h00: usize,
}

impl DepthTerms {
    pub fn total(&self) -> usize {
        self.h10 + self.h10_conjugate + self.h00
    }
}

/// Conjugate representative in `(0, 1]^r`.
fn conjugate_point(xi: &[Rational]) -> Vec<Rational> {
    xi.iter()
        .map(|x| if x.is_one() { x.clone() } else { Rational::one() - x })
        .collect()
}

struct DepthEvaluator<'g> {
    ev: TripleEvaluator<'g>,
    dims: BTreeMap<TripleSignature, (usize, usize)>,
}

impl<'g> DepthEvaluator<'g> {
    fn new(graph: &'g ResolutionGraph) -> Self {
        DepthEvaluator {
            ev: TripleEvaluator::new(graph),
            dims: BTreeMap::new(),
        }
    }

    /// (`dim 𝒜″/𝒜′`, `dim 𝒜′/𝒜`)
    fn dims(&mut self, xi: &[Rational]) -> Result<(usize, usize)> {
        let sig = TripleSignature::from_bounds(&bounds_at(self.ev.graph(), xi));
        if let Some(&d) = self.dims.get(&sig) {
            return Ok(d);
        }
        let (pp, pa, _) = self.ev.dims_for_signature(&sig)?;
        self.dims.insert(sig, (pp, pa));
        Ok((pp, pa))
    }

    fn terms(&mut self, xi: &[Rational]) -> Result<DepthTerms> {
        let (h00, h10) = self.dims(xi)?;
        let (_, h10_conjugate) = self.dims(&conjugate_point(xi))?;
        Ok(DepthTerms {
            h10,
            h10_conjugate,
            h00,
        })
    }
}

/// Depth terms at a point of `(0, 1]^r`.
pub fn depth_terms(graph: &ResolutionGraph, xi: &[Rational]) -> Result<DepthTerms> {
    if !graph.has_charts() {
        return Err(Error::ChartsUnavailable);
    }
    for x in xi {
        if !x.is_positive() || *x > Rational::one() {
            return Err(Error::PointOutsideCube { coordinate: x.clone() });
        }
    }
    DepthEvaluator::new(graph).terms(xi)
}

/// Candidate hyperplanes together with their reflections.
fn refined_hyperplanes(graph: &ResolutionGraph) -> Vec<Hyperplane> {
    let mut hs: Vec<Hyperplane> = Vec::new();
    for h in candidate_hyperplanes(graph) {
        let h = h.hyperplane();
        hs.push(reflect_hyperplane(&h).canonical());
        hs.push(h.canonical());
    }
    hs.sort();
    hs.dedup();
    hs
}

struct DepthCell {
    equations: Vec<SubtorusEquation>,
    total: usize,
    sample: Vec<Rational>,
}

fn depth_cells(graph: &ResolutionGraph, options: &FaceOptions) -> Result<(usize, Vec<DepthCell>)> {
    if graph.r() > options.r_limit {
        return Err(Error::RLimitExceeded {
            r: graph.r(),
            limit: options.r_limit,
        });
    }
    if !graph.has_charts() {
        return Err(Error::ChartsUnavailable);
    }
    let r = graph.r();
    let cx = CellComplex::build(&refined_hyperplanes(graph), r);
    let mut de = DepthEvaluator::new(graph);
    let mut out = Vec::new();
    for cell in 0..cx.cells.len() {
        let xi = cx.centroid(cell);
        if xi.iter().any(|x| x.is_zero()) {
            continue;
        }
        let total = de.terms(&xi)?.total();
        if total > 0 {
            out.push(DepthCell {
                equations: subtorus_through(&cx.cells[cell].equalities, &xi),
                total,
                sample: xi,
            });
        }
    }
    Ok((r, out))
}

/// Maximal subtori among cells of total depth at least `d`.
fn maximal_at(cells: &[DepthCell], d: usize) -> Vec<(Vec<SubtorusEquation>, Vec<Vec<Rational>>)> {
    let mut tori: BTreeMap<Vec<SubtorusEquation>, Vec<Vec<Rational>>> = BTreeMap::new();
    for c in cells.iter().filter(|c| c.total >= d) {
        tori.entry(c.equations.clone()).or_default().push(c.sample.clone());
    }
    let keys: Vec<Vec<SubtorusEquation>> = tori.keys().cloned().collect();
    let mut out = Vec::new();
    for k in &keys {
        let dominated = keys.iter().any(|o| o != k && subtorus_contained(k, o));
        if !dominated {
            out.push((k.clone(), tori[k].clone()));
        }
    }
    out
}

fn assemble_from(r: usize, cells: &[DepthCell], d: usize) -> Vec<TranslatedSubtorusComponent> {
    let top = cells.iter().map(|c| c.total).max().unwrap_or(0);
    let levels: Vec<Vec<Vec<SubtorusEquation>>> = (0..=top)
        .map(|l| {
            if l < d {
                Vec::new()
            } else {
                maximal_at(cells, l).into_iter().map(|(e, _)| e).collect()
            }
        })
        .collect();
    let mut out: Vec<TranslatedSubtorusComponent> = maximal_at(cells, d)
        .into_iter()
        .map(|(eqs, mut sources)| {
            let depth = (d..=top).rev().find(|&l| levels[l].contains(&eqs)).unwrap_or(d);
            sources.sort();
            sources.dedup();
            let mut c = component(eqs, r);
            c.depth = depth;
            c.source_points = sources;
            c
        })
        .collect();
    out.sort_by(|a, b| a.equations.cmp(&b.equations));
    out
}

/// Components of the first characteristic variety; each depth is the
/// largest `d` for which the component is still a component of `V_d`.
pub fn assemble_components(graph: &ResolutionGraph, options: &FaceOptions) -> Result<Vec<TranslatedSubtorusComponent>> {
    let (r, cells) = depth_cells(graph, options)?;
    Ok(assemble_from(r, &cells, 1))
}

/// Components of `V_d`.
pub fn components_of_depth(
    graph: &ResolutionGraph,
    d: usize,
    options: &FaceOptions,
) -> Result<Vec<TranslatedSubtorusComponent>> {
    let (r, cells) = depth_cells(graph, options)?;
    Ok(assemble_from(r, &cells, d.max(1)))
}

/// Reduced fractions `p/n` in `(0, 1)` with `n ≤ q`.
fn open_fractions(q: u32) -> Vec<Rational> {
    let mut out = Vec::new();
    for n in 2..=q as i64 {
        for p in 1..n {
            if p.gcd(&n) == 1 {
                out.push(Rational::new(BigInt::from(p), BigInt::from(n)));
            }
        }
    }
    out.sort();
    out
}

/// Essential characters with denominators at most `q_bound` whose total
/// depth is at least `d` (`d = 0` is treated as 1).
pub fn characters_of_depth(graph: &ResolutionGraph, d: usize, q_bound: u32) -> Result<Vec<CharacterOfFiniteOrder>> {
    characters_of_depth_with_limit(graph, d, q_bound, DEFAULT_Q_LIMIT)
}

pub fn characters_of_depth_with_limit(
    graph: &ResolutionGraph,
    d: usize,
    q_bound: u32,
    q_limit: u32,
) -> Result<Vec<CharacterOfFiniteOrder>> {
    if q_bound > q_limit {
        return Err(Error::DenominatorBoundExceeded {
            q: q_bound,
            limit: q_limit,
        });
    }
    if !graph.has_charts() {
        return Err(Error::ChartsUnavailable);
    }
    let d = d.max(1);
    let r = graph.r();
    let fractions = open_fractions(q_bound);
    let qb = BigInt::from(q_bound);
    let mut points: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for h in refined_hyperplanes(graph) {
        let solve = h.normal.iter().rposition(|a| !a.is_zero()).expect("nonzero normal");
        let free: Vec<usize> = (0..r).filter(|&i| i != solve).collect();
        let mut idx = vec![0usize; free.len()];
        if fractions.is_empty() {
            break;
        }
        loop {
            let mut x = vec![Rational::zero(); r];
            let mut s = h.offset.clone();
            for (j, &i) in free.iter().enumerate() {
                x[i] = fractions[idx[j]].clone();
                s -= &h.normal[i] * &x[i];
            }
            let xs = s / &h.normal[solve];
            if xs.is_positive() && xs < Rational::one() && *xs.denom() <= qb {
                x[solve] = xs;
                points.insert(x);
            }
            // odometer over the free coordinates
            let mut j = 0;
            while j < idx.len() {
                idx[j] += 1;
                if idx[j] < fractions.len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == idx.len() {
                break;
            }
        }
    }
    let mut de = DepthEvaluator::new(graph);
    let mut out = Vec::new();
    for x in points {
        if de.terms(&x)?.total() >= d {
            out.push(CharacterOfFiniteOrder::from_point(&x));
        }
    }
    Ok(out)
}

/// Multiplicities of a character on the Hodge pieces of a finite cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeMultiplicityReport {
    pub character: CharacterOfFiniteOrder,
    pub cover: Vec<u64>,
    pub essential: bool,
    /// `None` when the character is not essential.
    pub mult_f1: Option<usize>,
    pub mult_w0: Option<usize>,
    /// The point `ξ(χ)` lies on a face of quasiadjunction.
    pub on_face: bool,
}

pub fn character_multiplicity(
    graph: &ResolutionGraph,
    chi: &CharacterOfFiniteOrder,
    cover: &[u64],
) -> Result<HodgeMultiplicityReport> {
    if cover.len() != graph.r() || chi.angles().len() != graph.r() {
        return Err(Error::WrongArity {
            expected: graph.r(),
            found: if cover.len() != graph.r() {
                cover.len()
            } else {
                chi.angles().len()
            },
        });
    }
    if cover.contains(&0) {
        return Err(Error::InvalidCoverArray {
            reason: "cover degrees must be positive".into(),
        });
    }
    for (q, &m) in chi.angles().iter().zip(cover) {
        let den = q.denom().to_u64().unwrap_or(u64::MAX);
        if m % den != 0 {
            return Err(Error::CharacterDoesNotFactor { denominator: den, m });
        }
    }
    if !chi.is_essential() {
        return Ok(HodgeMultiplicityReport {
            character: chi.clone(),
            cover: cover.to_vec(),
            essential: false,
            mult_f1: None,
            mult_w0: None,
            on_face: false,
        });
    }
    let t = crate::ideals::ideal_triple_at(graph, &chi.point())?;
    Ok(HodgeMultiplicityReport {
        character: chi.clone(),
        cover: cover.to_vec(),
        essential: true,
        mult_f1: Some(t.dim_dprime_a),
        mult_w0: Some(t.dim_dprime_prime),
        on_face: t.is_jump(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn eq(a: &[i64], angle: Rational) -> SubtorusEquation {
        SubtorusEquation {
            exponents: a.iter().map(|&x| BigInt::from(x)).collect(),
            angle,
        }
    }

    #[test]
    fn line_maps_to_translated_subtorus() {
        let h = Hyperplane::from_integers(&[10, 4], int(7));
        let eqs = subtorus_through(&[h], &[frac(1, 2), frac(1, 2)]);
        assert_eq!(eqs, [eq(&[5, 2], frac(1, 2))]);
    }

    #[test]
    fn integer_offset_gives_subgroup() {
        let h = Hyperplane::from_integers(&[1, 1, 1], int(2));
        let eqs = subtorus_through(&[h], &[frac(1, 2), frac(1, 2), int(1)]);
        assert_eq!(eqs, [eq(&[1, 1, 1], int(0))]);
    }

    #[test]
    fn essential_checks() {
        let c = component(vec![eq(&[1, 0], int(0)), eq(&[0, 5], frac(1, 2))], 2);
        assert!(!c.essential);
        assert!(component(Vec::new(), 2).essential);
        assert!(component(vec![eq(&[5, 2], frac(1, 2))], 2).essential);
    }

    #[test]
    fn containment_of_point_in_line() {
        let line = vec![eq(&[5, 2], frac(1, 2))];
        let point = vec![eq(&[1, 0], frac(1, 2)), eq(&[0, 1], frac(1, 2))];
        assert!(subtorus_contained(&point, &line));
        assert!(!subtorus_contained(&line, &point));
        let other = vec![eq(&[1, 0], frac(1, 3)), eq(&[0, 1], frac(1, 2))];
        assert!(!subtorus_contained(&other, &line));
    }

    #[test]
    fn characters() {
        let chi = CharacterOfFiniteOrder::new(vec![frac(1, 2), int(0)]).unwrap();
        assert_eq!(chi.point(), [frac(1, 2), int(1)]);
        assert!(!chi.is_essential());
        assert_eq!(chi.order(), BigInt::from(2));
        assert!(CharacterOfFiniteOrder::new(vec![int(1)]).is_err());
        let c = CharacterOfFiniteOrder::new(vec![frac(1, 6)]).unwrap().conjugate();
        assert_eq!(c.angles(), [frac(5, 6)]);
        assert_eq!(
            open_fractions(4),
            [frac(1, 4), frac(1, 3), frac(1, 2), frac(2, 3), frac(3, 4)]
        );
    }
}
