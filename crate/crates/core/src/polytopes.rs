//! Faces of quasiadjunction, their volumes, and the log-canonical region.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arrangement::{polytope_volume, CellComplex, Hyperplane};
use crate::ideals::{IdealTriple, TripleEvaluator, TripleSignature};
use crate::jet::JetSubspace;
use crate::linalg::rank;
use crate::rational::{int, Rational};
use crate::resolution::ResolutionGraph;
use crate::{Error, Result};

pub const DEFAULT_R_LIMIT: usize = 4;

/// `a_k · x = Σ_i a_{k,i} - c_k - 1 - e`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QAHyperplane {
    /// Curve id.
    pub curve: usize,
    pub e: u32,
    pub normal: Vec<u64>,
    pub offset: Rational,
}

impl QAHyperplane {
    pub fn hyperplane(&self) -> Hyperplane {
        Hyperplane::new(
            self.normal.iter().map(|&a| int(a as i64)).collect(),
            self.offset.clone(),
        )
    }
}

/// Every `(k, e)` whose hyperplane meets the open cube, ordered by curve
/// then level. Levels that never occur are left for the jump test.
pub fn candidate_hyperplanes(graph: &ResolutionGraph) -> Vec<QAHyperplane> {
    let mut out = Vec::new();
    for c in graph.curves() {
        let top = c.a_sum() as i64 - c.c as i64 - 1;
        for e in 0..top.max(0) {
            out.push(QAHyperplane {
                curve: c.id,
                e: e as u32,
                normal: c.a.clone(),
                offset: int(top - e),
            });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceOptions {
    /// Largest number of branches the arrangement is built for.
    pub r_limit: usize,
}

impl Default for FaceOptions {
    fn default() -> Self {
        FaceOptions {
            r_limit: DEFAULT_R_LIMIT,
        }
    }
}

/// A face of quasiadjunction: a maximal connected union of arrangement
/// cells carrying one ideal triple with a nonzero jump.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QAFace {
    pub supporting: Vec<QAHyperplane>,
    pub dimension: usize,
    /// Vertices of the closure, sorted.
    pub vertices: Vec<Vec<Rational>>,
    /// The closure is cut out by these equalities and `g ≥ 0` for the
    /// inequalities.
    pub equalities: Vec<Hyperplane>,
    pub inequalities: Vec<Hyperplane>,
    /// A relative-interior point.
    pub sample: Vec<Rational>,
    pub triple: IdealTriple,
}

impl QAFace {
    pub fn is_face_of_quasiadjunction(&self) -> bool {
        self.triple.is_jump()
    }

    pub fn is_weight_one(&self) -> bool {
        self.triple.is_weight_one()
    }

    /// Membership in the closure.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|h| h.contains(x)) && self.inequalities.iter().all(|h| !h.eval(x).is_negative())
    }

    /// Membership in the relative interior.
    pub fn contains_interior(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|h| h.contains(x)) && self.inequalities.iter().all(|h| h.eval(x).is_positive())
    }
}

/// Canonical form of a triple's ideals, lifted to a common jet order.
type TripleKey = [JetSubspace; 3];

pub(crate) struct JumpCells {
    pub complex: CellComplex,
    /// Cells in the half-open cube with a nonzero jump, with their triples.
    pub kept: Vec<(usize, IdealTriple)>,
    /// Equivalence class of each kept triple (equal ideals, equal class).
    pub class: Vec<usize>,
}

fn check_r(graph: &ResolutionGraph, options: &FaceOptions) -> Result<()> {
    if graph.r() > options.r_limit {
        return Err(Error::RLimitExceeded {
            r: graph.r(),
            limit: options.r_limit,
        });
    }
    if !graph.has_charts() {
        return Err(Error::ChartsUnavailable);
    }
    Ok(())
}

pub(crate) fn jump_cells(graph: &ResolutionGraph, hyperplanes: &[Hyperplane]) -> Result<JumpCells> {
    let complex = CellComplex::build(hyperplanes, graph.r());
    let mut ev = TripleEvaluator::new(graph);
    let mut kept = Vec::new();
    for cell in 0..complex.cells.len() {
        let xi = complex.centroid(cell);
        if xi.iter().any(|x| x.is_zero()) {
            continue;
        }
        let t = ev.triple_at(&xi)?;
        if t.is_jump() {
            kept.push((cell, t));
        }
    }
    let order = kept.iter().map(|(_, t)| t.a.space().order()).max().unwrap_or(0);
    let mut keys: BTreeMap<TripleSignature, usize> = BTreeMap::new();
    let mut reps: Vec<TripleKey> = Vec::new();
    let mut class = Vec::with_capacity(kept.len());
    for (_, t) in &kept {
        let id = match keys.get(&t.signature) {
            Some(&id) => id,
            None => {
                let key: TripleKey =
                    [&t.a, &t.a_prime, &t.a_dprime].map(|s| s.extend_ideal(order).expect("order grows"));
                let id = reps.iter().position(|k| *k == key).unwrap_or_else(|| {
                    reps.push(key);
                    reps.len() - 1
                });
                keys.insert(t.signature.clone(), id);
                id
            }
        };
        class.push(id);
    }
    Ok(JumpCells { complex, kept, class })
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Groups kept cells into faces: cells in a face relation with equal
/// triples are merged.
pub(crate) fn merge_cells(jc: &JumpCells, candidates: &[QAHyperplane]) -> Vec<QAFace> {
    let cx = &jc.complex;
    let n = jc.kept.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if jc.class[i] != jc.class[j] {
                continue;
            }
            let (a, b) = (jc.kept[i].0, jc.kept[j].0);
            if cx.is_face_of(a, b) || cx.is_face_of(b, a) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut faces: Vec<QAFace> = groups.values().map(|g| build_face(jc, g, candidates)).collect();
    faces.sort_by(|a, b| {
        let key = |f: &QAFace| f.supporting.iter().map(|h| (h.curve, h.e)).collect::<Vec<_>>();
        key(a).cmp(&key(b)).then_with(|| a.vertices.cmp(&b.vertices))
    });
    faces
}

fn build_face(jc: &JumpCells, group: &[usize], candidates: &[QAHyperplane]) -> QAFace {
    let cx = &jc.complex;
    let dimension = group
        .iter()
        .map(|&i| cx.cells[jc.kept[i].0].dimension)
        .max()
        .unwrap_or(0);
    let tops: Vec<usize> = group
        .iter()
        .map(|&i| jc.kept[i].0)
        .filter(|&c| cx.cells[c].dimension == dimension)
        .collect();
    let first = *tops
        .iter()
        .min_by_key(|&&c| cx.cell_vertices(c))
        .expect("nonempty group");
    let sample = cx.centroid(first);
    let mut ids: Vec<usize> = group
        .iter()
        .flat_map(|&i| cx.cells[jc.kept[i].0].vertex_ids.clone())
        .collect();
    ids.sort_unstable();
    ids.dedup();
    let points: Vec<Vec<Rational>> = ids.iter().map(|&v| cx.vertices[v].clone()).collect();
    let equalities: Vec<Hyperplane> = {
        let mut e: Vec<Hyperplane> = cx.cells[first].equalities.iter().map(|h| h.canonical()).collect();
        e.sort();
        e.dedup();
        e
    };
    let mut inequalities: Vec<Hyperplane> = Vec::new();
    for &c in &tops {
        for h in &cx.cells[c].inequalities {
            let h = h.canonical_inequality();
            let valid = points.iter().all(|p| !h.eval(p).is_negative());
            let tight_everywhere = points.iter().all(|p| h.contains(p));
            if valid && !tight_everywhere && !inequalities.contains(&h) {
                inequalities.push(h);
            }
        }
    }
    inequalities.sort();
    let r = cx.r;
    let eq_rank = rank(&equalities.iter().map(|h| h.normal.clone()).collect::<Vec<_>>(), r);
    let mut vertices: Vec<Vec<Rational>> = points
        .into_iter()
        .filter(|p| {
            let rows: Vec<Vec<Rational>> = equalities
                .iter()
                .map(|h| h.normal.clone())
                .chain(inequalities.iter().filter(|h| h.contains(p)).map(|h| h.normal.clone()))
                .collect();
            eq_rank == r || rank(&rows, r) == r
        })
        .collect();
    vertices.sort();
    let supporting = candidates
        .iter()
        .filter(|h| h.hyperplane().contains(&sample))
        .cloned()
        .collect();
    let mut triple = jc.kept[group[0]].1.clone();
    if let Some(&i) = group.iter().find(|&&i| jc.kept[i].0 == first) {
        triple = jc.kept[i].1.clone();
    }
    triple.point = sample.clone();
    QAFace {
        supporting,
        dimension,
        vertices,
        equalities,
        inequalities,
        sample,
        triple,
    }
}

/// All faces of quasiadjunction in `(0, 1]^r`.
pub fn enumerate_faces(graph: &ResolutionGraph, options: &FaceOptions) -> Result<Vec<QAFace>> {
    check_r(graph, options)?;
    let candidates = candidate_hyperplanes(graph);
    let hs: Vec<Hyperplane> = candidates.iter().map(|h| h.hyperplane()).collect();
    let jc = jump_cells(graph, &hs)?;
    Ok(merge_cells(&jc, &candidates))
}

/// Same faces, computed on the arrangement refined by `extra` hyperplanes.
pub fn enumerate_faces_refined(
    graph: &ResolutionGraph,
    options: &FaceOptions,
    extra: &[Hyperplane],
) -> Result<Vec<QAFace>> {
    check_r(graph, options)?;
    let candidates = candidate_hyperplanes(graph);
    let mut hs: Vec<Hyperplane> = candidates.iter().map(|h| h.hyperplane()).collect();
    hs.extend(extra.iter().cloned());
    let jc = jump_cells(graph, &hs)?;
    Ok(merge_cells(&jc, &candidates))
}

/// Lattice-normalized volume of a codimension-one face.
pub fn face_volume(face: &QAFace) -> Result<Rational> {
    let r = face.sample.len();
    if face.dimension + 1 != r || r < 2 {
        return Err(Error::NotCodimensionOne {
            dimension: face.dimension,
        });
    }
    let h = face.equalities.first().ok_or(Error::NotCodimensionOne {
        dimension: face.dimension,
    })?;
    polytope_volume(h, &face.inequalities, &face.vertices).ok_or(Error::NotCodimensionOne {
        dimension: face.dimension,
    })
}

/// Sum of the volumes of all codimension-one faces.
pub fn total_face_volume(faces: &[QAFace]) -> Rational {
    faces.iter().filter_map(|f| face_volume(f).ok()).sum()
}

/// `{x ∈ (0, 1]^r : a_k · x ≥ Σ_i a_{k,i} - c_k - 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogCanonicalRegion {
    pub r: usize,
    /// `(a_k, bound_k)` per curve, in curve order.
    pub half_spaces: Vec<(Vec<u64>, Rational)>,
}

impl LogCanonicalRegion {
    /// Membership, boundary inclusive, of a point of `(0, 1]^r`.
    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.r && x.iter().all(|v| v.is_positive() && *v <= Rational::one()) && self.satisfies_half_spaces(x)
    }

    fn satisfies_half_spaces(&self, x: &[Rational]) -> bool {
        self.half_spaces.iter().all(|(a, b)| {
            let s: Rational = a.iter().zip(x).map(|(&ai, xi)| int(ai as i64) * xi).sum();
            s >= *b
        })
    }
}

pub fn log_canonical_region(graph: &ResolutionGraph) -> LogCanonicalRegion {
    LogCanonicalRegion {
        r: graph.r(),
        half_spaces: graph
            .curves()
            .iter()
            .map(|c| (c.a.clone(), int(c.a_sum() as i64 - c.c as i64 - 1)))
            .collect(),
    }
}

/// Whether `(γ_1 + 1, …, γ_r + 1)` satisfies every half-space of the
/// region, with `γ_i ≥ -1`. No upper bound is imposed on `γ`.
pub fn is_log_canonical(graph: &ResolutionGraph, gamma: &[Rational]) -> Result<bool> {
    if gamma.len() != graph.r() {
        return Err(Error::WrongArity {
            expected: graph.r(),
            found: gamma.len(),
        });
    }
    let x: Vec<Rational> = gamma.iter().map(|g| g + Rational::one()).collect();
    let region = log_canonical_region(graph);
    Ok(x.iter().all(|v| !v.is_negative()) && region.satisfies_half_spaces(&x))
}

/// Thresholds along a ray, in both sign conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayThresholds {
    pub direction: Vec<Rational>,
    /// `min(min_k (c_k + 1)/(a_k · δ), min_{δ_i > 0} 1/δ_i)`: the usual
    /// log-canonical threshold of `Σ δ_i f_i`.
    pub standard: Rational,
    /// Where the ray `𝟙 - tδ` leaves the region.
    pub boundary_point: Vec<Rational>,
    /// `γ = -standard`, the region's own coordinate along the ray.
    pub region_gamma: Rational,
    /// `1 - standard`; the constant of quasiadjunction for `r = 1`.
    pub kappa: Rational,
}

pub fn standard_lct_ray(graph: &ResolutionGraph, delta: &[Rational]) -> Result<RayThresholds> {
    if delta.len() != graph.r() {
        return Err(Error::WrongArity {
            expected: graph.r(),
            found: delta.len(),
        });
    }
    if let Some(d) = delta.iter().find(|d| d.is_negative()) {
        return Err(Error::NegativeCoefficient { value: d.clone() });
    }
    if delta.iter().all(|d| d.is_zero()) {
        return Err(Error::ZeroDirection);
    }
    let mut best: Option<Rational> = None;
    let mut consider = |t: Rational| {
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
    };
    for c in graph.curves() {
        let ad: Rational = c.a.iter().zip(delta).map(|(&a, d)| int(a as i64) * d).sum();
        if ad.is_positive() {
            consider(int(c.c as i64 + 1) / ad);
        }
    }
    for d in delta.iter().filter(|d| d.is_positive()) {
        consider(d.recip());
    }
    let t = best.expect("some positive direction");
    Ok(RayThresholds {
        direction: delta.to_vec(),
        boundary_point: delta.iter().map(|d| Rational::one() - &t * d).collect(),
        region_gamma: -t.clone(),
        kappa: Rational::one() - &t,
        standard: t,
    })
}

/// One side of a semicontinuity comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicontinuitySide {
    pub essential_components: usize,
    pub total_volume: Rational,
}

/// Verdicts hold only if the special germ really is a degeneration of the
/// general one; that is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicontinuityReport {
    pub general: SemicontinuitySide,
    pub special: SemicontinuitySide,
    pub components_ok: bool,
    pub volume_ok: bool,
}

impl SemicontinuityReport {
    pub fn passes(&self) -> bool {
        self.components_ok && self.volume_ok
    }
}

fn side(graph: &ResolutionGraph, options: &FaceOptions) -> Result<SemicontinuitySide> {
    let faces = enumerate_faces(graph, options)?;
    let comps = crate::charvar::assemble_components(graph, options)?;
    Ok(SemicontinuitySide {
        essential_components: comps.iter().filter(|c| c.essential).count(),
        total_volume: total_face_volume(&faces),
    })
}

pub fn semicontinuity_compare(
    general: &ResolutionGraph,
    special: &ResolutionGraph,
    options: &FaceOptions,
) -> Result<SemicontinuityReport> {
    if general.r() != special.r() {
        return Err(Error::BranchCountMismatch {
            general: general.r(),
            special: special.r(),
        });
    }
    let g = side(general, options)?;
    let s = side(special, options)?;
    Ok(SemicontinuityReport {
        components_ok: g.essential_components <= s.essential_components,
        volume_ok: g.total_volume <= s.total_volume,
        general: g,
        special: s,
    })
}

/// Reflection `x ↦ 𝟙 - x`.
pub fn reflect(x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|v| Rational::one() - v).collect()
}

/// Reflection of a hyperplane under `x ↦ 𝟙 - x`.
pub fn reflect_hyperplane(h: &Hyperplane) -> Hyperplane {
    let s: Rational = h.normal.iter().sum();
    Hyperplane::new(h.normal.clone(), s - &h.offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::PlaneCurveGerm;
    use crate::parse::parse_polynomial;
    use crate::rational::frac;
    use crate::resolution::{resolve_germ, ResolutionOptions};
    use alloc::vec;

    fn graph(branches: &[&str]) -> ResolutionGraph {
        let ps = branches.iter().map(|b| parse_polynomial(b).unwrap()).collect();
        resolve_germ(&PlaneCurveGerm::new(ps).unwrap(), &ResolutionOptions::default()).unwrap()
    }

    #[test]
    fn node_has_no_candidates() {
        assert!(candidate_hyperplanes(&graph(&["x", "y"])).is_empty());
    }

    #[test]
    fn cusp_candidates_and_face() {
        let g = graph(&["x^2+y^3"]);
        let c = candidate_hyperplanes(&g);
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].normal.clone(), c[0].offset.clone()), (vec![6], int(1)));
        let faces = enumerate_faces(&g, &FaceOptions::default()).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].sample, [frac(1, 6)]);
        assert_eq!(faces[0].dimension, 0);
        assert!(face_volume(&faces[0]).is_err());
    }

    #[test]
    fn cusp_thresholds() {
        let g = graph(&["x^2+y^3"]);
        let t = standard_lct_ray(&g, &[int(1)]).unwrap();
        assert_eq!(t.standard, frac(5, 6));
        assert_eq!(t.kappa, frac(1, 6));
        assert_eq!(t.boundary_point, [frac(1, 6)]);
        assert!(is_log_canonical(&g, &[frac(-5, 6)]).unwrap());
        assert!(!is_log_canonical(&g, &[frac(-6, 7)]).unwrap());
        assert!(is_log_canonical(&g, &[int(0)]).unwrap());
        let half = standard_lct_ray(&g, &[int(2)]).unwrap();
        assert_eq!(half.standard, frac(5, 12));
        assert!(standard_lct_ray(&g, &[int(0)]).is_err());
    }

    #[test]
    fn node_threshold_is_one() {
        let g = graph(&["x", "y"]);
        assert_eq!(standard_lct_ray(&g, &[int(1), int(1)]).unwrap().standard, int(1));
        assert!(log_canonical_region(&g).contains(&[int(1), int(1)]));
    }

    #[test]
    fn reflection_of_hyperplanes() {
        let h = Hyperplane::from_integers(&[10, 4], int(7));
        assert_eq!(reflect_hyperplane(&h), h);
        let h = Hyperplane::from_integers(&[10, 4], int(5));
        assert_eq!(reflect_hyperplane(&h).offset, int(9));
    }
}
