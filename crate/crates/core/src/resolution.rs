//! Embedded resolution by point blow-ups and divisorial valuations.
//!
//! Every point of the tower carries local coordinates `(u, v)` together with
//! the composed chart `(X(u, v), Y(u, v))` back to the original `(x, y)`.
//! Blowing up a point creates a curve that is `{u = 0}` in each new chart:
//!
//! * direction `s` (finite): `(u, v) -> (u, u (v + s))`
//! * direction infinity: `(u, v) -> (u v, u)`
//!
//! A point is left alone once it carries exactly one branch that is smooth,
//! transverse to the newest curve, and meets no older curve there.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::germ::PlaneCurveGerm;
use crate::jet::JetSpace;
use crate::poly::{BivariatePolynomial, Monomial};
use crate::rational::Rational;
use crate::upoly::UPoly;
use crate::{Error, Result};

pub const DEFAULT_MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionOptions {
    pub max_depth: usize,
    /// Additional blow-ups at free points `(curve id, s)`, where `s` is the
    /// coordinate along the curve in its chart. Harmless for every
    /// downstream invariant; used to test resolution independence.
    pub extra_points: Vec<(usize, Rational)>,
}

impl Default for ResolutionOptions {
    fn default() -> Self {
        ResolutionOptions {
            max_depth: DEFAULT_MAX_DEPTH,
            extra_points: Vec::new(),
        }
    }
}

/// One substitution in a chart path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BlowUpStep {
    /// `(u, v) -> (u, u v)`
    Blow,
    /// `(u, v) -> (u v, u)`
    BlowSwapped,
    /// `(u, v) -> (u, v + s)`
    Translate(Rational),
}

impl BlowUpStep {
    fn apply(&self, x: &BivariatePolynomial, y: &BivariatePolynomial) -> (BivariatePolynomial, BivariatePolynomial) {
        let u = BivariatePolynomial::x();
        let v = BivariatePolynomial::y();
        let (p, q) = match self {
            BlowUpStep::Blow => (u.clone(), &u * &v),
            BlowUpStep::BlowSwapped => (&u * &v, u),
            BlowUpStep::Translate(s) => (u, &v + &BivariatePolynomial::constant(s.clone())),
        };
        (x.compose(&p, &q), y.compose(&p, &q))
    }
}

/// Steps from the original plane outwards; the chart map is
/// `step_1 ∘ step_2 ∘ … ∘ step_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BlowUpChartPath {
    pub steps: Vec<BlowUpStep>,
}

impl BlowUpChartPath {
    /// Composes the steps into `(X(u, v), Y(u, v))`.
    pub fn map(&self) -> (BivariatePolynomial, BivariatePolynomial) {
        let mut x = BivariatePolynomial::x();
        let mut y = BivariatePolynomial::y();
        for step in &self.steps {
            (x, y) = step.apply(&x, &y);
        }
        (x, y)
    }

    fn with(&self, extra: &[BlowUpStep]) -> Self {
        let mut steps = self.steps.clone();
        steps.extend(
            extra
                .iter()
                .filter(|s| !matches!(s, BlowUpStep::Translate(t) if t.is_zero()))
                .cloned(),
        );
        BlowUpChartPath { steps }
    }
}

/// A chart in which the curve is `{u = 0}`: `x = X(u, v)`, `y = Y(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    pub x: BivariatePolynomial,
    pub y: BivariatePolynomial,
    /// Empty for hand-entered charts.
    pub path: BlowUpChartPath,
}

impl Chart {
    pub fn jacobian(&self) -> BivariatePolynomial {
        &(&self.x.derivative_x() * &self.y.derivative_y()) - &(&self.x.derivative_y() * &self.y.derivative_x())
    }

    /// u-adic order of `phi(X, Y)`.
    pub fn order_of(&self, phi: &BivariatePolynomial) -> Result<u32> {
        phi.compose(&self.x, &self.y).order_in_x().ok_or(Error::ZeroPolynomial)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExceptionalCurve {
    pub id: usize,
    /// `a[i] = ord_E f_i`
    pub a: Vec<u64>,
    /// `ord_E (dx ∧ dy)`
    pub c: u64,
    pub adjacent: BTreeSet<usize>,
    /// Branch indices whose strict transforms meet this curve, one entry
    /// per contact point.
    pub branch_contacts: Vec<usize>,
    /// Euler characteristic of the curve minus its intersection points.
    pub open_euler: i64,
    pub chart: Option<Chart>,
}

impl ExceptionalCurve {
    pub fn a_sum(&self) -> u64 {
        self.a.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    Computed(PlaneCurveGerm),
    UserSupplied { germ: Option<PlaneCurveGerm> },
}

/// Weighted dual graph of an embedded resolution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResolutionGraph {
    r: usize,
    curves: Vec<ExceptionalCurve>,
    provenance: Provenance,
}

impl ResolutionGraph {
    /// Builds and validates a graph from its parts. Curves are reordered by
    /// id.
    pub fn from_parts(r: usize, mut curves: Vec<ExceptionalCurve>, provenance: Provenance) -> Result<Self> {
        curves.sort_by_key(|c| c.id);
        let g = ResolutionGraph { r, curves, provenance };
        g.validate()?;
        Ok(g)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn curves(&self) -> &[ExceptionalCurve] {
        &self.curves
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn germ(&self) -> Option<&PlaneCurveGerm> {
        match &self.provenance {
            Provenance::Computed(g) => Some(g),
            Provenance::UserSupplied { germ } => germ.as_ref(),
        }
    }

    pub fn index_of(&self, id: usize) -> Result<usize> {
        self.curves
            .binary_search_by_key(&id, |c| c.id)
            .map_err(|_| Error::UnknownCurve { id })
    }

    pub fn curve(&self, id: usize) -> Result<&ExceptionalCurve> {
        Ok(&self.curves[self.index_of(id)?])
    }

    pub fn has_charts(&self) -> bool {
        self.curves.iter().all(|c| c.chart.is_some())
    }

    /// Unordered adjacent pairs of curve indices (positions, not ids).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, c) in self.curves.iter().enumerate() {
            for &n in &c.adjacent {
                if let Ok(j) = self.index_of(n) {
                    if i < j {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    /// Adjacency by curve position.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let s = self.curves.len();
        let mut m = vec![vec![false; s]; s];
        for (i, j) in self.edges() {
            m[i][j] = true;
            m[j][i] = true;
        }
        m
    }

    pub fn without_charts(&self) -> Self {
        let mut g = self.clone();
        for c in &mut g.curves {
            c.chart = None;
        }
        g.provenance = Provenance::UserSupplied { germ: None };
        g
    }

    fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::GraphWithoutBranches);
        }
        if self.curves.is_empty() {
            return Err(Error::GraphWithoutCurves);
        }
        for w in self.curves.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::DuplicateCurveId { id: w[0].id });
            }
        }
        let ids: BTreeSet<usize> = self.curves.iter().map(|c| c.id).collect();
        let mut contacts = vec![0usize; self.r];
        for c in &self.curves {
            if c.a.len() != self.r {
                return Err(Error::MultiplicityLength {
                    id: c.id,
                    expected: self.r,
                    found: c.a.len(),
                });
            }
            if let Some(branch) = c.a.iter().position(|&a| a == 0) {
                return Err(Error::NonPositiveMultiplicity { id: c.id, branch });
            }
            if c.c == 0 {
                return Err(Error::NonPositiveCanonical { id: c.id, c: 0 });
            }
            for &n in &c.adjacent {
                if n == c.id {
                    return Err(Error::SelfAdjacent { id: c.id });
                }
                if !ids.contains(&n) {
                    return Err(Error::DanglingAdjacency { id: c.id, neighbor: n });
                }
                if !self.curve(n)?.adjacent.contains(&c.id) {
                    return Err(Error::AsymmetricAdjacency { from: c.id, to: n });
                }
            }
            for &b in &c.branch_contacts {
                if b >= self.r {
                    return Err(Error::BranchContact { branch: b, count: 0 });
                }
                contacts[b] += 1;
            }
        }
        if let Some((branch, &count)) = contacts.iter().enumerate().find(|(_, &n)| n != 1) {
            return Err(Error::BranchContact { branch, count });
        }
        let edges = self.edges().len();
        let connected = self.is_connected();
        if !connected || edges + 1 != self.curves.len() {
            return Err(Error::NotATree {
                curves: self.curves.len(),
                edges,
                connected,
            });
        }
        for c in &self.curves {
            let expected = 2 - c.adjacent.len() as i64 - c.branch_contacts.len() as i64;
            if c.open_euler != expected {
                return Err(Error::OpenEulerMismatch {
                    id: c.id,
                    expected,
                    found: c.open_euler,
                });
            }
            if let Some(chart) = &c.chart {
                let jac = chart.jacobian().order_in_x();
                if jac != Some(c.c as u32) {
                    return Err(Error::ChartMismatch { id: c.id });
                }
                if let Some(germ) = self.germ() {
                    for (f, &a) in germ.branches().iter().zip(&c.a) {
                        if chart.order_of(f)? as u64 != a {
                            return Err(Error::ChartMismatch { id: c.id });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let m = self.adjacency_matrix();
        let mut seen = vec![false; m.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..m.len() {
                if m[i][j] && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

struct Point {
    depth: usize,
    path: BlowUpChartPath,
    x: BivariatePolynomial,
    y: BivariatePolynomial,
    /// Curve id on `{u = 0}`.
    on_u: Option<usize>,
    /// Curve id on `{v = 0}`.
    on_v: Option<usize>,
    branches: Vec<(usize, BivariatePolynomial)>,
}

/// Tangent direction of a branch at the origin of its chart.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Direction {
    Finite(Rational),
    Infinite,
}

fn direction(branch: usize, g: &BivariatePolynomial) -> Result<(Direction, u32)> {
    let m = g.order().ok_or(Error::ZeroPolynomial)?;
    let cone = g.homogeneous_part(m);
    // g_m(1, t): the coefficient of u^(m-k) v^k sits at t^k
    let mut coeffs = vec![Rational::zero(); m as usize + 1];
    for (mono, c) in cone.terms() {
        coeffs[mono.y as usize] = c.clone();
    }
    let p = UPoly::new(coeffs);
    let infinite = p.degree().unwrap_or(0) < m as usize;
    let sq = p.squarefree_part();
    let finite = sq.degree().unwrap_or(0);
    match (infinite, finite) {
        (true, 0) => Ok((Direction::Infinite, m)),
        (false, 1) => Ok((Direction::Finite(-sq.0[0].clone()), m)),
        _ => {
            if infinite || !sq.rational_roots().is_empty() {
                Err(Error::BranchNotIrreducible { branch })
            } else {
                Err(Error::IrrationalCenter {
                    branch,
                    minimal_polynomial: sq.render("t"),
                })
            }
        }
    }
}

fn strict_transform(g: &BivariatePolynomial, dir: &Direction, m: u32) -> BivariatePolynomial {
    let u = BivariatePolynomial::x();
    let v = BivariatePolynomial::y();
    let total = match dir {
        Direction::Finite(s) => g.compose(&u, &(&u * &(&v + &BivariatePolynomial::constant(s.clone())))),
        Direction::Infinite => g.compose(&(&u * &v), &u),
    };
    total
        .divide_by_x_power(m)
        .expect("exceptional factor divides the total transform")
}

/// Smooth at the origin with nonzero `v` coefficient in the linear part.
fn smooth_transverse(g: &BivariatePolynomial) -> bool {
    g.order() == Some(1) && !g.coefficient(Monomial::new(0, 1)).is_zero()
}

struct Builder {
    charts: Vec<Chart>,
    adjacent: Vec<BTreeSet<usize>>,
    contacts: Vec<Vec<usize>>,
    special: Vec<BTreeSet<Rational>>,
}

impl Builder {
    fn new_curve(&mut self, chart: Chart) -> usize {
        self.charts.push(chart);
        self.adjacent.push(BTreeSet::new());
        self.contacts.push(Vec::new());
        self.special.push(BTreeSet::new());
        self.charts.len()
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adjacent[a - 1].insert(b);
        self.adjacent[b - 1].insert(a);
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adjacent[a - 1].remove(&b);
        self.adjacent[b - 1].remove(&a);
    }
}

/// Resolves the germ. Curve ids are `1, 2, …` in creation order.
///
/// The origin is always blown up once, so even a single smooth branch gets
/// one exceptional curve.
pub fn resolve_germ(germ: &PlaneCurveGerm, options: &ResolutionOptions) -> Result<ResolutionGraph> {
    let mut b = Builder {
        charts: Vec::new(),
        adjacent: Vec::new(),
        contacts: Vec::new(),
        special: Vec::new(),
    };
    let mut stack = vec![Point {
        depth: 1,
        path: BlowUpChartPath::default(),
        x: BivariatePolynomial::x(),
        y: BivariatePolynomial::y(),
        on_u: None,
        on_v: None,
        branches: germ.branches().iter().cloned().enumerate().collect(),
    }];
    while let Some(p) = stack.pop() {
        if p.depth > options.max_depth {
            return Err(Error::DepthExceeded {
                limit: options.max_depth,
            });
        }
        let u = BivariatePolynomial::x();
        let uv = &u * &BivariatePolynomial::y();
        let chart = Chart {
            x: p.x.compose(&u, &uv),
            y: p.y.compose(&u, &uv),
            path: p.path.with(&[BlowUpStep::Blow]),
        };
        let e = b.new_curve(chart);
        if let Some(a) = p.on_u {
            b.link(e, a);
        }
        if let Some(c) = p.on_v {
            b.link(e, c);
        }
        if let (Some(a), Some(c)) = (p.on_u, p.on_v) {
            b.unlink(a, c);
        }
        if p.on_v.is_some() {
            b.special[e - 1].insert(Rational::zero());
        }

        let mut groups: BTreeMap<Direction, Vec<(usize, BivariatePolynomial)>> = BTreeMap::new();
        for (i, g) in &p.branches {
            let (dir, m) = direction(*i, g)?;
            let st = strict_transform(g, &dir, m);
            groups.entry(dir).or_default().push((*i, st));
        }
        let mut children = Vec::new();
        for (dir, branches) in groups {
            let (steps, on_v) = match &dir {
                Direction::Finite(s) => {
                    b.special[e - 1].insert(s.clone());
                    (
                        [BlowUpStep::Blow, BlowUpStep::Translate(s.clone())],
                        if s.is_zero() { p.on_v } else { None },
                    )
                }
                Direction::Infinite => (
                    [BlowUpStep::BlowSwapped, BlowUpStep::Translate(Rational::zero())],
                    p.on_u,
                ),
            };
            if branches.len() == 1 && on_v.is_none() && smooth_transverse(&branches[0].1) {
                b.contacts[e - 1].push(branches[0].0);
                continue;
            }
            let mut x = p.x.clone();
            let mut y = p.y.clone();
            for s in &steps {
                (x, y) = s.apply(&x, &y);
            }
            children.push(Point {
                depth: p.depth + 1,
                path: p.path.with(&steps),
                x,
                y,
                on_u: Some(e),
                on_v,
                branches,
            });
        }
        stack.extend(children.into_iter().rev());
    }

    for (curve, s) in &options.extra_points {
        let k = *curve;
        if k == 0 || k > b.charts.len() || b.special[k - 1].contains(s) {
            return Err(Error::InvalidFreePoint { curve: k, s: s.clone() });
        }
        let base = b.charts[k - 1].clone();
        let steps = [BlowUpStep::Translate(s.clone()), BlowUpStep::Blow];
        let mut x = base.x.clone();
        let mut y = base.y.clone();
        for st in &steps {
            (x, y) = st.apply(&x, &y);
        }
        let e = b.new_curve(Chart {
            x,
            y,
            path: base.path.with(&steps),
        });
        b.special[k - 1].insert(s.clone());
        b.link(e, k);
    }

    let mut curves = Vec::with_capacity(b.charts.len());
    for (idx, chart) in b.charts.into_iter().enumerate() {
        let a = germ
            .branches()
            .iter()
            .map(|f| chart.order_of(f).map(u64::from))
            .collect::<Result<Vec<u64>>>()?;
        let c = chart.jacobian().order_in_x().ok_or(Error::ZeroPolynomial)? as u64;
        let adjacent = b.adjacent[idx].clone();
        let branch_contacts = b.contacts[idx].clone();
        let open_euler = 2 - adjacent.len() as i64 - branch_contacts.len() as i64;
        curves.push(ExceptionalCurve {
            id: idx + 1,
            a,
            c,
            adjacent,
            branch_contacts,
            open_euler,
            chart: Some(chart),
        });
    }
    ResolutionGraph::from_parts(germ.r(), curves, Provenance::Computed(germ.clone()))
}

fn chart_of(graph: &ResolutionGraph, k: usize) -> Result<&Chart> {
    graph.curve(k)?.chart.as_ref().ok_or(Error::ChartsUnavailable)
}

/// `ord_{E_k}` of the pullback of `phi`.
pub fn ord_along(graph: &ResolutionGraph, k: usize, phi: &BivariatePolynomial) -> Result<u32> {
    if phi.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    chart_of(graph, k)?.order_of(phi)
}

/// Linear functionals on `JetSpace(n)` whose common kernel is
/// `{phi : ord_{E_k} phi >= alpha}`: the coefficients of `u^t v^s`, `t < alpha`,
/// in the pullback of a generic jet.
pub fn ord_linear_conditions(graph: &ResolutionGraph, k: usize, alpha: u32, n: u32) -> Result<Vec<Vec<Rational>>> {
    let chart = chart_of(graph, k)?;
    if alpha == 0 {
        return Ok(Vec::new());
    }
    if n < alpha {
        return Err(Error::TruncationTooSmall { alpha, n });
    }
    Ok(conditions_for_chart(chart, alpha, n))
}

pub(crate) fn conditions_for_chart(chart: &Chart, alpha: u32, n: u32) -> Vec<Vec<Rational>> {
    let space = JetSpace::new(n);
    let x_pows = truncated_powers(&chart.x, n, alpha);
    let y_pows = truncated_powers(&chart.y, n, alpha);
    let mut rows: BTreeMap<(u32, u32), Vec<Rational>> = BTreeMap::new();
    for (j, m) in space.monomials().enumerate() {
        let pulled = &x_pows[m.x as usize] * &y_pows[m.y as usize];
        for (t, c) in pulled.terms() {
            if t.x >= alpha {
                continue;
            }
            rows.entry((t.x, t.y))
                .or_insert_with(|| vec![Rational::zero(); space.dim()])[j] = c.clone();
        }
    }
    rows.into_values().collect()
}

fn truncated_powers(p: &BivariatePolynomial, n: u32, bound: u32) -> Vec<BivariatePolynomial> {
    let mut out = vec![BivariatePolynomial::one()];
    for i in 1..n as usize {
        let next = (&out[i - 1] * p).truncate_x(bound);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn resolve(bs: &[&str]) -> ResolutionGraph {
        let germ = PlaneCurveGerm::new(bs.iter().map(|s| parse_polynomial(s).unwrap()).collect()).unwrap();
        resolve_germ(&germ, &ResolutionOptions::default()).unwrap()
    }

    #[test]
    fn node_needs_one_blow_up() {
        let g = resolve(&["x", "y"]);
        assert_eq!(g.curves().len(), 1);
        let e = &g.curves()[0];
        assert_eq!((e.a.clone(), e.c, e.open_euler), (vec![1, 1], 1, 0));
    }

    #[test]
    fn cusp_tower() {
        let g = resolve(&["x^2+y^3"]);
        let summary: Vec<(u64, u64, i64)> = g.curves().iter().map(|e| (e.a[0], e.c, e.open_euler)).collect();
        assert_eq!(summary, [(2, 1, 1), (3, 2, 1), (6, 4, -1)]);
        assert_eq!(g.curves()[2].adjacent, BTreeSet::from([1, 2]));
        assert_eq!(g.curves()[2].branch_contacts, [0]);
    }

    #[test]
    fn smooth_branch_gets_one_curve() {
        let g = resolve(&["y"]);
        assert_eq!(g.curves().len(), 1);
        assert_eq!(g.curves()[0].open_euler, 1);
    }

    #[test]
    fn tangency_is_resolved() {
        let g = resolve(&["y", "y-x^2"]);
        let summary: Vec<(Vec<u64>, u64)> = g.curves().iter().map(|e| (e.a.clone(), e.c)).collect();
        assert_eq!(summary, [(vec![1, 1], 1), (vec![2, 2], 2)]);
    }

    #[test]
    fn irrational_center_reports_polynomial() {
        let germ = PlaneCurveGerm::new(vec![parse_polynomial("y^2-2*x^2").unwrap()]).unwrap();
        match resolve_germ(&germ, &ResolutionOptions::default()) {
            Err(Error::IrrationalCenter { minimal_polynomial, .. }) => assert_eq!(minimal_polynomial, "t^2 - 2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reducible_branch_rejected() {
        let germ = PlaneCurveGerm::new(vec![parse_polynomial("y^2-x^2").unwrap()]).unwrap();
        assert_eq!(
            resolve_germ(&germ, &ResolutionOptions::default()),
            Err(Error::BranchNotIrreducible { branch: 0 })
        );
        let germ = PlaneCurveGerm::new(vec![parse_polynomial("y^2-x^4").unwrap()]).unwrap();
        assert_eq!(
            resolve_germ(&germ, &ResolutionOptions::default()),
            Err(Error::BranchNotIrreducible { branch: 0 })
        );
    }

    #[test]
    fn depth_limit() {
        let germ = PlaneCurveGerm::new(vec![parse_polynomial("y^2-x^41").unwrap()]).unwrap();
        let opts = ResolutionOptions {
            max_depth: 8,
            ..Default::default()
        };
        assert_eq!(resolve_germ(&germ, &opts), Err(Error::DepthExceeded { limit: 8 }));
    }

    #[test]
    fn chart_path_reproduces_chart() {
        let g = resolve(&["x^2+y^5", "y^2+x^5"]);
        for e in g.curves() {
            let chart = e.chart.as_ref().unwrap();
            let (x, y) = chart.path.map();
            assert_eq!((x, y), (chart.x.clone(), chart.y.clone()));
        }
    }

    #[test]
    fn conditions_of_order_one_on_node() {
        let g = resolve(&["x", "y"]);
        let rows = ord_linear_conditions(&g, 1, 1, 1).unwrap();
        assert_eq!(rows, [vec![Rational::from_integer(1.into())]]);
        assert!(ord_linear_conditions(&g, 1, 0, 3).unwrap().is_empty());
        assert_eq!(
            ord_linear_conditions(&g, 1, 3, 2),
            Err(Error::TruncationTooSmall { alpha: 3, n: 2 })
        );
    }

    #[test]
    fn extra_point_adds_leaf() {
        let germ = PlaneCurveGerm::new(vec![parse_polynomial("x^2+y^3").unwrap()]).unwrap();
        let opts = ResolutionOptions {
            extra_points: vec![(3, Rational::from_integer(7.into()))],
            ..Default::default()
        };
        let g = resolve_germ(&germ, &opts).unwrap();
        let e = g.curve(4).unwrap();
        assert_eq!((e.a[0], e.c, e.open_euler), (6, 5, 1));
        let bad = ResolutionOptions {
            extra_points: vec![(3, Rational::zero())],
            ..Default::default()
        };
        assert!(matches!(resolve_germ(&germ, &bad), Err(Error::InvalidFreePoint { .. })));
    }
}
