//! Exact cell decomposition of a union of hyperplanes inside the unit cube.
//!
//! Each hyperplane is clipped to `[0, 1]^r` and cut by every other
//! hyperplane (double description: vertices plus constraints). The faces of
//! all resulting pieces form a polyhedral complex whose cells are the
//! relatively open strata of the arrangement restricted to the union of the
//! hyperplanes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{determinant, dot, rank};
use crate::rational::{common_denominator, int, Rational};

/// `normal · x = offset`, or as a constraint `normal · x - offset ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Self {
        Hyperplane { normal, offset }
    }

    pub fn from_integers(normal: &[i64], offset: Rational) -> Self {
        Hyperplane::new(normal.iter().map(|&a| int(a)).collect(), offset)
    }

    /// `normal · x - offset`
    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x) - &self.offset
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.eval(x).is_zero()
    }

    pub fn negated(&self) -> Self {
        Hyperplane {
            normal: self.normal.iter().map(|a| -a.clone()).collect(),
            offset: -self.offset.clone(),
        }
    }

    /// Same hyperplane with a primitive integer normal whose first nonzero
    /// entry is positive.
    pub fn canonical(&self) -> Self {
        let mut all = self.normal.clone();
        all.push(self.offset.clone());
        let d = common_denominator(&all);
        let ints: Vec<BigInt> = self.normal.iter().map(|q| (q * &d).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let mut scale = Rational::new(d, g);
        if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            scale = -scale;
        }
        Hyperplane {
            normal: self.normal.iter().map(|q| q * &scale).collect(),
            offset: &self.offset * &scale,
        }
    }

    /// Positive rescaling with a primitive integer normal; preserves the
    /// side of a constraint.
    pub fn canonical_inequality(&self) -> Self {
        let c = self.canonical();
        let i = self.normal.iter().position(|q| !q.is_zero()).expect("nonzero normal");
        if (c.normal[i].is_positive()) == (self.normal[i].is_positive()) {
            c
        } else {
            c.negated()
        }
    }

    /// Primitive integer normal (requires a canonical hyperplane).
    pub fn integer_normal(&self) -> Vec<BigInt> {
        self.canonical().normal.iter().map(|q| q.to_integer()).collect()
    }
}

#[derive(Debug, Clone)]
struct Polytope {
    equalities: Vec<Hyperplane>,
    inequalities: Vec<Hyperplane>,
    vertices: Vec<Vec<Rational>>,
    tight: Vec<Vec<usize>>,
}

fn cube_constraints(r: usize) -> Vec<Hyperplane> {
    let mut out = Vec::with_capacity(2 * r);
    for i in 0..r {
        let mut e = vec![Rational::zero(); r];
        e[i] = Rational::one();
        out.push(Hyperplane::new(e.clone(), Rational::zero()));
        out.push(Hyperplane::new(
            e.iter().map(|q| -q.clone()).collect(),
            -Rational::one(),
        ));
    }
    out
}

fn crossing(p: &[Rational], q: &[Rational], vp: &Rational, vq: &Rational) -> Vec<Rational> {
    // point on segment pq where the affine function vanishes
    let t = vp / (vp - vq);
    p.iter().zip(q).map(|(a, b)| a + (b - a) * &t).collect()
}

impl Polytope {
    fn new(equalities: Vec<Hyperplane>, inequalities: Vec<Hyperplane>, mut vertices: Vec<Vec<Rational>>) -> Self {
        vertices.sort();
        vertices.dedup();
        let tight = vertices
            .iter()
            .map(|v| {
                inequalities
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.contains(v))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Polytope {
            equalities,
            inequalities,
            vertices,
            tight,
        }
    }

    fn hyperplane_in_cube(h: &Hyperplane, r: usize) -> Option<Polytope> {
        let corners: Vec<Vec<Rational>> = (0..1usize << r)
            .map(|bits| (0..r).map(|i| int(((bits >> i) & 1) as i64)).collect())
            .collect();
        let values: Vec<Rational> = corners.iter().map(|c| h.eval(c)).collect();
        let mut vertices = Vec::new();
        for (bits, c) in corners.iter().enumerate() {
            if values[bits].is_zero() {
                vertices.push(c.clone());
            }
            for i in 0..r {
                let other = bits | (1 << i);
                if other != bits && values[bits].signum() * values[other].signum() == -Rational::one() {
                    vertices.push(crossing(c, &corners[other], &values[bits], &values[other]));
                }
            }
        }
        if vertices.is_empty() {
            return None;
        }
        Some(Polytope::new(vec![h.clone()], cube_constraints(r), vertices))
    }

    fn normals_rank(&self, tight: &[usize]) -> usize {
        let rows: Vec<Vec<Rational>> = self
            .equalities
            .iter()
            .chain(tight.iter().map(|&i| &self.inequalities[i]))
            .map(|h| h.normal.clone())
            .collect();
        let r = self.vertices[0].len();
        rank(&rows, r)
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        let common: Vec<usize> = self.tight[i]
            .iter()
            .filter(|k| self.tight[j].contains(k))
            .copied()
            .collect();
        self.normals_rank(&common) + 1 == self.vertices[0].len()
    }

    /// Pieces on the positive and negative side; `None` for an empty or
    /// lower-dimensional side.
    fn split(&self, h: &Hyperplane) -> (Option<Polytope>, Option<Polytope>) {
        let values: Vec<Rational> = self.vertices.iter().map(|v| h.eval(v)).collect();
        let pos = values.iter().any(|v| v.is_positive());
        let neg = values.iter().any(|v| v.is_negative());
        if !(pos && neg) {
            let whole = Some(self.clone());
            return if pos {
                (whole, None)
            } else if neg {
                (None, whole)
            } else {
                (None, None)
            };
        }
        let mut cut = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if values[i].is_zero() {
                cut.push(v.clone());
            }
        }
        for i in 0..self.vertices.len() {
            for j in 0..self.vertices.len() {
                if values[i].is_positive() && values[j].is_negative() && self.adjacent(i, j) {
                    cut.push(crossing(&self.vertices[i], &self.vertices[j], &values[i], &values[j]));
                }
            }
        }
        let side = |keep: &dyn Fn(&Rational) -> bool, bound: Hyperplane| {
            let mut verts: Vec<Vec<Rational>> = self
                .vertices
                .iter()
                .zip(&values)
                .filter(|(_, v)| keep(v))
                .map(|(x, _)| x.clone())
                .collect();
            verts.extend(cut.iter().cloned());
            let mut ineq = self.inequalities.clone();
            ineq.push(bound);
            Polytope::new(self.equalities.clone(), ineq, verts)
        };
        (
            Some(side(&|v: &Rational| v.is_positive(), h.clone())),
            Some(side(&|v: &Rational| v.is_negative(), h.negated())),
        )
    }

    /// Every face as (vertex indices, constraints tight on the whole face).
    fn faces(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut seen: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut queue = vec![all];
        while let Some(face) = queue.pop() {
            if seen.contains_key(&face) {
                continue;
            }
            let tight: Vec<usize> = (0..self.inequalities.len())
                .filter(|k| face.iter().all(|&v| self.tight[v].contains(k)))
                .collect();
            for k in 0..self.inequalities.len() {
                if tight.contains(&k) {
                    continue;
                }
                let sub: Vec<usize> = face.iter().copied().filter(|&v| self.tight[v].contains(&k)).collect();
                if !sub.is_empty() && !seen.contains_key(&sub) {
                    queue.push(sub);
                }
            }
            seen.insert(face, tight);
        }
        seen.into_iter().collect()
    }
}

/// A relatively open cell of the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    /// Sorted ids into [`CellComplex::vertices`].
    pub vertex_ids: Vec<usize>,
    pub dimension: usize,
    /// Hyperplanes containing the cell.
    pub equalities: Vec<Hyperplane>,
    /// Constraints strictly positive on the relative interior.
    pub inequalities: Vec<Hyperplane>,
    /// Indices of input hyperplanes containing the cell.
    pub on: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CellComplex {
    pub r: usize,
    pub hyperplanes: Vec<Hyperplane>,
    pub vertices: Vec<Vec<Rational>>,
    pub cells: Vec<Cell>,
}

fn affine_dimension(points: &[&Vec<Rational>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = points[0];
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&rows, base.len())
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
    }
    true
}

impl CellComplex {
    /// Decomposes the union of `hyperplanes` (deduplicated geometrically)
    /// inside `[0, 1]^r`.
    pub fn build(hyperplanes: &[Hyperplane], r: usize) -> CellComplex {
        let mut hs: Vec<Hyperplane> = hyperplanes.iter().map(|h| h.canonical()).collect();
        hs.sort();
        hs.dedup();
        let mut vertex_ids: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut cells: Vec<Cell> = Vec::new();
        let mut cell_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (hi, h) in hs.iter().enumerate() {
            let Some(start) = Polytope::hyperplane_in_cube(h, r) else {
                continue;
            };
            let mut pieces = vec![start];
            for (oi, other) in hs.iter().enumerate() {
                if oi == hi {
                    continue;
                }
                let mut next = Vec::with_capacity(pieces.len());
                for p in &pieces {
                    let (a, b) = p.split(other);
                    next.extend(a);
                    next.extend(b);
                }
                pieces = next;
            }
            for p in &pieces {
                let ids: Vec<usize> = p
                    .vertices
                    .iter()
                    .map(|v| {
                        *vertex_ids.entry(v.clone()).or_insert_with(|| {
                            vertices.push(v.clone());
                            vertices.len() - 1
                        })
                    })
                    .collect();
                for (face, tight) in p.faces() {
                    let mut key: Vec<usize> = face.iter().map(|&i| ids[i]).collect();
                    key.sort_unstable();
                    if cell_index.contains_key(&key) {
                        continue;
                    }
                    let pts: Vec<&Vec<Rational>> = face.iter().map(|&i| &p.vertices[i]).collect();
                    let mut equalities = p.equalities.clone();
                    let mut inequalities = Vec::new();
                    for (k, c) in p.inequalities.iter().enumerate() {
                        if tight.contains(&k) {
                            equalities.push(c.clone());
                        } else {
                            inequalities.push(c.clone());
                        }
                    }
                    cell_index.insert(key.clone(), cells.len());
                    cells.push(Cell {
                        dimension: affine_dimension(&pts),
                        vertex_ids: key,
                        equalities,
                        inequalities,
                        on: Vec::new(),
                    });
                }
            }
        }
        for cell in &mut cells {
            cell.on = hs
                .iter()
                .enumerate()
                .filter(|(_, h)| cell.vertex_ids.iter().all(|&v| h.contains(&vertices[v])))
                .map(|(i, _)| i)
                .collect();
        }
        CellComplex {
            r,
            hyperplanes: hs,
            vertices,
            cells,
        }
    }

    pub fn cell_vertices(&self, cell: usize) -> Vec<Vec<Rational>> {
        self.cells[cell]
            .vertex_ids
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect()
    }

    /// Vertex barycenter, a relative-interior point.
    pub fn centroid(&self, cell: usize) -> Vec<Rational> {
        let ids = &self.cells[cell].vertex_ids;
        let n = int(ids.len() as i64);
        (0..self.r)
            .map(|i| ids.iter().map(|&v| self.vertices[v][i].clone()).sum::<Rational>() / &n)
            .collect()
    }

    /// Closure of `a` is contained in the closure of `b`.
    pub fn is_face_of(&self, a: usize, b: usize) -> bool {
        is_subset(&self.cells[a].vertex_ids, &self.cells[b].vertex_ids)
    }

    pub fn in_closure(&self, cell: usize, x: &[Rational]) -> bool {
        let c = &self.cells[cell];
        c.equalities.iter().all(|h| h.contains(x)) && c.inequalities.iter().all(|h| !h.eval(x).is_negative())
    }

    pub fn in_relative_interior(&self, cell: usize, x: &[Rational]) -> bool {
        let c = &self.cells[cell];
        c.equalities.iter().all(|h| h.contains(x)) && c.inequalities.iter().all(|h| h.eval(x).is_positive())
    }

    /// The cell whose relative interior contains `x`.
    pub fn locate(&self, x: &[Rational]) -> Option<usize> {
        (0..self.cells.len()).find(|&c| self.in_relative_interior(c, x))
    }

    /// Lattice-normalized `(r-1)`-volume of a top-dimensional cell: a
    /// unimodular simplex in the lattice of its hyperplane has volume
    /// `1/(r-1)!`.
    pub fn normalized_volume(&self, cell: usize) -> Option<Rational> {
        let c = &self.cells[cell];
        if self.r < 2 || c.dimension + 1 != self.r {
            return None;
        }
        let h = &self.hyperplanes[*c.on.first()?];
        let faces: Vec<(Vec<usize>, usize)> = (0..self.cells.len())
            .filter(|&f| self.is_face_of(f, cell))
            .map(|f| (self.cells[f].vertex_ids.clone(), self.cells[f].dimension))
            .collect();
        let top = faces.iter().position(|(v, _)| *v == c.vertex_ids)?;
        Some(simplicial_volume(h, &faces, top, &self.vertices))
    }
}

/// Normalized volume of the polytope `{h = 0, g ≥ 0 for g in inequalities}`
/// with the given vertices; `None` unless it is `(r-1)`-dimensional.
pub fn polytope_volume(h: &Hyperplane, inequalities: &[Hyperplane], vertices: &[Vec<Rational>]) -> Option<Rational> {
    let r = h.normal.len();
    if r < 2 || vertices.is_empty() {
        return None;
    }
    let p = Polytope::new(vec![h.clone()], inequalities.to_vec(), vertices.to_vec());
    let faces: Vec<(Vec<usize>, usize)> = p
        .faces()
        .into_iter()
        .map(|(f, _)| {
            let pts: Vec<&Vec<Rational>> = f.iter().map(|&i| &p.vertices[i]).collect();
            let d = affine_dimension(&pts);
            (f, d)
        })
        .collect();
    let top = faces.iter().position(|(v, _)| v.len() == p.vertices.len())?;
    if faces[top].1 + 1 != r {
        return None;
    }
    Some(simplicial_volume(h, &faces, top, &p.vertices))
}

fn simplicial_volume(
    h: &Hyperplane,
    faces: &[(Vec<usize>, usize)],
    top: usize,
    vertices: &[Vec<Rational>],
) -> Rational {
    let normal = h.integer_normal();
    let drop = normal.iter().position(|a| !a.is_zero()).expect("nonzero normal");
    let mut simplices = Vec::new();
    triangulate(faces, top, &mut simplices);
    let d = normal.len() - 1;
    let project = |v: usize| -> Vec<Rational> {
        vertices[v]
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, q)| q.clone())
            .collect()
    };
    let mut total = Rational::zero();
    for s in &simplices {
        let p0 = project(s[0]);
        let m: Vec<Vec<Rational>> = s[1..]
            .iter()
            .map(|&v| project(v).iter().zip(&p0).map(|(a, b)| a - b).collect())
            .collect();
        total += determinant(&m).abs();
    }
    let factorial: i64 = (1..=d as i64).product();
    total / int(factorial) / Rational::from_integer(normal[drop].abs())
}

/// Pulling triangulation: cone from the first vertex over every facet that
/// avoids it.
fn triangulate(faces: &[(Vec<usize>, usize)], face: usize, out: &mut Vec<Vec<usize>>) {
    let (verts, dim) = &faces[face];
    if *dim == 0 {
        out.push(vec![verts[0]]);
        return;
    }
    let apex = verts[0];
    for (g, (gv, gd)) in faces.iter().enumerate() {
        if gd + 1 == *dim && is_subset(gv, verts) && !gv.contains(&apex) {
            let mut sub = Vec::new();
            triangulate(faces, g, &mut sub);
            for mut s in sub {
                s.insert(0, apex);
                out.push(s);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn line(a: i64, b: i64, c: i64) -> Hyperplane {
        Hyperplane::from_integers(&[a, b], int(c))
    }

    #[test]
    fn canonical_form() {
        let h = Hyperplane::from_integers(&[-10, -4], int(-5)).canonical();
        assert_eq!(h.normal, [int(5), int(2)]);
        assert_eq!(h.offset, frac(5, 2));
    }

    #[test]
    fn single_segment() {
        let cx = CellComplex::build(&[line(10, 4, 5)], 2);
        let tops: Vec<usize> = (0..cx.cells.len()).filter(|&c| cx.cells[c].dimension == 1).collect();
        assert_eq!(tops.len(), 1);
        assert_eq!(
            cx.cell_vertices(tops[0]),
            [vec![frac(1, 10), int(1)], vec![frac(1, 2), int(0)]]
        );
        assert_eq!(cx.normalized_volume(tops[0]), Some(frac(1, 5)));
        assert_eq!(cx.cells.len(), 3);
    }

    #[test]
    fn crossing_lines_split() {
        let cx = CellComplex::build(&[line(1, 1, 1), line(1, -1, 0)], 2);
        let tops = cx.cells.iter().filter(|c| c.dimension == 1).count();
        assert_eq!(tops, 4);
        let mid = cx.locate(&[frac(1, 2), frac(1, 2)]).unwrap();
        assert_eq!(cx.cells[mid].dimension, 0);
        assert_eq!(cx.cells[mid].on, [0, 1]);
    }

    #[test]
    fn simplex_volume_in_three_space() {
        // x + y + z = 1 in the cube is a unimodular triangle
        let cx = CellComplex::build(&[Hyperplane::from_integers(&[1, 1, 1], int(1))], 3);
        let top = cx.cells.iter().position(|c| c.dimension == 2).unwrap();
        assert_eq!(cx.normalized_volume(top), Some(frac(1, 2)));
        // x + y + z = 3/2 is a hexagon of normalized area 3/4
        let cx = CellComplex::build(&[Hyperplane::new(vec![int(1), int(1), int(1)], frac(3, 2))], 3);
        let top = cx.cells.iter().position(|c| c.dimension == 2).unwrap();
        assert_eq!(cx.cell_vertices(top).len(), 6);
        assert_eq!(cx.normalized_volume(top), Some(frac(3, 4)));
        let h = &cx.hyperplanes[0];
        let c = &cx.cells[top];
        let direct = polytope_volume(h, &c.inequalities, &cx.cell_vertices(top));
        assert_eq!(direct, Some(frac(3, 4)));
    }
}
