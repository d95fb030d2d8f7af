#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use qadj_core::rational::{frac, int};
use qadj_core::*;
use std::result::Result;

pub fn resolve(branches: &[&str]) -> ResolutionGraph {
    let ps = branches.iter().map(|b| parse_polynomial(b).unwrap()).collect();
    resolve_germ(&PlaneCurveGerm::new(ps).unwrap(), &ResolutionOptions::default()).unwrap()
}

pub fn resolve_with(branches: &[&str], options: &ResolutionOptions) -> ResolutionGraph {
    let ps = branches.iter().map(|b| parse_polynomial(b).unwrap()).collect();
    resolve_germ(&PlaneCurveGerm::new(ps).unwrap(), options).unwrap()
}

pub fn quintic_pair() -> ResolutionGraph {
    let germ = PlaneCurveGerm::from_product("(x^2+y^5)*(y^2+x^5)").unwrap();
    resolve_germ(&germ, &ResolutionOptions::default()).unwrap()
}

pub const LINES: [&str; 5] = ["x", "y", "x+y", "x-y", "x+2*y"];

pub fn ordinary(r: usize) -> ResolutionGraph {
    resolve(&LINES[..r])
}

pub const CUSP: &str = "x^2+y^3";
pub const SINGLE_BRANCH: [&str; 5] = ["x^2+y^3", "x^2+y^5", "x^2+y^7", "x^3+y^4", "x^3+y^5"];

/// Small fixtures used by the property suites.
pub fn fixtures() -> Vec<(&'static str, ResolutionGraph)> {
    vec![
        ("cusp", resolve(&[CUSP])),
        ("x^3+y^4", resolve(&["x^3+y^4"])),
        ("tacnode", resolve(&["y", "y-x^2"])),
        ("triple point", ordinary(3)),
        ("quintic pair", quintic_pair()),
    ]
}

/// Curve with the given multiplicity vector.
pub fn curve_with<'g>(g: &'g ResolutionGraph, a: &[u64]) -> &'g ExceptionalCurve {
    g.curves()
        .iter()
        .find(|c| c.a == a)
        .expect("curve with these multiplicities")
}

pub fn q(n: i64, d: i64) -> Rational {
    frac(n, d)
}

pub fn pt(xs: &[(i64, i64)]) -> Vec<Rational> {
    xs.iter().map(|&(n, d)| frac(n, d)).collect()
}

pub fn render_point(x: &[Rational]) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Thresholds of `𝒜`, `𝒜″` read off directly from the bound, as an
/// independent check of the library's signature.
pub fn thresholds(g: &ResolutionGraph, xi: &[Rational]) -> (Vec<u32>, Vec<u32>) {
    let mut strict = Vec::new();
    let mut weak = Vec::new();
    for c in g.curves() {
        let mut b = -int(c.c as i64 + 1);
        for (a, x) in c.a.iter().zip(xi) {
            b += int(*a as i64) * (Rational::one() - x);
        }
        let up = b.ceil().to_integer();
        let w = if up < BigInt::zero() {
            0
        } else {
            u32::try_from(up).unwrap()
        };
        let s = if b.is_integer() {
            let v = b.to_integer() + 1;
            if v < BigInt::zero() {
                0
            } else {
                u32::try_from(v).unwrap()
            }
        } else {
            w
        };
        strict.push(s);
        weak.push(w);
    }
    (strict, weak)
}

/// Number of points `p/n` with `p ∈ Z^r` on a closed face, for the
/// volume oracle (`r = 2` only).
pub fn lattice_points_on_face(face: &QAFace, n: i64) -> usize {
    let mut count = 0;
    for i in 0..=n {
        for j in 0..=n {
            let x = [frac(i, n), frac(j, n)];
            if face.contains(&x) {
                count += 1;
            }
        }
    }
    count
}

/// Characters of denominator at most `q` with total depth at least `d`,
/// by exhaustive search over `(0, 1)^2`.
pub fn brute_force_characters(g: &ResolutionGraph, d: usize, qb: i64) -> Vec<Vec<Rational>> {
    let mut fr = Vec::new();
    for n in 2..=qb {
        for p in 1..n {
            if num_integer::gcd(p, n) == 1 {
                fr.push(frac(p, n));
            }
        }
    }
    let mut out = Vec::new();
    for a in &fr {
        for b in &fr {
            let x = vec![a.clone(), b.clone()];
            if depth_terms(g, &x).unwrap().total() >= d {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

/// `Δ_1` of `x^p + y^q` with `gcd(p, q) = 1` as a root multiset:
/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_knot_delta(p: i64, qq: i64) -> AnglePolynomial {
    let n = p * qq;
    let roots = (1..n).filter(|k| k % p != 0 && k % qq != 0).map(|k| (frac(k, n), 1u64));
    AnglePolynomial::from_roots(roots)
}

/// Independent re-evaluation of the pullback order: returns `D` with
/// `ξ_i = (j_i + 1)/m_i`.
pub fn pullback_d(c: &ExceptionalCurve, j: &[u64], m: &[u64], e: u64) -> Rational {
    let mut d = int(e as i64 + c.c as i64 + 1);
    for i in 0..m.len() {
        d += frac((j[i] as i64 + 1 - m[i] as i64) * c.a[i] as i64, m[i] as i64);
    }
    d
}

/// All `(j, m)` arrays with `1 ≤ m_i ≤ bound`, `0 ≤ j_i < m_i`.
pub fn cover_grid(r: usize, bound: u64) -> Vec<(Vec<u64>, Vec<u64>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for _ in 0..r {
        let mut next = Vec::new();
        for (j, m) in &out {
            for mi in 1..=bound {
                for ji in 0..mi {
                    let mut j2 = j.clone();
                    let mut m2 = m.clone();
                    j2.push(ji);
                    m2.push(mi);
                    next.push((j2, m2));
                }
            }
        }
        out = next;
    }
    out
}

// Property checks shared by the proptest suites and the acceptance run.

pub fn check_ideal_chain(g: &ResolutionGraph, xi: &[Rational]) -> Result<(), String> {
    let t = ideal_triple_at(g, xi).map_err(|e| e.to_string())?;
    if !t.a_prime.contains(&t.a).unwrap() || !t.a_dprime.contains(&t.a_prime).unwrap() {
        return Err(format!("chain fails at {}", render_point(xi)));
    }
    let (strict, weak) = thresholds(g, xi);
    if t.signature.strict.0 != strict || t.signature.weak.0 != weak {
        return Err(format!("thresholds differ at {}", render_point(xi)));
    }
    if t.dim_dprime_a != t.dim_dprime_prime + t.dim_prime_a {
        return Err("quotient dimensions do not add".into());
    }
    Ok(())
}

pub fn check_truncation_stability(g: &ResolutionGraph, xi: &[Rational]) -> Result<(), String> {
    let base = ideal_triple_at(g, xi).map_err(|e| e.to_string())?;
    let wide = qadj_core::ideals::ideal_triple_with_slack(g, xi, 5).map_err(|e| e.to_string())?;
    if base.dims() != wide.dims() || !base.same_ideals(&wide) {
        return Err(format!("truncation changes the triple at {}", render_point(xi)));
    }
    Ok(())
}

pub fn check_additivity(
    g: &ResolutionGraph,
    k: usize,
    f: &BivariatePolynomial,
    h: &BivariatePolynomial,
) -> Result<(), String> {
    let of = ord_along(g, k, f).map_err(|e| e.to_string())?;
    let oh = ord_along(g, k, h).map_err(|e| e.to_string())?;
    let ofh = ord_along(g, k, &(f * h)).map_err(|e| e.to_string())?;
    if ofh != of + oh {
        return Err(format!("ord_E{k}({f} * {h}) = {ofh}, expected {of} + {oh}"));
    }
    Ok(())
}

pub type FaceSignature = (usize, Vec<Vec<Rational>>, (usize, usize, usize));

/// Point sets and quotient dimensions, independent of curve labels.
pub fn face_signature(faces: &[QAFace]) -> Vec<FaceSignature> {
    let mut out: Vec<_> = faces
        .iter()
        .map(|f| (f.dimension, f.vertices.clone(), f.triple.dims()))
        .collect();
    out.sort();
    out
}

/// `Ok(false)` when the chosen point is special and nothing was tested.
pub fn check_resolution_independence(branches: &[&str], curve: usize, s: i64) -> Result<bool, String> {
    let plain = resolve(branches);
    let opts = ResolutionOptions {
        extra_points: vec![(curve, int(s))],
        ..Default::default()
    };
    let ps = branches.iter().map(|b| parse_polynomial(b).unwrap()).collect();
    let extra = match resolve_germ(&PlaneCurveGerm::new(ps).unwrap(), &opts) {
        Ok(g) => g,
        Err(Error::InvalidFreePoint { .. }) => return Ok(false),
        Err(e) => return Err(e.to_string()),
    };
    if extra.curves().len() != plain.curves().len() + 1 {
        return Err("extra point did not add a curve".into());
    }
    let fo = FaceOptions::default();
    let a = enumerate_faces(&plain, &fo).map_err(|e| e.to_string())?;
    let b = enumerate_faces(&extra, &fo).map_err(|e| e.to_string())?;
    if face_signature(&a) != face_signature(&b) {
        return Err(format!("faces change after blowing up a point on E{curve}"));
    }
    if plain.r() == 1 {
        let (ha, hb) = (higher_alexander(&plain).unwrap(), higher_alexander(&extra).unwrap());
        if ha != hb {
            return Err("Hodge data change after an extra blow-up".into());
        }
    }
    Ok(true)
}

pub fn check_divisibility(g: &ResolutionGraph) -> Result<(), String> {
    let inv = higher_alexander(g).map_err(|e| e.to_string())?;
    for w in inv.deltas.windows(2) {
        if !w[1].divides(&w[0]) {
            return Err("Δ_{i+1} does not divide Δ_i".into());
        }
    }
    for d in &inv.data {
        for i in 1..6 {
            if d.exponent(i + 1) > d.exponent(i) {
                return Err(format!("exponent increases at κ = {}", d.kappa));
            }
        }
    }
    if !inv.delta(1).is_conjugation_symmetric() {
        return Err("Δ_1 roots not closed under conjugation".into());
    }
    Ok(())
}

/// `𝒜″` at a face point equals `𝒜` just inside, toward `(1, …, 1)`.
pub fn check_round_trip(g: &ResolutionGraph, face: &QAFace) -> Result<(), String> {
    let xi = &face.sample;
    let max_sum = g.curves().iter().map(|c| c.a_sum()).max().unwrap_or(1) as i64;
    let eps = frac(1, 1000 * max_sum);
    let inside: Vec<Rational> = xi.iter().map(|x| x + (Rational::one() - x) * &eps).collect();
    let at = ideal_triple_at(g, xi).map_err(|e| e.to_string())?;
    let near = ideal_triple_at(g, &inside).map_err(|e| e.to_string())?;
    let n = at.a.space().order().max(near.a.space().order());
    let lhs = at.a_dprime.extend_ideal(n).unwrap();
    let rhs = near.a.extend_ideal(n).unwrap();
    if lhs != rhs {
        return Err(format!("𝒜″ at {} differs from 𝒜 nearby", render_point(xi)));
    }
    Ok(())
}

pub fn check_pullback_grid(g: &ResolutionGraph, bound: u64, e_max: u64) -> Result<usize, String> {
    let mut checked = 0;
    for (j, m) in cover_grid(g.r(), bound) {
        let xi: Vec<Rational> = j
            .iter()
            .zip(&m)
            .map(|(&ji, &mi)| frac(ji as i64 + 1, mi as i64))
            .collect();
        let (strict, weak) = thresholds(g, &xi);
        for (idx, c) in g.curves().iter().enumerate() {
            for e in 0..=e_max {
                let datum = pullback_order_on_cover(g, c.id, &j, &m, e).map_err(|e| e.to_string())?;
                let d = pullback_d(c, &j, &m, e);
                let scaled = &d * int(datum.ramification as i64);
                if !scaled.is_integer() {
                    return Err(format!("non-integral order on E{} for j={j:?} m={m:?}", c.id));
                }
                if Rational::from_integer(datum.value.clone()) != scaled - Rational::one() {
                    return Err("value disagrees with the independent formula".into());
                }
                if g.r() == 2 && Rational::from_integer(datum.value.clone()) != datum.normalized_by_gcds {
                    return Err("gcd normalization disagrees for r = 2".into());
                }
                let holomorphic = datum.value >= BigInt::zero();
                let log_pole = datum.value >= -BigInt::one();
                if holomorphic != (e >= strict[idx] as u64) || log_pole != (e >= weak[idx] as u64) {
                    return Err(format!("pole order mismatch on E{} at j={j:?} m={m:?} e={e}", c.id));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
