//! One builder per subcommand. Each returns the structured result and a
//! human-readable view of it.

use std::fmt::Write;

use qadj_core::rational::int;
use qadj_core::{
    acampo_delta1, assemble_components, character_multiplicity, components_of_depth, conjugate_face,
    constants_of_quasiadjunction, enumerate_faces, face_volume, higher_alexander, log_canonical_region,
    multiplier_ideal, semicontinuity_compare, standard_lct_ray, total_face_volume, AnglePolynomial,
    CharacterOfFiniteOrder, FaceOptions, IdealTriple, QAFace, Rational, ResolutionGraph, SemicontinuityReport,
    TranslatedSubtorusComponent,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::graph_doc::{to_dot, GraphDoc};
use crate::svg::face_diagram;
use crate::text::{ideal, linear_form, rat, rats, root_of_unity, subtorus_equation, tuple};

pub struct Built {
    pub result: Value,
    pub human: String,
    /// DOT or SVG, for the formats that want raw output.
    pub raw: Option<String>,
}

fn triple_json(t: &IdealTriple) -> Value {
    let (dp, pa, da) = t.dims();
    json!({
        "dim_a_dprime_over_a_prime": dp,
        "dim_a_prime_over_a": pa,
        "dim_a_dprime_over_a": da,
        "a": ideal(&t.a),
        "a_prime": ideal(&t.a_prime),
        "a_dprime": ideal(&t.a_dprime),
    })
}

pub fn resolve(g: &ResolutionGraph) -> Built {
    let doc = GraphDoc::from_graph(g, true);
    let dot = to_dot(g);
    let mut h = format!("resolution: {} exceptional curves, r = {}\n", g.curves().len(), g.r());
    for c in g.curves() {
        let a: Vec<String> = c.a.iter().map(|v| v.to_string()).collect();
        let adj: Vec<String> = c.adjacent.iter().map(|v| format!("E{v}")).collect();
        let _ = write!(
            h,
            "  E{:<3} a=({})  c={}  euler={}",
            c.id,
            a.join(","),
            c.c,
            c.open_euler
        );
        if !adj.is_empty() {
            let _ = write!(h, "  meets {}", adj.join(" "));
        }
        for b in &c.branch_contacts {
            let _ = write!(h, "  f{}", b + 1);
        }
        h.push('\n');
    }
    Built {
        result: json!({ "graph": doc, "dot": dot }),
        human: h,
        raw: Some(dot),
    }
}

fn face_list(g: &ResolutionGraph, r_limit: usize) -> Result<Vec<QAFace>, CliError> {
    Ok(enumerate_faces(g, &FaceOptions { r_limit })?)
}

pub fn faces(g: &ResolutionGraph, r_limit: usize) -> Result<Built, CliError> {
    let faces = face_list(g, r_limit)?;
    let mut items = Vec::new();
    let mut h = format!("{} faces of quasiadjunction\n", faces.len());
    for (i, f) in faces.iter().enumerate() {
        let volume = face_volume(f).ok();
        let conj = conjugate_face(f, &faces).matches.map(|j| j + 1);
        let supporting: Vec<Value> = f
            .supporting
            .iter()
            .map(|s| {
                let n: Vec<Rational> = s.normal.iter().map(|&a| int(a as i64)).collect();
                json!({
                    "curve": s.curve,
                    "e": s.e,
                    "normal": s.normal,
                    "offset": rat(&s.offset),
                    "equation": linear_form(&n, "=", &s.offset),
                })
            })
            .collect();
        let inequalities: Vec<String> = f
            .inequalities
            .iter()
            .map(|q| linear_form(&q.normal, ">=", &q.offset))
            .collect();
        items.push(json!({
            "index": i + 1,
            "dimension": f.dimension,
            "supporting": supporting,
            "vertices": f.vertices.iter().map(|v| rats(v)).collect::<Vec<_>>(),
            "inequalities": inequalities,
            "sample": rats(&f.sample),
            "triple": triple_json(&f.triple),
            "weight_one": f.is_weight_one(),
            "volume": volume.as_ref().map(rat),
            "conjugate": conj,
        }));
        let eqs: Vec<String> = supporting
            .iter()
            .map(|s| s["equation"].as_str().unwrap_or("").to_string())
            .collect();
        let verts: Vec<String> = f.vertices.iter().map(|v| tuple(v)).collect();
        let (dp, pa, da) = f.triple.dims();
        let _ = writeln!(
            h,
            "  #{:<3} dim {}  {}\n       vertices {}\n       dims {dp}/{pa}/{da}  volume {}  A = {}  A' = {}  A'' = {}{}",
            i + 1,
            f.dimension,
            eqs.join(", "),
            verts.join(" "),
            volume.as_ref().map(rat).unwrap_or_else(|| "-".into()),
            ideal(&f.triple.a),
            ideal(&f.triple.a_prime),
            ideal(&f.triple.a_dprime),
            if f.is_weight_one() { "  weight one" } else { "" },
        );
    }
    let total = total_face_volume(&faces);
    let _ = writeln!(h, "total volume {}", rat(&total));
    Ok(Built {
        result: json!({ "count": faces.len(), "faces": items, "total_volume": rat(&total) }),
        human: h,
        raw: None,
    })
}

fn component_json(c: &TranslatedSubtorusComponent) -> Value {
    let exact: Vec<Value> = c
        .equations
        .iter()
        .map(|e| {
            json!({
                "exponents": e.exponents.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "angle": rat(&e.angle),
            })
        })
        .collect();
    json!({
        "equations": c.equations.iter().map(subtorus_equation).collect::<Vec<_>>(),
        "exact": exact,
        "dimension": c.dimension,
        "depth": c.depth,
        "essential": c.essential,
    })
}

fn component_line(c: &TranslatedSubtorusComponent) -> String {
    let eqs: Vec<String> = c.equations.iter().map(subtorus_equation).collect();
    format!(
        "  {}  dim {}  depth {}{}\n",
        if eqs.is_empty() {
            "whole torus".to_string()
        } else {
            eqs.join(", ")
        },
        c.dimension,
        c.depth,
        if c.essential { "  essential" } else { "" }
    )
}

pub fn charvar(g: &ResolutionGraph, r_limit: usize, depth: Option<usize>, qbound: u32) -> Result<Built, CliError> {
    let opts = FaceOptions { r_limit };
    let comps = assemble_components(g, &opts)?;
    let mut h = format!("{} components\n", comps.len());
    for c in &comps {
        h.push_str(&component_line(c));
    }
    let mut result = json!({ "components": comps.iter().map(component_json).collect::<Vec<_>>() });
    if let Some(d) = depth {
        let at = components_of_depth(g, d, &opts)?;
        let chars =
            qadj_core::charvar::characters_of_depth_with_limit(g, d, qbound, qadj_core::charvar::DEFAULT_Q_LIMIT)
                .map_err(|e| CliError::from(e).with_fragment(format!("--qbound {qbound}")))?;
        let _ = writeln!(h, "{} components of depth >= {d}", at.len());
        for c in &at {
            h.push_str(&component_line(c));
        }
        let _ = writeln!(
            h,
            "{} characters of depth >= {d} with denominators <= {qbound}",
            chars.len()
        );
        let mut listed = Vec::new();
        for chi in &chars {
            let item = character_json(g, chi)?;
            let _ = writeln!(
                h,
                "  {}  F1 {}  W0 {}",
                tuple(chi.angles()),
                item["mult_f1"],
                item["mult_w0"]
            );
            listed.push(item);
        }
        result["depth"] = json!({
            "d": d,
            "qbound": qbound,
            "components": at.iter().map(component_json).collect::<Vec<_>>(),
            "count": chars.len(),
            "characters": listed,
        });
    }
    Ok(Built {
        result,
        human: h,
        raw: None,
    })
}

fn character_json(g: &ResolutionGraph, chi: &CharacterOfFiniteOrder) -> Result<Value, CliError> {
    let cover: Vec<u64> = chi
        .angles()
        .iter()
        .map(|q| q.denom().to_string().parse().unwrap_or(1))
        .collect();
    let rep = character_multiplicity(g, chi, &cover)?;
    Ok(json!({
        "angles": rats(chi.angles()),
        "values": chi.angles().iter().map(root_of_unity).collect::<Vec<_>>(),
        "order": chi.order().to_string(),
        "cover": cover,
        "mult_f1": rep.mult_f1,
        "mult_w0": rep.mult_w0,
    }))
}

fn angle_poly_json(p: &AnglePolynomial) -> Value {
    let roots: Vec<Value> = p
        .roots()
        .map(|(a, m)| json!({ "angle": rat(a), "value": root_of_unity(a), "multiplicity": m }))
        .collect();
    json!({ "polynomial": p.render("t"), "degree": p.degree(), "roots": roots })
}

fn angle_poly_text(p: &AnglePolynomial) -> String {
    p.render("t").unwrap_or_else(|| {
        let parts: Vec<String> = p
            .roots()
            .map(|(a, m)| format!("(t - {})^{m}", root_of_unity(a)))
            .collect();
        parts.join(" ")
    })
}

pub fn alexander(g: &ResolutionGraph) -> Result<Built, CliError> {
    let constants = constants_of_quasiadjunction(g)?;
    let inv = higher_alexander(g)?;
    let oracle = acampo_delta1(g)?;
    let agrees = oracle == inv.delta(1);
    let mut h = String::from("constants of quasiadjunction\n");
    for (k, t) in &constants {
        let (dp, pa, da) = t.dims();
        let _ = writeln!(h, "  {}  dims {dp}/{pa}/{da}", rat(k));
    }
    h.push_str("eigenvalues\n");
    let mut eig = Vec::new();
    for d in &inv.data {
        let exps: Vec<usize> = (1..=inv.deltas.len()).map(|i| d.exponent(i)).collect();
        let _ = writeln!(
            h,
            "  {}  h00 {}  h10 {}  h01 {}  exponents {:?}",
            root_of_unity(&d.kappa),
            d.h00,
            d.h10,
            d.h01,
            exps
        );
        eig.push(json!({
            "kappa": rat(&d.kappa),
            "value": root_of_unity(&d.kappa),
            "h00": d.h00,
            "h10": d.h10,
            "h01": d.h01,
            "exponents": exps,
        }));
    }
    for (i, p) in inv.deltas.iter().enumerate() {
        let _ = writeln!(h, "Delta_{} = {}", i + 1, angle_poly_text(p));
    }
    let _ = writeln!(
        h,
        "zeta function check: {} ({})",
        if agrees { "agrees" } else { "DISAGREES" },
        angle_poly_text(&oracle)
    );
    let consts: Vec<Value> = constants
        .iter()
        .map(|(k, t)| json!({ "kappa": rat(k), "triple": triple_json(t) }))
        .collect();
    Ok(Built {
        result: json!({
            "constants": consts,
            "eigenvalues": eig,
            "deltas": inv.deltas.iter().map(angle_poly_json).collect::<Vec<_>>(),
            "zeta_check": { "delta1": angle_poly_json(&oracle), "agrees": agrees },
        }),
        human: h,
        raw: None,
    })
}

pub fn lct(g: &ResolutionGraph, direction: Option<&[Rational]>) -> Result<Built, CliError> {
    let region = log_canonical_region(g);
    let ones = vec![int(1); g.r()];
    let ray = standard_lct_ray(g, direction.unwrap_or(&ones))?;
    let mut h = String::from("log-canonical region in (0, 1]^r\n");
    let mut half = Vec::new();
    for (c, (a, b)) in g.curves().iter().zip(&region.half_spaces) {
        let n: Vec<Rational> = a.iter().map(|&v| int(v as i64)).collect();
        let s = linear_form(&n, ">=", b);
        let _ = writeln!(h, "  E{:<3} {s}", c.id);
        half.push(json!({ "curve": c.id, "inequality": s }));
    }
    let _ = writeln!(
        h,
        "ray {}: threshold {}  region coordinate {}  kappa {}  exit point {}",
        tuple(&ray.direction),
        rat(&ray.standard),
        rat(&ray.region_gamma),
        rat(&ray.kappa),
        tuple(&ray.boundary_point)
    );
    Ok(Built {
        result: json!({
            "region": half,
            "ray": {
                "direction": rats(&ray.direction),
                "standard": rat(&ray.standard),
                "region_gamma": rat(&ray.region_gamma),
                "kappa": rat(&ray.kappa),
                "boundary_point": rats(&ray.boundary_point),
            },
        }),
        human: h,
        raw: None,
    })
}

pub fn multiplier(g: &ResolutionGraph, gamma: &[Rational]) -> Result<Built, CliError> {
    let j = multiplier_ideal(g, gamma)?;
    let gens = crate::text::ideal_generators(&j);
    let h = format!("J{} = ({})\ncolength {}\n", tuple(gamma), gens.join(", "), j.codim());
    Ok(Built {
        result: json!({
            "gamma": rats(gamma),
            "generators": gens,
            "colength": j.codim(),
            "jet_order": j.space().order(),
            "monomial": j.is_monomial(),
        }),
        human: h,
        raw: None,
    })
}

pub fn semicont(general: &ResolutionGraph, special: &ResolutionGraph, r_limit: usize) -> Result<Built, CliError> {
    let rep: SemicontinuityReport = semicontinuity_compare(general, special, &FaceOptions { r_limit })?;
    let side = |s: &qadj_core::polytopes::SemicontinuitySide| json!({ "essential_components": s.essential_components, "total_volume": rat(&s.total_volume) });
    let h = format!(
        "essential components {} <= {}: {}\ntotal face volume {} <= {}: {}\nverdict: {}\n",
        rep.general.essential_components,
        rep.special.essential_components,
        rep.components_ok,
        rat(&rep.general.total_volume),
        rat(&rep.special.total_volume),
        rep.volume_ok,
        if rep.passes() { "pass" } else { "fail" }
    );
    Ok(Built {
        result: json!({
            "general": side(&rep.general),
            "special": side(&rep.special),
            "components_ok": rep.components_ok,
            "volume_ok": rep.volume_ok,
            "passes": rep.passes(),
        }),
        human: h,
        raw: None,
    })
}

pub fn plot(g: &ResolutionGraph, r_limit: usize, title: &str) -> Result<Built, CliError> {
    if g.r() != 2 {
        return Err(
            CliError::input("diagram-requires-r2", "diagram requires r = 2").with_fragment(format!("r = {}", g.r()))
        );
    }
    let faces = face_list(g, r_limit)?;
    let svg = face_diagram(&faces, title);
    Ok(Built {
        result: json!({ "svg": svg }),
        human: svg.clone(),
        raw: Some(svg),
    })
}
