//! Face diagrams in the unit square.

use std::fmt::Write;

use num_traits::ToPrimitive;
use qadj_core::polytopes::reflect;
use qadj_core::{QAFace, Rational};

const SIDE: f64 = 400.0;
const MARGIN: f64 = 40.0;

fn px(p: &[Rational]) -> (f64, f64) {
    let x = p[0].to_f64().unwrap_or(0.0);
    let y = p[1].to_f64().unwrap_or(0.0);
    (MARGIN + SIDE * x, MARGIN + SIDE * (1.0 - y))
}

fn draw(s: &mut String, vertices: &[Vec<Rational>], attrs: &str) {
    match vertices {
        [] => {}
        [v] => {
            let (x, y) = px(v);
            let _ = writeln!(s, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3.5" {attrs}/>"#);
        }
        [a, .., b] => {
            let (x1, y1) = px(a);
            let (x2, y2) = px(b);
            let _ = writeln!(
                s,
                r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {attrs}/>"#
            );
        }
    }
}

/// Faces as segments and points, their reflections under `x ↦ 𝟙 - x`
/// dashed, each face labelled with `dim 𝒜″/𝒜`. Expects `r = 2`.
pub fn face_diagram(faces: &[QAFace], title: &str) -> String {
    let full = SIDE + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{full}" height="{full}" viewBox="0 0 {full} {full}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, "  <title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        r#"  <rect x="{MARGIN}" y="{MARGIN}" width="{SIDE}" height="{SIDE}" fill="none" stroke="black"/>"#
    );
    let lo = MARGIN + SIDE + 14.0;
    let _ = writeln!(s, r#"  <text x="{MARGIN}" y="{lo}" text-anchor="middle">0</text>"#);
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{lo}" text-anchor="middle">1</text>"#,
        MARGIN + SIDE
    );
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{lo}" text-anchor="middle">x1</text>"#,
        MARGIN + SIDE / 2.0
    );
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{}" text-anchor="end">1</text>"#,
        MARGIN - 6.0,
        MARGIN + 4.0
    );
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{}" text-anchor="end">x2</text>"#,
        MARGIN - 6.0,
        MARGIN + SIDE / 2.0
    );
    for f in faces {
        let mut mirrored: Vec<Vec<Rational>> = f.vertices.iter().map(|v| reflect(v)).collect();
        mirrored.sort();
        draw(
            &mut s,
            &mirrored,
            r##"fill="#999" stroke="#999" stroke-dasharray="4 3""##,
        );
    }
    for f in faces {
        let color = if f.is_weight_one() { "#c0392b" } else { "#1f4e9c" };
        draw(
            &mut s,
            &f.vertices,
            &format!(r#"fill="{color}" stroke="{color}" stroke-width="2""#),
        );
    }
    for f in faces {
        let (x, y) = px(&f.sample);
        let _ = writeln!(
            s,
            r#"  <text x="{:.2}" y="{:.2}">{}</text>"#,
            x + 4.0,
            y - 4.0,
            f.triple.dims().2
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
