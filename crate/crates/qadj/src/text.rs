//! Exact textual forms shared by the reports.

use qadj_core::rational::{fract, int};
use qadj_core::{BivariatePolynomial, JetSubspace, Monomial, Rational, SubtorusEquation};

pub fn rat(q: &Rational) -> String {
    q.to_string()
}

pub fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat).collect()
}

pub fn tuple(v: &[Rational]) -> String {
    format!("({})", rats(v).join(", "))
}

/// `exp(2*pi*i * p/q)`, followed by the algebraic value when `q ≤ 4`.
pub fn root_of_unity(angle: &Rational) -> String {
    let a = fract(angle);
    let (p, q) = (a.numer().to_string(), a.denom().to_string());
    let exp = if a == int(0) {
        "exp(2*pi*i * 0)".to_string()
    } else {
        format!("exp(2*pi*i * {p}/{q})")
    };
    let exact = match (p.as_str(), q.as_str()) {
        ("0", _) => Some("1"),
        ("1", "2") => Some("-1"),
        ("1", "3") => Some("(-1 + sqrt(3)*i)/2"),
        ("2", "3") => Some("(-1 - sqrt(3)*i)/2"),
        ("1", "4") => Some("i"),
        ("3", "4") => Some("-i"),
        _ => None,
    };
    match exact {
        Some(e) => format!("{exp} = {e}"),
        None => exp,
    }
}

/// The value alone: the algebraic form when there is one.
pub fn root_value(angle: &Rational) -> String {
    let s = root_of_unity(angle);
    match s.split_once(" = ") {
        Some((_, v)) => v.to_string(),
        None => s,
    }
}

/// `t1^5*t2^2 = -1`; negative exponents print as `t2^(-3)`.
pub fn subtorus_equation(eq: &SubtorusEquation) -> String {
    let mut parts = Vec::new();
    for (i, e) in eq.exponents.iter().enumerate() {
        let e = e.to_string();
        match e.as_str() {
            "0" => {}
            "1" => parts.push(format!("t{}", i + 1)),
            _ if e.starts_with('-') => parts.push(format!("t{}^({e})", i + 1)),
            _ => parts.push(format!("t{}^{e}", i + 1)),
        }
    }
    let lhs = if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    };
    format!("{lhs} = {}", root_value(&eq.angle))
}

/// `10*x1 + 4*x2` followed by the relation and the right-hand side.
pub fn linear_form(coeffs: &[Rational], rel: &str, rhs: &Rational) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if *c == int(0) {
            continue;
        }
        let neg = *c < int(0);
        let mag = if neg { -c.clone() } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mag != int(1) {
            s.push_str(&format!("{mag}*"));
        }
        s.push_str(&format!("x{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    format!("{s} {rel} {}", rat(rhs))
}

pub fn monomial(m: Monomial) -> String {
    let v = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [v("x", m.x), v("y", m.y)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Minimal generators. Non-monomial ideals print a basis of their image
/// modulo `m^N` followed by `m^N`.
pub fn ideal_generators(ideal: &JetSubspace) -> Vec<String> {
    match ideal.monomial_generators() {
        Some(mut gens) => {
            gens.sort_by_key(|m| (m.x + m.y, m.y));
            gens.into_iter().map(monomial).collect()
        }
        None => ideal
            .basis_polynomials()
            .iter()
            .map(|p: &BivariatePolynomial| p.to_string())
            .chain(std::iter::once(format!("m^{}", ideal.space().order())))
            .collect(),
    }
}

/// `(x, y)` style rendering.
pub fn ideal(ideal: &JetSubspace) -> String {
    format!("({})", ideal_generators(ideal).join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use qadj_core::rational::frac;
    use qadj_core::JetSpace;

    #[test]
    fn roots_of_unity() {
        assert_eq!(root_of_unity(&frac(1, 2)), "exp(2*pi*i * 1/2) = -1");
        assert_eq!(root_of_unity(&frac(3, 4)), "exp(2*pi*i * 3/4) = -i");
        assert_eq!(root_of_unity(&frac(1, 6)), "exp(2*pi*i * 1/6)");
        assert_eq!(root_of_unity(&frac(7, 6)), "exp(2*pi*i * 1/6)");
        assert_eq!(root_value(&int(1)), "1");
    }

    #[test]
    fn equations() {
        let eq = SubtorusEquation {
            exponents: vec![5.into(), 2.into()],
            angle: frac(1, 2),
        };
        assert_eq!(subtorus_equation(&eq), "t1^5*t2^2 = -1");
        let eq = SubtorusEquation {
            exponents: vec![1.into(), (-3).into()],
            angle: frac(1, 5),
        };
        assert_eq!(subtorus_equation(&eq), "t1*t2^(-3) = exp(2*pi*i * 1/5)");
    }

    #[test]
    fn forms() {
        let c = [int(10), int(4)];
        assert_eq!(linear_form(&c, "=", &int(7)), "10*x1 + 4*x2 = 7");
        assert_eq!(
            linear_form(&[Rational::one(), -int(1)], ">=", &frac(1, 2)),
            "x1 - x2 >= 1/2"
        );
    }

    #[test]
    fn maximal_ideal() {
        let space = JetSpace::new(3);
        let m = JetSubspace::from_monomials(space, space.monomials().filter(|m| m.x + m.y >= 1));
        assert_eq!(ideal(&m), "(x, y)");
    }
}
