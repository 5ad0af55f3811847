use num_traits::{Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// Deterministic, re-parseable text form of a polynomial.
///
/// Terms are ordered lexicographically with the last variable most
/// significant, so the Clifford potential renders as
/// `x^-1*y^-1 + x + y`. Gaussian coefficients are parenthesized.
pub fn render(f: &LaurentPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.vars();
    // `i` as a literal suffix stays unambiguous even if a variable is named i
    let star_i = vars.index_of("i").is_none();
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by(|a, b| a.0.colex_key().cmp(&b.0.colex_key()));

    let mut out = String::new();
    for (idx, (e, c)) in terms.into_iter().enumerate() {
        let mono: Vec<String> = e
            .as_slice()
            .iter()
            .zip(vars.iter())
            .filter(|(k, _)| **k != 0)
            .map(|(k, name)| match k {
                1 => name.clone(),
                k => format!("{name}^{k}"),
            })
            .collect();
        let mono = mono.join("*");
        let negative = c.is_negative_rational();
        let mag = if negative { -c } else { c.clone() };
        let body = if mono.is_empty() {
            scalar_text(&mag, star_i)
        } else if mag.is_one() {
            mono
        } else {
            format!("{}*{mono}", scalar_text(&mag, star_i))
        };
        match (idx, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

fn scalar_text(c: &Scalar, star_i: bool) -> String {
    match c {
        Scalar::Rational(q) => q.to_string(),
        Scalar::Gaussian(z) => {
            let unit = if star_i { "*i" } else { "i" };
            let im = z.im.abs();
            match (z.re.is_zero(), z.im.is_negative()) {
                (true, false) => format!("({im}{unit})"),
                (true, true) => format!("(-{im}{unit})"),
                (false, false) => format!("({}+{im}{unit})", z.re),
                (false, true) => format!("({}-{im}{unit})", z.re),
            }
        }
    }
}
