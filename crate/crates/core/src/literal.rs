//! Text form of algebra elements.
//!
//! Two syntaxes are accepted: a signed sum over basis labels such as
//! `1+2i-3j+4k` or `(1/2 - k)`, and a coordinate list `[1,2,-3,4]`. The label
//! of the unit may be omitted after a coefficient, so `3` means `3*1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Element};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiteralError {
    #[error("empty literal")]
    Empty,
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("expected {expected} coordinates, found {found}")]
    WrongLength { expected: usize, found: usize },
}

pub fn parse_element<S: Scalar>(alg: &Algebra<S>, text: &str) -> Result<Element<S>, LiteralError> {
    let mut s = text.trim();
    while let Some(inner) = strip_enclosing_parens(s) {
        s = inner.trim();
    }
    if s.is_empty() {
        return Err(LiteralError::Empty);
    }
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        return parse_coords(alg, inner);
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    // labels such as `e1` would be ambiguous with exponents
    let exponents = !alg.labels().iter().any(|l| l.starts_with(['e', 'E']));
    let mut coords: Vec<S> = (0..alg.dim()).map(|_| S::zero()).collect();
    for term in split_terms(&compact, exponents) {
        let (neg, body) = match term.as_bytes()[0] {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        let (num, label) = split_number(body, exponents);
        let value = if num.is_empty() {
            S::one()
        } else {
            S::parse(num).ok_or_else(|| LiteralError::BadNumber(String::from(num)))?
        };
        let index = if label.is_empty() {
            alg.unit_index()
        } else {
            alg.labels()
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| LiteralError::UnknownLabel(String::from(label)))?
        };
        if num.is_empty() && label.is_empty() {
            return Err(LiteralError::BadNumber(String::from(term)));
        }
        let value = if neg { -value } else { value };
        coords[index] = coords[index].clone() + value;
    }
    Ok(Element::new(coords))
}

fn parse_coords<S: Scalar>(alg: &Algebra<S>, inner: &str) -> Result<Element<S>, LiteralError> {
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != alg.dim() {
        return Err(LiteralError::WrongLength {
            expected: alg.dim(),
            found: parts.len(),
        });
    }
    let coords = parts
        .iter()
        .map(|p| S::parse(p).ok_or_else(|| LiteralError::BadNumber(String::from(*p))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Element::new(coords))
}

fn strip_enclosing_parens(s: &str) -> Option<&str> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then_some(inner)
}

/// Splits at `+`/`-` signs that start a new term (not exponent signs, not
/// inside parentheses).
fn split_terms(s: &str, exponents: bool) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut depth = 0i32;
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        if i == 0 || depth != 0 {
            continue;
        }
        let is_sign = bytes[i] == b'+' || bytes[i] == b'-';
        let after_exp =
            exponents && matches!(bytes[i - 1], b'e' | b'E') && i >= 2 && bytes[i - 2].is_ascii_digit();
        if is_sign && !after_exp {
            out.push(&s[start..i]);
            start = i;
        }
    }
    out.push(&s[start..]);
    out
}

/// Leading numeric part (digits, `.`, `/`, exponent, or a parenthesized
/// number) and the trailing label.
fn split_number(s: &str, exponents: bool) -> (&str, &str) {
    if let Some(rest) = s.strip_prefix('(') {
        if let Some(close) = rest.find(')') {
            return (&rest[..close], &rest[close + 1..]);
        }
    }
    let bytes = s.as_bytes();
    let mut end = 0;
    while end < bytes.len() {
        let c = bytes[end];
        let exp = exponents
            && matches!(c, b'e' | b'E')
            && end > 0
            && bytes[end - 1].is_ascii_digit()
            && bytes.get(end + 1).is_some_and(|n| n.is_ascii_digit() || *n == b'-' || *n == b'+');
        if c.is_ascii_digit() || c == b'.' || c == b'/' || exp {
            end += 1;
            if exp {
                end += 1;
            }
        } else {
            break;
        }
    }
    (&s[..end], &s[end..])
}

/// `1+2i-3j+4k` style text using the algebra's labels; the unit label is
/// dropped. Non-integer coefficients are wrapped in parentheses.
pub fn format_element<S: Scalar>(alg: &Algebra<S>, x: &Element<S>) -> String {
    let mut out = String::new();
    for (idx, c) in x.coords().iter().enumerate() {
        if c.is_zero_tol(0.0) {
            continue;
        }
        let (neg, mag) = if c.is_negative() { (true, -c.clone()) } else { (false, c.clone()) };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let is_unit = idx == alg.unit_index();
        let label = alg.labels().get(idx).map_or("", String::as_str);
        let mag_text = format!("{mag}");
        if is_unit {
            out.push_str(&mag_text);
        } else if mag == S::one() {
            out.push_str(label);
        } else if mag_text.chars().all(|ch| ch.is_ascii_digit()) {
            out.push_str(&mag_text);
            out.push_str(label);
        } else {
            out.push_str(&format!("({mag_text}){label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::hamilton;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn parses_signed_sums() {
        let h = hamilton::<Q>();
        assert_eq!(parse_element(&h, "1+2i-3j+4k").unwrap(), Element::from_i64s(&[1, 2, -3, 4]));
        assert_eq!(parse_element(&h, "(1+k)").unwrap(), Element::from_i64s(&[1, 0, 0, 1]));
        assert_eq!(parse_element(&h, "-i + 2*j").unwrap(), Element::from_i64s(&[0, -1, 2, 0]));
        assert_eq!(parse_element(&h, "k - 3").unwrap(), Element::from_i64s(&[-3, 0, 0, 1]));
        assert_eq!(parse_element(&h, "1").unwrap(), h.unit());
        let half = parse_element(&h, "1/2i").unwrap();
        assert_eq!(half.coords()[1], Q::from_i64(1) / Q::from_i64(2));
        assert_eq!(parse_element(&h, "i+i").unwrap(), Element::from_i64s(&[0, 2, 0, 0]));
    }

    #[test]
    fn parses_coordinate_lists() {
        let h = hamilton::<Q>();
        assert_eq!(parse_element(&h, "[1,2,-3,4]").unwrap(), Element::from_i64s(&[1, 2, -3, 4]));
        assert_eq!(
            parse_element(&h, "[1,2]").unwrap_err(),
            LiteralError::WrongLength { expected: 4, found: 2 }
        );
    }

    #[test]
    fn float_literals() {
        let h = hamilton::<f64>();
        let x = parse_element(&h, "0.5-1e-3i+2.5E+1k").unwrap();
        assert_eq!(x.coords(), &[0.5, -1e-3, 0.0, 25.0]);
    }

    #[test]
    fn rejects_garbage() {
        let h = hamilton::<Q>();
        assert_eq!(parse_element(&h, "").unwrap_err(), LiteralError::Empty);
        assert_eq!(parse_element(&h, "2q").unwrap_err(), LiteralError::UnknownLabel("q".into()));
        assert!(parse_element(&h, "1+").is_err());
        assert!(parse_element(&h, "[1,x,0,0]").is_err());
    }

    #[test]
    fn formats_with_labels() {
        let h = hamilton::<Q>();
        let fmt = |v: &[i64]| format_element(&h, &Element::from_i64s(v));
        assert_eq!(fmt(&[1, 2, -3, 4]), "1+2i-3j+4k");
        assert_eq!(fmt(&[0, -1, 0, 1]), "-i+k");
        assert_eq!(fmt(&[0, 0, 0, 0]), "0");
        let x = Element::new(alloc::vec![Q::from_i64(-1) / Q::from_i64(2), Q::from_i64(3) / Q::from_i64(4), Q::from_i64(0), Q::from_i64(0)]);
        let text = format_element(&h, &x);
        assert_eq!(text, "-1/2+(3/4)i");
        assert_eq!(parse_element(&h, &text).unwrap(), x);
    }
}
