//! Human-readable element rendering and its inverse.
//!
//! | ring            | form                           |
//! |-----------------|--------------------------------|
//! | `Zn`            | `3`                            |
//! | `prod(..)`      | `(1,3)`                        |
//! | `Mk`, `Tk`, `K` | `[[a,b],[c,d]]` (full matrix)  |
//! | `GR(R,G)`       | `g0 + 3*g2`, `0` for zero      |
//! | `quot(R,..)`    | `[x]` with `x` the least representative |
//! | `corner(R,e)`   | the parent's rendering          |
//!
//! Group-ring coefficients that are not plain integers are parenthesized.
//! Unstructured rings render bare indices.

use crate::constructions::{radix_digits, radix_index, triangular_positions};
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Shape};

pub fn render_element(r: &FiniteRing, x: usize) -> String {
    match r.shape() {
        Shape::Plain | Shape::Zn { .. } => x.to_string(),
        Shape::Product { factors } => {
            let mut coords = vec![0; factors.len()];
            let mut i = x;
            for (slot, f) in coords.iter_mut().zip(factors).rev() {
                *slot = i % f.order();
                i /= f.order();
            }
            let parts: Vec<String> = coords.iter().zip(factors).map(|(&c, f)| render_element(f, c)).collect();
            format!("({})", parts.join(","))
        }
        Shape::Matrix { base, size } => {
            let d = radix_digits(x, base.order(), size * size);
            render_matrix(base, *size, |i, j| d[i * size + j])
        }
        Shape::Triangular { base, size } => {
            let positions = triangular_positions(*size);
            let d = radix_digits(x, base.order(), positions.len());
            render_matrix(base, *size, |i, j| {
                positions.iter().position(|&p| p == (i, j)).map_or(base.zero(), |s| d[s])
            })
        }
        Shape::GenMatrix { base, .. } => {
            let d = radix_digits(x, base.order(), 4);
            render_matrix(base, 2, |i, j| d[i * 2 + j])
        }
        Shape::GroupRing { base, group } => {
            let coeffs = radix_digits(x, base.order(), group.order());
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != base.zero())
                .map(|(g, &c)| {
                    if c == base.one() {
                        format!("g{g}")
                    } else {
                        let text = render_element(base, c);
                        if text.bytes().all(|b| b.is_ascii_digit()) {
                            format!("{text}*g{g}")
                        } else {
                            format!("({text})*g{g}")
                        }
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        }
        Shape::Quotient { parent, representatives, .. } => {
            format!("[{}]", render_element(parent, representatives[x]))
        }
        Shape::Corner { parent, embedding, .. } => render_element(parent, embedding[x]),
    }
}

fn render_matrix(base: &FiniteRing, k: usize, entry: impl Fn(usize, usize) -> usize) -> String {
    let rows: Vec<String> = (0..k)
        .map(|i| {
            let cells: Vec<String> = (0..k).map(|j| render_element(base, entry(i, j))).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn bad(text: &str, what: &str) -> Error {
    Error::MalformedTable(format!("cannot read {text:?} as {what}"))
}

/// Split at `sep` occurrences outside brackets.
fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn strip_wrapped(text: &str, open: char, close: char) -> Option<&str> {
    let inner = text.trim().strip_prefix(open)?.strip_suffix(close)?;
    // reject "(a)(b)" style texts whose outer brackets do not pair
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    (depth == 0).then_some(inner)
}

/// Inverse of [`render_element`].
pub fn parse_element(r: &FiniteRing, text: &str) -> Result<usize> {
    let text = text.trim();
    match r.shape() {
        Shape::Plain => {
            let i: usize = text.parse().map_err(|_| bad(text, "an element index"))?;
            if i >= r.order() {
                return Err(Error::ElementOutOfRange { index: i, order: r.order() });
            }
            Ok(i)
        }
        Shape::Zn { modulus } => {
            let k: i64 = text.parse().map_err(|_| bad(text, "an integer"))?;
            Ok(k.rem_euclid(*modulus as i64) as usize)
        }
        Shape::Product { factors } => {
            let inner = strip_wrapped(text, '(', ')').ok_or_else(|| bad(text, "a tuple"))?;
            let parts = split_top(inner, ',');
            if parts.len() != factors.len() {
                return Err(bad(text, &format!("a {}-tuple", factors.len())));
            }
            parts.iter().zip(factors).try_fold(0, |acc, (p, f)| Ok(acc * f.order() + parse_element(f, p)?))
        }
        Shape::Matrix { base, size } => {
            let m = parse_matrix(base, *size, text)?;
            Ok(radix_index(&m, base.order()))
        }
        Shape::GenMatrix { base, .. } => {
            let m = parse_matrix(base, 2, text)?;
            Ok(radix_index(&m, base.order()))
        }
        Shape::Triangular { base, size } => {
            let m = parse_matrix(base, *size, text)?;
            let mut digits = Vec::new();
            for i in 0..*size {
                for j in 0..*size {
                    if j >= i {
                        digits.push(m[i * size + j]);
                    } else if m[i * size + j] != base.zero() {
                        return Err(bad(text, "an upper-triangular matrix"));
                    }
                }
            }
            Ok(radix_index(&digits, base.order()))
        }
        Shape::GroupRing { base, group } => {
            let mut coeffs = vec![base.zero(); group.order()];
            if text != "0" {
                for term in split_top(text, '+') {
                    let term = term.trim();
                    let parts = split_top(term, '*');
                    let (coeff, g) = match parts.as_slice() {
                        [g] => (base.one(), *g),
                        [c, g] => {
                            let c = c.trim();
                            let c = strip_wrapped(c, '(', ')').unwrap_or(c);
                            (parse_element(base, c)?, *g)
                        }
                        _ => return Err(bad(term, "a group-ring term")),
                    };
                    let g: usize = g
                        .trim()
                        .strip_prefix('g')
                        .and_then(|s| s.parse().ok())
                        .filter(|&g| g < group.order())
                        .ok_or_else(|| bad(term, "a group-ring term"))?;
                    coeffs[g] = base.add(coeffs[g], coeff);
                }
            }
            Ok(radix_index(&coeffs, base.order()))
        }
        Shape::Quotient { parent, projection, .. } => {
            let inner = strip_wrapped(text, '[', ']').ok_or_else(|| bad(text, "a coset [x]"))?;
            Ok(projection[parse_element(parent, inner)?])
        }
        Shape::Corner { parent, embedding, .. } => {
            let x = parse_element(parent, text)?;
            embedding.binary_search(&x).map_err(|_| bad(text, "an element of the corner ring"))
        }
    }
}

fn parse_matrix(base: &FiniteRing, k: usize, text: &str) -> Result<Vec<usize>> {
    let inner = strip_wrapped(text, '[', ']').ok_or_else(|| bad(text, "a matrix"))?;
    let rows = split_top(inner, ',');
    if rows.len() != k {
        return Err(bad(text, &format!("a {k}x{k} matrix")));
    }
    let mut out = Vec::with_capacity(k * k);
    for row in rows {
        let cells = strip_wrapped(row, '[', ']').ok_or_else(|| bad(row, "a matrix row"))?;
        let cells = split_top(cells, ',');
        if cells.len() != k {
            return Err(bad(row, &format!("a row of {k} entries")));
        }
        for c in cells {
            out.push(parse_element(base, c)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_ring;

    #[test]
    fn renderings() {
        let p = build_ring("prod(Z2,Z4)").unwrap();
        assert_eq!(render_element(&p, 7), "(1,3)");
        let m = build_ring("M2(Z2)").unwrap();
        assert_eq!(render_element(&m, 9), "[[1,0],[0,1]]");
        let t = build_ring("T2(Z2)").unwrap();
        assert_eq!(render_element(&t, 2), "[[0,1],[0,0]]");
        let g = build_ring("GR(Z4,C2)").unwrap();
        assert_eq!(render_element(&g, 0), "0");
        assert_eq!(render_element(&g, 4 + 3), "g0 + 3*g1");
        let gg = build_ring("GR(prod(Z2,Z2),C2)").unwrap();
        assert_eq!(render_element(&gg, 2 * 4 + 1), "((1,0))*g0 + ((0,1))*g1");
        let q = build_ring("quot(Z8,{4})").unwrap();
        assert_eq!(render_element(&q, 3), "[3]");
    }

    #[test]
    fn round_trips() {
        for expr in [
            "Z5",
            "prod(Z2,Z3,Z2)",
            "M2(Z3)",
            "T3(Z2)",
            "K(Z4,2)",
            "GR(Z3,C2)",
            "GR(prod(Z2,Z2),C2)",
            "GR(GR(Z2,C2),C2)",
            "quot(Z8,{2})",
            "corner(M2(Z2),8)",
            "M2(prod(Z2,Z2))",
        ] {
            let r = build_ring(expr).unwrap();
            for x in 0..r.order() {
                let text = render_element(&r, x);
                assert_eq!(parse_element(&r, &text).unwrap(), x, "{expr}: {text}");
            }
        }
    }

    #[test]
    fn rejects_garbage() {
        let m = build_ring("M2(Z2)").unwrap();
        assert!(parse_element(&m, "[[1,0]]").is_err());
        let g = build_ring("GR(Z2,C2)").unwrap();
        assert!(parse_element(&g, "g5").is_err());
        let t = build_ring("T2(Z2)").unwrap();
        assert!(parse_element(&t, "[[0,0],[1,0]]").is_err());
    }
}
