use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Accepts either a coefficient list (`-1,-1,0,1`, constant term first) or
/// a human expression in `x` (`x^3-x-1`, `2*x^2 + 3x - 5`).
pub(super) fn parse_polynomial(input: &str) -> Result<IntPolynomial> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if s.contains('x') || s.contains('X') {
        parse_expression(s)
    } else {
        parse_list(s)
    }
}

fn parse_list(s: &str) -> Result<IntPolynomial> {
    let coeffs = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

fn parse_expression(s: &str) -> Result<IntPolynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let compact = compact.replace("**", "^").replace('X', "x");
    let bytes = compact.as_bytes();
    let mut terms: Vec<(BigInt, usize)> = Vec::new();
    let mut i = 0;
    if bytes.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    while i < bytes.len() {
        let mut sign = 1i32;
        let mut saw_sign = false;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            saw_sign = true;
            i += 1;
        }
        if !saw_sign && !terms.is_empty() {
            return Err(Error::Parse(format!("expected `+` or `-` in `{s}`")));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<BigInt> = if i > start {
            Some(compact[start..i].parse().unwrap())
        } else {
            None
        };
        if i < bytes.len() && bytes[i] == b'*' {
            if coeff.is_none() {
                return Err(Error::Parse(format!("dangling `*` in `{s}`")));
            }
            i += 1;
        }
        let mut exp = 0usize;
        if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(Error::Parse(format!("missing exponent in `{s}`")));
                }
                exp = compact[es..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            }
        } else if coeff.is_none() {
            return Err(Error::Parse(format!("unexpected input in `{s}`")));
        }
        if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            return Err(Error::Parse(format!(
                "unexpected character `{}` in `{s}`",
                bytes[i] as char
            )));
        }
        let c = coeff.unwrap_or_else(|| BigInt::from(1)) * sign;
        terms.push((c, exp));
    }
    let degree = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for (c, e) in terms {
        coeffs[e] += c;
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_forms_agree() {
        let a = parse_polynomial("-1,-1,0,1").unwrap();
        let b = parse_polynomial("x^3-x-1").unwrap();
        let c = parse_polynomial(" x^3 - 1*x - 1 ").unwrap();
        let d = parse_polynomial("-1 - x + x**3").unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(c, d);
        assert_eq!(parse_polynomial("2x^2+3x").unwrap().to_coefficient_list(), "0,3,2");
        assert_eq!(parse_polynomial("7").unwrap().to_coefficient_list(), "7");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "x^", "x^3 x", "1,,2", "3y", "*x", "x^3-"] {
            assert!(parse_polynomial(s).is_err(), "accepted `{s}`");
        }
    }
}
