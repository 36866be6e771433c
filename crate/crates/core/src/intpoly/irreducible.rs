//! Irreducibility over `Q` by factor reconstruction from root subsets.
//!
//! Floating roots only propose candidate factors; a candidate counts only
//! after exact division succeeds, so a `Reducible` verdict always carries a
//! checked witness. Real roots and complex-conjugate pairs are grouped into
//! "units" so that every proposed factor has real coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::roots::{raw_roots, RootConfig};

/// Largest number of root units (real roots plus conjugate pairs) for which
/// every subset is tried.
pub const MAX_ROOT_UNITS: usize = 22;

const RATIONAL_ROOT_LIMIT: u64 = 1_000_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible { factor: IntPolynomial },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational-root test; `None` when the end coefficients are too large to
/// enumerate divisors.
fn rational_root_factor(f: &IntPolynomial) -> Option<Option<IntPolynomial>> {
    let a0 = f.constant_term().abs().to_u64()?;
    let an = f.leading().abs().to_u64()?;
    if a0 > RATIONAL_ROOT_LIMIT || an > RATIONAL_ROOT_LIMIT {
        return None;
    }
    for e in divisors(an) {
        for d in divisors(a0) {
            for sign in [1i64, -1] {
                let num = BigInt::from(d) * sign;
                let den = BigInt::from(e);
                if f.sign_at(&num, &den) == 0 {
                    let lin = IntPolynomial::new(vec![-num, den]).primitive_part();
                    return Some(Some(lin));
                }
            }
        }
    }
    Some(None)
}

/// Returns an exact proper factor of `p` if it is reducible over `Q`.
pub fn factor_witness(p: &IntPolynomial) -> Result<Option<IntPolynomial>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let f = p.primitive_part();
    let n = f.degree();
    if n == 1 {
        return Ok(None);
    }
    if f.constant_term().is_zero() {
        return Ok(Some(IntPolynomial::monomial(1)));
    }
    let g = f.gcd(&f.derivative());
    if g.degree() > 0 {
        return Ok(Some(g));
    }
    let rational = rational_root_factor(&f);
    if let Some(Some(lin)) = rational {
        return Ok(Some(lin));
    }
    let min_degree = if rational.is_some() {
        if n <= 3 {
            return Ok(None);
        }
        2
    } else {
        1
    };
    subset_reconstruction(&f, min_degree)
}

pub fn is_irreducible(p: &IntPolynomial) -> Result<bool> {
    Ok(factor_witness(p)?.is_none())
}

fn subset_reconstruction(f: &IntPolynomial, min_degree: usize) -> Result<Option<IntPolynomial>> {
    let n = f.degree();
    let roots = raw_roots(f, &RootConfig::default())?;
    let mut units: Vec<(Complex64, usize)> = Vec::new();
    let mut n_neg = 0;
    for z in &roots {
        if z.im == 0.0 {
            units.push((*z, 1));
        } else if z.im > 0.0 {
            units.push((*z, 2));
        } else {
            n_neg += 1;
        }
    }
    let n_pos = units.iter().filter(|u| u.1 == 2).count();
    if n_pos != n_neg {
        return Err(Error::RootFindingFailed(
            "complex roots do not pair up".into(),
        ));
    }
    if units.len() > MAX_ROOT_UNITS {
        return Err(Error::BeyondReach(format!(
            "{} root units exceed the subset limit {MAX_ROOT_UNITS}",
            units.len()
        )));
    }
    let lead = f.leading().abs().to_u64().ok_or_else(|| {
        Error::BeyondReach("leading coefficient too large".into())
    })?;
    if lead > RATIONAL_ROOT_LIMIT {
        return Err(Error::BeyondReach("leading coefficient too large".into()));
    }
    let lead_divisors = divisors(lead);
    let u = units.len();
    for mask in 1u64..(1u64 << u) {
        let deg: usize = (0..u)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| units[i].1)
            .sum();
        if deg < min_degree || deg > n / 2 {
            continue;
        }
        // product of (x - z) over the chosen units, real coefficients
        let mut prod = vec![1.0f64];
        for (i, &(z, mult)) in units.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let factor: Vec<f64> = if mult == 1 {
                vec![-z.re, 1.0]
            } else {
                vec![z.norm_sqr(), -2.0 * z.re, 1.0]
            };
            let mut next = vec![0.0; prod.len() + factor.len() - 1];
            for (a, pa) in prod.iter().enumerate() {
                for (b, fb) in factor.iter().enumerate() {
                    next[a + b] += pa * fb;
                }
            }
            prod = next;
        }
        for &e in &lead_divisors {
            let scaled: Vec<f64> = prod.iter().map(|c| c * e as f64).collect();
            if scaled
                .iter()
                .any(|c| !c.is_finite() || (c - c.round()).abs() > 0.25)
            {
                continue;
            }
            let cand = IntPolynomial::new(
                scaled.iter().map(|c| BigInt::from(c.round() as i64)).collect(),
            );
            if cand.degree() != deg {
                continue;
            }
            if f.exact_div(&cand).is_some() {
                return Ok(Some(cand.primitive_part()));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn verdict_examples() {
        assert!(is_irreducible(&p("x^6+x^4+x^2-1")).unwrap());
        assert!(!is_irreducible(&p("x^6-2x^4+x^2-1")).unwrap());
        assert!(is_irreducible(&p("x^2+1")).unwrap());
        assert_eq!(is_irreducible(&p("7")), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn witnesses_divide() {
        for s in [
            "x^6-2x^4+x^2-1",
            "x^4+4",
            "x^4-10x^2+1",
            "6x^2-5x+1",
            "x^8-1",
            "x^5+x+1",
            "2x^4+x^3+2x^2+x",
            "x^4+2x^2+1",
        ] {
            let f = p(s);
            let w = factor_witness(&f).unwrap();
            match w {
                Some(g) => {
                    assert!(g.degree() >= 1 && g.degree() < f.degree(), "{s}: {g}");
                    assert!(f.primitive_part().exact_div(&g).is_some(), "{s}: {g}");
                }
                None => assert_eq!(s, "x^4-10x^2+1"),
            }
        }
    }

    #[test]
    fn quartic_product_of_quadratics() {
        // no rational roots; only the subset search can find the split
        let f = &p("x^2+x+1") * &p("x^2-3x+5");
        let g = factor_witness(&f).unwrap().unwrap();
        assert!(g == p("x^2+x+1") || g == p("x^2-3x+5"));
    }

    #[test]
    fn non_monic_factors() {
        let f = &p("3x^2+x+1") * &p("2x^3-x+5");
        let g = factor_witness(&f).unwrap().unwrap();
        assert!(f.exact_div(&g).is_some());
    }
}
