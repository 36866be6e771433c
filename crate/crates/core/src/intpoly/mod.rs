//! Exact polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored constant term first. The zero polynomial has an
//! empty coefficient vector; every other polynomial has a nonzero last
//! coefficient.

mod discriminant;
mod family;
mod irreducible;
mod parse;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use discriminant::{determinant, discriminant, resultant, sylvester_matrix};
pub use family::{make_family, FamilyKind};
pub use irreducible::{factor_witness, is_irreducible, Irreducibility, MAX_ROOT_UNITS};
pub use sturm::{
    descartes_real_count, exact_real_root_count, is_squarefree, sturm_real_count,
    sturm_sequence, STURM_MAX_DEGREE,
};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Self { coeffs: c }
    }

    /// `x - r` for an integer `r`.
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// `L(P) = |a_0| + ... + |a_d|`.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| {
                let v = c.to_f64().unwrap_or(f64::INFINITY);
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Sign normalization: multiply by -1 if the leading coefficient is negative.
    pub fn normalized(&self) -> Self {
        if self.leading().is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self { coeffs: c }
    }

    /// Exact evaluation at a rational point by Horner's rule.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(num/den)` for `den > 0`, computed exactly from the
    /// homogenized form `sum c_i num^i den^(d-i)`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i32 {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }

    /// Horner evaluation at a complex double.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// `x^d p(1/x)`, sign-normalized to a positive leading coefficient.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(Self::new(c).normalized())
    }

    /// `p(-x)`, sign-normalized to a positive leading coefficient.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
        .normalized()
    }

    /// `p(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut c = vec![BigInt::zero(); self.degree() * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * k] = a.clone();
        }
        Self::new(c)
    }

    /// Euclidean division by `d`, succeeding only when every quotient
    /// coefficient is an integer and the remainder vanishes.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dl = d.leading();
        let dd = d.degree();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            q[k] = qk;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder scaled by a positive factor: the result equals
    /// `c * (self mod d)` for some `c > 0`.
    pub fn positive_pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let mut rem = self.coeffs.clone();
        let dl = d.leading();
        let dl_abs = dl.abs();
        let sgn = if dl.is_negative() { -1 } else { 1 };
        let dd = d.degree();
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let top = rem.last().unwrap().clone() * sgn;
            for c in rem.iter_mut() {
                *c *= &dl_abs;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &top * dc;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Self::new(rem)
    }

    /// Primitive greatest common divisor over `Q[x]`, returned with integer
    /// coefficients, content 1 and positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() || a.is_zero() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Coefficient list, constant term first, e.g. `-1,-1,0,1`.
    pub fn to_coefficient_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Compact human form without spaces, e.g. `x^3-x-1`.
    pub fn to_compact_string(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_polynomial(s)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }
}

/// Serializes a big integer as a JSON number when it fits in `i64`, and as
/// a decimal string otherwise.
pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn serialize_opt_bigint<S: Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => serialize_bigint(b, s),
        None => s.serialize_none(),
    }
}

struct BigIntList<'a>(&'a [BigInt]);

impl Serialize for BigIntList<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in self.0 {
            match c.to_i64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntPolynomial", 3)?;
        st.serialize_field("coefficients", &BigIntList(&self.coeffs))?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("text", &self.to_compact_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let f = p("x^3-x-1");
        assert_eq!(f.eval_int(&BigInt::from(2)), BigInt::from(5));
        assert_eq!(f.eval_int(&BigInt::from(0)), BigInt::from(-1));
        assert_eq!(p("x^2-x-1").eval_int(&BigInt::from(1)), BigInt::from(-1));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            f.eval_rational(&half),
            BigRational::new((-11).into(), 8.into())
        );
        let z = f.eval_complex(Complex64::new(2.0, 0.0));
        assert_eq!(z, Complex64::new(5.0, 0.0));
    }

    #[test]
    fn reciprocal_and_negation() {
        assert_eq!(p("x^3-x-1").reciprocal().unwrap(), p("x^3+x^2-1"));
        assert_eq!(p("x^2-x-1").reciprocal().unwrap(), p("x^2+x-1"));
        assert_eq!(p("x^3+x+1").negate_variable(), p("x^3+x-1"));
        assert_eq!(p("x^3+x").reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn exact_division() {
        let a = p("x^3-x+1");
        let b = p("x^3-x-1");
        let prod = &a * &b;
        assert_eq!(prod, p("x^6-2x^4+x^2-1"));
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(p("x^6+x^4+x^2-1").exact_div(&a), None);
        assert_eq!(p("2x^2-2").exact_div(&p("2x+2")), Some(p("x-1")));
        assert_eq!(p("x^2-1").exact_div(&p("2x+2")), None);
    }

    #[test]
    fn gcd_of_products() {
        let a = p("x^2+1");
        let b = p("x^3-x-1");
        let c = p("x-3");
        let g = (&a * &b).gcd(&(&a * &c));
        assert_eq!(g, a);
        assert_eq!(p("x^2-x-1").gcd(&p("2x-1")), IntPolynomial::one());
    }

    #[test]
    fn display_round_trip() {
        for s in ["x^3 - x - 1", "-2x^4 + 3x - 7", "x", "-1", "x^6 + x^2 - 1"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("-1,-1,0,1").to_coefficient_list(), "-1,-1,0,1");
    }
}
