use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Polynomial families used by the constructions and the verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "n")]
pub enum FamilyKind {
    /// `x^n - x^(n-1) - ... - x - 1`, `n >= 2`; its dominant root is the
    /// multinacci Pisot number.
    Multinacci(u32),
    /// `x^(n+1) - 2x^n + 1 = (x - 1) * Multinacci(n)`.
    MultinacciCofactor(u32),
    /// `x^n + x^(n-1) + ... + x - 1`, `n >= 2`.
    TruncatedGeom(u32),
    /// `x^n + x^(n-2) + ... + x^2 - 1` for `n = 4k + 2`.
    EvenSpread(u32),
    /// `x^(3n) + x^(2n) - 1`, `n >= 1`.
    RootPower(u32),
}

impl FamilyKind {
    pub fn parameter(&self) -> u32 {
        match *self {
            FamilyKind::Multinacci(n)
            | FamilyKind::MultinacciCofactor(n)
            | FamilyKind::TruncatedGeom(n)
            | FamilyKind::EvenSpread(n)
            | FamilyKind::RootPower(n) => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Multinacci(_) => "multinacci",
            FamilyKind::MultinacciCofactor(_) => "multinacci-cofactor",
            FamilyKind::TruncatedGeom(_) => "truncated-geom",
            FamilyKind::EvenSpread(_) => "even-spread",
            FamilyKind::RootPower(_) => "root-power",
        }
    }

    pub fn from_name(name: &str, n: u32) -> Result<Self> {
        Ok(match name {
            "multinacci" => FamilyKind::Multinacci(n),
            "multinacci-cofactor" => FamilyKind::MultinacciCofactor(n),
            "truncated-geom" => FamilyKind::TruncatedGeom(n),
            "even-spread" => FamilyKind::EvenSpread(n),
            "root-power" => FamilyKind::RootPower(n),
            _ => return Err(Error::Parse(format!("unknown family `{name}`"))),
        })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.parameter())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Parses `name(n)` or `name:n`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = s
            .split_once(['(', ':'])
            .ok_or_else(|| Error::Parse(format!("expected `name(n)`, got `{s}`")))?;
        let n: u32 = rest
            .trim_end_matches(')')
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad family parameter in `{s}`")))?;
        Self::from_name(name.trim(), n)
    }
}

/// Exact coefficient vector of a family member.
pub fn make_family(kind: FamilyKind) -> Result<IntPolynomial> {
    let bad = |msg: String| Err(Error::InvalidFamilyParameter(msg));
    let n = kind.parameter() as usize;
    let mut c = vec![BigInt::zero(); n + 1];
    match kind {
        FamilyKind::Multinacci(_) => {
            if n < 2 {
                return bad(format!("multinacci needs n >= 2, got {n}"));
            }
            c.iter_mut().for_each(|a| *a = BigInt::from(-1));
            c[n] = BigInt::from(1);
        }
        FamilyKind::MultinacciCofactor(_) => {
            if n < 2 {
                return bad(format!("multinacci cofactor needs n >= 2, got {n}"));
            }
            c.push(BigInt::from(1));
            c[n] = BigInt::from(-2);
            c[0] = BigInt::from(1);
        }
        FamilyKind::TruncatedGeom(_) => {
            if n < 2 {
                return bad(format!("truncated geometric family needs n >= 2, got {n}"));
            }
            c.iter_mut().for_each(|a| *a = BigInt::from(1));
            c[0] = BigInt::from(-1);
        }
        FamilyKind::EvenSpread(_) => {
            if n < 6 || n % 4 != 2 {
                return bad(format!("even spread needs n = 4k + 2 with k >= 1, got {n}"));
            }
            for i in (2..=n).step_by(2) {
                c[i] = BigInt::from(1);
            }
            c[0] = BigInt::from(-1);
        }
        FamilyKind::RootPower(_) => {
            if n < 1 {
                return bad("root power needs n >= 1".into());
            }
            c = vec![BigInt::zero(); 3 * n + 1];
            c[3 * n] = BigInt::from(1);
            c[2 * n] = BigInt::from(1);
            c[0] = BigInt::from(-1);
        }
    }
    Ok(IntPolynomial::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn family_examples() {
        assert_eq!(make_family(FamilyKind::Multinacci(2)).unwrap(), p("x^2-x-1"));
        assert_eq!(make_family(FamilyKind::EvenSpread(6)).unwrap(), p("x^6+x^4+x^2-1"));
        assert_eq!(make_family(FamilyKind::RootPower(1)).unwrap(), p("x^3+x^2-1"));
        assert_eq!(make_family(FamilyKind::TruncatedGeom(3)).unwrap(), p("x^3+x^2+x-1"));
        assert_eq!(
            make_family(FamilyKind::MultinacciCofactor(10)).unwrap(),
            p("x^11-2x^10+1")
        );
    }

    #[test]
    fn parameter_checks() {
        assert!(make_family(FamilyKind::EvenSpread(8)).is_err());
        assert!(make_family(FamilyKind::EvenSpread(2)).is_err());
        assert!(make_family(FamilyKind::Multinacci(1)).is_err());
        assert!(make_family(FamilyKind::TruncatedGeom(1)).is_err());
        assert!(make_family(FamilyKind::RootPower(0)).is_err());
    }

    #[test]
    fn family_identities() {
        let x_minus_one = p("x-1");
        for n in 2..=200u32 {
            let m = make_family(FamilyKind::Multinacci(n)).unwrap();
            let cof = make_family(FamilyKind::MultinacciCofactor(n)).unwrap();
            assert_eq!(&m * &x_minus_one, cof, "n = {n}");
            let tg = make_family(FamilyKind::TruncatedGeom(n)).unwrap();
            let rec = m.reciprocal().unwrap();
            assert!(rec == tg || rec == -tg.clone(), "n = {n}");
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("multinacci(5)".parse::<FamilyKind>().unwrap(), FamilyKind::Multinacci(5));
        assert_eq!("even-spread:10".parse::<FamilyKind>().unwrap(), FamilyKind::EvenSpread(10));
        assert!("bogus(3)".parse::<FamilyKind>().is_err());
    }
}
