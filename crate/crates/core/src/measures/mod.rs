//! Size measures of algebraic integers and the closed-form bounds relating
//! them.
//!
//! For `alpha` of signature `(s, t)` with real conjugates `alpha_1..alpha_s`
//! and one representative `alpha_{s+1}..alpha_{s+t}` of each complex pair:
//!
//! * `R = sum alpha_i^2` over the real conjugates,
//! * `C = sum |alpha_{s+j}|^2` over the representatives (each pair once),
//! * `||alpha||^2 = R + C` and `m(alpha) = (R + C) / (s + t)`.

mod constants;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::{discriminant, IntPolynomial};
use crate::roots::{find_roots, ConjugateSet};

pub use constants::{catalan, ganelius_constant, universal_m_floor, y0};

/// Relative guard for floating comparisons against bounds.
pub const GUARD: f64 = 1e-9;

/// Discriminants are computed exactly up to this degree and omitted above.
pub const DISCRIMINANT_MAX_DEGREE: usize = 48;

/// Outcome of a floating comparison made with the relative guard [`GUARD`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Guarded {
    Less,
    Greater,
    Inconclusive,
}

pub fn compare_guarded(a: f64, b: f64) -> Guarded {
    let scale = a.abs().max(b.abs()).max(1.0);
    if (a - b).abs() <= GUARD * scale {
        Guarded::Inconclusive
    } else if a < b {
        Guarded::Less
    } else {
        Guarded::Greater
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SizeProfile {
    pub polynomial: IntPolynomial,
    pub s: usize,
    pub t: usize,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub abs_square_size: f64,
    pub m: f64,
    #[serde(serialize_with = "crate::intpoly::serialize_bigint")]
    pub norm_abs: BigInt,
    pub mahler: f64,
    #[serde(serialize_with = "crate::intpoly::serialize_opt_bigint")]
    pub discriminant: Option<BigInt>,
    /// `R + 2C`, the sum of `|z|^2` over all roots. Diagnostic only.
    pub all_roots_square_sum: f64,
}

impl SizeProfile {
    pub fn degree(&self) -> usize {
        self.s + 2 * self.t
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    fn from_parts(
        polynomial: IntPolynomial,
        s: usize,
        t: usize,
        r: f64,
        c: f64,
        mahler: f64,
        discriminant: Option<BigInt>,
    ) -> Self {
        let norm_abs = polynomial.constant_term().abs();
        SizeProfile {
            polynomial,
            s,
            t,
            r,
            c,
            abs_square_size: r + c,
            m: (r + c) / (s + t) as f64,
            norm_abs,
            mahler,
            discriminant,
            all_roots_square_sum: r + 2.0 * c,
        }
    }

    /// CSV row `polynomial,s,t,m,lower_bound` with nine decimals.
    pub fn csv_row(&self) -> String {
        let lb = m_lower_bound_signature(self.s, self.t).unwrap_or(f64::NAN);
        format!(
            "\"{}\",{},{},{:.9},{:.9}",
            self.polynomial, self.s, self.t, self.m, lb
        )
    }
}

/// Size measures of the root of a certified conjugate set.
pub fn size_profile(roots: &ConjugateSet) -> Result<SizeProfile> {
    let r: f64 = roots.real_roots.iter().map(|x| x * x).sum();
    let c: f64 = roots.complex_reps.iter().map(|z| z.norm_sqr()).sum();
    let log_mahler: f64 = roots.real_roots.iter().map(|x| x.abs().ln().max(0.0)).sum::<f64>()
        + 2.0 * roots.complex_reps.iter().map(|z| z.norm().ln().max(0.0)).sum::<f64>();
    let p = &roots.polynomial;
    let disc = if p.degree() >= 2 && p.degree() <= DISCRIMINANT_MAX_DEGREE {
        Some(discriminant(p)?)
    } else {
        None
    };
    Ok(SizeProfile::from_parts(
        p.clone(),
        roots.s,
        roots.t,
        r,
        c,
        log_mahler.exp(),
        disc,
    ))
}

/// Roots and size profile of a monic irreducible polynomial.
pub fn profile_of(p: &IntPolynomial) -> Result<SizeProfile> {
    size_profile(&find_roots(p)?)
}

/// Signature `(s2, t2)` of an auxiliary element `beta` generating an
/// extension together with `alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionSignature {
    pub s2: usize,
    pub t2: usize,
}

impl ExtensionSignature {
    pub fn new(s2: usize, t2: usize) -> Result<Self> {
        if s2 + 2 * t2 == 0 {
            return Err(Error::InvalidSignature("extension degree must be at least 1".into()));
        }
        Ok(ExtensionSignature { s2, t2 })
    }

    pub fn n2(&self) -> usize {
        self.s2 + 2 * self.t2
    }
}

/// Signature of `Q(alpha, beta)` when `Q(alpha)` and `Q(beta)` are linearly
/// disjoint.
pub fn compositum_signature(sig1: (usize, usize), ext: ExtensionSignature) -> (usize, usize) {
    let (s1, t1) = sig1;
    let (s2, t2) = (ext.s2, ext.t2);
    (s1 * s2, s1 * t2 + s2 * t1 + 2 * t1 * t2)
}

/// `||alpha||^2` in `Q(alpha, beta)`: `(s2 + t2) R + (s2 + 2 t2) C`.
///
/// Valid only when `Q(alpha)` and `Q(beta)` are linearly disjoint, which the
/// caller must guarantee; for `alpha = sqrt 2` in `Q(2^(1/4))` the formula
/// gives 8 or 4 while the true value is 6.
pub fn relative_square_size(profile: &SizeProfile, ext: ExtensionSignature) -> f64 {
    (ext.s2 + ext.t2) as f64 * profile.r + (ext.s2 + 2 * ext.t2) as f64 * profile.c
}

/// `m(alpha)` relative to `Q(alpha, beta)`, under the same hypothesis as
/// [`relative_square_size`].
pub fn relative_m(profile: &SizeProfile, ext: ExtensionSignature) -> f64 {
    let (s, t) = compositum_signature(profile.signature(), ext);
    relative_square_size(profile, ext) / (s + t) as f64
}

/// Decides `t2 / (s2 + t2) < (s1 + t1 - R - C) / (C - t1)` for `m(alpha) < 1`,
/// which holds exactly when the relative `m` drops below 1.
pub fn mk_lt_one_criterion(profile: &SizeProfile, ext: ExtensionSignature) -> Result<bool> {
    let (s1, t1) = profile.signature();
    if profile.m >= 1.0 {
        return Err(Error::HypothesisViolated(format!("m = {} is not below 1", profile.m)));
    }
    if profile.c <= t1 as f64 {
        return Err(Error::InconsistentProfile(format!(
            "C = {} does not exceed t1 = {t1}",
            profile.c
        )));
    }
    let left = ext.t2 as f64 / (ext.s2 + ext.t2) as f64;
    let right = ((s1 + t1) as f64 - profile.r - profile.c) / (profile.c - t1 as f64);
    let verdict = left < right;
    let rel = relative_m(profile, ext);
    if compare_guarded(left, right) != Guarded::Inconclusive
        && compare_guarded(rel, 1.0) != Guarded::Inconclusive
        && verdict != (rel < 1.0)
    {
        return Err(Error::Internal(format!(
            "criterion ({left} < {right}) disagrees with relative m = {rel}"
        )));
    }
    Ok(verdict)
}

fn check_signature_arith(n: usize, s: usize) -> Result<()> {
    if n == 0 || s > n || (n - s) % 2 != 0 {
        return Err(Error::InvalidSignature(format!("s = {s} is incompatible with n = {n}")));
    }
    Ok(())
}

fn ln_big(v: &BigInt) -> f64 {
    match v.to_f64() {
        Some(x) if x.is_finite() => x.ln(),
        _ => {
            let bits = v.bits();
            let shift = bits.saturating_sub(60);
            (v >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

/// `n 2^(s/n - 1) N^(2/n)`, a lower bound for `||alpha||^2` in a field of
/// degree `n` with `s` real embeddings when `|Nm(alpha)| = N`.
pub fn norm_lower_bound(n: usize, s: usize, norm_abs: &BigInt) -> Result<f64> {
    check_signature_arith(n, s)?;
    if norm_abs.sign() != num_bigint::Sign::Plus {
        return Err(Error::InvalidSignature("norm must be at least 1".into()));
    }
    let nf = n as f64;
    Ok(nf * ((s as f64 / nf - 1.0) * std::f64::consts::LN_2 + 2.0 / nf * ln_big(norm_abs)).exp())
}

/// `(s 2^(-2t/n) + t 2^(s/n)) / (s + t)` with `n = s + 2t`.
pub fn m_lower_bound_signature(s: usize, t: usize) -> Result<f64> {
    if s + t == 0 {
        return Err(Error::InvalidSignature("s + t must be positive".into()));
    }
    let n = (s + 2 * t) as f64;
    let (sf, tf) = (s as f64, t as f64);
    Ok((sf * 2f64.powf(-2.0 * tf / n) + tf * 2f64.powf(sf / n)) / (sf + tf))
}

/// True when `|Nm(alpha)| = norm_abs` already forces `m(alpha) >= 1` in
/// degree `n`, so only units can have `m < 1`.
pub fn unit_necessity_gate(n: usize, norm_abs: &BigInt) -> bool {
    (universal_m_floor().ln() + 2.0 / n as f64 * ln_big(norm_abs)) >= 0.0
}

/// Profile of `alpha^(1/n)` for odd `n`, assuming `[Q(alpha^(1/n)) : Q(alpha)] = n`.
///
/// The signature is `(s1, (n - 1) s1 / 2 + n t1)` and
/// `||alpha^(1/n)||^2 = (n + 1)/2 sum_real |alpha_i|^(2/n) + n sum_pairs |alpha_j|^(2/n)`.
pub fn root_extract_profile(base: &ConjugateSet, n: u32) -> Result<SizeProfile> {
    if n % 2 == 0 {
        return Err(Error::EvenRootIndex(n));
    }
    let nf = n as f64;
    let (s1, t1) = base.signature();
    let s = s1;
    let t = (n as usize - 1) * s1 / 2 + n as usize * t1;
    let real_sum: f64 = base.real_roots.iter().map(|x| x.abs().powf(2.0 / nf)).sum();
    let cplx_sum: f64 = base.complex_reps.iter().map(|z| z.norm().powf(2.0 / nf)).sum();
    let r = real_sum;
    let c = (nf - 1.0) / 2.0 * real_sum + nf * cplx_sum;
    let base_profile = size_profile(base)?;
    Ok(SizeProfile::from_parts(
        base.polynomial.compose_power(n as usize),
        s,
        t,
        r,
        c,
        base_profile.mahler,
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn profile_examples() {
        assert!(close(profile_of(&p("x^3+x-1")).unwrap().m, 0.965571, 1e-6));
        assert!(close(profile_of(&p("x^6+x^2-1")).unwrap().m, 0.946467, 1e-6));
        let one = profile_of(&p("x-1")).unwrap();
        assert_eq!((one.s, one.t, one.r, one.c, one.m), (1, 0, 1.0, 0.0, 1.0));
        assert_eq!(one.discriminant, None);
    }

    #[test]
    fn golden_ratio_profile() {
        let g = profile_of(&p("x^2-x-1")).unwrap();
        // phi^2 + phi^-2 = 3
        assert!(close(g.r, 3.0, 1e-14));
        assert_eq!(g.discriminant, Some(BigInt::from(5)));
        assert!(close(g.mahler, (1.0 + 5f64.sqrt()) / 2.0, 1e-14));
    }

    #[test]
    fn relative_sizes() {
        let theta = 1.324717957244746f64;
        let inv = profile_of(&p("x^3+x^2-1")).unwrap();
        for s2 in 1..5 {
            let ext = ExtensionSignature::new(s2, 0).unwrap();
            assert!(close(
                relative_square_size(&inv, ext),
                s2 as f64 * (theta + theta.powi(-2)),
                1e-12
            ));
        }
        let ext2 = ExtensionSignature::new(2, 0).unwrap();
        assert!(close(relative_m(&inv, ext2), 0.947279, 1e-6));
        let zeta = profile_of(&p("x^6+x^2-1")).unwrap();
        assert!(close(relative_m(&zeta, ext2), 0.946467, 1e-6));
        assert!(close(relative_square_size(&zeta, ext2), 2.0 * zeta.abs_square_size, 1e-12));
        let base = ExtensionSignature::new(1, 0).unwrap();
        assert_eq!(relative_m(&zeta, base), zeta.m);
        assert!(ExtensionSignature::new(0, 0).is_err());
    }

    #[test]
    fn disjointness_failure_is_documented() {
        let sqrt2 = profile_of(&p("x^2-2")).unwrap();
        let a = relative_square_size(&sqrt2, ExtensionSignature::new(2, 0).unwrap());
        let b = relative_square_size(&sqrt2, ExtensionSignature::new(0, 1).unwrap());
        assert!(close(a, 8.0, 1e-12) && close(b, 4.0, 1e-12));
        // the true size of sqrt 2 in Q(2^(1/4)) is 2 + 2 + |-sqrt 2|^2 = 6
        assert!(!close(a, 6.0, 0.5) && !close(b, 6.0, 0.5));
    }

    #[test]
    fn compositum_examples() {
        let e = |s, t| ExtensionSignature::new(s, t).unwrap();
        assert_eq!(compositum_signature((1, 1), e(2, 0)), (2, 2));
        assert_eq!(compositum_signature((2, 2), e(3, 0)), (6, 6));
        assert_eq!(compositum_signature((5, 3), e(1, 0)), (5, 3));
    }

    #[test]
    fn criterion_examples() {
        let e = |s, t| ExtensionSignature::new(s, t).unwrap();
        let a = profile_of(&p("x^3+x-1")).unwrap();
        assert!(close(a.r, 0.465571, 1e-6) && close(a.c, 1.465571, 1e-6));
        assert!(mk_lt_one_criterion(&a, e(2, 0)).unwrap());
        assert!(!mk_lt_one_criterion(&a, e(1, 1)).unwrap());
        let z = profile_of(&p("x^6+x^2-1")).unwrap();
        for s2 in 1..8 {
            assert!(mk_lt_one_criterion(&z, e(s2, 0)).unwrap());
        }
        let big = profile_of(&p("x^2-x-1")).unwrap();
        assert!(matches!(mk_lt_one_criterion(&big, e(2, 0)), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn bound_examples() {
        let one = BigInt::from(1);
        assert!(close(norm_lower_bound(3, 1, &one).unwrap(), 1.889881, 1e-6));
        assert!(close(norm_lower_bound(7, 7, &one).unwrap(), 7.0, 1e-12));
        assert!(close(norm_lower_bound(6, 2, &BigInt::from(2)).unwrap(), 4.762203, 1e-6));
        assert!(norm_lower_bound(6, 3, &one).is_err());
        assert!(close(m_lower_bound_signature(2, 1).unwrap(), 0.942809, 1e-6));
        assert!(close(m_lower_bound_signature(1, 1).unwrap(), 3.0 * 2f64.powf(-5.0 / 3.0), 1e-15));
        assert!(close(m_lower_bound_signature(1, 2).unwrap(), 0.957248, 1e-6));
        assert!(m_lower_bound_signature(0, 0).is_err());
    }

    #[test]
    fn unit_gate_examples() {
        let two = BigInt::from(2);
        assert!(unit_necessity_gate(23, &two));
        assert!(unit_necessity_gate(6, &two));
        assert!(!unit_necessity_gate(24, &two));
        assert!(!unit_necessity_gate(6, &BigInt::from(1)));
    }

    #[test]
    fn root_extraction() {
        let base = find_roots(&p("x^3-x-1")).unwrap();
        let direct = size_profile(&base).unwrap();
        let one = root_extract_profile(&base, 1).unwrap();
        assert!(close(one.m, direct.m, 1e-15));
        assert_eq!(one.signature(), direct.signature());
        assert_eq!(root_extract_profile(&base, 4), Err(Error::EvenRootIndex(4)));
        let inv = find_roots(&p("x^3+x^2-1")).unwrap();
        let third = root_extract_profile(&inv, 3).unwrap();
        assert_eq!(third.signature(), (1, 4));
        assert!(third.m < 1.0);
        // agrees with the roots of f(x^3) computed directly
        let direct = profile_of(&p("x^9+x^6-1")).unwrap();
        assert!(close(third.m, direct.m, 1e-12));
        assert_eq!(third.norm_abs, direct.norm_abs);
        assert!(close(third.mahler, direct.mahler, 1e-12));
    }

    #[test]
    fn guarded_comparisons() {
        assert_eq!(compare_guarded(1.0, 1.0 + 1e-12), Guarded::Inconclusive);
        assert_eq!(compare_guarded(0.99, 1.0), Guarded::Less);
        assert_eq!(compare_guarded(2.0, 1.0), Guarded::Greater);
    }
}
