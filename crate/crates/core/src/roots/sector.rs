use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{find_roots, raw_roots, ConjugateSet, RootConfig};
use crate::error::{Error, Result};
use crate::intpoly::{make_family, FamilyKind, IntPolynomial};

/// Constant of the original angular equidistribution bound.
pub const ERDOS_TURAN_CONSTANT: f64 = 16.0;

/// `sqrt(2 pi / G)` with `G` Catalan's constant, rounded up in the sixth
/// decimal.
pub const GANELIUS_CONSTANT_UPPER: f64 = 2.619090;

const TAU: f64 = 2.0 * PI;

/// Argument of `z` in `[0, 2 pi)`, branch cut on the positive real axis.
pub fn argument(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    let a = if a < 0.0 { a + TAU } else { a };
    if a >= TAU || a == 0.0 {
        0.0
    } else {
        a
    }
}

fn check_interval(phi: f64, psi: f64) -> Result<()> {
    if !(phi.is_finite() && psi.is_finite() && 0.0 <= phi && phi < psi && psi <= TAU) {
        return Err(Error::InvalidInterval(format!(
            "need 0 <= phi < psi <= 2pi, got [{phi}, {psi})"
        )));
    }
    Ok(())
}

/// Number of `roots` whose argument lies in `[phi, psi)`.
pub fn sector_count(roots: &[Complex64], phi: f64, psi: f64) -> Result<usize> {
    check_interval(phi, psi)?;
    Ok(roots
        .iter()
        .filter(|z| {
            let a = argument(**z);
            phi <= a && a < psi
        })
        .count())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErdosTuranRecord {
    pub phi: f64,
    pub psi: f64,
    pub count: usize,
    pub expected: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub constant: f64,
    pub holds: bool,
}

fn log_ratio(p: &IntPolynomial) -> Result<f64> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let a0 = p.constant_term();
    let ad = p.leading();
    if a0.is_zero() || ad.is_zero() {
        return Err(Error::ZeroEndCoefficient);
    }
    let l = p.l1_norm().to_f64().unwrap_or(f64::INFINITY);
    let ends = (a0 * ad).abs().to_f64().unwrap_or(f64::INFINITY);
    Ok(l.ln() - 0.5 * ends.ln())
}

fn record(roots: &[Complex64], d: usize, ratio: f64, phi: f64, psi: f64, c: f64) -> Result<ErdosTuranRecord> {
    let count = sector_count(roots, phi, psi)?;
    let expected = (psi - phi) * d as f64 / TAU;
    let lhs = (count as f64 - expected).abs();
    let rhs = c * (d as f64 * ratio).sqrt();
    Ok(ErdosTuranRecord { phi, psi, count, expected, lhs, rhs, constant: c, holds: lhs <= rhs })
}

/// Compares the root count in the sector `[phi, psi)` with its share of the
/// degree, against `constant * sqrt(d log(L(P) / sqrt|a_d a_0|))` where
/// `L(P)` is the sum of absolute coefficients.
pub fn erdos_turan_check(p: &IntPolynomial, phi: f64, psi: f64, constant: f64) -> Result<ErdosTuranRecord> {
    let ratio = log_ratio(p)?;
    check_interval(phi, psi)?;
    let roots = raw_roots(p, &RootConfig::default())?;
    record(&roots, p.degree(), ratio, phi, psi, constant)
}

/// The check over the `2k` sectors `[pi j / k, pi (j + 1) / k)`, sharing one
/// root computation.
pub fn erdos_turan_dyadic(p: &IntPolynomial, k: usize, constant: f64) -> Result<Vec<ErdosTuranRecord>> {
    let ratio = log_ratio(p)?;
    if k == 0 {
        return Err(Error::InvalidInterval("k must be positive".into()));
    }
    let roots = raw_roots(p, &RootConfig::default())?;
    (0..2 * k)
        .map(|j| {
            let phi = PI * j as f64 / k as f64;
            let psi = if j + 1 == 2 * k { TAU } else { PI * (j + 1) as f64 / k as f64 };
            record(&roots, p.degree(), ratio, phi, psi, constant)
        })
        .collect()
}

const PISOT_MARGIN: f64 = 1e-9;

/// True iff exactly one root lies outside the closed unit disk, that root
/// is real and greater than 1, and every other root lies strictly inside.
/// Moduli within `1e-9` of 1 make the verdict inconclusive.
pub fn pisot_check(roots: &ConjugateSet) -> Result<bool> {
    let all = roots.all_roots();
    if let Some(z) = all.iter().find(|z| (z.norm() - 1.0).abs() < PISOT_MARGIN) {
        return Err(Error::Inconclusive(format!(
            "root {z} has modulus within {PISOT_MARGIN:e} of 1"
        )));
    }
    let outside: Vec<&Complex64> = all.iter().filter(|z| z.norm() > 1.0).collect();
    Ok(outside.len() == 1 && outside[0].im == 0.0 && outside[0].re > 1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultinacciLocation {
    pub n: u32,
    pub dominant_root: f64,
    /// `2n/(n+1) < dominant < 2`.
    pub dominant_in_range: bool,
    pub second_real_root: Option<f64>,
    /// A second real root exists exactly when `n` is even.
    pub second_real_iff_even: bool,
    /// `-1 < second < -3^(-1/n)`; vacuous when there is none.
    pub second_real_in_range: bool,
    pub min_complex_modulus: Option<f64>,
    pub max_complex_modulus: Option<f64>,
    /// `3^(-1/n) < |z| < 1` for all non-real roots.
    pub annulus: bool,
}

impl MultinacciLocation {
    pub fn all_hold(&self) -> bool {
        self.dominant_in_range && self.second_real_iff_even && self.second_real_in_range && self.annulus
    }
}

/// Location of the roots of `x^n - x^(n-1) - ... - 1`.
pub fn multinacci_location_check(n: u32) -> Result<MultinacciLocation> {
    let f = make_family(FamilyKind::Multinacci(n))?;
    let set = find_roots(&f)?;
    let nf = n as f64;
    // The dominant root is within 2^-n of 2, beyond double precision for
    // large n; it is the only positive root, so the signs of f at the two
    // rational endpoints decide the clause exactly.
    let dominant_in_range = f.sign_at(&BigInt::from(2 * n), &BigInt::from(n + 1)) < 0
        && f.sign_at(&BigInt::from(2), &BigInt::from(1)) > 0;
    let inner = 3f64.powf(-1.0 / nf);
    let dominant_root = *set
        .real_roots
        .last()
        .ok_or_else(|| Error::Internal("multinacci polynomial without real root".into()))?;
    let others: Vec<f64> = set.real_roots[..set.real_roots.len() - 1].to_vec();
    let second_real_root = others.first().copied();
    let second_real_iff_even = others.len() == if n % 2 == 0 { 1 } else { 0 };
    let second_real_in_range = others.iter().all(|&w| -1.0 < w && w < -inner);
    let moduli: Vec<f64> = set.complex_reps.iter().map(|z| z.norm()).collect();
    let annulus = moduli.iter().all(|&r| inner < r && r < 1.0);
    Ok(MultinacciLocation {
        n,
        dominant_root,
        dominant_in_range,
        second_real_root,
        second_real_iff_even,
        second_real_in_range,
        min_complex_modulus: moduli.iter().copied().reduce(f64::min),
        max_complex_modulus: moduli.iter().copied().reduce(f64::max),
        annulus,
    })
}
