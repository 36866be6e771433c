//! Floating root finding with exact cross-checks.
//!
//! Roots come from Aberth–Ehrlich iteration started on a circle and are then
//! Newton-polished with double-double evaluation. A root is classified as
//! real when `|Im z| < 1e-8 (1 + |z|)`; the number of real roots found this
//! way must agree with the exact count from [`crate::intpoly`] before a
//! [`ConjugateSet`] is returned.

mod aberth;
pub(crate) mod dd;
mod sector;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intpoly::{exact_real_root_count, IntPolynomial};
use dd::Dd;

pub use sector::{
    argument, erdos_turan_check, erdos_turan_dyadic, multinacci_location_check, pisot_check,
    sector_count, ErdosTuranRecord, MultinacciLocation, ERDOS_TURAN_CONSTANT,
    GANELIUS_CONSTANT_UPPER,
};

/// Relative width of the band around the real axis inside which a root is
/// taken to be real.
pub const REAL_THRESHOLD: f64 = 1e-8;

/// Residual budget factor: `|f(z)| <= RESIDUAL_FACTOR (1 + |z|)^n ||f||_1`.
pub const RESIDUAL_FACTOR: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootConfig {
    /// Relative step size at which an Aberth iterate counts as converged.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig { tolerance: 1e-14, max_iterations: 2000 }
    }
}

pub(crate) fn is_real(z: Complex64) -> bool {
    z.im.abs() < REAL_THRESHOLD * (1.0 + z.norm())
}

fn dd_coeffs(p: &IntPolynomial) -> Result<Vec<Dd>> {
    p.coeffs()
        .iter()
        .map(Dd::from_bigint)
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::RootFindingFailed("coefficients overflow double precision".into()))
}

fn polish(coeffs: &[Dd], mut z: Complex64) -> Complex64 {
    let (mut v, _) = dd::eval_with_derivative(coeffs, z);
    for _ in 0..3 {
        if v.norm() == 0.0 {
            break;
        }
        let (_, d) = dd::eval_with_derivative(coeffs, z);
        let step = v / d;
        if !step.is_finite() {
            break;
        }
        let next = z - step;
        let (vn, _) = dd::eval_with_derivative(coeffs, next);
        if !(vn.norm() < v.norm()) {
            break;
        }
        z = next;
        v = vn;
    }
    z
}

/// Unpolished roots from floating coefficients; `None` on non-convergence.
pub(crate) fn float_roots(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let cfg = RootConfig::default();
    aberth::aberth(coeffs, 1e-12, cfg.max_iterations).ok()
}

/// All complex roots of `p` (any nonconstant integer polynomial), polished,
/// with real roots snapped onto the real axis. No exact cross-check is made,
/// so this also serves reducible inputs.
pub fn raw_roots(p: &IntPolynomial, config: &RootConfig) -> Result<Vec<Complex64>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let coeffs = p.to_f64_vec();
    let found = aberth::aberth(&coeffs, config.tolerance, config.max_iterations)
        .map_err(Error::RootFindingFailed)?;
    let exact = dd_coeffs(p)?;
    let mut roots: Vec<Complex64> = found
        .into_iter()
        .map(|z| {
            if is_real(z) {
                let r = polish(&exact, Complex64::new(z.re, 0.0));
                Complex64::new(r.re, 0.0)
            } else {
                polish(&exact, z)
            }
        })
        .collect();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

/// The roots of a monic irreducible polynomial split into real roots and
/// one representative per complex-conjugate pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugateSet {
    pub polynomial: IntPolynomial,
    /// Ascending.
    pub real_roots: Vec<f64>,
    /// Imaginary parts positive, sorted by real part.
    pub complex_reps: Vec<Complex64>,
    pub s: usize,
    pub t: usize,
    pub max_residual: f64,
}

impl ConjugateSet {
    pub fn degree(&self) -> usize {
        self.s + 2 * self.t
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    /// Every root, conjugates included.
    pub fn all_roots(&self) -> Vec<Complex64> {
        let mut v: Vec<Complex64> = self.real_roots.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        for z in &self.complex_reps {
            v.push(*z);
            v.push(z.conj());
        }
        v
    }
}

impl Serialize for ConjugateSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct C {
            re: f64,
            im: f64,
        }
        let reps: Vec<C> = self.complex_reps.iter().map(|z| C { re: z.re, im: z.im }).collect();
        let mut st = s.serialize_struct("ConjugateSet", 6)?;
        st.serialize_field("polynomial", &self.polynomial)?;
        st.serialize_field("real_roots", &self.real_roots)?;
        st.serialize_field("complex_reps", &reps)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("max_residual", &self.max_residual)?;
        st.end()
    }
}

pub fn find_roots(p: &IntPolynomial) -> Result<ConjugateSet> {
    find_roots_with(p, &RootConfig::default())
}

/// Certified roots of a monic, irreducible (hence squarefree) polynomial.
///
/// Fails with [`Error::RootFindingFailed`] if the iteration does not converge
/// or a residual exceeds its budget, and with
/// [`Error::SignatureClassificationFailed`] if the floating real-root count
/// differs from the exact one.
pub fn find_roots_with(p: &IntPolynomial, config: &RootConfig) -> Result<ConjugateSet> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = p.degree();
    let roots = raw_roots(p, config)?;
    let exact = dd_coeffs(p)?;
    let log_l1 = p.l1_norm().to_f64().unwrap_or(f64::INFINITY).ln();
    let mut max_residual: f64 = 0.0;
    for z in &roots {
        let (v, _) = dd::eval_with_derivative(&exact, *z);
        let r = v.norm();
        let log_budget = RESIDUAL_FACTOR.ln() + n as f64 * (1.0 + z.norm()).ln() + log_l1;
        if !r.is_finite() || (r > 0.0 && r.ln() > log_budget) {
            return Err(Error::RootFindingFailed(format!(
                "residual {r:e} at {z} exceeds the budget"
            )));
        }
        max_residual = max_residual.max(r);
    }
    let mut real_roots = Vec::new();
    let mut complex_reps = Vec::new();
    let mut lower = 0;
    for z in roots {
        if z.im == 0.0 {
            real_roots.push(z.re);
        } else if z.im > 0.0 {
            complex_reps.push(z);
        } else {
            lower += 1;
        }
    }
    if lower != complex_reps.len() {
        return Err(Error::RootFindingFailed("complex roots do not pair up".into()));
    }
    let exact_count = exact_real_root_count(p)?;
    if exact_count != real_roots.len() {
        return Err(Error::SignatureClassificationFailed {
            floating: real_roots.len(),
            exact: exact_count,
        });
    }
    real_roots.sort_by(f64::total_cmp);
    Ok(ConjugateSet {
        polynomial: p.clone(),
        s: real_roots.len(),
        t: complex_reps.len(),
        real_roots,
        complex_reps,
        max_residual,
    })
}
