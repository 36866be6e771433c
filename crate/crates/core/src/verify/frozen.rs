//! Regression bounds for the asymptotic checks.
//!
//! The error terms are only known up to unspecified constants, so each
//! bound is the largest scaled residual of the reference run over the
//! parameters of the `all` suite (quoted next to it), raised by a margin of
//! roughly a third. A larger residual later means a regression in the
//! numerics, not a disproof.

/// Reference maximum 0.0728 at `n = 10`.
pub const LOPO_Q1_BOUND: f64 = 0.1;
/// Reference maximum 0.1923 at `n = 3`.
pub const LOPO_Q2_BOUND: f64 = 0.25;

/// Bound for the `lopo` check at exponent `q`; only `q = 1, 2` were
/// calibrated.
pub fn lopo_bound(q: f64) -> Option<f64> {
    if q == 1.0 {
        Some(LOPO_Q1_BOUND)
    } else if q == 2.0 {
        Some(LOPO_Q2_BOUND)
    } else {
        None
    }
}

/// Smallest `n` for which the `bhu1` checks are judged; at `n = 2` the
/// element is totally real and the estimate does not apply.
pub const BHU1_MIN_N: usize = 3;
/// Reference maximum 0.3240 at `n = 10`.
pub const BHU1_BOUND: f64 = 0.45;
/// Reference maximum 2.375 at `n = 10`; odd `n` give residuals near zero,
/// even `n` approach 2.2.
pub const BHU1_REAL_BOUND: f64 = 3.0;
/// Reference maximum 0.1669 at `k = 1`.
pub const KIY_BOUND: f64 = 0.25;
/// Reference maximum 0.2503 at `k = 1`.
pub const KIY_M_BOUND: f64 = 0.35;
/// Reference maximum 0.0702 at `(s, k) = (2, 1)` and `(4, 1)`.
pub const KIY1_BOUND: f64 = 0.1;
/// Reference maximum 0.2600 at `n = 45`, increasing slowly with `n`.
pub const AL_BOUND: f64 = 0.35;
/// Reference maximum 0.2491 at `s = 2`; the deviation tends to the log of
/// the Glaisher–Kinkelin constant, 0.24875.
pub const PROD_BOUND: f64 = 0.26;
