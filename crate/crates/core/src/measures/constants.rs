use std::f64::consts::{E, LN_2, PI};
use std::sync::OnceLock;

/// `(e log 2) / 2`, the infimum of `2^y / (1 + y)` over `y >= 0`.
pub fn universal_m_floor() -> f64 {
    E * LN_2 / 2.0
}

/// `1 / log 2 - 1`, where `2^y / (1 + y)` attains its minimum.
pub fn y0() -> f64 {
    1.0 / LN_2 - 1.0
}

/// Catalan's constant `sum_{j >= 0} (-1)^j / (2j + 1)^2`.
pub fn catalan() -> f64 {
    static G: OnceLock<f64> = OnceLock::new();
    *G.get_or_init(|| {
        // The mean of two consecutive partial sums of an alternating series
        // with terms ~ 1/j^2 has error O(1/N^3).
        const N: u64 = 200_000;
        let mut s = 0.0;
        let mut last = 0.0;
        for j in (0..=N).rev() {
            let d = (2 * j + 1) as f64;
            let term = if j % 2 == 0 { 1.0 / (d * d) } else { -1.0 / (d * d) };
            if j == N {
                last = term;
            }
            s += term;
        }
        s - last / 2.0
    })
}

/// `sqrt(2 pi / G)`, the sharpened constant of the angular equidistribution
/// bound.
pub fn ganelius_constant() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(|| (2.0 * PI / catalan()).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert!((universal_m_floor() - 0.942084).abs() < 1e-6);
        assert!((y0() - 0.442695).abs() < 1e-6);
        assert!((catalan() - 0.915_965_594_177_219).abs() < 1e-14);
        assert!((ganelius_constant() - 2.619089).abs() < 1e-6);
    }

    #[test]
    fn floor_is_the_minimum() {
        let f = |y: f64| 2f64.powf(y) / (1.0 + y);
        let m = f(y0());
        assert!((m - universal_m_floor()).abs() < 1e-15);
        for k in 0..=1000 {
            assert!(f(k as f64 / 1000.0) >= m);
        }
    }
}
