//! Aberth–Ehrlich simultaneous iteration in double precision.

use num_complex::Complex64;

/// Newton correction `p(z) / p'(z)` together with a flag that is set when
/// `|p(z)|` is already below the rounding-error level of the evaluation.
///
/// Points outside the unit disk are evaluated through the reversed
/// polynomial `q(y) = y^n p(1/y)`, which keeps intermediate values bounded:
/// `p / p' = z q / (n q - y q')`.
fn newton_ratio(monic: &[f64], z: Complex64) -> (Complex64, bool) {
    let n = monic.len() - 1;
    let eps = f64::EPSILON;
    if z.norm() <= 1.0 {
        let mut p = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        let mut bound = 0.0;
        let r = z.norm();
        for &c in monic.iter().rev() {
            d = d * z + p;
            p = p * z + c;
            bound = bound * r + c.abs();
        }
        (p / d, p.norm() <= 4.0 * (n as f64 + 1.0) * eps * bound)
    } else {
        let y = z.inv();
        let r = y.norm();
        let mut q = Complex64::new(0.0, 0.0);
        let mut dq = Complex64::new(0.0, 0.0);
        let mut bound = 0.0;
        // q has coefficients monic reversed: q(y) = sum monic[n-i] y^i
        for &c in monic.iter() {
            dq = dq * y + q;
            q = q * y + c;
            bound = bound * r + c.abs();
        }
        let small = q.norm() <= 4.0 * (n as f64 + 1.0) * eps * bound;
        (z * q / (q * n as f64 - y * dq), small)
    }
}

/// All roots of the polynomial with (real, constant-first) coefficients
/// `coeffs`. Fails if the iteration has not converged after `max_iter`
/// sweeps.
pub(crate) fn aberth(coeffs: &[f64], tol: f64, max_iter: usize) -> Result<Vec<Complex64>, String> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last() == Some(&0.0) {
        c.pop();
    }
    if c.len() < 2 {
        return Ok(Vec::new());
    }
    let mut zeros = 0;
    while c[0] == 0.0 {
        c.remove(0);
        zeros += 1;
    }
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|a| a / lead).collect();
    if monic.iter().any(|a| !a.is_finite()) {
        return Err("non-finite coefficients".into());
    }
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if n == 0 {
        return Ok(roots);
    }
    if n == 1 {
        roots.push(Complex64::new(-monic[0], 0.0));
        return Ok(roots);
    }

    let radius = monic[0].abs().powf(1.0 / n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (ratio, small) = newton_ratio(&monic, z[k]);
            if small {
                done[k] = true;
                continue;
            }
            let zk = z[k];
            let s: Complex64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, zj)| (zk - zj).inv())
                .sum();
            // p' can underflow far inside the unit disk; the step then
            // tends to its limit -1/s as the Newton ratio grows
            let w = if ratio.is_finite() { ratio / (Complex64::new(1.0, 0.0) - ratio * s) } else { -s.inv() };
            if !w.is_finite() {
                return Err("iteration produced a non-finite step".into());
            }
            z[k] = zk - w;
            if w.norm() <= tol * z[k].norm() {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            roots.extend(z);
            return Ok(roots);
        }
    }
    Err(format!("no convergence after {max_iter} sweeps"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    #[test]
    fn quadratic() {
        let r = sorted(aberth(&[-1.0, -1.0, 1.0], 1e-14, 500).unwrap());
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((r[0].re - (1.0 - phi)).abs() < 1e-14);
        assert!((r[1].re - phi).abs() < 1e-14);
    }

    #[test]
    fn roots_of_unity() {
        let mut c = vec![0.0; 65];
        c[0] = -1.0;
        c[64] = 1.0;
        let r = aberth(&c, 1e-14, 500).unwrap();
        assert_eq!(r.len(), 64);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.powu(64) - 1.0).norm() < 1e-10);
        }
    }

    #[test]
    fn zero_root_and_large_roots() {
        // x (x - 1000)(x + 1000)
        let r = sorted(aberth(&[0.0, -1e6, 0.0, 1.0], 1e-14, 500).unwrap());
        assert!((r[0].re + 1000.0).abs() < 1e-9);
        assert_eq!(r[1], Complex64::new(0.0, 0.0));
        assert!((r[2].re - 1000.0).abs() < 1e-9);
    }
}
