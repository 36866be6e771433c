//! LLL reduction of the rows of a real basis matrix.

use crate::error::{Error, Result};

pub(crate) const DELTA: f64 = 0.99;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gram–Schmidt coefficients `mu` and squared norms `bstar` of the rows.
fn gram_schmidt(b: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = b.len();
    let mut mu = vec![vec![0.0; n]; n];
    let mut star: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut norms = vec![0.0; n];
    for i in 0..n {
        let mut v = b[i].clone();
        for j in 0..i {
            mu[i][j] = dot(&b[i], &star[j]) / norms[j];
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= mu[i][j] * y;
            }
        }
        norms[i] = dot(&v, &v);
        star.push(v);
    }
    (mu, norms)
}

/// Reduces `b` in place and applies the same row operations to the integer
/// matrix `transform`.
pub(crate) fn lll(b: &mut [Vec<f64>], transform: &mut [Vec<i64>], delta: f64) -> Result<()> {
    let n = b.len();
    if n < 2 {
        return Ok(());
    }
    let (mut mu, mut norms) = gram_schmidt(b);
    let mut k = 1;
    let mut steps = 0usize;
    while k < n {
        steps += 1;
        if steps > 1_000_000 {
            return Err(Error::NumericalFailure("LLL did not terminate".into()));
        }
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if q == 0.0 {
                continue;
            }
            if q.abs() > 1e15 {
                return Err(Error::NumericalFailure("size reduction overflow".into()));
            }
            let qi = q as i64;
            let (lo, hi) = b.split_at_mut(k);
            for (x, y) in hi[0].iter_mut().zip(&lo[j]) {
                *x -= q * y;
            }
            let (tlo, thi) = transform.split_at_mut(k);
            for (x, y) in thi[0].iter_mut().zip(&tlo[j]) {
                *x = y
                    .checked_mul(qi)
                    .and_then(|p| x.checked_sub(p))
                    .ok_or_else(|| Error::NumericalFailure("transform overflow".into()))?;
            }
            for i in 0..j {
                mu[k][i] -= q * mu[j][i];
            }
            mu[k][j] -= q;
        }
        if norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            transform.swap(k, k - 1);
            (mu, norms) = gram_schmidt(b);
            if norms.iter().any(|&x| !(x > 0.0) || !x.is_finite()) {
                return Err(Error::NumericalFailure("basis lost positive definiteness".into()));
            }
            k = (k - 1).max(1);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_basis_is_fixed() {
        let mut b = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let mut t = vec![vec![1, 0], vec![0, 1]];
        lll(&mut b, &mut t, DELTA).unwrap();
        assert_eq!(b, vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(t, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn skewed_basis() {
        let orig = vec![vec![1.0, 0.0], vec![1000.0, 1.0]];
        let mut b = orig.clone();
        let mut t = vec![vec![1, 0], vec![0, 1]];
        lll(&mut b, &mut t, DELTA).unwrap();
        let norms: Vec<f64> = b.iter().map(|r| dot(r, r)).collect();
        assert!(norms.iter().all(|&x| (x - 1.0).abs() < 1e-12));
        for (row, trow) in b.iter().zip(&t) {
            for c in 0..2 {
                let v: f64 = (0..2).map(|i| trow[i] as f64 * orig[i][c]).sum();
                assert_eq!(v, row[c]);
            }
        }
    }
}
