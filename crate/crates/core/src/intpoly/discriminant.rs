use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` (degree `n`) and `g` (degree `m`): `m` shifted
/// rows of `f`'s coefficients followed by `n` shifted rows of `g`'s, highest
/// degree first.
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let n = f.degree();
    let m = g.degree();
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (count, p) in [(m, f), (n, g)] {
        let d = p.degree();
        for shift in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for k in 0..=d {
                row[shift + k] = p.coeff(d - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    determinant(sylvester_matrix(f, g))
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / a_n`.
pub fn discriminant(f: &IntPolynomial) -> Result<BigInt> {
    let n = f.degree();
    if f.is_zero() || n < 2 {
        return Err(Error::DiscriminantUndefined(n));
    }
    let res = resultant(f, &f.derivative());
    let q = res / f.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}
