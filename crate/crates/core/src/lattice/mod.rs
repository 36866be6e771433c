//! Canonical embedding of an order and its shortest nonzero vector.
//!
//! An element `b` maps to `psi(b) = (sigma_1(b), .., sigma_s(b), Re tau_1(b),
//! Im tau_1(b), .., Re tau_t(b), Im tau_t(b))`, so `|psi(b)|^2` is `R(b) + C(b)`
//! and the covolume of `psi(O)` is `2^(-t) |disc(O)|^(1/2)`.
//!
//! The minimum computed here is over the supplied order (by default
//! `Z[alpha]`), which can differ from the minimum over the maximal order.

mod lll;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intpoly::{discriminant, IntPolynomial};
use crate::roots::ConjugateSet;

/// Caveat attached to every lattice report.
pub const ORDER_CAVEAT: &str = "m restricted to supplied order";

/// Largest dimension accepted by [`shortest_vector`].
pub const ENUMERATION_MAX_DIMENSION: usize = 40;

/// Largest dimension accepted by [`brute_force_shortest`].
pub const BRUTE_FORCE_MAX_DIMENSION: usize = 8;

const DET_TOLERANCE: f64 = 1e-8;
const RADIUS_SLACK: f64 = 1e-6;
const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct EmbeddedLattice {
    pub dimension: usize,
    pub s: usize,
    pub t: usize,
    pub polynomial: IntPolynomial,
    /// Order basis, each row in power-basis coordinates.
    pub basis: Vec<Vec<BigRational>>,
    /// Row `i` is `psi(basis[i])`.
    pub basis_matrix: DMatrix<f64>,
    pub gram: DMatrix<f64>,
    pub order_disc: BigInt,
    /// Current rows in terms of `original_matrix` rows.
    pub transform: Vec<Vec<i64>>,
    original_matrix: DMatrix<f64>,
}

impl EmbeddedLattice {
    pub fn determinant(&self) -> f64 {
        self.basis_matrix.determinant().abs()
    }

    /// `2^(-t) |order_disc|^(1/2)`.
    pub fn expected_determinant(&self) -> f64 {
        expected_det(self.t, &self.order_disc)
    }

    /// Squared length of the element with coordinates `c` over the original
    /// basis, evaluated from the embedding directly.
    pub fn squared_length(&self, c: &[i64]) -> f64 {
        let n = self.dimension;
        let mut v = vec![0.0; n];
        for (i, &ci) in c.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for (k, vk) in v.iter_mut().enumerate() {
                *vk += ci as f64 * self.original_matrix[(i, k)];
            }
        }
        v.iter().map(|x| x * x).sum()
    }

    /// Power-basis coordinates of the element with coordinates `c`.
    pub fn element(&self, c: &[i64]) -> Vec<BigRational> {
        let mut e = vec![BigRational::zero(); self.dimension];
        for (row, &ci) in self.basis.iter().zip(c) {
            for (ek, bk) in e.iter_mut().zip(row) {
                *ek += bk * BigRational::from_integer(ci.into());
            }
        }
        e
    }
}

fn expected_det(t: usize, disc: &BigInt) -> f64 {
    let ln = match disc.abs().to_f64() {
        Some(x) if x.is_finite() => x.ln(),
        _ => {
            let shift = disc.bits().saturating_sub(60);
            (disc.abs() >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
        }
    };
    (0.5 * ln - t as f64 * std::f64::consts::LN_2).exp()
}

fn rational_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Parses a basis written as rows separated by `;`, entries by `,`, each an
/// integer or a fraction `p/q`.
pub fn parse_basis(text: &str) -> Result<Vec<Vec<BigRational>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    let e = e.trim();
                    let (num, den) = e.split_once('/').unwrap_or((e, "1"));
                    let num: BigInt = num.trim().parse().map_err(|_| Error::Parse(format!("bad basis entry `{e}`")))?;
                    let den: BigInt = den.trim().parse().map_err(|_| Error::Parse(format!("bad basis entry `{e}`")))?;
                    if den.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in `{e}`")));
                    }
                    Ok(BigRational::new(num, den))
                })
                .collect()
        })
        .collect()
}

/// Embeds the order spanned by `basis` (default: the power basis) and checks
/// the determinant identity.
pub fn build_embedding(roots: &ConjugateSet, basis: Option<&[Vec<BigRational>]>) -> Result<EmbeddedLattice> {
    let poly = &roots.polynomial;
    let n = poly.degree();
    if n > crate::measures::DISCRIMINANT_MAX_DEGREE {
        return Err(Error::DimensionCap { dimension: n, cap: crate::measures::DISCRIMINANT_MAX_DEGREE });
    }
    let basis: Vec<Vec<BigRational>> = match basis {
        Some(b) => b.to_vec(),
        None => (0..n)
            .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i32))).collect())
            .collect(),
    };
    if basis.len() != n || basis.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidBasis(format!("expected {n} rows of length {n}")));
    }
    let det_c = rational_det(&basis);
    if det_c.is_zero() {
        return Err(Error::SingularBasis);
    }
    let disc = if n >= 2 { discriminant(poly)? } else { BigInt::one() };
    let order_disc_q = BigRational::from_integer(disc) * &det_c * &det_c;
    if !order_disc_q.is_integer() {
        return Err(Error::InvalidBasis(format!(
            "discriminant {order_disc_q} of the spanned module is not an integer"
        )));
    }
    let order_disc = order_disc_q.to_integer();

    let mut points: Vec<Complex64> = roots.real_roots.iter().map(|&r| Complex64::new(r, 0.0)).collect();
    points.extend(roots.complex_reps.iter().copied());
    let powers: Vec<Vec<Complex64>> = points
        .iter()
        .map(|&z| {
            let mut v = Vec::with_capacity(n);
            let mut acc = Complex64::new(1.0, 0.0);
            for _ in 0..n {
                v.push(acc);
                acc *= z;
            }
            v
        })
        .collect();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (i, row) in basis.iter().enumerate() {
        let coeffs: Vec<f64> = row.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect();
        for (r, pw) in powers.iter().enumerate() {
            let val: Complex64 = coeffs.iter().zip(pw).map(|(c, p)| p * *c).sum();
            if r < roots.s {
                m[(i, r)] = val.re;
            } else {
                let j = roots.s + 2 * (r - roots.s);
                m[(i, j)] = val.re;
                m[(i, j + 1)] = val.im;
            }
        }
    }
    let lat = EmbeddedLattice {
        dimension: n,
        s: roots.s,
        t: roots.t,
        polynomial: poly.clone(),
        basis,
        gram: &m * m.transpose(),
        basis_matrix: m.clone(),
        order_disc,
        transform: (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect(),
        original_matrix: m,
    };
    let observed = lat.determinant();
    let expected = lat.expected_determinant();
    if !((observed - expected).abs() <= DET_TOLERANCE * expected) {
        return Err(Error::EmbeddingInconsistent { observed, expected });
    }
    Ok(lat)
}

/// LLL-reduced copy of `lat` (`delta = 0.99`); the transform to the original
/// basis is kept exactly.
pub fn lll_reduce(lat: &EmbeddedLattice) -> Result<EmbeddedLattice> {
    let n = lat.dimension;
    let mut rows: Vec<Vec<f64>> = (0..n).map(|i| lat.basis_matrix.row(i).iter().copied().collect()).collect();
    let mut transform = lat.transform.clone();
    lll::lll(&mut rows, &mut transform, lll::DELTA)?;
    // rebuild rows from the exact transform to shed accumulated rounding
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            m[(i, k)] = (0..n).map(|j| transform[i][j] as f64 * lat.original_matrix[(j, k)]).sum();
        }
    }
    let mut out = lat.clone();
    out.gram = &m * m.transpose();
    out.basis_matrix = m;
    out.transform = transform;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShortestVectorResult {
    pub squared_length: f64,
    /// Over the supplied order basis.
    pub coordinates: Vec<i64>,
    /// Power-basis coordinates of the minimizer.
    #[serde(serialize_with = "serialize_rationals")]
    pub element: Vec<BigRational>,
    pub m_value: f64,
    pub method: Method,
    /// Degree over `Q` of the minimizer.
    pub minimizer_degree: usize,
    pub minimizer_minpoly: IntPolynomial,
}

fn serialize_rationals<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

/// Sign-normalized so that the first nonzero coordinate is positive.
fn canonical(c: &[i64]) -> Vec<i64> {
    match c.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => c.iter().map(|v| -v).collect(),
        _ => c.to_vec(),
    }
}

struct Best {
    len: f64,
    coords: Vec<i64>,
}

impl Best {
    fn offer(&mut self, len: f64, coords: Vec<i64>) {
        let coords = canonical(&coords);
        if self.coords.is_empty() {
            self.len = len;
            self.coords = coords;
            return;
        }
        let tie = TIE_TOLERANCE * self.len.max(1.0);
        if len < self.len - tie {
            self.len = len;
            self.coords = coords;
        } else if (len - self.len).abs() <= tie && coords < self.coords {
            self.len = self.len.min(len);
            self.coords = coords;
        }
    }
}

fn finish(lat: &EmbeddedLattice, best: Best, method: Method) -> Result<ShortestVectorResult> {
    if best.coords.is_empty() {
        return Err(Error::Internal("no nonzero lattice vector within the radius".into()));
    }
    let element = lat.element(&best.coords);
    let minpoly = minimal_polynomial(&lat.polynomial, &element);
    Ok(ShortestVectorResult {
        squared_length: best.len,
        m_value: best.len / (lat.s + lat.t) as f64,
        coordinates: best.coords,
        element,
        method,
        minimizer_degree: minpoly.degree(),
        minimizer_minpoly: minpoly,
    })
}

/// Global minimizer of `|psi(b)|^2` over nonzero `b` in the order, by
/// Fincke–Pohst enumeration on an LLL-reduced basis.
///
/// `psi(1)` has squared length `s + t`, so the search radius starts there.
/// Candidates are re-evaluated from the embedding of the original basis
/// before acceptance, and ties go to the lexicographically smallest
/// coordinates with positive leading entry.
pub fn shortest_vector(lat: &EmbeddedLattice) -> Result<ShortestVectorResult> {
    let n = lat.dimension;
    if n > ENUMERATION_MAX_DIMENSION {
        return Err(Error::DimensionCap { dimension: n, cap: ENUMERATION_MAX_DIMENSION });
    }
    let red = lll_reduce(lat)?;
    let chol = red
        .gram
        .clone()
        .cholesky()
        .ok_or_else(|| Error::NumericalFailure("Gram matrix is not positive definite".into()))?;
    // G = R^T R with R upper triangular
    let r = chol.l().transpose();
    let diag: Vec<f64> = (0..n).map(|i| r[(i, i)] * r[(i, i)]).collect();
    let mut q = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            q[i][j] = r[(i, j)] / r[(i, i)];
        }
    }
    let mut best = Best { len: f64::INFINITY, coords: Vec::new() };
    let mut radius = (lat.s + lat.t) as f64 + RADIUS_SLACK;
    let mut x = vec![0i64; n];

    struct Ctx<'a> {
        diag: &'a [f64],
        q: &'a [Vec<f64>],
        transform: &'a [Vec<i64>],
        lat: &'a EmbeddedLattice,
    }

    fn recurse(ctx: &Ctx, i: usize, partial: f64, x: &mut Vec<i64>, radius: &mut f64, best: &mut Best) -> Result<()> {
        let n = x.len();
        let center: f64 = -(i + 1..n).map(|j| ctx.q[i][j] * x[j] as f64).sum::<f64>();
        let rem = *radius - partial;
        if rem < 0.0 {
            return Ok(());
        }
        let half = (rem / ctx.diag[i]).sqrt();
        let lo = (center - half).ceil() as i64;
        let hi = (center + half).floor() as i64;
        for v in lo..=hi {
            x[i] = v;
            let d = v as f64 - center;
            let next = partial + ctx.diag[i] * d * d;
            if next > *radius {
                continue;
            }
            if i == 0 {
                if x.iter().all(|&c| c == 0) {
                    continue;
                }
                let mut c = vec![0i64; n];
                for (row, &xi) in ctx.transform.iter().zip(x.iter()) {
                    if xi == 0 {
                        continue;
                    }
                    for (ck, tk) in c.iter_mut().zip(row) {
                        *ck = tk
                            .checked_mul(xi)
                            .and_then(|p| ck.checked_add(p))
                            .ok_or_else(|| Error::NumericalFailure("coordinate overflow".into()))?;
                    }
                }
                let len = ctx.lat.squared_length(&c);
                best.offer(len, c);
                *radius = radius.min(best.len * (1.0 + 1e-8) + 1e-12);
            } else {
                recurse(ctx, i - 1, next, x, radius, best)?;
            }
        }
        x[i] = 0;
        Ok(())
    }

    let ctx = Ctx { diag: &diag, q: &q, transform: &red.transform, lat };
    recurse(&ctx, n - 1, 0.0, &mut x, &mut radius, &mut best)?;
    finish(lat, best, Method::Enumeration)
}

/// Exhaustive search over the integer box `|c_i| <= sqrt(radius_sq (G^-1)_ii)`
/// on the original basis; every vector in the ball lies in this box.
pub fn brute_force_shortest(lat: &EmbeddedLattice, radius_sq: f64) -> Result<ShortestVectorResult> {
    let n = lat.dimension;
    if n > BRUTE_FORCE_MAX_DIMENSION {
        return Err(Error::DimensionCap { dimension: n, cap: BRUTE_FORCE_MAX_DIMENSION });
    }
    let g = &lat.original_matrix * lat.original_matrix.transpose();
    let inv = g
        .try_inverse()
        .ok_or_else(|| Error::NumericalFailure("Gram matrix is singular".into()))?;
    let bounds: Vec<i64> = (0..n)
        .map(|i| (radius_sq * inv[(i, i)]).max(0.0).sqrt().floor() as i64 + 1)
        .collect();
    let mut best = Best { len: f64::INFINITY, coords: Vec::new() };
    let mut c: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        if c.iter().any(|&x| x != 0) {
            let len = lat.squared_length(&c);
            if len <= radius_sq {
                best.offer(len, c.clone());
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return finish(lat, best, Method::BruteForce);
            }
            if c[i] < bounds[i] {
                c[i] += 1;
                break;
            }
            c[i] = -bounds[i];
            i += 1;
        }
    }
}

/// Minimal polynomial over `Q` of the element with power-basis coordinates
/// `e` in `Q[x] / (f)`, as the squarefree part of its characteristic
/// polynomial (Faddeev–LeVerrier).
pub fn minimal_polynomial(f: &IntPolynomial, e: &[BigRational]) -> IntPolynomial {
    let n = f.degree();
    let fc: Vec<BigRational> = f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let lead = fc[n].clone();
    // column j of the multiplication matrix is e * x^j mod f
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut v: Vec<BigRational> = e.to_vec();
    v.resize(n, BigRational::zero());
    for _ in 0..n {
        cols.push(v.clone());
        let top = v[n - 1].clone();
        let mut next = vec![BigRational::zero(); n];
        next[1..n].clone_from_slice(&v[..n - 1]);
        if !top.is_zero() {
            for k in 0..n {
                next[k] -= &top * &fc[k] / &lead;
            }
        }
        v = next;
    }
    let a: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    let matmul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = BigRational::zero();
                        for k in 0..n {
                            if !x[i][k].is_zero() && !y[k][j].is_zero() {
                                s += &x[i][k] * &y[k][j];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    };
    // charpoly coefficients c[0..=n], c[n] = 1
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut am = matmul(&a, &mk);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = am;
        let amk = matmul(&a, &mk);
        let tr: BigRational = (0..n).map(|i| amk[i][i].clone()).fold(BigRational::zero(), |s, x| s + x);
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    let denom_lcm = c.iter().fold(BigInt::one(), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
    let charpoly = IntPolynomial::new(c.iter().map(|q| (q * BigRational::from_integer(denom_lcm.clone())).to_integer()).collect());
    let g = charpoly.gcd(&charpoly.derivative());
    charpoly.exact_div(&g).map(|p| p.primitive_part()).unwrap_or(charpoly)
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeReport {
    pub polynomial: IntPolynomial,
    pub dimension: usize,
    pub signature: (usize, usize),
    pub determinant: f64,
    pub expected_determinant: f64,
    #[serde(serialize_with = "crate::intpoly::serialize_bigint")]
    pub order_disc: BigInt,
    pub d_squared: f64,
    pub m: f64,
    pub minimizer: ShortestVectorResult,
    pub caveat: &'static str,
}

pub fn lattice_report(roots: &ConjugateSet, basis: Option<&[Vec<BigRational>]>) -> Result<LatticeReport> {
    let lat = build_embedding(roots, basis)?;
    let sv = shortest_vector(&lat)?;
    Ok(LatticeReport {
        polynomial: lat.polynomial.clone(),
        dimension: lat.dimension,
        signature: (lat.s, lat.t),
        determinant: lat.determinant(),
        expected_determinant: lat.expected_determinant(),
        order_disc: lat.order_disc.clone(),
        d_squared: sv.squared_length,
        m: sv.m_value,
        minimizer: sv,
        caveat: ORDER_CAVEAT,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::find_roots;

    fn lat(s: &str) -> EmbeddedLattice {
        build_embedding(&find_roots(&s.parse().unwrap()).unwrap(), None).unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert!((lat("x^3-x-1").determinant() - 23f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((lat("x^2-x-1").determinant() - 5f64.sqrt()).abs() < 1e-12);
        assert!((lat("x^2+1").determinant() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_bases() {
        let roots = find_roots(&"x^2+1".parse().unwrap()).unwrap();
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let singular = vec![vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]];
        assert_eq!(build_embedding(&roots, Some(&singular)).unwrap_err(), Error::SingularBasis);
        let ragged = vec![vec![q(1, 1)], vec![q(0, 1), q(1, 1)]];
        assert!(matches!(build_embedding(&roots, Some(&ragged)), Err(Error::InvalidBasis(_))));
        // 1, i/3 spans no order: disc -4/9
        let frac = vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 3)]];
        assert!(matches!(build_embedding(&roots, Some(&frac)), Err(Error::InvalidBasis(_))));
        // Z[(1 + sqrt 5)/2] inside Q(sqrt 5): basis 1, (1 + a)/2 with a = 2x - 1 root of x^2 - 5
        let roots5 = find_roots(&"x^2-5".parse().unwrap()).unwrap();
        let half = vec![vec![q(1, 1), q(0, 1)], vec![q(1, 2), q(1, 2)]];
        let l = build_embedding(&roots5, Some(&half)).unwrap();
        assert_eq!(l.order_disc, BigInt::from(5));
    }

    #[test]
    fn shortest_examples() {
        let l = lat("x^6+x^2-1");
        let sv = shortest_vector(&l).unwrap();
        assert!((sv.squared_length - 3.785869).abs() < 1e-5);
        assert_eq!(sv.coordinates, vec![0, 1, 0, 0, 0, 0]);
        assert_eq!(sv.minimizer_degree, 6);

        let sv = shortest_vector(&lat("x^2-x-1")).unwrap();
        assert!((sv.squared_length - 2.0).abs() < 1e-12);

        let sv = shortest_vector(&lat("x^3-x-1")).unwrap();
        assert!((sv.m_value - 0.947279).abs() < 1e-6);
        assert_eq!(sv.coordinates, vec![1, 0, -1]);
        assert_eq!(sv.minimizer_minpoly, "x^3-x^2+1".parse().unwrap());
    }

    #[test]
    fn brute_force_examples() {
        let l = lat("x^2+1");
        let sv = brute_force_shortest(&l, 1.1).unwrap();
        assert!((sv.squared_length - 1.0).abs() < 1e-12);
        assert_eq!(sv.coordinates, vec![0, 1]);
        let l = lat("x^3+x-1");
        let sv = brute_force_shortest(&l, 2.0 + 1e-6).unwrap();
        assert!((sv.m_value - 0.965571).abs() < 1e-6);
        assert_eq!(sv.coordinates, shortest_vector(&l).unwrap().coordinates);
        assert!(brute_force_shortest(&lat("x^9+x^6-1"), 5.0).is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let f: IntPolynomial = "x^4-2".parse().unwrap();
        let q = |n: i64| BigRational::from_integer(n.into());
        // x^2 = sqrt 2
        let mp = minimal_polynomial(&f, &[q(0), q(0), q(1), q(0)]);
        assert_eq!(mp, "x^2-2".parse().unwrap());
        let mp = minimal_polynomial(&f, &[q(3), q(0), q(0), q(0)]);
        assert_eq!(mp, "x-3".parse().unwrap());
    }
}
