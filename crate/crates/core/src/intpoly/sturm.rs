//! Exact real-root counting.
//!
//! Sturm sequences are built as a primitive pseudo-remainder sequence in
//! which every remainder is scaled by a positive factor only, so the sign
//! pattern at any point is that of the classical Sturm chain over `Q`.
//! Above [`STURM_MAX_DEGREE`] the coefficient growth of the chain makes it
//! impractical and counts come from Descartes' rule of signs with dyadic
//! bisection instead; both routes are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Largest degree for which [`exact_real_root_count`] uses a Sturm chain.
pub const STURM_MAX_DEGREE: usize = 40;

const MOD_PRIMES: [u64; 4] = [2_147_483_647, 1_000_000_007, 998_244_353, 1_000_000_009];

fn mod_reduce(p: &IntPolynomial, q: u64) -> Vec<u64> {
    let qb = BigInt::from(q);
    let mut v: Vec<u64> = p
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&qb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1u64;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % q as u128) as u64;
        }
        b = (b as u128 * b as u128 % q as u128) as u64;
        e >>= 1;
    }
    r
}

/// Degree of `gcd(a, b)` over `F_q`.
fn mod_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, q: u64) -> usize {
    let mulm = |x: u64, y: u64| (x as u128 * y as u128 % q as u128) as u64;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), q - 2, q);
        while a.len() >= b.len() && !a.is_empty() {
            let factor = mulm(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (j, &bc) in b.iter().enumerate() {
                let sub = mulm(factor, bc);
                a[shift + j] = (a[shift + j] + q - sub) % q;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True iff `p` has no repeated factor over `Q`. A trivial gcd of `p` and
/// `p'` modulo a prime not dividing the leading coefficient certifies this;
/// otherwise the exact integer gcd decides.
pub fn is_squarefree(p: &IntPolynomial) -> bool {
    if p.degree() <= 1 {
        return true;
    }
    let d = p.derivative();
    for &q in &MOD_PRIMES {
        if (p.leading() % BigInt::from(q)).is_zero() {
            continue;
        }
        if mod_gcd_degree(mod_reduce(p, q), mod_reduce(&d, q), q) == 0 {
            return true;
        }
    }
    p.gcd(&d).degree() == 0
}

/// Sturm chain `p, p', -rem(p, p'), ...`, each member scaled by a positive
/// constant and made primitive.
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].positive_pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        let g = r.content();
        let next = IntPolynomial::new(r.coeffs().iter().map(|c| -(c / &g)).collect());
        seq.push(next);
    }
    seq
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(b: &BigInt) -> i32 {
    if b.is_positive() {
        1
    } else if b.is_negative() {
        -1
    } else {
        0
    }
}

fn variations_at(seq: &[IntPolynomial], x: &BigRational) -> usize {
    variations(seq.iter().map(|q| q.sign_at(x.numer(), x.denom())))
}

/// Number of distinct real roots of a squarefree `p`, on the whole line or
/// in the closed interval `[lo, hi]`.
pub fn sturm_real_count(
    p: &IntPolynomial,
    interval: Option<(&BigRational, &BigRational)>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::SquarefreeRequired);
    }
    if p.is_constant() {
        return Ok(0);
    }
    if !is_squarefree(p) {
        return Err(Error::SquarefreeRequired);
    }
    let seq = sturm_sequence(p);
    match interval {
        None => {
            let at_neg = variations(seq.iter().map(|q| {
                let s = sign_of(&q.leading());
                if q.degree() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }));
            let at_pos = variations(seq.iter().map(|q| sign_of(&q.leading())));
            Ok(at_neg - at_pos)
        }
        Some((lo, hi)) => {
            if lo > hi {
                return Err(Error::InvalidInterval(format!("{lo} > {hi}")));
            }
            let on_lo = p.eval_rational(lo).is_zero() as usize;
            Ok(variations_at(&seq, lo) - variations_at(&seq, hi) + on_lo)
        }
    }
}

fn coeff_variations(c: &[BigInt]) -> usize {
    variations(c.iter().map(sign_of))
}

/// In-place Taylor shift `q(x) -> q(x + 1)`.
fn taylor_shift_one(c: &mut [BigInt]) {
    let n = c.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let (lo, hi) = c.split_at_mut(j + 1);
            lo[j] += &hi[0];
        }
    }
}

/// Roots of `q` in the open interval `(0, 1)` by Vincent–Collins–Akritas
/// bisection.
fn unit_interval_count(q: Vec<BigInt>, depth: usize) -> Result<usize> {
    if depth > 400 {
        return Err(Error::Internal("Descartes bisection did not terminate".into()));
    }
    let mut t: Vec<BigInt> = q.iter().rev().cloned().collect();
    taylor_shift_one(&mut t);
    let v = coeff_variations(&t);
    if v <= 1 {
        return Ok(v);
    }
    let n = q.len() - 1;
    // 2^n q(x/2)
    let mut left: Vec<BigInt> = q
        .iter()
        .enumerate()
        .map(|(i, c)| c << (n - i))
        .collect();
    let tz = left
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.trailing_zeros().unwrap_or(0))
        .min()
        .unwrap_or(0);
    if tz > 0 {
        for c in left.iter_mut() {
            *c >>= tz;
        }
    }
    let mut right = left.clone();
    taylor_shift_one(&mut right);
    let mid = right[0].is_zero() as usize;
    Ok(unit_interval_count(left, depth + 1)? + mid + unit_interval_count(right, depth + 1)?)
}

/// Exact number of distinct real roots of a squarefree `p` via Descartes'
/// rule of signs on dyadic subintervals.
pub fn descartes_real_count(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::SquarefreeRequired);
    }
    if !is_squarefree(p) {
        return Err(Error::SquarefreeRequired);
    }
    let mut c: Vec<BigInt> = p.coeffs().to_vec();
    let mut count = 0;
    if c[0].is_zero() {
        count += 1;
        c.remove(0);
    }
    if c.len() <= 1 {
        return Ok(count);
    }
    // Cauchy bound 1 + max |a_i / a_n|, rounded up to a power of two.
    let lead = c.last().unwrap().abs();
    let max_ratio = c[..c.len() - 1]
        .iter()
        .map(|a| {
            let (q, r) = a.abs().div_rem(&lead);
            if r.is_zero() {
                q
            } else {
                q + 1
            }
        })
        .max()
        .unwrap_or_default();
    let bound = max_ratio + 1u32;
    let mut k = 0u64;
    while (BigInt::one() << k) < bound {
        k += 1;
    }
    let n = c.len() - 1;
    for negate in [false, true] {
        let scaled: Vec<BigInt> = c
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let v = a << (k as usize * i);
                if negate && i % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        debug_assert_eq!(scaled.len(), n + 1);
        count += unit_interval_count(scaled, 0)?;
    }
    Ok(count)
}

/// Exact distinct real-root count: Sturm chain up to [`STURM_MAX_DEGREE`],
/// Descartes bisection beyond.
pub fn exact_real_root_count(p: &IntPolynomial) -> Result<usize> {
    if p.degree() <= STURM_MAX_DEGREE {
        sturm_real_count(p, None)
    } else {
        descartes_real_count(p)
    }
}
