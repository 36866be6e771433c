//! Depth-first enumeration of monic integer polynomials whose roots satisfy
//! `sum |z|^2 <= S` and `max |z|^2 <= M`.
//!
//! With `e_k = (-1)^k c_k` the elementary symmetric functions of the roots
//! (`c_k` the coefficient of `x^(n-k)`), the power sums obey Newton's
//! identities `p_k = sum_{i<k} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k`.
//! Each `|p_k|` is at most `S M^((k-2)/2)` (and `|p_1| <= sqrt(n S)`), which
//! confines `e_k` to an interval once `e_1..e_(k-1)` are fixed.

/// Largest integer `v >= 0` with `v^2 <= x`.
pub(crate) fn isqrt(x: u128) -> u128 {
    if x == 0 {
        return 0;
    }
    let mut v = (x as f64).sqrt() as u128;
    while v * v > x {
        v -= 1;
    }
    while (v + 1) * (v + 1) <= x {
        v += 1;
    }
    v
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

#[derive(Clone, Debug)]
pub(crate) struct Walk {
    pub n: usize,
    /// `caps[k]` bounds `|e_k|`, `k = 1..=n`; `caps[0]` unused.
    pub caps: Vec<i64>,
    /// `(S, M)`; `None` disables the power-sum intervals.
    pub power_sums: Option<(u128, u128)>,
    /// Restrict the constant term to `+-1`.
    pub units_only: bool,
    /// Skip the constant term `0`.
    pub nonzero_constant: bool,
}

impl Walk {
    /// `floor(S M^((k-2)/2))` for `k >= 2`, `floor(sqrt(n S))` for `k = 1`.
    fn power_cap(&self, k: usize) -> Option<i64> {
        let (s, m) = self.power_sums?;
        let sq = if k == 1 {
            self.n as u128 * s
        } else {
            s.checked_mul(s)?.checked_mul(m.checked_pow((k - 2) as u32)?)?
        };
        Some(isqrt(sq).min(i64::MAX as u128) as i64)
    }

    fn newton_tail(e: &[i64], p: &[i64], k: usize) -> i128 {
        let mut a: i128 = 0;
        for i in 1..k.min(e.len()) {
            let term = e[i] as i128 * p[k - i] as i128;
            if i % 2 == 1 {
                a += term;
            } else {
                a -= term;
            }
        }
        a
    }

    /// Range of `e_k` allowed by the cap and the power-sum interval.
    fn range(&self, k: usize, e: &[i64], p: &[i64]) -> Option<(i64, i64)> {
        let cap = self.caps[k];
        let (mut lo, mut hi) = (-cap, cap);
        if let Some(pc) = self.power_cap(k) {
            let a = Self::newton_tail(e, p, k);
            let kk = k as i128;
            let pc = pc as i128;
            // sigma k e_k in [-pc - a, pc - a]
            let (l, h) = if k % 2 == 1 { (-pc - a, pc - a) } else { (a - pc, a + pc) };
            let l = l.div_euclid(kk) + (l.rem_euclid(kk) != 0) as i128;
            let h = h.div_euclid(kk);
            lo = lo.max(l.clamp(i64::MIN as i128, i64::MAX as i128) as i64);
            hi = hi.min(h.clamp(i64::MIN as i128, i64::MAX as i128) as i64);
        }
        if k == self.n && self.units_only {
            let opts: Vec<i64> = [-1, 1].into_iter().filter(|v| lo <= *v && *v <= hi).collect();
            return match opts.as_slice() {
                [] => None,
                [v] => Some((*v, *v)),
                _ => Some((-1, 1)),
            };
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn power_sum(e: &[i64], p: &[i64], k: usize, n: usize) -> Option<i64> {
        let mut a = Self::newton_tail(e, p, k);
        if k <= n {
            let t = k as i128 * e[k] as i128;
            if k % 2 == 1 {
                a += t;
            } else {
                a -= t;
            }
        }
        i64::try_from(a).ok()
    }

    /// Calls `visit(e)` for every admissible `e = (1, e_1, .., e_n)` with
    /// the given first elementary function.
    pub fn run(&self, e1: i64, visit: &mut dyn FnMut(&[i64])) {
        let n = self.n;
        let mut e = vec![0i64; n + 1];
        let mut p = vec![0i64; 2 * n + 1];
        e[0] = 1;
        p[0] = n as i64;
        let Some((lo, hi)) = self.range(1, &e, &p) else { return };
        if e1 < lo || e1 > hi {
            return;
        }
        e[1] = e1;
        p[1] = e1;
        self.descend(2, &mut e, &mut p, visit);
    }

    fn descend(&self, k: usize, e: &mut Vec<i64>, p: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        let n = self.n;
        if k > n {
            if self.power_sums.is_some() {
                for j in n + 1..=2 * n {
                    let Some(pj) = Self::power_sum(e, p, j, n) else { return };
                    match self.power_cap(j) {
                        Some(cap) if pj.unsigned_abs() > cap as u64 => return,
                        _ => {}
                    }
                    p[j] = pj;
                }
            }
            visit(e);
            return;
        }
        let Some((lo, hi)) = self.range(k, e, p) else { return };
        for v in lo..=hi {
            if k == n && ((self.units_only && v.abs() != 1) || (self.nonzero_constant && v == 0)) {
                continue;
            }
            e[k] = v;
            match Self::power_sum(e, p, k, n) {
                Some(pk) => p[k] = pk,
                None => continue,
            }
            self.descend(k + 1, e, p, visit);
        }
        e[k] = 0;
    }

    /// Every value `e_1` can take.
    pub fn e1_range(&self) -> Vec<i64> {
        let e = vec![1i64; self.n + 1];
        let p = vec![self.n as i64; 2 * self.n + 1];
        match self.range(1, &e, &p) {
            Some((lo, hi)) => (lo..=hi).collect(),
            None => Vec::new(),
        }
    }
}

/// Coefficients `c_0 = 1, c_1, .., c_n` of `x^n + c_1 x^(n-1) + .. + c_n`.
pub(crate) fn coefficients(e: &[i64]) -> Vec<i64> {
    e.iter().enumerate().map(|(k, &v)| if k % 2 == 1 { -v } else { v }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_roots() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(u64::MAX as u128), u32::MAX as u128);
    }

    #[test]
    fn newton_identities() {
        // roots 1, 2, 3: e = (1, 6, 11, 6), p_k = 1 + 2^k + 3^k
        let w = Walk { n: 3, caps: vec![0, 100, 100, 100], power_sums: None, units_only: false, nonzero_constant: true };
        let e = vec![1, 6, 11, 6];
        let mut p = vec![3i64; 7];
        for k in 1..=6 {
            p[k] = Walk::power_sum(&e, &p, k, 3).unwrap();
            assert_eq!(p[k], 1 + 2i64.pow(k as u32) + 3i64.pow(k as u32));
        }
        let _ = w;
    }

    #[test]
    fn walk_finds_bounded_polynomials() {
        // all roots on the unit circle or inside with sum |z|^2 <= 2, degree 2
        let w = Walk { n: 2, caps: vec![0, 2, 1], power_sums: Some((2, 1)), units_only: true, nonzero_constant: true };
        let mut seen = Vec::new();
        for e1 in w.e1_range() {
            w.run(e1, &mut |e| seen.push(coefficients(e)));
        }
        // x^2 + c1 x + c2 with c2 = +-1, |p1| <= 2, |p2| <= 2, |p3|, |p4| <= 2
        assert!(seen.contains(&vec![1, 0, 1]));
        assert!(seen.contains(&vec![1, 1, 1]));
        assert!(!seen.contains(&vec![1, 1, -1]));
    }
}
