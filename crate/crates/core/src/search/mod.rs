//! Exhaustive search for monic irreducible polynomials with `m(f) < 1`.
//!
//! If `m(alpha) < 1` at signature `(s, t)`, write `T = s + t`. Then
//! `R + C < T`, so every conjugate satisfies `|alpha_i|^2 < T` and the sum of
//! `|alpha_i|^2` over all `n` conjugates, `R + 2C`, is below `2T`. From this:
//!
//! * `|c_k| < C(n, k) T^(k/2)` (coefficient box),
//! * `|c_k| <= C(n, k) (2T / n)^(k/2)` by Maclaurin's inequality,
//! * `|p_k| <= 2T * T^((k-2)/2)` for the power sums, `k >= 2`,
//! * `|c_n| = 1` in degree at most 23, since a non-unit has `m >= 1` there.
//!
//! `f(x)` and `(-1)^n f(-x)` have the same `m` and signature, so only the
//! lexicographically smaller member of each pair is tested.

mod enumerate;
mod subelement;

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::{factor_witness, IntPolynomial};
use crate::measures::{compare_guarded, m_lower_bound_signature, size_profile, unit_necessity_gate, Guarded};
use crate::roots::{find_roots, float_roots, is_real};
use enumerate::{binomial, coefficients, isqrt, Walk};

pub use subelement::{smyth_scan, subelement_scan, SmythScan, SubelementPattern, SubelementScan};

/// Degrees accepted by [`enumerate_m_lt_one`].
pub const SEARCH_DEGREES: std::ops::RangeInclusive<usize> = 2..=8;

/// Largest degree for which the unpruned box may be enumerated.
pub const RAW_MAX_DEGREE: usize = 4;

/// Largest integer strictly below `C(n, i) T^(i/2)`, for `i = 0..=n`; the
/// entry `i` bounds the coefficient of `x^(n-i)`.
pub fn coefficient_bounds(n: usize, s_plus_t: usize) -> Result<Vec<i64>> {
    if s_plus_t == 0 || s_plus_t > n {
        return Err(Error::InvalidSignature(format!("s + t = {s_plus_t} with n = {n}")));
    }
    Ok((0..=n)
        .map(|i| {
            if i == 0 {
                return 1;
            }
            let c = binomial(n, i);
            // X^2 = C^2 T^i; the largest k >= 0 with k^2 < X^2
            let x2 = c * c * (s_plus_t as u128).pow(i as u32);
            isqrt(x2 - 1) as i64
        })
        .collect())
}

/// `floor(C(n, k) (S / n)^(k/2))`, the Maclaurin bound on `|e_k|` when the
/// squared moduli of the roots sum to at most `S`.
fn maclaurin_bounds(n: usize, sum_sq: u128) -> Vec<i64> {
    (0..=n)
        .map(|k| {
            let c = binomial(n, k);
            let num = c * c * sum_sq.pow(k as u32);
            let den = (n as u128).pow(k as u32);
            isqrt(num / den) as i64
        })
        .collect()
}

/// The signatures `(s, t)` of degree `n` with `s t != 0`.
pub fn admissible_signatures(n: usize) -> Vec<(usize, usize)> {
    (1..=n / 2)
        .rev()
        .map(|t| (n - 2 * t, t))
        .filter(|&(s, _)| s > 0)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hit {
    pub polynomial: IntPolynomial,
    pub signature: (usize, usize),
    pub m: f64,
    pub lower_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignatureGroup {
    pub signature: (usize, usize),
    pub count: usize,
    pub lower_bound: f64,
    /// Ascending in `m`, ties by coefficients (highest degree first).
    pub polynomials: Vec<Hit>,
    /// `m` within the guard of 1.
    pub inconclusive: Vec<Hit>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Leaves of the bounded enumeration, orbit representatives only.
    pub generated: u64,
    /// Leaves that survived the remaining power-sum tests.
    pub passed_bounds: u64,
    pub passed_irreducibility: u64,
    pub passed_m: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.generated += o.generated;
        self.passed_bounds += o.passed_bounds;
        self.passed_irreducibility += o.passed_irreducibility;
        self.passed_m += o.passed_m;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub degree: usize,
    pub pruned: bool,
    pub groups: Vec<SignatureGroup>,
    pub stats: SearchStats,
    /// Candidates whose analysis raised an error.
    pub failures: Vec<String>,
    /// Not serialized, so that reports of equal runs are byte-identical.
    #[serde(skip)]
    pub wall_time_secs: f64,
}

impl SearchReport {
    pub fn total(&self) -> usize {
        self.groups.iter().map(|g| g.count).sum()
    }

    pub fn group(&self, s: usize, t: usize) -> Option<&SignatureGroup> {
        self.groups.iter().find(|g| g.signature == (s, t))
    }

    /// Rows `signature,polynomial,m,lower_bound` with nine decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("signature,polynomial,m,lower_bound\n");
        for g in &self.groups {
            for h in &g.polynomials {
                out.push_str(&format!(
                    "\"({},{})\",\"{}\",{:.9},{:.9}\n",
                    g.signature.0, g.signature.1, h.polynomial, h.m, h.lower_bound
                ));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub signature: Option<(usize, usize)>,
    pub prune: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { signature: None, prune: true, threads: None }
    }
}

enum Outcome {
    Rejected,
    Reducible,
    AboveOne,
    Hit(f64),
    Inconclusive(f64),
    Failed(String),
}

#[derive(Default)]
struct Partial {
    stats: SearchStats,
    hits: Vec<(Vec<i64>, f64)>,
    inconclusive: Vec<(Vec<i64>, f64)>,
    failures: Vec<String>,
}

fn to_poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::new(c.iter().rev().map(|&v| BigInt::from(v)).collect())
}

/// Float signature and `m`, or `None` when some root is too close to the
/// real axis to classify with confidence.
fn prescreen(c: &[i64]) -> Option<((usize, usize), f64)> {
    let coeffs: Vec<f64> = c.iter().rev().map(|&v| v as f64).collect();
    let roots = float_roots(&coeffs)?;
    let (mut s, mut t, mut sum) = (0, 0, 0.0);
    for z in &roots {
        let band = 1e-4 * (1.0 + z.norm());
        if z.im.abs() < band && !is_real(*z) {
            return None;
        }
        if is_real(*z) {
            s += 1;
            sum += z.re * z.re;
        } else if z.im > 0.0 {
            t += 1;
            sum += z.norm_sqr();
        }
    }
    if s + 2 * t != roots.len() {
        return None;
    }
    Some(((s, t), sum / (s + t) as f64))
}

fn evaluate(c: &[i64], target: (usize, usize), screen_first: bool, stats: &mut SearchStats) -> Outcome {
    if screen_first {
        if let Some((sig, m)) = prescreen(c) {
            if sig != target || m > 1.0 + 1e-6 {
                return Outcome::Rejected;
            }
        }
    }
    let f = to_poly(c);
    match factor_witness(&f) {
        Ok(Some(_)) => return Outcome::Reducible,
        Ok(None) => {}
        Err(e) => return Outcome::Failed(format!("{f}: {e}")),
    }
    stats.passed_irreducibility += 1;
    let roots = match find_roots(&f) {
        Ok(r) => r,
        Err(e) => return Outcome::Failed(format!("{f}: {e}")),
    };
    if roots.signature() != target {
        return Outcome::Rejected;
    }
    let profile = match size_profile(&roots) {
        Ok(p) => p,
        Err(e) => return Outcome::Failed(format!("{f}: {e}")),
    };
    match compare_guarded(profile.m, 1.0) {
        Guarded::Less => Outcome::Hit(profile.m),
        Guarded::Inconclusive => Outcome::Inconclusive(profile.m),
        Guarded::Greater => Outcome::AboveOne,
    }
}

fn mirror(c: &[i64]) -> Vec<i64> {
    c.iter().enumerate().map(|(k, &v)| if k % 2 == 1 { -v } else { v }).collect()
}

fn search_signature(n: usize, sig: (usize, usize), prune: bool) -> Result<Partial> {
    let tt = sig.0 + sig.1;
    let boxb = coefficient_bounds(n, tt)?;
    let walk = if prune {
        let mac = maclaurin_bounds(n, 2 * tt as u128);
        let caps = (0..=n).map(|k| boxb[k].min(mac[k])).collect();
        Walk {
            n,
            caps,
            power_sums: Some((2 * tt as u128, tt as u128)),
            units_only: unit_necessity_gate(n, &BigInt::from(2)),
            nonzero_constant: true,
        }
    } else {
        Walk { n, caps: boxb, power_sums: None, units_only: false, nonzero_constant: false }
    };
    // e_1 = -c_1; the orbit representative has c_1 <= 0
    let e1s: Vec<i64> = walk.e1_range().into_iter().filter(|&e1| !prune || e1 >= 0).collect();
    let parts: Vec<Partial> = e1s
        .par_iter()
        .map(|&e1| {
            let mut part = Partial::default();
            walk.run(e1, &mut |e| {
                let c = coefficients(e);
                let m = mirror(&c);
                if prune && m < c {
                    return;
                }
                part.stats.generated += 1;
                part.stats.passed_bounds += 1;
                let record = |list: &mut Vec<(Vec<i64>, f64)>, v: f64| {
                    list.push((c.clone(), v));
                    if prune && m != c {
                        list.push((m.clone(), v));
                    }
                };
                match evaluate(&c, sig, n >= 5 || !prune, &mut part.stats) {
                    Outcome::Hit(v) => {
                        part.stats.passed_m += 1;
                        record(&mut part.hits, v);
                    }
                    Outcome::Inconclusive(v) => record(&mut part.inconclusive, v),
                    Outcome::Failed(msg) => part.failures.push(msg),
                    Outcome::Rejected | Outcome::Reducible | Outcome::AboveOne => {}
                }
            });
            part
        })
        .collect();
    let mut total = Partial::default();
    for p in parts {
        total.stats += p.stats;
        total.hits.extend(p.hits);
        total.inconclusive.extend(p.inconclusive);
        total.failures.extend(p.failures);
    }
    Ok(total)
}

fn sort_hits(list: Vec<(Vec<i64>, f64)>, sig: (usize, usize), lb: f64) -> Vec<Hit> {
    let mut list = list;
    list.sort_by(|a, b| {
        let ka = (a.1 * 1e9).round() as i64;
        let kb = (b.1 * 1e9).round() as i64;
        ka.cmp(&kb).then_with(|| a.0.cmp(&b.0))
    });
    list.dedup_by(|a, b| a.0 == b.0);
    list.into_iter()
        .map(|(c, m)| Hit { polynomial: to_poly(&c), signature: sig, m, lower_bound: lb })
        .collect()
}

/// All monic irreducible polynomials of degree `n` with `m < 1`, grouped by
/// signature. Without `prune` only the coefficient box is used (`n <= 4`).
pub fn enumerate_m_lt_one(n: usize, options: &SearchOptions) -> Result<SearchReport> {
    if !SEARCH_DEGREES.contains(&n) {
        return Err(Error::DegreeCap { degree: n, range: "2..=8" });
    }
    if !options.prune && n > RAW_MAX_DEGREE {
        return Err(Error::DegreeCap { degree: n, range: "2..=4 without pruning" });
    }
    let signatures = match options.signature {
        Some((s, t)) => {
            if s + 2 * t != n {
                return Err(Error::InvalidSignature(format!("({s},{t}) does not have degree {n}")));
            }
            vec![(s, t)]
        }
        None => admissible_signatures(n),
    };
    let start = Instant::now();
    let run = || -> Result<SearchReport> {
        let mut groups = Vec::new();
        let mut stats = SearchStats::default();
        let mut failures = Vec::new();
        for sig in signatures {
            let part = search_signature(n, sig, options.prune)?;
            let lb = m_lower_bound_signature(sig.0, sig.1)?;
            stats += part.stats;
            failures.extend(part.failures);
            let polynomials = sort_hits(part.hits, sig, lb);
            groups.push(SignatureGroup {
                signature: sig,
                count: polynomials.len(),
                lower_bound: lb,
                polynomials,
                inconclusive: sort_hits(part.inconclusive, sig, lb),
            });
        }
        Ok(SearchReport {
            degree: n,
            pruned: options.prune,
            groups,
            stats,
            failures,
            wall_time_secs: 0.0,
        })
    };
    let mut report = match options.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    report.wall_time_secs = start.elapsed().as_secs_f64();
    Ok(report)
}
