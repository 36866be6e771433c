//! Scans over low-degree totally real algebraic integers.

use num_bigint::BigInt;
use serde::Serialize;

use super::enumerate::{binomial, coefficients, isqrt, Walk};
use super::maclaurin_bounds;
use crate::error::{Error, Result};
use crate::intpoly::{exact_real_root_count, factor_witness, is_squarefree, IntPolynomial};
use crate::measures::{compare_guarded, Guarded};
use crate::roots::find_roots;

/// A totally real subelement `alpha` of degree 2 or 3 whose conjugates enter
/// a size sum with the given multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubelementPattern {
    pub name: String,
    pub degree: usize,
    pub weights: Vec<u32>,
    /// Violators have a weighted square sum below this value.
    pub bound: u32,
    /// Per-coefficient bounds `|c_1|, .., |c_d|`; derived from the bound
    /// when absent.
    pub coefficient_box: Option<Vec<i64>>,
}

impl SubelementPattern {
    pub fn new(name: &str, weights: &[u32], bound: u32, coefficient_box: Option<Vec<i64>>) -> Result<Self> {
        let degree = weights.len();
        if !(2..=3).contains(&degree) || weights.contains(&0) || bound == 0 {
            return Err(Error::UnsupportedPattern(format!("{name}: weights {weights:?}, bound {bound}")));
        }
        if coefficient_box.as_ref().is_some_and(|b| b.len() != degree) {
            return Err(Error::UnsupportedPattern(format!("{name}: box length must equal the degree")));
        }
        Ok(SubelementPattern { name: name.into(), degree, weights: weights.to_vec(), bound, coefficient_box })
    }

    /// Quadratic subelements of a quartic field of signature (2, 1).
    pub fn quartic() -> Self {
        Self::new("quartic (2,1), quadratic", &[2, 1], 3, None).unwrap()
    }

    pub fn sextic_2_2_quadratic() -> Self {
        Self::new("sextic (2,2), quadratic", &[2, 2], 4, None).unwrap()
    }

    pub fn sextic_2_2_cubic() -> Self {
        Self::new("sextic (2,2), cubic", &[2, 1, 1], 4, Some(vec![5, 11, 7])).unwrap()
    }

    pub fn sextic_4_1_quadratic() -> Self {
        Self::new("sextic (4,1), quadratic", &[2, 3], 5, None).unwrap()
    }

    pub fn sextic_4_1_cubic() -> Self {
        Self::new("sextic (4,1), cubic", &[1, 2, 2], 5, Some(vec![6, 14, 11])).unwrap()
    }

    /// Every conjugate has `alpha_i^2 < bound / min(weights)`, so `|c_k|` is
    /// strictly below `C(d, k) (bound / w)^(k/2)`.
    pub fn derived_box(&self) -> Vec<i64> {
        let w = *self.weights.iter().min().unwrap() as u128;
        let b = self.bound as u128;
        (1..=self.degree)
            .map(|k| {
                let c = binomial(self.degree, k);
                // largest v with v^2 w^k < c^2 b^k
                let rhs = c * c * b.pow(k as u32);
                let wk = w.pow(k as u32);
                let mut v = isqrt(rhs / wk) as i64;
                while v >= 0 && (v as u128).pow(2) * wk >= rhs {
                    v -= 1;
                }
                v
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubelementScan {
    pub pattern: SubelementPattern,
    pub coefficient_box: Vec<i64>,
    pub examined: u64,
    /// Irreducible polynomials with only real roots.
    pub eligible: u64,
    pub violators: Vec<(IntPolynomial, f64)>,
    pub inconclusive: Vec<(IntPolynomial, f64)>,
    /// Smallest weighted square sum met.
    pub minimum: Option<(IntPolynomial, f64)>,
}

fn permutations(w: &[u32]) -> Vec<Vec<u32>> {
    if w.len() <= 1 {
        return vec![w.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..w.len() {
        let mut rest = w.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn totally_real_irreducible(f: &IntPolynomial) -> Result<bool> {
    if !is_squarefree(f) || exact_real_root_count(f)? != f.degree() {
        return Ok(false);
    }
    Ok(factor_witness(f)?.is_none())
}

/// Checks every totally real irreducible polynomial in the box for a
/// weighted square sum below the bound.
pub fn subelement_scan(pattern: &SubelementPattern) -> Result<SubelementScan> {
    let d = pattern.degree;
    let bx = pattern.coefficient_box.clone().unwrap_or_else(|| pattern.derived_box());
    let perms = permutations(&pattern.weights);
    let mut scan = SubelementScan {
        pattern: pattern.clone(),
        coefficient_box: bx.clone(),
        examined: 0,
        eligible: 0,
        violators: Vec::new(),
        inconclusive: Vec::new(),
        minimum: None,
    };
    let mut c = vec![0i64; d];
    let mut idx: Vec<i64> = bx.iter().map(|b| -b).collect();
    loop {
        c.copy_from_slice(&idx);
        if c[d - 1] != 0 {
            scan.examined += 1;
            let mut coeffs: Vec<BigInt> = c.iter().rev().map(|&v| BigInt::from(v)).collect();
            coeffs.push(BigInt::from(1));
            let f = IntPolynomial::new(coeffs);
            if totally_real_irreducible(&f)? {
                scan.eligible += 1;
                let roots = find_roots(&f)?;
                let sq: Vec<f64> = roots.real_roots.iter().map(|x| x * x).collect();
                let weighted = perms
                    .iter()
                    .map(|p| p.iter().zip(&sq).map(|(w, x)| *w as f64 * x).sum::<f64>())
                    .fold(f64::INFINITY, f64::min);
                if scan.minimum.as_ref().is_none_or(|m| weighted < m.1) {
                    scan.minimum = Some((f.clone(), weighted));
                }
                match compare_guarded(weighted, pattern.bound as f64) {
                    Guarded::Less => scan.violators.push((f, weighted)),
                    Guarded::Inconclusive => scan.inconclusive.push((f, weighted)),
                    Guarded::Greater => {}
                }
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                return Ok(scan);
            }
            if idx[i] < bx[i] {
                idx[i] += 1;
                break;
            }
            idx[i] = -bx[i];
            i += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SmythScan {
    pub degrees: (usize, usize),
    pub examined: u64,
    pub totally_real: u64,
    /// Totally real with `R = 3n/2`.
    pub equality: Vec<IntPolynomial>,
    /// Totally real with `R < 3n/2`.
    pub below: Vec<IntPolynomial>,
}

/// Enumerates totally real algebraic integers of degree `lo..=hi` with
/// `R = sum alpha_i^2 <= 3n/2`.
pub fn smyth_scan(lo: usize, hi: usize) -> Result<SmythScan> {
    if lo < 2 || hi > 8 || lo > hi {
        return Err(Error::DegreeCap { degree: hi, range: "2..=8" });
    }
    let mut scan = SmythScan { degrees: (lo, hi), examined: 0, totally_real: 0, equality: Vec::new(), below: Vec::new() };
    for n in lo..=hi {
        let s = (3 * n / 2) as u128;
        let walk = Walk {
            n,
            caps: maclaurin_bounds(n, s),
            power_sums: Some((s, s)),
            units_only: false,
            nonzero_constant: true,
        };
        let mut leaves = Vec::new();
        for e1 in walk.e1_range() {
            walk.run(e1, &mut |e| leaves.push(coefficients(e)));
        }
        for c in leaves {
            scan.examined += 1;
            let f = IntPolynomial::new(c.iter().rev().map(|&v| BigInt::from(v)).collect());
            if !totally_real_irreducible(&f)? {
                continue;
            }
            scan.totally_real += 1;
            // all roots real, so R is the integer p_2 = c_1^2 - 2 c_2
            let r = c[1] * c[1] - 2 * c[2];
            match (2 * r).cmp(&(3 * n as i64)) {
                std::cmp::Ordering::Less => scan.below.push(f),
                std::cmp::Ordering::Equal => scan.equality.push(f),
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    scan.equality.sort();
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_boxes_match_the_stated_ones() {
        assert_eq!(SubelementPattern::sextic_2_2_cubic().derived_box(), vec![5, 11, 7]);
        assert_eq!(SubelementPattern::sextic_4_1_cubic().derived_box(), vec![6, 14, 11]);
        assert_eq!(SubelementPattern::quartic().derived_box(), vec![3, 2]);
    }

    #[test]
    fn unsupported_patterns() {
        assert!(SubelementPattern::new("x", &[1, 1, 1, 1], 4, None).is_err());
        assert!(SubelementPattern::new("x", &[1], 4, None).is_err());
        assert!(SubelementPattern::new("x", &[1, 0], 4, None).is_err());
    }

    #[test]
    fn quartic_scan_is_clean() {
        let s = subelement_scan(&SubelementPattern::quartic()).unwrap();
        assert!(s.violators.is_empty() && s.inconclusive.is_empty());
        assert!(s.eligible > 0);
    }

    #[test]
    fn low_weights_find_violators() {
        // x^2 - x - 1 has 2 phi^-2 + phi^2 = 3.38..., below 4
        let p = SubelementPattern::new("probe", &[2, 1], 4, None).unwrap();
        let s = subelement_scan(&p).unwrap();
        assert!(s.violators.iter().any(|(f, _)| f.to_string() == "x^2 - x - 1"));
    }

    #[test]
    fn smyth_small() {
        let s = smyth_scan(2, 3).unwrap();
        assert!(s.below.is_empty());
        let names: Vec<String> = s.equality.iter().map(|f| f.to_string()).collect();
        assert_eq!(names, ["x^2 - x - 1", "x^2 + x - 1"]);
    }
}
