//! Double-double arithmetic for residual evaluation and Newton polishing.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, ToPrimitive};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub(crate) fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Nearest double-double to an integer; `None` if it overflows.
    pub(crate) fn from_bigint(c: &BigInt) -> Option<Self> {
        let hi = c.to_f64().filter(|h| h.is_finite())?;
        let rest = c - BigInt::from_f64(hi)?;
        let lo = rest.to_f64().unwrap_or(0.0);
        let (hi, lo) = quick_two_sum(hi, lo);
        Some(Dd { hi, lo })
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (s, e) = quick_two_sum(s, e + self.lo + o.lo);
        Dd { hi: s, lo: e }
    }

    pub(crate) fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub(crate) fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub(crate) fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let (p, e) = quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi);
        Dd { hi: p, lo: e }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CDd {
    re: Dd,
    im: Dd,
}

impl CDd {
    pub(crate) fn from_c64(z: Complex64) -> Self {
        CDd { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    pub(crate) fn from_real(x: Dd) -> Self {
        CDd { re: x, im: Dd::default() }
    }

    pub(crate) fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub(crate) fn add(self, o: CDd) -> CDd {
        CDd { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    pub(crate) fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }
}

/// `p(z)` and `p'(z)` by Horner's rule in double-double; coefficients are
/// constant term first.
pub(crate) fn eval_with_derivative(coeffs: &[Dd], z: Complex64) -> (Complex64, Complex64) {
    let z = CDd::from_c64(z);
    let mut p = CDd::default();
    let mut d = CDd::default();
    for &c in coeffs.iter().rev() {
        d = d.mul(z).add(p);
        p = p.mul(z).add(CDd::from_real(c));
    }
    (p.to_c64(), d.to_c64())
}
