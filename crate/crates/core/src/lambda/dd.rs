//! Double-double arithmetic: a value is the unevaluated sum `hi + lo` with
//! `|lo| <= ulp(hi) / 2`, giving about 32 significant digits.

use std::ops::{Add, Div, Mul, MulAssign, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub(crate) fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub(crate) fn recip(self) -> Self {
        Dd::new(1.0) / self
    }

    pub(crate) fn sqr(self) -> Self {
        self * self
    }

    /// One Newton step on the `f64` square root.
    pub(crate) fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::new(self.hi.sqrt());
        }
        let x = self.hi.sqrt();
        let (p, e) = two_prod(x, x);
        let r = ((self.hi - p) - e + self.lo) / (2.0 * x);
        let (hi, lo) = quick_two_sum(x, r);
        Dd { hi, lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + -o
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, o: Dd) {
        *self = *self * o;
    }
}

impl Div for Dd {
    type Output = Dd;
    /// Long division: two `f64` quotient digits and a correction.
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::new(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::new(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn farey_gap_is_exact_to_double_double() {
        let x1 = Dd::new(21.0) / Dd::new(34.0);
        let x2 = Dd::new(55.0) / Dd::new(89.0);
        let resid = x2 * Dd::new(89.0) - Dd::new(55.0);
        assert!(resid.to_f64().abs() < 1e-30);
        let gap = x1 - x2;
        let want = -(Dd::new(34.0 * 89.0).recip());
        assert!(((gap - want) / want).to_f64().abs() < 1e-28);
        let lam = (Dd::new(34.0 * 34.0 * 89.0 * 89.0).recip() / gap.sqr()).sqr();
        assert!((lam.to_f64() - 1.0).abs() < 1e-28);
    }

    #[test]
    fn sqrt_round_trips() {
        for x in [2.0, 0.37, 1e-9, 12345.678] {
            let r = Dd::new(x).sqrt();
            assert!(((r * r - Dd::new(x)) / Dd::new(x)).to_f64().abs() < 1e-30);
        }
    }
}
