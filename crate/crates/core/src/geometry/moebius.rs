use num_complex::Complex64;

use super::point::{orientation, ExtReal, Orientation};
use crate::error::{Error, Result};

/// An orientation-preserving Möbius map `z ↦ (az + b) / (cz + d)` of the
/// upper half-plane, stored with `ad - bc = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MoebiusMap {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl MoebiusMap {
    /// Rejects non-positive determinants; rescales to determinant one.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > 0.0) || !det.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Möbius map ({a} {b}; {c} {d}) has determinant {det}, expected > 0"
            )));
        }
        Ok(MoebiusMap { a, b, c, d }.normalized())
    }

    pub(crate) fn from_entries_unchecked(a: f64, b: f64, c: f64, d: f64) -> Self {
        MoebiusMap { a, b, c, d }
    }

    pub fn identity() -> Self {
        MoebiusMap { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    /// `z ↦ kz`, `k > 0`.
    pub fn scaling(k: f64) -> Self {
        let s = k.sqrt();
        MoebiusMap { a: s, b: 0.0, c: 0.0, d: 1.0 / s }
    }

    pub fn translation(t: f64) -> Self {
        MoebiusMap { a: 1.0, b: t, c: 0.0, d: 1.0 }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    #[must_use]
    pub fn normalized(self) -> Self {
        let k = 1.0 / self.det().sqrt();
        MoebiusMap { a: self.a * k, b: self.b * k, c: self.c * k, d: self.d * k }
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        MoebiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `self ∘ other`, renormalized to determinant one.
    #[must_use]
    pub fn compose(&self, o: &MoebiusMap) -> Self {
        MoebiusMap {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
        .normalized()
    }

    pub fn apply(&self, x: ExtReal) -> ExtReal {
        match x {
            ExtReal::Infinity => {
                if self.c == 0.0 {
                    ExtReal::Infinity
                } else {
                    ExtReal::Finite(self.a / self.c)
                }
            }
            ExtReal::Finite(x) => {
                let den = self.c * x + self.d;
                if den == 0.0 {
                    ExtReal::Infinity
                } else {
                    ExtReal::from((self.a * x + self.b) / den)
                }
            }
        }
    }

    /// Action on a point of the upper half-plane.
    pub fn apply_complex(&self, z: Complex64) -> Complex64 {
        (z * self.a + self.b) / (z * self.c + self.d)
    }

    /// Entrywise distance to `other` after fixing the sign ambiguity of
    /// PSL(2, R).
    pub fn distance(&self, o: &MoebiusMap) -> f64 {
        let plus = [self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d];
        let minus = [self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d];
        let m = |v: [f64; 4]| v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        m(plus).min(m(minus))
    }
}

/// Orientation-preserving map sending `z1, z2, z3` to `0, 1, ∞`. Requires a
/// positively ordered triple.
fn to_standard(z: [ExtReal; 3]) -> Result<MoebiusMap> {
    use ExtReal::*;
    if orientation(z[0], z[1], z[2]) != Orientation::Positive {
        return Err(Error::Degenerate(format!(
            "triple ({}, {}, {}) is not positively ordered and distinct",
            z[0], z[1], z[2]
        )));
    }
    let m = match (z[0], z[1], z[2]) {
        (Infinity, Finite(z2), Finite(z3)) => MoebiusMap { a: 0.0, b: -(z2 - z3), c: -1.0, d: z3 },
        (Finite(z1), Infinity, Finite(z3)) => MoebiusMap { a: 1.0, b: -z1, c: 1.0, d: -z3 },
        (Finite(z1), Finite(z2), Infinity) => MoebiusMap { a: -1.0, b: z1, c: 0.0, d: -(z2 - z1) },
        (Finite(z1), Finite(z2), Finite(z3)) => MoebiusMap {
            a: z2 - z3,
            b: -z1 * (z2 - z3),
            c: z2 - z1,
            d: -z3 * (z2 - z1),
        },
        _ => unreachable!("orientation check rejects repeated infinity"),
    };
    MoebiusMap::new(m.a, m.b, m.c, m.d)
}

/// The unique Möbius map with `M(src[i]) = dst[i]`. Both triples must be
/// distinct and positively ordered.
pub fn map_triple(src: [ExtReal; 3], dst: [ExtReal; 3]) -> Result<MoebiusMap> {
    let s = to_standard(src)?;
    let t = to_standard(dst)?;
    Ok(t.inverse().compose(&s))
}

/// Cross-ratio `(c - a)(d - b) / ((d - a)(c - b))`, with factors involving a
/// point at infinity dropped in pairs.
pub fn cross_ratio(a: ExtReal, b: ExtReal, c: ExtReal, d: ExtReal) -> Result<f64> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::Degenerate("cross-ratio of coincident points".into()));
            }
        }
    }
    let diff = |x: ExtReal, y: ExtReal| match (x, y) {
        (ExtReal::Finite(x), ExtReal::Finite(y)) => x - y,
        _ => 1.0,
    };
    Ok(diff(c, a) * diff(d, b) / (diff(d, a) * diff(c, b)))
}

/// Hyperbolic translation of length `t` along the geodesic from `from` to
/// `to`, moving towards `to` when `t > 0`.
pub fn hyperbolic_translation(from: ExtReal, to: ExtReal, t: f64) -> Result<MoebiusMap> {
    use ExtReal::*;
    // Any orientation-preserving A with A(from) = 0, A(to) = ∞.
    let a = match (from, to) {
        (Finite(f), Finite(g)) => {
            if f < g {
                MoebiusMap::new(-1.0, f, 1.0, -g)?
            } else if f > g {
                MoebiusMap::new(1.0, -f, 1.0, -g)?
            } else {
                return Err(Error::Degenerate("translation axis has equal endpoints".into()));
            }
        }
        (Infinity, Finite(g)) => MoebiusMap { a: 0.0, b: -1.0, c: 1.0, d: -g },
        (Finite(f), Infinity) => MoebiusMap::translation(-f),
        (Infinity, Infinity) => {
            return Err(Error::Degenerate("translation axis has equal endpoints".into()))
        }
    };
    Ok(a.inverse().compose(&MoebiusMap::scaling(t.exp())).compose(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use ExtReal::*;

    #[test]
    fn apply_examples() {
        assert_eq!(MoebiusMap::identity().apply(Finite(5.0)), Finite(5.0));
        let inv = MoebiusMap::new(0.0, -1.0, 1.0, 0.0).unwrap();
        assert_eq!(inv.apply(Finite(0.0)), Infinity);
        let shift = MoebiusMap::new(1.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(shift.apply(Infinity), Infinity);
        assert!(MoebiusMap::new(1.0, 0.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn map_triple_examples() {
        let std = [Finite(0.0), Finite(1.0), Infinity];
        let id = map_triple(std, std).unwrap();
        assert!(id.distance(&MoebiusMap::identity()) < 1e-15);
        let shift = map_triple(std, [Finite(1.0), Finite(2.0), Infinity]).unwrap();
        assert!(shift.distance(&MoebiusMap::translation(1.0)) < 1e-15);
        let dbl = map_triple(std, [Finite(0.0), Finite(2.0), Infinity]).unwrap();
        assert!(dbl.distance(&MoebiusMap::scaling(2.0)) < 1e-15);
        assert!(map_triple([Finite(1.0), Finite(0.0), Infinity], std).is_err());
        assert!(map_triple([Finite(0.0), Finite(0.0), Infinity], std).is_err());
    }

    #[test]
    fn cross_ratio_examples() {
        assert_relative_eq!(
            cross_ratio(Finite(0.0), Finite(1.0), Finite(2.0), Infinity).unwrap(),
            2.0
        );
        assert_relative_eq!(
            cross_ratio(Finite(0.0), Finite(1.0), Finite(3.0), Infinity).unwrap(),
            1.5
        );
        // Fan-symmetric quadruple at the fan at infinity: (∞, k, m, n) with
        // m - k = n - m.
        assert_relative_eq!(
            cross_ratio(Infinity, Finite(-2.0), Finite(1.0), Finite(4.0)).unwrap(),
            2.0
        );
        assert!(cross_ratio(Finite(0.0), Finite(0.0), Finite(1.0), Infinity).is_err());
    }

    #[test]
    fn translation_examples() {
        let t = 0.7;
        let up = hyperbolic_translation(Finite(0.0), Infinity, t).unwrap();
        assert!(up.distance(&MoebiusMap::scaling(t.exp())) < 1e-14);
        let down = hyperbolic_translation(Infinity, Finite(0.0), t).unwrap();
        assert!(down.distance(&MoebiusMap::scaling((-t).exp())) < 1e-14);
        let none = hyperbolic_translation(Finite(-1.0), Finite(1.0), 0.0).unwrap();
        assert!(none.distance(&MoebiusMap::identity()) < 1e-14);
        assert!(hyperbolic_translation(Finite(2.0), Finite(2.0), 1.0).is_err());
    }
}
