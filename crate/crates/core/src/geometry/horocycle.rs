use super::moebius::MoebiusMap;
use super::point::ExtReal;
use crate::error::{Error, Result};

/// A horocycle, given by its center on the boundary and its Euclidean size:
/// the diameter for a finite center, the height of the horizontal line for
/// the center at infinity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Horocycle {
    pub center: ExtReal,
    pub size: f64,
}

/// A geodesic of the upper half-plane, given by its two endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Geodesic(pub ExtReal, pub ExtReal);

impl Geodesic {
    /// The endpoint other than `p`, if `p` is an endpoint.
    pub fn other_end(&self, p: ExtReal) -> Option<ExtReal> {
        if self.0 == p {
            Some(self.1)
        } else if self.1 == p {
            Some(self.0)
        } else {
            None
        }
    }
}

impl Horocycle {
    pub fn new(center: ExtReal, size: f64) -> Result<Self> {
        if !(size > 0.0) || !size.is_finite() {
            return Err(Error::InvalidParameter(format!("horocycle size {size} must be positive")));
        }
        Ok(Horocycle { center, size })
    }

    /// Image under a Möbius map, computed exactly from the matrix entries.
    pub fn transform(&self, m: &MoebiusMap) -> Horocycle {
        let m = m.normalized();
        match self.center {
            ExtReal::Finite(x) => {
                let den = m.c * x + m.d;
                if den == 0.0 {
                    Horocycle { center: ExtReal::Infinity, size: 1.0 / (m.c * m.c * self.size) }
                } else {
                    Horocycle { center: m.apply(self.center), size: self.size / (den * den) }
                }
            }
            ExtReal::Infinity => {
                if m.c == 0.0 {
                    Horocycle { center: ExtReal::Infinity, size: self.size * m.a * m.a }
                } else {
                    Horocycle {
                        center: ExtReal::Finite(m.a / m.c),
                        size: 1.0 / (m.c * m.c * self.size),
                    }
                }
            }
        }
    }
}

impl MoebiusMap {
    pub fn apply_horocycle(&self, c: &Horocycle) -> Horocycle {
        c.transform(self)
    }
}

/// Signed distance between two horocycles along the geodesic joining their
/// centers; negative when they overlap.
pub fn horocycle_distance(c1: &Horocycle, c2: &Horocycle) -> Result<f64> {
    use ExtReal::*;
    match (c1.center, c2.center) {
        (Finite(x1), Finite(x2)) if x1 != x2 => {
            Ok(((x1 - x2) * (x1 - x2) / (c1.size * c2.size)).ln())
        }
        (Finite(_), Infinity) => Ok((c2.size / c1.size).ln()),
        (Infinity, Finite(_)) => Ok((c1.size / c2.size).ln()),
        _ => Err(Error::Degenerate("horocycles have the same center".into())),
    }
}

/// Sends `p` to infinity by an orientation-preserving map.
pub(crate) fn to_infinity(p: ExtReal) -> MoebiusMap {
    match p {
        ExtReal::Infinity => MoebiusMap::identity(),
        ExtReal::Finite(x) => MoebiusMap::from_entries_unchecked(0.0, -1.0, 1.0, -x),
    }
}

/// Hyperbolic length of the arc of `c` cut out by two geodesics ending at
/// its center.
pub fn wedge_horocyclic_length(c: &Horocycle, g1: Geodesic, g2: Geodesic) -> Result<f64> {
    let (Some(p1), Some(p2)) = (g1.other_end(c.center), g2.other_end(c.center)) else {
        return Err(Error::Degenerate(
            "wedge geodesics must both end at the horocycle center".into(),
        ));
    };
    let m = to_infinity(c.center);
    let h = c.transform(&m);
    match (m.apply(p1), m.apply(p2)) {
        (ExtReal::Finite(x1), ExtReal::Finite(x2)) if x1 != x2 => Ok((x1 - x2).abs() / h.size),
        _ => Err(Error::Degenerate("wedge geodesics coincide".into())),
    }
}
