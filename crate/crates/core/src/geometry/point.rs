use std::fmt;

/// A point of the extended real line, the boundary of the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinity,
}

impl ExtReal {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtReal::Infinity)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            ExtReal::Infinity => None,
        }
    }

    /// Equal up to relative tolerance `tol`; infinity only equals itself.
    pub fn approx_eq(self, other: ExtReal, tol: f64) -> bool {
        match (self, other) {
            (ExtReal::Infinity, ExtReal::Infinity) => true,
            (ExtReal::Finite(x), ExtReal::Finite(y)) => {
                (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
            }
            _ => false,
        }
    }
}

impl From<f64> for ExtReal {
    /// Non-finite values map to the (unsigned) point at infinity.
    fn from(x: f64) -> Self {
        if x.is_finite() {
            ExtReal::Finite(x)
        } else {
            ExtReal::Infinity
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => write!(f, "{x}"),
            ExtReal::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
    Degenerate,
}

/// Cyclic orientation of three points on the circle; positive when
/// `a → b → c` runs in the increasing direction of the real line.
pub fn orientation(a: ExtReal, b: ExtReal, c: ExtReal) -> Orientation {
    use ExtReal::*;
    let sign = match (a, b, c) {
        (Finite(a), Finite(b), Finite(c)) => (b - a) * (c - b) * (c - a),
        (Finite(a), Finite(b), Infinity) => b - a,
        (Finite(a), Infinity, Finite(c)) => a - c,
        (Infinity, Finite(b), Finite(c)) => c - b,
        _ => 0.0,
    };
    if sign > 0.0 {
        Orientation::Positive
    } else if sign < 0.0 {
        Orientation::Negative
    } else {
        Orientation::Degenerate
    }
}
