use super::moebius::{cross_ratio, map_triple};
use super::point::{orientation, ExtReal, Orientation};
use crate::error::{Error, Result};

/// Orders the shared edge so that `(u, w, b)` is positively oriented.
fn orient_edge(shared: [ExtReal; 2], b: ExtReal) -> Result<(ExtReal, ExtReal)> {
    let [u, w] = shared;
    match orientation(u, w, b) {
        Orientation::Positive => Ok((u, w)),
        Orientation::Negative => Ok((w, u)),
        Orientation::Degenerate => Err(Error::Degenerate("coincident vertices".into())),
    }
}

fn off_vertex(t: &[ExtReal; 3], shared: [ExtReal; 2]) -> Result<ExtReal> {
    let rest: Vec<ExtReal> = t.iter().copied().filter(|p| !shared.contains(p)).collect();
    match rest.as_slice() {
        [b] => Ok(*b),
        _ => Err(Error::Degenerate("the shared edge is not a side of both triangles".into())),
    }
}

/// Shear of the pair of ideal triangles `t1`, `t2` across their common side:
/// `ln A(d)` where `A` sends the off-edge vertex of `t1` to `-1`, the shared
/// side to `(0, ∞)`, and `d` is the off-edge vertex of `t2`.
pub fn shear_of_pair(t1: &[ExtReal; 3], t2: &[ExtReal; 3], shared: [ExtReal; 2]) -> Result<f64> {
    let b = off_vertex(t1, shared)?;
    let d = off_vertex(t2, shared)?;
    let (u, w) = orient_edge(shared, b)?;
    let a = map_triple(
        [u, w, b],
        [ExtReal::Finite(0.0), ExtReal::Infinity, ExtReal::Finite(-1.0)],
    )?;
    match a.apply(d) {
        ExtReal::Finite(r) if r > 0.0 && r.is_finite() => Ok(r.ln()),
        _ => Err(Error::Degenerate("triangle interiors overlap".into())),
    }
}

/// The same shear from a cross-ratio of the quadrilateral `(a, b, c, d)`
/// with diagonal `(a, c)`, `b` on one side and `d` on the other.
pub fn shear_by_cross_ratio(shared: [ExtReal; 2], b: ExtReal, d: ExtReal) -> Result<f64> {
    let (a, c) = orient_edge(shared, b)?;
    if orientation(c, a, d) != Orientation::Positive {
        return Err(Error::Degenerate("triangle interiors overlap".into()));
    }
    let cr = cross_ratio(a, c, b, d)?;
    Ok(-(-cr).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use ExtReal::*;

    #[test]
    fn examples() {
        let s = shear_of_pair(
            &[Finite(-1.0), Finite(0.0), Infinity],
            &[Finite(0.0), Finite(2.0), Infinity],
            [Finite(0.0), Infinity],
        )
        .unwrap();
        assert_relative_eq!(s, 2f64.ln(), epsilon = 1e-15);
        let s = shear_of_pair(
            &[Finite(0.0), Finite(1.0), Infinity],
            &[Finite(1.0), Finite(2.0), Infinity],
            [Finite(1.0), Infinity],
        )
        .unwrap();
        assert!(s.abs() < 1e-15);
        let s = shear_of_pair(
            &[Finite(0.0), Finite(1.0), Finite(0.5)],
            &[Finite(0.0), Finite(1.0), Infinity],
            [Finite(1.0), Finite(0.0)],
        )
        .unwrap();
        assert!(s.abs() < 1e-15);
    }

    #[test]
    fn cross_ratio_route() {
        let s = shear_by_cross_ratio([Finite(0.0), Infinity], Finite(-1.0), Finite(2.0)).unwrap();
        assert_relative_eq!(s, 2f64.ln(), epsilon = 1e-15);
    }

    #[test]
    fn rejects_overlap_and_bad_edge() {
        // Both off vertices on the same side of (0, ∞).
        assert!(shear_of_pair(
            &[Finite(-1.0), Finite(0.0), Infinity],
            &[Finite(-2.0), Finite(0.0), Infinity],
            [Finite(0.0), Infinity],
        )
        .is_err());
        assert!(shear_of_pair(
            &[Finite(-1.0), Finite(0.0), Infinity],
            &[Finite(1.0), Finite(2.0), Infinity],
            [Finite(0.0), Infinity],
        )
        .is_err());
    }
}
