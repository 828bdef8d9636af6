use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::farey::ExtendedRational;
use crate::geometry::{horocycle_distance, ExtReal, Horocycle};

/// `e^{-2δ}` for the signed distance `δ` between two horocycles.
pub fn lambda_from_decoration(c1: &Horocycle, c2: &Horocycle) -> Result<f64> {
    Ok((-2.0 * horocycle_distance(c1, c2)?).exp())
}

/// The horocyclic length formula `2 λ3 / (λ1 λ2)` for the arc at the vertex
/// where the sides with lambda lengths `λ1`, `λ2` meet.
///
/// With lambda lengths `e^{-2δ}` this does not match the measured arc; see
/// [`horocyclic_length`] for the length realized by the decoration.
pub fn horocyclic_length_formula(l1: f64, l2: f64, l3: f64) -> Result<f64> {
    check(l1, l2, l3)?;
    Ok(2.0 * l3 / (l1 * l2))
}

/// Length of the decorating horocycle's arc inside a decorated ideal
/// triangle, at the vertex where the sides with lambda lengths `λ1`, `λ2`
/// meet, `λ3` being the opposite side: `(λ1 λ2 / λ3)^{1/4}`.
pub fn horocyclic_length(l1: f64, l2: f64, l3: f64) -> Result<f64> {
    check(l1, l2, l3)?;
    Ok((l1 * l2 / l3).powf(0.25))
}

fn check(l1: f64, l2: f64, l3: f64) -> Result<()> {
    if [l1, l2, l3].iter().all(|l| *l > 0.0 && l.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("lambda lengths ({l1}, {l2}, {l3}) must be positive")))
    }
}

/// The Ford circle at `v`: diameter `1/q²` at `p/q`, height 1 at infinity.
pub fn ford_circle(v: &ExtendedRational) -> Horocycle {
    match v.to_ext_real() {
        ExtReal::Infinity => Horocycle { center: ExtReal::Infinity, size: 1.0 },
        x => {
            let q = v.denom().to_f64().unwrap_or(f64::INFINITY);
            Horocycle { center: x, size: 1.0 / (q * q) }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::Tessellation;
    use crate::geometry::{wedge_horocyclic_length, Geodesic, MoebiusMap};
    use approx::assert_relative_eq;
    use ExtReal::*;

    #[test]
    fn decoration_examples() {
        let c0 = Horocycle::new(Finite(0.0), 1.0).unwrap();
        let c1 = Horocycle::new(Finite(1.0), 1.0).unwrap();
        assert_relative_eq!(lambda_from_decoration(&c0, &c1).unwrap(), 1.0);
        let high = Horocycle::new(Infinity, 1f64.exp()).unwrap();
        assert_relative_eq!(lambda_from_decoration(&c0, &high).unwrap(), (-2f64).exp(), max_relative = 1e-15);
        let m = MoebiusMap::new(2.0, 1.0, 1.0, 3.0).unwrap();
        assert_relative_eq!(
            lambda_from_decoration(&c0.transform(&m), &high.transform(&m)).unwrap(),
            (-2f64).exp(),
            max_relative = 1e-12
        );
        assert!(lambda_from_decoration(&c0, &c0).is_err());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(horocyclic_length_formula(1.0, 1.0, 1.0).unwrap(), 2.0);
        assert_eq!(horocyclic_length_formula(2.0, 1.0, 1.0).unwrap(), 1.0);
        assert!(horocyclic_length_formula(0.0, 1.0, 1.0).is_err());
        assert_eq!(horocyclic_length(1.0, 1.0, 1.0).unwrap(), 1.0);
    }

    #[test]
    fn ford_circles_have_unit_lambdas() {
        for (e, _) in Tessellation::shared(6).edges() {
            let l = lambda_from_decoration(&ford_circle(e.a()), &ford_circle(e.b())).unwrap();
            assert_relative_eq!(l, 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn measured_arc_matches_geometric_length() {
        // Triangle (0, 2, ∞) with arbitrary horocycles.
        let (c0, c2, ci) = (
            Horocycle::new(Finite(0.0), 0.7).unwrap(),
            Horocycle::new(Finite(2.0), 1.9).unwrap(),
            Horocycle::new(Infinity, 3.1).unwrap(),
        );
        let l = |a: &Horocycle, b: &Horocycle| lambda_from_decoration(a, b).unwrap();
        let arc = wedge_horocyclic_length(&ci, Geodesic(Finite(0.0), Infinity), Geodesic(Finite(2.0), Infinity)).unwrap();
        assert_relative_eq!(arc, horocyclic_length(l(&c0, &ci), l(&c2, &ci), l(&c0, &c2)).unwrap(), max_relative = 1e-12);
    }
}
