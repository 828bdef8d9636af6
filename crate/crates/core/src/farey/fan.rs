use num_traits::ToPrimitive;

use super::edge::FareyEdge;
use super::psl2z::normalizer_to_infinity;
use super::rational::ExtendedRational;
use crate::error::{Error, Result};

/// The edge with index `n` in the fan at `tip`.
///
/// With `A` the canonical normalizer of `tip`, the fan at infinity is indexed
/// by `(n, ∞) ↦ n` and every other fan is pulled back through `A`. At
/// infinity the index grows in the direction that keeps the horoball on the
/// left of the horocycle.
pub fn fan_edge(tip: &ExtendedRational, n: i64) -> FareyEdge {
    let inv = normalizer_to_infinity(tip).inverse();
    FareyEdge::new(tip.clone(), inv.apply(&ExtendedRational::integer(n)))
        .expect("PSL(2, Z) maps Farey edges to Farey edges")
}

/// Edges `lo..=hi` of the fan at `tip`, in index order.
pub fn fan(tip: &ExtendedRational, lo: i64, hi: i64) -> Vec<FareyEdge> {
    let inv = normalizer_to_infinity(tip).inverse();
    (lo..=hi)
        .map(|n| {
            FareyEdge::new(tip.clone(), inv.apply(&ExtendedRational::integer(n)))
                .expect("PSL(2, Z) maps Farey edges to Farey edges")
        })
        .collect()
}

/// Index of `e` in the fan at `tip`.
pub fn fan_index(tip: &ExtendedRational, e: &FareyEdge) -> Result<i64> {
    let other = e
        .other(tip)
        .ok_or_else(|| Error::InvalidParameter(format!("{e} is not in the fan at {tip}")))?;
    let image = normalizer_to_infinity(tip).apply(other);
    match image {
        ExtendedRational::Finite(r) if r.is_integer() => r
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::OutOfRange(format!("fan index of {e} at {tip}"))),
        _ => unreachable!("neighbors of the tip map to integers"),
    }
}

/// Contiguous index range of the edges of the fan at `tip` with generation at
/// most `depth`, or `None` if there are none.
///
/// Generations along a fan decrease to a minimum and then increase, so the
/// edges within a depth bound form one interval.
pub fn fan_range_within_depth(tip: &ExtendedRational, depth: u32) -> Option<(i64, i64)> {
    let inv = normalizer_to_infinity(tip).inverse();
    let gen = |n: i64| {
        FareyEdge::new(tip.clone(), inv.apply(&ExtendedRational::integer(n)))
            .expect("fan edge")
            .generation()
    };
    // The lowest-generation edge of the fan joins the tip to one of the
    // vertices of its birth triangle.
    let birth = super::triangle::birth_triangle(tip);
    let start = birth
        .vertices()
        .iter()
        .filter(|v| *v != tip)
        .map(|v| {
            let e = FareyEdge::new(tip.clone(), v.clone()).expect("triangle side");
            (e.generation(), fan_index(tip, &e).expect("in fan"))
        })
        .min()
        .expect("two other vertices");
    if start.0 > depth {
        return None;
    }
    let mut lo = start.1;
    while gen(lo - 1) <= depth {
        lo -= 1;
    }
    let mut hi = start.1;
    while gen(hi + 1) <= depth {
        hi += 1;
    }
    Some((lo, hi))
}
