use crate::error::{Error, Result};
use crate::farey::{Chain, ExtendedRational};
use crate::geometry::{to_infinity, ExtReal, MoebiusMap};

/// Lengths of the successive arcs of a leaf crossing the wedges of a chain,
/// with the chain's vertices placed by `place`.
///
/// Wedge `n` (for `n = 1..=count`) lies between `e_n` and `e_{n+1}` at their
/// common endpoint. The leaf runs along a horocycle centered at the wedge's
/// pivot; when the pivot changes it continues on the horocycle through the
/// same point of the crossed geodesic centered at the new pivot. The first
/// arc has length `first`.
pub fn leaf_lengths(
    place: &dyn Fn(&ExtendedRational) -> Result<ExtReal>,
    chain: &Chain,
    count: usize,
    first: f64,
) -> Result<Vec<f64>> {
    if chain.len() < count + 1 {
        return Err(Error::OutOfRange(format!(
            "{count} leaf arcs need a chain of {} edges, got {}",
            count + 1,
            chain.len()
        )));
    }
    let edges = chain.edges();
    let mut out = Vec::with_capacity(count);
    // Current pivot, its normalizing frame and the horocycle height there.
    let mut state: Option<(ExtendedRational, MoebiusMap, f64)> = None;
    for i in 0..count {
        let p = chain.pivot(i).clone();
        let frame = to_infinity(place(&p)?);
        let x = frame.apply(place(edges[i].other(&p).expect("pivot"))?);
        let y = frame.apply(place(edges[i + 1].other(&p).expect("pivot"))?);
        let gap = match (x, y) {
            (ExtReal::Finite(x), ExtReal::Finite(y)) if x != y => (x - y).abs(),
            _ => return Err(Error::Degenerate(format!("wedge at {p} collapsed"))),
        };
        let height = match state.take() {
            None => gap / first,
            Some((q, _, h)) if q == p => h,
            Some((_, old, h)) => {
                // The old horocycle meets the geodesic to the new pivot at
                // height h; the new horocycle there has diameter h.
                let t = frame.compose(&old.inverse()).normalized();
                if t.c == 0.0 {
                    return Err(Error::Degenerate("pivots coincide".into()));
                }
                1.0 / (t.c * t.c * h)
            }
        };
        out.push(gap / height);
        state = Some((p, frame, height));
    }
    Ok(out)
}
