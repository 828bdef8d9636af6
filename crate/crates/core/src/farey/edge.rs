use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::rational::{is_farey_edge, ExtendedRational};
use super::triangle::Triangle;
use crate::error::{Error, Result};

/// An edge of the Farey tessellation, stored with its endpoints in canonical
/// order (smaller finite endpoint first, infinity last).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyEdge {
    a: ExtendedRational,
    b: ExtendedRational,
}

impl FareyEdge {
    pub fn new(x: ExtendedRational, y: ExtendedRational) -> Result<Self> {
        if x == y || !is_farey_edge(&x, &y) {
            return Err(Error::NotFareyNeighbors(x.to_string(), y.to_string()));
        }
        Ok(match x.canonical_cmp(&y) {
            Ordering::Greater => FareyEdge { a: y, b: x },
            _ => FareyEdge { a: x, b: y },
        })
    }

    /// Parses both endpoints with `FromStr` for `ExtendedRational`.
    pub fn from_strs(x: &str, y: &str) -> Result<Self> {
        Self::new(x.parse()?, y.parse()?)
    }

    pub fn a(&self) -> &ExtendedRational {
        &self.a
    }

    pub fn b(&self) -> &ExtendedRational {
        &self.b
    }

    pub fn endpoints(&self) -> [&ExtendedRational; 2] {
        [&self.a, &self.b]
    }

    pub fn contains(&self, v: &ExtendedRational) -> bool {
        &self.a == v || &self.b == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(&self, v: &ExtendedRational) -> Option<&ExtendedRational> {
        if &self.a == v {
            Some(&self.b)
        } else if &self.b == v {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn shared_endpoint(&self, other: &FareyEdge) -> Option<&ExtendedRational> {
        self.endpoints().into_iter().find(|v| other.contains(v))
    }

    /// Canonical text key `p/q|r/s`.
    pub fn key(&self) -> String {
        format!("{}|{}", self.a, self.b)
    }

    /// Third vertices of the two complementary triangles on either side:
    /// `(mediant, anti-mediant)`.
    pub fn flanking_vertices(&self) -> (ExtendedRational, ExtendedRational) {
        let (p, q, r, s) = (self.a.numer(), self.a.denom(), self.b.numer(), self.b.denom());
        let mediant = ExtendedRational::new(&p + &r, &q + &s).expect("neighbors have a mediant");
        let anti = ExtendedRational::new(p - r, q - s).expect("neighbors have an anti-mediant");
        (mediant, anti)
    }

    /// The two complementary triangles with this edge as a side.
    pub fn flanking_triangles(&self) -> (Triangle, Triangle) {
        let (m, n) = self.flanking_vertices();
        (self.with_vertex(m), self.with_vertex(n))
    }

    pub(crate) fn with_vertex(&self, v: ExtendedRational) -> Triangle {
        Triangle::from_edge_and_vertex(self, v)
    }

    /// Whether this is one of the three sides of the base triangle `(0, 1, ∞)`.
    pub fn is_base_side(&self) -> bool {
        let z = ExtendedRational::zero();
        let o = ExtendedRational::one();
        let i = ExtendedRational::Infinity;
        (self.a == z && (self.b == o || self.b == i)) || (self.a == o && self.b == i)
    }

    /// The flanking triangle on the side of the base triangle.
    pub fn near_triangle(&self) -> Triangle {
        if self.is_base_side() {
            return Triangle::base();
        }
        if self.b.is_infinite() {
            // (n, ∞): the base lies towards n = 0, 1.
            let n = self.a.numer();
            let toward = if n.is_positive() { &n - 1 } else { &n + 1 };
            return self.with_vertex(ExtendedRational::integer(toward));
        }
        // The mediant has a strictly larger denominator than either endpoint, so
        // this edge is the entry edge of the mediant side.
        self.with_vertex(self.flanking_vertices().1)
    }

    /// The flanking triangle on the side away from the base triangle.
    pub fn far_triangle(&self) -> Triangle {
        let near = self.near_triangle();
        let (t1, t2) = self.flanking_triangles();
        if t1 == near {
            t2
        } else {
            t1
        }
    }

    /// Farey generation: 0 for the sides of the base triangle, otherwise the
    /// dual-tree distance from the base triangle to the nearer flanking
    /// triangle. Agrees with the breadth-first depth in
    /// [`Tessellation`](super::Tessellation).
    pub fn generation(&self) -> u32 {
        if self.is_base_side() {
            return 0;
        }
        if self.b.is_infinite() {
            // Closed form along the fan at infinity.
            let n = self.a.numer();
            let g = if n.is_positive() { n - 1 } else { -n };
            return g.to_u32().unwrap_or(u32::MAX);
        }
        // The far side is the birth triangle of the mediant.
        super::triangle::vertex_depth(&self.flanking_vertices().0) - 1
    }
}

impl PartialOrd for FareyEdge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical key order (first endpoint, then second); not geometric.
impl Ord for FareyEdge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a
            .canonical_cmp(&other.a)
            .then_with(|| self.b.canonical_cmp(&other.b))
    }
}

impl fmt::Display for FareyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl FromStr for FareyEdge {
    type Err = Error;

    /// Parses the canonical key `p/q|r/s`. Endpoints may be given in either
    /// order but must be written as reduced fractions.
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = s
            .split_once('|')
            .ok_or_else(|| Error::Format(format!("edge key `{s}` is not of the form p/q|r/s")))?;
        let parse = |t: &str| -> Result<ExtendedRational> {
            let (p, q) = t
                .split_once('/')
                .ok_or_else(|| Error::Format(format!("edge key `{s}`: `{t}` is not p/q")))?;
            let p: BigInt = p.parse().map_err(|_| Error::Format(format!("edge key `{s}`")))?;
            let q: BigInt = q.parse().map_err(|_| Error::Format(format!("edge key `{s}`")))?;
            let v = ExtendedRational::new(p.clone(), q.clone())
                .map_err(|_| Error::Format(format!("edge key `{s}`")))?;
            if v.numer() != p || v.denom() != q {
                return Err(Error::Format(format!(
                    "edge key `{s}`: `{t}` is not in lowest terms"
                )));
            }
            Ok(v)
        };
        FareyEdge::new(parse(x)?, parse(y)?)
    }
}
