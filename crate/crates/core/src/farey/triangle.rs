use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use super::edge::FareyEdge;
use super::rational::{is_farey_edge, ExtendedRational};
use crate::error::{Error, Result};

/// A complementary triangle of the Farey tessellation, stored as a sorted
/// vertex triple (finite vertices ascending, infinity last). The stored order
/// is also the positive cyclic order of the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    v: [ExtendedRational; 3],
}

impl Triangle {
    pub fn new(a: ExtendedRational, b: ExtendedRational, c: ExtendedRational) -> Result<Self> {
        if !(is_farey_edge(&a, &b) && is_farey_edge(&b, &c) && is_farey_edge(&a, &c))
            || a == b
            || b == c
            || a == c
        {
            return Err(Error::NotFareyTriangle(format!("({a}, {b}, {c})")));
        }
        Ok(Self::sorted([a, b, c]))
    }

    fn sorted(mut v: [ExtendedRational; 3]) -> Self {
        v.sort_by(|x, y| x.canonical_cmp(y));
        Triangle { v }
    }

    pub(crate) fn from_edge_and_vertex(e: &FareyEdge, v: ExtendedRational) -> Self {
        Self::sorted([e.a().clone(), e.b().clone(), v])
    }

    /// The base triangle `(0, 1, ∞)`.
    pub fn base() -> Self {
        Triangle {
            v: [
                ExtendedRational::zero(),
                ExtendedRational::one(),
                ExtendedRational::Infinity,
            ],
        }
    }

    pub fn is_base(&self) -> bool {
        *self == Self::base()
    }

    /// Vertices in positive cyclic order.
    pub fn vertices(&self) -> &[ExtendedRational; 3] {
        &self.v
    }

    pub fn contains(&self, x: &ExtendedRational) -> bool {
        self.v.contains(x)
    }

    pub fn edges(&self) -> [FareyEdge; 3] {
        let [a, b, c] = &self.v;
        let mk = |x: &ExtendedRational, y: &ExtendedRational| {
            FareyEdge::new(x.clone(), y.clone()).expect("triangle sides are Farey edges")
        };
        [mk(a, b), mk(b, c), mk(a, c)]
    }

    pub fn has_edge(&self, e: &FareyEdge) -> bool {
        self.contains(e.a()) && self.contains(e.b())
    }

    /// The vertex not on `e`.
    pub fn opposite(&self, e: &FareyEdge) -> Option<&ExtendedRational> {
        if !self.has_edge(e) {
            return None;
        }
        self.v.iter().find(|x| !e.contains(x))
    }

    /// The triangle on the other side of the side `e`.
    pub fn across(&self, e: &FareyEdge) -> Result<Triangle> {
        let here = self
            .opposite(e)
            .ok_or_else(|| Error::NotFareyTriangle(format!("{e} is not a side of {self}")))?;
        let (m, n) = e.flanking_vertices();
        Ok(e.with_vertex(if &m == here { n } else { m }))
    }

    /// Rotation `(x, v, y)` of the positive cyclic order with `v` in the middle.
    pub(crate) fn rotation_centered_at(&self, v: &ExtendedRational) -> [&ExtendedRational; 3] {
        let i = self.v.iter().position(|x| x == v).expect("vertex of triangle");
        [&self.v[(i + 2) % 3], &self.v[i], &self.v[(i + 1) % 3]]
    }

    /// The two exits `(left, right)` of a triangle entered through `entry`,
    /// as seen when walking in through `entry`.
    pub fn exits(&self, entry: &FareyEdge) -> Result<(FareyEdge, FareyEdge)> {
        let v = self
            .opposite(entry)
            .ok_or_else(|| Error::NotFareyTriangle(format!("{entry} is not a side of {self}")))?;
        let [x, v, y] = self.rotation_centered_at(v);
        let left = FareyEdge::new(v.clone(), y.clone())?;
        let right = FareyEdge::new(x.clone(), v.clone())?;
        Ok((left, right))
    }

    /// The side through which the dual-tree path from the base triangle
    /// enters, together with the triangle on the other side of it; `None` for
    /// the base triangle.
    pub fn parent(&self) -> Option<(FareyEdge, Triangle)> {
        if self.is_base() {
            return None;
        }
        let [a, b, c] = &self.v;
        let entry = if c.is_infinite() {
            // (n, n + 1, ∞): the base lies towards 0.
            let n = a.numer();
            if n.is_positive() {
                FareyEdge::new(a.clone(), c.clone())
            } else {
                FareyEdge::new(b.clone(), c.clone())
            }
        } else {
            // The newest vertex has the strictly largest denominator; the
            // other two span the entry edge.
            let newest = self
                .v
                .iter()
                .max_by(|x, y| x.denom().cmp(&y.denom()))
                .expect("three vertices");
            let rest: Vec<_> = self.v.iter().filter(|x| *x != newest).cloned().collect();
            FareyEdge::new(rest[0].clone(), rest[1].clone())
        }
        .expect("triangle sides are Farey edges");
        let parent = self.across(&entry).expect("entry is a side");
        Some((entry, parent))
    }

    /// Distance from the base triangle in the dual tree.
    pub fn distance(&self) -> u32 {
        let [a, _, c] = &self.v;
        if c.is_infinite() {
            // Closed form along the strip of triangles (n, n + 1, ∞).
            let n = a.numer();
            let d = if n.is_positive() { n } else { -n };
            return num_traits::ToPrimitive::to_u32(&d).unwrap_or(u32::MAX);
        }
        // A finite triangle is the birth triangle of its newest vertex, the
        // one with the largest denominator.
        let newest = self
            .v
            .iter()
            .max_by(|x, y| x.denom().cmp(&y.denom()))
            .expect("three vertices");
        vertex_depth(newest)
    }

    /// Crossed edges from the base triangle to this one, nearest first.
    pub fn dual_path(&self) -> Vec<FareyEdge> {
        let mut path = Vec::new();
        let mut t = self.clone();
        while let Some((e, p)) = t.parent() {
            path.push(e);
            t = p;
        }
        path.reverse();
        path
    }

    pub fn address(&self) -> TriangleAddress {
        let path = self.dual_path();
        if path.is_empty() {
            return TriangleAddress::base();
        }
        let root = BaseSide::from_edge(&path[0]).expect("first crossing is a base side");
        let mut word = Vec::with_capacity(path.len() - 1);
        let mut current = Triangle::base().across(&path[0]).expect("base side");
        for pair in path.windows(2) {
            let (left, _) = current.exits(&pair[0]).expect("path is connected");
            word.push(if left == pair[1] { Turn::Left } else { Turn::Right });
            current = current.across(&pair[1]).expect("path is connected");
        }
        TriangleAddress { root: Some(root), word }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.v[0], self.v[1], self.v[2])
    }
}

/// One of the three sides of the base triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseSide {
    /// `(0, ∞)`
    ZeroInfinity,
    /// `(1, ∞)`
    OneInfinity,
    /// `(0, 1)`
    ZeroOne,
}

impl BaseSide {
    pub fn edge(self) -> FareyEdge {
        let (x, y) = match self {
            BaseSide::ZeroInfinity => (ExtendedRational::zero(), ExtendedRational::Infinity),
            BaseSide::OneInfinity => (ExtendedRational::one(), ExtendedRational::Infinity),
            BaseSide::ZeroOne => (ExtendedRational::zero(), ExtendedRational::one()),
        };
        FareyEdge::new(x, y).expect("base sides are Farey edges")
    }

    pub fn from_edge(e: &FareyEdge) -> Option<Self> {
        [BaseSide::ZeroInfinity, BaseSide::OneInfinity, BaseSide::ZeroOne]
            .into_iter()
            .find(|s| &s.edge() == e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
}

/// A path in the dual tree from the base triangle: the base side crossed
/// first (`None` for the base triangle itself), then a left/right choice at
/// every subsequent triangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangleAddress {
    pub root: Option<BaseSide>,
    pub word: Vec<Turn>,
}

impl TriangleAddress {
    pub fn base() -> Self {
        TriangleAddress { root: None, word: Vec::new() }
    }

    pub fn new(root: Option<BaseSide>, word: Vec<Turn>) -> Result<Self> {
        if root.is_none() && !word.is_empty() {
            return Err(Error::InvalidAddress(
                "the base triangle address has no turns".into(),
            ));
        }
        Ok(TriangleAddress { root, word })
    }

    pub fn len(&self) -> usize {
        self.word.len() + usize::from(self.root.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Follows the address, returning the target triangle and the crossed
    /// edges in order.
    pub fn decode(&self) -> (Triangle, Vec<FareyEdge>) {
        let Some(root) = self.root else {
            return (Triangle::base(), Vec::new());
        };
        let mut entry = root.edge();
        let mut current = Triangle::base().across(&entry).expect("base side");
        let mut path = vec![entry.clone()];
        for turn in &self.word {
            let (left, right) = current.exits(&entry).expect("entry is a side");
            entry = match turn {
                Turn::Left => left,
                Turn::Right => right,
            };
            current = current.across(&entry).expect("exit is a side");
            path.push(entry.clone());
        }
        (current, path)
    }

    pub fn triangle(&self) -> Triangle {
        self.decode().0
    }
}

/// Text form: `base`, or the first crossed side (`0inf`, `1inf`, `01`)
/// followed by `:` and the turns as `L`/`R`, e.g. `0inf:LRR`.
impl fmt::Display for TriangleAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(root) = self.root else { return f.write_str("base") };
        let side = match root {
            BaseSide::ZeroInfinity => "0inf",
            BaseSide::OneInfinity => "1inf",
            BaseSide::ZeroOne => "01",
        };
        write!(f, "{side}:")?;
        for t in &self.word {
            f.write_str(match t {
                Turn::Left => "L",
                Turn::Right => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for TriangleAddress {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "base" {
            return Ok(TriangleAddress::base());
        }
        let bad = || Error::InvalidAddress(format!("`{s}` is not `base` or `<side>:<L/R word>`"));
        let (side, word) = s.split_once(':').ok_or_else(bad)?;
        let root = match side {
            "0inf" => BaseSide::ZeroInfinity,
            "1inf" => BaseSide::OneInfinity,
            "01" => BaseSide::ZeroOne,
            _ => return Err(bad()),
        };
        let word = word
            .chars()
            .map(|c| match c {
                'L' => Ok(Turn::Left),
                'R' => Ok(Turn::Right),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        TriangleAddress::new(Some(root), word)
    }
}

/// Crossed edges from the base triangle to the addressed triangle.
pub fn dual_path(t: &TriangleAddress) -> Vec<FareyEdge> {
    t.decode().1
}

/// Distance of the birth triangle of `x`, from the continued fraction
/// `x = [a0; a1, ..., ak]`: the Stern-Brocot depth `a0 + ... + ak - 1` for
/// positive `x`, shifted by the strip of triangles `(-n, -n + 1, ∞)` for
/// negative `x`.
pub(crate) fn vertex_depth(x: &ExtendedRational) -> u32 {
    use num_integer::Integer;
    use num_traits::{ToPrimitive, Zero};

    let ExtendedRational::Finite(r) = x else { return 0 };
    let (p, q) = (r.numer().clone(), r.denom().clone());
    let (a0, rem) = p.div_mod_floor(&q);
    let sum_tail = |mut num: BigInt, mut den: BigInt| {
        // Partial quotients of num/den in (0, 1), excluding the leading 0.
        let mut total = BigInt::zero();
        while !num.is_zero() {
            let (quot, r) = den.div_mod_floor(&num);
            total += quot;
            den = std::mem::replace(&mut num, r);
        }
        total
    };
    let depth = if a0.is_negative() {
        let frac = if rem.is_zero() { BigInt::zero() } else { sum_tail(rem, q) - 1 };
        -a0 + frac
    } else if a0.is_zero() && rem.is_zero() {
        BigInt::zero()
    } else {
        a0 + sum_tail(rem, q) - 1
    };
    depth.to_u32().unwrap_or(u32::MAX)
}

/// The triangle in which `x` first appears when growing the tessellation
/// outward from the base triangle.
pub fn birth_triangle(x: &ExtendedRational) -> Triangle {
    use num_integer::Integer;

    let base = Triangle::base();
    if base.contains(x) {
        return base;
    }
    if x.is_integer() {
        let n = x.numer();
        let m = if n.is_positive() { &n - 1 } else { &n + 1 };
        return Triangle::new(x.clone(), ExtendedRational::integer(m), ExtendedRational::Infinity)
            .expect("consecutive integers span a triangle");
    }
    // Stern-Brocot parents a/b < p/q < c/d with b + d = q: p*b - q*a = 1.
    let (p, q) = (x.numer(), x.denom());
    let ext = p.extended_gcd(&q);
    // ext.x * p + ext.y * q = 1, so b = ext.x (mod q), a = -ext.y.
    let b = ext.x.mod_floor(&q);
    let a: num_bigint::BigInt = (&p * &b - 1) / &q;
    let left = ExtendedRational::new(a.clone(), b.clone()).expect("nonzero");
    let right = ExtendedRational::new(&p - &a, &q - &b).expect("nonzero");
    Triangle::new(left, x.clone(), right).expect("Stern-Brocot parents span a triangle")
}
