//! Exact combinatorics of the Farey tessellation.
//!
//! Vertices are the extended rationals, edges join Farey neighbors
//! (`|ps - qr| = 1`), and the complementary triangles form a trivalent tree
//! (the dual tree) rooted at the base triangle `(0, 1, ∞)`.

mod chain;
mod edge;
mod fan;
mod psl2z;
mod rational;
mod tessellation;
mod triangle;

pub use chain::{fan_chain, fan_walk, parse_chain, validate_chain, zigzag_chain, Chain};
pub use edge::FareyEdge;
pub use fan::{fan, fan_edge, fan_index, fan_range_within_depth};
pub use psl2z::{normalizer_to_infinity, IntegerMoebius};
pub use rational::{is_farey_edge, ExtendedRational};
pub use tessellation::{Tessellation, TriangleRecord};
pub use triangle::{birth_triangle, dual_path, BaseSide, Triangle, TriangleAddress, Turn};

/// Generation of a vertex: the distance of the triangle in which it first
/// appears.
pub fn vertex_generation(x: &ExtendedRational) -> u32 {
    birth_triangle(x).distance()
}
