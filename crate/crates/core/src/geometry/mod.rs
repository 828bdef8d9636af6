//! Möbius maps, horocycles and ideal triangles in the upper half-plane.

mod disk;
mod horocycle;
mod moebius;
mod pair;
mod point;

pub use disk::{boundary_to_disk, to_disk};
pub use horocycle::{horocycle_distance, wedge_horocyclic_length, Geodesic, Horocycle};
pub(crate) use horocycle::to_infinity;
pub use moebius::{cross_ratio, hyperbolic_translation, map_triple, MoebiusMap};
pub use pair::{shear_by_cross_ratio, shear_of_pair};
pub use point::{orientation, ExtReal, Orientation};
