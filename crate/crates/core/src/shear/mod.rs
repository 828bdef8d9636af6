//! Shear coordinates: from a circle homeomorphism to its shear map, and back
//! through the piecewise Möbius cocycle.

mod cocycle;
mod homeo;
mod map;

pub use cocycle::{char_map_eval, cocycle, cocycle_at, CharacteristicMap, Cocycle};
pub use homeo::{shear_from_homeo, BuiltinHomeo, PostComposed, VertexMap};
pub use map::ShearMap;
