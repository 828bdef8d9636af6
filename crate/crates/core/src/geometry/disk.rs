use num_complex::Complex64;

use super::point::ExtReal;

/// Cayley transform `z ↦ (z - i) / (z + i)` from the upper half-plane to the
/// unit disk.
pub fn to_disk(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    (z - i) / (z + i)
}

/// Boundary version of [`to_disk`]; infinity goes to `1`.
pub fn boundary_to_disk(x: ExtReal) -> Complex64 {
    match x {
        ExtReal::Infinity => Complex64::new(1.0, 0.0),
        ExtReal::Finite(x) => to_disk(Complex64::new(x, 0.0)),
    }
}
