//! Lambda lengths `λ = e^{-2δ}` of decorated ideal triangulations: the
//! development of a lambda map into vertex positions and horocycles, its
//! shear map, and the series and window ratios phrased in lambda lengths.

mod dd;
mod decoration;
mod develop;
mod map;
mod bounds;

pub use decoration::{ford_circle, horocyclic_length, horocyclic_length_formula, lambda_from_decoration};
pub use develop::{develop, ford_decoration, shear_closed_form, shear_from_lambda, DecoratedRealization};
pub use map::{pinched_check, LambdaMap, LambdaWitness, PinchedReport};
pub use bounds::{thm_d_series, thm_e_bound, thm_e_ratio, wedge_alpha, LeafAnchor, ThmDReport, ThmEReport};
