//! Text formats: shear and lambda files, CSV tables and a deterministic
//! JSON writer.

mod files;
mod number;
mod tables;

pub use files::{read_lambda, read_shear, write_lambda, write_shear};
pub use number::{format_ext, format_f64, to_json};
pub use tables::{
    chain_series_csv, char_map_csv, fan_reports_csv, lambda_csv, realization_csv, shear_csv, symmetry_csv,
    tessellation_csv, thm_d_csv,
};
