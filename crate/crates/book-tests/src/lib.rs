//! Book chapters as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/farey.md")]
pub mod farey {}

#[doc = include_str!("../../../book/src/shear.md")]
pub mod shear {}

#[doc = include_str!("../../../book/src/classify.md")]
pub mod classify {}

#[doc = include_str!("../../../book/src/lambda.md")]
pub mod lambda {}

#[doc = include_str!("../../../book/src/files.md")]
pub mod files {}
