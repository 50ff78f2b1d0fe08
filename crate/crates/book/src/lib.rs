//! Guide chapters compiled as doctests so every listing stays runnable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/field.md")]
pub mod field {}
#[doc = include_str!("../../../book/src/theta.md")]
pub mod theta {}
#[doc = include_str!("../../../book/src/fractions.md")]
pub mod fractions {}
#[doc = include_str!("../../../book/src/lambert.md")]
pub mod lambert {}
#[doc = include_str!("../../../book/src/numeric.md")]
pub mod numeric {}
#[doc = include_str!("../../../book/src/registry.md")]
pub mod registry {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
