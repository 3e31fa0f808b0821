//! Combinatorial Grassmannians, geometric hyperplanes and Veldkamp spaces.
//!
//! The main path is `G2(7)` → its 63 hyperplanes → the Veldkamp space on
//! them → `W(5,2)` and the seven magic Veldkamp lines. Everything is
//! checked exhaustively; there are no coordinates.
//!
//! ```
//! use veldkamp_core::{build_g2, build_magic_line, build_veldkamp};
//!
//! let v = build_veldkamp(&build_g2(7)?)?;
//! let m = build_magic_line(&v, 7)?;
//! assert_eq!(m.core_points.len(), 15);
//! # Ok::<(), veldkamp_core::Error>(())
//! ```

pub mod error;
pub mod export;
pub mod grassmannian;
pub mod hyperplanes;
pub mod incidence;
pub mod magic_line;
pub mod pointset;
pub mod polar;
pub mod veldkamp;
pub mod verify;

pub use error::{Error, Result};
pub use grassmannian::build_g2;
pub use hyperplanes::{enumerate_hyperplanes, Bipartition, Hyperplane};
pub use incidence::IncidenceStructure;
pub use magic_line::{build_magic_line, MagicLine, Sector};
pub use pointset::{PointSet, MAX_POINTS};
pub use veldkamp::{build_veldkamp, VeldkampSpace};
pub use verify::{verify_all, VerifyReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/incidence.md")]
    mod incidence {}
    #[doc = include_str!("../../../book/src/grassmannians.md")]
    mod grassmannians {}
    #[doc = include_str!("../../../book/src/hyperplanes.md")]
    mod hyperplanes {}
    #[doc = include_str!("../../../book/src/veldkamp.md")]
    mod veldkamp {}
    #[doc = include_str!("../../../book/src/polar.md")]
    mod polar {}
    #[doc = include_str!("../../../book/src/magic-line.md")]
    mod magic_line {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
