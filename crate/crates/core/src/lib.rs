//! Smoothness of Schubert varieties in `G/B` and `G/P`.
//!
//! The crate builds root systems and Weyl groups, computes the torus
//! weights of tangent lines to T-curves at fixed points of a Schubert
//! variety, computes Peterson translates of tangent spaces along T-curves,
//! and uses them to decide smoothness at every fixed point.

pub mod error;
pub mod oracle;
pub mod peterson;
pub mod report;
pub mod rootsys;
pub mod schubert;
pub mod singloc;
pub mod sweep;
pub mod weyl;

pub use error::{Error, Result};
pub use peterson::{Translate, TranslateRequest};
pub use rootsys::{Factor, Root, RootSystem, Series, TypeDescriptor};
pub use schubert::{SchubertVariety, WeightSet};
pub use singloc::{SmoothnessOptions, SmoothnessReport, TangentBounds, Verdict};
pub use weyl::{BruhatInterval, WeylElement, WeylGroup};
