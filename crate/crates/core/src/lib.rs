//! Lattice paths with unit up-steps and arbitrarily long down-steps that
//! never follow each other: exact enumeration, generating functions,
//! bijections with restricted compositions, and OEIS cross-checks.

pub mod bijection;
pub mod catalog;
pub mod composition;
pub mod oeis;
pub mod oracle;
pub mod path;
pub mod printed;
pub mod series;
pub mod system;
pub mod verify;

pub use catalog::{evaluate, CatalogError, NamedSeries, Params};
pub use composition::{Composition, CompositionError};
pub use path::{LatticePath, PathError, Step};
pub use series::{SeriesError, TruncatedSeries};
pub use system::{SeriesSystem, SystemError};
