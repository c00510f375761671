//! Hook-length combinatorics of integer partitions: boundary words, the
//! Littlewood decomposition, truncated multivariate q-series, and a registry
//! of hook-length generating-function identities checked by enumeration.

pub mod boundary;
pub mod enumerate;
pub mod error;
pub mod identities;
pub mod littlewood;
pub mod par;
pub mod partition;
pub mod series;

pub use boundary::{BoundaryWord, IndexPair};
pub use enumerate::PartitionClass;
pub use error::{Error, Result};
pub use littlewood::{LittlewoodDecomposition, ScDecomposition};
pub use par::Exec;
pub use partition::{Cell, Partition, Sign};
pub use series::{Monomial, QSeries, Rational, RingElement};
