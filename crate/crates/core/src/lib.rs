//! Exact arithmetic, partitions, t-core codings and power series for
//! hook-length expansions of powers of the Euler product.

pub mod error;
pub mod exactnum;
pub mod identities;
pub mod partition;
pub mod series;
pub mod tcore;

pub use error::{Error, Result};
pub use exactnum::{BetaPoly, Integer, Rational, Ring};
pub use partition::Partition;
pub use series::Series;
