//! Diagram monoids and their idempotents.
//!
//! The crate models elements of the partition monoid `P_n` and its
//! submonoids, multiplies them, classifies idempotents (plain and twisted),
//! and counts idempotents exactly through several independent routes.

mod dsu;

pub mod combinatorics;
pub mod diagram;
pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod family;
pub mod idempotent;
pub mod lambda;
pub mod oracle;
pub mod tables;
pub mod verify;

pub use combinatorics::{Count, IntegerPartitionSpec};
pub use diagram::{DiagramPartition, Product, StructuralProfile, Summand};
pub use enumeration::{CValues, CountTable, Engine, Method};
pub use equivalence::EquivalenceRelation;
pub use error::{Error, Result};
pub use family::MonoidFamily;
pub use idempotent::{ComponentType, TwistOrder};
pub use lambda::{HalfGraph, LambdaGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/idempotents.md")]
    mod idempotents {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
