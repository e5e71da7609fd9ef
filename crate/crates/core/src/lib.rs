//! Cayley graphs on cyclic groups, symmetric and alternating groups, and
//! 2-gyrogroups, with constructive vertex/edge/total colorings, independent
//! proper-coloring verifiers, and exact brute-force oracles for small graphs.
//!
//! The crate is split along the pipeline:
//!
//! - [`perm`]: permutation arithmetic, group enumeration, cosets;
//! - [`gyro`]: the order-2m 2-gyrogroup table and its axiom checker;
//! - [`graph`]: graph representation and the Cayley/circulant builders;
//! - [`chroma`]: coloring data model, verifiers, and the matrix CSV format;
//! - [`construct`]: the coloring constructions, each self-verified;
//! - [`oracle`]: exact chromatic parameters by branch and bound;
//! - [`golden`]: embedded reference matrices.

pub mod chroma;
pub mod construct;
pub mod golden;
pub mod graph;
pub mod gyro;
pub mod oracle;
pub mod perm;
