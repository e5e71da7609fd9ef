//! Golden reference matrices shipped as fixtures, embedded at compile time
//! so the library, tests, and the CLI `golden` subcommand all diff against
//! the same bytes.

/// Total color matrix of the 5th power of the 13-cycle.
pub const TABLE1_CSV: &str = include_str!("../fixtures/table1.csv");

/// Total color matrix of the 5th power of the 25-cycle.
pub const TABLE2_CSV: &str = include_str!("../fixtures/table2.csv");

/// The `(n, k)` instance each golden table belongs to.
pub const TABLE1_PARAMS: (usize, usize) = (13, 5);
pub const TABLE2_PARAMS: (usize, usize) = (25, 5);
