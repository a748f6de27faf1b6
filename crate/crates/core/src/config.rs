use serde::{Deserialize, Serialize};

/// Search and size limits shared by the engine and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest Weyl orbit that will be enumerated explicitly.
    pub orbit_cap: u64,
    /// Largest representation dimension handed to the Freudenthal recursion.
    pub freudenthal_cap: u64,
    /// Coefficient bound `B` for the brute-force kernel search.
    pub kernel_search_bound: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { orbit_cap: 10_000_000, freudenthal_cap: 100_000, kernel_search_bound: 6 }
    }
}
