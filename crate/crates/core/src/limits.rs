use crate::error::{Error, Result};

/// Caps on exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of vertex subsets a scan may visit (default `2^20`).
    pub max_subsets: u64,
    /// Largest number of lattice points enumerated in one fundamental
    /// parallelepiped (default `10^7`).
    pub max_parallelepiped: u64,
    /// Largest number of 1-entries of an incidence matrix handed to the
    /// odd-cycle search (default 40).
    pub max_incidence_ones: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subsets: 1 << 20,
            max_parallelepiped: 10_000_000,
            max_incidence_ones: 40,
        }
    }
}

impl Limits {
    pub(crate) fn check_subsets(&self, n: usize, what: &str) -> Result<()> {
        if n >= 64 || (1u64 << n) > self.max_subsets {
            return Err(Error::ResourceLimit(format!(
                "{what}: 2^{n} subsets exceeds cap {}",
                self.max_subsets
            )));
        }
        Ok(())
    }
}
