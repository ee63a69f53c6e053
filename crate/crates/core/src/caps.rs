/// Size limits for the exponential procedures.
///
/// Every operation that enumerates subsets, lower sets or windows checks the
/// relevant cap up front and fails with [`Error::BoundExceeded`](crate::Error)
/// instead of truncating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Caps {
    /// Largest poset size accepted by [`enumerate_posets`](crate::canon::enumerate_posets).
    pub enumeration_max: usize,
    /// Largest number of members a closed-set family may have.
    pub family_max: usize,
    /// Largest lattice on which the beneath relation is computed.
    pub beneath_max: usize,
    /// Largest carrier whose full power set may be enumerated.
    pub subset_max: usize,
    /// Largest window bound for the Johnstone dcpo.
    pub johnstone_window_max: usize,
    /// Largest window bound for the Kou dcpo.
    pub kou_window_max: usize,
}

impl Caps {
    /// Hard ceiling for `enumeration_max`; canonical codes are packed into a `u64`.
    pub const ENUMERATION_CEILING: usize = 8;
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration_max: 6,
            family_max: 4096,
            beneath_max: 20,
            subset_max: 16,
            johnstone_window_max: 32,
            kou_window_max: 8,
        }
    }
}
