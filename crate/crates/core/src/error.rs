use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element index {index} out of range for a carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("relation is not antisymmetric: {0} and {1} lie on a cycle")]
    Cycle(usize, usize),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(&'static str),
    #[error("set is empty")]
    Empty,
    #[error("set is not directed")]
    NotDirected,
    #[error("{what}: requested {requested} exceeds the configured cap of {cap}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("not a lattice: {0}")]
    NotALattice(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

impl Error {
    pub(crate) fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if requested > cap {
            Err(Error::BoundExceeded {
                what,
                requested,
                cap,
            })
        } else {
            Ok(())
        }
    }
}
