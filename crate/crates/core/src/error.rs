use thiserror::Error;

use crate::ExactNat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed canonical code {code:?}: {reason}")]
    MalformedCode {
        code: Vec<u32>,
        reason: &'static str,
    },

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("tree is not a valid ({p},{r})-coral diagram: {reason}")]
    InvalidDiagram {
        p: u32,
        r: u32,
        reason: &'static str,
    },

    #[error("enumeration would walk {needed} trees, above the cap of {cap}")]
    SizeLimit { needed: ExactNat, cap: u64 },

    #[error("cannot parse record: {0}")]
    Parse(String),
}
