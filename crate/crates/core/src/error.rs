use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-admissible relations: {0}")]
    NonAdmissible(String),

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("objects are defined over different algebras")]
    AlgebraMismatch,

    #[error("the zero module has no endomorphism algebra")]
    ZeroModule,

    #[error("characteristic {p} is too small for matrices of size {size}; rebuild the algebra with a prime p > {size}")]
    CharTooSmall { p: u64, size: usize },

    #[error("no splitting endomorphism found within the search budget")]
    SplitSearchFailed,

    #[error("isomorphism search exhausted its budget without a verdict")]
    IsoSearchInconclusive,

    #[error("index {index} out of range for {len} summands")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("not a two-term silting complex: {0}")]
    NotSilting(String),

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("invalid support tau-tilting pair: {0}")]
    InvalidPair(String),

    #[error("summand {index} lies in Fac of the remaining module summands")]
    XInFacU { index: usize },

    #[error("unknown node key `{0}`")]
    UnknownNodeKey(String),

    #[error("port {0} is already in use")]
    PortInUse(u16),
}

impl Error {
    /// Stable machine-readable code used by the JSON service.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonAdmissible(_) => "non_admissible",
            Error::BadInput(_) => "bad_input",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::AlgebraMismatch => "algebra_mismatch",
            Error::ZeroModule => "zero_module",
            Error::CharTooSmall { .. } => "char_too_small",
            Error::SplitSearchFailed => "split_search_failed",
            Error::IsoSearchInconclusive => "iso_search_inconclusive",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::NotSilting(_) => "not_silting",
            Error::ValidationFailed(_) => "validation_failed",
            Error::InvalidPair(_) => "invalid_pair",
            Error::XInFacU { .. } => "x_in_fac_u",
            Error::UnknownNodeKey(_) => "unknown_node",
            Error::PortInUse(_) => "port_in_use",
        }
    }

    /// Errors raised by the verification machinery rather than by the input.
    pub fn is_infrastructure(&self) -> bool {
        matches!(
            self,
            Error::CharTooSmall { .. } | Error::SplitSearchFailed | Error::IsoSearchInconclusive
        )
    }
}
