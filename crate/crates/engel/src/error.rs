use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {size} exceeds the cap of {cap}")]
    FieldTooLarge { size: u64, cap: u64 },
    #[error("elements belong to different backends or have incompatible dimensions")]
    BackendMismatch,
    #[error("group order {order} exceeds the stored-table cap of {cap}")]
    TableTooLarge { order: u64, cap: u64 },
    #[error("group order {order} exceeds the streaming cap of {cap}")]
    StreamTooLarge { order: u64, cap: u64 },
    #[error("operation requires a stored element table")]
    NoStoredTable,
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("{element} is not a vertex of the {mode} graph")]
    NotAVertex { element: String, mode: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{family}: constraint violated: {constraint}")]
    ConstraintViolation { family: String, constraint: String },
    #[error("scan budget of {budget} element visits exceeded")]
    BudgetExceeded { budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
