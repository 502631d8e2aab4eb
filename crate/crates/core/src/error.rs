use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The arguments violate a precondition of the operation.
    InvalidInput(String),
    /// A requested instance is larger than the configured budget.
    BudgetExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    /// The graph has no Eulerian cycle.
    NotEulerian(EulerianViolation),
    /// An implied order contains a cycle, so it has no linear extension.
    CyclicOrder { row: usize, witness: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerianViolation {
    NoEdges,
    Unbalanced {
        vertex: usize,
        out_degree: usize,
        in_degree: usize,
    },
    Disconnected {
        vertex: usize,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::BudgetExceeded {
                what,
                requested,
                limit,
            } => write!(f, "{what} of {requested} exceeds the limit of {limit}"),
            Error::NotEulerian(v) => write!(f, "graph is not Eulerian: {v}"),
            Error::CyclicOrder { row, witness } => {
                write!(f, "implied order of row {} has a cycle through positions", row + 1)?;
                for w in witness {
                    write!(f, " {}", w + 1)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for EulerianViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EulerianViolation::NoEdges => f.write_str("graph has no edges"),
            EulerianViolation::Unbalanced {
                vertex,
                out_degree,
                in_degree,
            } => write!(
                f,
                "vertex {vertex} is unbalanced (out-degree {out_degree}, in-degree {in_degree})"
            ),
            EulerianViolation::Disconnected { vertex } => {
                write!(f, "vertex {vertex} is not connected to the rest of the edges")
            }
        }
    }
}

impl core::error::Error for Error {}
