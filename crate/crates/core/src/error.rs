use thiserror::Error;

use crate::bounds::BoundsError;
use crate::bracket::BracketError;
use crate::checkerboard::InvariantError;
use crate::diagram::DiagramError;
use crate::moves::MoveError;

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Unparseable or malformed input.
    Input,
    /// Valid input outside an operation's domain.
    Precondition,
    /// A cross-check between independent computations failed.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("{0}")]
    Input(String),
}

fn bracket_kind(e: &BracketError) -> ErrorKind {
    match e {
        BracketError::TooLarge { .. } | BracketError::ResourceExhausted(_) => ErrorKind::Precondition,
        BracketError::Inconsistent(_) | BracketError::Poly(_) => ErrorKind::Internal,
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Diagram(_) | Error::Input(_) => ErrorKind::Input,
            Error::Bracket(e) => bracket_kind(e),
            Error::Invariant(e) => match e {
                InvariantError::NotAlternating | InvariantError::NotReduced | InvariantError::NotConnected => {
                    ErrorKind::Precondition
                }
                InvariantError::NotTwoColorable | InvariantError::NonIntegerResult(_) => ErrorKind::Internal,
                InvariantError::Bracket(b) => bracket_kind(b),
            },
            Error::Move(e) => match e {
                MoveError::NotAPositiveCrossing { .. }
                | MoveError::CrossingOutOfRange { .. }
                | MoveError::InvalidSite(_)
                | MoveError::InvalidParameter(_) => ErrorKind::Precondition,
                MoveError::LemmaCheckFailed { .. } | MoveError::Diagram(_) => ErrorKind::Internal,
                MoveError::Bracket(b) => bracket_kind(b),
            },
            Error::Bounds(e) => match e {
                BoundsError::Parse(_) | BoundsError::EmptyData => ErrorKind::Input,
                BoundsError::EmptyInterval { .. } | BoundsError::NotCoprime(..) | BoundsError::NonPositive(..) => {
                    ErrorKind::Precondition
                }
            },
        }
    }
}
