use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent user input.
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("hyperplanes {first} and {second} have proportional normals; merge them into a single hyperplane whose multiplicity is the sum of both")]
    ProportionalNormals { first: usize, second: usize },

    /// Precondition of an operation violated by the caller.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The ring presentation failed a structural check.
    #[error("structural error: {0}")]
    Structural(String),

    /// An internal consistency assertion failed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by bad input rather than by a failed invariant.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Validation(_) | Error::ProportionalNormals { .. } | Error::Argument(_)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        assert!(Error::Validation("x".into()).is_validation());
        assert!(Error::ProportionalNormals { first: 0, second: 1 }.is_validation());
        assert!(Error::Argument("x".into()).is_validation());
        assert!(!Error::Structural("x".into()).is_validation());
        assert!(!Error::Internal("x".into()).is_validation());
        let msg = Error::ProportionalNormals { first: 0, second: 3 }.to_string();
        assert!(msg.contains("merge") && msg.contains('3'));
    }
}
