use std::fmt;

use qadj_core::Error;

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_OBSTRUCTION: u8 = 3;
pub const EXIT_LIMIT: u8 = 4;

/// A failed run: stable code, process exit status, and the input that
/// caused it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: &'static str,
    pub exit: u8,
    pub message: String,
    pub fragment: Option<String>,
}

impl CliError {
    pub fn input(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            exit: EXIT_INPUT,
            message: message.into(),
            fragment: None,
        }
    }

    pub fn with_fragment(mut self, fragment: impl Into<String>) -> Self {
        if self.fragment.is_none() {
            self.fragment = Some(fragment.into());
        }
        self
    }

    pub fn from_core(e: &Error) -> Self {
        let (code, exit) = classify(e);
        CliError {
            code,
            exit,
            message: e.to_string(),
            fragment: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "error": {
                "code": self.code,
                "exit": self.exit,
                "message": self.message,
                "fragment": self.fragment,
            }
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)?;
        if let Some(s) = &self.fragment {
            write!(f, "\n  in: {s}")?;
        }
        Ok(())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::from_core(&e)
    }
}

fn classify(e: &Error) -> (&'static str, u8) {
    use Error::*;
    let code = match e {
        Syntax { .. } => "syntax",
        UnknownVariable { .. } => "unknown-variable",
        NegativeExponent { .. } => "negative-exponent",
        EmptyGerm => "empty-germ",
        BranchNotAtOrigin { .. } => "branch-not-at-origin",
        BranchNotSquareFree { .. } => "branch-not-square-free",
        BranchesNotCoprime { .. } => "branches-not-coprime",
        DimensionMismatch { .. } => "dimension-mismatch",
        AmbientMismatch { .. } => "ambient-mismatch",
        NotSubspace => "not-subspace",
        ZeroSubspace => "zero-subspace",
        IrrationalCenter { .. } => return ("irrational-center", EXIT_OBSTRUCTION),
        BranchNotIrreducible { .. } => "branch-not-irreducible",
        DepthExceeded { .. } => return ("depth-exceeded", EXIT_LIMIT),
        InvalidFreePoint { .. } => "invalid-free-point",
        ZeroPolynomial => "zero-polynomial",
        ChartsUnavailable => "charts-unavailable",
        UnknownCurve { .. } => "unknown-curve",
        TruncationTooSmall { .. } => "truncation-too-small",
        GraphWithoutBranches => "graph-without-branches",
        GraphWithoutCurves => "graph-without-curves",
        DuplicateCurveId { .. } => "duplicate-curve-id",
        MultiplicityLength { .. } => "multiplicity-length",
        NonPositiveMultiplicity { .. } => "non-positive-multiplicity",
        NonPositiveCanonical { .. } => "non-positive-canonical",
        SelfAdjacent { .. } => "self-adjacent",
        DanglingAdjacency { .. } => "dangling-adjacency",
        AsymmetricAdjacency { .. } => "asymmetric-adjacency",
        NotATree { .. } => "not-a-tree",
        BranchContact { .. } => "branch-contact",
        OpenEulerMismatch { .. } => "open-euler-mismatch",
        ChartMismatch { .. } => "chart-mismatch",
        PointOutsideCube { .. } => "point-outside-cube",
        WrongArity { .. } => "wrong-arity",
        NegativeCoefficient { .. } => "negative-coefficient",
        InvalidCoverArray { .. } => "invalid-cover-array",
        ZeroDirection => "zero-direction",
        RLimitExceeded { .. } => return ("r-limit-exceeded", EXIT_LIMIT),
        NotCodimensionOne { .. } => "not-codimension-one",
        BranchCountMismatch { .. } => "branch-count-mismatch",
        RequiresSingleBranch { .. } => "requires-single-branch",
        NotAConstant { .. } => "not-a-constant",
        NonPolynomialZeta => "non-polynomial-zeta",
        DenominatorBoundExceeded { .. } => return ("denominator-bound-exceeded", EXIT_LIMIT),
        InvalidCharacter { .. } => "invalid-character",
        CharacterDoesNotFactor { .. } => "character-does-not-factor",
    };
    (code, EXIT_INPUT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_and_obstructions_have_their_own_status() {
        assert_eq!(CliError::from_core(&Error::DepthExceeded { limit: 3 }).exit, EXIT_LIMIT);
        let e = Error::IrrationalCenter {
            branch: 0,
            minimal_polynomial: "t^2 + 1".into(),
        };
        assert_eq!(CliError::from_core(&e).exit, EXIT_OBSTRUCTION);
        assert_eq!(CliError::from_core(&Error::EmptyGerm).exit, EXIT_INPUT);
    }
}
