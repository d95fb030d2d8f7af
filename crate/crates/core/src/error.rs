use alloc::string::String;

use crate::rational::Rational;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable \"{name}\" at offset {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("negative exponent at offset {pos}")]
    NegativeExponent { pos: usize },

    #[error("germ has no branches")]
    EmptyGerm,
    #[error("branch {branch} does not vanish at the origin")]
    BranchNotAtOrigin { branch: usize },
    #[error("branch {branch} is not square-free")]
    BranchNotSquareFree { branch: usize },
    #[error("branches {first} and {second} share a common factor")]
    BranchesNotCoprime { first: usize, second: usize },

    #[error("functional has {found} entries, ambient basis has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("jet subspaces live over different truncations ({left} vs {right})")]
    AmbientMismatch { left: u32, right: u32 },
    #[error("subspace is not contained in the ambient subspace")]
    NotSubspace,
    #[error("operation needs a nonzero subspace")]
    ZeroSubspace,

    #[error(
        "infinitely near point of branch {branch} is irrational; tangent directions are roots of {minimal_polynomial}"
    )]
    IrrationalCenter { branch: usize, minimal_polynomial: String },
    #[error("branch {branch} is not analytically irreducible")]
    BranchNotIrreducible { branch: usize },
    #[error("blow-up depth exceeds the limit of {limit}")]
    DepthExceeded { limit: usize },
    #[error("free blow-up point {s} on E_{curve} is not admissible")]
    InvalidFreePoint { curve: usize, s: Rational },

    #[error("order of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("graph has no chart data; valuations are unavailable")]
    ChartsUnavailable,
    #[error("no exceptional curve with id {id}")]
    UnknownCurve { id: usize },
    #[error("truncation {n} is below the valuation bound {alpha}")]
    TruncationTooSmall { alpha: u32, n: u32 },

    #[error("graph has no branches")]
    GraphWithoutBranches,
    #[error("graph has no exceptional curves")]
    GraphWithoutCurves,
    #[error("duplicate curve id {id}")]
    DuplicateCurveId { id: usize },
    #[error("curve {id} has {found} multiplicities, expected {expected}")]
    MultiplicityLength { id: usize, expected: usize, found: usize },
    #[error("curve {id} has a_{{k,{branch}}} = 0; every multiplicity must be at least 1")]
    NonPositiveMultiplicity { id: usize, branch: usize },
    #[error("curve {id} has c = {c}; the canonical multiplicity must be at least 1")]
    NonPositiveCanonical { id: usize, c: i64 },
    #[error("curve {id} lists itself as adjacent")]
    SelfAdjacent { id: usize },
    #[error("curve {id} is adjacent to unknown curve {neighbor}")]
    DanglingAdjacency { id: usize, neighbor: usize },
    #[error("adjacency is not symmetric: {from} lists {to} but not conversely")]
    AsymmetricAdjacency { from: usize, to: usize },
    #[error("dual graph is not a tree ({curves} curves, {edges} edges, connected: {connected})")]
    NotATree {
        curves: usize,
        edges: usize,
        connected: bool,
    },
    #[error("branch {branch} meets the exceptional set {count} times, expected exactly once")]
    BranchContact { branch: usize, count: usize },
    #[error("curve {id} reports open Euler characteristic {found}, expected {expected}")]
    OpenEulerMismatch { id: usize, expected: i64, found: i64 },
    #[error("chart of curve {id} is inconsistent with its multiplicities")]
    ChartMismatch { id: usize },

    #[error("point {coordinate} lies outside the half-open unit cube")]
    PointOutsideCube { coordinate: Rational },
    #[error("expected {expected} coordinates, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("negative coefficient {value}")]
    NegativeCoefficient { value: Rational },
    #[error("invalid cover array: {reason}")]
    InvalidCoverArray { reason: String },
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("arrangement with r = {r} exceeds the limit {limit}")]
    RLimitExceeded { r: usize, limit: usize },
    #[error("face has dimension {dimension}; volume needs codimension one")]
    NotCodimensionOne { dimension: usize },
    #[error("branch counts differ: {general} vs {special}")]
    BranchCountMismatch { general: usize, special: usize },
    #[error("operation needs a single branch, got r = {r}")]
    RequiresSingleBranch { r: usize },
    #[error("{kappa} is not a constant of quasiadjunction")]
    NotAConstant { kappa: Rational },
    #[error("zeta function does not simplify to a polynomial")]
    NonPolynomialZeta,
    #[error("denominator bound {q} exceeds the limit {limit}")]
    DenominatorBoundExceeded { q: u32, limit: u32 },
    #[error("character angle {angle} is not in [0, 1)")]
    InvalidCharacter { angle: Rational },
    #[error("character does not factor through the cover: denominator {denominator} does not divide m = {m}")]
    CharacterDoesNotFactor { denominator: u64, m: u64 },
}
