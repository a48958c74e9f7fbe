use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse rational `{0}`")]
    Rational(String),
    #[error("cannot parse configuration `{0}`: {1}")]
    Configuration(String, String),
    #[error("malformed map document: {0}")]
    MapDocument(String),
}

/// Structural defects of a map description: the input does not even describe
/// a piecewise-linear graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("cardinality bound n must be at least 1")]
    ZeroBound,
    #[error("arc {arc} references vertex {vertex}, but only {count} vertices exist")]
    VertexIndex {
        arc: usize,
        vertex: usize,
        count: usize,
    },
    #[error("vertex {vertex} has x = {x} outside [0,1]")]
    XOutOfRange { vertex: usize, x: Rational },
    #[error("arc {arc} is vertical or runs right-to-left (x {from} -> {to})")]
    NotIncreasing {
        arc: usize,
        from: Rational,
        to: Rational,
    },
    #[error("arc {arc} carries weight 0; weights must be positive")]
    ZeroWeight { arc: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Structural(#[from] StructuralError),
    #[error("map is not valid: {0}")]
    Invalid(String),
    #[error("x = {0} lies outside the domain [0,1]")]
    OutOfDomain(Rational),
    #[error("no graph point lies over x = {0}")]
    EmptyFiber(Rational),
    #[error("configurations must be nonempty")]
    EmptyConfiguration,
    #[error("barycentric parameters: {0}")]
    Barycentric(String),
    #[error("arc {0} has no weight")]
    MissingWeight(usize),
    #[error("weights are unbalanced at vertex ({x}, {y}): left sum {left}, right sum {right}")]
    Unbalanced {
        x: Rational,
        y: Rational,
        left: u64,
        right: u64,
    },
    #[error("weighted sums differ across the domain: {first} at x = {x0}, {second} at x = {x1}")]
    InconsistentIndex {
        x0: Rational,
        first: u64,
        x1: Rational,
        second: u64,
    },
    #[error("component {component} has non-constant fiber cardinality; not certifiably a union of equicardinal maps")]
    NotUnionOfEquicardinal { component: usize },
    #[error("malformed n-fold map: {0}")]
    NFold(String),
    #[error("malformed symmetric-product map: {0}")]
    SymmetricProduct(String),
    #[error("cardinality bound {bound} is too large for this conversion (at most {limit})")]
    BoundTooLarge { bound: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
