use thiserror::Error;

use crate::complex::ValidationReport;

/// Structural defects that prevent a complex from being assembled at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("duplicate generator id `{0}`")]
    DuplicateId(String),
    #[error("empty generator id at generator #{0}")]
    EmptyId(usize),
    #[error("differential entry #{entry}: unknown generator `{id}`")]
    UnknownGenerator { entry: usize, id: String },
    #[error("differential entry #{entry}: negative U power {upower}")]
    NegativeUPower { entry: usize, upower: i64 },
    #[error("differential entry #{entry}: self-loop on `{id}`")]
    SelfLoop { entry: usize, id: String },
    #[error("differential entry #{entry}: repeats an earlier entry {from} -> {to} (U^{upower})")]
    DuplicateEntry { entry: usize, from: String, to: String, upower: u32 },
    #[error("generator `{0}`: Maslov grading must be given on all generators or on none")]
    PartialMaslov(String),
    #[error("direct sum: vertical homology dimensions {0} and {1}; exactly one summand must carry it")]
    DirectSumRank(usize, usize),
}

/// Failure to read a complex from text.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("malformed complex: {0}")]
    Malformed(#[from] ComplexError),
}

/// Failure to load a usable complex: either it could not be parsed or it
/// parsed but violates the filtered-complex axioms.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("complex `{name}` failed validation: {}", .report.failures().join("; "))]
    Invalid { name: String, report: ValidationReport },
    #[error("unknown library knot `{0}`")]
    UnknownKnot(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExponentError {
    #[error("exponents must be strictly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("exponents are not symmetric under negation: {0:?}")]
    NotSymmetric(Vec<i64>),
    #[error("an alternating polynomial with these exponents does not evaluate to 1 at t = 1: {0:?}")]
    OddLength(Vec<i64>),
    #[error("p = {0} and q = {1} must be positive and coprime")]
    NotCoprime(i64, i64),
    #[error("the ({p},{q}) cable is not an L-space knot: need q >= {bound}")]
    NotLSpaceCable { p: i64, q: i64, bound: i64 },
    #[error("Alexander polynomial {0} is not of alternating +-1 form")]
    NotLSpaceForm(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("point [{gen}, {i}, {j}] survives the quotient but is not in the target region")]
    SurvivorOutsideTarget { gen: String, i: i64, j: i64 },
    #[error("killed points do not form a subcomplex of the source: [{gen}, {i}, {j}] hits a survivor")]
    KillNotSubcomplex { gen: String, i: i64, j: i64 },
    #[error("map does not commute with the boundary")]
    NotChainMap,
    #[error("boundary does not square to zero")]
    NotComplex,
    #[error("point [{gen}, {i}, {j}] is not in the region")]
    OutsideRegion { gen: String, i: i64, j: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("vertical homology has dimension {0}, expected 1")]
    VerticalRank(usize),
    #[error("{what}: no value found in the search range [{lo}, {hi}]")]
    SearchExhausted { what: &'static str, lo: i64, hi: i64 },
    #[error("both F_tau and G_tau are trivial on homology")]
    BothTrivial,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("filtration parameter n must be at least 1, got {0}")]
    BadN(i64),
    #[error(transparent)]
    Region(#[from] RegionError),
}
