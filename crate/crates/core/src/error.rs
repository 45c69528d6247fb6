use thiserror::Error;

/// Errors shared across the toolkit.
///
/// Every failure that can be triggered by input data (as opposed to a bug)
/// is represented here so that pipeline stages can embed structured failure
/// markers in reports instead of aborting the process.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("negative radicand {0} (complex quadratic extensions are not supported)")]
    NegativeRadicand(i64),

    #[error("incompatible radicands sqrt({0}) and sqrt({1}): values span a biquadratic field")]
    IncompatibleRadicands(i64, i64),

    #[error("radicand out of range: {0}")]
    RadicandTooLarge(String),

    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("variable sets differ: {0} vs {1}")]
    VarSetMismatch(String, String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsplittable factor over the active field: {0}")]
    UnsplittableFactor(String),

    #[error("degree cap exceeded: {0}")]
    DegreeCapExceeded(String),

    #[error("factorization is unsupported for this input: {0}")]
    UnsupportedFactorization(String),

    #[error("polynomial is not symmetrizable under (m,s,r) -> (1/m,1/s,r)")]
    NotSymmetrizable,

    #[error("polynomial does not lie in the trace subring: {0}")]
    NotInTraceSubring(String),

    #[error("group relation check failed: {0}")]
    RelationCheck(String),

    #[error("cofactors of the nonabelian part are not coprime")]
    CofactorsNotCoprime,

    #[error("zero gcd: both relation polynomials vanish")]
    ZeroGcd,

    #[error("positive-dimensional solution locus: {0}")]
    PositiveDimensional(String),

    #[error("not a bidegree-(2,b) form: {0}")]
    NotAConicBundle(String),

    #[error("form does not split as g(x,y,z,w) + u^2 h(z,w): {0}")]
    EvenSplitShape(String),

    #[error("branch component of positive genus is unsupported: {0}")]
    NonRationalBranch(String),

    #[error("degenerate fiber data: {0}")]
    DegenerateFiberData(String),

    #[error("exceptional curve is not a smooth conic: {0}")]
    ExceptionalNotConic(String),

    #[error("blow-up produced an identically zero strict transform")]
    ZeroStrictTransform,

    #[error("inconsistent classification data: {0}")]
    Inconsistent(String),

    #[error("cache failure: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
