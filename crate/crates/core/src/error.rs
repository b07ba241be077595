use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is outside 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("relations contain a cycle or a symmetric pair")]
    CycleOrSymmetry,
    #[error("Tamari axiom violated on triple ({0}, {1}, {2})")]
    TamariAxiomViolated(usize, usize, usize),
    #[error("interval-poset has no Tamari inversion")]
    NoInversions,
    #[error("graft parameter {r} exceeds the {roots} decreasing roots")]
    RParameterOutOfRange { r: usize, roots: usize },
    #[error("operation needs a non-empty interval-poset")]
    EmptyInput,
    #[error("trees are not comparable: {0} and {1} are related both ways")]
    NotComparable(usize, usize),
    #[error("trees have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("invalid Dyck word: {0}")]
    InvalidDyckWord(String),
    #[error("invalid tree encoding: {0}")]
    InvalidTree(String),
    #[error("label of node {0} is out of range")]
    InvalidLabels(usize),
    #[error("invalid ballot path: {0}")]
    InvalidBallotPath(String),
    #[error("rise of length {0} is not a multiple of m")]
    NotRiseDivisible(usize),
    #[error("size {0} is not a multiple of m = {1}")]
    SizeNotDivisible(usize, usize),
    #[error("grafting tree is not rise-contact-m-divisible")]
    NotMDivisible,
    #[error("interval-poset is not an m-interval-poset (vertex {0})")]
    NotMInterval(usize),
    #[error("m must be positive")]
    ZeroM,
}

pub type Result<T> = std::result::Result<T, Error>;
