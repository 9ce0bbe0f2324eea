use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge ({0}, {1}) joins two vertices of the same color")]
    MonochromaticEdge(usize, usize),
    #[error("edge ({0}, {1}) is given more than once")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("expected {expected} colors, got {got}")]
    ColorCountMismatch { expected: usize, got: usize },
    #[error("expected {expected} vertex names, got {got}")]
    NameCountMismatch { expected: usize, got: usize },
    #[error("vertex name {0:?} is used twice")]
    DuplicateName(String),
    #[error("graph on {n} vertices exceeds the supported bound of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("digraph is not a 2-qBMG")]
    NotQbmg,
    #[error("graph is not connected")]
    Disconnected,
    #[error("digraph has a symmetric edge pair {{{0}, {1}}}")]
    NotOriented(usize, usize),
    #[error("invalid odd-even specification: {0}")]
    InvalidSpec(String),
    #[error("digraph is not a bitournament")]
    NotBitournament,
    #[error("bitournament is not bi-transitive")]
    NotBitransitive,
    #[error("vertex set is not a biclique: {0}")]
    NotBiclique(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("tree parse error at byte {pos}: {msg}")]
    TreeParse { pos: usize, msg: String },
    #[error("internal node {0} has a single child")]
    NotPhylogenetic(usize),
    #[error("leaf coloring does not use both colors")]
    NotSurjective,
    #[error("invalid truncation map: {0}")]
    InvalidTruncation(String),
    #[error("leaf name {0:?} has no integer suffix")]
    NoIntegerSuffix(String),
    #[error("decomposition invariant violated: {0}")]
    DecompositionInvariant(String),
}
