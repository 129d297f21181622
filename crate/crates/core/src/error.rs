use thiserror::Error;

/// Errors produced while building systems, parsing words, or running the
/// decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the vertex set is empty")]
    EmptyVertexSet,
    #[error("invalid vertex name `{0}`")]
    InvalidVertexName(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("edge {{{u}, {v}}} has label {m}; labels must be even and at least 2")]
    BadLabel { u: String, v: String, m: u64 },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(String, String),
    #[error("triangle {{{0}, {1}, {2}}} has more than one edge labelled above 2")]
    NotEafc(String, String, String),
    #[error("word parse error at token {position} (`{token}`): {reason}")]
    WordParse {
        position: usize,
        token: String,
        reason: String,
    },
    #[error("words belong to different Artin systems")]
    HostMismatch,
    #[error("the induced graph on {0:?} is not complete")]
    NotComplete(Vec<String>),
    #[error("the defining graph is not a tree")]
    NotATree,
    #[error("vertex `{0}` is not adjacent to every other vertex")]
    StarNotFull(String),
    #[error("the kernel graph of a one-vertex system has no vertices")]
    EmptyOmega,
    #[error("empty generator list")]
    NoGenerators,
    #[error("graph of groups: {0}")]
    GraphOfGroups(String),
    #[error("malformed certificate: {0}")]
    Certificate(String),
    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
