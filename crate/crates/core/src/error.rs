use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    UnknownVertex { vertex: usize, n: usize },

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("graph is not 2-vertex-connected")]
    NotTwoVertexConnected,

    #[error("vertex {vertex} is not reachable from root {root}")]
    Unreachable { root: usize, vertex: usize },

    #[error("pair query needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("brute-force enumeration is limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },

    #[error("cannot generate a strongly connected graph with n={n}, m={m}: {reason}")]
    Generator {
        n: usize,
        m: usize,
        reason: &'static str,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
