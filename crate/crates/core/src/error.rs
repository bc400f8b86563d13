use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument refers to something that does not exist or is malformed.
    #[error("input error: {0}")]
    Input(String),

    /// The operation's precondition does not hold for this input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural hypothesis required by a construction does not hold
    /// (for example, a vertex set that is not 2-connected).
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    /// The exhaustive search would exceed the configured bound.
    #[error("resource limit: {what} has {actual}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A witness construction produced something invalid.
    #[error("construction failed: {0}")]
    Construction(String),

    /// No combination of replacement paths lifts the subdivision back.
    #[error("lifting failed for rule `{rule}`: {reason}")]
    LiftingFailure { rule: String, reason: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

/// Resource bounds for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    /// Largest graph the library search paths (wheels, linkages, K5) accept.
    pub search_vertices: usize,
    /// Largest graph the brute-force reference implementations accept.
    pub oracle_vertices: usize,
    /// Largest terminal graph the generator emits.
    pub generate_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search_vertices: 12,
            oracle_vertices: 8,
            generate_vertices: 9,
        }
    }
}

impl Limits {
    pub fn with_search(search_vertices: usize) -> Self {
        Limits {
            search_vertices,
            ..Limits::default()
        }
    }

    pub(crate) fn check_search(&self, n: usize) -> Result<()> {
        // bitmask kernels cap out at 64 regardless of configuration
        let limit = self.search_vertices.min(64);
        if n > limit {
            return Err(Error::ResourceLimit {
                what: "graph",
                limit,
                actual: n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_generate(&self, n: usize) -> Result<()> {
        if n > self.generate_vertices {
            return Err(Error::ResourceLimit {
                what: "generated graph",
                limit: self.generate_vertices,
                actual: n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_oracle(&self, n: usize) -> Result<()> {
        if n > self.oracle_vertices {
            return Err(Error::ResourceLimit {
                what: "oracle graph",
                limit: self.oracle_vertices,
                actual: n,
            });
        }
        Ok(())
    }
}
