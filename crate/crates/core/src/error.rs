use thiserror::Error;

/// A structural defect found while validating a precubical set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateId(String),
    DanglingFace {
        cube: String,
        face: String,
    },
    FaceCount {
        cube: String,
        dim: usize,
        d0: usize,
        d1: usize,
    },
    FaceDimension {
        cube: String,
        k: usize,
        nu: u8,
        face: String,
        face_dim: usize,
    },
    /// `δ_k^ν δ_ℓ^μ x ≠ δ_{ℓ-1}^μ δ_k^ν x` for `k < ℓ`.
    PrecubicalIdentity {
        cube: String,
        k: usize,
        l: usize,
        nu: u8,
        mu: u8,
    },
    MissingInitial(String),
    InitialNotVertex(String),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::DuplicateId(id) => write!(f, "duplicate cube id `{id}`"),
            Violation::DanglingFace { cube, face } => {
                write!(f, "cube `{cube}` refers to unknown face `{face}`")
            }
            Violation::FaceCount { cube, dim, d0, d1 } => {
                write!(f, "cube `{cube}` has dimension {dim} but {d0} lower and {d1} upper faces")
            }
            Violation::FaceDimension { cube, k, nu, face, face_dim } => {
                write!(f, "face d{k}^{nu} of `{cube}` is `{face}` of dimension {face_dim}")
            }
            Violation::PrecubicalIdentity { cube, k, l, nu, mu } => {
                write!(f, "precubical identity fails at `{cube}`: d{k}^{nu} d{l}^{mu} != d{}^{mu} d{k}^{nu}", l - 1)
            }
            Violation::MissingInitial(id) => write!(f, "initial cube `{id}` does not exist"),
            Violation::InitialNotVertex(id) => write!(f, "initial cube `{id}` is not a 0-cube"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid precubical set: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown cube id `{0}`")]
    UnknownCube(String),
    #[error("labeling error at cube `{cube}`: {reason}")]
    Labeling { cube: String, reason: String },
    #[error("cube path error at position {position}: {reason}")]
    Path { position: usize, reason: String },
    #[error("cannot concatenate: {0}")]
    Concat(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid morphism: {0}")]
    Morphism(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("{0}")]
    Input(String),
    #[error("illegal move: {reason}")]
    IllegalMove { reason: String, legal: Vec<String> },
    #[error("game is over: {0}")]
    GameOver(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
