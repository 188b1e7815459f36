use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a Dynkin diagram: {0}")]
    IllegalType(String),
    #[error("orientation has {got} entries, diagram has {expected} edges")]
    OrientationMismatch { expected: usize, got: usize },
    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0:?} is not a positive root of this quiver")]
    NotARoot(Vec<i64>),
    #[error("representations live over different base characteristics")]
    CharMismatch,
    #[error("negative Ext dimension for a catalog pair: the catalog is broken")]
    NegativeExt,
    #[error("map is not a morphism of representations")]
    NotIntertwiner,
    #[error("representation has non-integral structure matrices")]
    NonIntegralInput,
    #[error("torsion detected in an integer Hom/Ext group: invariant factors {0:?}")]
    TorsionDetected(Vec<String>),
    #[error("ideal ({0}) is not contained in ({1})")]
    IdealNotContained(u64, u64),
    #[error("subcategory is not ICE-closed")]
    NotIceClosed,
    #[error("wide enumeration is not supported for {0}; only the product-formula count is available")]
    UnsupportedType(String),
    #[error("window [{lo}, {hi}] is too small for this closure")]
    WindowTooSmall { lo: i64, hi: i64 },
    #[error("map is not monotone")]
    NotMonotone,
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
