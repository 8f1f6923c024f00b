use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("invalid slope triple {{{0},{1},{2}}}: no entry equals the sum of the other two")]
    InvalidTriple(String, String, String),
    #[error("invalid fraction {0}/{1}: need 0 <= p <= q, q >= 1, gcd(p,q) = 1")]
    InvalidFraction(String, String),
    #[error("vertices {0} and {1} are not adjacent in the layering graph")]
    NotAdjacent(String, String),
    #[error("path must end at 1/1")]
    PathDoesNotEndAtBase,
    #[error("empty path (bare M\u{f6}bius base) cannot be materialized")]
    EmptyPath,
    #[error("edge class {0} is not a boundary edge in two distinct boundary triangles")]
    NotLayerableEdge(usize),
    #[error("boundary is not a one-vertex torus: {0}")]
    BoundaryNotTorus(String),
    #[error("boundary correspondence is not a simplicial isomorphism")]
    BadCorrespondence,
    #[error("slope entries {0:?} do not match boundary edge data")]
    SlopeMismatch([String; 3]),
    #[error("complex has an edge identified to itself reversing orientation")]
    ReversedEdge,
    #[error("size guard: {0} tetrahedra exceeds limit {1} (set LENSLAB_MAX_TETS to override)")]
    SizeGuard(usize, usize),
    #[error("the efficiency characterization does not apply to {0}")]
    ManifoldExcluded(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
