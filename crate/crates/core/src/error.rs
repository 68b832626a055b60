use std::fmt;

/// Where a strict-convexity check failed. Indices are 0-based positions in
/// the vertex list that was checked; `Display` prints them 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityDefect {
    pub vertices: [usize; 3],
    pub kind: DefectKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectKind {
    Collinear,
    ReflexTurn,
    /// every turn has the same sign but the boundary winds more than once
    MultipleWinding,
    TooFewVertices,
}

impl fmt::Display for ConvexityDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        let what = match self.kind {
            DefectKind::Collinear => "are collinear",
            DefectKind::ReflexTurn => "make a reflex turn",
            DefectKind::MultipleWinding => "start a boundary that winds more than once",
            DefectKind::TooFewVertices => "do not form a polygon",
        };
        write!(f, "vertices v{}, v{}, v{} {what}", a + 1, b + 1, c + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("odd vertex count {0}")]
    OddVertexCount(usize),
    #[error("a centrally symmetric polygon needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("not centrally symmetric about the origin: v{} != -v{}", .m + .index + 1, .index + 1)]
    NotCentrallySymmetric { index: usize, m: usize },
    #[error("not strictly convex: {0}")]
    NotConvex(ConvexityDefect),
    #[error("singular linear map")]
    SingularMap,
    #[error("map has a nonzero translation part")]
    NonzeroTranslation,
    #[error("map is not unimodular")]
    NotUnimodular,
    #[error("lattice basis vectors are linearly dependent")]
    DegenerateLattice,
}
