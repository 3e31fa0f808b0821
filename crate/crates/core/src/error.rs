use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("line references unknown point `{0}`")]
    UnknownPoint(String),
    #[error("point `{0}` repeated within a line")]
    RepeatedPointInLine(String),
    #[error("duplicate line {0:?}")]
    DuplicateLine(Vec<String>),
    #[error("empty line")]
    EmptyLine,
    #[error("{0} points exceed the supported maximum of {max}", max = crate::MAX_POINTS)]
    TooManyPoints(usize),

    #[error("ground set size {0} outside the supported range 3..=9")]
    GroundSetOutOfRange(usize),
    #[error("only k = 2 Grassmannians are supported (got k = {0})")]
    UnsupportedGrassmannianRank(usize),

    #[error("bipartition side must be a nonempty proper subset of 1..={n}")]
    TrivialBipartition { n: usize },
    #[error("element {element} outside ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("malformed bipartition label `{0}`")]
    MalformedBipartition(String),

    #[error("exhaustive oracle limited to {limit} points (structure has {points})")]
    OracleTooLarge { points: usize, limit: usize },
    #[error("structure must have exactly 3 points on every line")]
    NotThreePointLines,
    #[error("structure is not linear: two points share more than one line")]
    NotLinear,
    #[error("Veldkamp space needs at least two hyperplanes (found {0})")]
    TooFewHyperplanes(usize),
    #[error("third point requested for two equal hyperplanes")]
    EqualHyperplanes,
    #[error("third point `{0}` is not a geometric hyperplane")]
    ThirdPointNotHyperplane(String),

    #[error("operation requires a Veldkamp space of G2(7) with classified points")]
    NotClassified,
    #[error("hyperplane carries no bipartition label over 7 elements")]
    Unlabelled,
    #[error("pivot {0} outside 1..=7")]
    PivotOutOfRange(usize),
    #[error("form instance {0} is not a line of the Veldkamp space")]
    FormNotALine(String),
    #[error("isomorphism check failed: {0}")]
    IsomorphismFailed(String),

    #[error("invalid quadric parameters: {0}")]
    InvalidQuadric(String),
    #[error("inexact division {numerator} / {denominator}")]
    InexactDivision { numerator: u64, denominator: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
