use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the pipeline can report.
///
/// Variants are grouped by the stage that raises them; [`Error::code`] gives
/// each a stable numeric code that the command-line front end uses as its
/// exit status.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    // grid and quadrature
    #[error("grid size {0} must be a power of two and at least 8")]
    InvalidGrid(usize),
    #[error("grid mismatch: expected {expected} samples, got {got}")]
    GridMismatch { expected: usize, got: usize },
    #[error("coefficient index {kmax} aliases on a grid of {n} points (need kmax < n/2)")]
    Aliasing { kmax: usize, n: usize },
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),

    // rational functions
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("evaluation within {distance:.3e} of a pole at {pole}")]
    PoleProximity { pole: Complex64, distance: f64 },
    #[error("zero of the function on the unit circle at {0}")]
    ZeroOnCircle(Complex64),
    #[error("pole on the unit circle at {0}")]
    PoleOnCircle(Complex64),
    #[error("pole in the closed unit disk at {0}; function is not in N(D)")]
    PoleInClosedDisk(Complex64),
    #[error("function is not unimodular on the circle (max deviation {0:.3e})")]
    NotUnimodular(f64),

    // triples
    #[error("not a Schur function: modulus {modulus:.6} at {at}")]
    NotSchur { modulus: f64, at: Complex64 },
    #[error("not a Caratheodory function: {0}")]
    NotCaratheodory(String),
    #[error("Caratheodory function is not normalized: Phi(0) = {0}")]
    Normalization(Complex64),
    #[error("point {0} lies outside the open unit disk")]
    Domain(Complex64),
    #[error("pole of order {order} on the circle at {at} is unsupported")]
    NonSimplePole { at: Complex64, order: usize },
    #[error("atom at angle {angle} is not on a grid point of an n = {n} grid")]
    OffGridAtom { angle: f64, n: usize },
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("Szego condition fails (mean log density {0:.3})")]
    SzegoFails(f64),
    #[error("function is inner; outside the hypothesis of the criterion")]
    InnerFunction,

    // orthogonal polynomials
    #[error("moment matrix of order {order} is numerically singular (min eigenvalue {min_eig:.3e}, condition {condition:.3e})")]
    DegenerateMoments {
        order: usize,
        min_eig: f64,
        condition: f64,
    },
    #[error("recursion parameter {index} has modulus {modulus} >= 1")]
    NotSchurParameter { index: usize, modulus: f64 },

    // colligation
    #[error("basis Gram deviates from identity by {0:.3e}")]
    GramDeviation(f64),
    #[error("linear system is ill-conditioned (condition {0:.3e}); truncation too small")]
    IllConditioned(f64),

    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable numeric code, distinct per variant.
    pub fn code(&self) -> i32 {
        match self {
            Error::InvalidGrid(_) => 10,
            Error::GridMismatch { .. } => 11,
            Error::Aliasing { .. } => 12,
            Error::NonFinite(_) => 13,
            Error::ZeroPolynomial => 20,
            Error::PoleProximity { .. } => 21,
            Error::ZeroOnCircle(_) => 22,
            Error::PoleOnCircle(_) => 23,
            Error::PoleInClosedDisk(_) => 24,
            Error::NotUnimodular(_) => 25,
            Error::NotSchur { .. } => 30,
            Error::NotCaratheodory(_) => 31,
            Error::Normalization(_) => 32,
            Error::Domain(_) => 33,
            Error::NonSimplePole { .. } => 34,
            Error::OffGridAtom { .. } => 35,
            Error::InvalidMeasure(_) => 36,
            Error::SzegoFails(_) => 37,
            Error::InnerFunction => 38,
            Error::DegenerateMoments { .. } => 40,
            Error::NotSchurParameter { .. } => 41,
            Error::GramDeviation(_) => 50,
            Error::IllConditioned(_) => 51,
            Error::Unsupported(_) => 60,
            Error::Parse(_) => 2,
        }
    }

    /// Short machine-readable kind, used in error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGrid(_) => "invalid_grid",
            Error::GridMismatch { .. } => "grid_mismatch",
            Error::Aliasing { .. } => "aliasing",
            Error::NonFinite(_) => "non_finite",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::PoleProximity { .. } => "pole_proximity",
            Error::ZeroOnCircle(_) => "zero_on_circle",
            Error::PoleOnCircle(_) => "pole_on_circle",
            Error::PoleInClosedDisk(_) => "pole_in_closed_disk",
            Error::NotUnimodular(_) => "not_unimodular",
            Error::NotSchur { .. } => "not_schur",
            Error::NotCaratheodory(_) => "not_caratheodory",
            Error::Normalization(_) => "normalization",
            Error::Domain(_) => "domain",
            Error::NonSimplePole { .. } => "non_simple_pole",
            Error::OffGridAtom { .. } => "off_grid_atom",
            Error::InvalidMeasure(_) => "invalid_measure",
            Error::SzegoFails(_) => "szego_fails",
            Error::InnerFunction => "inner_function",
            Error::DegenerateMoments { .. } => "degenerate_moments",
            Error::NotSchurParameter { .. } => "not_schur_parameter",
            Error::GramDeviation(_) => "gram_deviation",
            Error::IllConditioned(_) => "ill_conditioned",
            Error::Unsupported(_) => "unsupported",
            Error::Parse(_) => "parse",
        }
    }
}
