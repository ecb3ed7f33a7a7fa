use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller broke a structural precondition (lengths, ranges).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("trajectory point {index} coincides with the base point")]
    DegenerateBasePoint { index: usize },

    #[error(
        "continuation gap at index {index}: residual {residual:.3} >= 0.25 (trajectory too short or not quasiperiodic)"
    )]
    ContinuationGap { index: usize, residual: f64 },

    #[error("delay embedding neighbour graph is disconnected ({defined} of {total} points reached)")]
    DisconnectedEmbedding { defined: usize, total: usize },

    #[error("invalid base point: winding number {}, expected |W(P)| = 1", fmt_winding(.winding))]
    InvalidBasePoint { winding: Option<i64> },

    #[error("inconsistent curve ordering: {0}")]
    InconsistentOrdering(String),

    #[error("invalid center: winding number {}, expected |W(c)| = 1", fmt_winding(.winding))]
    InvalidCenter { winding: Option<i64> },

    #[error("collision with a primary: distance {distance:e} at t = {time}")]
    Collision { distance: f64, time: f64 },

    #[error("no section crossing within t = {max_time}")]
    SectionTimeout { max_time: f64 },

    #[error("infeasible seed: no momentum on the energy level with dq2/dt > 0 (discriminant {discriminant})")]
    InfeasibleSeed { discriminant: f64 },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("inconsistent Fourier model: imaginary residue {residue:e} exceeds {limit:e}")]
    InconsistentModel { residue: f64, limit: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn fmt_winding(w: &Option<i64>) -> String {
    match w {
        Some(w) => w.to_string(),
        None => "undetermined".to_string(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
