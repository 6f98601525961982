//! Rolling-contact model of a segmented varying-curvature elliptic foot.
//!
//! The foot's frontal-plane rollover profile is built from three elliptic
//! arcs (hind / mid / fore). This crate provides:
//!
//! * [`ellipse`] — single-arc geometry: roll/rollover/parameter angle
//!   conversions, exact arc length (adaptive quadrature), an
//!   elementary-function approximation, and a calibrated error compensation.
//! * [`contact`] — analytic homogeneous transforms between the foot frame,
//!   the fixed ground frame and the moving contact frame, for the mid and
//!   fore/hind segments and for assembled roll/pitch/yaw poses.
//! * [`design`] — the constrained program that derives the fore (and
//!   mirrored hind) ellipse from a given mid ellipse, and foot assembly.
//! * [`accuracy`] — error sweeps of chord / approximate / compensated
//!   rollover lengths against the quadrature oracle, with CSV reports.
//! * [`hlip`] — a step-to-step (S2S) deadbeat stepping controller and a
//!   kinematic frontal-plane walking loop driving the contact model.
//! * [`config`] — the TOML run-configuration shared by the CLI frontends.

pub mod accuracy;
pub mod config;
pub mod contact;
pub mod design;
pub mod ellipse;
pub mod hlip;
pub mod transform;

pub use contact::{ContactSolution, FootGeometry, LineFoot, Segment};
pub use design::{DesignSolution, DesignSpec};
pub use ellipse::{CompensationParams, EllipseArc, RollAngles};
pub use hlip::{HlipParams, HlipState, S2SModel, WalkLog};
pub use transform::HomTransform;

/// Errors produced by geometry construction, the design solver and the
/// walking loop.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid ellipse axes: need semi-major >= semi-minor > 0, got ({r_a}, {r_b})")]
    InvalidAxes { r_a: f64, r_b: f64 },

    #[error("angle {value} outside supported range [{min}, {max}) for {what}")]
    AngleOutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("foot geometry invariant violated: {0}")]
    GeometryInvariant(String),

    #[error("design spec infeasible: {0}")]
    InfeasibleSpec(String),

    #[error("design solver did not converge: {0}")]
    NoConvergence(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("fall detected at t = {t:.4} s (roll angle {theta:.4} rad)")]
    Fall { t: f64, theta: f64 },

    #[error("config error at `{key}`: {message}")]
    Config { key: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
