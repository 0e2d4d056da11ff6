//! Error type shared by every geometric operation in this crate.

use core::fmt;

/// Errors raised by geometric constructions and the finite-difference oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum GeomError {
    /// Two ambient vectors with different metric signatures were combined.
    SignatureMismatch,
    /// A point does not satisfy the defining quadric equation of its model space.
    OffManifold,
    /// A vector is not tangent at the given base point.
    NotTangent,
    /// A vector that must be unit (spacelike unit in the indefinite case) is not.
    NotUnit,
    /// The operation is not defined for this model-space kind.
    WrongSpaceKind,
    /// An input left the admissible parameter domain.
    Domain(&'static str),
    /// Raw curve data is inconsistent with the bundle point it claims to pass through.
    InvalidCurveData,
    /// Two bundle tangents live at different bundle points.
    BasePointMismatch,
    /// The requested closed form is not available for these metric parameters.
    UnsupportedParams(&'static str),
    /// A tangent 2-plane is degenerate, so its sectional curvature is undefined.
    DegeneratePlane,
    /// The metric matrix is numerically singular at the evaluation point.
    SingularMetric,
    /// A chart evaluation point is too close to the boundary of its domain box.
    BoundaryProximity,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::SignatureMismatch => write!(f, "ambient vectors have mismatched signatures"),
            GeomError::OffManifold => write!(f, "point is not on the model space"),
            GeomError::NotTangent => write!(f, "vector is not tangent at the base point"),
            GeomError::NotUnit => write!(f, "vector is not a (spacelike) unit vector"),
            GeomError::WrongSpaceKind => write!(f, "operation is not defined for this space kind"),
            GeomError::Domain(what) => write!(f, "input outside admissible domain: {what}"),
            GeomError::InvalidCurveData => {
                write!(f, "curve derivative data does not pass through the bundle point")
            }
            GeomError::BasePointMismatch => {
                write!(f, "bundle tangents are attached to different bundle points")
            }
            GeomError::UnsupportedParams(what) => {
                write!(f, "closed form unavailable for these parameters: {what}")
            }
            GeomError::DegeneratePlane => {
                write!(f, "tangent plane is degenerate (lightlike); sectional curvature undefined")
            }
            GeomError::SingularMetric => write!(f, "metric matrix is singular at this point"),
            GeomError::BoundaryProximity => {
                write!(f, "evaluation point is within 10 steps of the chart boundary")
            }
        }
    }
}

impl core::error::Error for GeomError {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, GeomError>;
