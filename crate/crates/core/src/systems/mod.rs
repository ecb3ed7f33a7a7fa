//! Test systems: the Standard Map, Fourier-sum curves and the planar
//! circular restricted three-body problem.

pub mod curves;
pub mod rk8;
pub mod standard_map;
pub mod three_body;

pub use curves::{curve_point, curve_trajectory, CurveKind, CurveSpec};
pub use rk8::Rk8;
pub use standard_map::{reduce_angle, standard_map_jacobian, standard_map_step, unwrap_near, StandardMap, StdMapState};
pub use three_body::{
    poincare_returns, rk8_step, section_seed, section_tolerance, three_body_field, SectionPoint, ThreeBody,
    ThreeBodyState,
};
