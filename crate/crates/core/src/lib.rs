//! Numerical value-distribution theory for rational functions.
//!
//! Computes Nevanlinna's counting, proximity and characteristic functions,
//! checks the fundamental theorems over radius grids, and produces root
//! witnesses by repeated shift-and-localize.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the scalar.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod corpus;
pub mod distribution;
pub mod error;
pub mod localize;
pub mod poly;
pub mod rational;
pub mod region;
pub mod scalar;
pub mod target;
pub mod verify;
pub mod winding;
pub mod witness;

pub use distribution::profile::{build_profile, log_grid, NevanlinnaProfile, ProfileRow, RadiusNudge};
pub use distribution::{
    characteristic_t, count_n, counting_n, enumerate_a_points, proximity_m, APoint, QuadratureConfig, TargetAnalysis,
};
pub use error::{Error, Result};
pub use localize::{all_roots, localize_one, localize_roots, RootEnclosure};
pub use poly::Polynomial;
pub use rational::RationalFunction;
pub use region::Region;
pub use scalar::Real;
pub use target::{parse_targets, TargetValue};
pub use verify::{
    claim1_chain_report, claim1_shape_check, remark_fft_check, verify_degree_growth, verify_first_fundamental,
    verify_second_fundamental, Claim1Decomposition, Claim1Shape, DegreeGrowth, DeviationReport, Verdict, VerifyParams,
};
pub use winding::winding_count;
pub use witness::{fta_witness, Claim1Outcome, WitnessMethod, WitnessTrace};

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;

pub type Polynomial64 = Polynomial<f64>;
pub type Polynomial32 = Polynomial<f32>;
pub type Rational64 = RationalFunction<f64>;
pub type Rational32 = RationalFunction<f32>;
pub type Region64 = Region<f64>;
pub type Region32 = Region<f32>;
pub type Target64 = TargetValue<f64>;
pub type Target32 = TargetValue<f32>;
pub type Profile64 = NevanlinnaProfile<f64>;
pub type Report64 = DeviationReport<f64>;
pub type Trace64 = WitnessTrace<f64>;
pub type Quadrature64 = QuadratureConfig<f64>;
