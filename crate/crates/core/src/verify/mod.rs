//! Numerical checks of the value-distribution theorems over radius grids.

pub mod chain;
pub mod claim1;
pub mod report;
pub mod theorems;

pub use chain::claim1_chain_report;
pub use claim1::{claim1_shape_check, Claim1Decomposition, Claim1Shape};
pub use report::{ComponentSeries, DeviationReport, Theorem, Verdict, VerifyParams};
pub use theorems::{
    fft_limit, jensen_constant, remark_fft_check, verify_degree_growth, verify_first_fundamental,
    verify_second_fundamental, DegreeGrowth,
};
