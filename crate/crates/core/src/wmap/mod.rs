//! Linear systems on the projective line and the Wronski map.

pub mod bethe;
pub mod config;
mod modp;
pub mod psz;
mod refine;
pub mod system;

pub use bethe::{
    find_planes_r1, AlgebraicPlane, ExactPlane, FoundPlane, SolveReport, SolverOptions,
};
pub use config::{
    config_of_system, critical_residual, critical_residual_complex, master_function,
    master_function_complete, nondegenerate, relative_discriminant, relative_resultant, t_polys,
    z_polys, RamificationConfig,
};
pub use psz::{reconstruct_basis_series, series_rank};
pub use system::{
    annihilator_residual, annihilator_residual_series, base_locus, intermediate_wronskians,
    order_partition_at, ramification_profile, span_rank, taylor_series, wronskian_of_system,
    FlagData, LinearSystemP1, Point, RamificationDatum, RamificationProfile,
};
