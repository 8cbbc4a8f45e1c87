//! Weyl dimensions, group specifications and zeta-function coefficients.

mod dimension;
mod enumerate;
mod group;
mod sizes;
mod table;
mod zeta;

pub use dimension::{dim_irrep, dim_irrep_product, DimEvaluator};
pub use enumerate::{enumerate_dominant, enumerate_dominant_with, EnumOptions};
pub use group::{GroupSpec, Lattice};
pub use sizes::{recover_factor_sizes, series_of_sizes};
pub use table::{DegreeTable, Variant};
pub use zeta::{
    allowable, allowable_at, euler_identity_check, euler_product_matches, prime_power_scan,
    zeta_coefficients, zeta_star_coefficients,
};
