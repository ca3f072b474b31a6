//! Exact arithmetic foundation: integer and residue polynomials,
//! resultants and discriminants, factorization over prime fields,
//! irreducibility over Z, and Sturm-based real root counting.

mod intpoly;
mod irreducible;
mod numeric;
mod residue;
mod sturm;

pub use intpoly::IntPoly;
pub use irreducible::is_irreducible_over_z;
pub use numeric::{complex_roots, real_roots_numeric};
pub use residue::{factor_mod_l, FactorMultiset, ResiduePoly};
pub use sturm::{
    all_roots_real_in_scaled_interval, count_real_roots_in_interval, RatPoly,
};
