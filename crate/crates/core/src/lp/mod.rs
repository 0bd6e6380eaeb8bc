//! Exact-rational linear programming and isoperimetric duality on finite
//! balls: a two-phase simplex with Bland's anti-cycling rule, primal and dual
//! certificates, polyhedral norms with exact dual-norm evaluation, and the
//! bounded-primitive-or-violator dichotomy.

mod ball;
mod duality;
mod norm;
mod simplex;

pub use ball::{ball_grid, ball_line, ball_tree3, FiniteBall};
pub use duality::{
    assemble_primal, bounded_primitive_or_violator, linf_coboundary_profile, weighted_primitive,
    Direction, DualityOutcome, ProfileEntry,
};
pub use norm::PolyhedralNorm;
pub use simplex::{dual_of, simplex_solve, LPResult, LPStatus, StandardLP};
