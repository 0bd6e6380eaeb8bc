//! Module calculus over Q[t, t⁻¹]: Laurent arithmetic, Smith normal form,
//! Ext and splitting tests, lifting homomorphisms, and the distortion
//! certificate chains.

mod cert;
mod laurent;
mod lifting;
mod lmatrix;
mod module;
mod snf;

pub use cert::{certificate_chains, CertError, CertificateChain, CertificateSetup};
pub use laurent::LaurentPoly;
pub use lifting::{
    lifting_homomorphism, verify_lifting, ComplexPair, LaurentComplex, LiftError, Lifting,
};
pub use lmatrix::LaurentMatrix;
pub use module::{ext_module, splitting_test, MapError, ModuleMap, QZModule, SplitVerdict};
pub use snf::{kernel_basis, laurent_snf, solve_linear, verify_smith, Smith};
