//! Operad morphisms out of `ComMag` and `Mag`, the type-A machinery behind
//! their injectivity, and exact rank certificates.

mod certificate;
mod morphisms;
mod type_a;

pub use certificate::{injectivity_certificate, CertifiedMap, RankCertificate};
pub use morphisms::{commag_to_mag, mag_to_dend, phi, phi_tilde, GeneratorMap};
pub use type_a::{
    d_statistic, is_type_a, normalize_commag, psi, psi_inverse, type_a_certificate, Factorization, TypeACertificate,
};
