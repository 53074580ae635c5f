//! Finite topological spaces, the poset categories of their closed sets, and
//! the correspondence between continuous functions and adjoint pairs of
//! closure-induced functors.
//!
//! A set function `φ: X -> Y` between finite spaces induces
//! `T_φ: U ↦ cl(φ(U))` and `T^φ: V ↦ cl(φ⁻¹(V))` between the closed-set
//! categories. `φ` is continuous exactly when `(T_φ, T^φ)` is an adjoint pair;
//! this crate decides both sides with explicit witnesses and checks the
//! correspondence exhaustively for spaces of up to four points.
//!
//! ```
//! use std::sync::Arc;
//! use contadj::{topology::validate_space, continuity::{SetFunction, verify_theorem}};
//!
//! let indiscrete = Arc::new(validate_space(2, &[0b00, 0b11]).unwrap());
//! let discrete = Arc::new(validate_space(2, &[0b00, 0b01, 0b10, 0b11]).unwrap());
//! let phi = SetFunction::new(indiscrete, discrete, vec![0, 1]).unwrap();
//! let report = verify_theorem(&phi).unwrap();
//! assert!(!report.continuous && !report.adjoint && report.agree);
//! ```

pub mod adjunction;
pub mod category;
pub mod continuity;
pub mod error;
pub mod harness;
pub mod io;
pub mod topology;

pub use adjunction::{
    classify_hom_case, compose_adjunctions, is_adjoint, try_left_adjoint, try_right_adjoint,
    AdjunctionVerdict, HomCase, HomCaseKind,
};
pub use category::{
    check_naturality, compose, hom, identity_functor, is_functor, FunctorVerdict, HomSet,
    Inclusion, MonotoneMap,
};
pub use continuity::{
    check_ddag, forward_inclusion_lemma, induced_direct, induced_inverse, is_continuous,
    proof_conditions, verify_theorem, ContinuityVerdict, DdagVerdict, ProofConditions, SetFunction,
    TheoremReport,
};
pub use error::{Error, Result};
pub use harness::{
    enumerate_functions, find_discontinuous_gallery, run_campaign, Campaign, CampaignReport,
    GalleryEntry,
};
pub use topology::{
    enumerate_spaces, from_open_family, generate_from_closed_subbasis, validate_space, FiniteSpace,
    Mask, Subset,
};
