//! Exact invariants of plane curve singularity links.
//!
//! The crate works over exact rationals throughout and needs only `alloc`.
//! Starting from the branches of a germ it computes an embedded resolution,
//! divisorial valuations, the ideals of (log-)quasiadjunction and their
//! faces, characteristic varieties with depths, and for one branch the
//! higher Alexander polynomials together with Hodge numbers.
//!
//! ```
//! use qadj_core::{parse_polynomial, resolve_germ, PlaneCurveGerm, ResolutionOptions};
//!
//! let cusp = PlaneCurveGerm::new(vec![parse_polynomial("x^2+y^3").unwrap()]).unwrap();
//! let graph = resolve_germ(&cusp, &ResolutionOptions::default()).unwrap();
//! assert_eq!(graph.curves().len(), 3);
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod alexander;
pub mod arrangement;
pub mod charvar;
mod error;
pub mod germ;
pub mod ideals;
pub mod jet;
pub mod lattice;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod polytopes;
pub mod rational;
pub mod resolution;
mod upoly;

pub use alexander::{
    acampo_delta1, constants_of_quasiadjunction, higher_alexander, hodge_numbers, AlexanderInvariants, AnglePolynomial,
    EigenvalueHodgeDatum,
};
pub use charvar::{
    assemble_components, character_multiplicity, characters_of_depth, components_of_depth, conjugate_face, depth_terms,
    essential_filter, exp_closure, CharacterOfFiniteOrder, DepthTerms, HodgeMultiplicityReport, SubtorusEquation,
    TranslatedSubtorusComponent,
};
pub use error::Error;
pub use germ::PlaneCurveGerm;
pub use ideals::{
    e_min, ideal_triple_at, multiplier_ideal, pullback_order_on_cover, valuation_ideal, IdealTriple,
    PullbackOrderDatum, ThresholdVector, TripleEvaluator,
};
pub use jet::{jet_truncate, quotient_dim, subspace_from_conditions, subspace_sum, JetSpace, JetSubspace};
pub use parse::{parse_factors, parse_polynomial, parse_polynomial_in};
pub use poly::{BivariatePolynomial, Monomial};
pub use polytopes::{
    candidate_hyperplanes, enumerate_faces, face_volume, is_log_canonical, log_canonical_region,
    semicontinuity_compare, standard_lct_ray, total_face_volume, FaceOptions, LogCanonicalRegion, QAFace, QAHyperplane,
    RayThresholds, SemicontinuityReport,
};
pub use rational::Rational;
pub use resolution::{
    ord_along, ord_linear_conditions, resolve_germ, BlowUpChartPath, BlowUpStep, Chart, ExceptionalCurve, Provenance,
    ResolutionGraph, ResolutionOptions,
};

pub type Result<T> = core::result::Result<T, Error>;
