//! Rational cohomology of equal-rank torus biquotients of compact simple Lie
//! groups.
//!
//! The crate is organised around a small exact-arithmetic kernel:
//!
//! * [`polyring`] — sparse multivariate polynomials over `Q` with an even
//!   weighted grading, elementary symmetric constructors and substitution
//!   homomorphisms;
//! * [`groebner`] — Buchberger's algorithm, normal forms, ideal membership
//!   and monomial bases of graded quotient components;
//! * [`biquotient`] — the classification data for the freely acting maximal
//!   tori and the presentations `H*(G//S) = S(s*)/(i*(d_1),...,i*(d_n))`;
//! * [`lefschetz`] — the Hard Lefschetz test by ideal membership, an
//!   independent rank oracle and Betti numbers;
//! * [`momentmap`] — isotropy weights and the momentum-polytope image of the
//!   Eschenburg flag.

pub mod biquotient;
pub mod error;
pub mod groebner;
pub mod lefschetz;
mod linalg;
pub mod momentmap;
pub mod polyring;

pub use biquotient::{
    cohomology_presentation, relations, torus_embedding, weyl_generators, Family,
    GradedAlgebraPresentation, GroupSpec, TorusEmbedding, TorusKind, TorusSpec,
};
pub use error::{Error, Result};
pub use groebner::{buchberger, Budget, GroebnerBasis, MonomialOrder, OrderKind};
pub use lefschetz::{
    betti_numbers, default_omega, hlp_report, is_hard_lefschetz, surjectivity_rank_oracle,
    HlpOptions, HlpReport, HlpVerdict, OmegaCandidate,
};
pub use momentmap::{
    base_weights_cp2, classify, fiber_homomorphisms, fixed_point_weights, polytope_image,
    pullback_weights, BasePoint, EdgeStyle, FixedPointData, IntMatrix, Label, PointKind,
    PolytopeImage, WeightSet,
};
pub use polyring::{
    elementary_symmetric, format_rational, parse_rational, Monomial, Polynomial, Rational,
    VariableContext,
};
