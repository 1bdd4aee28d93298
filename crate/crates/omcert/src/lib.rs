//! Combinatorial certificates of non-realizability for oriented matroids.
//!
//! A chirotope assigns a sign to every ordered r-tuple of a ground set,
//! abstracting the orientation data of a rational vector configuration. This
//! crate decides whether a chirotope admits linear programming in the
//! classical sense — whether every program on it is free of monotone pivot
//! cycles — and, when a cycle exists, converts the cycle into a biquadratic
//! final polynomial: a formal positive combination of three-term identities
//! that is impossible to satisfy with real brackets, proving the chirotope
//! non-realizable.
//!
//! The pipeline, module by module:
//!
//! * [`chirotope`] — sign maps, exact rational determinants, axiom checks;
//! * [`biquadratic`] — normalized three-term sites and the inequality /
//!   equation system a realization would have to satisfy;
//! * [`omp`] — programs `(chi, f, g)`, pivot classification, cycle search;
//! * [`bfp`] — transition tables, cycle-to-certificate conversion, and the
//!   independent certificate verifier;
//! * [`lp`] + [`simplex`] — an exact rational feasibility oracle over the
//!   bracket logarithms, with Farkas multipliers recycled into certificates;
//! * [`io`] — file formats and digest-bound certificate JSON;
//! * [`generate`] — moment curve, cube, and seeded random configurations.
//!
//! The `examples/` directory exercises each capability end to end; the
//! `omcert` binary exposes the same operations as subcommands.

pub mod bfp;
pub mod biquadratic;
pub mod chirotope;
pub mod cli;
pub mod combinatorics;
pub mod generate;
pub mod io;
pub mod lp;
pub mod omp;
pub mod sign;
pub mod simplex;

pub use bfp::{certify, cycle_to_bfp, verify_certificate, BfpCertificate, CertifyOutcome};
pub use biquadratic::{enumerate_system, normalize_pair, BiquadraticSystem};
pub use chirotope::{Chirotope, VectorConfiguration};
pub use omp::{decide_euclidean, EuclideanDecision, OMProgram};
pub use sign::{ElementId, Sign};
