//! Exact symbolic computation of SL2(C) character varieties of the
//! two-bridge link complements obtained by 1/n surgery on the Borromean
//! rings, together with the topological classification of their
//! conic-bundle components.
//!
//! The pipeline, bottom to top:
//!
//! * [`exactnum`]  - rationals and quadratic surds, the coefficient field;
//! * [`polycore`]  - sparse multivariate/Laurent polynomials: ring ops,
//!   substitution, gcd, resultants, factorization, bihomogenization;
//! * [`linkgroup`] - surgery relator words and the representation-variety
//!   polynomials p1, p2 and their gcd p;
//! * [`traceelim`] - rewriting p in trace coordinates (x,y,z) and splitting
//!   the character polynomial into components;
//! * [`projmodel`] - the projective model in P^2 x P^1: singular points,
//!   conic-matrix fiber classification, genus and intersection formulas;
//! * [`resolve`]   - blow-ups of the singular points in local charts and
//!   Euler-characteristic increments;
//! * [`euler`]     - the Euler characteristic of the singular model via the
//!   2-to-1 projection to P^1 x P^1, and the final surface classification;
//! * [`report`]    - pipeline orchestration and serializable reports;
//! * [`cache`]     - persistent store for intermediate polynomials.

pub mod cache;
pub mod error;
pub mod euler;
pub mod exactnum;
pub mod linkgroup;
pub mod polycore;
pub mod projmodel;
pub mod report;
pub mod resolve;
pub mod traceelim;

pub use error::{Error, Result};
