//! Exact construction and analysis of `k[z]`-automorphisms of `k[x, y, z]`
//! over the rationals.
//!
//! * [`construct`] turns a one-variable automorphism of `(k[z]/(p))[x]` into
//!   an automorphism `(f1, f2)` of `k[z][x, y]` together with its inverse.
//! * [`tame`] classifies such maps as tame or wild and produces explicit
//!   factorizations for the tame ones.
//! * [`coordcheck`] decides whether a polynomial is a coordinate over `k[z]`
//!   via local nilpotency of its Jacobian derivation and a unimodularity test.

pub mod automap;
pub mod cli;
pub mod construct;
pub mod coordcheck;
pub mod derivation;
pub mod groebner;
pub mod modring;
pub mod poly;
pub mod tame;
pub mod textio;

pub use automap::{verify_inverse, ElementaryMap, MapError, PolyMap};
pub use construct::{build_pair, ConstructError, ConstructionInput, ConstructionResult};
pub use coordcheck::{coordinate_test_2var, coordinate_test_z, CoordVerdict, CoordinateReport};
pub use derivation::{exp_map, jacobian_derivation, lnd_check, Derivation, NilpotencyReport};
pub use groebner::{buchberger, contains_one, GroebnerBasis, MonomialOrder};
pub use modring::{ZPoly, ZXPoly};
pub use poly::{Monomial, Polynomial, Rational, Var};
pub use tame::{classify, decompose, nagata, TameCertificate, TamenessVerdict, Verdict};
pub use textio::{parse_map, parse_poly, print_canonical, print_map};
