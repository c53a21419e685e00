//! Exact computation in the Nottingham group over prime fields.
//!
//! The Nottingham group `N(k)` is the group of continuous automorphisms of `k[[t]]`
//! that are the identity modulo `t^2`, with composition as the group law. Every
//! computation here happens in `F_p[t]/(t^(N+1))` for an explicit truncation order `N`.
//!
//! The [`order4`] module builds an explicit element of order 4 for `p = 2` by three
//! independent routes and checks the identities that certify it.

pub mod cli;
pub mod error;
pub mod field;
mod gf2;
pub mod nottingham;
pub mod order4;
pub mod series;
pub mod text;

pub use error::{Error, Result};
pub use field::{FieldElement, Prime};
pub use nottingham::{Depth, GroupElement};
pub use order4::{SigmaBundle, VerificationReport};
pub use series::Series;
