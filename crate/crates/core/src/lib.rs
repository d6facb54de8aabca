//! Workbench for linear complementary dual (LCD) codes obtained from
//! algebraic geometry codes over fields of characteristic two.
//!
//! Modules, bottom-up:
//! - [`gf`]: GF(2^m) arithmetic and coordinatewise vector operations.
//! - [`matrix`], [`code`], [`codefile`]: linear codes, duals, hulls, distances.
//! - [`lcd`]: support counting sets, the inequality conditions on them, and
//!   the search for a scaling vector that turns a code into an LCD code.
//! - [`ag`]: one-point codes on the projective line and Hermitian curves.
//! - [`bounds`]: entropy, GV and TV rate functions, rate windows, crossovers.

pub mod ag;
pub mod bounds;
pub mod code;
pub mod codefile;
pub mod error;
pub mod gf;
pub mod lcd;
pub mod matrix;

pub use code::{IndexSet, LinearCode};
pub use error::{Error, Result};
pub use gf::{Field, Gf};
pub use matrix::Matrix;
