//! Level and sub-level persistence of piecewise-linear maps on finite
//! simplicial complexes, over Z2.
//!
//! The level persistence of `f : X → ℝ` is described by four kinds of bars,
//! `[t_i, t_j]`, `(t_i, t_j)`, `(t_i, t_j]` and `[t_i, t_j)`. This crate
//! computes the relevant level persistence numbers (`i_r`, `l_r`, `l_r⁺`,
//! `l_r⁻`, `e_r`) directly from cell models of level and interlevel sets,
//! converts them to bars along two independent routes, converts bars back
//! to numbers, and derives the sub-level barcode from the level barcode.
//!
//! All value-carrying types are generic over [`Scalar`]; `f64` and exact
//! rationals are provided.

pub mod complex;
pub mod error;
pub mod fixtures;
pub mod function;
pub mod level;
pub mod scalar;
pub mod slab;
pub mod sublevel;
pub mod telescope;
pub mod z2;

pub use complex::{Simplex, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use function::{critical_values, lower_star_filtration, CriticalGrid, VertexValuedMap};
pub use level::{
    barcode_from_i, barcode_from_llle, compute_relevant_numbers, relevant_from_barcode, sublevel_from_level, End,
    LevelBar, LevelBarcode, RelevantNumbers,
};
pub use scalar::Scalar;
pub use sublevel::{betti_from_bars, mu_from_betti, sublevel_barcode, BettiTable, Death, SublevelBar, SublevelBarcode};
pub use telescope::{telescope, Filtration};

/// Exact rational values.
pub type Rational = num_rational::Ratio<i64>;

pub type Map = VertexValuedMap<f64>;
pub type ExactMap = VertexValuedMap<Rational>;
pub type Grid = CriticalGrid<f64>;
pub type ExactGrid = CriticalGrid<Rational>;
pub type Levels = LevelBarcode<f64>;
pub type ExactLevels = LevelBarcode<Rational>;
pub type Sublevels = SublevelBarcode<f64>;
pub type ExactSublevels = SublevelBarcode<Rational>;
pub type Numbers = RelevantNumbers<f64>;
pub type ExactNumbers = RelevantNumbers<Rational>;
