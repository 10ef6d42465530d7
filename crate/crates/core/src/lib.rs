//! Type A quiver Hecke combinatorics: crystals of columns, the combinatorial
//! R-matrix, q-characters, homogeneous modules and Kazhdan-Lusztig transition data.

pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod golden;
pub mod homogeneous;
pub mod kl;
pub mod qchar;
pub mod rmatrix;
pub mod tableaux;

pub use cartan::{CartanA, Rat, RootVec, WeightVec};
pub use error::{Error, Result};
