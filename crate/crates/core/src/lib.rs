//! Representation theory of Dynkin quivers over fields and over the
//! integers: indecomposable catalogs, Hom/Ext computations, subcategory
//! closure operators, filtration lattices and poset gluing.

pub mod error;
pub mod field;
pub mod quiver;
pub mod rep;

pub use error::{Error, Result};
