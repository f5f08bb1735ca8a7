//! Exact resistance distances and Kirchhoff indices, with a toolkit for
//! checking extremal results on cactus graphs: closed forms, named
//! constructions, Kf-increasing transformations and exhaustive enumeration.

pub mod blocks;
pub mod canon;
pub mod closed_forms;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod rational;
pub mod resistance;
pub mod transformations;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{coalesce, Coalescence, Graph};
pub use rational::Rational;
