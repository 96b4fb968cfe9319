//! Lyndon pairs: dual atom/obstruction sets of Lyndon words, the monomial
//! algebras they define, and Gröbner–Shirshov completion of the matching
//! Lie relations.

pub mod catalog;
pub mod error;
pub mod gs;
pub mod lie;
pub mod monomial;
pub mod pairs;
pub mod words;

pub use error::{Error, Result};
pub use words::{Alphabet, Word};
