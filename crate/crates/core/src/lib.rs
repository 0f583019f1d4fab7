#![cfg_attr(not(test), no_std)]
extern crate alloc;
pub mod laurent;
pub mod matrix;
pub mod polytext;
pub mod seifert;
pub use laurent::{ExponentVector, LaurentPoly};
