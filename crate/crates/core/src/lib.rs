//! Duadic group algebra codes.
//!
//! Builds duadic codes inside a group algebra `F_q[G]` for finite groups of
//! odd order: exact finite field arithmetic ([`gf`]), explicit groups with
//! `F_q`-conjugacy classes and antiautomorphisms ([`groups`]), centrally
//! primitive idempotents ([`algebra`]), linear codes and exhaustive weight
//! computations ([`codes`]), duadic pairs and their structural checks
//! ([`duadic`]), and the CSS quantum codes obtained from nested duadic codes
//! ([`quantum`]).
//!
//! Heavy enumerations run on rayon when the `parallel` feature is enabled
//! (the default) and fall back to a sequential loop otherwise; see [`exec`].

pub mod algebra;
pub mod codes;
pub mod duadic;
mod error;
pub mod exec;
pub mod gf;
pub mod groups;
pub mod quantum;

pub use error::{Error, Result};
