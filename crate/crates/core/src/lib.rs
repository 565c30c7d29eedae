//! Exact construction of generalized Macdonald functions (eigenfunctions
//! of the Ding-Iohara zero mode `X0`) and generalized Jack functions
//! (eigenfunctions of the differential operator `H_beta`) on N-coloured
//! symmetric functions.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod field;
pub mod partitions;
pub mod symspace;
pub mod operators;
pub mod eigen;
