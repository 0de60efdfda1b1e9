//! Palindromization on the free group `F2 = <a, b>`.
//!
//! `Pal(w) = (ab)^-1 R_w(ab)`, where `w -> R_w` sends `a` to
//! `R_a: (a, b) -> (a, ba)` and `b` to `R_b: (a, b) -> (ab, b)`. On positive
//! words it coincides with iterated palindromic closure. The crate provides
//! exact word arithmetic, the automorphisms behind `Pal`, the braid group
//! `B3` they form, decision procedures for equality, kernel and image
//! membership, preimage recovery, and finite-quotient certificates.

pub mod braid;
pub mod endo;
pub mod error;
pub mod freegroup;
pub mod pal;
pub mod quotient;
pub mod sample;

pub use braid::{beta, braids_equal, in_n, iota, is_trivial, sl2, BraidLetter, BraidWord};
pub use endo::{l_of, matrix_of, r_of, Endomorphism, IntMatrix2};
pub use error::{Error, Result};
pub use freegroup::{are_conjugate, FreeWord, Generator, IntVector2, Letter, MonoidWord, Sign};
pub use pal::{
    closure_plus, directive, in_image, in_kernel, pal, pal_equal, pal_hat, pal_recursive, pp,
    preimage, semidirect_mul, SemiDirectElement,
};
pub use quotient::{
    act_point, closure_discontinuity_demo, continuity_certificate, orbit_table, pro_p_gap,
    FiniteHom, OrbitTable, Permutation, Point,
};
