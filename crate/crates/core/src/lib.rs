//! Exact computation in Thompson's group `F`, conjugate-idempotent
//! endomorphisms of free groups and how they split, and relative fundamental
//! groups of finite graphs.

pub mod dyadic;
pub mod endo;
pub mod pi1;
pub mod pl;
pub mod thompson;
pub mod word;
pub mod sampling;
pub mod text;
pub mod cli;
pub mod verify;
