//! Cryptanalysis workbench core library.
//!
//! The crate bundles a set of self-contained cryptographic challenges and the
//! machinery to attack or analyze them:
//!
//! - [`curl27`] — the Curl27 ternary sponge hash, its fragmentation and
//!   3-expansion invariants, and a birthday collision attack.
//! - [`twinpeaks`] — the TwinPeaks3 generalized Feistel cipher with a slide
//!   attack that decrypts through encrypt/incomplete-decrypt oracles.
//! - [`classical`] — a six-letter rotor machine and a Hamming-coded
//!   substitution cipher pipeline with frequency analysis.
//! - [`slpvm`] — a validating VM for straight-line programs over Z/2019.
//! - [`lattice`] — Lagrange-Gauss reduction and a hint-based factoring attack.
//! - [`boolfun`] — vectorial Boolean function analysis: APN involutions,
//!   S-box metrics, and a finite-field conjecture verifier.
//! - [`sharing`] — non-complete sharings of 4-bit permutations.
//! - [`protocols`] — a secure-sum protocol simulation and two number puzzles.
//! - [`algebra`] — shared arithmetic: GF(2^n), balanced ternary, Z/2019,
//!   Dickson polynomials, exact integer square roots.
//!
//! Challenge vectors (ciphertexts, collision strings, factoring targets) are
//! embedded in [`data`] so every attack can be checked against a known answer.

pub mod algebra;
pub mod boolfun;
pub mod classical;
pub mod curl27;
pub mod data;
pub mod lattice;
pub mod protocols;
pub mod sharing;
pub mod slpvm;
pub mod twinpeaks;
