//! Shared arithmetic: binary finite fields GF(2^n), balanced-ternary
//! encoding, the ring of integers modulo 2019, Dickson polynomials, and
//! exact integer square roots.

mod balanced;
mod gf2n;
mod intsqrt;
mod mod2019;

pub use balanced::{balanced_decode, balanced_encode, BalancedTritVector};
pub use gf2n::{Gf2nField, DEFAULT_MODULI};
pub use intsqrt::int_sqrt_exact;
pub use mod2019::{dickson_eval, Mod2019};

use thiserror::Error;

/// Errors raised by the arithmetic primitives.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// Field constructor rejected the modulus.
    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {degree}")]
    ReducibleModulus {
        /// Offending polynomial mask.
        modulus: u32,
        /// Expected extension degree.
        degree: u32,
    },
    /// Extension degree outside the supported 3..=16 range.
    #[error("extension degree {0} out of supported range 3..=16")]
    DegreeOutOfRange(u32),
    /// An element mask has bits above the field degree.
    #[error("element {element:#x} out of range for GF(2^{degree})")]
    ElementOutOfRange {
        /// Offending element mask.
        element: u32,
        /// Field degree.
        degree: u32,
    },
    /// Dickson polynomial degree above the supported recurrence bound.
    #[error("Dickson degree {0} exceeds supported bound 64")]
    DicksonDegreeTooLarge(u64),
}
