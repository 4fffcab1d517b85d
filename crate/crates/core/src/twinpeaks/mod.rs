//! The TwinPeaks3 cipher, its encryption and incomplete-decryption oracles,
//! and the slide attack that decrypts without ever learning the secret round
//! functions.
//!
//! A 128-bit block splits into four 32-bit words and goes through 32 rounds
//! of (a,b,c,d) <- (b,c,d, a XOR F_i(b,c,d)), with secret F_1 on odd rounds
//! and F_2 on even ones. The testing server also exposes an incomplete
//! decryption that runs the same rounds with the key order reversed; writing
//! the round maps as f_1, f_2 gives E = (f_1 f_2)^16 and I = (f_2 f_1)^16,
//! and the slide identity f_1(I(x)) = E(f_1(x)) lets a birthday search
//! recover individual F values.

mod attack;
mod cipher;
mod oracle;

pub use attack::{recover_f_value, slide_attack_decrypt, AttackStats};
pub use cipher::{forward_round, invert_round, Block128, ROUNDS};
pub use oracle::{Oracle, RoundFunction};

use thiserror::Error;

/// Errors raised by the TwinPeaks3 toolkit.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwinPeaksError {
    /// Hex input of the wrong shape.
    #[error("block hex must be 32 lowercase hex digits, got {0:?}")]
    BadBlockHex(String),
    /// Birthday search exceeded its per-value query budget.
    #[error("query budget of {0} oracle calls exhausted while recovering a round-function value")]
    QueryBudgetExhausted(u64),
}
