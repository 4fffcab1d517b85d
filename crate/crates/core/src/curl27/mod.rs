//! The Curl27 ternary sponge hash, its structural invariants, and a birthday
//! collision attack.
//!
//! Curl27 maps a ternary string to a 243-trit digest by absorbing 243-trit
//! blocks into a 729-trit state W = W0 || W1 || W2 and applying the 27-round
//! sponge permutation after each block. W1 is initialized with the
//! balanced-ternary message length, which is what the collision attack
//! exploits: states whose aligned m-runs are constant stay that way through
//! the permutation, so the effective digest space shrinks to 243/m trits.

mod attack;
mod hash;
mod sbox;
mod trits;

pub use attack::{fragmentation_collision_attack, AttackOutcome};
pub use hash::{curl_hash, curlf, CurlState, DIGEST_TRITS, STATE_TRITS};
pub use sbox::sbox_apply;
pub use trits::{Trit, TritString};

use thiserror::Error;

/// Errors raised by the Curl27 toolkit.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Curl27Error {
    /// A trit value outside {-1, 0, 1}.
    #[error("invalid trit value {0}; expected -1, 0 or 1")]
    InvalidTrit(i8),
    /// A trit-string token that does not parse.
    #[error("invalid trit token {0:?}")]
    InvalidToken(String),
    /// Word length incompatible with the requested fragmentation.
    #[error("word length {len} is not divisible by fragment size {m}")]
    LengthNotDivisible {
        /// Word length in trits.
        len: usize,
        /// Fragment size.
        m: usize,
    },
    /// Fragment size that is not a power of 3.
    #[error("fragment size {0} is not a power of 3")]
    NotPowerOfThree(usize),
    /// Wrong word width for a fixed-width check.
    #[error("expected a word of {expected} trits, got {got}")]
    WrongWidth {
        /// Required width.
        expected: usize,
        /// Actual width.
        got: usize,
    },
    /// Unsupported attack fragment size.
    #[error("attack supports m in {{3, 9, 27}}, got {0}")]
    UnsupportedFragment(u32),
    /// Attack parameters whose colliding strings cannot be materialized.
    #[error("attack with m = {m} needs strings of {trits} trits; not materializable")]
    InfeasibleParameters {
        /// Fragment size.
        m: u32,
        /// Required message length in trits.
        trits: u64,
    },
    /// Collision search ran out of budget.
    #[error("no collision within the hash budget of {0}")]
    BudgetExhausted(u64),
}

/// True iff every aligned m-run of `word` is constant. `m` must be a power
/// of 3 dividing the word length.
pub fn is_fragmented(word: &TritString, m: usize) -> Result<bool, Curl27Error> {
    if !is_power_of_three(m) {
        return Err(Curl27Error::NotPowerOfThree(m));
    }
    if word.len() % m != 0 {
        return Err(Curl27Error::LengthNotDivisible {
            len: word.len(),
            m,
        });
    }
    Ok(word
        .as_i8s()
        .chunks_exact(m)
        .all(|run| run.iter().all(|&t| t == run[0])))
}

/// True iff the 243-trit `word` has the form (abc)^81.
pub fn is_expanded3(word: &TritString) -> Result<bool, Curl27Error> {
    if word.len() != DIGEST_TRITS {
        return Err(Curl27Error::WrongWidth {
            expected: DIGEST_TRITS,
            got: word.len(),
        });
    }
    let w = word.as_i8s();
    Ok((3..DIGEST_TRITS).all(|q| w[q] == w[q % 3]))
}

/// True iff the strings differ and their digests agree.
pub fn verify_collision(x: &TritString, x2: &TritString) -> bool {
    x != x2 && curl_hash(x) == curl_hash(x2)
}

pub(crate) fn is_power_of_three(mut m: usize) -> bool {
    if m == 0 {
        return false;
    }
    while m % 3 == 0 {
        m /= 3;
    }
    m == 1
}
