//! Classical-cipher challenges: a six-letter rotor machine with key brute
//! force, and the 16QAM pipeline (hex parsing, Hamming(7,4) correction,
//! codeword frequency analysis, substitution application).

mod hamming;
mod qam;
mod rotor;
mod score;

pub use hamming::{hamming_decode, hamming_encode, HammingCode};
pub use qam::{
    apply_substitution, codeword_frequencies, hex_to_bits, Codeword, SubstitutionKey,
};
pub use rotor::{rotor_bruteforce, rotor_encrypt, PositionTables, RotorKey, ROTOR_ALPHABET};
pub use score::{dictionary_coverage, score_english};

use thiserror::Error;

/// Errors raised by the classical-cipher toolkit.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassicalError {
    /// Character outside the rotor alphabet {O, P, R, S, T, Y}.
    #[error("character {0:?} is not in the rotor alphabet OPRSTY")]
    BadRotorChar(char),
    /// Unknown rotor key color.
    #[error("unknown rotor key {0:?}")]
    BadRotorKey(String),
    /// A substitution table that is not a fixed-point-free involution.
    #[error("rotor table for {0:?} is not a fixed-point-free involution")]
    BadRotorTable(String),
    /// Malformed rotor table data.
    #[error("malformed rotor table line {0:?}")]
    BadRotorTableLine(String),
    /// Invalid hex digit in a ciphertext.
    #[error("invalid hex digit {0:?}")]
    BadHexDigit(char),
    /// Trailing-bit adjustment out of range.
    #[error("drop_trailing must be below 4, got {0}")]
    BadTrailingDrop(usize),
    /// Bit stream that does not split into 7-bit codewords.
    #[error("bit stream of length {0} is not a multiple of 7")]
    NotCodewordAligned(usize),
    /// Codeword with no mapping in the substitution key.
    #[error("codeword {0:07b} is not mapped by the substitution key")]
    UnmappedCodeword(u8),
    /// Malformed substitution key data.
    #[error("malformed substitution key line {0:?}")]
    BadKeyLine(String),
}
