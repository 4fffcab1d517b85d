//! Block representation and the round transformation.

use super::TwinPeaksError;
use std::fmt;

/// Number of rounds.
pub const ROUNDS: u32 = 32;

/// A 128-bit block as four 32-bit words. Word `a` holds the first four bytes
/// of the big-endian block encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Block128 {
    /// First word.
    pub a: u32,
    /// Second word.
    pub b: u32,
    /// Third word.
    pub c: u32,
    /// Fourth word.
    pub d: u32,
}

impl Block128 {
    /// Build from words.
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Block128 { a, b, c, d }
    }

    /// Parse 32 hex digits, big-endian, first byte first.
    pub fn from_hex(s: &str) -> Result<Self, TwinPeaksError> {
        let s = s.trim();
        if s.len() != 32 || !s.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(TwinPeaksError::BadBlockHex(s.to_string()));
        }
        let word = |i: usize| u32::from_str_radix(&s[i * 8..(i + 1) * 8], 16).unwrap();
        Ok(Block128::new(word(0), word(1), word(2), word(3)))
    }

    /// Lowercase hex, no separators.
    pub fn to_hex(self) -> String {
        format!("{:08x}{:08x}{:08x}{:08x}", self.a, self.b, self.c, self.d)
    }

    /// Parse a multi-block hex string (ECB-style concatenation).
    pub fn parse_blocks(s: &str) -> Result<Vec<Self>, TwinPeaksError> {
        let s = s.trim();
        if s.is_empty() || s.len() % 32 != 0 {
            return Err(TwinPeaksError::BadBlockHex(s.to_string()));
        }
        (0..s.len() / 32)
            .map(|i| Block128::from_hex(&s[i * 32..(i + 1) * 32]))
            .collect()
    }
}

impl fmt::Display for Block128 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// One forward round: (a,b,c,d) <- (b,c,d, a XOR fval) where fval must be
/// F_k(b,c,d) for the round's key index k.
pub fn forward_round(x: Block128, fval: u32) -> Block128 {
    Block128::new(x.b, x.c, x.d, x.a ^ fval)
}

/// Undo one round: (a,b,c,d) <- (d XOR fval, a, b, c) where fval must be
/// F_k(a,b,c) evaluated on the current (post-round) state words.
pub fn invert_round(x: Block128, fval: u32) -> Block128 {
    Block128::new(x.d ^ fval, x.a, x.b, x.c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip_and_first_byte() {
        let y = Block128::from_hex("e473f19a247429ab33b66268d57dd241").unwrap();
        assert_eq!(y.a, 0xe473f19a, "first byte is e4");
        assert_eq!(y.to_hex(), "e473f19a247429ab33b66268d57dd241");
        assert!(Block128::from_hex("xyz").is_err());
        assert!(Block128::from_hex("00").is_err());
    }

    #[test]
    fn parse_blocks_ecb() {
        let two = Block128::parse_blocks(
            "000102030405060708090a0b0c0d0e0ffffefdfcfbfaf9f8f7f6f5f4f3f2f1f0",
        )
        .unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].a, 0x00010203);
        assert_eq!(two[1].a, 0xfffefdfc);
        assert!(Block128::parse_blocks("0011").is_err());
    }

    #[test]
    fn invert_round_undoes_forward_round() {
        let x = Block128::new(1, 2, 3, 4);
        let fval = 0xdeadbeef;
        let y = forward_round(x, fval);
        assert_eq!(invert_round(y, fval), x);
    }

    #[test]
    fn invert_round_with_zero_is_word_rotation() {
        let x = Block128::new(7, 8, 9, 10);
        assert_eq!(invert_round(x, 0), Block128::new(10, 7, 8, 9));
    }
}
