//! The (7,4) Hamming code with lexicographic parity-check columns.
//!
//! Column j of H is the binary expansion of j (1..=7), so a nonzero syndrome
//! is directly the 1-indexed position of a single-bit error. The generator G
//! has identity columns at positions 3, 5, 6, 7, which is where the four
//! data bits live.

/// Parity-check matrix H (3 rows) and generator matrix G (4 rows), rows as
/// 7-bit masks with bit 6 = position 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HammingCode {
    /// Rows of H.
    pub h: [u8; 3],
    /// Rows of G.
    pub g: [u8; 4],
}

/// The fixed code used by the challenge.
pub const CODE: HammingCode = HammingCode {
    h: [0b0001111, 0b0110011, 0b1010101],
    g: [0b1110000, 0b1001100, 0b0101010, 0b1101001],
};

/// Data-bit positions (1-indexed) in a codeword.
const DATA_POSITIONS: [u32; 4] = [3, 5, 6, 7];

#[inline]
fn bit(word: u8, pos: u32) -> u8 {
    (word >> (7 - pos)) & 1
}

/// Encode a 4-bit nibble: d * G over GF(2). Data bit i (MSB first) selects
/// row i of G.
pub fn hamming_encode(data: u8) -> u8 {
    debug_assert!(data < 16);
    let mut w = 0u8;
    for (i, row) in CODE.g.iter().enumerate() {
        if (data >> (3 - i)) & 1 == 1 {
            w ^= row;
        }
    }
    w
}

/// Decode a 7-bit word: returns the 4 data bits and the corrected position
/// (0 when the word was already a codeword). Every 7-bit word decodes.
pub fn hamming_decode(word: u8) -> (u8, u32) {
    debug_assert!(word < 128);
    let mut syndrome = 0u32;
    for (i, row) in CODE.h.iter().enumerate() {
        if ((row & word).count_ones() & 1) == 1 {
            syndrome |= 1 << (2 - i);
        }
    }
    let corrected = if syndrome == 0 {
        word
    } else {
        word ^ (1 << (7 - syndrome))
    };
    let mut data = 0u8;
    for (i, &pos) in DATA_POSITIONS.iter().enumerate() {
        data |= bit(corrected, pos) << (3 - i);
    }
    (data, syndrome)
}

/// Correct a 7-bit word to the nearest codeword.
pub fn hamming_correct(word: u8) -> u8 {
    let (data, _) = hamming_decode(word);
    hamming_encode(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_annihilates_h() {
        for grow in CODE.g {
            for hrow in CODE.h {
                assert_eq!((grow & hrow).count_ones() & 1, 0, "G * H^T = 0");
            }
        }
        // H columns are the binary numbers 1..7
        for pos in 1..=7u32 {
            let mut col = 0u32;
            for (i, row) in CODE.h.iter().enumerate() {
                col |= (bit(*row, pos) as u32) << (2 - i);
            }
            assert_eq!(col, pos);
        }
    }

    #[test]
    fn table_row_1011() {
        assert_eq!(hamming_encode(0b1011), 0b0110011);
        assert_eq!(hamming_decode(0b0110011), (0b1011, 0));
    }

    #[test]
    fn zero_codeword() {
        assert_eq!(hamming_decode(0), (0, 0));
    }

    #[test]
    fn single_bit_flip_of_1011_codeword() {
        // flipping position 1 gives 1110011, syndrome points at position 1
        assert_eq!(hamming_decode(0b1110011), (0b1011, 1));
    }

    #[test]
    fn all_single_bit_corruptions_decode() {
        // brute-force oracle over all 16 nibbles and all 7 flip positions
        for d in 0..16u8 {
            let cw = hamming_encode(d);
            assert_eq!(hamming_decode(cw), (d, 0));
            for pos in 1..=7u32 {
                let corrupted = cw ^ (1 << (7 - pos));
                assert_eq!(hamming_decode(corrupted), (d, pos), "d={d} pos={pos}");
            }
        }
    }
}
