//! The 16QAM decode pipeline: hex stream -> bits -> corrected 7-bit
//! codewords -> frequency table / substituted text.

use super::hamming::hamming_correct;
use super::ClassicalError;
use std::collections::BTreeMap;

/// A corrected 7-bit Hamming codeword.
pub type Codeword = u8;

/// Expand a hex string MSB-first into bits, dropping `drop_trailing` final
/// bits (must be below 4). Whitespace is ignored.
pub fn hex_to_bits(hex: &str, drop_trailing: usize) -> Result<Vec<bool>, ClassicalError> {
    if drop_trailing >= 4 {
        return Err(ClassicalError::BadTrailingDrop(drop_trailing));
    }
    let mut bits = Vec::with_capacity(hex.len() * 4);
    for c in hex.chars() {
        if c.is_whitespace() {
            continue;
        }
        let v = c.to_digit(16).ok_or(ClassicalError::BadHexDigit(c))? as u8;
        for i in (0..4).rev() {
            bits.push((v >> i) & 1 == 1);
        }
    }
    bits.truncate(bits.len() - drop_trailing);
    Ok(bits)
}

/// Split a bit stream into 7-bit words and correct each one.
pub fn bits_to_codewords(bits: &[bool]) -> Result<Vec<Codeword>, ClassicalError> {
    if bits.len() % 7 != 0 {
        return Err(ClassicalError::NotCodewordAligned(bits.len()));
    }
    Ok(bits
        .chunks_exact(7)
        .map(|chunk| {
            let word = chunk
                .iter()
                .fold(0u8, |acc, &b| (acc << 1) | u8::from(b));
            hamming_correct(word)
        })
        .collect())
}

/// Exact occurrence counts per codeword.
pub fn codeword_frequencies(words: &[Codeword]) -> BTreeMap<Codeword, usize> {
    let mut table = BTreeMap::new();
    for &w in words {
        *table.entry(w).or_insert(0) += 1;
    }
    table
}

/// A substitution key from codewords to output characters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubstitutionKey {
    map: BTreeMap<Codeword, char>,
}

impl SubstitutionKey {
    /// Build from pairs.
    pub fn new(pairs: impl IntoIterator<Item = (Codeword, char)>) -> Self {
        SubstitutionKey {
            map: pairs.into_iter().collect(),
        }
    }

    /// Parse lines of the form `0110011 t`.
    pub fn parse(text: &str) -> Result<Self, ClassicalError> {
        let mut map = BTreeMap::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || ClassicalError::BadKeyLine(line.to_string());
            let (cw, ch) = line.split_once(' ').ok_or_else(bad)?;
            if cw.len() != 7 || !cw.chars().all(|c| c == '0' || c == '1') {
                return Err(bad());
            }
            let word = u8::from_str_radix(cw, 2).map_err(|_| bad())?;
            let mut chars = ch.trim().chars();
            let c = chars.next().ok_or_else(bad)?;
            if chars.next().is_some() {
                return Err(bad());
            }
            map.insert(word, c);
        }
        Ok(SubstitutionKey { map })
    }

    /// Character for a codeword.
    pub fn get(&self, w: Codeword) -> Option<char> {
        self.map.get(&w).copied()
    }

    /// Number of mapped codewords.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// True when no codeword is mapped.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// The key that renders codewords as the hex symbols 0..F ordered by
    /// descending frequency in `words` (the ciphertext alphabet used during
    /// manual analysis).
    pub fn hex_by_frequency(words: &[Codeword]) -> Self {
        let freq = codeword_frequencies(words);
        let mut by_count: Vec<(Codeword, usize)> = freq.into_iter().collect();
        by_count.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let digits = "0123456789ABCDEF";
        SubstitutionKey {
            map: by_count
                .iter()
                .zip(digits.chars())
                .map(|(&(w, _), c)| (w, c))
                .collect(),
        }
    }
}

/// Substitute every codeword through the key.
pub fn apply_substitution(
    words: &[Codeword],
    key: &SubstitutionKey,
) -> Result<String, ClassicalError> {
    words
        .iter()
        .map(|&w| key.get(w).ok_or(ClassicalError::UnmappedCodeword(w)))
        .collect()
}

/// Merge the two decoded part streams according to a pattern of '1'/'2'
/// characters (one per output character).
pub fn merge_streams(
    part1: &str,
    part2: &str,
    pattern: &str,
) -> Result<String, ClassicalError> {
    let mut i1 = part1.chars();
    let mut i2 = part2.chars();
    let mut out = String::with_capacity(pattern.len());
    for which in pattern.trim().chars() {
        let next = match which {
            '1' => i1.next(),
            '2' => i2.next(),
            other => return Err(ClassicalError::BadKeyLine(other.to_string())),
        };
        match next {
            Some(c) => out.push(c),
            None => return Err(ClassicalError::BadKeyLine("pattern too long".into())),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn hex_expansion() {
        let bits = hex_to_bits("e4", 0).unwrap();
        let s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        assert_eq!(s, "11100100");
        assert_eq!(hex_to_bits("0", 0).unwrap(), vec![false; 4]);
        assert!(hex_to_bits("0", 4).is_err());
        assert_eq!(hex_to_bits("g", 0), Err(ClassicalError::BadHexDigit('g')));
    }

    #[test]
    fn part_sizes() {
        // 385 hex digits -> 1540 bits -> 220 codewords
        let w1 = bits_to_codewords(&hex_to_bits(&data::qam_part1_hex(), 0).unwrap()).unwrap();
        assert_eq!(w1.len(), 220);
        // 418 hex digits + the annotated zero bit -> 1673 bits -> 239 codewords
        let w2 = data::qam_part2_codewords();
        assert_eq!(w2.len(), 239);
    }

    #[test]
    fn misaligned_stream_rejected() {
        assert_eq!(
            bits_to_codewords(&[false; 6]),
            Err(ClassicalError::NotCodewordAligned(6))
        );
    }

    #[test]
    fn frequencies_match_expected_tables() {
        let expected = data::qam_expected_frequencies();
        for part in [1usize, 2] {
            let words = if part == 1 {
                data::qam_part1_codewords()
            } else {
                data::qam_part2_codewords()
            };
            let freq = codeword_frequencies(&words);
            for row in expected.iter().filter(|r| r.part == part) {
                assert_eq!(
                    freq.get(&row.codeword).copied().unwrap_or(0),
                    row.count,
                    "part {part} codeword {:07b}",
                    row.codeword
                );
            }
        }
    }

    #[test]
    fn empty_inputs() {
        assert!(codeword_frequencies(&[]).is_empty());
        assert_eq!(
            apply_substitution(&[], &SubstitutionKey::default()).unwrap(),
            ""
        );
    }

    #[test]
    fn unmapped_codeword_is_an_error() {
        let key = SubstitutionKey::new([(0b0110011, 'e')]);
        assert_eq!(
            apply_substitution(&[0b0110011, 0], &key),
            Err(ClassicalError::UnmappedCodeword(0))
        );
    }

    #[test]
    fn hex_alphabet_rendering_is_220_symbols() {
        // rendering part 1 through the frequency-ordered hex alphabet gives
        // the 220-symbol ciphertext used during manual analysis
        let words = data::qam_part1_codewords();
        let key = SubstitutionKey::hex_by_frequency(&words);
        let text = apply_substitution(&words, &key).unwrap();
        assert_eq!(text.len(), 220);
        assert!(text.starts_with("0234")); // t h s r -> ranks 0,2,3,4
    }

    #[test]
    fn decode_with_bundled_keys_reproduces_plaintext() {
        let text = data::qam_decode_merged().unwrap();
        assert!(text.starts_with("these are the mores of the lunar inhabitants"));
        assert_eq!(text, data::qam_expected_plaintext());
    }
}
