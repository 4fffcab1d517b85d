//! Bundled challenge vectors: ciphertexts, collision strings, factoring
//! targets, solved keys, and reference tables, embedded so every attack can
//! be checked against a known answer.

use crate::classical::{
    self, bits_to_codewords, hex_to_bits, Codeword, PositionTables, SubstitutionKey,
};
use crate::curl27::TritString;
use crate::slpvm::SlpProgram;
use num_bigint::BigInt;

mod raw {
    pub const CURL_COLLISION: &str = include_str!("../data/curl27_collision.txt");
    pub const TWINPEAKS_CONTEST: &str = include_str!("../data/twinpeaks_contest.txt");
    pub const ROTOR_TABLES: &str = include_str!("../data/rotor_tables.csv");
    pub const ROTOR_CIPHERTEXT: &str = include_str!("../data/rotor_ciphertext.txt");
    pub const ROTOR_WORDS: &str = include_str!("../data/rotor_words.txt");
    pub const QAM_PART1: &str = include_str!("../data/qam_part1.txt");
    pub const QAM_PART2: &str = include_str!("../data/qam_part2.txt");
    pub const QAM_KEY_PART1: &str = include_str!("../data/qam_key_part1.txt");
    pub const QAM_KEY_PART2: &str = include_str!("../data/qam_key_part2.txt");
    pub const QAM_MERGE: &str = include_str!("../data/qam_merge.txt");
    pub const QAM_PLAINTEXT: &str = include_str!("../data/qam_plaintext.txt");
    pub const QAM_FREQ: &str = include_str!("../data/qam_freq_expected.csv");
    pub const SLP_TABLE6: &str = include_str!("../data/slp_table6.txt");
    pub const SLP_TABLE7: &str = include_str!("../data/slp_table7.txt");
    pub const SLP_TABLE8: &str = include_str!("../data/slp_table8.txt");
    pub const FACTORING: &str = include_str!("../data/factoring2019.txt");
    pub const FACTORING_EXPECTED: &str = include_str!("../data/factoring2019_expected.txt");
    pub const AES_SBOX: &str = include_str!("../data/aes_sbox.txt");
}

/// Names and raw bytes of every bundled asset, for checksumming and export.
pub fn assets() -> Vec<(&'static str, &'static str)> {
    vec![
        ("curl27_collision.txt", raw::CURL_COLLISION),
        ("twinpeaks_contest.txt", raw::TWINPEAKS_CONTEST),
        ("rotor_tables.csv", raw::ROTOR_TABLES),
        ("rotor_ciphertext.txt", raw::ROTOR_CIPHERTEXT),
        ("rotor_words.txt", raw::ROTOR_WORDS),
        ("qam_part1.txt", raw::QAM_PART1),
        ("qam_part2.txt", raw::QAM_PART2),
        ("qam_key_part1.txt", raw::QAM_KEY_PART1),
        ("qam_key_part2.txt", raw::QAM_KEY_PART2),
        ("qam_merge.txt", raw::QAM_MERGE),
        ("qam_plaintext.txt", raw::QAM_PLAINTEXT),
        ("qam_freq_expected.csv", raw::QAM_FREQ),
        ("slp_table6.txt", raw::SLP_TABLE6),
        ("slp_table7.txt", raw::SLP_TABLE7),
        ("slp_table8.txt", raw::SLP_TABLE8),
        ("factoring2019.txt", raw::FACTORING),
        ("factoring2019_expected.txt", raw::FACTORING_EXPECTED),
        ("aes_sbox.txt", raw::AES_SBOX),
    ]
}

/// Raw text of one asset by file name.
pub fn asset(name: &str) -> Option<&'static str> {
    assets().into_iter().find(|(n, _)| *n == name).map(|(_, t)| t)
}

fn data_lines(text: &'static str) -> impl Iterator<Item = &'static str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// The known colliding message pair for Curl27, 9841 trits each.
pub fn curl_collision_pair() -> (TritString, TritString) {
    let mut lines = data_lines(raw::CURL_COLLISION);
    let x = lines.next().expect("two lines").parse().expect("trits");
    let x2 = lines.next().expect("two lines").parse().expect("trits");
    (x, x2)
}

/// The TwinPeaks3 contest ciphertext and the recovered plaintext, both hex.
/// Documentation vector only: the server's secret functions are gone, so the
/// pair cannot be reproduced end to end.
pub fn twinpeaks_contest() -> (String, String) {
    let mut lines = data_lines(raw::TWINPEAKS_CONTEST);
    let ct = lines.next().expect("two lines").to_string();
    let pt = lines.next().expect("two lines").to_string();
    (ct, pt)
}

/// The six rotor position tables.
pub fn rotor_tables() -> PositionTables {
    PositionTables::parse_csv(raw::ROTOR_TABLES).expect("bundled table data is valid")
}

/// The intercepted rotor ciphertext.
pub fn rotor_ciphertext() -> String {
    data_lines(raw::ROTOR_CIPHERTEXT)
        .next()
        .expect("one line")
        .to_string()
}

/// Dictionary of candidate words over the rotor alphabet.
pub fn rotor_words() -> Vec<&'static str> {
    raw::ROTOR_WORDS.split_whitespace().collect()
}

/// Part 1 ciphertext hex (consonants).
pub fn qam_part1_hex() -> String {
    data_lines(raw::QAM_PART1).collect()
}

/// Part 2 ciphertext hex (vowels, space, hyphen, punctuation) with the
/// annotated trailing bit stripped from the hex body.
fn qam_part2_hex_and_tail() -> (String, Vec<bool>) {
    let body: String = data_lines(raw::QAM_PART2).collect();
    match body.strip_suffix("(0)_2") {
        Some(hex) => (hex.to_string(), vec![false]),
        None => (body, Vec::new()),
    }
}

/// Corrected codeword stream of part 1.
pub fn qam_part1_codewords() -> Vec<Codeword> {
    let bits = hex_to_bits(&qam_part1_hex(), 0).expect("bundled hex is valid");
    bits_to_codewords(&bits).expect("bundled stream is codeword-aligned")
}

/// Corrected codeword stream of part 2, including the annotated zero bit.
pub fn qam_part2_codewords() -> Vec<Codeword> {
    let (hex, tail) = qam_part2_hex_and_tail();
    let mut bits = hex_to_bits(&hex, 0).expect("bundled hex is valid");
    bits.extend(tail);
    bits_to_codewords(&bits).expect("bundled stream is codeword-aligned")
}

/// Solved substitution key for a part (1 or 2).
pub fn qam_key(part: usize) -> SubstitutionKey {
    let text = match part {
        1 => raw::QAM_KEY_PART1,
        2 => raw::QAM_KEY_PART2,
        other => panic!("no key for part {other}"),
    };
    SubstitutionKey::parse(text).expect("bundled key data is valid")
}

/// Interleave pattern: one '1'/'2' per plaintext character.
pub fn qam_merge_pattern() -> &'static str {
    raw::QAM_MERGE.trim()
}

/// The recovered plaintext (punctuation as placeholder glyphs #, %, &).
pub fn qam_expected_plaintext() -> String {
    raw::QAM_PLAINTEXT.trim_end_matches('\n').to_string()
}

/// Decode both parts with the bundled keys and interleave them.
pub fn qam_decode_merged() -> Result<String, classical::ClassicalError> {
    let p1 = classical::apply_substitution(&qam_part1_codewords(), &qam_key(1))?;
    let p2 = classical::apply_substitution(&qam_part2_codewords(), &qam_key(2))?;
    classical::merge_streams(&p1, &p2, qam_merge_pattern())
}

/// One row of the expected codeword frequency table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreqRow {
    /// Part 1 or 2.
    pub part: usize,
    /// The 4 data bits.
    pub data: u8,
    /// The 7-bit codeword.
    pub codeword: Codeword,
    /// Expected occurrence count.
    pub count: usize,
}

/// All 32 expected frequency rows (16 per part).
pub fn qam_expected_frequencies() -> Vec<FreqRow> {
    data_lines(raw::QAM_FREQ)
        .skip(1) // header
        .map(|line| {
            let mut f = line.split(',');
            let part = f.next().unwrap().parse().unwrap();
            let data = u8::from_str_radix(f.next().unwrap(), 2).unwrap();
            let codeword = u8::from_str_radix(f.next().unwrap(), 2).unwrap();
            let count = f.next().unwrap().parse().unwrap();
            FreqRow {
                part,
                data,
                codeword,
                count,
            }
        })
        .collect()
}

/// The bundled straight-line programs (9, 14 and 11 commands).
pub fn slp_program(table: usize) -> SlpProgram {
    let text = match table {
        6 => raw::SLP_TABLE6,
        7 => raw::SLP_TABLE7,
        8 => raw::SLP_TABLE8,
        other => panic!("no bundled program {other}"),
    };
    SlpProgram::parse(text).expect("bundled program parses")
}

/// The 1000-bit factoring instance: (n, h).
pub fn factoring_instance() -> (BigInt, BigInt) {
    let mut lines = data_lines(raw::FACTORING);
    let n = lines.next().expect("two lines");
    let h = lines.next().expect("two lines");
    (
        BigInt::parse_bytes(n.as_bytes(), 10).expect("decimal n"),
        BigInt::parse_bytes(h.as_bytes(), 10).expect("decimal h"),
    )
}

/// The published factors (p, q) of the bundled instance.
pub fn factoring_expected() -> (BigInt, BigInt) {
    let mut lines = data_lines(raw::FACTORING_EXPECTED);
    let p = lines.next().expect("two lines");
    let q = lines.next().expect("two lines");
    (
        BigInt::parse_bytes(p.as_bytes(), 10).expect("decimal p"),
        BigInt::parse_bytes(q.as_bytes(), 10).expect("decimal q"),
    )
}

/// The AES S-box lookup table (standard published values).
pub fn aes_sbox() -> Vec<u16> {
    raw::AES_SBOX
        .split_whitespace()
        .map(|t| t.parse().expect("decimal byte"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collision_pair_shape() {
        let (x, x2) = curl_collision_pair();
        assert_eq!(x.len(), 9841);
        assert_eq!(x2.len(), 9841);
        assert_ne!(x, x2);
    }

    #[test]
    fn contest_vector_decodes_to_ascii() {
        let (ct, pt) = twinpeaks_contest();
        assert_eq!(ct.len(), 32);
        let bytes: Vec<u8> = (0..16)
            .map(|i| u8::from_str_radix(&pt[i * 2..i * 2 + 2], 16).unwrap())
            .collect();
        assert_eq!(std::str::from_utf8(&bytes).unwrap(), "acherrypieplease");
    }

    #[test]
    fn freq_table_has_32_rows() {
        let rows = qam_expected_frequencies();
        assert_eq!(rows.len(), 32);
        assert_eq!(rows.iter().filter(|r| r.part == 1).count(), 16);
        // counts sum to the stream lengths
        let s1: usize = rows.iter().filter(|r| r.part == 1).map(|r| r.count).sum();
        let s2: usize = rows.iter().filter(|r| r.part == 2).map(|r| r.count).sum();
        assert_eq!((s1, s2), (220, 239));
    }

    #[test]
    fn aes_sbox_well_formed() {
        let sbox = aes_sbox();
        assert_eq!(sbox.len(), 256);
        assert_eq!(&sbox[..4], &[0x63, 0x7c, 0x77, 0x7b]);
        let mut seen = [false; 256];
        for &v in &sbox {
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
    }

    #[test]
    fn asset_lookup() {
        assert!(asset("rotor_ciphertext.txt").is_some());
        assert!(asset("missing.txt").is_none());
        assert_eq!(assets().len(), 18);
    }
}
