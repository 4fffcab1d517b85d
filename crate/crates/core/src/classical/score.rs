//! Plaintext scoring: chi-squared distance to English letter frequencies
//! and greedy dictionary coverage for the six-letter rotor alphabet.

/// Relative letter frequencies a..z (percent), Lewand's ordering
/// e t a o i n s h r d l c u m w f g y p b v k j x q z.
const ENGLISH_FREQ: [f64; 26] = [
    8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966, 0.153, 0.772, 4.025, 2.406,
    6.749, 7.507, 1.929, 0.095, 5.987, 6.327, 9.056, 2.758, 0.978, 2.360, 0.150, 1.974, 0.074,
];

/// Chi-squared distance between the letter histogram of `text` and the
/// English reference. Case-insensitive; non-letters are ignored. Lower is
/// better; the empty text scores 0 by convention. Frequencies are relative,
/// so the score is invariant under concatenating the text with itself.
pub fn score_english(text: &str) -> f64 {
    let mut counts = [0u64; 26];
    let mut total = 0u64;
    for c in text.chars() {
        if c.is_ascii_alphabetic() {
            counts[(c.to_ascii_lowercase() as u8 - b'a') as usize] += 1;
            total += 1;
        }
    }
    if total == 0 {
        return 0.0;
    }
    let mut chi2 = 0.0;
    for i in 0..26 {
        let observed = counts[i] as f64 / total as f64;
        let expected = ENGLISH_FREQ[i] / 100.0;
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    chi2
}

/// Fraction of `text` covered by greedy longest-first dictionary matches.
/// Words are matched in order of decreasing length (ties alphabetical);
/// unmatched positions are skipped one character at a time.
pub fn dictionary_coverage(text: &str, words: &[&str]) -> f64 {
    if text.is_empty() {
        return 0.0;
    }
    let mut dict: Vec<&str> = words.to_vec();
    dict.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let bytes = text.as_bytes();
    let mut covered = 0usize;
    let mut i = 0usize;
    while i < bytes.len() {
        match dict
            .iter()
            .find(|w| bytes[i..].starts_with(w.as_bytes()))
        {
            Some(w) => {
                covered += w.len();
                i += w.len();
            }
            None => i += 1,
        }
    }
    covered as f64 / bytes.len() as f64
}
