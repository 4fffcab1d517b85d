//! The sponge permutation and the hashing algorithm.

use super::sbox::{sbox_index, DIAG, SBOX};
use super::trits::TritString;
use crate::algebra::balanced_encode;

/// State width in trits.
pub const STATE_TRITS: usize = 729;
/// Digest (and block) width in trits.
pub const DIGEST_TRITS: usize = 243;
/// Rounds of the sponge permutation.
const ROUNDS: usize = 27;

/// The 729-trit sponge state, viewed as W0 || W1 || W2 of 243 trits each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurlState {
    w: [i8; STATE_TRITS],
}

impl Default for CurlState {
    fn default() -> Self {
        CurlState {
            w: [0; STATE_TRITS],
        }
    }
}

impl CurlState {
    /// All-zero state.
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from a full 729-trit word.
    pub fn from_trits(w: [i8; STATE_TRITS]) -> Self {
        debug_assert!(w.iter().all(|t| (-1..=1).contains(t)));
        CurlState { w }
    }

    /// The full state word.
    pub fn trits(&self) -> &[i8; STATE_TRITS] {
        &self.w
    }

    /// The part W_i (i in 0..3) of 243 trits.
    pub fn part(&self, i: usize) -> &[i8] {
        &self.w[i * DIGEST_TRITS..(i + 1) * DIGEST_TRITS]
    }

    /// Replace W0 with a 243-trit block.
    pub fn set_w0(&mut self, block: &[i8]) {
        self.w[..DIGEST_TRITS].copy_from_slice(block);
    }

    /// W0 as a trit string (the digest after the final permutation).
    pub fn w0(&self) -> TritString {
        TritString::from_i8s_unchecked(self.w[..DIGEST_TRITS].to_vec())
    }
}

/// One round on a state of 3^e trits: grouping steps with word lengths
/// 3^(e-1) down to 1, then (6 - e) diagonal steps.
///
/// For e = 6 this is exactly the round of the full permutation: at step i
/// the state splits into 3^i words of length n = 3^(6-i), consecutive word
/// triples are grouped positionwise — group (w, j) covers positions
/// (3wn + j, 3wn + n + j, 3wn + 2n + j) — and each group goes through the
/// S-box. For e < 6 the same schedule acts on the quotient of an
/// m-fragmented state (m = 3^(6-e)): steps with word length below the
/// fragment size collapse to the diagonal map on every trit.
fn round_sized(state: &mut [i8], e: u32) {
    let size = state.len();
    debug_assert_eq!(size, 3usize.pow(e));
    let mut n = size / 3;
    loop {
        let mut base = 0;
        while base < size {
            for j in base..base + n {
                let i1 = j + n;
                let i2 = i1 + n;
                let out = SBOX[sbox_index(state[j], state[i1], state[i2])];
                state[j] = out[0];
                state[i1] = out[1];
                state[i2] = out[2];
            }
            base += 3 * n;
        }
        if n == 1 {
            break;
        }
        n /= 3;
    }
    for _ in e..6 {
        for t in state.iter_mut() {
            *t = DIAG[(*t + 1) as usize];
        }
    }
}

/// The 27-round permutation on a 3^e-trit state.
pub(crate) fn curlf_sized(state: &mut [i8], e: u32) {
    for _ in 0..ROUNDS {
        round_sized(state, e);
    }
}

/// The sponge permutation Curl27-f on the full 729-trit state.
pub fn curlf(state: &CurlState) -> CurlState {
    let mut out = state.clone();
    curlf_sized(&mut out.w, 6);
    out
}

/// Hash a ternary string to a 243-trit digest.
///
/// The input is zero-padded to a multiple of 243 trits (possibly none).
/// W1 holds the pre-padding length in little-endian balanced ternary; W0 and
/// W2 start at zero. Every block is absorbed into W0 followed by the
/// permutation; the final W0 is the digest. The empty string yields the
/// all-zero digest since no block is ever absorbed.
pub fn curl_hash(x: &TritString) -> TritString {
    let mut state = CurlState::new();
    let len = x.len();
    for (i, t) in balanced_encode(len as u64).iter().enumerate() {
        state.w[DIGEST_TRITS + i] = *t;
    }
    let trits = x.as_i8s();
    let blocks = len.div_ceil(DIGEST_TRITS);
    for b in 0..blocks {
        let start = b * DIGEST_TRITS;
        let end = (start + DIGEST_TRITS).min(len);
        state.w[..end - start].copy_from_slice(&trits[start..end]);
        state.w[end - start..DIGEST_TRITS].fill(0);
        curlf_sized(&mut state.w, 6);
    }
    state.w0()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curl27::{is_expanded3, is_fragmented};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn random_trit(rng: &mut ChaCha20Rng) -> i8 {
        rng.gen_range(-1..=1)
    }

    /// Random state whose aligned m-runs are constant.
    fn random_fragmented(rng: &mut ChaCha20Rng, m: usize) -> CurlState {
        let mut w = [0i8; STATE_TRITS];
        for chunk in w.chunks_exact_mut(m) {
            chunk.fill(random_trit(rng));
        }
        CurlState::from_trits(w)
    }

    fn state_is_fragmented(s: &CurlState, m: usize) -> bool {
        s.trits()
            .chunks_exact(m)
            .all(|run| run.iter().all(|&t| t == run[0]))
    }

    #[test]
    fn empty_input_hashes_to_zero_word() {
        let digest = curl_hash(&TritString::new());
        assert_eq!(digest, TritString::zeros(DIGEST_TRITS));
    }

    #[test]
    fn single_zero_block_matches_manual_absorption() {
        // hashing 243 zeros = one permutation of the length-initialized state
        let x = TritString::zeros(DIGEST_TRITS);
        let digest = curl_hash(&x);

        let mut w = [0i8; STATE_TRITS];
        for (i, t) in balanced_encode(243).iter().enumerate() {
            w[DIGEST_TRITS + i] = *t;
        }
        let manual = curlf(&CurlState::from_trits(w));
        assert_eq!(digest, manual.w0());
    }

    #[test]
    fn digest_depends_on_unpadded_length() {
        let d242 = curl_hash(&TritString::zeros(242));
        let d243 = curl_hash(&TritString::zeros(243));
        assert_ne!(d242, d243);
    }

    #[test]
    fn permutation_preserves_fragmentation() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        for m in [3usize, 9, 27, 81, 243] {
            for _ in 0..50 {
                let s = random_fragmented(&mut rng, m);
                assert!(state_is_fragmented(&curlf(&s), m), "m = {m}");
            }
        }
    }

    #[test]
    fn permutation_preserves_3_expansion() {
        let mut rng = ChaCha20Rng::seed_from_u64(8);
        for _ in 0..50 {
            let mut w = [0i8; STATE_TRITS];
            for part in 0..3 {
                let pat = [
                    random_trit(&mut rng),
                    random_trit(&mut rng),
                    random_trit(&mut rng),
                ];
                for j in 0..DIGEST_TRITS {
                    w[part * DIGEST_TRITS + j] = pat[j % 3];
                }
            }
            let out = curlf(&CurlState::from_trits(w));
            for part in 0..3 {
                let word = TritString::from_i8s_unchecked(out.part(part).to_vec());
                assert!(is_expanded3(&word).unwrap());
            }
        }
    }

    #[test]
    fn reduced_permutation_matches_full_on_quotients() {
        // 9-fragmented states: simulating on the 81-trit quotient agrees
        // with running the full permutation and re-reading fragment values
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for _ in 0..25 {
            let s = random_fragmented(&mut rng, 9);
            let mut quotient: Vec<i8> = s.trits().chunks_exact(9).map(|c| c[0]).collect();
            curlf_sized(&mut quotient, 4);
            let full = curlf(&s);
            let full_quotient: Vec<i8> = full.trits().chunks_exact(9).map(|c| c[0]).collect();
            assert_eq!(quotient, full_quotient);
        }
        // same for 27-fragmented states on the 27-trit quotient
        for _ in 0..25 {
            let s = random_fragmented(&mut rng, 27);
            let mut quotient: Vec<i8> = s.trits().chunks_exact(27).map(|c| c[0]).collect();
            curlf_sized(&mut quotient, 3);
            let full = curlf(&s);
            let full_quotient: Vec<i8> = full.trits().chunks_exact(27).map(|c| c[0]).collect();
            assert_eq!(quotient, full_quotient);
        }
    }

    #[test]
    fn hash_of_fragmented_message_is_fragmented() {
        // 13 = (3^3 - 1)/2 trits, 3-fragment-constant with zero tail
        let mut trits = vec![0i8; 13];
        for (f, v) in [(0, 1), (1, -1), (2, 1), (3, 0)] {
            for j in 0..3 {
                trits[f * 3 + j] = v;
            }
        }
        trits[12] = 0;
        let x = TritString::from_i8s(trits).unwrap();
        let digest = curl_hash(&x);
        assert!(is_fragmented(&digest, 3).unwrap());
    }
}
