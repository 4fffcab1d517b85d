//! Slide attack: recover round-function values through the oracle pair and
//! peel the cipher round by round.

use super::cipher::{invert_round, Block128, ROUNDS};
use super::oracle::Oracle;
use super::TwinPeaksError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::collections::HashMap;

/// Default cap on oracle queries for a single value recovery.
pub const DEFAULT_QUERY_BUDGET: u64 = 1 << 20;

/// Accounting for a finished attack.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttackStats {
    /// Recovered plaintext.
    pub plaintext: Block128,
    /// Total oracle traffic in blocks.
    pub oracle_blocks: u64,
}

/// Recover F_which(a, b, c) by the birthday search over x = (X, a, b, c)
/// and y = (a, b, c, X').
///
/// The round schedules satisfy I(f_1(x)) = f_1(E(x)) and
/// E(f_2(x)) = f_2(I(x)). For which = 1 the pair (x, y) is therefore tested
/// through I(y) = f_1(E(x)): encryptions of x are keyed by their last three
/// words, incomplete decryptions of y by their first three, and a key match
/// means y = f_1(x), i.e. F_1(a,b,c) = X XOR X'. For which = 2 the roles of
/// the two routines swap. A single 96-bit match is accepted; the
/// false-positive rate for random round functions is about 2^-96.
pub fn recover_f_value(
    oracle: &Oracle,
    which: u8,
    a: u32,
    b: u32,
    c: u32,
    rng: &mut ChaCha20Rng,
    query_budget: u64,
) -> Result<u32, TwinPeaksError> {
    debug_assert!(which == 1 || which == 2);
    // keyed by 96-bit word triples; values hold the free word X or X'
    let mut left: HashMap<(u32, u32, u32), u32> = HashMap::new();
    let mut right: HashMap<(u32, u32, u32), u32> = HashMap::new();
    let mut queries = 0u64;

    loop {
        if queries >= query_budget {
            return Err(TwinPeaksError::QueryBudgetExhausted(query_budget));
        }
        queries += 2;

        // fresh x = (X, a, b, c): key = last three words of E(x) (I(x) for which = 2)
        let x_free: u32 = rng.gen();
        let x = Block128::new(x_free, a, b, c);
        let lx = if which == 1 {
            oracle.encrypt(x)
        } else {
            oracle.incomplete_decrypt(x)
        };
        let lkey = (lx.b, lx.c, lx.d);
        left.entry(lkey).or_insert(x_free);
        if let Some(&y_free) = right.get(&lkey) {
            return Ok(x_free ^ y_free);
        }

        // fresh y = (a, b, c, X'): key = first three words of I(y) (E(y) for which = 2)
        let y_free: u32 = rng.gen();
        let y = Block128::new(a, b, c, y_free);
        let ry = if which == 1 {
            oracle.incomplete_decrypt(y)
        } else {
            oracle.encrypt(y)
        };
        let rkey = (ry.a, ry.b, ry.c);
        right.entry(rkey).or_insert(y_free);
        if let Some(&x_free) = left.get(&rkey) {
            return Ok(x_free ^ y_free);
        }
    }
}

/// Decrypt `y` by peeling all 32 rounds, recovering each needed F value
/// through the oracle. Round 32 is even, so an F_2 value is recovered first.
pub fn slide_attack_decrypt(
    oracle: &Oracle,
    y: Block128,
    seed: u64,
    query_budget: u64,
) -> Result<AttackStats, TwinPeaksError> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let start = oracle.total_queries();
    let mut state = y;
    for round in (1..=ROUNDS).rev() {
        let which = if round % 2 == 1 { 1 } else { 2 };
        let fval = recover_f_value(
            oracle,
            which,
            state.a,
            state.b,
            state.c,
            &mut rng,
            query_budget,
        )?;
        state = invert_round(state, fval);
    }
    Ok(AttackStats {
        plaintext: state,
        oracle_blocks: oracle.total_queries() - start,
    })
}
