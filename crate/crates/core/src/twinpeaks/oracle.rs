//! Encryption / incomplete-decryption oracles with query accounting.
//!
//! The original testing server is gone, so oracles are self-instantiated:
//! the secret functions are SipHash-2-4 keyed from a 128-bit seed and
//! truncated to 32 bits. Attack code only ever sees the query interface.

use super::cipher::{forward_round, Block128, ROUNDS};
use siphasher::sip::SipHasher24;
use std::hash::Hasher;
use std::sync::atomic::{AtomicU64, Ordering};

/// A deterministic keyed function from three 32-bit words to one.
pub trait RoundFunction: Send + Sync {
    /// Evaluate the function.
    fn eval(&self, x: u32, y: u32, z: u32) -> u32;
}

impl<T: Fn(u32, u32, u32) -> u32 + Send + Sync> RoundFunction for T {
    fn eval(&self, x: u32, y: u32, z: u32) -> u32 {
        self(x, y, z)
    }
}

struct KeyedPrf {
    k0: u64,
    k1: u64,
    domain: u8,
}

impl RoundFunction for KeyedPrf {
    fn eval(&self, x: u32, y: u32, z: u32) -> u32 {
        let mut h = SipHasher24::new_with_keys(self.k0, self.k1);
        h.write_u8(self.domain);
        h.write_u32(x);
        h.write_u32(y);
        h.write_u32(z);
        h.finish() as u32
    }
}

/// An oracle holding the secret round-function pair and query counters.
pub struct Oracle {
    f1: Box<dyn RoundFunction>,
    f2: Box<dyn RoundFunction>,
    encrypt_calls: AtomicU64,
    incomplete_decrypt_calls: AtomicU64,
}

impl Oracle {
    /// Oracle over explicit functions (used by tests that know the secrets).
    pub fn with_functions(
        f1: impl RoundFunction + 'static,
        f2: impl RoundFunction + 'static,
    ) -> Self {
        Oracle {
            f1: Box::new(f1),
            f2: Box::new(f2),
            encrypt_calls: AtomicU64::new(0),
            incomplete_decrypt_calls: AtomicU64::new(0),
        }
    }

    /// Oracle whose secrets derive from a 128-bit key.
    pub fn from_key(key: [u8; 16]) -> Self {
        let k0 = u64::from_le_bytes(key[..8].try_into().unwrap());
        let k1 = u64::from_le_bytes(key[8..].try_into().unwrap());
        Self::with_functions(KeyedPrf { k0, k1, domain: 1 }, KeyedPrf { k0, k1, domain: 2 })
    }

    /// Convenience seeding from a 64-bit seed, expanded to 128 bits.
    pub fn from_seed(seed: u64) -> Self {
        let mut key = [0u8; 16];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..].copy_from_slice(&(seed ^ 0x9e37_79b9_7f4a_7c15).to_le_bytes());
        Self::from_key(key)
    }

    fn run(&self, x: Block128, odd_first: bool) -> Block128 {
        let mut state = x;
        for r in 1..=ROUNDS {
            let odd = r % 2 == 1;
            let f = if odd == odd_first { &self.f1 } else { &self.f2 };
            state = forward_round(state, f.eval(state.b, state.c, state.d));
        }
        state
    }

    /// Encrypt one block: 32 rounds, F_1 on odd rounds.
    pub fn encrypt(&self, x: Block128) -> Block128 {
        self.encrypt_calls.fetch_add(1, Ordering::Relaxed);
        self.run(x, true)
    }

    /// Incomplete decryption: the same rounds with keys in reverse order,
    /// i.e. F_2 on odd rounds. Equals (f_2 f_1)^16, not the inverse of E.
    pub fn incomplete_decrypt(&self, x: Block128) -> Block128 {
        self.incomplete_decrypt_calls.fetch_add(1, Ordering::Relaxed);
        self.run(x, false)
    }

    /// ECB processing: blocks handled one by one and concatenated.
    pub fn encrypt_blocks(&self, xs: &[Block128]) -> Vec<Block128> {
        xs.iter().map(|&x| self.encrypt(x)).collect()
    }

    /// ECB form of [`Oracle::incomplete_decrypt`].
    pub fn incomplete_decrypt_blocks(&self, xs: &[Block128]) -> Vec<Block128> {
        xs.iter().map(|&x| self.incomplete_decrypt(x)).collect()
    }

    /// Blocks processed by the encryption routine so far.
    pub fn encrypt_queries(&self) -> u64 {
        self.encrypt_calls.load(Ordering::Relaxed)
    }

    /// Blocks processed by the incomplete decryption routine so far.
    pub fn incomplete_decrypt_queries(&self) -> u64 {
        self.incomplete_decrypt_calls.load(Ordering::Relaxed)
    }

    /// Total oracle traffic in blocks.
    pub fn total_queries(&self) -> u64 {
        self.encrypt_queries() + self.incomplete_decrypt_queries()
    }
}
