//! Exact integer square root over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::Signed;

/// Return `r` with `r * r == x` when `x` is a perfect square, else `None`.
/// Negative inputs are never squares.
pub fn int_sqrt_exact(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}
