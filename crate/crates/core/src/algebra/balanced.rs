//! Balanced-ternary encoding with digits {-1, 0, 1}, least significant
//! trit first.

/// A little-endian balanced-ternary digit vector.
///
/// The encoding of a nonnegative integer carries no trailing zero trit;
/// callers pad to a fixed word width themselves.
pub type BalancedTritVector = Vec<i8>;

/// Encode a nonnegative integer in balanced ternary, less significant trits
/// first. Zero encodes to the empty vector.
pub fn balanced_encode(value: u64) -> BalancedTritVector {
    let mut out = Vec::new();
    let mut v = value;
    while v != 0 {
        match v % 3 {
            0 => {
                out.push(0);
                v /= 3;
            }
            1 => {
                out.push(1);
                v = (v - 1) / 3;
            }
            _ => {
                out.push(-1);
                v = (v + 1) / 3;
            }
        }
    }
    out
}

/// Decode a little-endian balanced-ternary digit vector.
pub fn balanced_decode(trits: &[i8]) -> i64 {
    let mut acc = 0i64;
    for &t in trits.iter().rev() {
        acc = acc * 3 + t as i64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_expansions() {
        // 25 = 1 - 3^1 + 3^3
        assert_eq!(balanced_encode(25), vec![1, -1, 0, 1]);
        assert_eq!(balanced_encode(0), Vec::<i8>::new());
        assert_eq!(balanced_encode(1), vec![1]);
        // length of the 9-fragment collision messages: (3^9 - 1)/2 = nine 1s
        assert_eq!(balanced_encode(9841), vec![1; 9]);
    }

    #[test]
    fn no_trailing_zero() {
        for v in 0..3000u64 {
            let e = balanced_encode(v);
            assert_ne!(e.last(), Some(&0), "v = {v}");
            assert_eq!(balanced_decode(&e), v as i64);
        }
    }

    proptest! {
        #[test]
        fn round_trip_below_3_pow_20(v in 0u64..3u64.pow(20)) {
            prop_assert_eq!(balanced_decode(&balanced_encode(v)), v as i64);
        }
    }
}
