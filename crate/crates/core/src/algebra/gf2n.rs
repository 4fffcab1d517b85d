//! Binary extension fields GF(2^n) for 3 <= n <= 16, with elements stored as
//! n-bit masks and reduction by a caller-supplied or built-in irreducible
//! polynomial.

use super::AlgebraError;

/// Built-in irreducible polynomials per degree, indexed by `n - 3`.
///
/// Low-weight representatives; every entry is re-checked for irreducibility
/// at field construction. The degree-3 entry is X^3 + X + 1, the degree-8
/// entry is X^8 + X^4 + X^3 + X + 1.
pub const DEFAULT_MODULI: [u32; 14] = [
    0b1011,                // n = 3
    0b1_0011,              // n = 4
    0b10_0101,             // n = 5
    0b100_0011,            // n = 6
    0b1000_0011,           // n = 7
    0b1_0001_1011,         // n = 8
    0b10_0000_0011,        // n = 9
    0b100_0000_1001,       // n = 10
    0b1000_0000_0101,      // n = 11
    0b1_0000_0000_1001,    // n = 12
    0b10_0000_0001_1011,   // n = 13
    0b100_0000_0010_0001,  // n = 14
    0b1000_0000_0000_0011, // n = 15
    0b1_0000_0000_0010_1101, // n = 16
];

/// A binary field GF(2^n) defined by an irreducible modulus polynomial.
///
/// Elements are n-bit masks; bit i is the coefficient of X^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2nField {
    n: u32,
    modulus: u32,
}

impl Gf2nField {
    /// Build the field with the built-in modulus for degree `n`.
    pub fn new(n: u32) -> Result<Self, AlgebraError> {
        if !(3..=16).contains(&n) {
            return Err(AlgebraError::DegreeOutOfRange(n));
        }
        Self::with_modulus(n, DEFAULT_MODULI[(n - 3) as usize])
    }

    /// Build the field with an explicit modulus, checking degree and
    /// irreducibility (exhaustive trial division, cheap for n <= 16).
    pub fn with_modulus(n: u32, modulus: u32) -> Result<Self, AlgebraError> {
        if !(3..=16).contains(&n) {
            return Err(AlgebraError::DegreeOutOfRange(n));
        }
        if poly_degree(modulus) != Some(n) || !is_irreducible(modulus, n) {
            return Err(AlgebraError::ReducibleModulus { modulus, degree: n });
        }
        Ok(Self { n, modulus })
    }

    /// Extension degree n.
    pub fn degree(&self) -> u32 {
        self.n
    }

    /// The modulus polynomial as an (n+1)-bit mask.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^n.
    pub fn order(&self) -> u32 {
        1 << self.n
    }

    fn check(&self, x: u32) -> Result<(), AlgebraError> {
        if x >> self.n != 0 {
            return Err(AlgebraError::ElementOutOfRange {
                element: x,
                degree: self.n,
            });
        }
        Ok(())
    }

    /// Field addition (polynomial XOR).
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    /// Field multiplication: carryless product reduced by the modulus.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let wide = clmul(a, b);
        reduce(wide, self.modulus, self.n)
    }

    /// Raise `beta` to a nonnegative integer power; 0^0 is defined as 1.
    pub fn pow(&self, beta: u32, e: u64) -> Result<u32, AlgebraError> {
        self.check(beta)?;
        let mut acc: u32 = 1;
        let mut base = beta;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // a^(2^n - 2)
        self.pow(a, (1u64 << self.n) - 2).ok()
    }
}

/// Degree of a polynomial mask; `None` for the zero polynomial.
fn poly_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

/// Carryless 32x32 -> 64 multiplication.
fn clmul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let mut a = a as u64;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

/// Reduce a wide carryless product modulo the degree-n polynomial `m`.
fn reduce(mut x: u64, m: u32, n: u32) -> u32 {
    let m = m as u64;
    while x >> n != 0 {
        let d = 63 - x.leading_zeros();
        x ^= m << (d - n);
    }
    x as u32
}

/// Polynomial remainder a mod b over GF(2).
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 {
        let da = 63 - a.leading_zeros();
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Exhaustive irreducibility check: trial division by every polynomial of
/// degree 1 through n/2.
fn is_irreducible(p: u32, n: u32) -> bool {
    let p = p as u64;
    for d in 1..=(n / 2) {
        for low in 0..(1u64 << d) {
            let divisor = (1u64 << d) | low;
            if poly_rem(p, divisor) == 0 {
                return false;
            }
        }
    }
    true
}
