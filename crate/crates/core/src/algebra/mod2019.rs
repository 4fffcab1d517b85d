//! The ring of integers modulo 2019 and Dickson polynomial evaluation.

use super::AlgebraError;

/// The modulus shared by the calculator puzzles.
pub const MODULUS: u32 = 2019;

/// A residue modulo 2019 held in canonical range 0..=2018.
///
/// Negative intermediate results reduce immediately, so -1000 is stored
/// as 1019.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mod2019(u16);

impl Mod2019 {
    /// Residue of an arbitrary signed integer.
    pub fn new(v: i64) -> Self {
        Mod2019(v.rem_euclid(MODULUS as i64) as u16)
    }

    /// Canonical representative in 0..=2018.
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    /// Ring addition.
    pub fn add(self, rhs: Self) -> Self {
        Mod2019(((self.0 as u32 + rhs.0 as u32) % MODULUS) as u16)
    }

    /// Ring subtraction.
    pub fn sub(self, rhs: Self) -> Self {
        Mod2019(((self.0 as u32 + MODULUS - rhs.0 as u32) % MODULUS) as u16)
    }

    /// Ring multiplication.
    pub fn mul(self, rhs: Self) -> Self {
        Mod2019(((self.0 as u32 * rhs.0 as u32) % MODULUS) as u16)
    }
}

impl std::fmt::Display for Mod2019 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Evaluate the Dickson polynomial D_degree(y, a) modulo 2019 by the
/// recurrence D_0 = 2, D_1 = y, D_k = y*D_{k-1} - a*D_{k-2}.
pub fn dickson_eval(degree: u64, y: Mod2019, a: Mod2019) -> Result<Mod2019, AlgebraError> {
    if degree > 64 {
        return Err(AlgebraError::DicksonDegreeTooLarge(degree));
    }
    let mut prev = Mod2019::new(2);
    let mut cur = y;
    if degree == 0 {
        return Ok(prev);
    }
    for _ in 1..degree {
        let next = y.mul(cur).sub(a.mul(prev));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct Horner evaluation of f(y) = y^5 + 1909*y^3 + 401*y, the
    /// independent oracle for the Dickson identity checks.
    fn f_direct(y: u32) -> u32 {
        let coeffs = [1u64, 0, 1909, 0, 401, 0]; // descending degree
        let mut acc = 0u64;
        for &c in &coeffs {
            acc = (acc * y as u64 + c) % MODULUS as u64;
        }
        acc as u32
    }

    #[test]
    fn canonical_range() {
        assert_eq!(Mod2019::new(-1000).value(), 1019);
        assert_eq!(Mod2019::new(2500).value(), 481);
        assert_eq!(Mod2019::new(2222).value(), 203);
    }

    #[test]
    fn degree_one_is_identity() {
        for y in [0u32, 1, 7, 2018] {
            let r = dickson_eval(1, Mod2019::new(y as i64), Mod2019::new(22)).unwrap();
            assert_eq!(r.value(), y);
        }
    }

    #[test]
    fn d5_at_7_is_55() {
        // frozen from the direct polynomial oracle: f(7) mod 2019 = 55
        let r = dickson_eval(5, Mod2019::new(7), Mod2019::new(22)).unwrap();
        assert_eq!(r.value(), 55);
        assert_eq!(f_direct(7), 55);
    }

    #[test]
    fn d5_with_a22_equals_f_everywhere() {
        for y in 0..2019u32 {
            let d = dickson_eval(5, Mod2019::new(y as i64), Mod2019::new(22)).unwrap();
            assert_eq!(d.value(), f_direct(y), "y = {y}");
        }
    }

    #[test]
    fn functional_equation_m2_n2() {
        // D_4(y, a) = D_2(D_2(y, a), a^2) for a = 22, checked exhaustively
        let a = Mod2019::new(22);
        let a2 = a.mul(a);
        for y in 0..2019u32 {
            let y = Mod2019::new(y as i64);
            let lhs = dickson_eval(4, y, a).unwrap();
            let inner = dickson_eval(2, y, a).unwrap();
            let rhs = dickson_eval(2, inner, a2).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn degree_bound_enforced() {
        assert_eq!(
            dickson_eval(65, Mod2019::new(1), Mod2019::new(1)),
            Err(AlgebraError::DicksonDegreeTooLarge(65))
        );
    }
}
