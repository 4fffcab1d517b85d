//! The Curl27 S-box over trit triples.

use super::trits::Trit;

/// Degree-5 component polynomial over GF(3), evaluated on trit values.
/// Any integer representative works since the result reduces mod 3; the
/// residue 2 maps back to the trit -1.
const fn f_trit(a: i32, b: i32, c: i32) -> i8 {
    let v = a * a * b * b * c + a * a * b * c * c - a * b * b * c * c
        + a * a * b * b
        - a * a * b * c
        + a * a * c * c
        + a * b * b * c
        - a * a * c
        + a * b * b
        - a * c * c
        + b * b * c
        + b * c * c
        - a * a
        - b * b
        + b * c
        - c * c
        - c
        + 1;
    match ((v % 3) + 3) % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

const fn build_sbox() -> [[i8; 3]; 27] {
    let mut table = [[0i8; 3]; 27];
    let mut i = 0;
    while i < 27 {
        let a = (i / 9) as i32 - 1;
        let b = ((i % 9) / 3) as i32 - 1;
        let c = (i % 3) as i32 - 1;
        table[i] = [f_trit(a, b, c), f_trit(b, c, a), f_trit(c, a, b)];
        i += 1;
    }
    table
}

const fn build_diag() -> [i8; 3] {
    [f_trit(-1, -1, -1), f_trit(0, 0, 0), f_trit(1, 1, 1)]
}

/// S-box lookup table indexed by (a+1)*9 + (b+1)*3 + (c+1).
pub(crate) static SBOX: [[i8; 3]; 27] = build_sbox();

/// Diagonal map t -> F(t, t, t), indexed by t + 1.
pub(crate) static DIAG: [i8; 3] = build_diag();

#[inline]
pub(crate) fn sbox_index(a: i8, b: i8, c: i8) -> usize {
    ((a + 1) * 9 + (b + 1) * 3 + (c + 1)) as usize
}

/// Apply the S-box: (a, b, c) -> (F(a,b,c), F(b,c,a), F(c,a,b)).
pub fn sbox_apply(a: Trit, b: Trit, c: Trit) -> (Trit, Trit, Trit) {
    let out = SBOX[sbox_index(a.value(), b.value(), c.value())];
    (
        Trit::new(out[0]).expect("table holds trits"),
        Trit::new(out[1]).expect("table holds trits"),
        Trit::new(out[2]).expect("table holds trits"),
    )
}
