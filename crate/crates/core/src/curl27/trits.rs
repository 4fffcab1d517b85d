//! Trit and trit-string types with the comma-separated text format used for
//! challenge submissions ("-1,1,0,1,1,0").

use super::Curl27Error;
use std::fmt;
use std::str::FromStr;

/// A ternary digit from {-1, 0, 1}. The residue 2 mod 3 is always
/// represented as -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Trit(i8);

impl Trit {
    /// The zero trit.
    pub const ZERO: Trit = Trit(0);
    /// The +1 trit.
    pub const PLUS: Trit = Trit(1);
    /// The -1 trit.
    pub const MINUS: Trit = Trit(-1);

    /// Validate a raw value.
    pub fn new(v: i8) -> Result<Self, Curl27Error> {
        match v {
            -1 | 0 | 1 => Ok(Trit(v)),
            other => Err(Curl27Error::InvalidTrit(other)),
        }
    }

    /// Map a residue mod 3 to a trit; 2 becomes -1.
    pub fn from_residue(r: u8) -> Self {
        match r % 3 {
            0 => Trit(0),
            1 => Trit(1),
            _ => Trit(-1),
        }
    }

    /// Signed value in {-1, 0, 1}.
    pub fn value(self) -> i8 {
        self.0
    }
}

/// A variable-length trit sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TritString(Vec<i8>);

impl TritString {
    /// Empty string.
    pub fn new() -> Self {
        TritString(Vec::new())
    }

    /// The all-zero string of a given length.
    pub fn zeros(len: usize) -> Self {
        TritString(vec![0; len])
    }

    /// Build from raw signed bytes, validating every entry.
    pub fn from_i8s(vals: Vec<i8>) -> Result<Self, Curl27Error> {
        for &v in &vals {
            if !(-1..=1).contains(&v) {
                return Err(Curl27Error::InvalidTrit(v));
            }
        }
        Ok(TritString(vals))
    }

    pub(crate) fn from_i8s_unchecked(vals: Vec<i8>) -> Self {
        debug_assert!(vals.iter().all(|v| (-1..=1).contains(v)));
        TritString(vals)
    }

    /// Length in trits.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty string.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Trit at a position.
    pub fn get(&self, i: usize) -> Option<Trit> {
        self.0.get(i).map(|&v| Trit(v))
    }

    /// Append a trit.
    pub fn push(&mut self, t: Trit) {
        self.0.push(t.value());
    }

    /// Raw signed view; every entry is in {-1, 0, 1}.
    pub fn as_i8s(&self) -> &[i8] {
        &self.0
    }

    /// Iterate over trits.
    pub fn iter(&self) -> impl Iterator<Item = Trit> + '_ {
        self.0.iter().map(|&v| Trit(v))
    }
}

impl FromStr for TritString {
    type Err = Curl27Error;

    /// Parse the comma-separated decimal format, e.g. "-1,1,0,1,1,0".
    /// Whitespace around tokens is ignored; an empty string parses to the
    /// empty trit string.
    fn from_str(s: &str) -> Result<Self, Curl27Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(TritString::new());
        }
        let mut out = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            match tok {
                "0" => out.push(0),
                "1" => out.push(1),
                "-1" => out.push(-1),
                other => return Err(Curl27Error::InvalidToken(other.to_string())),
            }
        }
        Ok(TritString(out))
    }
}

impl fmt::Display for TritString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trit_validation() {
        assert!(Trit::new(1).is_ok());
        assert!(Trit::new(-1).is_ok());
        assert_eq!(Trit::new(2), Err(Curl27Error::InvalidTrit(2)));
        assert_eq!(Trit::from_residue(2), Trit::MINUS);
        assert_eq!(Trit::from_residue(4), Trit::PLUS);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let s = "-1,1,0,1,1,0";
        let t: TritString = s.parse().unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.to_string(), s);
        assert_eq!("".parse::<TritString>().unwrap(), TritString::new());
        assert!(" 1, x ".parse::<TritString>().is_err());
    }

    #[test]
    fn from_i8s_validates() {
        assert!(TritString::from_i8s(vec![0, 1, -1]).is_ok());
        assert_eq!(
            TritString::from_i8s(vec![0, 3]),
            Err(Curl27Error::InvalidTrit(3))
        );
    }
}
